"""Verification suite for the catalogued cases.

Exact checks reduce an identity to a polynomial that must vanish and keep
the full residual when it does not. Numeric checks are confined to the
orthogonality integrals and Γ.
"""

import logging
import math
from collections.abc import Callable, Iterable, Sequence
from fractions import Fraction

from multilag.config import ORTHOGONALITY_TOL, QUADRATURE_NODES
from multilag.core.gpoly import GPoly
from multilag.core.poly import Poly
from multilag.core.rational_function import RationalFunction
from multilag.core.resultant import discriminant
from multilag.core.roots import count_real_roots
from multilag.errors import MultilagError, NoPrepotential, NotSquareIntegrable, UnsupportedCase
from multilag.models.case import CaseSpec, EtaODE, PolynomialODE
from multilag.models.results import (
    GlobalSolution,
    PositivityReport,
    QuadratureResult,
    ResidualReport,
    VerificationEntry,
    VerificationReport,
)
from multilag.models.seeds import SeedKind, SeedSpec
from multilag.services import darboux
from multilag.services.potential import Potential, deformed_potential
from multilag.services.quadrature import integrate_rational
from multilag.services.quasifunc import HALF, QuasiFunction, seed_solution, wronskian

logger = logging.getLogger(__name__)

SHAPE_SHIFT = 4  # energy step between a shape-invariant potential and its partner


def _stack(polys: Iterable[Poly]) -> Poly:
    """Coefficient blocks of several polynomials in one; zero iff all are zero."""
    polys = list(polys)
    stride = max((p.degree for p in polys), default=0) + 1
    total = Poly.zero()
    for i, p in enumerate(polys):
        total = total + p.shift_degree(i * stride)
    return total


def _flatten(gp: GPoly) -> Poly:
    return _stack(gp.coeffs)


def _proportionality_residual(a: Poly, b: Poly) -> Poly:
    """lc(b)·a - lc(a)·b, zero iff a and b are proportional."""
    if not a or not b:
        return a + b
    return a * b.leading - b * a.leading


# ---- Wronskians and discriminants --------------------------------------


def check_wronskian(case: CaseSpec) -> ResidualReport:
    """Seed Wronskian at the case coupling is proportional to the catalogued one."""
    w = darboux.case_wronskian(case)
    ref = case.wronskian
    if w.expo != ref.expo or w.power_value != ref.power:
        residual = Poly([w.expo - ref.expo, w.power_value - ref.power])
    else:
        residual = _proportionality_residual(w.eta_poly, ref.poly())
    return ResidualReport(identity="wronskian", case=case.name, residual=residual)


def wronskian_constant(case: CaseSpec) -> Fraction | None:
    """Exact c with W(seeds) = c · catalogued W, or None."""
    return darboux.case_wronskian(case).eta_poly.ratio_to(case.wronskian.poly())


def check_generic_wronskian(case: CaseSpec) -> ResidualReport:
    """Symbolic Wronskian equals prefactor(g) · displayed polynomial."""
    if case.generic is None:
        raise UnsupportedCase(case.name, "generic Wronskian")
    w = darboux.symbolic_wronskian(case)
    gen = case.generic
    if w.power != gen.power:
        residual = w.power - gen.power
    else:
        residual = _flatten(w.poly - gen.poly.scale(gen.prefactor))
    return ResidualReport(identity="generic_wronskian", case=case.name, residual=residual)


def check_discriminant(case: CaseSpec) -> ResidualReport:
    """Discriminant in η of the displayed polynomial against its displayed factored form."""
    if case.generic is None:
        raise UnsupportedCase(case.name, "discriminant")
    computed = discriminant(case.generic.poly)
    ref = case.generic.discriminant
    if case.generic.discriminant_exact:
        residual = computed - ref
    else:
        residual = _proportionality_residual(computed, ref)
    return ResidualReport(identity="discriminant", case=case.name, residual=residual)


def check_singularities(case: CaseSpec) -> VerificationEntry:
    """m = 3 with ρ = (-2, 3) at the cubic root, m = 1 with ρ = (-1, 2) elsewhere."""
    w = darboux.case_wronskian(case)
    cubic = darboux.singularity_exponents(w, case.cubic_root)
    problems = []
    if cubic.multiplicity != 3 or cubic.exponents != ("-2", "3"):
        problems.append(f"η0={case.cubic_root}: m={cubic.multiplicity}, ρ={cubic.exponents}")
    for report in darboux.wronskian_singularities(w):
        if report.eta0 == case.cubic_root:
            continue
        if report.multiplicity != 1 or report.exponents != ("-1", "2"):
            problems.append(f"{report.factor.format()}: m={report.multiplicity}, ρ={report.exponents}")
    return VerificationEntry(
        identity="exponents",
        case=case.name,
        passed=not problems,
        detail="; ".join(problems) or f"m=3 at η0={case.cubic_root}, simple elsewhere",
    )


# ---- potentials ---------------------------------------------------------


def check_potential(case: CaseSpec) -> ResidualReport:
    computed = darboux.case_potential(case).rational
    residual = (computed - case.potential.rational()).num
    return ResidualReport(identity="potential", case=case.name, residual=residual)


def schrodinger_residual(
    potential: RationalFunction, phi: GlobalSolution | QuasiFunction, energy: Fraction
) -> RationalFunction:
    """(-φ'' + (U - E)φ) · e^{-cη/2} x^{2-p} for φ = e^{cη/2} x^p F(η)."""
    if isinstance(phi, GlobalSolution):
        c, p, F = -1, phi.x_power, phi.as_rational()
    else:
        c, p, F = phi.expo, phi.power_value, RationalFunction.from_poly(phi.eta_poly)
    eta = RationalFunction.eta()
    G = (eta * c + p) * F + eta * F.derivative() * 2
    H = (eta * c + (p - 1)) * G + eta * G.derivative() * 2
    return -H + eta * (potential - energy) * F


def check_schrodinger(
    potential: Potential | RationalFunction,
    phi: GlobalSolution | QuasiFunction,
    energy: Fraction | int,
    *,
    case: str = "",
    indices: tuple[int, ...] = (),
) -> ResidualReport:
    """-φ'' + (U - E)φ = 0 with all denominators and prefactors cleared."""
    rational = potential.rational if isinstance(potential, Potential) else potential
    residual = schrodinger_residual(rational, phi, Fraction(energy))
    return ResidualReport(identity="schrodinger", case=case, indices=indices, residual=residual.num)


# ---- differential equations --------------------------------------------


def eta_ode_for(case: CaseSpec) -> EtaODE:
    return case.eta_ode if case.eta_ode is not None else darboux.derive_eta_ode(case)


def polynomial_ode_for(case: CaseSpec) -> PolynomialODE:
    return case.polynomial_ode if case.polynomial_ode is not None else darboux.derive_polynomial_ode(case)


def check_eta_ode(case: CaseSpec, n: int, solution: GlobalSolution | None = None) -> ResidualReport:
    """η y'' + (β - η) y' + (V + n) y = 0 for y = 𝓛_n / denominator."""
    solution = solution or darboux.transformed_solution(case, n)
    ode = eta_ode_for(case)
    y = RationalFunction(solution.numerator, solution.denominator)
    eta = RationalFunction.eta()
    dy = y.derivative()
    res = eta * dy.derivative() + (ode.beta - eta) * dy + (ode.V + n) * y
    return ResidualReport(identity="eta_ode", case=case.name, indices=(n,), residual=res.num)


def check_polynomial_ode(case: CaseSpec, n: int, solution: GlobalSolution | None = None) -> ResidualReport:
    """p2 𝓛'' + p1 𝓛' + (p0 + n pn) 𝓛 = 0."""
    solution = solution or darboux.transformed_solution(case, n)
    p2, p1, p0, pn = polynomial_ode_for(case).coefficients()
    L = solution.numerator
    residual = p2 * L.derivative(2) + p1 * L.derivative() + (p0 + pn * n) * L
    return ResidualReport(identity="polynomial_ode", case=case.name, indices=(n,), residual=residual)


def check_eta_ode_derivation(case: CaseSpec) -> ResidualReport:
    """The η-equation derived from the potential equals the displayed one."""
    if case.eta_ode is None:
        raise UnsupportedCase(case.name, "displayed η-equation")
    derived = darboux.derive_eta_ode(case)
    if derived.beta != case.eta_ode.beta:
        residual = Poly.constant(derived.beta - case.eta_ode.beta)
    else:
        residual = (derived.V - case.eta_ode.V).num
    return ResidualReport(identity="eta_ode_derivation", case=case.name, residual=residual)


def check_polynomial_ode_derivation(case: CaseSpec) -> ResidualReport:
    """The polynomial equation derived from the η-equation equals the displayed one."""
    if case.polynomial_ode is None:
        raise UnsupportedCase(case.name, "displayed polynomial equation")
    derived = darboux.derive_polynomial_ode(case).coefficients()
    printed = case.polynomial_ode.coefficients()
    residual = _stack(d - p for d, p in zip(derived, printed))
    return ResidualReport(identity="polynomial_ode_derivation", case=case.name, residual=residual)


# ---- family members -----------------------------------------------------


def check_direct(case: CaseSpec, n: int, solution: GlobalSolution | None = None) -> ResidualReport:
    """Wronskian quotient against the closed form (or the displayed extra member)."""
    solution = solution or darboux.transformed_solution(case, n)
    if solution.extra:
        reference = case.family.extra(n).polynomial
    else:
        reference = darboux.direct_polynomial(case, n)
    return ResidualReport(
        identity="direct_formula", case=case.name, indices=(n,), residual=solution.numerator - reference
    )


def check_printed_member(case: CaseSpec, n: int, solution: GlobalSolution | None = None) -> ResidualReport:
    family = case.family
    if family is None or n not in family.lower_members:
        raise UnsupportedCase(case.name, f"displayed member n={n}")
    solution = solution or darboux.transformed_solution(case, n)
    residual = solution.numerator - family.lower_members[n]
    return ResidualReport(identity="displayed_member", case=case.name, indices=(n,), residual=residual)


def check_member(case: CaseSpec, n: int, solution: GlobalSolution | None = None) -> VerificationEntry:
    """Degree law, coprime numerator and the one-power cancellation at the cubic root."""
    solution = solution or darboux.transformed_solution(case, n)
    problems = []
    if not solution.extra and solution.numerator.degree != n + case.family.degree_offset:
        problems.append(f"degree {solution.numerator.degree} != {n} + {case.family.degree_offset}")
    if solution.raw_denominator != solution.denominator.monic():
        problems.append(f"reduced denominator {solution.raw_denominator.format()}")
    for factor, mult, order in darboux.member_exponents(solution):
        if order != -mult:
            problems.append(f"order {order} at {factor.format()}, expected {-mult}")
    return VerificationEntry(
        identity="member_structure",
        case=case.name,
        indices=[n],
        passed=not problems,
        detail="; ".join(problems) or f"degree {solution.numerator.degree}, poles of the denominator kept",
    )


def check_groundstate(case: CaseSpec) -> ResidualReport:
    """The n = 0 member is proportional to the displayed groundstate polynomial."""
    if case.groundstate is None:
        raise UnsupportedCase(case.name, "displayed groundstate")
    solution = darboux.transformed_solution(case, 0)
    residual = _proportionality_residual(solution.numerator, case.groundstate)
    return ResidualReport(identity="groundstate", case=case.name, indices=(0,), residual=residual)


def check_identical_systems(first: CaseSpec, second: CaseSpec, n: int) -> ResidualReport:
    """Members of two cases agree up to a constant (same prefactor and denominator)."""
    a = darboux.transformed_solution(first, n)
    b = darboux.transformed_solution(second, n)
    if a.eta_power != b.eta_power or a.denominator.monic() != b.denominator.monic():
        residual = Poly([a.eta_power - b.eta_power, 1])
    else:
        residual = _proportionality_residual(a.numerator, b.numerator)
    return ResidualReport(
        identity=f"identical_to_{second.name}", case=first.name, indices=(n,), residual=residual
    )


def check_reflected_wronskian(case: CaseSpec, mirror: CaseSpec) -> ResidualReport:
    """Symbolic Wronskian of `case` is that of `mirror` with η -> -η."""
    a = darboux.symbolic_wronskian(case)
    b = darboux.symbolic_wronskian(mirror)
    if a.power != b.power or a.expo != b.expo:
        residual = _stack([a.power - b.power, Poly.constant(a.expo - b.expo)])
    else:
        residual = _flatten(a.poly - b.poly.reflect())
    return ResidualReport(identity=f"reflection_of_{mirror.name}", case=case.name, residual=residual)


def check_seed_reflection(v: int) -> ResidualReport:
    """φ̃^I_v(x; g) = φ̃^III_v(x; 1 - g) with g symbolic."""
    first = seed_solution(SeedSpec(kind=SeedKind.I, v=v))
    third = seed_solution(SeedSpec(kind=SeedKind.III, v=v))
    flip = Poly([1, -1])
    power = third.power(flip)
    poly = GPoly([c(flip) for c in third.poly.coeffs])
    if first.expo != third.expo or first.power != power:
        residual = _stack([first.power - power, Poly.constant(first.expo - third.expo)])
    else:
        residual = _flatten(first.poly - poly)
    return ResidualReport(identity="seed_reflection", case="", indices=(v,), residual=residual)


def check_wronskian_factorization() -> ResidualReport:
    """W[φ̃^III_1, φ̃^I_2] at g = 3/4 is (φ̃^I_1 at g = 1/4)² · W[1, x^{1/2}(15 + 4η)] up to a constant."""
    g = Fraction(3, 4)
    seeds = [SeedSpec(kind=SeedKind.III, v=1, g=g), SeedSpec(kind=SeedKind.I, v=2, g=g)]
    lhs = wronskian([seed_solution(s) for s in seeds])
    base = seed_solution(SeedSpec(kind=SeedKind.I, v=1, g=1 - g))
    quotient = QuasiFunction(0, HALF, Poly([15, 4]))
    rhs = base * base * wronskian([QuasiFunction(0, 0, Poly.one()), quotient])
    if lhs.expo != rhs.expo or lhs.power_value != rhs.power_value:
        residual = Poly([lhs.power_value - rhs.power_value, lhs.expo - rhs.expo])
    else:
        residual = _proportionality_residual(lhs.eta_poly, rhs.eta_poly)
    ratio = lhs.eta_poly.ratio_to(rhs.eta_poly)
    logger.debug("factorized Wronskian: constant %s", ratio)
    return ResidualReport(identity="wronskian_factorization", case="A", indices=(), residual=residual)


# ---- factorization ------------------------------------------------------


def _prepotential_r(case: CaseSpec) -> RationalFunction:
    """R = x·w' = -η + x_power + 2η(N'/N - D'/D) as a function of η."""
    if case.prepotential is None:
        raise NoPrepotential(case.name)
    pre = case.prepotential
    N = RationalFunction.from_poly(pre.numerator)
    D = RationalFunction.from_poly(pre.denominator)
    eta = RationalFunction.eta()
    return -eta + pre.x_power + eta * (N.derivative() / N - D.derivative() / D) * 2


def prepotential_potential(case: CaseSpec) -> RationalFunction:
    """(w')² + w'' + shift with w' = R/x, so (w')² + w'' = (R² - R)/η + 2R'."""
    R = _prepotential_r(case)
    eta = RationalFunction.eta()
    return (R * R - R) / eta + R.derivative() * 2 + case.prepotential.shift


def partner_potential(case: CaseSpec) -> RationalFunction:
    """(w')² - w'' + shift, the potential after removing the groundstate."""
    R = _prepotential_r(case)
    eta = RationalFunction.eta()
    return (R * R + R) / eta - R.derivative() * 2 + case.prepotential.shift


def check_prepotential(case: CaseSpec) -> ResidualReport:
    residual = (prepotential_potential(case) - darboux.case_potential(case).rational).num
    return ResidualReport(identity="prepotential", case=case.name, residual=residual)


def check_partner_potential(case: CaseSpec, partner_case: CaseSpec | None = None) -> ResidualReport:
    """Partner of `case` against the displayed partner of `partner_case` (default: itself).

    The displayed partner must also be the potential deformed by its own
    single seed; a mismatch there is reported in the same residual.
    """
    target = (partner_case or case).partner
    if target is None:
        raise UnsupportedCase((partner_case or case).name, "partner potential")
    displayed = target.potential.rational()
    computed = partner_potential(case)
    seeded = deformed_potential(case.g, target.seeds).rational
    residual = _stack([(computed - displayed).num, (seeded - displayed).num])
    name = "partner_potential" if partner_case is None else f"partner_potential_vs_{partner_case.name}"
    return ResidualReport(identity=name, case=case.name, residual=residual)


def check_shape_invariance(case: CaseSpec) -> ResidualReport:
    """Partner equals the same seeds' potential at g + 1 shifted by 4.

    The report expects the identity to fail for the cases catalogued as not
    shape invariant.
    """
    if case.shape_invariant is None:
        raise UnsupportedCase(case.name, "shape invariance")
    shifted = deformed_potential(case.g + 1, case.seeds).rational + SHAPE_SHIFT
    residual = (partner_potential(case) - shifted).num
    return ResidualReport(
        identity="shape_invariance", case=case.name, residual=residual, expect_zero=case.shape_invariant
    )


def check_shape_partner(case: CaseSpec) -> ResidualReport:
    if case.shape_partner is None:
        raise UnsupportedCase(case.name, "displayed shape partner")
    residual = (partner_potential(case) - case.shape_partner.rational()).num
    return ResidualReport(identity="shape_partner", case=case.name, residual=residual)


# ---- weights and norms --------------------------------------------------


def check_weight_positivity(case: CaseSpec) -> PositivityReport:
    """Sturm count of denominator roots on (0, inf) plus its sign at 0."""
    if not case.square_integrable or case.weight is None:
        raise UnsupportedCase(case.name, "weight positivity")
    den = case.weight.denominator
    return PositivityReport(
        case=case.name,
        factor=den,
        roots_on_half_line=count_real_roots(den, 0, None),
        value_at_zero=den(Fraction(0)),
    )


def check_norm_formula(case: CaseSpec, n: int) -> ResidualReport:
    """measure·∏(4n - Ẽ_j)/scale² and the Γ argument against the displayed norm."""
    if case.norm_formula is None:
        raise UnsupportedCase(case.name, "norm formula")
    record = darboux.predicted_norm(case, n)
    nf = case.norm_formula
    rational = record.measure_factor * record.rational_factor / record.scale**2
    residual = Poly([rational - nf.rational_factor(n), record.gamma_argument - (n + nf.gamma_shift)])
    numeric_error = None
    if record.value is not None:
        displayed = darboux.formula_norm(case, n)
        numeric_error = abs(record.value - displayed) / max(1.0, abs(displayed))
    return ResidualReport(
        identity="norm_formula", case=case.name, indices=(n,), residual=residual, numeric_error=numeric_error
    )


def exact_norm_ratio(case: CaseSpec, n: int, base: int = 0) -> Fraction:
    """h_n / h_base as an exact rational (the Γ values differ by a Pochhammer factor)."""
    a = darboux.predicted_norm(case, n)
    b = darboux.predicted_norm(case, base)
    ratio = (a.rational_factor / a.scale**2) / (b.rational_factor / b.scale**2)
    step = a.gamma_argument - b.gamma_argument
    for k in range(int(step)):
        ratio *= b.gamma_argument + k
    return ratio * math.factorial(base) / math.factorial(n)


def _integral(case: CaseSpec, a: GlobalSolution, b: GlobalSolution, nodes: int):
    weight = case.weight
    return integrate_rational(
        a.numerator * b.numerator * weight.measure_factor, weight.denominator, weight.eta_exponent, nodes
    )


def orthogonality(
    case: CaseSpec,
    n: int,
    m: int,
    tol: float = ORTHOGONALITY_TOL,
    nodes: int = QUADRATURE_NODES,
    solutions: dict[int, GlobalSolution] | None = None,
) -> QuadratureResult:
    """∫₀^∞ weight·𝓛_n·𝓛_m dη against h_n δ_nm.

    Without a closed-form norm the diagonal is compared with itself and the
    off-diagonal is scaled by the quadrature norms.
    """
    if not case.square_integrable or case.weight is None:
        raise NotSquareIntegrable(case.name)
    cache = solutions if solutions is not None else {}
    for k in (n, m):
        if k not in cache:
            cache[k] = darboux.transformed_solution(case, k)
    estimate = _integral(case, cache[n], cache[m], nodes)
    norms = [_norm_value(case, k, cache, nodes) for k in (n, m)]
    if n != m:
        expected = 0.0
    else:
        expected = norms[0]
    return QuadratureResult(
        case=case.name,
        indices=(n, m),
        value=estimate.value,
        estimated_error=estimate.estimated_error,
        nodes_used=estimate.nodes_used,
        tail_bound=estimate.tail_bound,
        expected=expected,
        norm_scale=max(norms),
        tolerance=tol,
    )


def _norm_value(case: CaseSpec, n: int, cache: dict[int, GlobalSolution], nodes: int) -> float:
    if case.crum_norm:
        record = darboux.predicted_norm(case, n)
        if record.closed_form:
            return record.value
    return _integral(case, cache[n], cache[n], nodes).value


def quadrature_norm(case: CaseSpec, n: int, nodes: int = QUADRATURE_NODES) -> float:
    """∫ weight·𝓛_n² dη; the only source of norms for members without a closed form."""
    solution = darboux.transformed_solution(case, n)
    return _integral(case, solution, solution, nodes).value


# ---- suite --------------------------------------------------------------


def _from_residual(report: ResidualReport) -> VerificationEntry:
    if report.passed:
        detail = "residual 0" if report.exact else "identity fails as expected"
    else:
        detail = f"residual {report.residual.format()}" if report.expect_zero else "identity unexpectedly holds"
    return VerificationEntry(
        identity=report.identity,
        case=report.case,
        indices=list(report.indices),
        kind="exact",
        passed=report.passed,
        detail=detail,
        error=report.numeric_error,
    )


def _from_quadrature(result: QuadratureResult) -> list[VerificationEntry]:
    n, m = result.indices
    return [
        VerificationEntry(
            identity="orthogonality" if n != m else "norm",
            case=result.case,
            indices=[n, m],
            kind="numeric",
            passed=result.within_tolerance and result.tail_ok,
            detail=f"value {result.value:.12g}, expected {result.expected:.12g}, tail {result.tail_bound:.2g}",
            error=result.relative_error,
        ),
        VerificationEntry(
            identity="quadrature_stability",
            case=result.case,
            indices=[n, m],
            kind="numeric",
            passed=result.stable,
            detail=f"node doubling changes the value by {result.estimated_error:.3g}",
            error=result.estimated_error / max(1.0, result.norm_scale),
        ),
    ]


def _from_positivity(report: PositivityReport) -> VerificationEntry:
    return VerificationEntry(
        identity="weight_positivity",
        case=report.case,
        kind="sturm",
        passed=report.passed,
        detail=f"{report.roots_on_half_line} roots on (0, inf), value {report.value_at_zero} at 0",
    )


class SuiteRunner:
    """Collects entries; a check that raises becomes a failed entry naming the error."""

    def __init__(self, tol: float = ORTHOGONALITY_TOL, nodes: int = QUADRATURE_NODES):
        self.tol = tol
        self.nodes = nodes
        self.entries: list[VerificationEntry] = []

    def run(self, identity: str, case: str, indices: Sequence[int], check: Callable[[], object]) -> None:
        try:
            result = check()
        except (MultilagError, ArithmeticError, ValueError) as e:
            self.fail(identity, case, indices, e)
            return
        if isinstance(result, ResidualReport):
            self.entries.append(_from_residual(result))
        elif isinstance(result, QuadratureResult):
            self.entries.extend(_from_quadrature(result))
        elif isinstance(result, PositivityReport):
            self.entries.append(_from_positivity(result))
        elif isinstance(result, VerificationEntry):
            self.entries.append(result)
        else:
            self.entries.extend(result)

    def fail(self, identity: str, case: str, indices: Sequence[int], error: Exception) -> None:
        logger.warning("(%s) %s %s failed: %s", case, identity, list(indices), error)
        self.entries.append(
            VerificationEntry(
                identity=identity,
                case=case,
                indices=list(indices),
                passed=False,
                detail=f"{type(error).__name__}: {error}",
            )
        )

    def report(self) -> VerificationReport:
        return VerificationReport(entries=list(self.entries))


def member_indices(case: CaseSpec) -> list[int]:
    """Extra members plus n = 0..5 (closed-form families) or n = 0..3."""
    family = case.family
    top = 5 if family.direct is not None else 3
    return list(family.extra_indices) + [n for n in range(top + 1) if n not in family.missing]


def _verify_members(runner: SuiteRunner, case: CaseSpec, solutions: dict[int, GlobalSolution]) -> None:
    potential = darboux.case_potential(case)
    for n in member_indices(case):
        try:
            solutions[n] = darboux.transformed_solution(case, n)
        except (MultilagError, ArithmeticError, ValueError) as e:
            runner.fail("transformed_solution", case.name, [n], e)
            continue
        sol = solutions[n]
        runner.run(
            "schrodinger",
            case.name,
            [n],
            lambda sol=sol: check_schrodinger(potential, sol, sol.energy, case=case.name, indices=(sol.n,)),
        )
        runner.run("eta_ode", case.name, [n], lambda n=n, sol=sol: check_eta_ode(case, n, sol))
        runner.run("polynomial_ode", case.name, [n], lambda n=n, sol=sol: check_polynomial_ode(case, n, sol))
        runner.run("member_structure", case.name, [n], lambda n=n, sol=sol: check_member(case, n, sol))
        if case.family.direct is not None or sol.extra:
            runner.run("direct_formula", case.name, [n], lambda n=n, sol=sol: check_direct(case, n, sol))
        if n in case.family.lower_members:
            runner.run("displayed_member", case.name, [n], lambda n=n, sol=sol: check_printed_member(case, n, sol))


def _verify_norms(runner: SuiteRunner, case: CaseSpec, solutions: dict[int, GlobalSolution]) -> None:
    runner.run("weight_positivity", case.name, [], lambda: check_weight_positivity(case))
    indices = [n for n in member_indices(case) if n <= 3 and n in solutions]
    if case.norm_formula is not None:
        for n in indices:
            if n >= 0:
                runner.run("norm_formula", case.name, [n], lambda n=n: check_norm_formula(case, n))
    for i, n in enumerate(indices):
        for m in indices[i:]:
            runner.run(
                "orthogonality",
                case.name,
                [n, m],
                lambda n=n, m=m: orthogonality(case, n, m, runner.tol, runner.nodes, solutions),
            )
    if case.crum_norm and 0 in indices:
        for n in indices:
            if n > 0:
                runner.run("norm_ratio", case.name, [n], lambda n=n: _norm_ratio_entry(case, n, runner))


def _norm_ratio_entry(case: CaseSpec, n: int, runner: SuiteRunner) -> VerificationEntry:
    exact = float(exact_norm_ratio(case, n))
    numeric = quadrature_norm(case, n, runner.nodes) / quadrature_norm(case, 0, runner.nodes)
    error = abs(numeric - exact) / abs(exact)
    return VerificationEntry(
        identity="norm_ratio",
        case=case.name,
        indices=[n, 0],
        kind="numeric",
        passed=error <= runner.tol,
        detail=f"quadrature {numeric:.12g}, exact {exact:.12g}",
        error=error,
    )


def verify_case(runner: SuiteRunner, case: CaseSpec, catalog: dict[str, CaseSpec] | None = None) -> None:
    """Every applicable check for one case."""
    name = case.name
    runner.run("wronskian", name, [], lambda: check_wronskian(case))
    if case.generic is not None:
        runner.run("generic_wronskian", name, [], lambda: check_generic_wronskian(case))
        runner.run("discriminant", name, [], lambda: check_discriminant(case))
    runner.run("exponents", name, [], lambda: check_singularities(case))
    runner.run("potential", name, [], lambda: check_potential(case))
    if case.eta_ode is not None:
        runner.run("eta_ode_derivation", name, [], lambda: check_eta_ode_derivation(case))
    if case.polynomial_ode is not None:
        runner.run("polynomial_ode_derivation", name, [], lambda: check_polynomial_ode_derivation(case))
    if case.prepotential is not None:
        runner.run("prepotential", name, [], lambda: check_prepotential(case))
    if case.partner is not None:
        runner.run("partner_potential", name, [], lambda: check_partner_potential(case))
    if case.shape_invariant is not None and case.prepotential is not None:
        runner.run("shape_invariance", name, [], lambda: check_shape_invariance(case))
    if case.shape_partner is not None:
        runner.run("shape_partner", name, [], lambda: check_shape_partner(case))
    if case.groundstate is not None:
        runner.run("groundstate", name, [0], lambda: check_groundstate(case))
    if case.family is not None:
        solutions: dict[int, GlobalSolution] = {}
        _verify_members(runner, case, solutions)
        if case.square_integrable and case.weight is not None:
            _verify_norms(runner, case, solutions)
    for other in (catalog or {}).values():
        if other is not case and _same_family(case, other) and case.name < other.name:
            for n in range(3):
                runner.run(
                    f"identical_to_{other.name}", name, [n], lambda n=n, o=other: check_identical_systems(case, o, n)
                )
        if other is not case and _mirrored(case, other):
            runner.run(f"reflection_of_{other.name}", name, [], lambda o=other: check_reflected_wronskian(case, o))


def _same_family(a: CaseSpec, b: CaseSpec) -> bool:
    """Distinct seeds generating the same potential."""
    if a.family is None or b.family is None:
        return False
    return a.seeds != b.seeds and a.potential == b.potential


def _mirrored(a: CaseSpec, b: CaseSpec) -> bool:
    """Same coupling with seeds of the same kinds and swapped degrees: W(η) <-> W(-η)."""
    if a.g != b.g or len(a.seeds) != len(b.seeds) or a.name < b.name:
        return False
    kinds_a = [s.kind for s in a.seeds]
    kinds_b = [s.kind for s in b.seeds]
    return kinds_a == kinds_b and [s.v for s in a.seeds] == [s.v for s in reversed(b.seeds)]


def run_suite(
    cases: Iterable[CaseSpec],
    tol: float = ORTHOGONALITY_TOL,
    nodes: int = QUADRATURE_NODES,
    catalog: dict[str, CaseSpec] | None = None,
) -> VerificationReport:
    """Run every check for the given cases; `catalog` enables the cross-case identities."""
    runner = SuiteRunner(tol=tol, nodes=nodes)
    for v in (1, 2, 3):
        runner.run("seed_reflection", "", [v], lambda v=v: check_seed_reflection(v))
    runner.run("wronskian_factorization", "A", [], check_wronskian_factorization)
    for case in cases:
        logger.info("verifying case (%s)", case.name)
        verify_case(runner, case, catalog)
    report = runner.report()
    logger.info("%d checks, %d failed", len(report.entries), len(report.failures))
    return report

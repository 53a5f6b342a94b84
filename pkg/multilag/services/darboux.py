"""Darboux-Crum transformations of the radial oscillator.

The transformed eigenfunctions are Wronskian quotients

    φ_n^{new} = W[φ̃_1, ..., φ̃_M, φ_n] / W[φ̃_1, ..., φ̃_M],

reduced to the catalogued form e^{-η/2} η^a 𝓛_n(η) / denominator. The
extra members below the gap come from deleting one seed instead of adding
an eigenfunction.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from multilag.core.poly import Poly
from multilag.core.rational import RationalLike, format_rational, to_rational
from multilag.core.rational_function import RationalFunction
from multilag.core.roots import factor_rational, linear_factor, root_multiplicity
from multilag.errors import (
    DivisionError,
    IndexMissing,
    NotSquareIntegrable,
    UnsupportedCase,
)
from multilag.models.case import CaseSpec, EtaODE, FamilyData, PolynomialODE
from multilag.models.results import GlobalSolution, NormRecord, SingularityReport
from multilag.models.seeds import SeedSpec
from multilag.services.potential import Potential, deformed_potential
from multilag.services.quasifunc import QuasiFunction, eigenfunction, laguerre, seed_solution, wronskian
from multilag.services.special import gamma_numeric

logger = logging.getLogger(__name__)


@lru_cache(maxsize=512)
def _wronskian(seeds: tuple[SeedSpec, ...], n: int | None = None) -> QuasiFunction:
    """Wronskian of the seeds, optionally followed by the eigenfunction φ_n."""
    functions = [seed_solution(s) for s in seeds]
    if n is not None:
        functions.append(eigenfunction(n, seeds[0].g))
    return wronskian(functions)


def case_wronskian(case: CaseSpec) -> QuasiFunction:
    """Seed Wronskian at the case coupling."""
    return _wronskian(case.seeds)


def symbolic_wronskian(case: CaseSpec) -> QuasiFunction:
    """Seed Wronskian with g kept symbolic."""
    return _wronskian(tuple(s.at(None) for s in case.seeds))


def case_potential(case: CaseSpec) -> Potential:
    return deformed_potential(case.g, case.seeds)


def _family(case: CaseSpec, operation: str) -> FamilyData:
    if case.family is None:
        raise UnsupportedCase(case.name, operation)
    return case.family


def _catalogued_form(
    case: CaseSpec,
    n: int,
    energy: Fraction,
    top: QuasiFunction,
    bottom: QuasiFunction,
    reference: Poly | None,
    extra: bool,
) -> GlobalSolution:
    """Reduce top/bottom to e^{-η/2} η^a 𝓛 / denominator and normalize 𝓛.

    With a reference polynomial 𝓛 is scaled to its leading coefficient,
    otherwise 𝓛 is made monic; `scale` records raw / normalized.
    """
    family = case.family
    if top.expo - bottom.expo != -1:
        raise ValueError(f"({case.name}) n={n}: quotient exponential is e^{{{top.expo - bottom.expo}η/2}}")
    reduced = RationalFunction(top.eta_poly, bottom.eta_poly)
    twice_k = top.power_value - bottom.power_value - 2 * family.eta_power
    if twice_k.denominator != 1 or twice_k < 0 or twice_k.numerator % 2:
        raise ValueError(f"({case.name}) n={n}: quotient x-power does not match η^{family.eta_power}")
    raw = (reduced.num * family.denominator).exact_div(reduced.den).shift_degree(twice_k.numerator // 2)
    target = reference.leading if reference is not None and reference else Fraction(1)
    scale = raw.leading / target
    logger.debug(
        "(%s) n=%d: quotient denominator degree %d -> %d, scale %s",
        case.name,
        n,
        bottom.eta_poly.degree,
        reduced.den.degree,
        scale,
    )
    return GlobalSolution(
        case=case.name,
        n=n,
        eta_power=family.eta_power,
        numerator=raw / scale,
        denominator=family.denominator,
        energy=energy,
        scale=scale,
        extra=extra,
        raw_denominator=reduced.den,
        cancelled_degree=bottom.eta_poly.degree - reduced.den.degree,
    )


def transformed_solution(case: CaseSpec, n: int) -> GlobalSolution:
    """Family member of index n (extra members included)."""
    family = _family(case, "transformed_solution")
    if n in family.missing:
        raise IndexMissing(case.name, n)
    if n < 0:
        if family.extra(n) is not None:
            return extra_member(case, n)
        raise IndexMissing(case.name, n)
    reference = direct_polynomial(case, n) if family.direct is not None else None
    return _catalogued_form(
        case,
        n,
        Fraction(4 * n),
        _wronskian(case.seeds, n),
        _wronskian(case.seeds),
        reference,
        extra=False,
    )


def deleted_seed_member(case: CaseSpec, j: int, reference: Poly | None = None) -> GlobalSolution:
    """Quotient W[seeds without j] / W[seeds] in the catalogued form, at E = Ẽ_j."""
    _family(case, "deleted_seed_member")
    deleted = case.seeds[j]
    energy = deleted.energy_value()
    if energy.denominator != 1 or energy.numerator % 4:
        raise ValueError(f"({case.name}) seed {deleted.label} has energy {energy}, not of the form 4n")
    remaining = tuple(s for i, s in enumerate(case.seeds) if i != j)
    return _catalogued_form(
        case, int(energy) // 4, energy, _wronskian(remaining), _wronskian(case.seeds), reference, extra=True
    )


def extra_member(case: CaseSpec, n: int) -> GlobalSolution:
    """Catalogued extra member of index n, normalized to the displayed polynomial."""
    family = _family(case, "extra_member")
    member = family.extra(n)
    if member is None:
        raise IndexMissing(case.name, n)
    solution = deleted_seed_member(case, member.deleted_seed, member.polynomial)
    if solution.n != n:
        raise ValueError(f"({case.name}) deleted seed gives E = {solution.energy}, not 4n = {4 * n}")
    return solution


def extra_degrees(case: CaseSpec) -> list[int]:
    """Indices n < 0 whose deleted-seed quotient has the family form."""
    _family(case, "extra_degrees")
    found = []
    for j, seed in enumerate(case.seeds):
        energy = seed.energy_value()
        if energy >= 0 or energy.denominator != 1 or energy.numerator % 4:
            continue
        try:
            found.append(deleted_seed_member(case, j).n)
        except (ValueError, ArithmeticError) as e:
            logger.debug("(%s) deleting %s: %s", case.name, seed.label, e)
    return sorted(found)


def family_indices(case: CaseSpec, lo: int, hi: int) -> list[int]:
    """Valid indices in [lo, hi]: extra members and n >= 0, minus the gaps."""
    family = _family(case, "family_indices")
    return [
        n
        for n in range(lo, hi + 1)
        if n not in family.missing and (n >= 0 or family.extra(n) is not None)
    ]


def direct_polynomial(case: CaseSpec, n: int) -> Poly:
    """𝓛_n = (a0 + n·a1)·L_n^{(α)} + b·L_n^{(α)}' from the closed form."""
    family = _family(case, "direct_polynomial")
    if family.direct is None:
        raise UnsupportedCase(case.name, "direct_polynomial")
    if n < 0:
        raise ValueError(f"direct formula needs n >= 0, got {n}")
    d = family.direct
    lag = laguerre(n, d.alpha)
    return (d.a0 + d.a1 * n) * lag + d.b * lag.derivative()


# ---- singularities -------------------------------------------------------


def _exponent_report(multiplicity: int, factor: Poly, eta0: Fraction | None) -> SingularityReport:
    disc = 1 + 8 * multiplicity
    root = isqrt(disc)
    if root * root == disc:
        exponents = (format_rational(Fraction(1 - root, 2)), format_rational(Fraction(1 + root, 2)))
        trivial = True
    else:
        exponents = (f"(1-√{disc})/2", f"(1+√{disc})/2")
        trivial = False
    return SingularityReport(
        eta0=eta0, factor=factor, multiplicity=multiplicity, exponents=exponents, trivial_monodromy=trivial
    )


def singularity_exponents(w: QuasiFunction | Poly, eta0: RationalLike) -> SingularityReport:
    """Exponents (1 ± sqrt(1+8m))/2 where the Wronskian has a zero of order m.

    Near the zero U ~ 2m/(x - x0)², so the exponents solve ρ(ρ - 1) = 2m.
    """
    poly = w.eta_poly if isinstance(w, QuasiFunction) else w
    root = to_rational(eta0)
    return _exponent_report(root_multiplicity(poly, root), linear_factor(root), root)


def wronskian_singularities(w: QuasiFunction) -> list[SingularityReport]:
    """One report per distinct factor of the polynomial part of W."""
    fact = factor_rational(w.eta_poly)
    reports = [_exponent_report(m, f, root) for root, f, m in fact.linear]
    reports.extend(_exponent_report(m, f, None) for f, m in fact.cofactors)
    return reports


def member_exponents(solution: GlobalSolution) -> list[tuple[Poly, int, int]]:
    """(factor, multiplicity in the denominator, local order of φ_n) per denominator factor.

    The order is negative at a pole; it equals minus the multiplicity when
    the numerator does not vanish there.
    """
    result = []
    for factor, mult in factor_rational(solution.denominator).factors():
        order = -mult
        rest = solution.numerator
        while rest and rest.degree >= factor.degree:
            quot, rem = divmod(rest, factor)
            if rem:
                break
            rest = quot
            order += 1
        result.append((factor, mult, order))
    return result


# ---- norms ---------------------------------------------------------------


def predicted_norm(case: CaseSpec, n: int) -> NormRecord:
    """h_n = measure · ∏_j (4n - Ẽ_j) · Γ(n + g + 1/2) / (n! · scale²).

    Extra members are returned with closed_form=False: the product has a
    vanishing factor there and their norms come from quadrature.
    """
    family = _family(case, "predicted_norm")
    if not case.square_integrable or case.weight is None:
        raise NotSquareIntegrable(case.name)
    if not case.crum_norm:
        raise UnsupportedCase(case.name, "predicted_norm")
    if n in family.missing:
        raise IndexMissing(case.name, n)
    solution = transformed_solution(case, n)
    factors = tuple(4 * n - s.energy_value() for s in case.seeds)
    rational = math.prod(factors, start=Fraction(1))
    gamma_argument = n + case.g + Fraction(1, 2)
    measure = case.weight.measure_factor
    if solution.extra:
        return NormRecord(
            case=case.name,
            n=n,
            energy_factors=factors,
            rational_factor=rational,
            gamma_argument=gamma_argument,
            measure_factor=measure,
            scale=solution.scale,
            closed_form=False,
        )
    value = float(measure * rational / solution.scale**2) * gamma_numeric(float(gamma_argument)) / math.factorial(n)
    return NormRecord(
        case=case.name,
        n=n,
        energy_factors=factors,
        rational_factor=rational,
        gamma_argument=gamma_argument,
        measure_factor=measure,
        scale=solution.scale,
        value=value,
    )


def formula_norm(case: CaseSpec, n: int) -> float:
    """Displayed closed form prefactor·∏(a n + b)·Γ(n + shift)/n!."""
    if case.norm_formula is None:
        raise UnsupportedCase(case.name, "norm formula")
    nf = case.norm_formula
    return float(nf.rational_factor(n)) * gamma_numeric(float(n + nf.gamma_shift)) / math.factorial(n)


# ---- differential equations --------------------------------------------


def groundstate_eta_power(case: CaseSpec) -> Fraction:
    return _family(case, "groundstate_eta_power").eta_power


def derive_eta_ode(case: CaseSpec) -> EtaODE:
    """ηy'' + (β - η)y' + (V + n)y = 0 for y = φ_n e^{η/2} η^{-a}.

    From φ = e^{-η/2} η^a y and -φ'' + Uφ = 4nφ one gets β = 2a + 1/2 and
    V = (a² - a/2)/η - a - 1/4 + η/4 - U/4; the 1/η terms cancel exactly
    when a is the groundstate power of the family.
    """
    a = groundstate_eta_power(case)
    potential = case_potential(case).rational
    eta = Poly.variable()
    base = RationalFunction(eta * eta * Fraction(1, 4) + eta * (-a - Fraction(1, 4)) + (a * a - a / 2), eta)
    V = base - potential * Fraction(1, 4)
    if V.den(Fraction(0)) == 0:
        raise DivisionError(V.den, f"({case.name}) η-equation keeps a pole at η = 0 for a = {a}")
    return EtaODE(beta=2 * a + Fraction(1, 2), V=V)


def derive_polynomial_ode(case: CaseSpec, ode: EtaODE | None = None) -> PolynomialODE:
    """Equation for 𝓛 after substituting y = 𝓛/D into the η-equation.

    Coefficients are cleared of denominators and scaled to a primitive
    integer set with a positive leading coefficient in front of 𝓛''.
    """
    family = _family(case, "derive_polynomial_ode")
    ode = ode or derive_eta_ode(case)
    D = RationalFunction.from_poly(family.denominator)
    dD, ddD = D.derivative(), D.derivative().derivative()
    eta = RationalFunction.eta()
    drift = eta * -1 + ode.beta
    c2 = eta
    c1 = drift - eta * dD * 2 / D
    c0 = eta * (dD * dD * 2 / (D * D) - ddD / D) - drift * dD / D + ode.V
    common = Poly.one()
    for rf in (c1, c0):
        common = common * rf.den.exact_div(common.gcd(rf.den))
    coeffs = [(rf * RationalFunction.from_poly(common)).num for rf in (c2, c1, c0)]
    coeffs.append(common)
    content = _integer_content(coeffs)
    p2, p1, p0, pn = (c / content for c in coeffs)
    return PolynomialODE(p2=p2, p1=p1, p0=p0, pn=pn)


def _integer_content(polys: list[Poly]) -> Fraction:
    """Content making the whole list primitive over Z, signed so the first leading coefficient is positive."""
    den = 1
    for p in polys:
        for c in p.coeffs:
            den = math.lcm(den, c.denominator)
    num = 0
    for p in polys:
        for c in p.coeffs:
            num = math.gcd(num, int(c * den))
    content = Fraction(num, den)
    return -content if polys[0].leading < 0 else content

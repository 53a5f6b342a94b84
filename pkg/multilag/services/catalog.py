"""Catalog of the cubic-zero cases (A)-(H).

The records hold the closed forms as displayed: Wronskians, potentials,
polynomial families, weights, norm formulas and differential equations.
Nothing here is used to build a result; the darboux and verifier services
recompute everything from the seeds and compare.
"""

from fractions import Fraction
from typing import Any

from multilag.core.gpoly import GPoly
from multilag.core.poly import Poly
from multilag.core.rational import format_rational
from multilag.core.rational_function import RationalFunction
from multilag.errors import UnknownCase
from multilag.models.case import (
    CaseSpec,
    DirectFormula,
    EtaODE,
    ExtraMember,
    FamilyData,
    GenericData,
    NormFormula,
    PartnerData,
    PolynomialODE,
    PotentialData,
    Prepotential,
    WeightData,
    WronskianData,
)
from multilag.models.seeds import SeedSpec, parse_seed

F = Fraction


def P(*coeffs: int | str) -> Poly:
    """Polynomial from ascending coefficients; strings may be "p/q"."""
    return Poly(coeffs)


G = P  # polynomials in g use the same constructor


def prod(*factors: Poly | int | str) -> Poly:
    result = Poly.one()
    for f in factors:
        result = result * (f if isinstance(f, Poly) else Poly.constant(F(f)))
    return result


def seeds(g: Fraction, *labels: str) -> tuple[SeedSpec, ...]:
    return tuple(parse_seed(label, g) for label in labels)


eta = P(0, 1)

# ---- shared factors -----------------------------------------------------

A_FACTOR = P(3, 4)  # 3 + 4η
D_FACTOR = P(-3, 4)  # -3 + 4η
E_SEXTIC = P(840, 280, 30, 1)  # 840 + 280η + 30η² + η³
G_QUAD = P(2244, 495, 25)
H_QUAD = P(390, 39, 1)

A_POTENTIAL_TERMS = ((P(48), A_FACTOR, 1), (P(-288), A_FACTOR, 2))


def _case_a() -> CaseSpec:
    g = F(3, 4)
    return CaseSpec(
        name="A",
        description="non-generic; seeds III_1, I_2; square-integrable family with a gap at n = -1",
        seeds=seeds(g, "III_1", "I_2"),
        g=g,
        kind="non-generic",
        generic=GenericData(
            prefactor=G(F(1, 16), F(1, 8)),
            power=Poly.zero(),
            poly=GPoly([G(-9, 18, 4, -8), G(18, 0, -8), G(12, 8), G(8)]),
            discriminant=prod(2048, G(-3, 2), G(3, 2) ** 2, G(-3, 4) ** 2),
        ),
        wronskian=WronskianData(constant=F(5, 256), expo=2, power=F(0), factors=((A_FACTOR, 3),)),
        cubic_root=F(-3, 4),
        potential=PotentialData(inverse_eta=F(-3, 16), constant=F(-13, 2), terms=A_POTENTIAL_TERMS),
        family=FamilyData(
            eta_power=F(3, 8),
            denominator=A_FACTOR**2,
            missing=(-1,),
            extras=(ExtraMember(n=-2, polynomial=P(15, 4), deleted_seed=0),),
            direct=DirectFormula(
                a0=P(-117, 156, 208, 64),
                a1=A_FACTOR**2 * -4,
                b=prod(-4, eta, A_FACTOR, P(15, 4)),
                alpha=F(1, 4),
            ),
            lower_members={
                1: P("-765/4", 408, 408, 0, -64),
                2: P("-8505/32", "6237/8", 567, -252, -168, 32),
            },
        ),
        square_integrable=True,
        crum_norm=True,
        weight=WeightData(eta_exponent=F(1, 4), denominator=A_FACTOR**4),
        norm_formula=NormFormula(prefactor=F(4), linear=((1, 2), (4, 13)), gamma_shift=F(5, 4)),
        prepotential=Prepotential(x_power=F(3, 4), numerator=P(15, 4), denominator=A_FACTOR**2, shift=F(-8)),
        partner=PartnerData(
            seeds=seeds(g, "I_2"),
            potential=PotentialData(
                inverse_eta=F(21, 16),
                constant=F(-9, 2),
                terms=(
                    (P(16), A_FACTOR, 1),
                    (P(-96), A_FACTOR, 2),
                    (P(16), P(15, 4), 1),
                    (P(-480), P(15, 4), 2),
                ),
            ),
        ),
        shape_invariant=False,
        eta_ode=EtaODE(beta=F(5, 4), V=RationalFunction(P(45, -24, 16), A_FACTOR**2)),
        polynomial_ode=PolynomialODE(
            p2=prod(4, eta, A_FACTOR),
            p1=-prod(P(-1, 4), P(15, 4)),
            p0=prod(4, P(5, 12)),
            pn=prod(4, A_FACTOR),
        ),
    )


def _case_b() -> CaseSpec:
    g = F(1, 4)
    return CaseSpec(
        name="B",
        description="non-generic; seeds III_2, I_1; U_B = U_A + 1, gaps at n = -2, -1",
        seeds=seeds(g, "III_2", "I_1"),
        g=g,
        kind="non-generic",
        generic=GenericData(
            prefactor=G(F(-3, 16), F(1, 8)),
            power=Poly.zero(),
            poly=GPoly([G(5, -2, -20, 8), G(10, 16, -8), G(20, -8), G(8)]),
            discriminant=prod(-2048, G(-5, 2) ** 2, G(1, 2), G(-1, 4) ** 2),
        ),
        wronskian=WronskianData(constant=F(-5, 256), expo=2, power=F(0), factors=((A_FACTOR, 3),)),
        cubic_root=F(-3, 4),
        potential=PotentialData(inverse_eta=F(-3, 16), constant=F(-11, 2), terms=A_POTENTIAL_TERMS),
        family=FamilyData(
            eta_power=F(1, 8),
            denominator=A_FACTOR**2,
            missing=(-2, -1),
            extras=(ExtraMember(n=-3, polynomial=P(1), deleted_seed=0),),
            direct=DirectFormula(
                a0=P(-63, 252, 240, 64),
                a1=A_FACTOR**2 * -4,
                b=prod(-4, eta, A_FACTOR, P(15, 4)),
                alpha=F(-1, 4),
            ),
            lower_members={
                1: P("-297/4", 396, 264, -64, -64),
                2: P("-2835/32", "4725/8", 225, -300, -120, 32),
            },
        ),
        square_integrable=True,
        crum_norm=True,
        weight=WeightData(eta_exponent=F(-1, 4), denominator=A_FACTOR**4),
        norm_formula=NormFormula(prefactor=F(4), linear=((1, 3), (4, 7)), gamma_shift=F(3, 4)),
        prepotential=Prepotential(x_power=F(1, 4), numerator=P(1), denominator=A_FACTOR**2, shift=F(-12)),
        partner=PartnerData(
            seeds=seeds(g, "I_1"),
            potential=PotentialData(
                inverse_eta=F(5, 16),
                constant=F(-7, 2),
                terms=((P(16), A_FACTOR, 1), (P(-96), A_FACTOR, 2)),
            ),
        ),
        shape_invariant=False,
        eta_ode=EtaODE(beta=F(3, 4), V=RationalFunction(P(45, -24, 16), A_FACTOR**2)),
        polynomial_ode=PolynomialODE(
            p2=prod(4, eta, A_FACTOR),
            p1=-P(-9, 64, 16),
            p0=prod(12, A_FACTOR),
            pn=prod(4, A_FACTOR),
        ),
    )


def _case_c() -> CaseSpec:
    g = F(9, 4)
    return CaseSpec(
        name="C",
        description="non-generic; seeds III_2, II_1; potential identical with (B)",
        seeds=seeds(g, "III_2", "II_1"),
        g=g,
        kind="non-generic",
        generic=GenericData(
            prefactor=G(F(1, 8)),
            power=G(3, -2),
            poly=GPoly([G(-135, 174, -68, 8), G(-54, 48, -8), G(36, -8), G(8)]),
            discriminant=prod(-2048, G(-9, 2) ** 2, G(-3, 2), G(-9, 4) ** 2),
        ),
        wronskian=WronskianData(constant=F(1, 64), expo=0, power=F(-3, 2), factors=((A_FACTOR, 3),)),
        cubic_root=F(-3, 4),
        potential=PotentialData(inverse_eta=F(-3, 16), constant=F(-11, 2), terms=A_POTENTIAL_TERMS),
        family=FamilyData(
            eta_power=F(1, 8),
            denominator=A_FACTOR**2,
            missing=(-2, -1),
            extras=(ExtraMember(n=-3, polynomial=P(1), deleted_seed=0),),
        ),
        square_integrable=True,
        weight=WeightData(eta_exponent=F(-1, 4), denominator=A_FACTOR**4),
    )


def _case_d() -> CaseSpec:
    g = F(9, 4)
    return CaseSpec(
        name="D",
        description="non-generic; seeds III_1, II_2; C reflected by η -> -η, singular inside (0, inf)",
        seeds=seeds(g, "III_1", "II_2"),
        g=g,
        kind="non-generic",
        generic=GenericData(
            prefactor=G(F(1, 8)),
            power=G(3, -2),
            poly=GPoly([G(-135, 174, -68, 8), G(54, -48, 8), G(36, -8), G(-8)]),
            discriminant=prod(-2048, G(-9, 2) ** 2, G(-3, 2), G(-9, 4) ** 2),
        ),
        wronskian=WronskianData(constant=F(-1, 64), expo=0, power=F(-3, 2), factors=((D_FACTOR, 3),)),
        cubic_root=F(3, 4),
        potential=PotentialData(
            inverse_eta=F(-3, 16),
            constant=F(-11, 2),
            terms=((P(48), D_FACTOR, 1), (P(288), D_FACTOR, 2)),
        ),
        family=FamilyData(
            eta_power=F(1, 8),
            denominator=D_FACTOR**2 * 4,
            missing=(-1,),
            extras=(ExtraMember(n=-2, polynomial=P(1, 4), deleted_seed=0),),
            direct=DirectFormula(
                a0=prod(A_FACTOR, P(63, 0, 16)),
                a1=prod(-16, eta, D_FACTOR**2),
                b=prod(-36, eta, D_FACTOR, P(1, 4)),
                alpha=F(7, 4),
            ),
            lower_members={
                1: P("2079/4", 0, 792, -384, 192),
                2: P("31185/32", "-10395/8", 3465, -2940, 1512, -224),
            },
        ),
        square_integrable=False,
        prepotential=Prepotential(x_power=F(1, 4), numerator=P(1, 4), denominator=D_FACTOR**2, shift=F(-8)),
        eta_ode=EtaODE(beta=F(3, 4), V=RationalFunction(-P(27, 72, -16), D_FACTOR**2)),
        polynomial_ode=PolynomialODE(
            p2=prod(4, eta, D_FACTOR),
            p1=-prod(P(1, 4), P(9, 4)),
            p0=prod(4, P(3, 12)),
            pn=prod(4, D_FACTOR),
        ),
    )


def _case_e() -> CaseSpec:
    g = F(15, 2)
    return CaseSpec(
        name="E",
        description="generic; seeds I_2, II_1; shape invariant, no gaps",
        seeds=seeds(g, "I_2", "II_1"),
        g=g,
        kind="generic",
        generic=GenericData(
            # the displayed polynomial is -W: at g = 15/2 it gives -(6+η)³(14+η)
            prefactor=G(-1),
            power=Poly.zero(),
            poly=GPoly(
                [
                    G("-9/16", 0, "5/2", 0, -1),
                    G("9/2", 9, -2, -4),
                    G("15/2", -4, -6),
                    G(-2, -4),
                    G(-1),
                ]
            ),
            discriminant=prod(-16, G(-15, 2) ** 2, G(-3, 2), G(1, 2), G(3, 2) ** 2),
        ),
        wronskian=WronskianData(constant=F(1), expo=0, power=F(0), factors=((P(6, 1), 3), (P(14, 1), 1))),
        cubic_root=F(-6),
        potential=PotentialData(
            inverse_eta=F(195, 4),
            constant=F(-16),
            terms=(
                (P(-144), P(6, 1), 2),
                (P(12), P(6, 1), 1),
                (P(-112), P(14, 1), 2),
                (P(4), P(14, 1), 1),
            ),
        ),
        family=FamilyData(
            eta_power=F(15, 4),
            denominator=P(6, 1) ** 2 * P(14, 1),
            direct=DirectFormula(
                a0=E_SEXTIC * -24,
                a1=prod(-4, P(6, 1) ** 2, P(14, 1)),
                b=prod(-16, eta, P(6, 1), P(12, 1)),
                alpha=F(7),
            ),
            lower_members={
                1: prod(28, P(-6336, -1320, 44, 22, 1)),
                2: prod(-16, P(54432, 4536, -1944, -180, 12, 1)),
            },
        ),
        square_integrable=True,
        crum_norm=True,
        weight=WeightData(eta_exponent=F(7), denominator=P(6, 1) ** 4 * P(14, 1) ** 2),
        norm_formula=NormFormula(prefactor=F(16), linear=((1, 10), (1, 6)), gamma_shift=F(8)),
        prepotential=Prepotential(
            x_power=F(15, 2), numerator=E_SEXTIC, denominator=P(6, 1) ** 2 * P(14, 1), shift=F(0)
        ),
        shape_partner=PotentialData(
            inverse_eta=F(255, 4),
            constant=F(-14),
            terms=(
                (P(-48), P(6, 1), 2),
                (P(4), P(6, 1), 1),
                (P(-403200, -112000, -7680), E_SEXTIC, 2),
                # displayed with 3x² in place of 3x⁴
                (P(-640, 0, 12), E_SEXTIC, 1),
            ),
        ),
        shape_invariant=True,
        eta_ode=EtaODE(
            beta=F(8),
            V=RationalFunction(P(1008, 12, -16, -1) * 4, P(6, 1) ** 2 * P(14, 1) ** 2),
        ),
        polynomial_ode=PolynomialODE(
            p2=prod(eta, P(6, 1), P(14, 1)),
            p1=-P(-672, -8, 18, 1),
            p0=P(-224, 18, 3),
            pn=prod(P(6, 1), P(14, 1)),
        ),
    )


def _case_f() -> CaseSpec:
    g = F(-13, 2)
    return CaseSpec(
        name="F",
        description="generic; seeds I_1, II_2; E reflected, singular inside (0, inf)",
        seeds=seeds(g, "I_1", "II_2"),
        g=g,
        kind="generic",
        generic=GenericData(
            prefactor=G(1),
            power=Poly.zero(),
            poly=GPoly(
                [
                    G("15/16", -1, "-7/2", 4, -1),
                    G("-15/2", -7, 14, -4),
                    G("-5/2", 16, -6),
                    G(6, -4),
                    G(-1),
                ]
            ),
            discriminant=prod(-16, G(-5, 2) ** 2, G(-3, 2), G(1, 2), G(13, 2) ** 2),
        ),
        wronskian=WronskianData(constant=F(-1), expo=0, power=F(0), factors=((P(-14, 1), 1), (P(-6, 1), 3))),
        cubic_root=F(6),
        potential=PotentialData(
            inverse_eta=F(195, 4),
            constant=F(12),
            terms=(
                (P(144), P(-6, 1), 2),
                (P(12), P(-6, 1), 1),
                (P(112), P(-14, 1), 2),
                (P(4), P(-14, 1), 1),
            ),
        ),
        family=FamilyData(
            eta_power=F(-13, 4),
            denominator=P(-6, 1) ** 2 * P(-14, 1),
            direct=DirectFormula(
                a0=P(-280, 140, -22, 1) * 36,
                # displayed without the square on (η - 6)
                a1=prod(-4, P(-6, 1) ** 2, P(-14, 1)),
                b=prod(-16, eta, P(-6, 1), P(-12, 1)),
                alpha=F(-7),
            ),
            lower_members={
                1: prod(-32, P(-1512, 504, 12, -16, 1)),
                2: prod(14, P(-6480, 1080, 396, -42, -12, 1)),
            },
        ),
        square_integrable=False,
        prepotential=Prepotential(
            x_power=F(-13, 2),
            numerator=P(-280, 140, -22, 1),
            denominator=P(-6, 1) ** 2 * P(-14, 1),
            shift=F(0),
        ),
        shape_invariant=True,
        eta_ode=EtaODE(
            beta=F(-6),
            V=RationalFunction(P(1008, -12, -16, 1) * -4, P(-6, 1) ** 2 * P(-14, 1) ** 2),
        ),
        polynomial_ode=PolynomialODE(
            p2=prod(eta, P(-6, 1), P(-14, 1)),
            p1=-P(504, -104, -8, 1),
            p0=P(-252, -8, 3),
            pn=prod(P(-6, 1), P(-14, 1)),
        ),
    )


def _case_g() -> CaseSpec:
    g = F(39, 10)

    def two_g(c: int) -> Poly:
        return G(c, 2)

    return CaseSpec(
        name="G",
        description="generic; seeds I_3, II_1; Wronskian and potential only",
        seeds=seeds(g, "I_3", "II_1"),
        g=g,
        kind="generic",
        generic=GenericData(
            prefactor=G(F(1, 96)),
            power=Poly.zero(),
            poly=GPoly(
                [
                    prod(two_g(-3), two_g(-1), two_g(1), two_g(3), two_g(5)),
                    prod(10, two_g(-3), two_g(1), two_g(3), two_g(5)),
                    prod(80, G(-1, 1), two_g(3), two_g(5)),
                    prod(160, G(0, 1), two_g(5)),
                    prod(80, two_g(3)),
                    G(32),
                ]
            ),
            discriminant=prod(two_g(-3), two_g(1), two_g(3) ** 2, two_g(5) ** 3, G(-39, 10) ** 2),
            discriminant_exact=False,
        ),
        wronskian=WronskianData(
            constant=F(1, 9375), expo=0, power=F(0), factors=((P(12, 5), 3), (G_QUAD, 1))
        ),
        cubic_root=F(-12, 5),
        potential=PotentialData(
            inverse_eta=F(1131, 100),
            constant=F(-44, 5),
            terms=(
                (P(-1440), P(12, 5), 2),
                (P(60), P(12, 5), 1),
                (P(0, 165000), G_QUAD, 2),
                (P(-1980, 200), G_QUAD, 1),
            ),
        ),
    )


def _case_h() -> CaseSpec:
    g = F(53, 2)
    return CaseSpec(
        name="H",
        description="three-index; seeds I_1, II_1, II_2; square-integrable family without gaps",
        seeds=seeds(g, "I_1", "II_1", "II_2"),
        g=g,
        kind="generic",
        wronskian=WronskianData(
            constant=F(-4), expo=-1, power=F(-51, 2), factors=((P(30, 1), 3), (H_QUAD, 1))
        ),
        cubic_root=F(-30),
        potential=PotentialData(
            inverse_eta=F(2499, 4),
            constant=F(-52),
            terms=(
                (P(-720), P(30, 1), 2),
                (P(12), P(30, 1), 1),
                (P(0, -312), H_QUAD, 2),
                (P(-156, 8), H_QUAD, 1),
            ),
        ),
        family=FamilyData(eta_power=F(51, 4), denominator=P(30, 1) ** 2 * H_QUAD, degree_offset=4),
        square_integrable=True,
        crum_norm=True,
        weight=WeightData(
            eta_exponent=F(25), denominator=P(30, 1) ** 4 * H_QUAD**2, measure_factor=F(1, 2)
        ),
        groundstate=P(425880, 67704, 4004, 104, 1),
    )


CASES: dict[str, CaseSpec] = {
    case.name: case
    for case in (_case_a(), _case_b(), _case_c(), _case_d(), _case_e(), _case_f(), _case_g(), _case_h())
}


def get_case(name: str) -> CaseSpec:
    """Look up a case by name (case-insensitive)."""
    key = name.strip().upper()
    if key not in CASES:
        raise UnknownCase(name)
    return CASES[key]


def case_names() -> list[str]:
    return sorted(CASES)


def _potential_json(data: PotentialData) -> dict[str, Any]:
    rational = data.rational()
    return {"numerator": rational.num.to_json(), "denominator": rational.den.to_json()}


def catalog_json(case: CaseSpec) -> dict[str, Any]:
    """Catalog record for export: seeds, g, Wronskian, potential, family and weight metadata."""
    record: dict[str, Any] = {
        "case": case.name,
        "description": case.description,
        "type": case.kind,
        "seeds": case.seed_labels,
        "g": format_rational(case.g),
        "wronskian": {
            "constant": format_rational(case.wronskian.constant),
            "expo": case.wronskian.expo,
            "power": format_rational(case.wronskian.power),
            "factors": [{"factor": f.to_json(), "multiplicity": m} for f, m in case.wronskian.factors],
        },
        "cubic_root": format_rational(case.cubic_root),
        "potential": _potential_json(case.potential),
        "family": None,
        "weight": None,
        "norm_formula": None,
    }
    if case.family is not None:
        record["family"] = {
            "eta_power": format_rational(case.family.eta_power),
            "denominator": case.family.denominator.to_json(),
            "missing": list(case.family.missing),
            "extra": list(case.family.extra_indices),
        }
    if case.weight is not None:
        record["weight"] = {
            "eta_exponent": format_rational(case.weight.eta_exponent),
            "denominator": case.weight.denominator.to_json(),
            "measure_factor": format_rational(case.weight.measure_factor),
        }
    if case.norm_formula is not None:
        record["norm_formula"] = {
            "prefactor": format_rational(case.norm_formula.prefactor),
            "linear": [list(pair) for pair in case.norm_formula.linear],
            "gamma_shift": format_rational(case.norm_formula.gamma_shift),
        }
    return record

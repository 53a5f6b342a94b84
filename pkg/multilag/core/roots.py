"""Rational roots, multiplicities and rational factorization.

Rational roots are found exactly by modular lifting. The square-free
primitive part is reduced modulo a small prime at which it keeps its degree
and all of its roots are simple; each root there is Hensel-lifted until the
modulus exceeds twice the Cauchy bound of lead·root, and the symmetric
residue over the leading coefficient is tested by exact evaluation. Every
rational root reduces to a simple root modulo such a prime, so none is missed.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count

from multilag.core.gpoly import GPoly
from multilag.core.poly import Poly
from multilag.core.rational import RationalLike, to_rational
from multilag.errors import ZeroPolynomial

logger = logging.getLogger(__name__)


def _horner(ints: tuple[int, ...], x: int, modulus: int) -> int:
    value = 0
    for c in reversed(ints):
        value = (value * x + c) % modulus
    return value


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(n**0.5) + 1):
        if n % d == 0:
            return False
    return True


def _simple_roots_mod(ints: tuple[int, ...], deriv: tuple[int, ...]) -> tuple[int, list[int]]:
    """First odd prime l not dividing the leading coefficient at which every root mod l is simple."""
    lead = ints[-1]
    for l in count(3, 2):
        if not _is_prime(l) or lead % l == 0:
            continue
        roots = [r for r in range(l) if _horner(ints, r, l) == 0]
        if all(_horner(deriv, r, l) != 0 for r in roots):
            return l, roots
    raise AssertionError("unreachable")


def _hensel_lift(ints: tuple[int, ...], deriv: tuple[int, ...], root: int, prime: int, bound: int) -> tuple[int, int]:
    """Lift a simple root mod prime to a root mod M > bound by Newton steps with a squaring modulus."""
    modulus = prime
    while modulus <= bound:
        modulus *= modulus
        step = _horner(ints, root, modulus) * pow(_horner(deriv, root, modulus), -1, modulus)
        root = (root - step) % modulus
    return root, modulus


def rational_roots(p: Poly) -> list[tuple[Fraction, int]]:
    """All rational roots of p with multiplicities, in increasing order."""
    if not p:
        raise ZeroPolynomial("rational roots of the zero polynomial")
    if p.degree < 1:
        return []
    _, ints = p.square_free_part().integer_primitive()
    deriv = tuple(k * c for k, c in enumerate(ints))[1:]
    lead = ints[-1]
    reduced = Poly(ints)
    # lead·root is an integer of absolute value at most |lead| + max|a_i|
    bound = 2 * (abs(lead) + max(abs(c) for c in ints))
    prime, residues = _simple_roots_mod(ints, deriv)
    found: set[Fraction] = set()
    for residue in residues:
        lifted, modulus = _hensel_lift(ints, deriv, residue, prime, bound)
        k = (lead * lifted) % modulus
        if k > modulus // 2:
            k -= modulus
        candidate = Fraction(k, lead)
        if reduced(candidate) == 0:
            found.add(candidate)
    roots = sorted(found)
    logger.debug("degree %d polynomial: rational roots %s (prime %d)", p.degree, roots, prime)
    return [(r, p.multiplicity(r)) for r in roots]


def root_multiplicity(p: Poly | GPoly, eta0: RationalLike) -> int:
    """Largest m with (η - eta0)^m dividing p (a GPoly must be constant in g)."""
    if isinstance(p, GPoly):
        p = p.to_poly()
    return p.multiplicity(to_rational(eta0))


def linear_factor(root: Fraction) -> Poly:
    """Primitive integer linear factor q·t - p for the root p/q."""
    return Poly([-root.numerator, root.denominator])


@dataclass
class Factorization:
    """p = constant * prod(linear^m) * prod(cofactor^m).

    Linear factors are primitive integer polynomials q·t - p with q > 0;
    cofactors are primitive integer, square-free and free of rational roots.
    """

    constant: Fraction
    linear: list[tuple[Fraction, Poly, int]] = field(default_factory=list)
    cofactors: list[tuple[Poly, int]] = field(default_factory=list)

    def factors(self) -> list[tuple[Poly, int]]:
        return [(f, m) for _, f, m in self.linear] + list(self.cofactors)

    def expand(self) -> Poly:
        result = Poly.constant(self.constant)
        for f, m in self.factors():
            result = result * f**m
        return result


def factor_rational(p: Poly) -> Factorization:
    """Split off rational linear factors; group the rest by multiplicity."""
    if not p:
        raise ZeroPolynomial("factorization of the zero polynomial")
    rest = p
    linear = []
    for root, mult in rational_roots(p):
        factor = linear_factor(root)
        linear.append((root, factor, mult))
        rest = rest.exact_div(factor**mult)
    cofactors = []
    for factor, mult in rest.square_free_decomposition():
        primitive = factor.primitive()
        cofactors.append((primitive, mult))
        rest = rest.exact_div(primitive**mult)
    return Factorization(constant=rest.constant_value(), linear=linear, cofactors=cofactors)


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [p, p.derivative()]
    while seq[-1]:
        nxt = -(seq[-2] % seq[-1])
        if not nxt:
            break
        seq.append(nxt)
    return [s for s in seq if s]


def _sign_changes(values: list[Fraction]) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _signs_at(seq: list[Poly], x: Fraction | None, at_plus_infinity: bool) -> list[Fraction]:
    if x is not None:
        return [s(x) for s in seq]
    sign = 1 if at_plus_infinity else -1
    return [s.leading * (sign ** s.degree) for s in seq]


def count_real_roots(p: Poly, lo: RationalLike | None = None, hi: RationalLike | None = None) -> int:
    """Number of distinct real roots in (lo, hi]; None ends mean -inf / +inf."""
    if not p:
        raise ZeroPolynomial("root count of the zero polynomial")
    if p.degree < 1:
        return 0
    seq = sturm_sequence(p.square_free_part())
    lo_val = None if lo is None else to_rational(lo)
    hi_val = None if hi is None else to_rational(hi)
    v_lo = _sign_changes(_signs_at(seq, lo_val, at_plus_infinity=False))
    v_hi = _sign_changes(_signs_at(seq, hi_val, at_plus_infinity=True))
    return v_lo - v_hi


def positive_on_half_line(p: Poly) -> bool:
    """True iff p > 0 on [0, inf): no root in [0, inf) and p(0) > 0."""
    if not p:
        return False
    if p(Fraction(0)) <= 0:
        return False
    return count_real_roots(p, 0, None) == 0

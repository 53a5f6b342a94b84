"""Resultants and discriminants over Q[g].

Coefficients are cleared to integers first; the Sylvester determinant is
then computed by fraction-free (Bareiss) elimination over Z[g], where every
division is exact. Integer polynomials are plain tuples of ints, ascending
in g, which keeps the elimination fast.
"""

import logging
from fractions import Fraction
from math import lcm

from multilag.core.gpoly import GPoly
from multilag.core.poly import Poly
from multilag.errors import DegreeTooLow, DivisionError, ZeroPolynomial

logger = logging.getLogger(__name__)

IntPoly = tuple[int, ...]


def _trim(values: list[int]) -> IntPoly:
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def _isub(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a), len(b))
    return _trim([(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)])


def _imul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _iexact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact quotient in Z[g]; raises DivisionError when b does not divide a."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return ()
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        raise DivisionError(Poly(a))
    lc = b[-1]
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        top = rem[k + db]
        if top % lc:
            raise DivisionError(Poly(rem))
        q = top // lc
        quot[k] = q
        if q:
            for j, y in enumerate(b):
                rem[k + j] -= q * y
    if any(rem):
        raise DivisionError(Poly(_trim(rem)))
    return _trim(quot)


def _integer_rows(p: GPoly) -> tuple[Fraction, list[IntPoly]]:
    """Write p = scale * P with P in Z[g][η]; returns (scale, η-coefficients of P)."""
    den = lcm(1, *(c.denominator for coeff in p.coeffs for c in coeff.coeffs))
    rows = [tuple(int(c * den) for c in coeff.coeffs) for coeff in p.coeffs]
    return Fraction(1, den), rows


def bareiss_determinant(matrix: list[list[IntPoly]]) -> IntPoly:
    """Determinant of a square matrix over Z[g] by fraction-free elimination."""
    n = len(matrix)
    if n == 0:
        return (1,)
    m = [row[:] for row in matrix]
    sign = 1
    prev: IntPoly = (1,)
    for k in range(n - 1):
        if not m[k][k]:
            pivot = next((i for i in range(k + 1, n) if m[i][k]), None)
            if pivot is None:
                return ()
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _isub(_imul(m[k][k], m[i][j]), _imul(m[i][k], m[k][j]))
                m[i][j] = _iexact_div(num, prev)
            m[i][k] = ()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else tuple(-c for c in det)


def sylvester_matrix(a: list[IntPoly], b: list[IntPoly]) -> list[list[IntPoly]]:
    """Sylvester matrix of two polynomials given by ascending η-coefficients."""
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows: list[list[IntPoly]] = []
    a_desc = list(reversed(a))
    b_desc = list(reversed(b))
    for i in range(n):
        rows.append([()] * i + a_desc + [()] * (size - m - 1 - i))
    for i in range(m):
        rows.append([()] * i + b_desc + [()] * (size - n - 1 - i))
    return rows


def resultant(a: GPoly, b: GPoly) -> Poly:
    """Resultant in η of two polynomials over Q[g], as a polynomial in g.

    Uses the convention res(a, b) = lc(a)^deg(b) * prod b(roots of a), so
    res(η - 1, η + 1) = 2 and res(η², η - g) = g².
    """
    if not a or not b:
        raise ZeroPolynomial("resultant with a zero polynomial")
    scale_a, rows_a = _integer_rows(a)
    scale_b, rows_b = _integer_rows(b)
    det = bareiss_determinant(sylvester_matrix(rows_a, rows_b))
    scale = scale_a ** b.degree * scale_b ** a.degree
    logger.debug("resultant of degrees %d, %d has g-degree %d", a.degree, b.degree, len(det) - 1)
    return Poly(Fraction(c) * scale for c in det)


def discriminant(p: GPoly) -> Poly:
    """(-1)^(n(n-1)/2) res(p, p') / lc(p) for n = deg_η p >= 2."""
    n = p.degree
    if n < 2:
        raise DegreeTooLow(f"discriminant needs degree >= 2, got {n}")
    if not p.leading:
        raise ZeroPolynomial("leading coefficient vanishes identically")
    res = resultant(p, p.derivative())
    disc = res.exact_div(p.leading)
    return -disc if (n * (n - 1) // 2) % 2 else disc


def poly_discriminant(p: Poly) -> Fraction:
    """Discriminant of a polynomial with numeric coefficients."""
    return discriminant(GPoly.from_poly(p)).coeff(0)

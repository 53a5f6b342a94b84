"""Generalized Gauss-Laguerre quadrature for ∫₀^∞ e^{-η} η^α f(η) dη.

Nodes and weights come from the eigen-decomposition of the Jacobi matrix
of the Laguerre recurrence: diagonal 2k + α + 1, off-diagonal
sqrt(k(k + α)); the weight of node i is Γ(α + 1)·v_i[0]².
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from numpy.polynomial import polynomial as npoly
from numpy.typing import NDArray

from multilag.config import QUADRATURE_NODES
from multilag.core.poly import Poly
from multilag.services.special import gamma_numeric

logger = logging.getLogger(__name__)


@lru_cache(maxsize=32)
def gauss_laguerre(n: int, alpha: float = 0.0) -> tuple[NDArray, NDArray]:
    """Nodes and weights of the n-point rule for the weight e^{-η} η^alpha on (0, inf)."""
    if n < 1:
        raise ValueError(f"need at least one node, got {n}")
    if alpha <= -1:
        raise ValueError(f"weight η^{alpha} is not integrable at 0")
    k = np.arange(n, dtype=float)
    diagonal = 2 * k + alpha + 1
    off = np.sqrt(k[1:] * (k[1:] + alpha))
    jacobi = np.diag(diagonal) + np.diag(off, 1) + np.diag(off, -1)
    nodes, vectors = np.linalg.eigh(jacobi)
    weights = gamma_numeric(alpha + 1) * vectors[0, :] ** 2
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


@dataclass(frozen=True)
class QuadratureEstimate:
    value: float
    estimated_error: float
    nodes_used: int
    tail_bound: float


def _rational_values(numerator: Poly, denominator: Poly, nodes: NDArray) -> NDArray:
    return npoly.polyval(nodes, numerator.to_floats()) / npoly.polyval(nodes, denominator.to_floats())


def tail_bound(numerator: Poly, denominator: Poly, alpha: float, cutoff: float) -> float:
    """Bound on ∫_T^∞ e^{-η} η^α |num/den| dη with T = cutoff.

    For η >= T >= 1 one has |num| <= C_num η^{dn} and |den| >= C_den η^{dd},
    so the integrand is at most C e^{-η} η^k with k = α + dn - dd, and
    ∫_T^∞ e^{-η} η^k dη <= e^{-T} T^k · T/(T - k) once T > k.
    """
    T = cutoff
    dn, dd = numerator.degree, denominator.degree
    if T < 1:
        return math.inf
    c_num = sum(abs(float(a)) * T ** (i - dn) for i, a in enumerate(numerator.coeffs))
    c_den = abs(float(denominator.leading)) - sum(
        abs(float(a)) * T ** (i - dd) for i, a in enumerate(denominator.coeffs[:-1])
    )
    if c_num == 0:
        return 0.0
    if c_den <= 0:
        return math.inf
    k = alpha + dn - dd
    if k >= T:
        return math.inf
    log_bound = math.log(c_num / c_den) - T + k * math.log(T)
    if k > 0:
        log_bound += math.log(T / (T - k))
    return math.exp(log_bound)


def integrate_rational(
    numerator: Poly,
    denominator: Poly,
    alpha: Fraction | float,
    nodes: int = QUADRATURE_NODES,
) -> QuadratureEstimate:
    """∫₀^∞ e^{-η} η^α numerator(η)/denominator(η) dη.

    The estimated error is the change when the node count is doubled.
    """
    a = float(alpha)
    x, w = gauss_laguerre(nodes, a)
    value = float(np.dot(w, _rational_values(numerator, denominator, x)))
    xf, wf = gauss_laguerre(2 * nodes, a)
    fine = float(np.dot(wf, _rational_values(numerator, denominator, xf)))
    bound = tail_bound(numerator, denominator, a, float(x[-1]))
    logger.debug("quadrature with %d nodes: %.16g (doubled %.16g, tail %.3g)", nodes, value, fine, bound)
    return QuadratureEstimate(
        value=value, estimated_error=abs(value - fine), nodes_used=nodes, tail_bound=bound
    )

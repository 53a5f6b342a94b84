"""Double precision Γ for the norm formulas."""

import math

from multilag.errors import DomainError

LANCZOS_G = 7
LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
GAMMA_MAX_ARG = 171.0  # Γ overflows a double beyond this


def _lanczos(z: float) -> float:
    """Γ(z) on the base interval [1, 2)."""
    z -= 1
    series = LANCZOS_COEFFS[0]
    for i, c in enumerate(LANCZOS_COEFFS[1:], start=1):
        series += c / (z + i)
    t = z + LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * t ** (z + 0.5) * math.exp(-t) * series


def gamma_numeric(z: float) -> float:
    """Γ(z) for z > 0.

    The argument is shifted into [1, 2) with Γ(z+1) = zΓ(z) and the Lanczos
    sum is evaluated there. Relative error stays below 1e-12 up to z = 60.

    Raises:
        DomainError: z is not a positive finite number or overflows.
    """
    if not math.isfinite(z) or z <= 0:
        raise DomainError(f"gamma_numeric is defined for z > 0, got {z}")
    if z > GAMMA_MAX_ARG:
        raise DomainError(f"gamma_numeric overflows for z = {z}")
    scale = 1.0
    while z < 1:
        scale /= z
        z += 1
    while z >= 2:
        z -= 1
        scale *= z
    return scale * _lanczos(z)

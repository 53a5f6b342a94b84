"""Scan seed configurations for Wronskians with a multiple zero.

For each choice of seed degrees the Wronskian is computed with g symbolic.
Its polynomial part P(η; g) has a repeated zero only where the discriminant
in η vanishes, so the rational roots of that discriminant are the only
candidate couplings. Each candidate is specialized and its rational zeros
are kept when their multiplicity reaches the target.
"""

import logging
from collections.abc import Callable, Iterator, Sequence
from itertools import product

from multilag.core.resultant import discriminant
from multilag.core.roots import rational_roots
from multilag.errors import DependentSeeds
from multilag.models.results import SearchHit
from multilag.models.seeds import SeedKind, SeedSpec
from multilag.services.quasifunc import seed_wronskian

logger = logging.getLogger(__name__)


def degree_tuples(kinds: Sequence[SeedKind], vmax: int) -> Iterator[tuple[int, ...]]:
    """Degrees 1..vmax per seed; seeds of the same kind take increasing degrees.

    Degree 0 is not scanned; every catalogued seed has degree at least 1.
    """
    for vs in product(range(1, vmax + 1), repeat=len(kinds)):
        if all(
            vs[i] < vs[j]
            for i in range(len(kinds))
            for j in range(i + 1, len(kinds))
            if kinds[i] is kinds[j]
        ):
            yield vs


def scan_configuration(kinds: Sequence[SeedKind], vs: Sequence[int], target_m: int) -> list[SearchHit]:
    """Hits for one choice of seed degrees."""
    seeds = [SeedSpec(kind=k, v=v) for k, v in zip(kinds, vs)]
    w = seed_wronskian(seeds)
    if w.is_zero:
        raise DependentSeeds(f"seeds {[s.label for s in seeds]} have a vanishing Wronskian")
    poly = w.poly.primitive_part()
    if poly.degree < 2:
        return []
    disc = discriminant(poly)
    if not disc:
        logger.debug("%s: discriminant vanishes for every g", [s.label for s in seeds])
        return []
    hits = []
    couplings = rational_roots(disc)
    for g0, _ in couplings:
        special = poly.substitute(g0)
        if not special or special.degree < target_m:
            continue
        for eta0, m in rational_roots(special):
            if eta0 != 0 and m >= target_m:
                hits.append(SearchHit(kinds=tuple(kinds), vs=tuple(vs), g=g0, eta0=eta0, multiplicity=m))
    logger.debug("%s: %d candidate couplings, %d hits", [s.label for s in seeds], len(couplings), len(hits))
    return hits


def search_multiple_zeros(
    kinds: Sequence[SeedKind],
    vmax: int,
    target_m: int = 3,
    on_progress: Callable[[tuple[int, ...]], None] | None = None,
) -> list[SearchHit]:
    """All (degrees, g, η0) with a rational zero of order >= target_m, sorted.

    Args:
        kinds: Seed kinds, one per seed (two or three seeds).
        vmax: Largest seed degree.
        target_m: Minimal multiplicity of the zero.
        on_progress: Called with each degree tuple after it is scanned.

    Returns:
        Hits ordered by (kinds, degrees, g, η0).
    """
    if vmax < 1:
        raise ValueError(f"vmax must be at least 1, got {vmax}")
    if target_m < 2:
        raise ValueError(f"target multiplicity must be at least 2, got {target_m}")
    hits: list[SearchHit] = []
    for vs in degree_tuples(kinds, vmax):
        try:
            hits.extend(scan_configuration(kinds, vs, target_m))
        except DependentSeeds as e:
            logger.debug("skipping: %s", e)
        if on_progress is not None:
            on_progress(vs)
    hits.sort(key=lambda h: h.sort_key)
    logger.info("search over %s with vmax=%d: %d hits", [k.value for k in kinds], vmax, len(hits))
    return hits

"""Finite maps between digital images and digital continuity.

Continuity is implemented twice on purpose. The pointwise form (adjacent
points map to adjacent-or-equal points) is the workhorse; the setwise
form (connected subsets have connected images) re-derives the same
predicate from the subset definition by exhaustive enumeration, so the
two can be cross-checked against each other in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .image import DigitalImage, adjacent_pairs, neighbors_in
from .lattice import Point, adjacent


@dataclass(frozen=True)
class DigitalMap:
    """A total map between two digital images, stored as an explicit table.

    The table is kept as (x, f(x)) pairs sorted by x, so equal maps
    compare and hash equal and serialization is canonical.
    """

    domain: DigitalImage
    codomain: DigitalImage
    pairs: tuple[tuple[Point, Point], ...]

    def __post_init__(self) -> None:
        pairs = tuple(sorted((tuple(x), tuple(y)) for x, y in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        if tuple(x for x, _ in pairs) != self.domain.points:
            raise ValueError("map table must be total on the domain, without repeats")
        cod = self.codomain.point_set
        for _, y in pairs:
            if y not in cod:
                raise ValueError(f"value {y} lies outside the codomain")

    @cached_property
    def _lookup(self) -> dict[Point, Point]:
        return dict(self.pairs)

    def __call__(self, x: Point) -> Point:
        return self._lookup[x]

    @property
    def values(self) -> tuple[Point, ...]:
        """Values in domain order; the map's canonical key."""
        return tuple(y for _, y in self.pairs)


def digital_map(
    domain: DigitalImage,
    codomain: DigitalImage,
    table: Mapping[Point, Point] | Iterable[tuple[Point, Point]],
) -> DigitalMap:
    items = table.items() if isinstance(table, Mapping) else table
    return DigitalMap(domain, codomain, tuple(items))


def identity_map(img: DigitalImage) -> DigitalMap:
    return DigitalMap(img, img, tuple((p, p) for p in img.points))


def constant_map(img: DigitalImage, q: Point) -> DigitalMap:
    q = tuple(q)
    if q not in img.point_set:
        raise ValueError(f"constant value {q} is not a point of the image")
    return DigitalMap(img, img, tuple((p, q) for p in img.points))


def find_discontinuity(f: DigitalMap) -> tuple[Point, Point] | None:
    """First adjacent domain pair whose values are neither equal nor adjacent.

    Pairs are scanned in lexicographic order; None means f is continuous.
    """
    lam = f.codomain.adjacency
    for x, y in adjacent_pairs(f.domain):
        fx, fy = f(x), f(y)
        if fx != fy and not adjacent(fx, fy, lam):
            return (x, y)
    return None


def is_continuous_pointwise(f: DigitalMap) -> bool:
    """Continuity via adjacency: adjacent points map to adjacent-or-equal points."""
    return find_discontinuity(f) is None


def is_continuous_setwise(f: DigitalMap, max_points: int = 12) -> bool:
    """Continuity via subsets: every connected subset has a connected image.

    Enumerates all 2^|domain| subsets, so the domain size is capped
    (default 12); a ValueError signals that the pointwise form should be
    used instead.
    """
    n = len(f.domain)
    if n > max_points:
        raise ValueError(
            f"domain has {n} points, setwise check is capped at {max_points};"
            " use the pointwise form"
        )
    dom_pts = f.domain.points
    cod_pts = f.codomain.points
    dom_index = {p: i for i, p in enumerate(dom_pts)}
    cod_index = {p: i for i, p in enumerate(cod_pts)}

    dom_nbr = [0] * n
    for i, p in enumerate(dom_pts):
        for q in neighbors_in(f.domain, p):
            dom_nbr[i] |= 1 << dom_index[q]
    cod_nbr = [0] * len(cod_pts)
    for i, p in enumerate(cod_pts):
        for q in neighbors_in(f.codomain, p):
            cod_nbr[i] |= 1 << cod_index[q]

    value_bit = [1 << cod_index[f(p)] for p in dom_pts]

    for mask in range(1, 1 << n):
        if not _mask_connected(mask, dom_nbr):
            continue
        img_mask = 0
        m = mask
        while m:
            low = m & -m
            img_mask |= value_bit[low.bit_length() - 1]
            m ^= low
        if not _mask_connected(img_mask, cod_nbr):
            return False
    return True


def _mask_connected(mask: int, nbr: list[int]) -> bool:
    if mask == 0:
        return True
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        grow = 0
        m = frontier
        while m:
            low = m & -m
            grow |= nbr[low.bit_length() - 1]
            m ^= low
        frontier = grow & mask & ~seen
        seen |= frontier
    return seen == mask


def compose(g: DigitalMap, f: DigitalMap) -> DigitalMap:
    """The map x -> g(f(x)); f's codomain must equal g's domain."""
    if f.codomain != g.domain:
        raise ValueError("codomain of the inner map must equal domain of the outer map")
    return DigitalMap(f.domain, g.codomain, tuple((x, g(y)) for x, y in f.pairs))

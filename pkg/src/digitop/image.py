"""Finite digital images: point sets with one adjacency, viewed as graphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, cached_property
from typing import Iterable, Iterator

from .lattice import Adjacency, Point, adjacent, neighbors


@dataclass(frozen=True)
class DigitalImage:
    """A finite set of lattice points sharing one adjacency relation.

    Points are stored deduplicated in lexicographic order, which fixes
    iteration order and makes serialization canonical.
    """

    points: tuple[Point, ...]
    adjacency: Adjacency

    def __post_init__(self) -> None:
        dim = self.adjacency.dimension
        cleaned = set()
        for p in self.points:
            p = tuple(p)
            if len(p) != dim:
                raise ValueError(
                    f"point {p} has dimension {len(p)}, image expects {dim}"
                )
            if not all(isinstance(c, int) for c in p):
                raise ValueError(f"point {p} has non-integer coordinates")
            cleaned.add(p)
        object.__setattr__(self, "points", tuple(sorted(cleaned)))

    @cached_property
    def point_set(self) -> frozenset[Point]:
        return frozenset(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __contains__(self, p: object) -> bool:
        return p in self.point_set


def image(points: Iterable[Point], adjacency: Adjacency) -> DigitalImage:
    """Convenience constructor accepting any iterable of points."""
    return DigitalImage(tuple(points), adjacency)


def neighbors_in(img: DigitalImage, x: Point) -> tuple[Point, ...]:
    """The points of the image adjacent to x, in lexicographic order."""
    pts = img.point_set
    return tuple(sorted(q for q in neighbors(x, img.adjacency) if q in pts))


@lru_cache(maxsize=512)
def adjacent_pairs(img: DigitalImage) -> tuple[tuple[Point, Point], ...]:
    """All adjacent pairs (x, y) with x < y, in lexicographic order."""
    out = []
    for x in img.points:
        for y in neighbors_in(img, x):
            if x < y:
                out.append((x, y))
    return tuple(out)


def _component_of(img: DigitalImage, seed: Point, allowed: frozenset[Point]) -> set[Point]:
    # Plain traversal; neighbor candidates come from the 3^n - 1 offsets,
    # so each step costs O(3^n) set lookups.
    seen = {seed}
    stack = [seed]
    adj = img.adjacency
    while stack:
        x = stack.pop()
        for y in neighbors(x, adj):
            if y in allowed and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def is_connected(img: DigitalImage) -> bool:
    """True iff each pair of points is joined by a chain of adjacent points.

    Empty and one-point images count as connected.
    """
    if len(img) <= 1:
        return True
    first = img.points[0]
    return len(_component_of(img, first, img.point_set)) == len(img)


def is_connected_subset(img: DigitalImage, subset: Iterable[Point]) -> bool:
    """Connectivity of a subset under the ambient adjacency restricted to it.

    The witness chains must stay inside the subset. Raises ValueError if
    the subset is not contained in the image.
    """
    pts = frozenset(tuple(p) for p in subset)
    stray = pts - img.point_set
    if stray:
        raise ValueError(f"not a subset of the image: {sorted(stray)}")
    if len(pts) <= 1:
        return True
    seed = min(pts)
    return len(_component_of(img, seed, pts)) == len(pts)


def components(img: DigitalImage) -> tuple[tuple[Point, ...], ...]:
    """The connected components, each sorted, ordered by smallest member."""
    remaining = set(img.points)
    parts = []
    while remaining:
        seed = min(remaining)
        part = _component_of(img, seed, img.point_set & remaining)
        parts.append(tuple(sorted(part)))
        remaining -= part
    return tuple(sorted(parts))


def is_simple_closed_curve(img: DigitalImage) -> bool:
    """True iff the image is a connected cycle of at least 4 points.

    Every point must have exactly two neighbors within the image.
    """
    if len(img) < 4:
        return False
    if not is_connected(img):
        return False
    return all(len(neighbors_in(img, x)) == 2 for x in img.points)

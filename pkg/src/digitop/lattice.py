"""Points of Z^n and the c_u family of adjacency relations.

Two distinct lattice points are c_u-adjacent when every coordinate
differs by at most one and the number of coordinates that differ is
between 1 and u. The common named adjacencies are instances of this
family: 2 (on Z), 4 and 8 (on Z^2), and 6, 18 and 26 (on Z^3), each
named after the number of points adjacent to any given point.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

Point = tuple[int, ...]

# (name, dimension) -> u
_NAMED: dict[tuple[int, int], int] = {
    (2, 1): 1,
    (4, 2): 1,
    (8, 2): 2,
    (6, 3): 1,
    (18, 3): 2,
    (26, 3): 3,
}

# (dimension, u) -> name
_ALIASES = {(n, u): name for (name, n), u in _NAMED.items()}

# name -> dimension (names are unambiguous)
_NAME_DIMENSION = {name: n for (name, n) in _NAMED}


@dataclass(frozen=True, order=True)
class Adjacency:
    """The c_u adjacency relation on Z^dimension.

    ``u`` is the index of the c_u family: at most u coordinates may
    differ (each by exactly one) between adjacent points.
    """

    dimension: int
    u: int

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ValueError(f"dimension must be positive, got {self.dimension}")
        if not 1 <= self.u <= self.dimension:
            raise ValueError(
                f"u must satisfy 1 <= u <= dimension={self.dimension}, got {self.u}"
            )

    @property
    def name(self) -> int | None:
        """Neighbor-count alias (e.g. 18 for c_2 on Z^3), if one exists."""
        return _ALIASES.get((self.dimension, self.u))

    def __str__(self) -> str:
        name = self.name
        if name is not None:
            return f"{name}-adjacency"
        return f"c_{self.u} on Z^{self.dimension}"


def named_adjacency(name: int, dimension: int | None = None) -> Adjacency:
    """Resolve a named adjacency (2, 4, 8, 6, 18 or 26) to its c_u instance.

    The dimension may be omitted; each name determines it uniquely.
    Raises ValueError for unknown names or mismatched (name, dimension)
    pairs, e.g. (18, 2).
    """
    if dimension is None:
        dimension = _NAME_DIMENSION.get(name)
        if dimension is None:
            raise ValueError(f"unknown adjacency name {name!r}")
    u = _NAMED.get((name, dimension))
    if u is None:
        raise ValueError(f"no adjacency named {name} exists on Z^{dimension}")
    return Adjacency(dimension, u)


def _check_point(x: Point, adjacency: Adjacency) -> None:
    if len(x) != adjacency.dimension:
        raise ValueError(
            f"point {x} has dimension {len(x)}, adjacency expects {adjacency.dimension}"
        )


def adjacent(x: Point, y: Point, adjacency: Adjacency) -> bool:
    """True iff x and y are distinct and c_u-adjacent.

    Symmetric in x and y; raises ValueError on dimension mismatch.
    """
    _check_point(x, adjacency)
    _check_point(y, adjacency)
    changed = 0
    for xi, yi in zip(x, y):
        d = xi - yi
        if d == 0:
            continue
        if d != 1 and d != -1:
            return False
        changed += 1
    return 1 <= changed <= adjacency.u


def adjacent_or_equal(x: Point, y: Point, adjacency: Adjacency) -> bool:
    return x == y or adjacent(x, y, adjacency)


def neighbors(x: Point, adjacency: Adjacency) -> frozenset[Point]:
    """All points of Z^n adjacent to x.

    Enumerates the 3^n - 1 candidate offsets and keeps those with at
    most u nonzero entries; the result size equals the adjacency's
    neighbor-count name when it has one.
    """
    _check_point(x, adjacency)
    u = adjacency.u
    out = []
    for offset in product((-1, 0, 1), repeat=adjacency.dimension):
        changed = sum(1 for d in offset if d)
        if 1 <= changed <= u:
            out.append(tuple(a + d for a, d in zip(x, offset)))
    return frozenset(out)

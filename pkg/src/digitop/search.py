"""Contractibility decision by reachability over continuous self-maps.

States are the continuous self-maps of a fixed image. Two states are
joined by an edge when every point's value moves by at most one
adjacency step between them, so certificates of length m correspond
exactly to paths of m edges in this map graph. Breadth-first
reachability from the identity therefore decides contractibility: the
image is contractible iff some constant map is reachable, and the
first constant dequeued yields a minimal-length witness.

Neighbor states are enumerated by backtracking over the points in a
connected order, pruning any partial assignment that already violates
continuity against an assigned neighbor; the naive product of closed
neighborhoods is vastly larger than the continuous subset it contains.

Internally a state is packed into one integer (point-index values as
big-endian digits), which keeps visited sets compact and makes numeric
order agree with lexicographic order on value tuples, so tie-breaking
is canonical everywhere.
"""

from __future__ import annotations

import heapq
import resource
import time
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from .homotopy import Homotopy, is_contraction
from .image import DigitalImage, is_connected, neighbors_in
from .lattice import Point
from .mapping import DigitalMap, is_continuous_pointwise


class SearchVerdict(Enum):
    CONTRACTIBLE = "contractible"
    NOT_CONTRACTIBLE = "not_contractible"
    INCONCLUSIVE = "inconclusive"


CONTRACTIBLE = SearchVerdict.CONTRACTIBLE
NOT_CONTRACTIBLE = SearchVerdict.NOT_CONTRACTIBLE
INCONCLUSIVE = SearchVerdict.INCONCLUSIVE


@dataclass(frozen=True)
class SearchLimits:
    """Caps that turn a run inconclusive instead of letting it run away."""

    max_states: int = 10_000_000
    max_seconds: float | None = 900.0
    max_memory_bytes: int | None = None


@dataclass(frozen=True)
class SearchStats:
    visited_states: int
    expansions: int
    frontier_peak: int
    elapsed_ms: int


@dataclass(frozen=True)
class SearchOutcome:
    verdict: SearchVerdict
    witness: Homotopy | None
    stats: SearchStats
    note: str = ""
    # Full visited set (value tuples in domain order); populated on
    # request so the closure audit can replay an exhaustive run.
    visited: frozenset[tuple[Point, ...]] | None = None


@dataclass(frozen=True)
class MapGraphState:
    """A continuous self-map together with its canonical hash key."""

    map: DigitalMap
    canonical_key: tuple[Point, ...] = field(init=False)

    def __post_init__(self) -> None:
        f = self.map
        if f.domain != f.codomain:
            raise ValueError("a map-graph state must be a self-map")
        if not is_continuous_pointwise(f):
            raise ValueError("a map-graph state must be continuous")
        object.__setattr__(self, "canonical_key", f.values)


class _MapSpace:
    """Index-level view of one image, shared by all searches over it."""

    __slots__ = ("img", "points", "size", "closed", "closed_mask", "order", "earlier")

    def __init__(self, img: DigitalImage):
        self.img = img
        pts = img.points
        self.points = pts
        self.size = n = len(pts)
        index = {p: i for i, p in enumerate(pts)}
        nbr = [tuple(index[q] for q in neighbors_in(img, p)) for p in pts]
        self.closed = [tuple(sorted((i, *nbr[i]))) for i in range(n)]
        self.closed_mask = [0] * n
        for i in range(n):
            for j in self.closed[i]:
                self.closed_mask[i] |= 1 << j

        # Connected visiting order: breadth-first per component, so every
        # point after the first of its component has an already-assigned
        # neighbor to prune against.
        order: list[int] = []
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            seen[start] = True
            queue = deque([start])
            while queue:
                i = queue.popleft()
                order.append(i)
                for j in nbr[i]:
                    if not seen[j]:
                        seen[j] = True
                        queue.append(j)
        position = {p: k for k, p in enumerate(order)}
        self.order = tuple(order)
        self.earlier = tuple(
            tuple(j for j in nbr[i] if position[j] < position[i]) for i in self.order
        )

    # -- packed-integer keys ------------------------------------------------

    def pack(self, values: tuple[int, ...]) -> int:
        key = 0
        n = self.size
        for v in values:
            key = key * n + v
        return key

    def unpack(self, key: int) -> tuple[int, ...]:
        n = self.size
        out = [0] * n
        for i in range(n - 1, -1, -1):
            key, out[i] = divmod(key, n)
        return tuple(out)

    def identity_key(self) -> int:
        return self.pack(tuple(range(self.size)))

    def constant_keys(self) -> frozenset[int]:
        return frozenset(self.pack((i,) * self.size) for i in range(self.size))

    def image_cardinality(self, key: int) -> int:
        return len(set(self.unpack(key)))

    def key_to_map(self, key: int) -> DigitalMap:
        pts = self.points
        vals = self.unpack(key)
        return DigitalMap(self.img, self.img, tuple(zip(pts, (pts[v] for v in vals))))

    # -- neighbor enumeration ------------------------------------------------

    def neighbor_keys(self, key: int) -> list[int]:
        """All states one homotopy step away, in increasing key order."""
        vals = self.unpack(key)
        n = self.size
        order = self.order
        earlier = self.earlier
        closed = self.closed
        mask = self.closed_mask
        assigned = [0] * n
        out: list[int] = []

        def extend(k: int) -> None:
            if k == n:
                out.append(self.pack(tuple(assigned)))
                return
            p = order[k]
            checks = earlier[k]
            for c in closed[vals[p]]:
                for q in checks:
                    if not (mask[assigned[q]] >> c) & 1:
                        break
                else:
                    assigned[p] = c
                    extend(k + 1)

        extend(0)
        out.sort()
        return out


@lru_cache(maxsize=64)
def _space(img: DigitalImage) -> _MapSpace:
    return _MapSpace(img)


def map_state(f: DigitalMap) -> MapGraphState:
    return MapGraphState(f)


def neighbor_maps(state: MapGraphState) -> frozenset[MapGraphState]:
    """All continuous self-maps reachable from this state in one step."""
    space = _space(state.map.domain)
    index = {p: i for i, p in enumerate(space.points)}
    key = space.pack(tuple(index[v] for v in state.canonical_key))
    return frozenset(
        MapGraphState(space.key_to_map(k)) for k in space.neighbor_keys(key)
    )


class _Caps:
    """Shared cap bookkeeping for both search strategies."""

    def __init__(self, limits: SearchLimits):
        self.limits = limits
        self.start = time.monotonic()
        self.note = ""

    def exceeded(self, visited: int) -> bool:
        # Checked between expansions; a cap can therefore be overshot by
        # at most one expansion's worth of work.
        limits = self.limits
        if visited > limits.max_states:
            self.note = f"visited-state cap {limits.max_states} reached"
            return True
        if limits.max_seconds is not None:
            if time.monotonic() - self.start > limits.max_seconds:
                self.note = f"time cap {limits.max_seconds}s reached"
                return True
        if limits.max_memory_bytes is not None:
            rss = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss * 1024
            if rss > limits.max_memory_bytes:
                self.note = f"memory cap {limits.max_memory_bytes} bytes reached"
                return True
        return False

    def elapsed_ms(self) -> int:
        return int((time.monotonic() - self.start) * 1000)


def _witness(space: _MapSpace, parent: dict[int, int | None], key: int) -> Homotopy:
    path = [key]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    witness = Homotopy(tuple(space.key_to_map(k) for k in path))
    verdict = is_contraction(witness)
    if not verdict.accepted:
        raise AssertionError(f"search produced an invalid witness: {verdict.detail}")
    return witness


def _check_image(img: DigitalImage) -> SearchOutcome | None:
    if len(img) == 0:
        raise ValueError("contractibility of the empty image is not defined here")
    if len(img) > 1 and not is_connected(img):
        # Every point's trajectory is a path, so a contraction would drag
        # all points into the target's component.
        stats = SearchStats(0, 0, 0, 0)
        return SearchOutcome(
            NOT_CONTRACTIBLE, None, stats, note="image is disconnected"
        )
    return None


def decide_contractibility(
    img: DigitalImage,
    limits: SearchLimits | None = None,
    keep_visited: bool = False,
) -> SearchOutcome:
    """Exhaustive breadth-first reachability from the identity map.

    Returns a contractible outcome with a minimal-length verified
    witness as soon as a constant map is dequeued; returns
    not-contractible only after the whole reachable set has been
    enumerated without meeting a constant map; returns inconclusive when
    a cap is hit.
    """
    early = _check_image(img)
    if early is not None:
        return early
    limits = limits or SearchLimits()
    space = _space(img)
    caps = _Caps(limits)
    constants = space.constant_keys()

    start = space.identity_key()
    parent: dict[int, int | None] = {start: None}
    queue: deque[int] = deque([start])
    expansions = 0
    frontier_peak = 1

    while queue:
        if caps.exceeded(len(parent)):
            stats = SearchStats(len(parent), expansions, frontier_peak, caps.elapsed_ms())
            return SearchOutcome(INCONCLUSIVE, None, stats, note=caps.note)
        key = queue.popleft()
        if key in constants:
            witness = _witness(space, parent, key)
            stats = SearchStats(len(parent), expansions, frontier_peak, caps.elapsed_ms())
            return SearchOutcome(CONTRACTIBLE, witness, stats)
        expansions += 1
        for nxt in space.neighbor_keys(key):
            if nxt not in parent:
                parent[nxt] = key
                queue.append(nxt)
        if len(queue) > frontier_peak:
            frontier_peak = len(queue)

    stats = SearchStats(len(parent), expansions, frontier_peak, caps.elapsed_ms())
    visited = None
    if keep_visited:
        visited = frozenset(
            tuple(space.points[v] for v in space.unpack(k)) for k in parent
        )
    return SearchOutcome(
        NOT_CONTRACTIBLE,
        None,
        stats,
        note="reachable set exhausted without meeting a constant map",
        visited=visited,
    )


def guided_search(
    img: DigitalImage,
    limits: SearchLimits | None = None,
) -> SearchOutcome:
    """Best-first search that prefers maps with smaller image cardinality.

    Priority is (image cardinality, discovery depth, canonical key).
    Incomplete by design: it never reports not-contractible, only a
    verified contractible witness or inconclusive.
    """
    early = _check_image(img)
    if early is not None and early.verdict is NOT_CONTRACTIBLE:
        stats = early.stats
        return SearchOutcome(INCONCLUSIVE, None, stats, note=early.note)
    limits = limits or SearchLimits()
    space = _space(img)
    caps = _Caps(limits)
    constants = space.constant_keys()

    start = space.identity_key()
    parent: dict[int, int | None] = {start: None}
    heap: list[tuple[int, int, int]] = [(space.size, 0, start)]
    expansions = 0
    frontier_peak = 1

    while heap:
        if caps.exceeded(len(parent)):
            stats = SearchStats(len(parent), expansions, frontier_peak, caps.elapsed_ms())
            return SearchOutcome(INCONCLUSIVE, None, stats, note=caps.note)
        _, depth, key = heapq.heappop(heap)
        if key in constants:
            witness = _witness(space, parent, key)
            stats = SearchStats(len(parent), expansions, frontier_peak, caps.elapsed_ms())
            return SearchOutcome(CONTRACTIBLE, witness, stats)
        expansions += 1
        for nxt in space.neighbor_keys(key):
            if nxt not in parent:
                parent[nxt] = key
                heapq.heappush(
                    heap, (space.image_cardinality(nxt), depth + 1, nxt)
                )
        if len(heap) > frontier_peak:
            frontier_peak = len(heap)

    stats = SearchStats(len(parent), expansions, frontier_peak, caps.elapsed_ms())
    return SearchOutcome(
        INCONCLUSIVE,
        None,
        stats,
        note="frontier exhausted; guided mode cannot certify non-contractibility",
    )


def audit_closure(
    img: DigitalImage, visited: frozenset[tuple[Point, ...]]
) -> bool:
    """Replay a completed exhaustive run and confirm its negative verdict.

    Checks that the identity was visited, that no visited state is a
    constant map, and that re-expanding every visited state yields no
    state outside the set.
    """
    space = _space(img)
    index = {p: i for i, p in enumerate(space.points)}
    keys = {space.pack(tuple(index[v] for v in vals)) for vals in visited}
    if space.identity_key() not in keys:
        return False
    constants = space.constant_keys()
    for key in keys:
        if key in constants:
            return False
        for nxt in space.neighbor_keys(key):
            if nxt not in keys:
                return False
    return True

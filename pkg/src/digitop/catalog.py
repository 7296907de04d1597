"""Built-in objects: the MSS_18 sphere model, its contraction, curve generators.

MSS_18 is the 10-point digital model of the 2-sphere in Z^3 introduced
by Han (2006). Theorem 4.3 of that paper claims MSS_18 is not
18-contractible; the refutation pipeline in this module checks an
explicit 4-step contraction under both 18- and 26-adjacency, which
falsifies the claim.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

from .homotopy import Homotopy, is_contraction
from .image import DigitalImage, is_connected, is_simple_closed_curve
from .lattice import Adjacency, Point, named_adjacency
from .mapping import DigitalMap
from . import search as _search

REFUTED_CLAIM = (
    "Han (2006), Theorem 4.3: the digital 2-sphere model MSS_18"
    " is not 18-contractible"
)

# The ten points of MSS_18, in their conventional numbering.
MSS18_COORDS: tuple[Point, ...] = (
    (0, 0, 0),
    (1, 1, 0),
    (1, 2, 0),
    (0, 3, 0),
    (-1, 2, 0),
    (-1, 1, 0),
    (0, 1, -1),
    (0, 2, -1),
    (0, 2, 1),
    (0, 1, 1),
)

# Step tables of the explicit contraction of MSS_18 to (0,1,-1), as maps
# on the conventional point numbering. Step 0 is the identity; step 3 is
# constant.
_CONTRACTION_STEP_1 = {0: 1, 1: 1, 9: 1, 5: 6, 6: 6, 2: 2, 3: 2, 8: 2, 4: 7, 7: 7}
_CONTRACTION_STEP_2 = {0: 6, 1: 6, 9: 6, 5: 6, 6: 6, 2: 7, 3: 7, 8: 7, 4: 7, 7: 7}


def _z3_adjacency(adjacency: int | Adjacency, allowed: tuple[int, ...]) -> Adjacency:
    if isinstance(adjacency, Adjacency):
        name = adjacency.name
        if adjacency.dimension != 3 or name not in allowed:
            raise ValueError(f"adjacency must be one of {allowed} on Z^3")
        return adjacency
    if adjacency not in allowed:
        raise ValueError(f"adjacency must be one of {allowed}, got {adjacency}")
    return named_adjacency(adjacency, 3)


def mss18(adjacency: int | Adjacency = 18) -> DigitalImage:
    """The 10-point digital 2-sphere MSS_18, under 6-, 18- or 26-adjacency."""
    return DigitalImage(MSS18_COORDS, _z3_adjacency(adjacency, (6, 18, 26)))


def mss18_cross_section(level: int, adjacency: int | Adjacency = 18) -> DigitalImage:
    """The points of MSS_18 whose second coordinate equals ``level``.

    Levels 1 and 2 give the two 4-point cycles the contraction collapses.
    """
    adj = _z3_adjacency(adjacency, (6, 18, 26))
    return DigitalImage(tuple(p for p in MSS18_COORDS if p[1] == level), adj)


def mss18_contraction(adjacency: int | Adjacency = 18) -> Homotopy:
    """The explicit 4-step contraction of MSS_18 to the point (0,1,-1).

    Valid as both an 18- and a 26-contraction; choose the adjacency the
    certificate should be checked under.
    """
    img = mss18(_z3_adjacency(adjacency, (18, 26)))

    def table_map(table: dict[int, int]) -> DigitalMap:
        pairs = tuple((MSS18_COORDS[i], MSS18_COORDS[j]) for i, j in table.items())
        return DigitalMap(img, img, pairs)

    steps = (
        table_map({i: i for i in range(10)}),
        table_map(_CONTRACTION_STEP_1),
        table_map(_CONTRACTION_STEP_2),
        table_map({i: 6 for i in range(10)}),
    )
    return Homotopy(steps)


def simple_closed_curve(k: int) -> DigitalImage:
    """A k-point simple closed curve: a rectangle boundary in Z^2 under 4-adjacency.

    Realizable sizes are 4 and the even numbers from 8 up; a pinch-free
    boundary needs side lengths of at least 2 once it encloses interior
    points, which rules out 6 and all odd k.
    """
    if k == 4:
        width = height = 1
    elif k >= 8 and k % 2 == 0:
        width, height = k // 2 - 2, 2
    else:
        raise ValueError(f"no {k}-point rectangle-boundary simple closed curve exists")
    points = []
    for x in range(width + 1):
        points += [(x, 0), (x, height)]
    for y in range(1, height):
        points += [(0, y), (width, y)]
    return DigitalImage(tuple(points), named_adjacency(4, 2))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    image: DigitalImage
    provenance: str


_MSS18_PROVENANCE = "10-point digital 2-sphere model MSS_18 (Han 2006)"


def entry(name: str, adjacency: int | Adjacency | None = None) -> CatalogEntry:
    """Look up a built-in image by name.

    Known names: ``mss18``, ``mss18-y1``, ``mss18-y2`` (adjacency 6, 18
    or 26; default 18) and ``scc<k>`` (rectangle-boundary curves,
    4-adjacency only).
    """
    if name == "mss18":
        return CatalogEntry(name, mss18(adjacency or 18), _MSS18_PROVENANCE)
    if name in ("mss18-y1", "mss18-y2"):
        level = int(name[-1])
        img = mss18_cross_section(level, adjacency or 18)
        return CatalogEntry(
            name, img, f"cross section y={level} of {_MSS18_PROVENANCE}"
        )
    if name.startswith("scc") and name[3:].isdigit():
        if adjacency not in (None, 4) and not (
            isinstance(adjacency, Adjacency) and adjacency.name == 4
        ):
            raise ValueError("rectangle-boundary curves are 4-adjacency objects")
        k = int(name[3:])
        return CatalogEntry(
            name, simple_closed_curve(k), f"boundary of a rectangle, {k} points"
        )
    raise ValueError(f"unknown builtin name {name!r}")


@dataclass(frozen=True)
class ReportStage:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class RefutationReport:
    claim: str
    stages: tuple[ReportStage, ...]

    @property
    def passed(self) -> bool:
        return all(stage.passed for stage in self.stages)

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "passed": self.passed,
            "stages": [
                {"name": s.name, "passed": s.passed, "detail": s.detail}
                for s in self.stages
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def render(self) -> str:
        lines = [f"claim under test: {self.claim}"]
        for s in self.stages:
            mark = "PASS" if s.passed else "FAIL"
            lines.append(f"  [{mark}] {s.name}: {s.detail}")
        outcome = "refuted" if self.passed else "NOT refuted by this run"
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'} (claim {outcome})")
        return "\n".join(lines)


def _stage(name: str, check: Callable[[], tuple[bool, str]]) -> ReportStage:
    # A failing stage is a report entry, never an exception.
    try:
        passed, detail = check()
    except Exception as exc:
        passed, detail = False, f"error: {exc!r}"
    return ReportStage(name, passed, detail)


def refutation_report(
    include_search: bool = False,
    tamper: Callable[[Homotopy], Homotopy] | None = None,
) -> RefutationReport:
    """Run the full contractibility pipeline and summarize it stage by stage.

    ``tamper`` is a test hook applied to the built-in certificate before
    verification, so corruption detection can be exercised end to end.
    ``include_search`` additionally derives an independent witness by
    guided search instead of trusting the built-in certificate.
    """
    stages = []

    def build() -> tuple[bool, str]:
        ok = True
        details = []
        for name in (18, 26):
            img = mss18(name)
            connected = is_connected(img)
            ok = ok and len(img) == 10 and connected
            details.append(f"{name}: {len(img)} points, connected={connected}")
        return ok, "; ".join(details)

    stages.append(_stage("construct MSS_18", build))

    def cycles(name: int) -> Callable[[], tuple[bool, str]]:
        def check() -> tuple[bool, str]:
            results = []
            ok = True
            for level in (1, 2):
                section = mss18_cross_section(level, name)
                good = len(section) == 4 and is_simple_closed_curve(section)
                ok = ok and good
                results.append(f"y={level}: {len(section)} points, cycle={good}")
            return ok, "; ".join(results)

        return check

    for name in (18, 26):
        stages.append(
            _stage(f"cross sections are simple closed curves ({name}-adjacency)", cycles(name))
        )

    def contraction(name: int) -> Callable[[], tuple[bool, str]]:
        def check() -> tuple[bool, str]:
            cert = mss18_contraction(name)
            if tamper is not None:
                cert = tamper(cert)
            verdict = is_contraction(cert)
            if verdict.accepted:
                return True, f"q = {verdict.basepoint}, length {cert.m}"
            return False, f"rejected ({verdict.condition}): {verdict.detail}"

        return check

    for name in (18, 26):
        stages.append(
            _stage(f"built-in certificate is a {name}-contraction", contraction(name))
        )

    if include_search:

        def independent() -> tuple[bool, str]:
            outcome = _search.guided_search(mss18(18))
            if outcome.verdict is not _search.CONTRACTIBLE:
                return False, f"search verdict: {outcome.verdict.value}"
            witness = outcome.witness
            verdict = is_contraction(witness)
            ok = verdict.accepted and witness.m <= 3
            return ok, (
                f"witness of length {witness.m} to q = {verdict.basepoint},"
                f" verified={verdict.accepted}"
            )

        stages.append(_stage("independent witness by guided search (18)", independent))

    return RefutationReport(REFUTED_CLAIM, tuple(stages))

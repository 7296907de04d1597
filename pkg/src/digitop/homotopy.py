"""Homotopy certificates and their verification.

A certificate is a finite sequence of map tables F_0 .. F_m between two
fixed images. It verifies as a homotopy from f to g when three
conditions hold:

  endpoints        F_0 = f and F_m = g;
  path             for each point x, consecutive values F_t(x) and
                   F_{t+1}(x) are equal or adjacent in the codomain;
  step-continuity  every F_t is a continuous map.

Rejections carry the first violated condition together with a concrete
witness, so a failed certificate can be audited against the definition
without re-running the verifier.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .image import DigitalImage, adjacent_pairs
from .lattice import Point, adjacent
from .mapping import DigitalMap, constant_map, identity_map

ENDPOINTS = "endpoints"
PATH = "path"
STEP_CONTINUITY = "step-continuity"


@dataclass(frozen=True)
class Homotopy:
    """A time-indexed sequence of m+1 map tables between fixed images.

    Zero-length certificates (a single step) are allowed and verify
    exactly when f = g.
    """

    steps: tuple[DigitalMap, ...]

    def __post_init__(self) -> None:
        if not self.steps:
            raise ValueError("a homotopy needs at least one step")
        first = self.steps[0]
        for step in self.steps[1:]:
            if step.domain != first.domain or step.codomain != first.codomain:
                raise ValueError("all steps must share one domain and codomain")

    @property
    def domain(self) -> DigitalImage:
        return self.steps[0].domain

    @property
    def codomain(self) -> DigitalImage:
        return self.steps[0].codomain

    @property
    def m(self) -> int:
        return len(self.steps) - 1


def homotopy(steps: Iterable[DigitalMap]) -> Homotopy:
    return Homotopy(tuple(steps))


@dataclass(frozen=True)
class Verdict:
    """Outcome of a certificate check, with a counterexample on rejection.

    ``condition`` names the first violated condition; ``x``/``x2``/``t``
    locate it. ``basepoint`` is the contraction target on an accepted
    contraction check.
    """

    accepted: bool
    condition: str | None = None
    x: Point | None = None
    x2: Point | None = None
    t: int | None = None
    detail: str = ""
    basepoint: Point | None = None

    def __bool__(self) -> bool:
        return self.accepted


def _check_same_images(F: Homotopy, f: DigitalMap, g: DigitalMap) -> None:
    for end in (f, g):
        if end.domain != F.domain or end.codomain != F.codomain:
            raise ValueError("endpoint maps must share the certificate's images")


def verify_homotopy(F: Homotopy, f: DigitalMap, g: DigitalMap) -> Verdict:
    """Check all three homotopy conditions for F between f and g.

    Conditions are checked in definition order and, within a condition,
    in lexicographic point order, so the reported witness is
    deterministic.
    """
    _check_same_images(F, f, g)
    m = F.m
    steps = F.steps

    for t, end in ((0, f), (m, g)):
        for x in F.domain.points:
            got, want = steps[t](x), end(x)
            if got != want:
                return Verdict(
                    False,
                    condition=ENDPOINTS,
                    x=x,
                    t=t,
                    detail=f"F({x},{t}) = {got} but the endpoint map sends {x} to {want}",
                )

    lam = F.codomain.adjacency
    for x in F.domain.points:
        for t in range(m):
            a, b = steps[t](x), steps[t + 1](x)
            if a != b and not adjacent(a, b, lam):
                return Verdict(
                    False,
                    condition=PATH,
                    x=x,
                    t=t,
                    detail=(
                        f"F({x},{t}) = {a} and F({x},{t + 1}) = {b}"
                        " are neither equal nor adjacent"
                    ),
                )

    pairs = adjacent_pairs(F.domain)
    for t, step in enumerate(steps):
        for x, y in pairs:
            a, b = step(x), step(y)
            if a != b and not adjacent(a, b, lam):
                return Verdict(
                    False,
                    condition=STEP_CONTINUITY,
                    x=x,
                    x2=y,
                    t=t,
                    detail=(
                        f"step {t} is not continuous: {x} and {y} are adjacent"
                        f" but their values {a} and {b} are neither equal nor adjacent"
                    ),
                )

    return Verdict(True, detail=f"homotopy of length {m} verified")


def is_contraction(F: Homotopy) -> Verdict:
    """Accept iff F is a homotopy from the identity to a constant map.

    The accepted verdict reports the contraction target. Requires a
    self-certificate: equal domain and codomain, same adjacency.
    """
    if F.domain != F.codomain:
        raise ValueError("a contraction certificate must be a self-homotopy")
    ident = identity_map(F.domain)
    first = F.steps[0]
    if first != ident:
        x = next(p for p in F.domain.points if first(p) != p)
        return Verdict(
            False,
            condition=ENDPOINTS,
            x=x,
            t=0,
            detail=f"first step is not the identity: it sends {x} to {first(x)}",
        )
    last_values = set(F.steps[-1].values)
    if len(last_values) != 1:
        return Verdict(
            False,
            condition=ENDPOINTS,
            t=F.m,
            detail=f"last step is not constant: its image has {len(last_values)} points",
        )
    q = last_values.pop()
    verdict = verify_homotopy(F, ident, constant_map(F.domain, q))
    if not verdict.accepted:
        return verdict
    return Verdict(
        True, basepoint=q, detail=f"contraction to {q} in {F.m} steps verified"
    )


def reverse(F: Homotopy) -> Homotopy:
    """The certificate run backwards; a homotopy from g to f."""
    return Homotopy(tuple(reversed(F.steps)))


def concatenate(F: Homotopy, G: Homotopy) -> Homotopy:
    """Join two certificates whose junction steps agree.

    The result has length m_F + m_G; it verifies whenever both parts do.
    """
    if F.domain != G.domain or F.codomain != G.codomain:
        raise ValueError("certificates must share domain and codomain")
    if F.steps[-1] != G.steps[0]:
        raise ValueError("junction mismatch: F ends at a different map than G starts")
    return Homotopy(F.steps + G.steps[1:])

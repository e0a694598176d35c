"""Arc diagrams, crossing detection, the three-part Sturm verdict, and
exhaustive enumeration of small Sturm permutations."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _orderings

from .errors import BoundExceeded
from .perm import Permutation, index_recursion, invert

DEFAULT_ENUMERATION_BOUND = 9


@dataclass(frozen=True)
class Arc:
    left: int
    right: int
    side: str  # "above" or "below"


@dataclass(frozen=True)
class ArcDiagram:
    """Axis visit order and the alternating half-circle arcs joining it."""

    visits: tuple[int, ...]
    arcs: tuple[Arc, ...]


def arc_diagram(p: Permutation) -> ArcDiagram:
    """Arcs join consecutive visits p_k = sigma^{-1}(k); odd arcs run above."""
    visits = invert(p).images
    arcs = []
    for k in range(len(visits) - 1):
        a, b = visits[k], visits[k + 1]
        arcs.append(Arc(min(a, b), max(a, b), "above" if k % 2 == 0 else "below"))
    return ArcDiagram(visits=visits, arcs=tuple(arcs))


def crossings(diagram: ArcDiagram) -> list[tuple[int, int]]:
    """Pairs of same-side arc indices whose endpoint intervals strictly interleave.

    Arcs sharing an axis point never land on the same side, so the strict
    interleaving test is the whole story.
    """
    out = []
    arcs = diagram.arcs
    for i in range(len(arcs)):
        for j in range(i + 1, len(arcs)):
            a, b = arcs[i], arcs[j]
            if a.side != b.side:
                continue
            if a.left < b.left < a.right < b.right or b.left < a.left < b.right < a.right:
                out.append((i, j))
    return out


@dataclass(frozen=True)
class SturmValidation:
    """Independent results of the three defining checks; failures are data."""

    dissipative: bool
    meander: bool
    crossing_count: int
    morse: bool
    morse_vector: tuple[int, ...] | None
    first_negative: int | None
    anchor_ok: bool

    @property
    def verdict(self) -> bool:
        return self.dissipative and self.meander and self.morse


def validate(p: Permutation) -> SturmValidation:
    """Evaluate dissipativeness, the meander property, and the Morse property.

    The index recursion only makes sense once both endpoints are fixed, so
    the Morse check is skipped (reported false) for non-dissipative input;
    the meander check is always performed.
    """
    dissipative = p(1) == 1 and p(p.n) == p.n
    cross = crossings(arc_diagram(p))
    morse_vector = None
    first_negative = None
    anchor_ok = False
    morse = False
    if dissipative:
        vec = index_recursion(invert(p).images)
        morse_vector = tuple(vec)
        anchor_ok = vec[-1] == 0
        for pos, value in enumerate(vec, start=1):
            if value < 0:
                first_negative = pos
                break
        morse = anchor_ok and first_negative is None
    return SturmValidation(
        dissipative=dissipative,
        meander=not cross,
        crossing_count=len(cross),
        morse=morse,
        morse_vector=morse_vector,
        first_negative=first_negative,
        anchor_ok=anchor_ok,
    )


def enumerate_sturm(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[Permutation]:
    """All Sturm permutations of {1..n}, lexicographic in one-line notation.

    Brute force over the middle entries; both endpoints are pinned by
    dissipativeness, which prunes the search from n! to (n-2)! candidates.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"Sturm permutations need odd positive size, got {n}")
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the enumeration bound {bound}")
    if n == 1:
        return [Permutation((1,))]
    found = []
    for middle in _orderings(range(2, n)):
        p = Permutation((1, *middle, n))
        if validate(p).verdict:
            found.append(p)
    return found

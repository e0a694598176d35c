"""Permutations on {1..N} with the index and zero-number recursions.

Equilibrium labels are 1-based positions in the boundary order at x=0
throughout the package, so a permutation read as "position at x=0 of the
k-th equilibrium at x=1" carries the complete combinatorial data.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    AnchorMismatch,
    EmptyInput,
    EqualLabels,
    MalformedCycle,
    NegativeDimension,
    NotABijection,
    NotDissipative,
    SizeMismatch,
    SymmetryViolation,
)


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..N} in one-line notation: images[k-1] = sigma(k)."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise EmptyInput("a permutation needs at least one entry")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise NotABijection(f"{list(images)} is not a bijection of 1..{len(images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.images)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def invert(p: Permutation) -> Permutation:
    images = [0] * p.n
    for k, v in enumerate(p.images, start=1):
        images[v - 1] = k
    return Permutation(tuple(images))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Group composition (p o q)(k) = p(q(k))."""
    if p.n != q.n:
        raise SizeMismatch(f"cannot compose sizes {p.n} and {q.n}")
    return Permutation(tuple(p(q(k)) for k in range(1, p.n + 1)))


def reversal(n: int) -> Permutation:
    """The order-reversing involution k -> N+1-k."""
    return Permutation(tuple(range(n, 0, -1)))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_SIZE_RE = re.compile(r"\bn\s*=\s*(\d+)")


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation, or cycles behind an explicit "cycles:" prefix.

    One-line text is whitespace-separated integers.  Cycle text looks like
    "cycles: (2 4)(3 5) n=5"; the size is mandatory because fixed points do
    not appear in cycles.  The prefix is required: bare parenthesized lists
    are ambiguous between the two notations.
    """
    stripped = text.strip()
    if not stripped:
        raise EmptyInput("empty permutation text")
    if stripped.startswith("cycles:"):
        return _parse_cycles(stripped[len("cycles:"):])
    try:
        images = tuple(int(tok) for tok in stripped.split())
    except ValueError as exc:
        raise NotABijection(f"not whitespace-separated integers: {text!r}") from exc
    return Permutation(images)


def _parse_cycles(body: str) -> Permutation:
    size_match = _SIZE_RE.search(body)
    if not size_match:
        raise MalformedCycle("cycle notation needs an explicit size, e.g. n=5")
    n = int(size_match.group(1))
    if n < 1:
        raise MalformedCycle(f"size n={n} must be positive")
    rest = body[: size_match.start()] + body[size_match.end():]
    groups = _CYCLE_RE.findall(rest)
    leftover = _CYCLE_RE.sub(" ", rest).strip()
    if leftover:
        raise MalformedCycle(f"unexpected text in cycle notation: {leftover!r}")
    images = list(range(1, n + 1))
    seen: set[int] = set()
    for group in groups:
        try:
            members = [int(tok) for tok in group.split()]
        except ValueError as exc:
            raise MalformedCycle(f"non-integer entry in cycle ({group})") from exc
        if not members:
            raise MalformedCycle("empty cycle")
        for a in members:
            if not 1 <= a <= n:
                raise MalformedCycle(f"cycle entry {a} outside 1..{n}")
            if a in seen:
                raise MalformedCycle(f"entry {a} appears twice across cycles")
            seen.add(a)
        for a, b in zip(members, members[1:] + members[:1]):
            images[a - 1] = b
    return Permutation(tuple(images))


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def index_recursion(inverse_images: tuple[int, ...]) -> list[int]:
    """Raw forward recursion for the unstable dimensions, anchored at 0.

    Entry k-1 belongs to position k; no anchor or sign conditions are
    enforced here, callers decide what a failed anchor means.
    """
    out = [0]
    for k in range(1, len(inverse_images)):
        parity = 1 if k % 2 == 1 else -1
        out.append(out[-1] + parity * _sign(inverse_images[k] - inverse_images[k - 1]))
    return out


def morse_indices(p: Permutation) -> tuple[int, ...]:
    """Unstable dimensions i_1..i_N of the equilibria in x=0 order.

    Both endpoints must be fixed by the permutation, and the recursion has
    to land back on zero at the last position; otherwise no attractor
    realizes the input and the anchors are meaningless.
    """
    if p(1) != 1 or p(p.n) != p.n:
        raise NotDissipative(f"sigma(1)={p(1)}, sigma(N)={p(p.n)}: both ends must be fixed")
    vec = index_recursion(invert(p).images)
    if vec[-1] != 0:
        raise AnchorMismatch(f"index recursion ends at {vec[-1]}, not 0")
    return tuple(vec)


@dataclass(frozen=True)
class ZeroData:
    """Morse indices plus the symmetric matrix of unsigned zero numbers."""

    morse: tuple[int, ...]
    z: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.morse)

    def zero(self, j: int, k: int) -> int:
        """Unsigned zero number of the difference of equilibria j and k (1-based)."""
        return self.z[j - 1][k - 1]

    def index(self, k: int) -> int:
        return self.morse[k - 1]


def zero_matrix(p: Permutation) -> ZeroData:
    """Zero numbers of all equilibrium differences.

    Each column is filled twice, upward from row 1 and downward from row N,
    with the Morse index on the diagonal.  The two sweeps overlap on nothing,
    so symmetry of the result is a genuine cross-check: any disagreement
    certifies that the permutation is not Sturm.
    """
    morse = morse_indices(p)
    n = p.n
    inv = invert(p).images

    def step(j: int, k: int) -> int:
        # transition from row j to row j+1 in column k; requires k not in {j, j+1}
        parity = 1 if j % 2 == 1 else -1
        return parity * (_sign(inv[j] - inv[k - 1]) - _sign(inv[j - 1] - inv[k - 1])) // 2

    z = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        for j in range(1, k - 1):
            z[j][k - 1] = z[j - 1][k - 1] + step(j, k)
        for j in range(n - 1, k, -1):
            z[j - 1][k - 1] = z[j][k - 1] - step(j, k)
        z[k - 1][k - 1] = morse[k - 1]
    for j in range(n):
        for k in range(j + 1, n):
            if z[j][k] != z[k][j]:
                raise SymmetryViolation(
                    f"z[{j + 1},{k + 1}]={z[j][k]} but z[{k + 1},{j + 1}]={z[k][j]}: not Sturm"
                )
    return ZeroData(morse=morse, z=tuple(tuple(row) for row in z))


@dataclass(frozen=True)
class SignedZ:
    """An unsigned zero number together with the sign of the difference at x=0."""

    value: int
    sign: str

    def __str__(self) -> str:
        return f"{self.value}{self.sign}"


def signed_zero(zd: ZeroData, w: int, v: int) -> SignedZ:
    """Zero number of w - v, signed positive when w sits above v at x=0.

    Labels are positions in the x=0 order, so the sign is plain label order.
    """
    if w == v:
        raise EqualLabels(f"signed zero number of {w} against itself")
    return SignedZ(value=zd.zero(w, v), sign="+" if w > v else "-")


def trivial_equivalences(p: Permutation) -> tuple[Permutation, Permutation, Permutation, Permutation]:
    """Orbit of p under the Klein four-group of attractor symmetries.

    Returns (p, p^-1, k p k, k p^-1 k) with k the reversal.  Inversion
    realizes the space reflection x -> 1-x, conjugation by k the sign flip
    u -> -u, and the last entry their composition.
    """
    inv = invert(p)
    k = reversal(p.n)
    return (p, inv, compose(k, compose(p, k)), compose(k, compose(inv, k)))


def chafee_infante(n: int) -> Permutation:
    """The minimal n-dimensional attractor's involution on 2n+1 letters.

    Built from the transpositions (2m, 2n+2-2m) for m = 1..floor(n/2); the
    odd letters stay fixed.
    """
    if n < 0:
        raise NegativeDimension(f"dimension {n} < 0")
    images = list(range(1, 2 * n + 2))
    for m in range(1, n // 2 + 1):
        a, b = 2 * m, 2 * n + 2 - 2 * m
        images[a - 1], images[b - 1] = images[b - 1], images[a - 1]
    return Permutation(tuple(images))

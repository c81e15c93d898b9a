"""Exact weight arithmetic for the odd orthogonal root systems B_n.

Everything is written in the orthogonal coordinates L_1, ..., L_n.  The
weight lattice of Spin(2n+1) is generated by L_1, ..., L_n together with
the half-spin weight (L_1 + ... + L_n)/2, so a weight is a vector
(k_1/2, ..., k_n/2) whose doubled coordinates k_i are integers that are
either all even or all odd.  Weights are stored as those doubled integer
tuples; all arithmetic stays in plain integers and is exact.

The parabolic subgroup used for the quadric Q^(2n-1) is the one attached
to the first simple root.  Its Levi factor acts on coordinates 2..n as a
copy of the rank n-1 odd orthogonal group, while the first coordinate is
a twisting charge.  Dominance for the full group and for the Levi factor
are therefore:

    full group:  w_1 >= w_2 >= ... >= w_n >= 0
    Levi:        w_2 >= ... >= w_n >= 0        (w_1 unconstrained)

Simple roots are a_i = L_i - L_{i+1} for i < n and a_n = L_n, so the
coroot pairings of a weight w are w_i - w_{i+1} (i < n) and 2 w_n (i = n);
the parity rule guarantees both are integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Doubled = tuple[int, ...]


class RankError(ValueError):
    """Requested root system rank is outside the supported range."""


class WeightError(ValueError):
    """Doubled coordinates violate the all-even-or-all-odd parity rule."""


class DominanceError(ValueError):
    """A dominant (or Levi-dominant) weight was required."""


@dataclass(frozen=True)
class RootSystemB:
    """Root datum of type B_n in doubled L-coordinates."""

    rank: int
    simple_roots: tuple[Doubled, ...]
    positive_roots: tuple[Doubled, ...]
    rho: Doubled
    fundamental_weights: tuple[Doubled, ...]

    def __repr__(self) -> str:  # keeps pytest diffs readable
        return f"RootSystemB(rank={self.rank})"


@lru_cache(maxsize=None)
def _build(n: int) -> RootSystemB:
    # Internal builder; rank 1 is allowed because the Levi factor of B_2
    # is a B_1, even though the public factory starts at rank 2.
    if n < 1:
        raise RankError(f"type B rank must be >= 1, got {n}")

    def unit(i: int, value: int) -> list[int]:
        v = [0] * n
        v[i] = value
        return v

    simple: list[Doubled] = []
    for i in range(n - 1):
        v = unit(i, 2)
        v[i + 1] = -2
        simple.append(tuple(v))
    simple.append(tuple(unit(n - 1, 2)))

    positive: list[Doubled] = []
    for i in range(n):
        for j in range(i + 1, n):
            d = unit(i, 2)
            d[j] = -2
            positive.append(tuple(d))
            s = unit(i, 2)
            s[j] = 2
            positive.append(tuple(s))
    for i in range(n):
        positive.append(tuple(unit(i, 2)))
    assert len(positive) == n * n

    total = [sum(r[i] for r in positive) for i in range(n)]
    assert all(t % 2 == 0 for t in total)
    rho = tuple(t // 2 for t in total)

    fundamental: list[Doubled] = []
    for i in range(1, n):
        fundamental.append(tuple([2] * i + [0] * (n - i)))
    fundamental.append(tuple([1] * n))

    rs = RootSystemB(n, tuple(simple), tuple(positive), rho, tuple(fundamental))
    assert all(pairing(rs, rho, i) == 1 for i in range(1, n + 1))
    return rs


def make_root_system(n: int) -> RootSystemB:
    """Root datum of B_n for the quadric Q^(2n-1); requires n >= 2."""
    if n < 2:
        raise RankError(f"quadric root system needs rank >= 2, got {n}")
    return _build(n)


def levi_system(rs: RootSystemB) -> RootSystemB:
    """Semisimple part of the Levi factor, a B of rank one less."""
    return _build(rs.rank - 1)


def check_weight(rs: RootSystemB, w: Doubled) -> Doubled:
    """Validate length and parity of a doubled weight, returning it."""
    w = tuple(w)
    if len(w) != rs.rank:
        raise WeightError(f"expected {rs.rank} coordinates, got {len(w)}")
    parities = {c & 1 for c in w}
    if len(parities) > 1:
        raise WeightError(f"mixed parity in doubled coordinates {w}")
    return w


def pairing(rs: RootSystemB, w: Doubled, i: int) -> int:
    """Coroot pairing <w, a_i^v> for the i-th simple root (1-indexed)."""
    w = check_weight(rs, w)
    n = rs.rank
    if not 1 <= i <= n:
        raise IndexError(f"simple root index {i} outside 1..{n}")
    if i < n:
        diff = w[i - 1] - w[i]
        assert diff % 2 == 0
        return diff // 2
    return w[n - 1]


def reflect(rs: RootSystemB, w: Doubled, i: int) -> Doubled:
    """Simple reflection s_i: swap coordinates i, i+1 or negate the last."""
    n = rs.rank
    if i < n:
        lst = list(w)
        lst[i - 1], lst[i] = lst[i], lst[i - 1]
        return tuple(lst)
    return w[:-1] + (-w[-1],)


def is_g_dominant(rs: RootSystemB, w: Doubled) -> bool:
    w = check_weight(rs, w)
    return all(w[i] >= w[i + 1] for i in range(rs.rank - 1)) and w[-1] >= 0


def is_levi_dominant(rs: RootSystemB, w: Doubled) -> bool:
    w = check_weight(rs, w)
    return all(w[i] >= w[i + 1] for i in range(1, rs.rank - 1)) and w[-1] >= 0


def add(u: Doubled, v: Doubled) -> Doubled:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub(u: Doubled, v: Doubled) -> Doubled:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def neg(u: Doubled) -> Doubled:
    return tuple(-a for a in u)


def dot(u: Doubled, v: Doubled) -> int:
    # Four times the true inner product; consistent scaling cancels in
    # every ratio the engine takes.
    return sum(a * b for a, b in zip(u, v, strict=True))


def weight_str(w: Doubled) -> str:
    """Render doubled coordinates as exact halves, e.g. (-5/2, 1/2, 1/2)."""
    parts = [str(c // 2) if c % 2 == 0 else f"{c}/2" for c in w]
    return "(" + ", ".join(parts) + ")"

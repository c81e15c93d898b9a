"""Exact representation calculus for the B_n root systems.

Characters are finite multisets of doubled weights, stored as plain dicts
mapping coordinate tuples to positive integer multiplicities.  Sums of
irreducibles are dicts keyed by dominant highest weights.  Dimensions come
from the Weyl product formula, weight diagrams from Freudenthal's
recursion, and arbitrary characters are decomposed greedily: repeatedly
strip the full diagram of the lexicographically largest weight present,
which for a genuine character is always a highest weight.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb

from .roots import (
    Doubled,
    DominanceError,
    RootSystemB,
    add,
    check_weight,
    dot,
    is_g_dominant,
    sub,
    weight_str,
)

Character = dict[Doubled, int]
IrrepSum = dict[Doubled, int]


class CharacterError(ValueError):
    """Input multiset is not the character of a genuine representation."""


def _require_dominant(rs: RootSystemB, mu: Doubled) -> Doubled:
    mu = check_weight(rs, mu)
    if not is_g_dominant(rs, mu):
        raise DominanceError(f"{weight_str(mu)} is not dominant for B_{rs.rank}")
    return mu


def weyl_dimension(rs: RootSystemB, mu: Doubled) -> int:
    """Dimension of the irreducible with highest weight mu (Weyl formula)."""
    mu = _require_dominant(rs, mu)
    shifted = add(mu, rs.rho)
    result = Fraction(1)
    for alpha in rs.positive_roots:
        result *= Fraction(dot(shifted, alpha), dot(rs.rho, alpha))
    assert result.denominator == 1 and result > 0
    return int(result)


def dominant_conjugate(w: Doubled) -> Doubled:
    """The dominant point of the Weyl orbit of w.

    The Weyl group of B_n is all signed permutations, so the dominant
    representative just sorts the absolute values downwards.
    """
    return tuple(sorted((abs(c) for c in w), reverse=True))


def weyl_orbit(rs: RootSystemB, w: Doubled) -> frozenset[Doubled]:
    """Full signed-permutation orbit of a weight."""
    w = check_weight(rs, w)
    base = dominant_conjugate(w)
    out: set[Doubled] = set()
    for perm in set(itertools.permutations(base)):
        signs = [(c, -c) if c else (0,) for c in perm]
        out.update(itertools.product(*signs))
    return frozenset(out)


@lru_cache(maxsize=None)
def _dominant_weight_multiplicities(
    rs: RootSystemB, mu: Doubled
) -> tuple[tuple[Doubled, int], ...]:
    # Dominant weights of V(mu): close {mu} under subtracting positive
    # roots while staying dominant, then run Freudenthal's recursion from
    # the top of the poset downwards.
    dominants = {mu}
    frontier = [mu]
    while frontier:
        nxt = []
        for lam in frontier:
            for alpha in rs.positive_roots:
                cand = sub(lam, alpha)
                if is_g_dominant(rs, cand) and cand not in dominants:
                    dominants.add(cand)
                    nxt.append(cand)
        frontier = nxt

    shifted_mu = add(mu, rs.rho)
    top_norm = dot(shifted_mu, shifted_mu)
    # Sort by decreasing norm of lam + rho; mu comes first.
    ordered = sorted(
        dominants,
        key=lambda lam: dot(add(lam, rs.rho), add(lam, rs.rho)),
        reverse=True,
    )
    assert ordered[0] == mu

    mult: dict[Doubled, int] = {mu: 1}
    for lam in ordered[1:]:
        shifted = add(lam, rs.rho)
        denom = top_norm - dot(shifted, shifted)
        assert denom > 0
        numer = 0
        for alpha in rs.positive_roots:
            k = 1
            while True:
                probe = add(lam, tuple(k * a for a in alpha))
                m = mult.get(dominant_conjugate(probe), 0)
                if m == 0:
                    # root strings through a weight are unbroken, so the
                    # first zero multiplicity ends the ray
                    break
                numer += m * dot(probe, alpha)
                k += 1
        value, rem = divmod(2 * numer, denom)
        assert rem == 0
        mult[lam] = value
    return tuple(mult.items())


def freudenthal_multiplicities(rs: RootSystemB, mu: Doubled) -> Character:
    """Full weight diagram of V(mu) with multiplicities."""
    mu = _require_dominant(rs, mu)
    diagram: Character = {}
    for lam, m in _dominant_weight_multiplicities(rs, mu):
        for w in weyl_orbit(rs, lam):
            diagram[w] = m
    return diagram


def character_mass(c: Character) -> int:
    return sum(c.values())


def expand_irrep_sum(rs: RootSystemB, irreps: IrrepSum) -> Character:
    """Character of a direct sum of irreducibles."""
    out: Character = {}
    for mu, mult in irreps.items():
        for w, m in freudenthal_multiplicities(rs, mu).items():
            out[w] = out.get(w, 0) + mult * m
    return {w: m for w, m in out.items() if m}


def decompose_character(rs: RootSystemB, c: Character) -> IrrepSum:
    """Write a genuine character as a sum of irreducibles.

    Greedy highest-weight stripping: the lexicographically largest weight
    present in a character is dominant and is a highest weight, because
    every nonzero sum of positive roots is lexicographically positive.
    """
    remaining = {w: m for w, m in c.items() if m}
    if any(m < 0 for m in remaining.values()):
        raise CharacterError("negative multiplicity in input")
    out: IrrepSum = {}
    while remaining:
        top = max(remaining)
        if not is_g_dominant(rs, top):
            raise CharacterError(
                f"leading weight {weight_str(top)} is not dominant; "
                "input is not a character"
            )
        mult = remaining[top]
        for w, m in freudenthal_multiplicities(rs, top).items():
            left = remaining.get(w, 0) - mult * m
            if left < 0:
                raise CharacterError(
                    f"stripping V{weight_str(top)} drives {weight_str(w)} "
                    "negative; input is not a character"
                )
            if left:
                remaining[w] = left
            else:
                remaining.pop(w, None)
        out[top] = out.get(top, 0) + mult
    return out


def product_character(c1: Character, c2: Character) -> Character:
    out: Character = {}
    for w1, m1 in c1.items():
        for w2, m2 in c2.items():
            key = add(w1, w2)
            out[key] = out.get(key, 0) + m1 * m2
    return out


@lru_cache(maxsize=None)
def _tensor_cached(
    rs: RootSystemB, mu: Doubled, nu: Doubled
) -> tuple[tuple[Doubled, int], ...]:
    prod = product_character(
        freudenthal_multiplicities(rs, mu), freudenthal_multiplicities(rs, nu)
    )
    out = decompose_character(rs, prod)
    total = sum(m * weyl_dimension(rs, lam) for lam, m in out.items())
    assert total == weyl_dimension(rs, mu) * weyl_dimension(rs, nu)
    return tuple(sorted(out.items()))


def tensor_irreps(rs: RootSystemB, mu: Doubled, nu: Doubled) -> IrrepSum:
    """Decompose V(mu) (x) V(nu); dimensions are checked to multiply."""
    mu = _require_dominant(rs, mu)
    nu = _require_dominant(rs, nu)
    if (mu, nu) > (nu, mu):
        mu, nu = nu, mu
    return dict(_tensor_cached(rs, mu, nu))


def _weight_list(rs: RootSystemB, mu: Doubled) -> list[Doubled]:
    flat: list[Doubled] = []
    for w, m in sorted(freudenthal_multiplicities(rs, mu).items()):
        flat.extend([w] * m)
    return flat


@lru_cache(maxsize=None)
def _power_cached(
    rs: RootSystemB, k: int, mu: Doubled, alternating: bool
) -> tuple[tuple[Doubled, int], ...]:
    weights = _weight_list(rs, mu)
    d = len(weights)
    chooser = itertools.combinations if alternating else itertools.combinations_with_replacement
    char: Character = {}
    for combo in chooser(range(d), k):
        total = weights[combo[0]]
        for idx in combo[1:]:
            total = add(total, weights[idx])
        char[total] = char.get(total, 0) + 1
    out = decompose_character(rs, char)
    total_dim = sum(m * weyl_dimension(rs, lam) for lam, m in out.items())
    expected = comb(d, k) if alternating else comb(d + k - 1, k)
    assert total_dim == expected
    return tuple(sorted(out.items()))


def sym_power_irrep(rs: RootSystemB, k: int, mu: Doubled) -> IrrepSum:
    """Decompose Sym^k V(mu) via the explicit weight multiset."""
    if k < 0:
        raise ValueError("symmetric power degree must be >= 0")
    mu = _require_dominant(rs, mu)
    return dict(_power_cached(rs, k, mu, False))


def alt_power_irrep(rs: RootSystemB, k: int, mu: Doubled) -> IrrepSum:
    """Decompose Alt^k V(mu) via the explicit weight multiset."""
    if k < 0:
        raise ValueError("alternating power degree must be >= 0")
    mu = _require_dominant(rs, mu)
    return dict(_power_cached(rs, k, mu, True))

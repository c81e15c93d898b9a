"""Completely reducible homogeneous bundles on the odd quadric.

A bundle is a nonnegative integer combination of Levi-dominant weights.
The first coordinate of each weight is the twisting charge, the remaining
coordinates form a dominant weight of the rank n-1 Levi factor.  Tensor
products tensor the Levi parts and add charges, duals negate the charge
(the Levi irreducibles are self-dual in type B), and symmetric or
alternating powers expand the full weight multiset of the bundle and
decompose it charge by charge.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from . import reps
from .roots import (
    Doubled,
    RootSystemB,
    WeightError,
    add,
    check_weight,
    is_levi_dominant,
    levi_system,
    neg,
    weight_str,
)


@dataclass(frozen=True)
class LeviBundle:
    system: RootSystemB
    components: tuple[tuple[Doubled, int], ...]

    def __post_init__(self) -> None:
        for w, mult in self.components:
            check_weight(self.system, w)
            if not is_levi_dominant(self.system, w):
                raise WeightError(f"{weight_str(w)} is not Levi-dominant")
            if mult <= 0:
                raise ValueError(f"multiplicity of {weight_str(w)} must be positive")

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_dict(cls, rs: RootSystemB, comps: dict[Doubled, int]) -> "LeviBundle":
        return cls(rs, tuple(sorted((w, m) for w, m in comps.items() if m)))

    @classmethod
    def zero(cls, rs: RootSystemB) -> "LeviBundle":
        return cls(rs, ())

    @classmethod
    def irreducible(cls, rs: RootSystemB, w: Doubled) -> "LeviBundle":
        return cls.from_dict(rs, {tuple(w): 1})

    @classmethod
    def line(cls, rs: RootSystemB, a: int) -> "LeviBundle":
        """O(a), the a-th power of the hyperplane bundle."""
        return cls.irreducible(rs, (2 * a,) + (0,) * (rs.rank - 1))

    @classmethod
    def spinor_dual(cls, rs: RootSystemB) -> "LeviBundle":
        """The dual spinor bundle, all coordinates 1/2."""
        return cls.irreducible(rs, (1,) * rs.rank)

    @classmethod
    def spinor(cls, rs: RootSystemB) -> "LeviBundle":
        """The spinor bundle, dual of spinor_dual; equals spinor_dual(-1)."""
        return cls.irreducible(rs, (-1,) + (1,) * (rs.rank - 1))

    @classmethod
    def tangent(cls, rs: RootSystemB) -> "LeviBundle":
        """Tangent bundle of the quadric, charge 1 on the first Levi node."""
        return cls.irreducible(rs, (2, 2) + (0,) * (rs.rank - 2))

    # -- structure ------------------------------------------------------

    def as_dict(self) -> dict[Doubled, int]:
        return dict(self.components)

    @property
    def is_zero(self) -> bool:
        return not self.components

    def levi_part(self, w: Doubled) -> Doubled:
        return w[1:]

    def rank(self) -> int:
        levi = levi_system(self.system)
        return sum(m * reps.weyl_dimension(levi, w[1:]) for w, m in self.components)

    def weight_character(self) -> dict[Doubled, int]:
        """Full weight multiset of the bundle, charges included."""
        levi = levi_system(self.system)
        out: dict[Doubled, int] = {}
        for w, mult in self.components:
            charge = w[0]
            for lw, m in reps.freudenthal_multiplicities(levi, w[1:]).items():
                key = (charge,) + lw
                out[key] = out.get(key, 0) + mult * m
        return out

    # -- algebra ---------------------------------------------------------

    def __add__(self, other: "LeviBundle") -> "LeviBundle":
        assert self.system == other.system
        comps = self.as_dict()
        for w, m in other.components:
            comps[w] = comps.get(w, 0) + m
        return LeviBundle.from_dict(self.system, comps)

    def twist(self, a: int) -> "LeviBundle":
        """Tensor by O(a)."""
        return LeviBundle.from_dict(
            self.system,
            {(w[0] + 2 * a,) + w[1:]: m for w, m in self.components},
        )

    def dual(self) -> "LeviBundle":
        """Componentwise dual: charge negates, Levi part is self-dual."""
        return LeviBundle.from_dict(
            self.system, {(-w[0],) + w[1:]: m for w, m in self.components}
        )

    def tensor(self, other: "LeviBundle") -> "LeviBundle":
        assert self.system == other.system
        levi = levi_system(self.system)
        comps: dict[Doubled, int] = {}
        for w1, m1 in self.components:
            for w2, m2 in other.components:
                charge = w1[0] + w2[0]
                for tau, m in reps.tensor_irreps(levi, w1[1:], w2[1:]).items():
                    key = (charge,) + tau
                    comps[key] = comps.get(key, 0) + m1 * m2 * m
        out = LeviBundle.from_dict(self.system, comps)
        assert out.rank() == self.rank() * other.rank()
        return out

    def _power(self, k: int, alternating: bool) -> "LeviBundle":
        if k < 0:
            raise ValueError("power degree must be >= 0")
        if k == 0:
            return LeviBundle.line(self.system, 0)
        levi = levi_system(self.system)
        flat: list[Doubled] = []
        for w, m in sorted(self.weight_character().items()):
            flat.extend([w] * m)
        chooser = (
            itertools.combinations if alternating else itertools.combinations_with_replacement
        )
        char: dict[Doubled, int] = {}
        for combo in chooser(range(len(flat)), k):
            total = flat[combo[0]]
            for idx in combo[1:]:
                total = add(total, flat[idx])
            char[total] = char.get(total, 0) + 1
        # decompose charge block by charge block at the Levi level
        by_charge: dict[int, dict[Doubled, int]] = {}
        for w, m in char.items():
            by_charge.setdefault(w[0], {})[w[1:]] = m
        comps: dict[Doubled, int] = {}
        for charge, block in by_charge.items():
            for tau, m in reps.decompose_character(levi, block).items():
                comps[(charge,) + tau] = comps.get((charge,) + tau, 0) + m
        out = LeviBundle.from_dict(self.system, comps)
        d = self.rank()
        assert out.rank() == (comb(d, k) if alternating else comb(d + k - 1, k))
        return out

    def sym(self, k: int) -> "LeviBundle":
        """k-th symmetric power via the explicit weight multiset."""
        return self._power(k, alternating=False)

    def alt(self, k: int) -> "LeviBundle":
        """k-th alternating power via the explicit weight multiset."""
        return self._power(k, alternating=True)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for w, m in self.components:
            label = f"F{weight_str(w)}"
            parts.append(label if m == 1 else f"{m}*{label}")
        return " (+) ".join(parts)


def tensor_bundles(b1: LeviBundle, b2: LeviBundle) -> LeviBundle:
    return b1.tensor(b2)


def dual_bundle(b: LeviBundle) -> LeviBundle:
    return b.dual()

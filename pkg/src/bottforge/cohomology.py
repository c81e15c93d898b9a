"""Sheaf cohomology tables on the odd quadric Q^(2n-1).

Cohomology of a completely reducible bundle is the sum of single-degree
contributions of its irreducible components, so every table here is exact.
Ext groups reduce to cohomology of the twisted Hom bundle, and the Serre
duality report doubles as a global consistency oracle: the canonical
bundle of Q^(2n-1) is O(1-2n).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bott import bott_cohomology
from .bundles import LeviBundle
from .roots import Doubled, RootSystemB


@dataclass
class CohomologyTable:
    """Map degree -> (total dimension, highest weights with multiplicity)."""

    rows: dict[int, tuple[int, dict[Doubled, int]]] = field(default_factory=dict)

    def dims(self) -> dict[int, int]:
        return {i: d for i, (d, _) in sorted(self.rows.items()) if d}

    def dim(self, i: int) -> int:
        return self.rows.get(i, (0, {}))[0]

    def euler(self) -> int:
        return sum((-1) ** i * d for i, (d, _) in self.rows.items())

    @property
    def is_zero(self) -> bool:
        return not self.dims()

    def positive_degree_dims(self) -> dict[int, int]:
        return {i: d for i, d in self.dims().items() if i > 0}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CohomologyTable):
            return NotImplemented
        return self.normalized() == other.normalized()

    def normalized(self) -> dict[int, tuple[int, tuple[tuple[Doubled, int], ...]]]:
        return {
            i: (d, tuple(sorted(irr.items())))
            for i, (d, irr) in sorted(self.rows.items())
            if d
        }


def cohomology(bundle: LeviBundle) -> CohomologyTable:
    """Borel-Bott-Weil cohomology of a completely reducible bundle."""
    rs = bundle.system
    table = CohomologyTable()
    for w, mult in bundle.components:
        atom = bott_cohomology(rs, w)
        if atom is None:
            continue
        dim, irreps = table.rows.get(atom.degree, (0, {}))
        irreps = dict(irreps)
        irreps[atom.weight] = irreps.get(atom.weight, 0) + mult
        table.rows[atom.degree] = (dim + mult * atom.dim, irreps)
    return table


def ext_groups(e: LeviBundle, f: LeviBundle) -> CohomologyTable:
    """Ext^*(E, F) = H^*(E^v (x) F) for locally free E, F."""
    return cohomology(e.dual().tensor(f))


def euler_char(bundle: LeviBundle) -> int:
    return cohomology(bundle).euler()


def canonical_twist(rs: RootSystemB) -> int:
    """Degree a with canonical bundle O(a); on Q^(2n-1) this is 1-2n."""
    return 1 - 2 * rs.rank


def serre_check(bundle: LeviBundle) -> dict:
    """Verify dim H^i(B) = dim H^(d-i)(B^v (x) O(-d-ish)) degree by degree.

    Returns a report dict with per-degree pairs and an overall flag.
    """
    rs = bundle.system
    d = 2 * rs.rank - 1
    direct = cohomology(bundle).dims()
    twisted = cohomology(bundle.dual().twist(canonical_twist(rs))).dims()
    degrees = sorted(set(direct) | {d - i for i in twisted})
    per_degree = {}
    ok = True
    for i in degrees:
        lhs = direct.get(i, 0)
        rhs = twisted.get(d - i, 0)
        per_degree[i] = {"h_i": lhs, "dual_h_complement": rhs, "match": lhs == rhs}
        ok = ok and lhs == rhs
    return {"dimension": d, "per_degree": per_degree, "ok": ok}

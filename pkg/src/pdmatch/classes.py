"""Detection of the structured instance classes.

Monotonicity is decided by a canonical sort: if some pair of permutations
makes every row and column non-decreasing, the rows form a chain under the
componentwise order, and so do the columns.  Comparability of rows does not
depend on the column order, and inside a chain equal sums mean equal vectors,
so sorting columns by sum and then rows by sum always produces a monotone
matrix when one exists.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .instance import Instance


@dataclass(frozen=True)
class TypeProfile:
    tau: tuple[int, ...]
    count: int
    jobs: tuple[int, ...]


@dataclass(frozen=True)
class ClassReport:
    monotone_order: tuple[tuple[int, ...], tuple[int, ...]] | None
    is_udep: bool
    udep_params: tuple[tuple[int, frozenset[int]], ...] | None
    is_vdep: bool
    vdep_params: tuple[tuple[int, frozenset[int]], ...] | None
    udep_complete: bool
    tolerance_set: tuple[int, ...]
    type_profiles: tuple[TypeProfile, ...]

    @property
    def monotonizable(self) -> bool:
        return self.monotone_order is not None

    @property
    def type_count(self) -> int:
        return len(self.type_profiles)

    @property
    def uniform(self) -> bool:
        return len(self.tolerance_set) == 1 and self.tolerance_set[0] >= 1

    def flags(self) -> str:
        """Compact label used in bench reports, e.g. ``mono|udep|T=2|t=3``."""
        parts = []
        if self.monotonizable:
            parts.append("mono")
        if self.is_udep:
            parts.append("udep")
        if self.is_vdep:
            parts.append("vdep")
        parts.append(f"T={len(self.tolerance_set)}")
        parts.append(f"t={self.type_count}")
        return "|".join(parts)

    def to_dict(self) -> dict:
        def params(p):
            if p is None:
                return None
            return [{"b": b, "set": sorted(s)} for b, s in p]

        return {
            "monotonizable": self.monotonizable,
            "monotone_order": None if self.monotone_order is None else {
                "jobs": list(self.monotone_order[0]),
                "machines": list(self.monotone_order[1]),
            },
            "is_udep": self.is_udep,
            "udep": params(self.udep_params),
            "is_vdep": self.is_vdep,
            "vdep": params(self.vdep_params),
            "udep_complete": self.udep_complete,
            "uniform": self.uniform,
            "tolerance_set": list(self.tolerance_set),
            "type_count": self.type_count,
            "type_profiles": [{"tau": list(p.tau), "count": p.count}
                              for p in self.type_profiles],
        }


def is_monotone(b: np.ndarray) -> bool:
    """Rows and columns non-decreasing in the given order."""
    b = np.asarray(b)
    return bool(np.all(np.diff(b, axis=0) >= 0) and np.all(np.diff(b, axis=1) >= 0))


def monotone_order(b: np.ndarray) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Job and machine orders making ``b`` monotone, or ``None`` if none exist."""
    b = np.asarray(b)
    n, m = b.shape
    if n == 0 or m == 0:
        return tuple(range(n)), tuple(range(m))
    # np.lexsort uses the last key as primary
    cols = np.lexsort(tuple(b[::-1, :]) + (b.sum(axis=0),))
    bc = b[:, cols]
    rows = np.lexsort(tuple(bc.T[::-1, :]) + (bc.sum(axis=1),))
    if not is_monotone(bc[rows]):
        return None
    return tuple(int(x) for x in rows), tuple(int(x) for x in cols)


def _single_value_lines(b: np.ndarray) -> tuple[tuple[int, frozenset[int]], ...] | None:
    """Per row: (the row's only non-zero value, support) or ``None`` if some row
    has two different non-zero values.  All-zero rows report value 0."""
    out = []
    for row in b:
        nz = np.flatnonzero(row)
        vals = np.unique(row[nz])
        if len(vals) > 1:
            return None
        out.append((int(vals[0]) if len(vals) else 0, frozenset(int(x) for x in nz)))
    return tuple(out)


def type_profiles(b: np.ndarray) -> tuple[TypeProfile, ...]:
    """Distinct rows in order of first appearance, with their job lists."""
    groups: dict[tuple[int, ...], list[int]] = {}
    for j, row in enumerate(np.asarray(b).tolist()):
        groups.setdefault(tuple(row), []).append(j)
    return tuple(TypeProfile(tau, len(js), tuple(js)) for tau, js in groups.items())


def classify(inst: Instance) -> ClassReport:
    b = inst.b
    udep = _single_value_lines(b)
    vdep = _single_value_lines(b.T)
    complete = udep is not None and all(
        v > 0 and len(s) == inst.m for v, s in udep)
    return ClassReport(
        monotone_order=monotone_order(b),
        is_udep=udep is not None,
        udep_params=udep,
        is_vdep=vdep is not None,
        vdep_params=vdep,
        udep_complete=complete,
        tolerance_set=tuple(int(x) for x in np.unique(b)),
        type_profiles=type_profiles(b),
    )

"""Instances, matchings, JSON I/O and the PD-matching feasibility checks.

An instance is an ``n x m`` matrix of non-negative integer tolerances, where
``b[j, i]`` is the largest degree machine ``i`` may have while job ``j`` is
assigned to it.  A zero entry forbids the pair.  Indices are 0-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import InstanceFormatError, InvalidMatchingError

_INT64_MAX = np.iinfo(np.int64).max


@dataclass(frozen=True, eq=False)
class Instance:
    """Immutable tolerance matrix.  ``b`` is stored as a read-only int64 array."""

    b: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.b, dtype=np.int64, copy=True)
        if arr.ndim != 2:
            raise ValueError(f"tolerance matrix must be 2-D, got shape {arr.shape}")
        if arr.size and arr.min() < 0:
            j, i = np.argwhere(arr < 0)[0]
            raise ValueError(f"negative tolerance at ({j},{i})")
        arr.setflags(write=False)
        object.__setattr__(self, "b", arr)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], m: int | None = None) -> Instance:
        """Build from nested lists; ``m`` is needed only when there are no rows."""
        if len(rows) == 0:
            return cls(np.zeros((0, m or 0), dtype=np.int64))
        return cls(np.asarray(rows, dtype=np.int64))

    @property
    def n(self) -> int:
        return self.b.shape[0]

    @property
    def m(self) -> int:
        return self.b.shape[1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Instance):
            return NotImplemented
        return self.b.shape == other.b.shape and bool(np.array_equal(self.b, other.b))

    def __hash__(self) -> int:
        return hash((self.b.shape, self.b.tobytes()))

    def __repr__(self) -> str:
        return f"Instance(n={self.n}, m={self.m}, b={self.b.tolist()})"

    def permuted(self, job_order: Sequence[int], machine_order: Sequence[int]) -> Instance:
        """Return the instance whose row ``r`` is job ``job_order[r]`` and column
        ``c`` is machine ``machine_order[c]``."""
        return Instance(self.b[np.ix_(np.asarray(job_order, dtype=np.intp),
                                      np.asarray(machine_order, dtype=np.intp))])


@dataclass(frozen=True)
class Matching:
    """A set of ``(job, machine)`` edges."""

    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "edges", frozenset((int(j), int(i)) for j, i in self.edges))

    @classmethod
    def from_assignment(cls, assignment: Iterable[int]) -> Matching:
        """Build from a per-job machine array where ``-1`` means unmatched."""
        return cls(frozenset((j, int(i)) for j, i in enumerate(assignment) if i >= 0))

    @property
    def size(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.sorted_edges())

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degrees(self, m: int) -> np.ndarray:
        deg = np.zeros(m, dtype=np.int64)
        for _, i in self.edges:
            deg[i] += 1
        return deg

    def assignment(self, n: int) -> np.ndarray:
        """Per-job machine index, ``-1`` for unmatched jobs.  Assumes each job
        appears at most once."""
        out = np.full(n, -1, dtype=np.int64)
        for j, i in self.edges:
            out[j] = i
        return out

    def machine_jobs(self, m: int) -> list[list[int]]:
        """Jobs hosted by every machine, in ascending job order."""
        hosted: list[list[int]] = [[] for _ in range(m)]
        for j, i in self.sorted_edges():
            hosted[i].append(j)
        return hosted

    def relabeled(self, job_order: Sequence[int], machine_order: Sequence[int]) -> Matching:
        """Map edges of a permuted instance (see :meth:`Instance.permuted`) back
        to the original indices."""
        return Matching(frozenset((int(job_order[j]), int(machine_order[i]))
                                  for j, i in self.edges))


# ---------------------------------------------------------------------------
# JSON documents


def _decode(raw: bytes | str) -> object:
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InstanceFormatError("input is not UTF-8", (exc.start,)) from exc
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"malformed JSON: {exc.msg}", (exc.lineno, exc.colno)) from exc


def _check_count(doc: dict, key: str) -> int:
    if key not in doc:
        raise InstanceFormatError(f"missing field '{key}'")
    val = doc[key]
    if isinstance(val, bool) or not isinstance(val, int) or val < 0:
        raise InstanceFormatError(f"field '{key}' must be a non-negative integer")
    return val


def parse_instance(raw: bytes | str) -> Instance:
    """Parse ``{"n": .., "m": .., "b": [[..], ..]}``.

    Raises :class:`InstanceFormatError` carrying the offending position for
    malformed JSON, dimension mismatches and negative or non-integer entries.
    """
    doc = _decode(raw)
    if not isinstance(doc, dict):
        raise InstanceFormatError("instance must be a JSON object")
    n = _check_count(doc, "n")
    m = _check_count(doc, "m")
    rows = doc.get("b")
    if not isinstance(rows, list):
        raise InstanceFormatError("field 'b' must be a list of rows")
    if len(rows) != n:
        raise InstanceFormatError(f"expected {n} rows, found {len(rows)}")
    for j, row in enumerate(rows):
        if not isinstance(row, list):
            raise InstanceFormatError("row is not a list", (j,))
        if len(row) != m:
            raise InstanceFormatError(f"expected {m} entries, found {len(row)}", (j,))
        for i, val in enumerate(row):
            if isinstance(val, bool) or not isinstance(val, int):
                raise InstanceFormatError("non-integer entry", (j, i))
            if val < 0:
                raise InstanceFormatError("negative entry", (j, i))
            if val > _INT64_MAX:
                raise InstanceFormatError("entry exceeds 64-bit range", (j, i))
    return Instance.from_rows(rows, m=m)


def dump_instance(inst: Instance) -> str:
    return json.dumps({"n": inst.n, "m": inst.m, "b": inst.b.tolist()})


def parse_matching(raw: bytes | str) -> Matching:
    """Parse ``{"size": .., "edges": [[job, machine], ..]}``.

    Only the syntax is checked here; index ranges are a matter for :func:`verify`.
    """
    doc = _decode(raw)
    if not isinstance(doc, dict) or not isinstance(doc.get("edges"), list):
        raise InstanceFormatError("matching must be an object with an 'edges' list")
    edges = []
    for pos, edge in enumerate(doc["edges"]):
        if (not isinstance(edge, list) or len(edge) != 2
                or any(isinstance(x, bool) or not isinstance(x, int) for x in edge)):
            raise InstanceFormatError("edge must be a pair of integers", (pos,))
        edges.append((edge[0], edge[1]))
    if len(set(edges)) != len(edges):
        raise InstanceFormatError("duplicate edge")
    if "size" in doc and doc["size"] != len(edges):
        raise InstanceFormatError(f"declared size {doc['size']} but {len(edges)} edges")
    return Matching(frozenset(edges))


def dump_matching(match: Matching) -> str:
    return json.dumps({"size": match.size,
                       "edges": [list(e) for e in match.sorted_edges()]})


# ---------------------------------------------------------------------------
# Feasibility


@dataclass(frozen=True)
class Violation:
    kind: str  # "job-matched-twice" | "index-out-of-range" | "tolerance-exceeded"
    edge: tuple[int, int]
    degree: int | None = None


@dataclass(frozen=True)
class ValidityReport:
    violations: tuple[Violation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid


def verify(inst: Instance, match: Matching) -> ValidityReport:
    """Check that every job is used at most once and that each matched edge
    ``(j, i)`` has ``deg(i) <= b[j, i]``."""
    violations: list[Violation] = []
    in_range = []
    for j, i in match.sorted_edges():
        if 0 <= j < inst.n and 0 <= i < inst.m:
            in_range.append((j, i))
        else:
            violations.append(Violation("index-out-of-range", (j, i)))

    seen: set[int] = set()
    for j, i in in_range:
        if j in seen:
            violations.append(Violation("job-matched-twice", (j, i)))
        seen.add(j)

    deg = np.zeros(inst.m, dtype=np.int64)
    for _, i in in_range:
        deg[i] += 1
    for j, i in in_range:
        if deg[i] > inst.b[j, i]:
            violations.append(Violation("tolerance-exceeded", (j, i), int(deg[i])))
    return ValidityReport(tuple(violations))


def _require_valid(inst: Instance, match: Matching) -> None:
    report = verify(inst, match)
    if not report.valid:
        raise InvalidMatchingError(f"not a PD-matching: {report.violations[0]}")


def is_maximal(inst: Instance, match: Matching) -> bool:
    """True iff no single edge can be added while keeping a PD-matching."""
    _require_valid(inst, match)
    deg = match.degrees(inst.m)
    # tightest tolerance among jobs already on each machine
    floor = np.full(inst.m, np.iinfo(np.int64).max, dtype=np.int64)
    matched = np.zeros(inst.n, dtype=bool)
    for j, i in match.edges:
        floor[i] = min(floor[i], inst.b[j, i])
        matched[j] = True
    free = inst.b[~matched]
    if free.size == 0:
        return True
    room = np.minimum(free, floor[None, :])
    return not bool(np.any(deg[None, :] + 1 <= room))


def is_strongly_maximal(inst: Instance, match: Matching) -> bool:
    """True iff every unmatched job has ``b[j, i] <= deg(i)`` on every machine."""
    _require_valid(inst, match)
    deg = match.degrees(inst.m)
    matched = np.zeros(inst.n, dtype=bool)
    for j, _ in match.edges:
        matched[j] = True
    return bool(np.all(inst.b[~matched] <= deg[None, :]))

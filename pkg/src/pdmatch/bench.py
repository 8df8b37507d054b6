"""Benchmark harness: run algorithms over seeded corpora and compare against
the exact oracle where it fits in budget."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator, Sequence

from . import generators as gen
from .classes import classify
from .dispatch import solve
from .errors import BudgetExceededError, PDMatchError
from .instance import Instance
from .oracle import DEFAULT_ASSIGNMENT_BUDGET, oracle_enumerate_assignments

CSV_COLUMNS = ("instance_id", "n", "m", "class", "algorithm", "size", "opt_size", "ratio",
               "elapsed_us")


@dataclass
class BenchRecord:
    instance_id: str
    n: int
    m: int
    cls: str
    algorithm: str
    size: int | None
    opt_size: int | None
    ratio: float | None
    elapsed_us: int
    error: str | None = None


def family_instance(family: str, seed: int, n: int = 8, m: int = 3, max_tol: int = 4,
                    zero_prob: float = 0.0, values: Sequence[int] | None = None,
                    types: int = 2, **extra) -> Instance:
    """One instance of a named random family (shared by bench and ``generate``)."""
    if family == "random":
        return gen.gen_random(n, m, max_tol, zero_prob, seed)
    if family == "mono":
        if values:
            return gen.gen_monotone_from_values(n, m, values, seed)
        return gen.gen_monotonous(n, m, max_tol, seed)
    if family == "udep":
        return gen.gen_udep(n, m, max_tol, zero_prob or 0.3, seed,
                            complete=bool(extra.get("complete")),
                            monotone=bool(extra.get("monotone")))
    if family == "vdep":
        return gen.gen_vdep(n, m, max_tol, zero_prob or 0.3, seed)
    if family == "values":
        return gen.gen_from_values(n, m, values or (1, 2), seed)
    if family == "onetwo":
        return gen.gen_from_values(n, m, (1, 2), seed)
    if family == "types":
        return gen.gen_typed(n, m, types, max_tol, zero_prob, seed)
    raise ValueError(f"unknown random family {family!r}")


def iter_corpus(corpus: Iterable[dict]) -> Iterator[tuple[str, Instance]]:
    """Expand corpus entries ``{"family", "count", "seed", ...}`` into
    ``(instance_id, instance)`` pairs; instance ``r`` of an entry uses seed
    ``seed + r``."""
    for e, entry in enumerate(corpus):
        entry = dict(entry)
        family = entry.pop("family")
        count = int(entry.pop("count", 1))
        seed = int(entry.pop("seed", 0))
        for r in range(count):
            yield f"c{e}-{family}-{r:04d}", family_instance(family, seed + r, **entry)


def run_bench(corpus: Iterable[dict], algorithms: Sequence[str],
              oracle_budget: int = DEFAULT_ASSIGNMENT_BUDGET, **options) -> list[BenchRecord]:
    records: list[BenchRecord] = []
    for inst_id, inst in iter_corpus(corpus):
        flags = classify(inst).flags()
        try:
            opt = oracle_enumerate_assignments(inst, oracle_budget).size
        except BudgetExceededError:
            opt = None
        for name in algorithms:
            try:
                rep = solve(inst, name, **options)
            except PDMatchError as exc:
                records.append(BenchRecord(inst_id, inst.n, inst.m, flags, name, None, opt,
                                           None, 0, f"{type(exc).__name__}: {exc}"))
                continue
            ratio = None
            if opt is not None:
                ratio = 1.0 if opt == 0 else rep.size / opt
            records.append(BenchRecord(inst_id, inst.n, inst.m, flags, name, rep.size, opt,
                                       ratio, int(rep.elapsed * 1e6)))
    return records


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.6f}"
    return str(x)


def records_to_csv(records: Sequence[BenchRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow([r.instance_id, r.n, r.m, r.cls, r.algorithm, _fmt(r.size),
                    _fmt(r.opt_size), _fmt(r.ratio), r.elapsed_us])
    return buf.getvalue()


def records_to_json(records: Sequence[BenchRecord]) -> str:
    rows = []
    for r in records:
        d = asdict(r)
        d["class"] = d.pop("cls")
        rows.append(d)
    return json.dumps(rows, indent=1)


def summarize(records: Sequence[BenchRecord]) -> dict[str, dict]:
    """Per algorithm: run/failure counts and min/mean ratio against the oracle."""
    out: dict[str, dict] = {}
    for r in records:
        s = out.setdefault(r.algorithm, {"runs": 0, "failed": 0, "ratios": []})
        s["runs"] += 1
        if r.error:
            s["failed"] += 1
        elif r.ratio is not None:
            s["ratios"].append(r.ratio)
    for s in out.values():
        ratios = s.pop("ratios")
        s["min_ratio"] = min(ratios) if ratios else None
        s["mean_ratio"] = sum(ratios) / len(ratios) if ratios else None
    return out

"""Graph sources, theorem sweeps, counterexample search and report files.

A suite evaluates every (graph, theorem, parameter) cell. For the builtin
exhaustive source the invariants of all labeled graphs are computed in one
compiled pass; verdicts are then evaluated once per distinct invariant
fingerprint and counted with multiplicity, which is equivalent because a
verdict depends on the graph only through those invariants.
"""

from __future__ import annotations

import enum
import itertools
import json
import logging
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Any, Iterable, Iterator, Mapping, Sequence

import numpy as np

from . import _kernels as K
from .constructions import ConstructionSpec, Kind
from .errors import BudgetExceeded, DomainError
from .graph import (Graph, connectivity_profile, graph_from_edge_mask, pair_list, parse_graph6,
                    read_graph6_lines, to_graph6)
from .paths import DEFAULT_LIMITS, Limits
from .records import Theorem, Verdict
from .verdicts import GraphAnalysis, GraphFacts, check, evaluate

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
GENERATOR = "numpy.random.Generator(PCG64(seed)).random(), one draw per pair in graph6 order"


class ClassFilter(enum.Enum):
    ALL = "all"
    CONNECTED = "connected"
    TWO_CONNECTED = "2connected"

    @classmethod
    def parse(cls, text: str) -> ClassFilter:
        key = text.strip().lower().replace("_", "").replace("-", "")
        aliases = {"all": cls.ALL, "connected": cls.CONNECTED,
                   "2connected": cls.TWO_CONNECTED, "twoconnected": cls.TWO_CONNECTED}
        if key not in aliases:
            raise DomainError(f"unknown graph class {text!r}")
        return aliases[key]

    def accepts(self, connected: bool, two_connected: bool) -> bool:
        if self is ClassFilter.CONNECTED:
            return connected
        if self is ClassFilter.TWO_CONNECTED:
            return two_connected
        return True


# -- sources ----------------------------------------------------------------

@dataclass(frozen=True)
class Exhaustive:
    """Every labeled graph on ``1..max_n`` vertices."""

    max_n: int

    def __str__(self):
        return f"builtin:{self.max_n}"


@dataclass(frozen=True)
class Graph6Stream:
    path: str

    def __str__(self):
        return f"g6:{self.path}"


@dataclass(frozen=True)
class Gnp:
    n: int
    p: float
    count: int
    seed: int

    def __str__(self):
        return f"gnp:{self.n},{self.p!r},{self.count},{self.seed}"


@dataclass(frozen=True)
class Constructions:
    """Every valid parameter combination of one construction family."""

    kind: Kind
    grid: tuple[tuple[str, tuple[int, ...]], ...]

    def specs(self) -> Iterator[ConstructionSpec]:
        names = [k for k, _ in self.grid]
        for combo in itertools.product(*(vals for _, vals in self.grid)):
            yield ConstructionSpec(self.kind, dict(zip(names, combo)))

    def __str__(self):
        body = ",".join(f"{k}={'|'.join(map(str, v))}" for k, v in self.grid)
        return f"construct:{self.kind.value}:{body}"


Source = Exhaustive | Graph6Stream | Gnp | Constructions


def parse_int_list(text: str) -> tuple[int, ...]:
    """``"3"``, ``"1..5"`` (inclusive) or ``"2|4|7"``."""
    out: list[int] = []
    for part in text.split("|"):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return tuple(out)


def parse_grid(text: str) -> dict[str, tuple[int, ...]]:
    """Parse ``"k=2..4,c=5|7,s=2"`` into a parameter grid."""
    grid: dict[str, tuple[int, ...]] = {}
    if not text or not text.strip():
        return grid
    for item in text.split(","):
        if "=" not in item:
            raise DomainError(f"expected KEY=VALUE, got {item!r}")
        key, val = item.split("=", 1)
        try:
            grid[key.strip()] = parse_int_list(val)
        except ValueError:
            raise DomainError(f"bad value list {val!r} for {key.strip()}") from None
    return grid


def parse_source(text: str) -> Source:
    kind, _, rest = text.partition(":")
    try:
        if kind == "builtin":
            return Exhaustive(int(rest))
        if kind == "g6":
            return Graph6Stream(rest)
        if kind == "gnp":
            n, p, count, seed = rest.split(",")
            return Gnp(int(n), float(p), int(count), int(seed))
        if kind == "construct":
            family, _, grid = rest.partition(":")
            return Constructions(Kind(family), tuple(parse_grid(grid).items()))
    except (ValueError, TypeError) as exc:
        raise DomainError(f"bad source {text!r}: {exc}") from None
    raise DomainError(f"unknown source {text!r}")


def enumerate_graphs(n: int, class_filter: ClassFilter = ClassFilter.ALL) -> Iterator[Graph]:
    """All labeled graphs on ``n <= 7`` vertices in ascending edge-bitmask order."""
    if not 1 <= n <= K.BATCH_MAX_ORDER:
        raise DomainError(f"builtin enumeration covers 1 <= n <= {K.BATCH_MAX_ORDER}; "
                          "feed larger orders as a graph6 stream")
    for mask in range(1 << (n * (n - 1) // 2)):
        g = graph_from_edge_mask(n, mask)
        if class_filter is ClassFilter.ALL or class_filter.accepts(*connectivity_profile(g)):
            yield g


def gnp_stream(n: int, p: float, count: int, seed: int) -> Iterator[Graph]:
    if not 0 <= p <= 1:
        raise DomainError(f"p={p} outside [0, 1]")
    rng = np.random.Generator(np.random.PCG64(seed))
    pairs = pair_list(n)
    for _ in range(count):
        draws = rng.random(len(pairs))
        yield Graph.from_edges(n, [pr for pr, x in zip(pairs, draws) if x < p])


def sample_gnp(n: int, p: float, seed: int) -> Graph:
    return next(gnp_stream(n, p, 1, seed))


# -- bulk invariants for exhaustive sweeps ------------------------------------

FINGERPRINT_COLS = K.COL_NBR_SUMS


def _pair_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    pairs = pair_list(n)
    return (np.array([i for i, _ in pairs], dtype=np.int64),
            np.array([j for _, j in pairs], dtype=np.int64))


def analyze_edge_masks(n: int, masks: np.ndarray) -> np.ndarray:
    """One row of invariants (see ``_kernels`` column constants) per edge bitmask."""
    if not 1 <= n <= K.BATCH_MAX_ORDER:
        raise DomainError(f"bulk analysis covers 1 <= n <= {K.BATCH_MAX_ORDER}")
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    out = np.zeros((len(masks), K.N_COLS), dtype=np.int16)
    pi, pj = _pair_arrays(n)
    K.analyze_masks(n, masks, pi, pj, out)
    return out


@lru_cache(maxsize=8)
def exhaustive_table(n: int) -> np.ndarray:
    """Invariant rows for every labeled graph on ``n`` vertices; row index = edge bitmask."""
    table = analyze_edge_masks(n, np.arange(1 << (n * (n - 1) // 2), dtype=np.int64))
    table.flags.writeable = False
    return table


def facts_from_row(row: np.ndarray) -> GraphFacts:
    omega = int(row[K.COL_OMEGA])
    spec = int(row[K.COL_SPECTRUM])
    return GraphFacts(
        n=int(row[K.COL_N]),
        m=int(row[K.COL_M]),
        min_degree=int(row[K.COL_MINDEG]),
        connected=bool(row[K.COL_CONNECTED]),
        two_connected=bool(row[K.COL_TWO_CONNECTED]),
        counts=tuple(int(c) for c in row[K.COL_COUNTS:K.COL_COUNTS + omega]),
        longest_path=int(row[K.COL_LONGEST]),
        circumference=int(row[K.COL_CIRCUMFERENCE]),
        spectrum=frozenset(t for t in range(3, 16) if spec >> t & 1),
        wheel_l=int(row[K.COL_WHEEL]),
    )


def _class_mask(table: np.ndarray, class_filter: ClassFilter) -> np.ndarray:
    if class_filter is ClassFilter.CONNECTED:
        return table[:, K.COL_CONNECTED] == 1
    if class_filter is ClassFilter.TWO_CONNECTED:
        return table[:, K.COL_TWO_CONNECTED] == 1
    return np.ones(len(table), dtype=bool)


def _group(table: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Distinct fingerprint rows, the group index of every row, and group sizes."""
    if len(table) == 0:
        return table, np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    fp = np.ascontiguousarray(table[:, :FINGERPRINT_COLS])
    keys = fp.view(np.dtype((np.void, fp.dtype.itemsize * FINGERPRINT_COLS))).ravel()
    _, first, inverse, counts = np.unique(keys, return_index=True, return_inverse=True,
                                          return_counts=True)
    return fp[first], inverse.ravel(), counts


# -- suites -------------------------------------------------------------------

@dataclass(frozen=True)
class TheoremGrid:
    theorem: Theorem
    grid: Mapping[str, Sequence[int]] = field(default_factory=dict)
    relax: frozenset[str] = frozenset()

    def cells(self, inherited: Mapping[str, int] | None = None) -> list[dict[str, int]]:
        """Cartesian product of the grid; construction parameters fill keys the grid leaves open."""
        grid = {k: tuple(v) for k, v in self.grid.items()}
        for k, v in (inherited or {}).items():
            grid.setdefault(k, (v,))
        names = sorted(grid)
        return [dict(zip(names, combo)) for combo in itertools.product(*(grid[k] for k in names))]

    def to_json(self) -> dict:
        out: dict[str, Any] = {"theorem": self.theorem.name,
                               "grid": {k: list(self.grid[k]) for k in sorted(self.grid)}}
        if self.relax:
            out["relax"] = sorted(self.relax)
        return out


@dataclass
class SuiteConfig:
    theorems: list[TheoremGrid]
    source: Source
    class_filter: ClassFilter = ClassFilter.ALL
    limits: Limits = DEFAULT_LIMITS
    out: str | None = None
    workers: int = 1

    def __post_init__(self):
        if self.workers < 1:
            raise DomainError("workers must be positive")
        if min(self.limits.dp_cap, self.limits.bb_cap, self.limits.bb_budget) <= 0:
            raise DomainError("budgets must be positive")

    def to_json(self) -> dict:
        return {
            "source": str(self.source),
            "class": self.class_filter.value,
            "theorems": [t.to_json() for t in self.theorems],
            "limits": {"dp_cap": self.limits.dp_cap, "bb_cap": self.limits.bb_cap,
                       "bb_budget": self.limits.bb_budget},
        }


COUNTER_KEYS = ("checked", "premise_met", "holds", "tight", "violations", "budget_exceeded")


@dataclass
class SuiteReport:
    config: dict
    graphs: int = 0
    counters: dict[str, Counter] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def total_violations(self) -> int:
        return sum(c["violations"] for c in self.counters.values())

    @property
    def exit_status(self) -> int:
        return 1 if self.total_violations else 0

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "generator": GENERATOR,
            "config": self.config,
            "graphs": self.graphs,
            "counters": {name: {k: self.counters[name][k] for k in COUNTER_KEYS}
                         for name in sorted(self.counters)},
            "violations": self.violations,
            "wall_time_s": round(self.wall_time, 3),
        }


@dataclass
class _Partial:
    graphs: int = 0
    counters: dict[str, Counter] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)

    def tally(self, theorem: Theorem, verdict: Verdict | None, times: int = 1) -> None:
        c = self.counters.setdefault(theorem.name, Counter({k: 0 for k in COUNTER_KEYS}))
        c["checked"] += times
        if verdict is None:
            c["budget_exceeded"] += times
        elif verdict.premise_met:
            c["premise_met"] += times
            if verdict.holds:
                c["holds"] += times
                if verdict.tight:
                    c["tight"] += times
            else:
                c["violations"] += times

    def merge(self, other: _Partial) -> None:
        self.graphs += other.graphs
        for name, c in other.counters.items():
            self.counters.setdefault(name, Counter({k: 0 for k in COUNTER_KEYS})).update(c)
        self.violations.extend(other.violations)


def _certificate(g6: str, verdict: Verdict) -> dict:
    return {"graph6": g6, "theorem": verdict.theorem.name,
            "params": {k: verdict.params[k] for k in sorted(verdict.params)}}


def _table_chunk(n: int, lo: int, hi: int, theorems: Sequence[TheoremGrid],
                 class_filter: ClassFilter, table: np.ndarray | None = None) -> _Partial:
    if table is None:
        table = analyze_edge_masks(n, np.arange(lo, hi, dtype=np.int64))
    keep = np.flatnonzero(_class_mask(table, class_filter))
    rows, inverse, sizes = _group(table[keep])
    part = _Partial(graphs=len(keep))
    for gi, row in enumerate(rows):
        facts = facts_from_row(row)
        for tg in theorems:
            for cell in tg.cells():
                verdict = evaluate(tg.theorem, facts, cell, tg.relax)
                part.tally(tg.theorem, verdict, int(sizes[gi]))
                if verdict.violated:
                    for idx in keep[inverse == gi]:
                        g = graph_from_edge_mask(n, lo + int(idx))
                        part.violations.append(_certificate(to_graph6(g), verdict))
    return part


def _graph_chunk(items: Sequence[tuple[str, dict]], theorems: Sequence[TheoremGrid],
                 class_filter: ClassFilter, limits: Limits) -> _Partial:
    part = _Partial()
    for g6, inherited in items:
        g = parse_graph6(g6)
        if class_filter is not ClassFilter.ALL and not class_filter.accepts(*connectivity_profile(g)):
            continue
        part.graphs += 1
        facts = GraphAnalysis(g, limits)
        for tg in theorems:
            for cell in tg.cells(inherited):
                try:
                    verdict = evaluate(tg.theorem, facts, cell, tg.relax)
                except BudgetExceeded as exc:
                    log.warning("budget exceeded for %s on %s: %s", tg.theorem.name, g6, exc)
                    part.tally(tg.theorem, None)
                    continue
                part.tally(tg.theorem, verdict)
                if verdict.violated:
                    part.violations.append(_certificate(g6, verdict))
    return part


def _graph_items(source: Source) -> Iterator[tuple[str, dict]]:
    if isinstance(source, Graph6Stream):
        with open(source.path, encoding="ascii") as fh:
            for g in read_graph6_lines(fh):
                yield to_graph6(g), {}
    elif isinstance(source, Gnp):
        for g in gnp_stream(source.n, source.p, source.count, source.seed):
            yield to_graph6(g), {}
    elif isinstance(source, Constructions):
        for spec in source.specs():
            try:
                g = spec.build()
            except DomainError:
                continue
            yield to_graph6(g), spec.inherited
    else:  # pragma: no cover
        raise DomainError(f"not a per-graph source: {source}")


def _sort_key(cert: dict) -> tuple:
    return cert["graph6"], cert["theorem"], json.dumps(cert["params"], sort_keys=True)


def sidecar_path(out: str | os.PathLike) -> Path:
    return Path(out).with_suffix(".violations.g6")


def run_suite(cfg: SuiteConfig) -> SuiteReport:
    """Evaluate every cell of ``cfg`` and write the report (and violation sidecar) if ``cfg.out``."""
    start = time.perf_counter()
    total = _Partial()
    for tg in cfg.theorems:
        total.counters.setdefault(tg.theorem.name, Counter({k: 0 for k in COUNTER_KEYS}))
    sidecar = None
    if cfg.out:
        sidecar = open(sidecar_path(cfg.out), "w", encoding="ascii")

    def absorb(part: _Partial) -> None:
        total.merge(part)
        if sidecar is not None and part.violations:
            for cert in part.violations:
                sidecar.write(cert["graph6"] + "\n")
            sidecar.flush()

    try:
        if isinstance(cfg.source, Exhaustive):
            _run_exhaustive(cfg, absorb)
        else:
            _run_graphs(cfg, absorb)
    finally:
        if sidecar is not None:
            sidecar.close()

    total.violations.sort(key=_sort_key)
    report = SuiteReport(cfg.to_json(), total.graphs, total.counters, total.violations,
                         time.perf_counter() - start)
    if cfg.out:
        write_report(report, cfg.out)
    return report


def _run_exhaustive(cfg: SuiteConfig, absorb) -> None:
    max_n = cfg.source.max_n
    if not 1 <= max_n <= K.BATCH_MAX_ORDER:
        raise DomainError(f"builtin source covers n <= {K.BATCH_MAX_ORDER}; use a graph6 stream")
    if cfg.workers == 1:
        for n in range(1, max_n + 1):
            log.info("exhaustive n=%d", n)
            absorb(_table_chunk(n, 0, 1 << (n * (n - 1) // 2), cfg.theorems, cfg.class_filter,
                                exhaustive_table(n)))
        return
    jobs = []
    for n in range(1, max_n + 1):
        size = 1 << (n * (n - 1) // 2)
        step = max(1, -(-size // (4 * cfg.workers)))
        jobs.extend((n, lo, min(lo + step, size)) for lo in range(0, size, step))
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        futures = [pool.submit(_table_chunk, n, lo, hi, cfg.theorems, cfg.class_filter)
                   for n, lo, hi in jobs]
        for fut in futures:
            absorb(fut.result())


def _run_graphs(cfg: SuiteConfig, absorb) -> None:
    items = list(_graph_items(cfg.source))
    if cfg.workers == 1:
        absorb(_graph_chunk(items, cfg.theorems, cfg.class_filter, cfg.limits))
        return
    step = max(1, -(-len(items) // (4 * cfg.workers)))
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        futures = [pool.submit(_graph_chunk, items[i:i + step], cfg.theorems, cfg.class_filter,
                               cfg.limits) for i in range(0, len(items), step)]
        for fut in futures:
            absorb(fut.result())


def write_report(report: SuiteReport, out: str | os.PathLike) -> None:
    Path(out).write_text(json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n")
    side = sidecar_path(out)
    tmp = side.with_suffix(".tmp")
    tmp.write_text("".join(c["graph6"] + "\n" for c in report.violations), encoding="ascii")
    tmp.replace(side)


def report_without_time(path: str | os.PathLike) -> dict:
    data = json.loads(Path(path).read_text())
    data.pop("wall_time_s", None)
    return data


# -- counterexample search ------------------------------------------------------

def search_counterexamples(theorem: Theorem, params: Mapping[str, int | Sequence[int]],
                           source: Source, budget: int, relax: Iterable[str] = (),
                           class_filter: ClassFilter = ClassFilter.ALL,
                           limits: Limits = DEFAULT_LIMITS) -> list[dict]:
    """Graphs where the (possibly relaxed) premise holds but the bound fails, in source order.

    At most ``budget`` certificates are returned; each is re-checked on its
    own graph before it is reported.
    """
    if budget <= 0:
        return []
    grid = {k: tuple(v) if isinstance(v, (list, tuple)) else (v,) for k, v in params.items()}
    tg = TheoremGrid(theorem, grid, frozenset(relax))
    found: list[dict] = []

    def accept(g: Graph, verdict: Verdict) -> bool:
        recheck = check(theorem, g, verdict.params, relax=tg.relax, limits=limits)
        if not recheck.violated:
            raise AssertionError(f"certificate {to_graph6(g)} did not re-verify")
        cert = _certificate(to_graph6(g), recheck)
        cert["verdict"] = recheck.to_json()
        found.append(cert)
        return len(found) >= budget

    if isinstance(source, Exhaustive):
        for n in range(1, min(source.max_n, K.BATCH_MAX_ORDER) + 1):
            table = exhaustive_table(n)
            keep = np.flatnonzero(_class_mask(table, class_filter))
            rows, inverse, _ = _group(table[keep])
            bad: dict[int, list[Verdict]] = {}
            for gi, row in enumerate(rows):
                facts = facts_from_row(row)
                hits = [v for cell in tg.cells() if (v := evaluate(theorem, facts, cell, tg.relax)).violated]
                if hits:
                    bad[gi] = hits
            for pos, idx in enumerate(keep):
                for verdict in bad.get(int(inverse[pos]), ()):
                    if accept(graph_from_edge_mask(n, int(idx)), verdict):
                        return found
        return found

    for g6, inherited in _graph_items(source):
        g = parse_graph6(g6)
        if class_filter is not ClassFilter.ALL and not class_filter.accepts(*connectivity_profile(g)):
            continue
        facts = GraphAnalysis(g, limits)
        for cell in tg.cells(inherited):
            try:
                verdict = evaluate(theorem, facts, cell, tg.relax)
            except BudgetExceeded:
                continue
            if verdict.violated and accept(g, verdict):
                return found
    return found

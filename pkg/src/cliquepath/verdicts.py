"""Theorem checks on concrete graphs.

``check`` measures what a theorem talks about (edge count, clique counts,
longest path, circumference, cycle spectrum, wheel size) and compares it
with the exact bound. A graph that fails a hypothesis gets a verdict with
``premise_met=False`` instead of an exception, so parameter sweeps can run
unfiltered.

Verdict logic only reads a small set of invariants, exposed by
``GraphAnalysis`` (computed lazily from a graph) or by ``GraphFacts``
(precomputed in bulk by the harness).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Callable, Iterable, Mapping

from . import bounds
from .cliques import CliqueProfile, clique_profile
from .graph import Graph, connectivity_profile
from .errors import DomainError
from .paths import DEFAULT_LIMITS, Limits, kopylov_lemma_check, max_wheel, path_cycle_profile
from .records import Theorem, Verdict


class GraphAnalysis:
    """Lazily computed invariants of one graph, with witnesses."""

    def __init__(self, graph: Graph, limits: Limits = DEFAULT_LIMITS):
        self.graph = graph
        self.limits = limits

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def min_degree(self) -> int:
        return self.graph.min_degree

    @cached_property
    def _connectivity(self) -> tuple[bool, bool]:
        return connectivity_profile(self.graph)

    @property
    def connected(self) -> bool:
        return self._connectivity[0]

    @property
    def two_connected(self) -> bool:
        return self._connectivity[1]

    @cached_property
    def cliques(self) -> CliqueProfile:
        return clique_profile(self.graph)

    @property
    def omega(self) -> int:
        return self.cliques.omega

    def count(self, j: int) -> int:
        return self.cliques.count(j)

    @cached_property
    def _paths(self):
        return path_cycle_profile(self.graph, self.limits)

    @property
    def longest_path(self) -> int:
        return self._paths.longest_path_edges

    @property
    def circumference(self) -> int:
        return self._paths.circumference

    @property
    def spectrum(self) -> frozenset[int]:
        return self._paths.spectrum

    @property
    def path_witness(self):
        return list(self._paths.path_witness)

    @cached_property
    def wheel(self):
        return max_wheel(self.graph, self.limits)

    @property
    def wheel_l(self) -> int:
        return 0 if self.wheel is None else self.wheel.l


@dataclass(frozen=True)
class GraphFacts:
    """The same invariants as ``GraphAnalysis``, already computed and witness-free."""

    n: int
    m: int
    min_degree: int
    connected: bool
    two_connected: bool
    counts: tuple[int, ...]
    longest_path: int
    circumference: int
    spectrum: frozenset[int]
    wheel_l: int

    @property
    def omega(self) -> int:
        return len(self.counts)

    def count(self, j: int) -> int:
        if j == 0:
            return 1
        return self.counts[j - 1] if 1 <= j <= len(self.counts) else 0


# Parameters each theorem reads; anything else in ``params`` is ignored.
REQUIRED: dict[Theorem, tuple[str, ...]] = {
    Theorem.EG_CYCLE: ("l",),
    Theorem.EG_PATH: ("l",),
    Theorem.EXT_EG: ("s",),
    Theorem.WHEEL: ("k",),
    Theorem.LUO_CYCLE: ("s", "l"),
    Theorem.LUO_PATH: ("s", "l"),
    Theorem.KOPYLOV: ("c",),
    Theorem.LUO_2CONN: ("c", "s"),
    Theorem.MINDEG_CYCLE: ("k", "c", "s"),
    Theorem.MINDEG_PATH: ("k", "l", "s"),
    Theorem.FACT1: (),
    Theorem.KOPYLOV_LEMMA: ("path",),
    Theorem.WOODALL: ("k", "c"),
}

# Hypotheses that ``relax`` may drop. Relaxing ``two_connected`` keeps connectivity.
RELAXABLE: dict[Theorem, tuple[str, ...]] = {
    Theorem.EG_CYCLE: ("cycle_free",),
    Theorem.EG_PATH: ("path_free",),
    Theorem.LUO_CYCLE: ("cycle_free",),
    Theorem.LUO_PATH: ("path_free",),
    Theorem.MINDEG_CYCLE: ("two_connected", "circumference", "min_degree"),
    Theorem.MINDEG_PATH: ("connected", "path_free", "min_degree"),
}
for _alias in (Theorem.KOPYLOV, Theorem.LUO_2CONN, Theorem.WOODALL):
    RELAXABLE[_alias] = RELAXABLE[Theorem.MINDEG_CYCLE]

_ALIASES = {
    Theorem.KOPYLOV: {"k": 2, "s": 2},
    Theorem.LUO_2CONN: {"k": 2},
    Theorem.WOODALL: {"s": 2},
}

Conditions = list[tuple[str, Callable[[], bool]]]


def _params(theorem: Theorem, params: Mapping[str, Any]) -> dict[str, Any]:
    missing = [k for k in REQUIRED[theorem] if k not in params]
    if missing:
        raise DomainError(f"{theorem.name} needs parameter(s) {', '.join(missing)}")
    out = {}
    for key in REQUIRED[theorem]:
        val = params[key]
        if key != "path":
            if isinstance(val, bool) or int(val) != val:
                raise DomainError(f"parameter {key} must be an integer, got {val!r}")
            val = int(val)
        out[key] = val
    return out


def _require(ok: bool, message: str) -> None:
    if not ok:
        raise DomainError(message)


def _premise(theorem, params, conds: Conditions, relax: frozenset[str]):
    """Evaluate hypotheses in order, stopping at the first failure that is not relaxed."""
    for name, test in conds:
        if name in relax:
            continue
        if not test():
            return Verdict(theorem, params, False, reason=name, relaxed=relax)
    return None


def _upper(theorem, params, bound: Fraction, observed: int, relax, witness=None) -> Verdict:
    return Verdict(theorem, params, True, bound=bound, observed=observed,
                   holds=observed <= bound, tight=observed == bound, witness=witness, relaxed=relax)


def _lower(theorem, params, bound: Fraction, observed: int, relax, witness=None) -> Verdict:
    return Verdict(theorem, params, True, bound=bound, observed=observed,
                   holds=observed >= bound, tight=observed == math.ceil(bound),
                   witness=witness, relaxed=relax)


def consecutive_cycles_from_three(spectrum: Iterable[int]) -> int:
    """Largest ``t`` with every length ``3..t`` present (2 when there is no triangle)."""
    present = set(spectrum)
    t = 2
    while t + 1 in present:
        t += 1
    return t


def evaluate(theorem: Theorem, facts, params: Mapping[str, Any] | None = None,
             relax: Iterable[str] = ()) -> Verdict:
    """Check ``theorem`` against precomputed ``facts`` (a ``GraphAnalysis`` or ``GraphFacts``)."""
    params = dict(params or {})
    relax = frozenset(relax)
    allowed = RELAXABLE.get(theorem, ())
    bad = sorted(relax - set(allowed))
    if bad:
        raise DomainError(f"{theorem.name} cannot relax {', '.join(bad)}")

    if theorem in _ALIASES:
        p = _params(theorem, params)
        forced = _ALIASES[theorem]
        for key, val in forced.items():
            _require(params.get(key, val) == val, f"{theorem.name} fixes {key}={val}")
        p.update(forced)
        base = evaluate(Theorem.MINDEG_CYCLE, facts, p, relax)
        return Verdict(theorem, base.params, base.premise_met, base.bound, base.observed,
                       base.holds, base.tight, base.witness, base.reason, base.relaxed)

    if theorem is Theorem.KOPYLOV_LEMMA:
        graph = getattr(facts, "graph", None)
        if graph is None:
            raise DomainError("the path lemma needs the graph itself, not precomputed facts")
        p = _params(theorem, params)
        return kopylov_lemma_check(graph, p["path"], getattr(facts, "limits", DEFAULT_LIMITS))

    p = _params(theorem, params)
    f = facts
    nonempty = ("nonempty", lambda: f.n >= 1)

    if theorem is Theorem.EG_CYCLE:
        l = p["l"]
        _require(l >= 3, "l must be at least 3")
        conds = [nonempty, ("cycle_free", lambda: f.circumference < l)]
        return _premise(theorem, p, conds, relax) or \
            _upper(theorem, p, bounds.eg_cycle_bound(f.n, l), f.m, relax)

    if theorem is Theorem.EG_PATH:
        l = p["l"]
        _require(l >= 2, "l must be at least 2")
        conds = [nonempty, ("path_free", lambda: f.longest_path < l - 1)]
        return _premise(theorem, p, conds, relax) or \
            _upper(theorem, p, bounds.eg_path_bound(f.n, l), f.m, relax)

    if theorem is Theorem.EXT_EG:
        s = p["s"]
        _require(s >= 1, "s must be at least 1")
        conds = [("clique_range", lambda: s <= f.omega)]
        if (v := _premise(theorem, p, conds, relax)) is not None:
            return v
        bound = Fraction((s + 1) * f.count(s + 1), f.count(s)) + s - 1
        return _lower(theorem, p, bound, f.longest_path, relax,
                      witness=getattr(f, "path_witness", None))

    if theorem is Theorem.WHEEL:
        k = p["k"]
        _require(k >= 2, "k must be at least 2")
        conds = [("clique_range", lambda: k <= f.omega)]
        if (v := _premise(theorem, p, conds, relax)) is not None:
            return v
        ratio = Fraction((k + 1) * f.count(k + 1), f.count(k))
        bound = ratio + k - 1
        top = math.ceil(ratio) + k
        missing = sorted(set(range(3, top + 1)) - f.spectrum)
        observed = f.wheel_l
        wheel = getattr(f, "wheel", None)
        witness = {"wheel": wheel.to_json() if wheel is not None else None,
                   "cycle_range": [3, top], "missing_lengths": missing}
        holds = observed >= bound and not missing
        return Verdict(theorem, p, True, bound=bound, observed=observed, holds=holds,
                       tight=holds and observed == math.ceil(bound), witness=witness, relaxed=relax)

    if theorem in (Theorem.LUO_CYCLE, Theorem.LUO_PATH):
        s, l = p["s"], p["l"]
        _require(s >= 2, "s must be at least 2")
        if theorem is Theorem.LUO_CYCLE:
            _require(l >= 3, "l must be at least 3")
            conds = [nonempty, ("cycle_free", lambda: f.circumference < l)]
            bound_fn = bounds.luo_cycle_bound
        else:
            _require(l >= 2, "l must be at least 2")
            conds = [nonempty, ("path_free", lambda: f.longest_path < l - 1)]
            bound_fn = bounds.luo_path_bound
        return _premise(theorem, p, conds, relax) or \
            _upper(theorem, p, bound_fn(f.n, s, l), f.count(s), relax)

    if theorem is Theorem.MINDEG_CYCLE:
        k, c, s = p["k"], p["c"], p["s"]
        _require(c >= 5, "c must be at least 5")
        _require(k >= 2, "k must be at least 2")
        _require(s >= 2, "s must be at least 2")
        if "two_connected" in relax:
            first = ("connected", lambda: f.connected)
        else:
            first = ("two_connected", lambda: f.two_connected)
        conds = [
            first,
            ("order", lambda: f.n >= c),
            ("min_degree", lambda: f.min_degree >= k),
            ("circumference", lambda: f.circumference < c),
        ]
        relax_eff = relax - {"two_connected"}
        if (v := _premise(theorem, p, conds, relax_eff)) is not None:
            return Verdict(theorem, p, False, reason=v.reason, relaxed=relax)
        return _upper(theorem, p, bounds.kopylov_family_bound(f.n, k, c, s), f.count(s), relax)

    if theorem is Theorem.MINDEG_PATH:
        k, l, s = p["k"], p["l"], p["s"]
        _require(l >= 4, "l must be at least 4")
        _require(k >= 1, "k must be at least 1")
        _require(s >= 2, "s must be at least 2")
        conds = [
            ("connected", lambda: f.connected),
            ("order", lambda: f.n >= l),
            ("min_degree", lambda: f.min_degree >= k),
            ("path_free", lambda: f.longest_path < l - 1),
        ]
        if (v := _premise(theorem, p, conds, relax)) is not None:
            return v
        if k > l - 1:
            # premise met only under relaxation; the formula has no meaning here
            raise DomainError(f"k={k} exceeds l-1={l - 1}")
        return _upper(theorem, p, bounds.kopylov_path_bound(f.n, k, l, s), f.count(s), relax)

    if theorem is Theorem.FACT1:
        conds = [("has_edge", lambda: f.m >= 1)]
        if (v := _premise(theorem, p, conds, relax)) is not None:
            return v
        bound = Fraction(3 * f.count(3), f.count(2)) + 2
        need = math.floor(bound)
        observed = consecutive_cycles_from_three(f.spectrum)
        missing = sorted(set(range(3, need + 1)) - f.spectrum)
        return Verdict(theorem, p, True, bound=bound, observed=observed,
                       holds=not missing, tight=need >= 3 and observed == need,
                       witness={"required": [3, need], "missing_lengths": missing}, relaxed=relax)

    raise DomainError(f"unsupported theorem {theorem}")  # pragma: no cover


def check(theorem: Theorem | str, g: Graph, params: Mapping[str, Any] | None = None,
          relax: Iterable[str] = (), limits: Limits = DEFAULT_LIMITS) -> Verdict:
    if isinstance(theorem, str):
        theorem = Theorem.parse(theorem)
    return evaluate(theorem, GraphAnalysis(g, limits), params, relax)

"""Randomised soundness search: every GUARANTEED verdict is checked exactly.

Graphs are drawn from G(n, p) conditioned on connectivity by rejection
(in bipartite mode, from the balanced random bipartite model on n + n
vertices).  Samples are cut into fixed-size shards; shard ``j`` uses the
seed ``seed + j``, so the result does not depend on the worker count.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .conditions import (
    ConditionReport,
    check_bipartite,
    check_k_hamiltonian,
    check_large_n,
    check_regime,
)
from .graph import Graph, emit_graph6
from .oracle import hamiltonian_cycle, is_k_hamiltonian

SHARD_SIZE = 1000
MAX_REJECTIONS = 100_000


@dataclass(frozen=True)
class SearchParams:
    n: int
    k: int = 0
    alpha: float = 2.0
    samples: int = 1000
    edge_prob: float = 0.5
    seed: int = 0
    bipartite: bool = False
    shard_size: int = SHARD_SIZE


@dataclass
class SearchReport:
    params: SearchParams
    samples: int = 0
    guaranteed: int = 0
    confirmed: int = 0
    violations: int = 0
    inconclusive: int = 0
    not_applicable: int = 0
    by_checker: dict = field(default_factory=dict)
    violation_graphs: list = field(default_factory=list)

    def merge(self, other: "SearchReport") -> None:
        self.samples += other.samples
        self.guaranteed += other.guaranteed
        self.confirmed += other.confirmed
        self.violations += other.violations
        self.inconclusive += other.inconclusive
        self.not_applicable += other.not_applicable
        for tag, count in other.by_checker.items():
            self.by_checker[tag] = self.by_checker.get(tag, 0) + count
        self.violation_graphs.extend(other.violation_graphs)

    def to_dict(self) -> dict:
        p = self.params
        return {
            "params": {
                "n": p.n, "k": p.k, "alpha": p.alpha, "samples": p.samples,
                "edge_prob": p.edge_prob, "seed": p.seed, "bipartite": p.bipartite,
            },
            "samples": self.samples,
            "guaranteed": self.guaranteed,
            "confirmed": self.confirmed,
            "violations": self.violations,
            "inconclusive": self.inconclusive,
            "not_applicable": self.not_applicable,
            "by_checker": dict(sorted(self.by_checker.items())),
            "violation_graphs": list(self.violation_graphs),
        }


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    for _ in range(MAX_REJECTIONS):
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        g = Graph(n, tuple(adj))
        if g.is_connected():
            return g
    raise RuntimeError(f"no connected G({n}, {p}) sample after {MAX_REJECTIONS} draws")


def random_connected_bipartite(half: int, p: float, rng: random.Random) -> Graph:
    """Connected random bipartite graph with X = 0..half-1 and Y = half..2half-1."""
    n = 2 * half
    for _ in range(MAX_REJECTIONS):
        adj = [0] * n
        for x in range(half):
            for y in range(half, n):
                if rng.random() < p:
                    adj[x] |= 1 << y
                    adj[y] |= 1 << x
        g = Graph(n, tuple(adj))
        if g.is_connected():
            return g
    raise RuntimeError(f"no connected bipartite sample after {MAX_REJECTIONS} draws")


def _checkers(params: SearchParams) -> list[Callable[[Graph], ConditionReport]]:
    a, k = params.alpha, params.k
    if params.bipartite:
        return [lambda g: check_bipartite(g, a)]
    checks = [lambda g: check_k_hamiltonian(g, k, a)]
    if a >= 2:
        checks.append(lambda g: check_large_n(g, k, a))
        if k == 0:
            checks.append(lambda g: check_regime(g, a))
    return checks


def _run_shard(params: SearchParams, shard: int, count: int) -> SearchReport:
    rng = random.Random(params.seed + shard)
    report = SearchReport(params)
    checks = _checkers(params)
    truth: dict[str, bool] = {}
    for _ in range(count):
        if params.bipartite:
            g = random_connected_bipartite(params.n, params.edge_prob, rng)
        else:
            g = random_connected_graph(params.n, params.edge_prob, rng)
        report.samples += 1
        for check in checks:
            rep = check(g)
            if rep.verdict.value == "NotApplicable":
                report.not_applicable += 1
                continue
            if not rep.guaranteed:
                report.inconclusive += 1
                continue
            report.guaranteed += 1
            report.by_checker[rep.theorem_tag] = report.by_checker.get(rep.theorem_tag, 0) + 1
            key = emit_graph6(g)
            if key not in truth:
                if params.bipartite or params.k == 0:
                    truth[key] = hamiltonian_cycle(g).hamiltonian
                else:
                    truth[key] = is_k_hamiltonian(g, params.k)
            if truth[key]:
                report.confirmed += 1
            else:
                report.violations += 1
                report.violation_graphs.append(f"{rep.theorem_tag} {key}")
    return report


def soundness_search(params: SearchParams, workers: int = 1) -> SearchReport:
    """Cross-check every GUARANTEED verdict against the exact oracle."""
    shards = []
    left, j = params.samples, 0
    while left > 0:
        count = min(params.shard_size, left)
        shards.append((j, count))
        left -= count
        j += 1
    total = SearchReport(params)
    if workers > 1 and len(shards) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_shard, [params] * len(shards), *zip(*shards)))
    else:
        parts = [_run_shard(params, j, count) for j, count in shards]
    for part in parts:
        total.merge(part)
    return total


def write_violations(report: SearchReport, path: Optional[str]) -> None:
    if path is None:
        return
    with open(path, "w") as fh:
        for line in report.violation_graphs:
            fh.write(line.split()[-1] + "\n")

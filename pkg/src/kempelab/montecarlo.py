"""Seeded Monte Carlo harness over instance streams.

Trial t of an experiment uses the instance seed ``trial_seed(seed_base, t)``
(output t of the splitmix64 stream of seed_base), so the estimate is a pure
function of (event, n, trials, seed_base): trials can run serially or across
processes and aggregate identically, because every per-trial value is an
integer and only exact integer sums cross trial boundaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from multiprocessing import Pool

from kempelab import kernels
from kempelab.graph import Graph
from kempelab.rng import SplitMix64, mix64, trial_seed

Z99 = 2.5758293035489004
MIN_TRIALS_FOR_INTERVAL = 100
DOUBLE_MINOR_N_CAP = 8

# salt separating event-internal sampling from the instance token stream
_AUX_SALT = 0x6A09E667F3BCC909

INDICATOR_EVENTS = (
    "quadrupleExists",
    "cliqueAtLeast",
    "crossPairEdge",
    "noEdgeBetweenPairs",
    "doubleMinorAtLeast",
)
COUNT_EVENTS = ("kCliqueCount", "quadrupleCount")
EVENTS = INDICATOR_EVENTS + COUNT_EVENTS


@dataclass(frozen=True)
class EstimateReport:
    """Monte Carlo estimate with normal-approximation uncertainty.

    ``successes`` is set for indicator events; count events carry the exact
    integer sums instead.  The 99% interval is reported only from 100 trials
    up (below that the normal approximation is not worth printing).
    """

    event_id: str
    n: int
    k: int | None
    m: int | None
    trials: int
    seed_base: int
    kind: str
    sum_values: int
    sum_squares: int

    @property
    def successes(self) -> int | None:
        return self.sum_values if self.kind == "indicator" else None

    @property
    def mean(self) -> float:
        return self.sum_values / self.trials

    @property
    def standard_error(self) -> float:
        if self.kind == "indicator":
            p = self.mean
            return math.sqrt(p * (1.0 - p) / self.trials)
        if self.trials < 2:
            return 0.0
        var = (self.sum_squares - self.trials * self.mean**2) / (self.trials - 1)
        return math.sqrt(max(var, 0.0) / self.trials)

    @property
    def ci99(self) -> tuple[float, float] | None:
        if self.trials < MIN_TRIALS_FOR_INTERVAL:
            return None
        half = Z99 * self.standard_error
        return (self.mean - half, self.mean + half)


def _trial_value(event_id: str, n: int, k: int | None, m: int | None, seed: int) -> int:
    codes = kernels.exclusion_codes(n, seed)
    adj = kernels.adjacency_from_codes(n, codes)
    if event_id == "quadrupleExists":
        return 1 if kernels.find_quadruple(n, adj) is not None else 0
    if event_id == "quadrupleCount":
        return kernels.count_quadruples(n, adj)
    if event_id == "cliqueAtLeast":
        return 1 if kernels.has_clique(adj, k) else 0
    if event_id == "kCliqueCount":
        return kernels.count_cliques(adj, k)
    if event_id == "crossPairEdge":
        # designated cross pair: a-side of group 1 and a-side of group 2
        return (adj[0] >> 2) & 1
    if event_id == "noEdgeBetweenPairs":
        aux = SplitMix64(mix64(seed ^ _AUX_SALT))
        g1, g2, g3, g4 = aux.sample_distinct(n, 4)
        sides = aux.next_u64()
        v1 = 2 * g1 + (sides & 1)
        v2 = 2 * g2 + ((sides >> 1) & 1)
        v3 = 2 * g3 + ((sides >> 2) & 1)
        v4 = 2 * g4 + ((sides >> 3) & 1)
        between = ((adj[v1] | adj[v2]) >> v3 & 1) | ((adj[v1] | adj[v2]) >> v4 & 1)
        return 0 if between else 1
    if event_id == "doubleMinorAtLeast":
        from kempelab.minors import find_double_minor

        g = Graph(2 * n, tuple(adj))
        return 1 if find_double_minor(g, m) is not None else 0
    raise ValueError(f"unknown event id {event_id!r}")


def _chunk_sums(args) -> tuple[int, int]:
    event_id, n, k, m, seed_base, start, stop = args
    s = s2 = 0
    for t in range(start, stop):
        v = _trial_value(event_id, n, k, m, trial_seed(seed_base, t))
        s += v
        s2 += v * v
    return s, s2


def _validate(event_id: str, n: int, trials: int, k, m) -> None:
    if event_id not in EVENTS:
        raise ValueError(f"unknown event id {event_id!r}; known: {', '.join(EVENTS)}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if event_id in ("cliqueAtLeast", "kCliqueCount"):
        if k is None or k < 1:
            raise ValueError(f"{event_id} needs a clique size k >= 1")
    if event_id == "doubleMinorAtLeast":
        if m is None or m < 1:
            raise ValueError("doubleMinorAtLeast needs a target m >= 1")
        if n > DOUBLE_MINOR_N_CAP:
            raise ValueError(
                f"doubleMinorAtLeast is capped at n <= {DOUBLE_MINOR_N_CAP} (exhaustive search)"
            )
    if event_id == "crossPairEdge" and n < 2:
        raise ValueError("crossPairEdge needs n >= 2")
    if event_id == "noEdgeBetweenPairs" and n < 4:
        raise ValueError("noEdgeBetweenPairs needs n >= 4 (four distinct groups)")


def mc_estimate(
    event_id: str,
    n: int,
    trials: int,
    seed_base: int,
    k: int | None = None,
    m: int | None = None,
    jobs: int = 1,
) -> EstimateReport:
    """Run ``trials`` independent seeded trials of one event.

    Identical inputs give identical reports, bit for bit, regardless of
    ``jobs``: per-trial seeds are independent of execution order and the
    aggregation is exact integer arithmetic.
    """
    _validate(event_id, n, trials, k, m)
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    if jobs <= 1:
        s, s2 = _chunk_sums((event_id, n, k, m, seed_base, 0, trials))
    else:
        step = max(1, -(-trials // (jobs * 4)))
        chunks = [
            (event_id, n, k, m, seed_base, lo, min(lo + step, trials))
            for lo in range(0, trials, step)
        ]
        with Pool(processes=jobs) as pool:
            parts = pool.map(_chunk_sums, chunks)
        s = sum(p[0] for p in parts)
        s2 = sum(p[1] for p in parts)
    kind = "indicator" if event_id in INDICATOR_EVENTS else "count"
    return EstimateReport(
        event_id=event_id,
        n=n,
        k=k,
        m=m,
        trials=trials,
        seed_base=seed_base,
        kind=kind,
        sum_values=s,
        sum_squares=s2,
    )

"""Ensemble statistics over many independent chain runs.

Runs K chains with split seeds, then aggregates per-arc presence
frequencies and the induced-directed-3-cycle (motif) count distribution of
the sampled realizations.  For swap-only sampling of a non-arc-swap
sequence, the per-arc frequencies are additionally bias-corrected: arcs of
induced cycle sets sit frozen at frequency 1 (their reversals at 0) inside
one state-graph component, while unbiased sampling would give both 1/2.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from . import arcswap
from .chain import MODE_UNDIRECTED, ChainConfig, derive_seed, run_chain
from .core import DegreeSequence, DiDegreeSequence, Digraph, Graph, canonical_key
from .errors import InvalidInputError
from .realize import realize_directed, realize_undirected


@dataclass
class StatsReport:
    runs: int
    arc_frequency: dict[tuple[int, int], float]
    motif_counts: Optional[Counter]  # induced directed 3-cycles per sample
    corrected_frequency: Optional[dict[tuple[int, int], float]]
    final_keys: Counter  # canonical key hex -> visits


def count_directed_3cycles(g: Digraph) -> int:
    """Induced directed 3-cycles (exactly 3 cyclic arcs on the triple)."""
    count = 0
    for i in range(g.n):
        for j in range(i + 1, g.n):
            for k in range(j + 1, g.n):
                if arcswap._cycle_orientation(g, (i, j, k)) is not None:
                    count += 1
    return count


def _run_one(args):
    seq_pairs, directed, cfg_tuple, index = args
    tau, mode, seed = cfg_tuple
    if directed:
        g0 = realize_directed(DiDegreeSequence(seq_pairs))
    else:
        g0 = realize_undirected(DegreeSequence(seq_pairs))
    cfg = ChainConfig(tau=tau, mode=mode, seed=derive_seed(seed, index))
    result = run_chain(g0, cfg)
    pairs = result.graph.edges() if isinstance(result.graph, Graph) else result.graph.arcs()
    return tuple(sorted(pairs))


def ensemble_stats(
    s: DegreeSequence | DiDegreeSequence,
    cfg: ChainConfig,
    runs: int,
    workers: int = 1,
) -> StatsReport:
    """Aggregate K independent chains; deterministic in (cfg.seed, runs).

    Chain ``index`` uses the split seed ``derive_seed(cfg.seed, index)``, so
    the aggregate is independent of worker scheduling.
    """
    directed = isinstance(s, DiDegreeSequence)
    if directed == (cfg.mode == MODE_UNDIRECTED):
        raise InvalidInputError(f"mode {cfg.mode!r} does not fit the sequence kind")
    if runs < 1:
        raise InvalidInputError("runs must be >= 1")

    payload = s.pairs if directed else s.degrees
    jobs = [(payload, directed, (cfg.tau, cfg.mode, cfg.seed), i) for i in range(runs)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            finals = list(pool.map(_run_one, jobs, chunksize=64))
    else:
        finals = [_run_one(job) for job in jobs]

    arc_counts: Counter = Counter()
    key_counts: Counter = Counter()
    motifs: Optional[Counter] = Counter() if directed else None
    for pairs in finals:
        arc_counts.update(pairs)
        g = Digraph(s.n, pairs) if directed else Graph(s.n, pairs)
        key_counts[canonical_key(g).hex()] += 1
        if directed:
            motifs[count_directed_3cycles(g)] += 1

    freq = {arc: c / runs for arc, c in sorted(arc_counts.items())}

    corrected = None
    if directed and cfg.mode == "plain":
        g0 = realize_directed(s)
        bias = arcswap.arc_probability_bias(s, g0)
        if any(b.category != "unbiased" for b in bias.values()):
            corrected = {}
            for arc, b in sorted(bias.items()):
                if b.corrected_probability is not None:
                    corrected[arc] = b.corrected_probability
                elif arc in freq:
                    corrected[arc] = freq[arc]

    return StatsReport(
        runs=runs,
        arc_frequency=freq,
        motif_counts=motifs,
        corrected_frequency=corrected,
        final_keys=key_counts,
    )

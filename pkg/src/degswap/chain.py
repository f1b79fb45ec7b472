"""Switching Markov chains over realizations of a fixed degree sequence.

Three walks are provided, named by their move sets:

* ``undirected`` -- 2-swaps on non-adjacent edge pairs, two re-pairings each;
* ``full`` (directed) -- 2-swaps on vertex-disjoint arc pairs plus 3-cycle
  reorientations selected through directed 2-paths;
* ``plain`` (directed) -- 2-swaps only.

Every step selects one element of a constant-size universe uniformly, so the
walk is the canonical 1/d-per-arc random walk on the corresponding state
graph (see :mod:`degswap.statespace`): each state's walk degree counts one
slot per selectable element plus the padding loop its state-graph rule adds.
Loops are real steps; the graph just does not change.

Antiparallel arc pairs need one bookkeeping subtlety to keep the universe
size state-independent: a pair {(u,v),(v,u)} is a single adjacent arc pair
but contributes two degenerate in/out stub 2-paths (u,v,u) and (v,u,v), so
raw per-state counts drift by the number of such pairs.  The full walk
therefore treats each antiparallel pair as exactly one selectable element (a
loop; no swap or reorientation can use it), which makes every state's
universe exactly ``n_pairs + n_2paths``.  The plain walk, having no 2-path
category, draws from the pairs with distinct tails and distinct heads (the
same count), looping on the members that do not admit a swap.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass
from typing import Callable, Optional

from .core import (
    CanonicalKey,
    DegreeSequence,
    DiDegreeSequence,
    Digraph,
    Graph,
    canonical_key,
)
from .errors import InvalidInputError

MODE_UNDIRECTED = "undirected"
MODE_FULL = "full"
MODE_PLAIN = "plain"

DEFAULT_SEED = 1729

_MASK64 = (1 << 64) - 1


def derive_seed(base: int, index: int) -> int:
    """Seed for the ``index``-th independent chain of a run (splitmix64 mix)."""
    x = (base + 0x9E3779B97F4A7C15 * (index + 1)) & _MASK64
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    x = (x ^ (x >> 27)) * 0x94D049BB133111EB & _MASK64
    return x ^ (x >> 31)


def _make_randbelow(rng: random.Random) -> Callable[[int], int]:
    """Exactly uniform integer in [0, n) via rejection on getrandbits."""
    grb = rng.getrandbits

    def randbelow(n: int) -> int:
        if n <= 1:
            return 0
        k = (n - 1).bit_length()
        r = grb(k)
        while r >= n:
            r = grb(k)
        return r

    return randbelow


# ---------------------------------------------------------------------------
# the selection universe


def _choose2(x: int) -> int:
    return x * (x - 1) // 2


@dataclass(frozen=True)
class MoveUniverse:
    """Constant-size selection universe of one chain step.

    The counts depend on the degree sequence only; that constancy makes the
    walk degree uniform across states.  Directed counts are antiparallel
    corrected: a state with ``anti`` antiparallel pairs has
    ``n_pairs + anti`` vertex-disjoint arc pairs, ``n_2paths`` in/out stub
    2-paths of which ``2 * anti`` are degenerate, and the degenerate pair
    collapses to one loop element, so the total is always
    ``n_pairs + n_2paths``.
    """

    kind: str
    m: int
    n_pairs: int
    n_2paths: int
    twopath_cum: Optional[tuple[int, ...]]
    exhaustive_pairs: bool

    @staticmethod
    def undirected(s: DegreeSequence) -> "MoveUniverse":
        m = s.m
        n_pairs = _choose2(m) - sum(_choose2(d) for d in s.degrees)
        if n_pairs < 0:
            raise InvalidInputError("degree sequence admits no simple graph")
        return MoveUniverse(
            MODE_UNDIRECTED, m, n_pairs, 0, None, _use_exhaustive(m, n_pairs)
        )

    @staticmethod
    def directed_full(s: DiDegreeSequence) -> "MoveUniverse":
        m, n_pairs, n_2paths = _directed_counts(s)
        cum = []
        acc = 0
        for a, b in s.pairs:
            acc += a * b
            cum.append(acc)
        return MoveUniverse(
            MODE_FULL, m, n_pairs, n_2paths, tuple(cum), _use_exhaustive(m, n_pairs)
        )

    @staticmethod
    def directed_plain(s: DiDegreeSequence) -> "MoveUniverse":
        m, n_pairs, n_2paths = _directed_counts(s)
        return MoveUniverse(
            MODE_PLAIN,
            m,
            n_pairs,
            n_2paths,
            None,
            _use_exhaustive(m, n_pairs + n_2paths),
        )

    @property
    def walk_degree(self) -> int:
        """Out-degree of every state of the matching state graph."""
        if self.kind == MODE_UNDIRECTED:
            return 2 * self.n_pairs + 1
        if self.kind == MODE_FULL:
            return self.n_pairs + self.n_2paths + (1 if self.n_2paths == 0 else 0)
        return self.n_pairs + self.n_2paths + 1

    def counts_on(self, g: Graph | Digraph) -> tuple[int, int, int]:
        """Direct (disjoint pairs, stub 2-paths, antiparallel) counts on g.

        Constancy check: ``pairs - anti == n_pairs`` and
        ``stubs == n_2paths`` on every realization of the sequence.
        """
        if isinstance(g, Graph):
            pairs = sum(1 for _ in iter_nonadjacent_edge_pairs(g))
            return pairs, 0, 0
        pairs = sum(1 for _ in iter_nonadjacent_arc_pairs(g))
        twopaths = sum(x * y for x, y in zip(g.out_deg, g.in_deg))
        return pairs, twopaths, g.anti


def _directed_counts(s: DiDegreeSequence) -> tuple[int, int, int]:
    m = s.m
    if m != sum(s.ins):
        raise InvalidInputError("out-degree total differs from in-degree total")
    n_2paths = sum(a * b for a, b in s.pairs)
    n_pairs = (
        _choose2(m)
        - sum(_choose2(a) for a in s.outs)
        - sum(_choose2(b) for b in s.ins)
        - n_2paths
    )
    # n_pairs alone may be negative (each antiparallel pair shifts one pair
    # into the stub count twice); the role-disjoint total cannot be
    if n_pairs + n_2paths < 0:
        raise InvalidInputError("degree sequence admits no simple digraph")
    return m, n_pairs, n_2paths


def _use_exhaustive(m: int, count: int) -> bool:
    # Rejection sampling would stall when acceptable pairs are rare; fall
    # back to materializing them outright for tiny or near-degenerate input.
    return m <= 8 or 10 * count < _choose2(m)


def iter_nonadjacent_edge_pairs(g: Graph):
    """All unordered pairs of edges with four distinct endpoints, list order."""
    edges = g.edges()
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1 :]:
            if a != c and a != d and b != c and b != d:
                yield (a, b), (c, d)


def iter_nonadjacent_arc_pairs(g: Digraph):
    """All unordered pairs of arcs with four distinct endpoints, list order."""
    arcs = g.arcs()
    for i, (a, b) in enumerate(arcs):
        for c, d in arcs[i + 1 :]:
            if a != c and a != d and b != c and b != d:
                yield (a, b), (c, d)


def iter_role_disjoint_arc_pairs(g: Digraph):
    """Arc pairs with distinct tails and distinct heads, list order.

    The plain walk's pair universe: antiparallel and head-to-tail pairs are
    members (they loop), and the count is the same in every realization.
    """
    arcs = g.arcs()
    for i, (a, b) in enumerate(arcs):
        for c, d in arcs[i + 1 :]:
            if a != c and b != d:
                yield (a, b), (c, d)


class _PairCache:
    """Materialized selection lists, invalidated on graph mutation."""

    __slots__ = ("version", "pairs", "stub_version", "stubs")

    def __init__(self):
        self.version = -1
        self.pairs: list = []
        self.stub_version = -1
        self.stubs: list = []


def _draw_pair(g, universe, rb, cache):
    """Uniform unordered pair of edges/arcs with four distinct endpoints."""
    lst = g._edges if isinstance(g, Graph) else g._arcs
    if universe.exhaustive_pairs:
        if cache.version != g._version:
            if isinstance(g, Graph):
                cache.pairs = list(iter_nonadjacent_edge_pairs(g))
            else:
                cache.pairs = list(iter_nonadjacent_arc_pairs(g))
            cache.version = g._version
        pairs = cache.pairs
        return pairs[rb(len(pairs))]
    m = len(lst)
    mm = m * (m - 1)
    while True:
        k = rb(mm)
        i, j = divmod(k, m - 1)
        if j >= i:
            j += 1
        e1 = lst[i]
        e2 = lst[j]
        a, b = e1
        c, d = e2
        if a != c and a != d and b != c and b != d:
            return e1, e2


def _draw_role_disjoint_pair(g, universe, rb, cache):
    """Uniform arc pair with distinct tails and distinct heads."""
    arcs = g._arcs
    if universe.exhaustive_pairs:
        if cache.version != g._version:
            cache.pairs = list(iter_role_disjoint_arc_pairs(g))
            cache.version = g._version
        pairs = cache.pairs
        return pairs[rb(len(pairs))]
    m = len(arcs)
    mm = m * (m - 1)
    while True:
        k = rb(mm)
        i, j = divmod(k, m - 1)
        if j >= i:
            j += 1
        a1 = arcs[i]
        a2 = arcs[j]
        if a1[0] != a2[0] and a1[1] != a2[1]:
            return a1, a2


def _stub_at(g, cum, r):
    """The r-th in/out stub 2-path under the fixed cumulative weights."""
    v = bisect_right(cum, r)
    q = r - (cum[v - 1] if v else 0)
    in_list = g.in_list[v]
    deg_in = len(in_list)
    return in_list[q % deg_in], v, g.out_list[v][q // deg_in]


def _draw_proper_stub(g, universe, rb, cache):
    """Uniform non-degenerate 2-path (u,v,w), u != w.

    Rejection over the stub universe; materialized outright when proper
    stubs are rare among all stubs.
    """
    n_2paths = universe.n_2paths
    proper = n_2paths - 2 * g.anti
    if universe.m <= 8 or 10 * proper < n_2paths:
        if cache.stub_version != g._version:
            cache.stubs = [
                (u, v, w)
                for v in range(g.n)
                for u in g.in_list[v]
                for w in g.out_list[v]
                if u != w
            ]
            cache.stub_version = g._version
        stubs = cache.stubs
        return stubs[rb(len(stubs))]
    cum = universe.twopath_cum
    while True:
        u, v, w = _stub_at(g, cum, rb(n_2paths))
        if u != w:
            return u, v, w


# ---------------------------------------------------------------------------
# single steps
#
# Internal _step_* mutate the graph and return None on a loop, or the pair
# (removed, added) of arc/edge tuples on a move, so callers can undo or key
# the destination cheaply.


def _step_undirected(g, universe, rb, cache):
    n_pairs = universe.n_pairs
    d = 2 * n_pairs + 1
    slot = rb(d)
    if slot == d - 1:
        return None  # padding loop: keeps per-slot probability at 1/walk_degree
    e1, e2 = _draw_pair(g, universe, rb, cache)
    a, b = e1
    c, dd = e2
    if slot & 1:  # re-pair {a,d},{b,c}
        f1 = (a, dd) if a < dd else (dd, a)
        f2 = (b, c) if b < c else (c, b)
    else:  # re-pair {a,c},{b,d}
        f1 = (a, c) if a < c else (c, a)
        f2 = (b, dd) if b < dd else (dd, b)
    pos = g._pos
    if f1 in pos or f2 in pos:
        return None
    g._swap_edges(e1, e2, f1, f2)
    return (e1, e2), (f1, f2)


def _step_directed_plain(g, universe, rb, cache):
    d = universe.n_pairs + universe.n_2paths + 1
    slot = rb(d)
    if slot == d - 1:
        return None  # padding loop
    a1, a2 = _draw_role_disjoint_pair(g, universe, rb, cache)
    a, b = a1
    c, dd = a2
    if a == dd or b == c:
        return None  # head-to-tail or antiparallel pair: no swap exists
    pos = g._pos
    if (a, dd) in pos or (c, b) in pos:
        return None
    g._swap_arcs(a, b, c, dd)
    return (a1, a2), ((a, dd), (c, b))


def _attempt_arc_swap(g, universe, rb, cache):
    a1, a2 = _draw_pair(g, universe, rb, cache)
    a, b = a1
    c, d = a2
    pos = g._pos
    if (a, d) in pos or (c, b) in pos:
        return None
    g._swap_arcs(a, b, c, d)
    return (a1, a2), ((a, d), (c, b))


def _step_directed_full(g, universe, rb, cache):
    n_pairs = universe.n_pairs
    n_2paths = universe.n_2paths
    if n_2paths == 0:
        slot = rb(n_pairs + 1)
        if slot == n_pairs:
            return None  # sink/source-only sequences carry one padding loop
        return _attempt_arc_swap(g, universe, rb, cache)
    anti = g.anti
    disjoint = n_pairs + anti
    slot = rb(n_pairs + n_2paths)
    if slot < disjoint:
        return _attempt_arc_swap(g, universe, rb, cache)
    if slot >= disjoint + n_2paths - 2 * anti:
        return None  # one loop slot per antiparallel pair (it admits no move)
    if anti:
        u, v, w = _draw_proper_stub(g, universe, rb, cache)
    else:
        # proper stubs are all stubs: index directly by cumulative weight
        u, v, w = _stub_at(g, universe.twopath_cum, slot - disjoint)
    # reorientation gate: the 2-path must close an induced directed 3-cycle
    # and its endpoint must carry the strictly largest index
    if w <= u or w <= v:
        return None
    pos = g._pos
    if (w, u) not in pos or (v, u) in pos or (w, v) in pos or (u, w) in pos:
        return None
    g._reorient_triangle(u, v, w)
    return ((u, v), (v, w), (w, u)), ((v, u), (w, v), (u, w))


_STEPPERS = {
    MODE_UNDIRECTED: _step_undirected,
    MODE_FULL: _step_directed_full,
    MODE_PLAIN: _step_directed_plain,
}


# ---------------------------------------------------------------------------
# bulk-run kernels
#
# Exactly the _step_* logic with the loop constants hoisted and the pair
# cache kept locally, so a bulk run draws the same numbers in the same order
# as repeated single steps (the test suite pins that equivalence).


def _run_undirected_kernel(g: Graph, universe, rb, tau: int) -> int:
    n_pairs = universe.n_pairs
    d = 2 * n_pairs + 1
    loop_slot = d - 1
    exhaustive = universe.exhaustive_pairs
    pos = g._pos
    edges = g._edges
    swap = g._swap_edges
    m = len(edges)
    mm = m * (m - 1)
    pairs = None
    moves = 0
    for _ in range(tau):
        slot = rb(d)
        if slot == loop_slot:
            continue
        if exhaustive:
            if pairs is None:
                pairs = list(iter_nonadjacent_edge_pairs(g))
            e1, e2 = pairs[rb(n_pairs)]
            a, b = e1
            c, dd = e2
        else:
            while True:
                k = rb(mm)
                i, j = divmod(k, m - 1)
                if j >= i:
                    j += 1
                e1 = edges[i]
                e2 = edges[j]
                a, b = e1
                c, dd = e2
                if a != c and a != dd and b != c and b != dd:
                    break
        if slot & 1:
            f1 = (a, dd) if a < dd else (dd, a)
            f2 = (b, c) if b < c else (c, b)
        else:
            f1 = (a, c) if a < c else (c, a)
            f2 = (b, dd) if b < dd else (dd, b)
        if f1 in pos or f2 in pos:
            continue
        swap(e1, e2, f1, f2)
        pairs = None
        moves += 1
    return moves


def _run_plain_kernel(g: Digraph, universe, rb, tau: int) -> int:
    d = universe.n_pairs + universe.n_2paths + 1
    loop_slot = d - 1
    exhaustive = universe.exhaustive_pairs
    pos = g._pos
    arcs = g._arcs
    swap = g._swap_arcs
    m = len(arcs)
    mm = m * (m - 1)
    pairs = None
    moves = 0
    for _ in range(tau):
        if rb(d) == loop_slot:
            continue
        if exhaustive:
            if pairs is None:
                pairs = list(iter_role_disjoint_arc_pairs(g))
            a1, a2 = pairs[rb(len(pairs))]
            a, b = a1
            c, dd = a2
        else:
            while True:
                k = rb(mm)
                i, j = divmod(k, m - 1)
                if j >= i:
                    j += 1
                a, b = arcs[i]
                c, dd = arcs[j]
                if a != c and b != dd:
                    break
        if a == dd or b == c:
            continue
        if (a, dd) in pos or (c, b) in pos:
            continue
        swap(a, b, c, dd)
        pairs = None
        moves += 1
    return moves


def _run_full_kernel(g: Digraph, universe, rb, tau: int) -> int:
    n_pairs = universe.n_pairs
    n_2paths = universe.n_2paths
    d = n_pairs + n_2paths + (1 if n_2paths == 0 else 0)
    cum = universe.twopath_cum
    pos = g._pos
    arcs = g._arcs
    swap = g._swap_arcs
    reorient = g._reorient_triangle
    in_lists = g.in_list
    out_lists = g.out_list
    exhaustive = universe.exhaustive_pairs
    m = len(arcs)
    mm = m * (m - 1)
    stub_cache = _PairCache()
    pairs = None
    moves = 0
    for _ in range(tau):
        slot = rb(d)
        anti = g.anti
        if slot >= n_pairs + n_2paths - anti:
            continue  # padding loop (b3) or antiparallel-pair slot
        if slot < n_pairs + anti:
            if exhaustive:
                if pairs is None:
                    pairs = list(iter_nonadjacent_arc_pairs(g))
                a1, a2 = pairs[rb(len(pairs))]
                a, b = a1
                c, dd = a2
            else:
                while True:
                    k = rb(mm)
                    i, j = divmod(k, m - 1)
                    if j >= i:
                        j += 1
                    a, b = arcs[i]
                    c, dd = arcs[j]
                    if a != c and a != dd and b != c and b != dd:
                        break
            if (a, dd) in pos or (c, b) in pos:
                continue
            swap(a, b, c, dd)
            pairs = None
            moves += 1
            continue
        if anti:
            u, v, w = _draw_proper_stub(g, universe, rb, stub_cache)
        else:
            r = slot - n_pairs
            v = bisect_right(cum, r)
            q = r - (cum[v - 1] if v else 0)
            in_list = in_lists[v]
            deg_in = len(in_list)
            u = in_list[q % deg_in]
            w = out_lists[v][q // deg_in]
        if w <= u or w <= v:
            continue
        if (w, u) not in pos or (v, u) in pos or (w, v) in pos or (u, w) in pos:
            continue
        reorient(u, v, w)
        pairs = None
        moves += 1
    return moves


_KERNELS = {
    MODE_UNDIRECTED: _run_undirected_kernel,
    MODE_FULL: _run_full_kernel,
    MODE_PLAIN: _run_plain_kernel,
}


def universe_for(g: Graph | Digraph, mode: str) -> MoveUniverse:
    if mode == MODE_UNDIRECTED:
        if not isinstance(g, Graph):
            raise InvalidInputError("undirected mode needs an undirected graph")
        return MoveUniverse.undirected(g.degree_sequence())
    if not isinstance(g, Digraph):
        raise InvalidInputError(f"{mode} mode needs a digraph")
    if mode == MODE_FULL:
        return MoveUniverse.directed_full(g.degree_sequence())
    if mode == MODE_PLAIN:
        return MoveUniverse.directed_plain(g.degree_sequence())
    raise InvalidInputError(f"unknown mode {mode!r}")


def step_undirected(g: Graph, rng: random.Random, universe=None) -> bool:
    """One undirected chain step in place; True when the graph changed."""
    universe = universe or universe_for(g, MODE_UNDIRECTED)
    return _step_undirected(g, universe, _make_randbelow(rng), _PairCache()) is not None


def step_directed_full(g: Digraph, rng: random.Random, universe=None) -> bool:
    """One swap-or-reorient step in place; True when the digraph changed."""
    universe = universe or universe_for(g, MODE_FULL)
    return (
        _step_directed_full(g, universe, _make_randbelow(rng), _PairCache()) is not None
    )


def step_directed_plain(g: Digraph, rng: random.Random, universe=None) -> bool:
    """One swap-only step in place; True when the digraph changed."""
    universe = universe or universe_for(g, MODE_PLAIN)
    return (
        _step_directed_plain(g, universe, _make_randbelow(rng), _PairCache())
        is not None
    )


# ---------------------------------------------------------------------------
# whole runs


@dataclass(frozen=True)
class ChainConfig:
    tau: int
    mode: str
    seed: int = DEFAULT_SEED
    record_trace: bool = False

    def __post_init__(self):
        if self.tau < 0:
            raise InvalidInputError("tau must be >= 0")
        if self.mode not in _STEPPERS:
            raise InvalidInputError(f"unknown mode {self.mode!r}")


@dataclass
class ChainResult:
    graph: Graph | Digraph
    moves: int
    loops: int
    trace: Optional[list[CanonicalKey]]


def run_chain(
    g0: Graph | Digraph, cfg: ChainConfig, check_invariants: bool = False
) -> ChainResult:
    """Run tau steps from a copy of g0; deterministic given (g0, seed).

    With ``check_invariants`` every step re-derives the degree sequence and
    the universe counts on the current realization and asserts constancy.
    """
    universe = universe_for(g0, cfg.mode)
    g = g0.copy()
    rng = random.Random(cfg.seed)
    rb = _make_randbelow(rng)
    moves = 0

    if cfg.record_trace or check_invariants:
        step = _STEPPERS[cfg.mode]
        cache = _PairCache()
        trace = [canonical_key(g)] if cfg.record_trace else None
        s0 = g0.degree_sequence()
        for _ in range(cfg.tau):
            if step(g, universe, rb, cache) is not None:
                moves += 1
            if cfg.record_trace:
                trace.append(canonical_key(g))
            if check_invariants:
                if g.degree_sequence() != s0:
                    raise AssertionError("degree sequence drifted")
                pairs, twopaths, anti = universe.counts_on(g)
                if pairs - anti != universe.n_pairs:
                    raise AssertionError("corrected pair count drifted")
                if universe.kind != MODE_UNDIRECTED and twopaths != universe.n_2paths:
                    raise AssertionError("2-path count drifted")
        return ChainResult(g, moves, cfg.tau - moves, trace)

    moves = _KERNELS[cfg.mode](g, universe, rb, cfg.tau)
    return ChainResult(g, moves, cfg.tau - moves, None)

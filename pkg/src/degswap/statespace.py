"""Desk-scale ground truth: enumerate realizations and build explicit state graphs.

The three state-graph kinds mirror the chain modes:

* ``psi`` -- undirected 2-swap walk;
* ``phi`` -- directed walk with 2-swaps and 3-cycle reorientations;
* ``phibar`` -- directed walk with 2-swaps only.

Nodes are realizations (indexed by canonical key), arcs are moves, and loop
multiplicities follow the per-pair / per-2-path inventory, so the walk is
regular by construction and its transition row is ``1/walk_degree`` per slot.
"""

from __future__ import annotations

import itertools
import os
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional

from .chain import (
    MODE_FULL,
    MODE_PLAIN,
    MODE_UNDIRECTED,
    MoveUniverse,
    _make_randbelow,
    _PairCache,
    _STEPPERS,
    derive_seed,
    iter_nonadjacent_arc_pairs,
    iter_nonadjacent_edge_pairs,
    iter_role_disjoint_arc_pairs,
)
from .core import (
    CanonicalKey,
    DegreeSequence,
    DiDegreeSequence,
    Digraph,
    Graph,
    arc_index,
    canonical_key,
    graph_from_key,
    pair_index,
)
from .errors import InvalidInputError, ResourceLimitError

KIND_PSI = "psi"
KIND_PHI = "phi"
KIND_PHIBAR = "phibar"

_KIND_TO_MODE = {KIND_PSI: MODE_UNDIRECTED, KIND_PHI: MODE_FULL, KIND_PHIBAR: MODE_PLAIN}

DEFAULT_MAX_N_UNDIRECTED = 8
DEFAULT_MAX_N_DIRECTED = 6
MAX_N_ENV_VAR = "DEGSWAP_MAX_ENUM_N"


def _default_bound(directed: bool) -> int:
    env = os.environ.get(MAX_N_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise InvalidInputError(f"bad {MAX_N_ENV_VAR}={env!r}") from exc
    return DEFAULT_MAX_N_DIRECTED if directed else DEFAULT_MAX_N_UNDIRECTED


# ---------------------------------------------------------------------------
# exhaustive enumeration


def enumerate_realization_keys(
    s: DegreeSequence | DiDegreeSequence, max_n: Optional[int] = None
) -> Iterator[int]:
    """Key bit patterns of all realizations, in increasing order.

    Backtracks over the vertex-pair grid row by row with residual-degree
    pruning; each realization is produced exactly once.  The resource bound
    is checked eagerly, before the first key is produced.
    """
    directed = isinstance(s, DiDegreeSequence)
    bound = max_n if max_n is not None else _default_bound(directed)
    if s.n > bound:
        raise ResourceLimitError(f"n={s.n} exceeds enumeration bound {bound}")
    return _enum_directed_keys(s) if directed else _enum_undirected_keys(s)


def _enum_undirected_keys(s: DegreeSequence) -> Iterator[int]:
    n = s.n
    res = list(s.degrees)

    def rec(i: int, bits: int) -> Iterator[int]:
        if i == n:
            yield bits
            return
        # every vertex k >= i can still collect at most n-1-i edges
        cap = n - 1 - i
        for k in range(i, n):
            if res[k] > cap:
                return
        d = res[i]
        cands = [j for j in range(i + 1, n) if res[j] > 0]
        if d > len(cands):
            return
        if d == 0:
            yield from rec(i + 1, bits)
            return
        for combo in itertools.combinations(cands, d):
            add = 0
            for j in combo:
                res[j] -= 1
                add |= 1 << pair_index(n, i, j)
            yield from rec(i + 1, bits | add)
            for j in combo:
                res[j] += 1

    yield from rec(0, 0)


def _enum_directed_keys(s: DiDegreeSequence) -> Iterator[int]:
    n = s.n
    outs = s.outs
    in_res = list(s.ins)
    if sum(outs) != sum(in_res):
        return

    def rec(i: int, bits: int) -> Iterator[int]:
        if i == n:
            yield bits
            return
        # rows i..n-1 can still feed vertex k at most once each (self excluded)
        for k in range(n):
            if in_res[k] > n - i - (1 if k >= i else 0):
                return
        d = outs[i]
        cands = [j for j in range(n) if j != i and in_res[j] > 0]
        if d > len(cands):
            return
        if d == 0:
            yield from rec(i + 1, bits)
            return
        for combo in itertools.combinations(cands, d):
            add = 0
            for j in combo:
                in_res[j] -= 1
                add |= 1 << arc_index(n, i, j)
            yield from rec(i + 1, bits | add)
            for j in combo:
                in_res[j] += 1

    yield from rec(0, 0)


def enumerate_realizations(
    s: DegreeSequence | DiDegreeSequence, max_n: Optional[int] = None
) -> list[Graph | Digraph]:
    """All labeled simple realizations of s, each exactly once."""
    directed = isinstance(s, DiDegreeSequence)
    kind = "directed" if directed else "undirected"
    return [
        graph_from_key(CanonicalKey(kind, s.n, bits))
        for bits in enumerate_realization_keys(s, max_n)
    ]


# ---------------------------------------------------------------------------
# explicit state graphs


@dataclass
class StateGraph:
    kind: str
    n: int
    universe: MoveUniverse
    keys: list[CanonicalKey]  # sorted
    realizations: dict[CanonicalKey, Graph | Digraph]
    arcs: dict[CanonicalKey, dict[CanonicalKey, int]]  # multiplicities
    loops: dict[CanonicalKey, int]

    @property
    def node_count(self) -> int:
        return len(self.keys)

    def out_degree(self, key: CanonicalKey) -> int:
        return self.loops[key] + sum(self.arcs[key].values())

    def transition_row(self, key: CanonicalKey) -> dict[CanonicalKey, float]:
        """Markov transition probabilities out of a state, self included."""
        d = self.universe.walk_degree
        row = {dest: mult / d for dest, mult in self.arcs[key].items()}
        row[key] = self.loops[key] / d
        return row


def build_state_graph(
    s: DegreeSequence | DiDegreeSequence, kind: str, max_n: Optional[int] = None
) -> StateGraph:
    """Explicit move graph over all realizations of s.

    Adjacency comes from applying every selectable move of every state; the
    universe elements that gate into "do nothing" accumulate as loop
    multiplicity, plus the padding loop of the kind.  Antiparallel arc pairs
    count as one loop element each (see :mod:`degswap.chain`), which keeps
    every state at the same walk degree.
    """
    if kind not in _KIND_TO_MODE:
        raise InvalidInputError(f"unknown state-graph kind {kind!r}")
    directed = isinstance(s, DiDegreeSequence)
    if directed != (kind in (KIND_PHI, KIND_PHIBAR)):
        raise InvalidInputError(f"{kind} does not fit a {type(s).__name__}")

    graphs = enumerate_realizations(s, max_n)
    keys = sorted(canonical_key(g) for g in graphs)
    realizations = {canonical_key(g): g for g in graphs}

    if kind == KIND_PSI:
        universe = MoveUniverse.undirected(s)
    elif kind == KIND_PHI:
        universe = MoveUniverse.directed_full(s)
    else:
        universe = MoveUniverse.directed_plain(s)

    arcs: dict[CanonicalKey, dict[CanonicalKey, int]] = {}
    loops: dict[CanonicalKey, int] = {}
    n = s.n
    for key in keys:
        g = realizations[key]
        out: dict[CanonicalKey, int] = {}
        nloops = 0
        if kind == KIND_PSI:
            pos = g._pos
            for (a, b), (c, d) in iter_nonadjacent_edge_pairs(g):
                for f1, f2 in (
                    (_ordered(a, c), _ordered(b, d)),
                    (_ordered(a, d), _ordered(b, c)),
                ):
                    if f1 in pos or f2 in pos:
                        nloops += 1
                    else:
                        mask = (
                            (1 << pair_index(n, a, b))
                            | (1 << pair_index(n, c, d))
                            | (1 << pair_index(n, *f1))
                            | (1 << pair_index(n, *f2))
                        )
                        dest = CanonicalKey(key.kind, n, key.bits ^ mask)
                        out[dest] = out.get(dest, 0) + 1
            nloops += 1  # one padding loop per state
        elif kind == KIND_PHI:
            pos = g._pos
            for (a, b), (c, d) in iter_nonadjacent_arc_pairs(g):
                if (a, d) in pos or (c, b) in pos:
                    nloops += 1
                else:
                    mask = (
                        (1 << arc_index(n, a, b))
                        | (1 << arc_index(n, c, d))
                        | (1 << arc_index(n, a, d))
                        | (1 << arc_index(n, c, b))
                    )
                    dest = CanonicalKey(key.kind, n, key.bits ^ mask)
                    out[dest] = out.get(dest, 0) + 1
            for v in range(n):
                for u in g.in_list[v]:
                    for w in g.out_list[v]:
                        if u == w:
                            # an antiparallel pair is one loop element, seen
                            # once from each of its two centers
                            if v < u:
                                nloops += 1
                            continue
                        if (
                            w > u
                            and w > v
                            and (w, u) in pos
                            and (v, u) not in pos
                            and (w, v) not in pos
                            and (u, w) not in pos
                        ):
                            mask = (
                                (1 << arc_index(n, u, v))
                                | (1 << arc_index(n, v, w))
                                | (1 << arc_index(n, w, u))
                                | (1 << arc_index(n, v, u))
                                | (1 << arc_index(n, w, v))
                                | (1 << arc_index(n, u, w))
                            )
                            dest = CanonicalKey(key.kind, n, key.bits ^ mask)
                            out[dest] = out.get(dest, 0) + 1
                        else:
                            nloops += 1
            if universe.n_2paths == 0:
                nloops += 1  # sink/source-only padding loop
        else:  # phibar
            pos = g._pos
            for (a, b), (c, d) in iter_role_disjoint_arc_pairs(g):
                if (
                    a == d
                    or b == c
                    or (a, d) in pos
                    or (c, b) in pos
                ):
                    nloops += 1
                else:
                    mask = (
                        (1 << arc_index(n, a, b))
                        | (1 << arc_index(n, c, d))
                        | (1 << arc_index(n, a, d))
                        | (1 << arc_index(n, c, b))
                    )
                    dest = CanonicalKey(key.kind, n, key.bits ^ mask)
                    out[dest] = out.get(dest, 0) + 1
            nloops += 1  # one padding loop per state
        arcs[key] = out
        loops[key] = nloops

    return StateGraph(kind, n, universe, keys, realizations, arcs, loops)


def _ordered(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def rule_a_neighbors(sg: StateGraph) -> dict[CanonicalKey, set[CanonicalKey]]:
    """Definitional adjacency, straight from symmetric-difference sizes.

    psi / phibar: two states are adjacent iff the difference has 4 arcs;
    phi additionally when it has 6 arcs on exactly 3 distinct vertices.
    Used to cross-check that move-generated arcs agree with the definition.
    """
    nbrs: dict[CanonicalKey, set[CanonicalKey]] = {k: set() for k in sg.keys}
    keys = sg.keys
    n = sg.n
    for i, x in enumerate(keys):
        for y in keys[i + 1 :]:
            diff = x.bits ^ y.bits
            size = diff.bit_count()
            adjacent = size == 4
            if not adjacent and sg.kind == KIND_PHI and size == 6:
                verts = set()
                for u in range(n):
                    for v in range(n):
                        if u != v and diff >> arc_index(n, u, v) & 1:
                            verts.add(u)
                            verts.add(v)
                adjacent = len(verts) == 3
            if adjacent:
                nbrs[x].add(y)
                nbrs[y].add(x)
    return nbrs


# ---------------------------------------------------------------------------
# structural property checks


@dataclass
class PropertyReport:
    symmetric: bool
    regular: bool
    degree: Optional[int]
    non_bipartite: bool
    strongly_connected: bool
    component_sizes: list[int]
    diameters: list[int]


def _strong_components(sg: StateGraph) -> list[list[CanonicalKey]]:
    # Kosaraju with explicit stacks; loops are irrelevant to components.
    order = []
    seen = set()
    for root in sg.keys:
        if root in seen:
            continue
        stack = [(root, iter(sg.arcs[root]))]
        seen.add(root)
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append((nxt, iter(sg.arcs[nxt])))
                    advanced = True
                    break
            if not advanced:
                order.append(node)
                stack.pop()

    rev: dict[CanonicalKey, list[CanonicalKey]] = {k: [] for k in sg.keys}
    for x, row in sg.arcs.items():
        for y in row:
            rev[y].append(x)

    comps = []
    assigned = set()
    for root in reversed(order):
        if root in assigned:
            continue
        comp = [root]
        assigned.add(root)
        queue = deque([root])
        while queue:
            node = queue.popleft()
            for nxt in rev[node]:
                if nxt not in assigned:
                    assigned.add(nxt)
                    comp.append(nxt)
                    queue.append(nxt)
        comps.append(comp)
    return comps


def _bfs_dists(sg: StateGraph, src: CanonicalKey) -> dict[CanonicalKey, int]:
    dist = {src: 0}
    queue = deque([src])
    while queue:
        node = queue.popleft()
        for nxt in sg.arcs[node]:
            if nxt not in dist:
                dist[nxt] = dist[node] + 1
                queue.append(nxt)
    return dist


def check_properties(sg: StateGraph) -> PropertyReport:
    symmetric = all(
        sg.arcs.get(y, {}).get(x, 0) == mult
        for x, row in sg.arcs.items()
        for y, mult in row.items()
    )
    degrees = {sg.out_degree(k) for k in sg.keys}
    regular = len(degrees) == 1
    degree = degrees.pop() if regular else None

    comps = _strong_components(sg)
    comp_sizes = sorted((len(c) for c in comps), reverse=True)

    # a component is aperiodic here iff it carries a loop or an odd cycle
    non_bip = True
    for comp in comps:
        if any(sg.loops[k] > 0 for k in comp):
            continue
        color = {comp[0]: 0}
        queue = deque([comp[0]])
        bipartite = True
        members = set(comp)
        while queue and bipartite:
            node = queue.popleft()
            for nxt in sg.arcs[node]:
                if nxt not in members:
                    continue
                if nxt not in color:
                    color[nxt] = color[node] ^ 1
                    queue.append(nxt)
                elif color[nxt] == color[node]:
                    bipartite = False
                    break
        if bipartite:
            non_bip = False
            break

    diameters = []
    for comp in comps:
        worst = 0
        for src in comp:
            dist = _bfs_dists(sg, src)
            worst = max(worst, max(dist[k] for k in comp))
        diameters.append(worst)

    return PropertyReport(
        symmetric=symmetric,
        regular=regular,
        degree=degree,
        non_bipartite=non_bip,
        strongly_connected=len(comps) == 1,
        component_sizes=comp_sizes,
        diameters=diameters,
    )


@dataclass
class BoundReport:
    kind: str
    applicable: bool
    checked_pairs: int
    violations: list[tuple[str, str, int, int]]  # (from_hex, to_hex, dist, bound)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_diameter_bounds(sg: StateGraph, arc_swap: Optional[bool] = None) -> BoundReport:
    """Distance bounds between every ordered state pair.

    psi and phi promise dist <= |G delta G'|/2 - 1.  phibar promises
    dist <= (|G delta G'|/2 - 1) * (n+1), but only for arc-swap sequences
    (pass ``arc_swap``; for 6-arc differences on 3 vertices this expression
    equals the sharper 2n+2 promise, so no separate case is needed).
    """
    if sg.kind == KIND_PHIBAR:
        if arc_swap is None:
            raise InvalidInputError("phibar bounds need the arc-swap verdict")
        if not arc_swap:
            return BoundReport(sg.kind, False, 0, [])

    violations = []
    checked = 0
    n = sg.n
    for x in sg.keys:
        dist = _bfs_dists(sg, x)
        for y in sg.keys:
            if y == x:
                continue
            diff = x.diff_size(y)
            bound = diff // 2 - 1
            if sg.kind == KIND_PHIBAR:
                bound *= n + 1
            checked += 1
            d = dist.get(y)
            if d is None or d > bound:
                violations.append((x.hex(), y.hex(), -1 if d is None else d, bound))
    return BoundReport(sg.kind, True, checked, violations)


# ---------------------------------------------------------------------------
# empirical one-step fidelity


@dataclass
class ComparisonReport:
    kind: str
    steps_per_state: int
    max_abs_sigma: float
    failures: list[tuple[str, str, int, float, float]]
    # (state_hex, dest_hex, observed, expected_count, sigma)

    @property
    def ok(self) -> bool:
        return not self.failures


def empirical_transition_check(
    s: DegreeSequence | DiDegreeSequence,
    kind: str,
    steps_per_state: int,
    seed: int = 0,
    sg: Optional[StateGraph] = None,
    tolerance_sigmas: float = 4.0,
) -> ComparisonReport:
    """Single chain steps from every state vs. the explicit transition row.

    Runs ``steps_per_state`` one-step trials from each enumerated state
    (undoing any move) and checks each destination count against its
    binomial expectation within ``tolerance_sigmas``.
    """
    if sg is None:
        sg = build_state_graph(s, kind)
    mode = _KIND_TO_MODE[kind]
    step = _STEPPERS[mode]
    universe = sg.universe
    d = universe.walk_degree
    n = sg.n
    directed = kind != KIND_PSI

    failures = []
    max_sigma = 0.0
    for idx, key in enumerate(sg.keys):
        g = sg.realizations[key].copy()
        rng = random.Random(derive_seed(seed, idx))
        rb = _make_randbelow(rng)
        cache = _PairCache()
        counts: dict[CanonicalKey, int] = {}
        sig_dest: dict = {}
        if directed:
            add, remove = g._add_arc, g._remove_arc
            index = arc_index
        else:
            add, remove = g._add_edge, g._remove_edge
            index = pair_index
        for _ in range(steps_per_state):
            res = step(g, universe, rb, cache)
            if res is None:
                counts[key] = counts.get(key, 0) + 1
                continue
            dest = sig_dest.get(res)
            if dest is None:
                removed, added = res
                mask = 0
                for u, v in removed:
                    mask |= 1 << index(n, u, v)
                for u, v in added:
                    mask |= 1 << index(n, u, v)
                dest = CanonicalKey(key.kind, n, key.bits ^ mask)
                sig_dest[res] = dest
            counts[dest] = counts.get(dest, 0) + 1
            removed, added = res
            for u, v in added:
                remove(u, v)
            for u, v in removed:
                add(u, v)

        row = sg.transition_row(key)
        seen = set(counts) | set(row)
        for dest in seen:
            p = row.get(dest, 0.0)
            obs = counts.get(dest, 0)
            expected = steps_per_state * p
            var = steps_per_state * p * (1.0 - p)
            if var == 0.0:
                if obs != expected:
                    failures.append((key.hex(), dest.hex(), obs, expected, float("inf")))
                continue
            sigma = abs(obs - expected) / var**0.5
            max_sigma = max(max_sigma, sigma)
            if sigma > tolerance_sigmas:
                failures.append((key.hex(), dest.hex(), obs, expected, sigma))

    return ComparisonReport(kind, steps_per_state, max_sigma, failures)


# ---------------------------------------------------------------------------
# export


def to_dot(sg: StateGraph) -> str:
    """GraphViz rendering; arc labels carry multiplicity, nodes their loops."""
    lines = [f'digraph "{sg.kind}" {{']
    for key in sg.keys:
        lines.append(f'  "{key.hex()}" [label="{key.hex()}\\nloops={sg.loops[key]}"];')
    for x in sg.keys:
        for y, mult in sorted(sg.arcs[x].items()):
            label = f' [label="{mult}"]' if mult != 1 else ""
            lines.append(f'  "{x.hex()}" -> "{y.hex()}"{label};')
    lines.append("}")
    return "\n".join(lines) + "\n"

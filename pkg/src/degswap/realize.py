"""Feasibility tests and greedy construction of one realization.

Undirected feasibility uses the Erdos-Gallai inequalities and construction
uses the Havel-Hakimi greedy; the directed counterparts are the
Fulkerson-Chen inequalities and the Kleitman-Wang greedy.  Reports carry the
first violated inequality index for diagnosability.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import DegreeSequence, DiDegreeSequence, Digraph, Graph
from .errors import InternalInconsistencyError, RealizationError


@dataclass(frozen=True)
class RealizabilityReport:
    graphical: bool
    witness: Optional[Graph | Digraph]
    violated_condition: Optional[str]


# ---------------------------------------------------------------------------
# undirected


def _erdos_gallai_violation(s: DegreeSequence) -> Optional[str]:
    degs = sorted(s.degrees, reverse=True)
    n = s.n
    if degs[0] > n - 1:
        return f"degree {degs[0]} exceeds n-1={n - 1}"
    if sum(degs) % 2:
        return "odd degree total"
    # prefix sums against k(k-1) + sum of min(d_i, k) over the tail
    prefix = 0
    for k in range(1, n + 1):
        prefix += degs[k - 1]
        bound = k * (k - 1) + sum(min(d, k) for d in degs[k:])
        if prefix > bound:
            return f"Erdos-Gallai inequality fails at k={k} ({prefix} > {bound})"
    return None


def _havel_hakimi(s: DegreeSequence) -> Graph:
    n = s.n
    residual = list(s.degrees)
    g = Graph(n)
    # reduce the largest residual each round; ties go to the lowest index
    for _ in range(n):
        v = max(range(n), key=lambda i: (residual[i], -i))
        d = residual[v]
        if d == 0:
            break
        targets = sorted(
            (i for i in range(n) if i != v and residual[i] > 0),
            key=lambda i: (-residual[i], i),
        )[:d]
        if len(targets) < d:
            raise InternalInconsistencyError("greedy ran out of targets")
        residual[v] = 0
        for t in targets:
            residual[t] -= 1
            g._add_edge(*((v, t) if v < t else (t, v)))
    return g


def is_graphical(s: DegreeSequence) -> RealizabilityReport:
    """Erdos-Gallai test; on success the report carries a witness graph."""
    violation = _erdos_gallai_violation(s)
    if violation is not None:
        return RealizabilityReport(False, None, violation)
    return RealizabilityReport(True, _havel_hakimi(s), None)


def realize_undirected(s: DegreeSequence) -> Graph:
    violation = _erdos_gallai_violation(s)
    if violation is not None:
        raise RealizationError(violation)
    return _havel_hakimi(s)


# ---------------------------------------------------------------------------
# directed


def _fulkerson_chen_violation(s: DiDegreeSequence) -> Optional[str]:
    n = s.n
    for i, (a, b) in enumerate(s.pairs):
        if a > n - 1 or b > n - 1:
            return f"degree pair {(a, b)} at vertex {i} exceeds n-1={n - 1}"
    if sum(s.outs) != sum(s.ins):
        return f"out-degree total {sum(s.outs)} != in-degree total {sum(s.ins)}"
    # sort pairs lexicographically non-increasing, then check the dominance
    # inequalities with the loopless min(b_i, k-1) head term
    pairs = sorted(s.pairs, reverse=True)
    prefix = 0
    for k in range(1, n + 1):
        prefix += pairs[k - 1][0]
        bound = sum(min(b, k - 1) for _, b in pairs[:k]) + sum(
            min(b, k) for _, b in pairs[k:]
        )
        if prefix > bound:
            return f"Fulkerson-Chen inequality fails at k={k} ({prefix} > {bound})"
    return None


def _kleitman_wang(s: DiDegreeSequence) -> Digraph:
    n = s.n
    out_res = [a for a, _ in s.pairs]
    in_res = [b for _, b in s.pairs]
    g = Digraph(n)
    for _ in range(n):
        v = max(range(n), key=lambda i: (out_res[i], -i))
        d = out_res[v]
        if d == 0:
            break
        # Targets by largest residual in-degree; ties by larger residual
        # out-degree, then lowest index.  The out-degree tie-break matters:
        # with plain lowest-index ties ((1,0),(0,1),(1,1)) strands vertex 3's
        # out-stub.
        targets = sorted(
            (i for i in range(n) if i != v and in_res[i] > 0),
            key=lambda i: (-in_res[i], -out_res[i], i),
        )[:d]
        if len(targets) < d:
            raise InternalInconsistencyError("greedy ran out of targets")
        out_res[v] = 0
        for t in targets:
            in_res[t] -= 1
            g._add_arc(v, t)
    if g.degree_sequence() != s:
        raise InternalInconsistencyError("greedy output missed the sequence")
    return g


def is_digraphical(s: DiDegreeSequence) -> RealizabilityReport:
    """Fulkerson-Chen test; on success the report carries a witness digraph."""
    violation = _fulkerson_chen_violation(s)
    if violation is not None:
        return RealizabilityReport(False, None, violation)
    return RealizabilityReport(True, _kleitman_wang(s), None)


def realize_directed(s: DiDegreeSequence) -> Digraph:
    violation = _fulkerson_chen_violation(s)
    if violation is not None:
        raise RealizationError(violation)
    return _kleitman_wang(s)

"""Shared oracles and helpers.

The enumeration oracles here deliberately avoid the package's backtracking
enumerator: they filter every subset of the vertex-pair grid, so they can
certify it.
"""

import itertools
import math

import pytest

from degswap.core import DegreeSequence, DiDegreeSequence, Digraph, arc_index


def subset_enum_undirected(s: DegreeSequence) -> list[frozenset]:
    """Edge sets of all realizations, by filtering every subset of the grid."""
    n = s.n
    grid = list(itertools.combinations(range(n), 2))
    out = []
    for bits in range(1 << len(grid)):
        degs = [0] * n
        edges = []
        for i, (u, v) in enumerate(grid):
            if bits >> i & 1:
                degs[u] += 1
                degs[v] += 1
                edges.append((u, v))
        if tuple(degs) == s.degrees:
            out.append(frozenset(edges))
    return out


def subset_enum_directed(s: DiDegreeSequence) -> list[frozenset]:
    n = s.n
    grid = [(u, v) for u in range(n) for v in range(n) if u != v]
    out = []
    for bits in range(1 << len(grid)):
        outs = [0] * n
        ins = [0] * n
        arcs = []
        for i, (u, v) in enumerate(grid):
            if bits >> i & 1:
                outs[u] += 1
                ins[v] += 1
                arcs.append((u, v))
        if tuple(outs) == s.outs and tuple(ins) == s.ins:
            out.append(frozenset(arcs))
    return out


def oracle_cycle_sets(s: DiDegreeSequence, keys) -> list[tuple[int, int, int]]:
    """Triples inducing a directed 3-cycle in every given realization key."""
    n = s.n
    cand = []
    for t in itertools.combinations(range(n), 3):
        i, j, k = t
        ma = (
            (1 << arc_index(n, i, j))
            | (1 << arc_index(n, j, k))
            | (1 << arc_index(n, k, i))
        )
        mb = (
            (1 << arc_index(n, i, k))
            | (1 << arc_index(n, k, j))
            | (1 << arc_index(n, j, i))
        )
        cand.append((t, ma, mb, ma | mb))
    for bits in keys:
        cand = [(t, a, b, m) for (t, a, b, m) in cand if (bits & m) in (a, b)]
        if not cand:
            break
    return [t for (t, _, _, _) in cand]


def chi2_sf(x: float, df: int) -> float:
    """Upper tail of the chi-square distribution.

    Even df: the closed form exp(-x/2) * sum_{k<df/2} (x/2)^k / k!.  Odd df:
    the same series started from the df=1 tail erfc(sqrt(x/2)), using the
    recurrence sf(df+2) = sf(df) + (x/2)^(df/2) exp(-x/2) / Gamma(df/2 + 1).
    """
    h = x / 2.0
    if df % 2 == 0:
        return math.exp(-h) * sum(h**k / math.factorial(k) for k in range(df // 2))
    q = math.erfc(math.sqrt(h))
    for k in range(1, df, 2):
        q += h ** (k / 2.0) * math.exp(-h) / math.gamma(k / 2.0 + 1.0)
    return q


def all_digraphical_sequences(n: int, max_deg: int):
    """Every digraphical labeled sequence with the given order and degree cap."""
    from degswap.realize import is_digraphical

    vals = [(a, b) for a in range(max_deg + 1) for b in range(max_deg + 1)]
    for combo in itertools.product(vals, repeat=n):
        if sum(a for a, _ in combo) != sum(b for _, b in combo):
            continue
        s = DiDegreeSequence(combo)
        report = is_digraphical(s)
        if report.graphical:
            yield s, report.witness


def all_graphical_sequences(n: int, max_deg: int):
    from degswap.realize import is_graphical

    for degs in itertools.product(range(max_deg + 1), repeat=n):
        s = DegreeSequence(degs)
        report = is_graphical(s)
        if report.graphical:
            yield s, report.witness


def mobile_blocked_instance() -> Digraph:
    """Non-arc-swap instance whose swap-only walk still moves.

    Triangle {0,1,2} tied both ways to the bidirected pair {3,4}; vertices 5
    and 6 tied both ways to 3 and 4 respectively.  The triangle is an induced
    cycle set, yet the arcs between {5,6} and {3,4} admit 2-swaps, so the
    swap-only state graph has two components of four states each.
    """
    arcs = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 3)]
    for c in (0, 1, 2):
        for a in (3, 4):
            arcs += [(c, a), (a, c)]
    arcs += [(5, 3), (3, 5), (6, 4), (4, 6)]
    return Digraph(7, arcs)


# ---------------------------------------------------------------------------
# acceptance reporting

ACCEPTANCE_RESULTS: dict[int, tuple[str, bool, float]] = {}


def record_acceptance(num: int, name: str, ok: bool, elapsed: float) -> None:
    ACCEPTANCE_RESULTS[num] = (name, ok, elapsed)


@pytest.hookimpl(trylast=True)
def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        name, ok, elapsed = ACCEPTANCE_RESULTS[num]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(
            f"criterion {num} ({name}): {status} [{elapsed:.1f}s]"
        )

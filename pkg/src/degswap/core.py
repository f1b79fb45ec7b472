"""Graph/digraph values, degree sequences, canonical keys, and symmetric differences.

Vertices are the integers ``0 .. n-1`` throughout.  Graphs are simple and
labeled: no loops, no parallel edges; digraphs additionally allow a pair of
antiparallel arcs ``(u, v)`` and ``(v, u)``.

Graph and Digraph values are mutable only through the operations in
:mod:`degswap.moves`; a value that is no longer being stepped can be shared
freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import InvalidInputError

UNDIRECTED = "undirected"
DIRECTED = "directed"


# ---------------------------------------------------------------------------
# degree sequences


@dataclass(frozen=True)
class DegreeSequence:
    """Prescribed degrees for an undirected graph, one entry per vertex.

    Entries of 0 are permitted; isolated vertices are harmless.
    """

    degrees: tuple[int, ...]

    def __init__(self, degrees: Iterable[int]):
        degs = tuple(int(d) for d in degrees)
        if len(degs) < 1:
            raise InvalidInputError("degree sequence needs at least one vertex")
        if any(d < 0 for d in degs):
            raise InvalidInputError(f"negative degree in {degs}")
        object.__setattr__(self, "degrees", degs)

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def total(self) -> int:
        return sum(self.degrees)

    @property
    def m(self) -> int:
        """Edge count of any realization (total degree halved)."""
        return self.total // 2

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)


@dataclass(frozen=True)
class DiDegreeSequence:
    """Prescribed (out, in) degree pairs for a digraph, one pair per vertex."""

    pairs: tuple[tuple[int, int], ...]

    def __init__(self, pairs: Iterable[tuple[int, int]]):
        ps = tuple((int(a), int(b)) for a, b in pairs)
        if len(ps) < 1:
            raise InvalidInputError("degree sequence needs at least one vertex")
        if any(a < 0 or b < 0 for a, b in ps):
            raise InvalidInputError(f"negative degree in {ps}")
        object.__setattr__(self, "pairs", ps)

    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def outs(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.pairs)

    @property
    def ins(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.pairs)

    @property
    def m(self) -> int:
        """Arc count of any realization (the common out/in total)."""
        return sum(self.outs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)


# ---------------------------------------------------------------------------
# graphs


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected labeled graph with O(1) edge queries.

    Edges are stored both as a position map (for membership) and as a dense
    list (for uniform random indexing); moves keep the two in sync.
    """

    __slots__ = ("n", "degree", "adj", "_edges", "_pos", "_version")

    kind = UNDIRECTED

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise InvalidInputError("graph needs at least one vertex")
        self.n = n
        self.degree = [0] * n
        self.adj = [set() for _ in range(n)]
        self._edges: list[tuple[int, int]] = []
        self._pos: dict[tuple[int, int], int] = {}
        self._version = 0
        for u, v in edges:
            self._check_pair(u, v)
            e = _norm_edge(u, v)
            if e in self._pos:
                raise InvalidInputError(f"duplicate edge {e}")
            self._add_edge(*e)

    def _check_pair(self, u: int, v: int) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise InvalidInputError(f"vertex out of range in ({u}, {v})")
        if u == v:
            raise InvalidInputError(f"loop ({u}, {v}) not allowed")

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> list[tuple[int, int]]:
        """Edges in list order; do not mutate."""
        return self._edges

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self._pos

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def degree_sequence(self) -> DegreeSequence:
        return DegreeSequence(self.degree)

    def copy(self) -> "Graph":
        g = Graph.__new__(Graph)
        g.n = self.n
        g.degree = list(self.degree)
        g.adj = [set(s) for s in self.adj]
        g._edges = list(self._edges)
        g._pos = dict(self._pos)
        g._version = 0
        return g

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._pos.keys() == other._pos.keys()
        )

    __hash__ = None  # mutable

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self._edges)})"

    # mutation: reserved for moves / constructors

    def _add_edge(self, u: int, v: int) -> None:
        e = (u, v)
        self._pos[e] = len(self._edges)
        self._edges.append(e)
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.degree[u] += 1
        self.degree[v] += 1
        self._version += 1

    def _remove_edge(self, u: int, v: int) -> None:
        e = (u, v)
        i = self._pos.pop(e)
        last = self._edges.pop()
        if last != e:
            self._edges[i] = last
            self._pos[last] = i
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self.degree[u] -= 1
        self.degree[v] -= 1
        self._version += 1

    def _swap_edges(self, e1, e2, f1, f2) -> None:
        """Replace edges e1, e2 by f1, f2 on the same four endpoints.

        Degree-preserving by construction, so the list slots are reused.
        """
        pos = self._pos
        edges = self._edges
        adj = self.adj
        i1 = pos.pop(e1)
        i2 = pos.pop(e2)
        pos[f1] = i1
        edges[i1] = f1
        pos[f2] = i2
        edges[i2] = f2
        for u, v in (e1, e2):
            adj[u].discard(v)
            adj[v].discard(u)
        for u, v in (f1, f2):
            adj[u].add(v)
            adj[v].add(u)
        self._version += 1


class Digraph:
    """Simple directed labeled graph; antiparallel arc pairs are allowed.

    Per-vertex in/out neighbor lists are kept alongside the arc list so a
    chain step can index a uniform in-arc or out-arc in O(1).
    """

    __slots__ = (
        "n",
        "out_deg",
        "in_deg",
        "out_list",
        "in_list",
        "anti",
        "_out_lpos",
        "_in_lpos",
        "_arcs",
        "_pos",
        "_version",
    )

    kind = DIRECTED

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise InvalidInputError("digraph needs at least one vertex")
        self.n = n
        self.out_deg = [0] * n
        self.in_deg = [0] * n
        self.out_list: list[list[int]] = [[] for _ in range(n)]
        self.in_list: list[list[int]] = [[] for _ in range(n)]
        self.anti = 0  # antiparallel arc pairs {(u,v),(v,u)} currently present
        self._out_lpos: list[dict[int, int]] = [{} for _ in range(n)]
        self._in_lpos: list[dict[int, int]] = [{} for _ in range(n)]
        self._arcs: list[tuple[int, int]] = []
        self._pos: dict[tuple[int, int], int] = {}
        self._version = 0
        for u, v in arcs:
            self._check_pair(u, v)
            if (u, v) in self._pos:
                raise InvalidInputError(f"duplicate arc ({u}, {v})")
            self._add_arc(u, v)

    def _check_pair(self, u: int, v: int) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise InvalidInputError(f"vertex out of range in ({u}, {v})")
        if u == v:
            raise InvalidInputError(f"loop ({u}, {v}) not allowed")

    @property
    def m(self) -> int:
        return len(self._arcs)

    def arcs(self) -> list[tuple[int, int]]:
        """Arcs in list order; do not mutate."""
        return self._arcs

    def arc_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self._arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._pos

    def out_neighbors(self, v: int) -> list[int]:
        return sorted(self.out_list[v])

    def in_neighbors(self, v: int) -> list[int]:
        return sorted(self.in_list[v])

    def degree_sequence(self) -> DiDegreeSequence:
        return DiDegreeSequence(zip(self.out_deg, self.in_deg))

    def copy(self) -> "Digraph":
        g = Digraph.__new__(Digraph)
        g.n = self.n
        g.out_deg = list(self.out_deg)
        g.in_deg = list(self.in_deg)
        g.out_list = [list(ls) for ls in self.out_list]
        g.in_list = [list(ls) for ls in self.in_list]
        g.anti = self.anti
        g._out_lpos = [dict(d) for d in self._out_lpos]
        g._in_lpos = [dict(d) for d in self._in_lpos]
        g._arcs = list(self._arcs)
        g._pos = dict(self._pos)
        g._version = 0
        return g

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self._pos.keys() == other._pos.keys()
        )

    __hash__ = None  # mutable

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={sorted(self._arcs)})"

    # mutation: reserved for moves / constructors

    def _add_arc(self, u: int, v: int) -> None:
        a = (u, v)
        if (v, u) in self._pos:
            self.anti += 1
        self._pos[a] = len(self._arcs)
        self._arcs.append(a)
        self._out_lpos[u][v] = len(self.out_list[u])
        self.out_list[u].append(v)
        self._in_lpos[v][u] = len(self.in_list[v])
        self.in_list[v].append(u)
        self.out_deg[u] += 1
        self.in_deg[v] += 1
        self._version += 1

    def _remove_arc(self, u: int, v: int) -> None:
        a = (u, v)
        if (v, u) in self._pos:
            self.anti -= 1
        i = self._pos.pop(a)
        last = self._arcs.pop()
        if last != a:
            self._arcs[i] = last
            self._pos[last] = i

        lpos = self._out_lpos[u]
        ls = self.out_list[u]
        j = lpos.pop(v)
        tail = ls.pop()
        if tail != v:
            ls[j] = tail
            lpos[tail] = j

        lpos = self._in_lpos[v]
        ls = self.in_list[v]
        j = lpos.pop(u)
        tail = ls.pop()
        if tail != u:
            ls[j] = tail
            lpos[tail] = j

        self.out_deg[u] -= 1
        self.in_deg[v] -= 1
        self._version += 1

    def _replace_in_lists(self, changes) -> None:
        for lists, lpos_all, x, old, new in changes:
            lpos = lpos_all[x]
            p = lpos.pop(old)
            lpos[new] = p
            lists[x][p] = new

    def _swap_arcs(self, a: int, b: int, c: int, d: int) -> None:
        """Replace arcs (a,b),(c,d) by (a,d),(c,b).

        Every endpoint keeps both degrees, so all four neighbor-list entries
        are replaced in place.
        """
        pos = self._pos
        arcs = self._arcs
        i1 = pos.pop((a, b))
        i2 = pos.pop((c, d))
        pos[(a, d)] = i1
        arcs[i1] = (a, d)
        pos[(c, b)] = i2
        arcs[i2] = (c, b)
        # none of the four reversals is among the swapped arcs, so their
        # presence can be read off after the surgery
        self.anti += (
            ((d, a) in pos)
            + ((b, c) in pos)
            - ((b, a) in pos)
            - ((d, c) in pos)
        )
        self._replace_in_lists(
            (
                (self.out_list, self._out_lpos, a, b, d),
                (self.out_list, self._out_lpos, c, d, b),
                (self.in_list, self._in_lpos, b, a, c),
                (self.in_list, self._in_lpos, d, c, a),
            )
        )
        self._version += 1

    def _reorient_triangle(self, u: int, v: int, w: int) -> None:
        """Reverse the arcs of the induced directed 3-cycle u -> v -> w -> u.

        Requires all three reversals absent beforehand (the reorientation
        gate), which also keeps the antiparallel-pair count unchanged.
        """
        pos = self._pos
        arcs = self._arcs
        i1 = pos.pop((u, v))
        i2 = pos.pop((v, w))
        i3 = pos.pop((w, u))
        pos[(v, u)] = i1
        arcs[i1] = (v, u)
        pos[(w, v)] = i2
        arcs[i2] = (w, v)
        pos[(u, w)] = i3
        arcs[i3] = (u, w)
        self._replace_in_lists(
            (
                (self.out_list, self._out_lpos, u, v, w),
                (self.out_list, self._out_lpos, v, w, u),
                (self.out_list, self._out_lpos, w, u, v),
                (self.in_list, self._in_lpos, v, u, w),
                (self.in_list, self._in_lpos, w, v, u),
                (self.in_list, self._in_lpos, u, w, v),
            )
        )
        self._version += 1


# ---------------------------------------------------------------------------
# canonical keys


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Bitstring over the fixed vertex-pair grid; equal keys == equal edge sets."""

    kind: str
    n: int
    bits: int

    def __xor__(self, other: "CanonicalKey") -> int:
        if self.kind != other.kind or self.n != other.n:
            raise InvalidInputError("keys from different grids")
        return self.bits ^ other.bits

    def diff_size(self, other: "CanonicalKey") -> int:
        """|G delta G'| straight off the key bits."""
        return (self ^ other).bit_count()

    def hex(self) -> str:
        return format(self.bits, "x")


def pair_index(n: int, u: int, v: int) -> int:
    """Position of undirected pair (u, v) in the lexicographic i<j grid."""
    if u > v:
        u, v = v, u
    return u * n - (u * (u + 1)) // 2 + (v - u - 1)


def arc_index(n: int, u: int, v: int) -> int:
    """Position of ordered pair (u, v), u != v, in the lexicographic grid."""
    return u * (n - 1) + v - (1 if v > u else 0)


def canonical_key(g: Graph | Digraph) -> CanonicalKey:
    if isinstance(g, Graph):
        bits = 0
        n = g.n
        for u, v in g._edges:
            bits |= 1 << pair_index(n, u, v)
        return CanonicalKey(UNDIRECTED, n, bits)
    if isinstance(g, Digraph):
        bits = 0
        n = g.n
        for u, v in g._arcs:
            bits |= 1 << arc_index(n, u, v)
        return CanonicalKey(DIRECTED, n, bits)
    raise InvalidInputError(f"not a graph value: {g!r}")


def graph_from_key(key: CanonicalKey) -> Graph | Digraph:
    """Inverse of :func:`canonical_key`."""
    n = key.n
    bits = key.bits
    if key.kind == UNDIRECTED:
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if bits >> pair_index(n, u, v) & 1
        ]
        return Graph(n, edges)
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and bits >> arc_index(n, u, v) & 1
    ]
    return Digraph(n, arcs)


# ---------------------------------------------------------------------------
# symmetric differences and alternating structures


@dataclass(frozen=True)
class SymmetricDifference:
    """Arc/edge sets present in exactly one of two same-kind graphs."""

    kind: str
    n: int
    left_only: frozenset[tuple[int, int]]
    right_only: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.left_only) + len(self.right_only)

    def vertices(self) -> set[int]:
        out = set()
        for u, v in self.left_only:
            out.add(u)
            out.add(v)
        for u, v in self.right_only:
            out.add(u)
            out.add(v)
        return out

    def is_balanced(self) -> bool:
        """Per-vertex left/right balance (implies the Eulerian property).

        Holds whenever the two graphs realize the same degree sequence; it is
        exactly the condition under which alternating-cycle decomposition is
        possible.
        """
        if self.kind == UNDIRECTED:
            bal: dict[int, int] = {}
            for u, v in self.left_only:
                bal[u] = bal.get(u, 0) + 1
                bal[v] = bal.get(v, 0) + 1
            for u, v in self.right_only:
                bal[u] = bal.get(u, 0) - 1
                bal[v] = bal.get(v, 0) - 1
            return all(x == 0 for x in bal.values())
        outb: dict[int, int] = {}
        inb: dict[int, int] = {}
        for u, v in self.left_only:
            outb[u] = outb.get(u, 0) + 1
            inb[v] = inb.get(v, 0) + 1
        for u, v in self.right_only:
            outb[u] = outb.get(u, 0) - 1
            inb[v] = inb.get(v, 0) - 1
        return all(x == 0 for x in outb.values()) and all(
            x == 0 for x in inb.values()
        )


def symmetric_difference(g: Graph | Digraph, h: Graph | Digraph) -> SymmetricDifference:
    """Edges/arcs of g not in h and vice versa."""
    if g.kind != h.kind:
        raise InvalidInputError(f"mixed kinds: {g.kind} vs {h.kind}")
    if g.n != h.n:
        raise InvalidInputError(f"mixed vertex counts: {g.n} vs {h.n}")
    if g.kind == UNDIRECTED:
        ge, he = g.edge_set(), h.edge_set()
    else:
        ge, he = g.arc_set(), h.arc_set()
    return SymmetricDifference(g.kind, g.n, frozenset(ge - he), frozenset(he - ge))


@dataclass(frozen=True)
class AlternatingCycle:
    """Closed alternating walk: left arcs and right arcs interleave.

    ``vertices`` lists the closed walk order (first vertex implicitly
    repeated); ``left`` arcs belong to the first graph's exclusive side and
    ``right`` arcs to the second's.  Swapping along the cycle exchanges the
    two sides and preserves all degrees.
    """

    kind: str
    vertices: tuple[int, ...]
    left: tuple[tuple[int, int], ...]
    right: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.left) + len(self.right)


@dataclass(frozen=True)
class AlternatingWalk:
    """Open 3-edge alternating walk (v1, v2, v3, v4) on distinct vertices.

    Pattern "P": first/last arc on the left side, middle arc on the right.
    Pattern "Q" (directed only): sides exchanged.
    """

    kind: str
    vertices: tuple[int, int, int, int]
    pattern: str

    def arcs(self) -> tuple[tuple[tuple[int, int], str], ...]:
        """The walk's three arcs with their side labels.

        Directed membership pattern: (v1,v2) and (v3,v4) on one side,
        (v3,v2) on the other.  Undirected: edges {v1,v2}, {v3,v4}, {v2,v3}.
        """
        v1, v2, v3, v4 = self.vertices
        a, b = ("left", "right") if self.pattern == "P" else ("right", "left")
        if self.kind == UNDIRECTED:
            return (
                (_norm_edge(v1, v2), a),
                (_norm_edge(v2, v3), b),
                (_norm_edge(v3, v4), a),
            )
        return (((v1, v2), a), ((v3, v2), b), ((v3, v4), a))


def decompose_alternating(sd: SymmetricDifference) -> list[AlternatingCycle]:
    """Partition a balanced symmetric difference into alternating cycles.

    Greedy extraction: walk alternating sides until the walk's start state
    recurs, close the cycle there, repeat on the unused remainder.  The
    result partitions the arcs; cycle count is not guaranteed minimal.
    """
    if not sd.is_balanced():
        raise InvalidInputError("symmetric difference is not degree-balanced")
    if sd.kind == UNDIRECTED:
        return _decompose_undirected(sd)
    return _decompose_directed(sd)


def _decompose_undirected(sd: SymmetricDifference) -> list[AlternatingCycle]:
    # unused side-labeled incidences per vertex
    inc: dict[int, list[set[int]]] = {}

    def add(u, v, side):
        inc.setdefault(u, [set(), set()])[side].add(v)
        inc.setdefault(v, [set(), set()])[side].add(u)

    for u, v in sd.left_only:
        add(u, v, 0)
    for u, v in sd.right_only:
        add(u, v, 1)

    cycles = []
    pending = sorted(sd.left_only)
    for start_edge in pending:
        u0, v0 = start_edge
        if v0 not in inc[u0][0]:
            continue  # consumed by an earlier cycle
        walk = [u0]
        left, right = [], []
        cur, side = u0, 0
        while True:
            if side == 0:
                nxt = min(inc[cur][0])
                inc[cur][0].discard(nxt)
                inc[nxt][0].discard(cur)
                left.append(_norm_edge(cur, nxt))
            else:
                nxt = min(inc[cur][1])
                inc[cur][1].discard(nxt)
                inc[nxt][1].discard(cur)
                right.append(_norm_edge(cur, nxt))
            cur, side = nxt, 1 - side
            if cur == u0 and side == 0:
                break
            walk.append(cur)
        cycles.append(
            AlternatingCycle(sd.kind, tuple(walk), tuple(left), tuple(right))
        )
    return cycles


def _decompose_directed(sd: SymmetricDifference) -> list[AlternatingCycle]:
    # Walk state alternates between "emit an unused out-arc of cur" and
    # "consume an unused in-arc of cur", switching sides each step; balance
    # guarantees the walk only closes back at its start state.
    out_un: dict[tuple[int, int], set[int]] = {}  # (v, side) -> unused heads
    in_un: dict[tuple[int, int], set[int]] = {}  # (v, side) -> unused tails
    for side, arcs in ((0, sd.left_only), (1, sd.right_only)):
        for u, v in arcs:
            out_un.setdefault((u, side), set()).add(v)
            in_un.setdefault((v, side), set()).add(u)

    cycles = []
    for start_arc in sorted(sd.left_only):
        u0, v0 = start_arc
        if v0 not in out_un.get((u0, 0), ()):
            continue
        walk = [u0]
        left, right = [], []
        cur, side, emitting = u0, 0, True
        while True:
            if emitting:
                nxt = min(out_un[(cur, side)])
                out_un[(cur, side)].discard(nxt)
                in_un[(nxt, side)].discard(cur)
                (left if side == 0 else right).append((cur, nxt))
            else:
                nxt = min(in_un[(cur, side)])
                in_un[(cur, side)].discard(nxt)
                out_un[(nxt, side)].discard(cur)
                (left if side == 0 else right).append((nxt, cur))
            cur, side, emitting = nxt, 1 - side, not emitting
            if cur == u0 and side == 0 and emitting:
                break
            walk.append(cur)
        cycles.append(
            AlternatingCycle(sd.kind, tuple(walk), tuple(left), tuple(right))
        )
    return cycles


def find_disjoint_3walk(sd: SymmetricDifference) -> Optional[AlternatingWalk]:
    """Search for a 4-distinct-vertex alternating 3-walk in the difference.

    Undirected: edges {v1,v2}, {v3,v4} on the left side and {v2,v3} on the
    right.  Directed: arcs (v1,v2), (v3,v4) left with (v3,v2) right
    (pattern P), or the same shape with sides exchanged (pattern Q).
    Returns None when no such walk exists.
    """
    if sd.kind == UNDIRECTED:
        left_at: dict[int, set[int]] = {}
        for u, v in sd.left_only:
            left_at.setdefault(u, set()).add(v)
            left_at.setdefault(v, set()).add(u)
        for u, v in sorted(sd.right_only):
            for v2, v3 in ((u, v), (v, u)):
                for v1 in sorted(left_at.get(v2, ())):
                    if v1 == v3:
                        continue
                    for v4 in sorted(left_at.get(v3, ())):
                        if v4 in (v1, v2):
                            continue
                        return AlternatingWalk(sd.kind, (v1, v2, v3, v4), "P")
        return None

    for pattern, mids, outers in (
        ("P", sd.right_only, sd.left_only),
        ("Q", sd.left_only, sd.right_only),
    ):
        in_of: dict[int, set[int]] = {}
        out_of: dict[int, set[int]] = {}
        for u, v in outers:
            out_of.setdefault(u, set()).add(v)
            in_of.setdefault(v, set()).add(u)
        for v3, v2 in sorted(mids):
            for v1 in sorted(in_of.get(v2, ())):
                if v1 == v3:
                    continue
                for v4 in sorted(out_of.get(v3, ())):
                    if v4 in (v1, v2):
                        continue
                    return AlternatingWalk(sd.kind, (v1, v2, v3, v4), pattern)
    return None


# ---------------------------------------------------------------------------
# text formats


def format_degree_sequence(s: DegreeSequence | DiDegreeSequence) -> str:
    if isinstance(s, DegreeSequence):
        return " ".join(str(d) for d in s.degrees)
    return " ".join(f"{a}/{b}" for a, b in s.pairs)


def parse_degree_sequence(text: str) -> DegreeSequence | DiDegreeSequence:
    """Parse ``a_1 a_2 ...`` (undirected) or ``out_1/in_1 out_2/in_2 ...``."""
    tokens = text.split()
    if not tokens:
        raise InvalidInputError("empty degree sequence")
    try:
        if any("/" in t for t in tokens):
            pairs = []
            for t in tokens:
                a, b = t.split("/")
                pairs.append((int(a), int(b)))
            return DiDegreeSequence(pairs)
        return DegreeSequence(int(t) for t in tokens)
    except ValueError as exc:
        raise InvalidInputError(f"bad degree sequence {text!r}: {exc}") from exc


def format_edgelist(g: Graph | Digraph) -> str:
    pairs = g.edges() if isinstance(g, Graph) else g.arcs()
    lines = [f"{g.kind} n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(pairs))
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph | Digraph:
    """Parse the edge-list format: a header line then one ``u v`` per line.

    Header: ``undirected n=<n>`` or ``directed n=<n>``.  ``#`` starts a
    comment; blank lines are ignored.
    """
    header = None
    pairs = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            if (
                len(parts) != 2
                or parts[0] not in (UNDIRECTED, DIRECTED)
                or not parts[1].startswith("n=")
            ):
                raise InvalidInputError(f"bad edge-list header {line!r}")
            try:
                header = (parts[0], int(parts[1][2:]))
            except ValueError as exc:
                raise InvalidInputError(f"bad vertex count in {line!r}") from exc
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidInputError(f"bad edge line {line!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise InvalidInputError(f"bad edge line {line!r}") from exc
    if header is None:
        raise InvalidInputError("edge list has no header line")
    kind, n = header
    return Graph(n, pairs) if kind == UNDIRECTED else Digraph(n, pairs)

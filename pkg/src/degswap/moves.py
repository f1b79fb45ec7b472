"""Elementary degree-preserving moves.

Invalid inputs (adjacent pairs, missing arcs) raise
:class:`~degswap.errors.InvalidMoveError` rather than counting as loops:
loops belong to the chain's selection universe, not to malformed calls.
Every ``try_*`` returns True when the graph was mutated and False when the
move gated into a loop.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import AlternatingCycle, Digraph, Graph, _norm_edge
from .errors import InvalidMoveError

VARIANT_A = "A"
VARIANT_B = "B"


@dataclass(frozen=True)
class UndirectedSwap:
    """Replace non-adjacent edges e1={a,b}, e2={c,d} by a re-pairing.

    Variant A pairs {a,c},{b,d}; variant B pairs {a,d},{b,c}.
    """

    e1: tuple[int, int]
    e2: tuple[int, int]
    variant: str

    @property
    def inserted(self) -> tuple[tuple[int, int], tuple[int, int]]:
        a, b = self.e1
        c, d = self.e2
        if self.variant == VARIANT_A:
            return _norm_edge(a, c), _norm_edge(b, d)
        return _norm_edge(a, d), _norm_edge(b, c)


@dataclass(frozen=True)
class DirectedSwap:
    """Replace non-adjacent arcs (a,b),(c,d) by (a,d),(c,b)."""

    a1: tuple[int, int]
    a2: tuple[int, int]

    @property
    def inserted(self) -> tuple[tuple[int, int], tuple[int, int]]:
        (a, _), (c, _) = self.a1, self.a2
        return (a, self.a2[1]), (c, self.a1[1])


@dataclass(frozen=True)
class TriangleReorientation:
    """Reverse the three arcs of an induced directed 3-cycle v1->v2->v3->v1."""

    v1: int
    v2: int
    v3: int

    @property
    def removed(self):
        return (self.v1, self.v2), (self.v2, self.v3), (self.v3, self.v1)

    @property
    def inserted(self):
        return (self.v2, self.v1), (self.v3, self.v2), (self.v1, self.v3)


def try_2swap_undirected(
    g: Graph, e1: tuple[int, int], e2: tuple[int, int], variant: str
) -> bool:
    """Attempt the 2-swap that re-pairs e1, e2 per ``variant``.

    Applies exactly when both replacement edges are absent; otherwise the
    graph is left untouched (a chain loop).
    """
    if variant not in (VARIANT_A, VARIANT_B):
        raise InvalidMoveError(f"unknown variant {variant!r}")
    e1 = _norm_edge(*e1)
    e2 = _norm_edge(*e2)
    pos = g._pos
    if e1 not in pos or e2 not in pos:
        raise InvalidMoveError(f"edges {e1}, {e2} not both present")
    a, b = e1
    c, d = e2
    if a == c or a == d or b == c or b == d:
        raise InvalidMoveError(f"edges {e1}, {e2} are adjacent")
    f1, f2 = UndirectedSwap(e1, e2, variant).inserted
    if f1 in pos or f2 in pos:
        return False
    g._swap_edges(e1, e2, f1, f2)
    return True


def try_2swap_directed(g: Digraph, a1: tuple[int, int], a2: tuple[int, int]) -> bool:
    """Attempt the directed 2-swap (a,b),(c,d) -> (a,d),(c,b)."""
    a1 = tuple(a1)
    a2 = tuple(a2)
    pos = g._pos
    if a1 not in pos or a2 not in pos:
        raise InvalidMoveError(f"arcs {a1}, {a2} not both present")
    a, b = a1
    c, d = a2
    if a == c or a == d or b == c or b == d:
        raise InvalidMoveError(f"arcs {a1}, {a2} share a vertex")
    if (a, d) in pos or (c, b) in pos:
        return False
    g._swap_arcs(a, b, c, d)
    return True


def try_2swap_blocked_reason(
    g: Digraph, a1: tuple[int, int], a2: tuple[int, int]
) -> str | None:
    """Why the directed swap on a1, a2 would loop; None when it would apply."""
    a, b = a1
    c, d = a2
    if (a, d) in g._pos:
        return f"replacement arc ({a}, {d}) already present"
    if (c, b) in g._pos:
        return f"replacement arc ({c}, {b}) already present"
    return None


def try_reorient_3cycle(g: Digraph, p: tuple[int, int, int]) -> bool:
    """Attempt the 3-cycle reorientation triggered by the 2-path p.

    The 2-path (v1,v2),(v2,v3) fires exactly when it closes an induced
    directed 3-cycle ((v3,v1) present, all three reversals absent) and v3
    carries the strictly largest index, so that of a cycle's three 2-paths
    precisely one triggers the transition; the other two are loops.
    Degenerate 2-paths (v1 == v3) are loops, never errors: the chain's
    selection universe legitimately produces them.
    """
    v1, v2, v3 = p
    pos = g._pos
    if (v1, v2) not in pos or (v2, v3) not in pos:
        raise InvalidMoveError(f"{p} is not a directed 2-path of the digraph")
    if v1 == v3:
        return False
    if v3 < v1 or v3 < v2:
        return False
    if (v3, v1) not in pos:
        return False
    if (v2, v1) in pos or (v3, v2) in pos or (v1, v3) in pos:
        return False
    g._reorient_triangle(v1, v2, v3)
    return True


def swap_alternating_cycle(g: Graph | Digraph, c: AlternatingCycle):
    """Flip presence along an alternating cycle; returns the mutated graph.

    One side of the cycle must be fully present and the other fully absent
    (either orientation, so the operation is an involution).
    """
    if c.kind != g.kind:
        raise InvalidMoveError(f"cycle kind {c.kind} does not match graph")
    if isinstance(g, Graph):
        has = g.has_edge
        add, remove = g._add_edge, g._remove_edge
    else:
        has = g.has_arc
        add, remove = g._add_arc, g._remove_arc

    left_in = [has(*e) for e in c.left]
    right_in = [has(*e) for e in c.right]
    if all(left_in) and not any(right_in):
        present, absent = c.left, c.right
    elif all(right_in) and not any(left_in):
        present, absent = c.right, c.left
    else:
        raise InvalidMoveError("cycle does not alternate present/absent in this graph")
    for e in present:
        remove(*e)
    for e in absent:
        add(*e)
    return g

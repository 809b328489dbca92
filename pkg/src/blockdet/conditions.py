"""Commutativity conditions: graphs on the n x n grid of matrix positions.

A block matrix satisfies a condition when every edge of the condition joins
a pair of commuting blocks (labeled containment on the fixed vertex set,
not isomorphism).  All the named families, the column/row permutation and
transpose transforms, and edge-union live here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import BlockMatrix, commutes
from .ncdet import Permutation

Vertex = tuple[int, int]
Edge = tuple[Vertex, Vertex]


def _edge(u: Vertex, v: Vertex) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at {u}")
    return (u, v) if u < v else (v, u)


def vertices(n: int) -> list[Vertex]:
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]


@dataclass(frozen=True)
class Condition:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        canon = set()
        for u, v in self.edges:
            for i, j in (u, v):
                if not (1 <= i <= self.n and 1 <= j <= self.n):
                    raise ValueError(f"vertex {(i, j)} out of range for size {self.n}")
            canon.add(_edge(u, v))
        object.__setattr__(self, "edges", frozenset(canon))

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return _edge(u, v) in self.edges

    def __len__(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self):
        return f"Condition(n={self.n}, edges={self.sorted_edges()})"


def empty_condition(n: int) -> Condition:
    return Condition(n, frozenset())


def complete_condition(n: int) -> Condition:
    verts = vertices(n)
    return Condition(n, frozenset(_edge(u, v) for i, u in enumerate(verts) for v in verts[i + 1 :]))


def _from_predicate(n: int, pred) -> Condition:
    verts = vertices(n)
    edges = set()
    for a, u in enumerate(verts):
        for v in verts[a + 1 :]:
            if pred(u, v):
                edges.add(_edge(u, v))
    return Condition(n, frozenset(edges))


def cond_f(n: int) -> Condition:
    """Edges between positions outside row 1 that sit in different columns."""
    return _from_predicate(n, lambda u, v: u[0] != 1 and v[0] != 1 and u[1] != v[1])


def cond_kappa(n: int) -> Condition:
    """Complete graph on all positions outside row 1."""
    return _from_predicate(n, lambda u, v: u[0] != 1 and v[0] != 1)


def cond_t_col(c: int, n: int) -> Condition:
    """Column-c transpose-compatibility graph.

    Positions off column c in different rows and columns are joined; a
    position in column c is joined to everything strictly above-left or
    strictly below-right of it.
    """
    if not 1 <= c <= n:
        raise ValueError(f"column {c} out of range for size {n}")

    def pred(u: Vertex, v: Vertex) -> bool:
        (i, j), (k, l) = u, v
        if i != k and j != l and j != c and l != c:
            return True
        return (j == c or l == c) and (i - k) * (j - l) > 0

    return _from_predicate(n, pred)


def cond_t_row(r: int, n: int) -> Condition:
    """Row-r transpose-compatibility graph: the transpose of cond_t_col."""
    if not 1 <= r <= n:
        raise ValueError(f"row {r} out of range for size {n}")
    return cond_transpose(cond_t_col(r, n))


def _extend(pi: Permutation, n: int):
    # Extend a permutation of {1..m} to {1..n} by the identity.
    def apply(x: int) -> int:
        return pi(x) if x <= pi.n else x

    return apply


def cond_col_permute(g: Condition, pi: Permutation) -> Condition:
    if pi.n > g.n:
        raise ValueError(f"permutation degree {pi.n} exceeds condition size {g.n}")
    ap = _extend(pi, g.n)
    return Condition(
        g.n,
        frozenset(_edge((i, ap(j)), (k, ap(l))) for (i, j), (k, l) in g.edges),
    )


def cond_row_permute(g: Condition, pi: Permutation) -> Condition:
    if pi.n > g.n:
        raise ValueError(f"permutation degree {pi.n} exceeds condition size {g.n}")
    ap = _extend(pi, g.n)
    return Condition(
        g.n,
        frozenset(_edge((ap(i), j), (ap(k), l)) for (i, j), (k, l) in g.edges),
    )


def cond_transpose(g: Condition) -> Condition:
    return Condition(g.n, frozenset(_edge((j, i), (l, k)) for (i, j), (k, l) in g.edges))


def cond_union(g: Condition, h: Condition) -> Condition:
    if g.n != h.n:
        raise ValueError(f"size mismatch: {g.n} vs {h.n}")
    return Condition(g.n, g.edges | h.edges)


def cond_f_side(j: int, n: int) -> Condition:
    """Column-j variant of the row-one-free family."""
    if not 1 <= j <= n:
        raise ValueError(f"column {j} out of range for size {n}")
    base = cond_union(cond_transpose(cond_f(n)), cond_t_col(1, n))
    return cond_col_permute(base, Permutation.transposition(j, 1, j))


def cond_f_down(i: int, n: int) -> Condition:
    """Row-i variant of the row-one-free family."""
    if not 1 <= i <= n:
        raise ValueError(f"row {i} out of range for size {n}")
    return cond_union(cond_transpose(cond_f_side(i, n)), cond_t_row(i, n))


# Size-2 conditions by letter: A=(1,1), B=(1,2), C=(2,1), D=(2,2).
_A, _B, _C, _D = (1, 1), (1, 2), (2, 1), (2, 2)
_NAMED_SIZE2: dict[str, tuple[Edge, ...]] = {
    "g1": (_edge(_C, _D),),
    "g2": (_edge(_A, _D), _edge(_B, _D)),
    "g3": (_edge(_A, _C), _edge(_B, _C)),
    "g4": (_edge(_A, _B), _edge(_A, _D), _edge(_B, _C)),
    "g5": (_edge(_A, _B), _edge(_A, _C), _edge(_B, _D)),
    "h1": (_edge(_A, _D), _edge(_B, _C)),
    "h2": (_edge(_A, _B), _edge(_A, _C), _edge(_A, _D)),
    "h3": (_edge(_A, _B), _edge(_B, _C), _edge(_B, _D)),
    "h4": (_edge(_A, _C), _edge(_B, _D)),
}

VERTEX_LETTERS = {_A: "A", _B: "B", _C: "C", _D: "D"}


def cond_named(name: str) -> Condition:
    """One of the size-2 conditions g1..g5 or h1..h4."""
    key = name.lower()
    if key not in _NAMED_SIZE2:
        raise ValueError(f"unknown size-2 condition {name!r}")
    return Condition(2, frozenset(_NAMED_SIZE2[key]))


def family_condition(family_id: str, n: int) -> Condition:
    """Instantiate a named family at size n.

    Ids: ``f``, ``kappa``, ``complete``, ``empty``, ``side:j``, ``down:i``,
    ``tcol:c``, ``trow:r`` and the size-2 names ``g1``..``g5``, ``h1``..``h4``.
    """
    fid = family_id.strip().lower()
    if fid == "f":
        return cond_f(n)
    if fid == "kappa":
        return cond_kappa(n)
    if fid == "complete":
        return complete_condition(n)
    if fid == "empty":
        return empty_condition(n)
    if fid in _NAMED_SIZE2:
        if n != 2:
            raise ValueError(f"{family_id!r} is a size-2 condition, got n={n}")
        return cond_named(fid)
    if ":" in fid:
        head, _, tail = fid.partition(":")
        try:
            k = int(tail)
        except ValueError:
            raise ValueError(f"bad family parameter in {family_id!r}") from None
        if head == "side":
            return cond_f_side(k, n)
        if head == "down":
            return cond_f_down(k, n)
        if head == "tcol":
            return cond_t_col(k, n)
        if head == "trow":
            return cond_t_row(k, n)
    raise ValueError(f"unknown family id {family_id!r}")


def is_subgraph(g: Condition, h: Condition) -> bool:
    """Labeled containment: every edge of g is an edge of h."""
    if g.n != h.n:
        raise ValueError(f"size mismatch: {g.n} vs {h.n}")
    return g.edges <= h.edges


def commutativity_graph(bm: BlockMatrix) -> Condition:
    """Edge wherever two blocks commute exactly."""
    n = bm.n
    verts = vertices(n)
    edges = set()
    for a, u in enumerate(verts):
        for v in verts[a + 1 :]:
            if commutes(bm.blocks[u[0] - 1][u[1] - 1], bm.blocks[v[0] - 1][v[1] - 1]):
                edges.add(_edge(u, v))
    return Condition(n, frozenset(edges))


def matrix_satisfies(bm: BlockMatrix, g: Condition) -> bool:
    """True when every edge of g joins commuting blocks of bm.

    Equivalent to ``is_subgraph(g, commutativity_graph(bm))`` but only
    examines the edges of g.
    """
    if bm.n != g.n:
        raise ValueError(f"size mismatch: matrix n={bm.n}, condition n={g.n}")
    for (i, j), (k, l) in g.edges:
        if not commutes(bm.blocks[i - 1][j - 1], bm.blocks[k - 1][l - 1]):
            return False
    return True


def format_condition(g: Condition) -> str:
    lines = [str(g.n)]
    for (i, j), (k, l) in g.sorted_edges():
        lines.append(f"{i} {j} {k} {l}")
    return "\n".join(lines) + "\n"


def parse_condition(text: str) -> Condition:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty condition text")
    n = int(lines[0])
    edges = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 4:
            raise ValueError(f"bad edge line {ln!r}")
        i, j, k, l = (int(p) for p in parts)
        edges.add(_edge((i, j), (k, l)))
    return Condition(n, frozenset(edges))

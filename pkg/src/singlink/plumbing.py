"""Weighted plumbing graphs and their intersection lattices.

A plumbing graph has vertices ``(id, weight, genus)`` and an edge multiset.
Its intersection matrix carries the weights on the diagonal and edge counts
off it.  Everything here is exact integer/rational arithmetic.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from . import _kernels
from .errors import (
    BadIds,
    InvalidArgument,
    LoopsForbidden,
    NotConnected,
    NotGorenstein,
    SingularIntersectionForm,
)

__all__ = [
    "Vertex",
    "PlumbingGraph",
    "IntersectionMatrix",
    "CanonicalCycle",
    "build_graph",
    "intersection_matrix",
    "determinant",
    "leading_minors",
    "is_negative_definite",
    "is_negative_definite_cholesky",
    "adjugate",
    "solve_cramer",
    "solve_fraction_free",
    "canonical_cycle",
    "euler_char_exceptional",
    "laufer_chi",
    "path_graph",
    "star_graph",
    "e8_graph",
    "relabel",
    "random_graph",
    "random_tree_edges",
]


@dataclass(frozen=True)
class Vertex:
    id: int
    weight: int
    genus: int = 0


@dataclass(frozen=True)
class PlumbingGraph:
    vertices: Tuple[Vertex, ...]
    edges: Tuple[Tuple[int, int], ...]
    name: Optional[str] = None

    @property
    def r(self) -> int:
        return len(self.vertices)

    @property
    def weights(self) -> Tuple[int, ...]:
        return tuple(v.weight for v in self.vertices)

    @property
    def genera(self) -> Tuple[int, ...]:
        return tuple(v.genus for v in self.vertices)

    def degrees(self) -> Tuple[int, ...]:
        deg = [0] * self.r
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return tuple(deg)

    def with_weights(self, weights: Sequence[int]) -> "PlumbingGraph":
        vs = [Vertex(v.id, w, v.genus) for v, w in zip(self.vertices, weights)]
        return build_graph(vs, self.edges, name=self.name)

    def with_genera(self, genera: Sequence[int]) -> "PlumbingGraph":
        vs = [Vertex(v.id, v.weight, g) for v, g in zip(self.vertices, genera)]
        return build_graph(vs, self.edges, name=self.name)


@dataclass(frozen=True)
class IntersectionMatrix:
    rows: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> "IntersectionMatrix":
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise InvalidArgument("matrix must be square")
        if any(rows[i][j] != rows[j][i] for i in range(n) for j in range(i)):
            raise InvalidArgument("matrix must be symmetric")
        return cls(rows)

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def tolist(self) -> List[List[int]]:
        return [list(row) for row in self.rows]


@dataclass(frozen=True)
class CanonicalCycle:
    coefficients: Tuple[Fraction, ...]
    integral: bool
    k_squared: Fraction


VertexLike = Union[Vertex, Tuple[int, int, int], Tuple[int, int]]


def build_graph(vertices: Iterable[VertexLike], edges: Iterable[Tuple[int, int]],
                name: Optional[str] = None) -> PlumbingGraph:
    """Validate and normalize a plumbing graph.

    Vertices may be :class:`Vertex` records or ``(id, weight[, genus])``
    tuples.  Edges are stored with the smaller id first, sorted.
    """
    vs: List[Vertex] = []
    for v in vertices:
        if not isinstance(v, Vertex):
            v = Vertex(*v)
        if v.genus < 0:
            raise InvalidArgument(f"vertex {v.id} has negative genus")
        vs.append(Vertex(int(v.id), int(v.weight), int(v.genus)))
    vs.sort(key=lambda v: v.id)
    r = len(vs)
    if r == 0 or [v.id for v in vs] != list(range(r)):
        raise BadIds(f"vertex ids must be exactly 0..{r - 1}")

    es: List[Tuple[int, int]] = []
    for i, j in edges:
        i, j = int(i), int(j)
        if i == j:
            raise LoopsForbidden(f"loop edge at vertex {i}")
        if not (0 <= i < r and 0 <= j < r):
            raise BadIds(f"edge ({i}, {j}) references a missing vertex")
        es.append((min(i, j), max(i, j)))
    es.sort()

    adjacency: List[List[int]] = [[] for _ in range(r)]
    for i, j in es:
        adjacency[i].append(j)
        adjacency[j].append(i)
    seen = {0}
    stack = [0]
    while stack:
        for u in adjacency[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != r:
        raise NotConnected(f"graph has {r - len(seen)} vertices unreachable from vertex 0")
    return PlumbingGraph(tuple(vs), tuple(es), name)


def intersection_matrix(g: PlumbingGraph) -> IntersectionMatrix:
    m = [[0] * g.r for _ in range(g.r)]
    for v in g.vertices:
        m[v.id][v.id] = v.weight
    for i, j in g.edges:
        m[i][j] += 1
        m[j][i] += 1
    return IntersectionMatrix(tuple(tuple(row) for row in m))


def _rows(m: Union[IntersectionMatrix, Sequence[Sequence[int]]]) -> List[List[int]]:
    if isinstance(m, IntersectionMatrix):
        return m.tolist()
    return [list(row) for row in m]


def determinant(m: Union[IntersectionMatrix, Sequence[Sequence[int]]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    a = _rows(m)
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def leading_minors(m: Union[IntersectionMatrix, Sequence[Sequence[int]]]) -> List[int]:
    a = _rows(m)
    return [determinant([row[:k] for row in a[:k]]) for k in range(1, len(a) + 1)]


def is_negative_definite(m: Union[IntersectionMatrix, Sequence[Sequence[int]]]) -> bool:
    """Leading-minor criterion: ``(-1)^k det(minor_k) > 0`` for k = 1..r."""
    return _kernels.negdef_minors(_rows(m))


def is_negative_definite_cholesky(m: Union[IntersectionMatrix, Sequence[Sequence[int]]]) -> bool:
    """Exact rational LDL^T of ``-m``; positive definite iff every pivot is > 0."""
    a = [[-Fraction(x) for x in row] for row in _rows(m)]
    n = len(a)
    lower = [[Fraction(0)] * n for _ in range(n)]
    d = [Fraction(0)] * n
    for j in range(n):
        d[j] = a[j][j] - sum(lower[j][k] ** 2 * d[k] for k in range(j))
        if d[j] <= 0:
            return False
        for i in range(j + 1, n):
            lower[i][j] = (a[i][j] - sum(lower[i][k] * lower[j][k] * d[k] for k in range(j))) / d[j]
    return True


def adjugate(m: Union[IntersectionMatrix, Sequence[Sequence[int]]]) -> List[List[int]]:
    """Integer adjugate: ``adj[i][j] = (-1)^(i+j) * det(m without row j, col i)``."""
    a = _rows(m)
    n = len(a)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:i] + row[i + 1:] for k, row in enumerate(a) if k != j]
            adj[i][j] = (-1) ** (i + j) * determinant(minor)
    return adj


def solve_cramer(m: Union[IntersectionMatrix, Sequence[Sequence[int]]],
                 b: Sequence[int]) -> Tuple[Fraction, ...]:
    a = _rows(m)
    det = determinant(a)
    if det == 0:
        raise SingularIntersectionForm("intersection matrix is singular")
    out = []
    for i in range(len(a)):
        replaced = [row[:i] + [b[k]] + row[i + 1:] for k, row in enumerate(a)]
        out.append(Fraction(determinant(replaced), det))
    return tuple(out)


def solve_fraction_free(m: Union[IntersectionMatrix, Sequence[Sequence[int]]],
                        b: Sequence[int]) -> Tuple[Fraction, ...]:
    """Bareiss forward elimination on ``[m | b]`` followed by rational back-substitution."""
    a = [row + [bi] for row, bi in zip(_rows(m), b)]
    n = len(a)
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    break
            else:
                raise SingularIntersectionForm("intersection matrix is singular")
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = a[i][n] - sum(a[i][j] * x[j] for j in range(i + 1, n))
        x[i] = Fraction(s) / a[i][i]
    return tuple(x)


def adjunction_rhs(g: PlumbingGraph) -> Tuple[int, ...]:
    """``b_i = K.E_i = -w_i - 2 + 2 g_i``."""
    return tuple(-v.weight - 2 + 2 * v.genus for v in g.vertices)


def canonical_cycle(g: PlumbingGraph, method: str = "cramer") -> CanonicalCycle:
    """Solve the adjunction system ``I k = b`` exactly.

    ``method`` is ``"cramer"`` (default) or ``"fraction-free"``; both give
    identical results.  Only invertibility is required, not definiteness.
    """
    m = intersection_matrix(g)
    b = adjunction_rhs(g)
    if method == "cramer":
        k = solve_cramer(m, b)
    elif method == "fraction-free":
        k = solve_fraction_free(m, b)
    else:
        raise InvalidArgument(f"unknown solve method {method!r}")
    k_sq = sum((k[i] * m[i, j] * k[j] for i in range(g.r) for j in range(g.r)), Fraction(0))
    return CanonicalCycle(k, all(x.denominator == 1 for x in k), k_sq)


def euler_char_exceptional(g: PlumbingGraph) -> int:
    return sum(2 - 2 * v.genus for v in g.vertices) - len(g.edges)


def laufer_chi(g: PlumbingGraph, p_g: int) -> int:
    """``12 p_g + K^2 + chi_top(E)``, the Euler characteristic of a smoothing's Milnor fiber."""
    if p_g < 0:
        raise InvalidArgument("geometric genus must be non-negative")
    cyc = canonical_cycle(g)
    if not cyc.integral:
        raise NotGorenstein("canonical cycle is not integral")
    return 12 * p_g + int(cyc.k_squared) + euler_char_exceptional(g)


# ---------------------------------------------------------------------------
# Constructors and generators


def path_graph(weights: Sequence[int], genera: Optional[Sequence[int]] = None,
               name: Optional[str] = None) -> PlumbingGraph:
    genera = genera or [0] * len(weights)
    vs = [Vertex(i, w, g) for i, (w, g) in enumerate(zip(weights, genera))]
    return build_graph(vs, [(i, i + 1) for i in range(len(weights) - 1)], name=name)


def star_graph(center: int, arms: Sequence[Sequence[int]], center_genus: int = 0,
               name: Optional[str] = None) -> PlumbingGraph:
    """Star: vertex 0 is the center; each arm is a chain leaving it."""
    vs = [Vertex(0, center, center_genus)]
    es: List[Tuple[int, int]] = []
    for arm in arms:
        prev = 0
        for w in arm:
            vid = len(vs)
            vs.append(Vertex(vid, w, 0))
            es.append((prev, vid))
            prev = vid
    return build_graph(vs, es, name=name)


def e8_graph() -> PlumbingGraph:
    return star_graph(-2, [[-2], [-2, -2], [-2, -2, -2, -2]], name="E8")


def relabel(g: PlumbingGraph, perm: Sequence[int]) -> PlumbingGraph:
    """Graph with vertex ``i`` renamed ``perm[i]``."""
    vs = [Vertex(perm[v.id], v.weight, v.genus) for v in g.vertices]
    es = [(perm[i], perm[j]) for i, j in g.edges]
    return build_graph(vs, es, name=g.name)


def random_tree_edges(rng: random.Random, r: int) -> List[Tuple[int, int]]:
    return [(rng.randrange(i), i) for i in range(1, r)]


def random_graph(rng: random.Random, r: int, *, weight_range: Tuple[int, int] = (-6, -1),
                 max_genus: int = 0, extra_edges: int = 0) -> PlumbingGraph:
    """Random connected loop-free graph: a random tree plus optional extra edges.

    Extra edges may duplicate tree edges (multi-edges are allowed).
    """
    es = random_tree_edges(rng, r)
    if r > 1:
        for _ in range(extra_edges):
            i, j = rng.sample(range(r), 2)
            es.append((i, j))
    lo, hi = weight_range
    vs = [Vertex(i, rng.randint(lo, hi), rng.randint(0, max_genus)) for i in range(r)]
    return build_graph(vs, es)

"""Sweeps over weight vectors and genus vectors of a fixed graph shape.

Two questions about a graph ``Gamma``: how often a negative weight vector
gives a negative definite form, and which genus vectors make the graph
numerically Gorenstein (integral canonical cycle).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from . import _kernels
from .errors import (
    InternalInconsistency,
    InvalidArgument,
    SingularIntersectionForm,
    TooLargeUseSampling,
)
from .plumbing import (
    PlumbingGraph,
    adjugate,
    canonical_cycle,
    determinant,
    intersection_matrix,
    is_negative_definite,
)

__all__ = [
    "EXHAUSTIVE_LIMIT",
    "WeightSweepReport",
    "GenusSolutionSet",
    "sweep_weights",
    "gorenstein_genera",
]

EXHAUSTIVE_LIMIT = 10**7


@dataclass(frozen=True)
class WeightSweepReport:
    topology: PlumbingGraph
    bound: int
    total: int
    negative_definite: int
    mode: str
    dominant_total: int
    dominant_negative_definite: int
    samples: Optional[int] = None
    seed: Optional[int] = None

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.negative_definite, self.total)


@dataclass(frozen=True)
class GenusSolutionSet:
    graph: PlumbingGraph
    g_max: int
    solutions: Tuple[Tuple[int, ...], ...]
    lattice_period: int


def _offdiag(g: PlumbingGraph) -> List[List[int]]:
    m = intersection_matrix(g).tolist()
    for i in range(g.r):
        m[i][i] = 0
    return m


def sweep_weights(topology: PlumbingGraph, n: int, samples: Optional[int] = None,
                  seed: Optional[int] = None) -> WeightSweepReport:
    """Count negative definite forms over weights in ``{-n, ..., -1}^r``.

    Without ``samples`` every vector is tested, provided there are at most
    :data:`EXHAUSTIVE_LIMIT` of them.  With ``samples`` (and a ``seed``),
    that many vectors are drawn uniformly with :class:`random.Random`.
    """
    if n < 1:
        raise InvalidArgument("weight bound must be >= 1")
    off = _offdiag(topology)
    degrees = topology.degrees()
    if samples is None:
        if n ** topology.r > EXHAUSTIVE_LIMIT:
            raise TooLargeUseSampling(
                f"{n}^{topology.r} weight vectors exceed {EXHAUSTIVE_LIMIT}; pass samples and a seed")
        total, negdef, dom_total, dom_negdef = _kernels.sweep_exhaustive(off, n)
        return WeightSweepReport(topology, n, total, negdef, "exhaustive", dom_total, dom_negdef)

    if samples < 1:
        raise InvalidArgument("samples must be >= 1")
    if seed is None:
        raise InvalidArgument("sampled mode needs an explicit seed")
    rng = random.Random(seed)
    negdef = dom_total = dom_negdef = 0
    mat = [row[:] for row in off]
    for _ in range(samples):
        weights = [rng.randint(-n, -1) for _ in range(topology.r)]
        for i, w in enumerate(weights):
            mat[i][i] = w
        ok = is_negative_definite(mat)
        negdef += ok
        if all(w <= -(d + 1) for w, d in zip(weights, degrees)):
            dom_total += 1
            dom_negdef += ok
    return WeightSweepReport(topology, n, samples, negdef, "sampled", dom_total, dom_negdef,
                             samples=samples, seed=seed)


def gorenstein_genera(graph: PlumbingGraph, g_max: int) -> GenusSolutionSet:
    """Genus vectors in ``{0..g_max}^r`` giving an integral canonical cycle.

    Solutions are sorted lexicographically and each one is re-checked with
    :func:`canonical_cycle` before being returned.
    """
    if g_max < 0:
        raise InvalidArgument("g_max must be non-negative")
    m = intersection_matrix(graph)
    det = determinant(m)
    if det == 0:
        raise SingularIntersectionForm("intersection matrix is singular")
    adj = adjugate(m)
    found = _kernels.genus_box(adj, det, list(graph.weights), g_max)
    for g in found:
        if not canonical_cycle(graph.with_genera(g)).integral:
            raise InternalInconsistency(f"genus vector {g} failed re-verification")
    return GenusSolutionSet(graph, g_max, tuple(sorted(found)), abs(det))

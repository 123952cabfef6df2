"""Pure-Python kernels.  Reference semantics for ``_ckernels.pyx``."""
from __future__ import annotations

from typing import List, Sequence, Tuple


def lattice_counts(a: int, b: int, c: int) -> Tuple[int, int, int]:
    """Return ``(pg, sig_plus, sig_minus)`` for x^a + y^b + z^c.

    With ``L = abc`` and ``S = i*bc + j*ac + k*ab`` (so ``S/L = i/a + j/b + k/c``)
    over ``1 <= i < a``, ``1 <= j < b``, ``1 <= k < c``: ``pg`` counts ``S < L``,
    ``sig_plus`` counts ``0 < S < L`` or ``2L < S < 3L``, ``sig_minus`` counts
    ``L < S < 2L``.
    """
    L = a * b * c
    bc, ac, ab = b * c, a * c, a * b
    pg = plus = minus = 0
    for i in range(1, a):
        si = i * bc
        for j in range(1, b):
            sij = si + j * ac
            for k in range(1, c):
                s = sij + k * ab
                if s < L:
                    pg += 1
                    plus += 1
                elif L < s < 2 * L:
                    minus += 1
                elif s > 2 * L:
                    plus += 1
    return pg, plus, minus


def negdef_minors(rows: Sequence[Sequence[int]]) -> bool:
    """``(-1)^k * det(leading k-minor) > 0`` for every k.

    Fraction-free elimination without pivoting: after step k the pivot equals
    the leading (k+1)-minor, so a zero pivot means a vanishing minor.
    """
    n = len(rows)
    a = [list(r) for r in rows]
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        # sign of minor_{k+1} must be (-1)^(k+1)
        if pivot == 0 or (pivot > 0) != (k % 2 == 1):
            return False
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return True


def _neg_dominant(weights: Sequence[int], degrees: Sequence[int]) -> bool:
    return all(w <= -(d + 1) for w, d in zip(weights, degrees))


def sweep_exhaustive(offdiag: Sequence[Sequence[int]], n: int) -> Tuple[int, int, int, int]:
    """Test every weight vector in ``{-n..-1}^r`` for negative definiteness.

    Returns ``(total, negdef, dominant_total, dominant_negdef)`` where the
    dominant counts restrict to vectors with ``w_i <= -(deg_i + 1)``.
    """
    r = len(offdiag)
    degrees = [sum(row) for row in offdiag]
    mat = [list(row) for row in offdiag]
    weights = [-1] * r
    total = negdef = dom_total = dom_negdef = 0
    while True:
        for i in range(r):
            mat[i][i] = weights[i]
        ok = negdef_minors(mat)
        total += 1
        negdef += ok
        if _neg_dominant(weights, degrees):
            dom_total += 1
            dom_negdef += ok
        # odometer, last coordinate fastest
        i = r - 1
        while i >= 0:
            if weights[i] > -n:
                weights[i] -= 1
                break
            weights[i] = -1
            i -= 1
        if i < 0:
            return total, negdef, dom_total, dom_negdef


def genus_box(adj: Sequence[Sequence[int]], det: int, weights: Sequence[int],
              gmax: int) -> List[Tuple[int, ...]]:
    """Genus vectors in ``{0..gmax}^r`` with integral canonical cycle.

    ``adj`` is the adjugate of the intersection matrix and ``det`` its
    determinant; the cycle is ``adj @ b / det`` with ``b_i = -w_i - 2 + 2 g_i``.
    Output is in lexicographic order.
    """
    r = len(weights)
    g = [0] * r
    out: List[Tuple[int, ...]] = []
    while True:
        b = [-w - 2 + 2 * gi for w, gi in zip(weights, g)]
        if all(sum(adj[i][j] * b[j] for j in range(r)) % det == 0 for i in range(r)):
            out.append(tuple(g))
        i = r - 1
        while i >= 0:
            if g[i] < gmax:
                g[i] += 1
                break
            g[i] = 0
            i -= 1
        if i < 0:
            return out

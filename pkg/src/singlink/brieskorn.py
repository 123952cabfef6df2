"""Brieskorn-Pham germs ``x^a + y^b + z^c = 0``.

Orientation convention: the Milnor fiber of (2, 3, 5) has the negative
definite E8 form, so its signature is -8 and its Casson invariant is -1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

from . import _kernels
from .errors import InternalInconsistency, InvalidArgument, NotHomologySphere
from .frames import canonical_frame, ehat, reduce, rochlin
from .plumbing import PlumbingGraph, star_graph

__all__ = [
    "ExponentTriple",
    "SingularityProfile",
    "triple",
    "pairwise_coprime",
    "milnor_number",
    "geometric_genus",
    "signature",
    "neg_continued_fraction",
    "seifert_invariants",
    "seifert_graph",
    "casson",
    "profile",
    "coprime_triples",
]


@dataclass(frozen=True)
class ExponentTriple:
    a: int
    b: int
    c: int

    def __post_init__(self):
        vals = (self.a, self.b, self.c)
        if any(not isinstance(x, int) or x < 2 for x in vals):
            raise InvalidArgument(f"exponents must be integers >= 2, got {vals}")
        if list(vals) != sorted(vals):
            raise InvalidArgument("use triple() to build a sorted ExponentTriple")

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


def triple(a, b: Optional[int] = None, c: Optional[int] = None) -> ExponentTriple:
    """Build a sorted triple from three ints, a sequence, or an ExponentTriple."""
    if isinstance(a, ExponentTriple):
        return a
    if b is None and c is None:
        a, b, c = a
    vals = sorted((a, b, c))
    if any(not isinstance(x, int) or x < 2 for x in vals):
        raise InvalidArgument(f"exponents must be integers >= 2, got {(a, b, c)}")
    return ExponentTriple(*vals)


def pairwise_coprime(t: ExponentTriple) -> bool:
    return gcd(t.a, t.b) == gcd(t.a, t.c) == gcd(t.b, t.c) == 1


@dataclass(frozen=True)
class SingularityProfile:
    exponents: ExponentTriple
    mu: int
    p_g: int
    sigma: int
    chi: int
    ehat: int
    e_r: int
    e_c: int
    rochlin: int
    casson: Optional[int]


def milnor_number(t: ExponentTriple) -> int:
    t = triple(t)
    return (t.a - 1) * (t.b - 1) * (t.c - 1)


def geometric_genus(t: ExponentTriple) -> int:
    """Lattice points ``i, j, k >= 1`` with ``i/a + j/b + k/c < 1``."""
    t = triple(t)
    return _kernels.lattice_counts(t.a, t.b, t.c)[0]


def signature(t: ExponentTriple) -> int:
    """Milnor-fiber signature from the Brieskorn-Pham lattice count.

    Points with ``s = i/a + j/b + k/c`` in (0,1) or (2,3) count +1, in (1,2)
    count -1, and integral ``s`` (the radical) counts nothing.
    """
    t = triple(t)
    _, plus, minus = _kernels.lattice_counts(t.a, t.b, t.c)
    return plus - minus


def neg_continued_fraction(p: int, q: int) -> List[int]:
    """Hirzebruch-Jung expansion ``p/q = k1 - 1/(k2 - 1/(... - 1/ks))``, all ``ki >= 2``."""
    if not (isinstance(p, int) and isinstance(q, int)) or q < 1 or p <= q or gcd(p, q) != 1:
        raise InvalidArgument(f"need p > q >= 1 coprime, got p={p}, q={q}")
    out = []
    while q:
        k = -(-p // q)  # ceiling
        out.append(k)
        p, q = q, k * q - p
    return out


def evaluate_neg_continued_fraction(ks: Sequence[int]) -> Fraction:
    value = Fraction(ks[-1])
    for k in reversed(ks[:-1]):
        value = k - 1 / value
    return value


def seifert_invariants(t: ExponentTriple) -> Tuple[int, Tuple[int, int, int]]:
    """Return ``(b0, (beta1, beta2, beta3))`` with ``0 < beta_i < a_i`` and
    ``b0 * abc - sum(beta_i * abc / a_i) == 1``.

    The +1 choice makes the orbifold Euler number ``-1/abc`` negative, i.e.
    the star-shaped plumbing negative definite.
    """
    t = triple(t)
    if not pairwise_coprime(t):
        raise NotHomologySphere(f"exponents {t} are not pairwise coprime")
    n = t.a * t.b * t.c
    betas = []
    for ai in t:
        cofactor = n // ai
        betas.append((-pow(cofactor, -1, ai)) % ai)
    num = 1 + sum(beta * (n // ai) for beta, ai in zip(betas, t))
    if num % n:
        raise InternalInconsistency("Seifert invariants failed to solve the unimodularity equation")
    return num // n, tuple(betas)


def seifert_graph(t: ExponentTriple) -> PlumbingGraph:
    """Star-shaped minimal resolution graph of the Brieskorn homology sphere."""
    t = triple(t)
    b0, betas = seifert_invariants(t)
    arms = [[-k for k in neg_continued_fraction(ai, beta)] for ai, beta in zip(t, betas)]
    return star_graph(-b0, arms, name=f"brieskorn-{t.a}-{t.b}-{t.c}")


def casson(t: ExponentTriple) -> int:
    t = triple(t)
    if not pairwise_coprime(t):
        raise NotHomologySphere(f"exponents {t} are not pairwise coprime")
    sigma = signature(t)
    if sigma % 8:
        raise InternalInconsistency(f"signature {sigma} of {t} is not divisible by 8")
    return sigma // 8


def profile(t: ExponentTriple) -> SingularityProfile:
    t = triple(t)
    mu = milnor_number(t)
    pg, plus, minus = _kernels.lattice_counts(t.a, t.b, t.c)
    sigma = plus - minus
    e_hat = ehat(canonical_frame(f"L{t}", mu))
    bundle = reduce(e_hat)
    return SingularityProfile(
        exponents=t,
        mu=mu,
        p_g=pg,
        sigma=sigma,
        chi=mu + 1,
        ehat=e_hat,
        e_r=bundle.e_r,
        e_c=bundle.e_c,
        rochlin=rochlin(sigma),
        casson=casson(t) if pairwise_coprime(t) else None,
    )


def coprime_triples(lo: int = 2, hi: int = 25) -> List[ExponentTriple]:
    """Pairwise-coprime ``lo <= a < b < c <= hi``."""
    out = []
    for a in range(lo, hi + 1):
        for b in range(a + 1, hi + 1):
            for c in range(b + 1, hi + 1):
                t = ExponentTriple(a, b, c)
                if pairwise_coprime(t):
                    out.append(t)
    return out


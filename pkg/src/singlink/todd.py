"""Todd multiplicative sequence in exact rational arithmetic.

The characteristic power series is ``Q(x) = x / (1 - exp(-x))``.  The
grade-``k`` Todd polynomial ``T_k(c_1, ..., c_k)`` is the degree-``k`` part of
``Q(x_1) ... Q(x_m)`` rewritten in elementary symmetric functions
``c_j = e_j(x_1, ..., x_m)`` for any ``m >= k``.

Monomials in the Chern symbols are tuples of exponents ``(e_1, ..., e_k)``
meaning ``c_1**e_1 * ... * c_k**e_k``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, Iterable, Iterator, Sequence, Tuple

from .errors import InvalidArgument, UnsupportedGrade

__all__ = [
    "DEFAULT_MAX_GRADE",
    "RationalSeries",
    "ToddPolynomial",
    "bernoulli",
    "todd_series",
    "todd_polynomial",
    "todd_polynomial_newton",
    "evaluate_genus",
    "todd_relative_surface",
    "projective_space_chern",
    "format_polynomial",
    "weighted_degree",
]

DEFAULT_MAX_GRADE = 8

Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class RationalSeries:
    """Truncated power series; ``coefficients[i]`` multiplies ``x**i``."""

    coefficients: Tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients[i]


@dataclass(frozen=True)
class ToddPolynomial:
    grade: int
    terms: Tuple[Tuple[Monomial, Fraction], ...]

    @classmethod
    def from_dict(cls, grade: int, terms: Dict[Monomial, Fraction]) -> "ToddPolynomial":
        items = [(m, Fraction(c)) for m, c in terms.items() if c != 0]
        for m, _ in items:
            if len(m) != grade or weighted_degree(m) != grade:
                raise InvalidArgument(f"monomial {m} does not have weighted degree {grade}")
        items.sort(key=lambda t: t[0], reverse=True)
        return cls(grade, tuple(items))

    def as_dict(self) -> Dict[Monomial, Fraction]:
        return dict(self.terms)

    def coefficient(self, monomial: Sequence[int]) -> Fraction:
        return self.as_dict().get(tuple(monomial), Fraction(0))

    def __str__(self) -> str:
        return format_polynomial(self)


def weighted_degree(monomial: Sequence[int]) -> int:
    return sum((i + 1) * e for i, e in enumerate(monomial))


# ---------------------------------------------------------------------------
# Bernoulli numbers and the characteristic series


@lru_cache(maxsize=None)
def _signed_bernoulli_even(n: int) -> Fraction:
    # B_n for even n >= 2 in the modern convention (B_1 = -1/2), from
    # sum_{j=0}^{n} C(n+1, j) B_j = 0.
    bs = [Fraction(1), Fraction(-1, 2)]
    for m in range(2, n + 1):
        if m % 2:
            bs.append(Fraction(0))
            continue
        s = sum(comb(m + 1, j) * bs[j] for j in range(m))
        bs.append(-s / (m + 1))
    return bs[n]


def bernoulli(k: int) -> Fraction:
    """Hirzebruch's unsigned Bernoulli number: 1/6, 1/30, 1/42, 1/30, ...

    Related to the modern signed numbers by ``bernoulli(k) == abs(B_{2k})``.
    """
    if not isinstance(k, int) or k < 1:
        raise InvalidArgument(f"bernoulli index must be >= 1, got {k!r}")
    return abs(_signed_bernoulli_even(2 * k))


def _invert_series(a: Sequence[Fraction], order: int) -> list[Fraction]:
    if a[0] == 0:
        raise InvalidArgument("series with zero constant term is not invertible")
    inv = [Fraction(0)] * (order + 1)
    inv[0] = 1 / Fraction(a[0])
    for n in range(1, order + 1):
        s = sum(a[j] * inv[n - j] for j in range(1, min(n, len(a) - 1) + 1))
        inv[n] = -s * inv[0]
    return inv


@lru_cache(maxsize=None)
def todd_series(order: int) -> RationalSeries:
    """Coefficients of ``x / (1 - exp(-x))`` up to ``x**order``.

    Obtained by inverting ``(1 - exp(-x)) / x = sum (-1)**n x**n / (n+1)!``.
    """
    if order < 0:
        raise InvalidArgument("order must be non-negative")
    denom = [Fraction((-1) ** n, factorial(n + 1)) for n in range(order + 1)]
    return RationalSeries(tuple(_invert_series(denom, order)))


# ---------------------------------------------------------------------------
# Symmetric-function reduction by leading-term elimination


def _partitions(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of n in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        rest_len = None if max_len is None else max_len - 1
        for rest in _partitions(n - first, first, rest_len):
            yield (first,) + rest


def _poly_mul(p: Dict[Monomial, int], q: Dict[Monomial, int]) -> Dict[Monomial, int]:
    out: Dict[Monomial, int] = {}
    for mp, cp in p.items():
        for mq, cq in q.items():
            key = tuple(a + b for a, b in zip(mp, mq))
            out[key] = out.get(key, 0) + cp * cq
    return out


@lru_cache(maxsize=None)
def _elementary(j: int, m: int) -> Dict[Monomial, int]:
    from itertools import combinations

    poly: Dict[Monomial, int] = {}
    for idx in combinations(range(m), j):
        mono = [0] * m
        for i in idx:
            mono[i] = 1
        poly[tuple(mono)] = 1
    return poly


@lru_cache(maxsize=None)
def _elementary_product(exps: Monomial, m: int) -> Dict[Monomial, int]:
    """Expansion of ``prod_j e_j(x_1..x_m)**exps[j-1]`` as a polynomial in x."""
    if not any(exps):
        return {(0,) * m: 1}
    j = max(i for i, e in enumerate(exps) if e) + 1
    lower = list(exps)
    lower[j - 1] -= 1
    return _poly_mul(_elementary_product(tuple(lower), m), _elementary(j, m))


def _reduce_symmetric(coeffs: Dict[Tuple[int, ...], Fraction], k: int, m: int) -> Dict[Monomial, Fraction]:
    """Rewrite a homogeneous degree-k symmetric polynomial in e_1..e_k.

    ``coeffs`` maps each partition (padded to length m) to the coefficient of
    the corresponding monomial; symmetry makes those coefficients sufficient.
    """
    remaining = {lam: c for lam, c in coeffs.items() if c != 0}
    result: Dict[Monomial, Fraction] = {}
    while remaining:
        lead = max(remaining)
        c = remaining[lead]
        # x^lead is the leading term of prod e_j^(lead_j - lead_{j+1})
        padded = list(lead) + [0]
        e_exps = [padded[j] - padded[j + 1] for j in range(m)]
        if any(e_exps[k:]):
            raise AssertionError("partition longer than grade")
        mono = tuple(e_exps[:k])
        result[mono] = result.get(mono, Fraction(0)) + c
        expansion = _elementary_product(tuple(e_exps), m)
        for lam in list(remaining) + [x for x in expansion if x not in remaining]:
            if list(lam) != sorted(lam, reverse=True):
                continue
            v = remaining.get(lam, Fraction(0)) - c * expansion.get(lam, 0)
            if v:
                remaining[lam] = v
            else:
                remaining.pop(lam, None)
    return {mono: c for mono, c in result.items() if c}


@lru_cache(maxsize=None)
def _todd_elimination(k: int, m: int) -> ToddPolynomial:
    q = todd_series(k)
    coeffs: Dict[Tuple[int, ...], Fraction] = {}
    for lam in _partitions(k, max_len=m):
        c = Fraction(1)
        for part in lam:
            c *= q[part]
        coeffs[lam + (0,) * (m - len(lam))] = c
    return ToddPolynomial.from_dict(k, _reduce_symmetric(coeffs, k, m))


def _check_grade(k: int, max_grade: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise InvalidArgument(f"grade must be a positive integer, got {k!r}")
    if k > max_grade:
        raise UnsupportedGrade(f"grade {k} exceeds the configured maximum {max_grade}")


def todd_polynomial(k: int, *, variables: int | None = None,
                    max_grade: int = DEFAULT_MAX_GRADE) -> ToddPolynomial:
    """Grade-``k`` Todd polynomial.

    ``variables`` is the number ``m >= k`` of formal Chern roots used in the
    expansion (default ``k``); the result does not depend on it.
    """
    _check_grade(k, max_grade)
    m = k if variables is None else variables
    if m < k:
        raise InvalidArgument("need at least as many Chern roots as the grade")
    return _todd_elimination(k, m)


# ---------------------------------------------------------------------------
# Independent route: log Q, power sums, Newton's identities, exp


def _series_log(a: Sequence[Fraction], order: int) -> list[Fraction]:
    # log a with a[0] == 1, via (log a)' = a'/a
    inv = _invert_series(a, order)
    da = [n * a[n] for n in range(1, order + 1)]
    out = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        # coefficient of x^(n-1) in a' * (1/a), divided by n
        s = sum(da[j] * inv[n - 1 - j] for j in range(n))
        out[n] = s / n
    return out


Graded = Dict[Monomial, Fraction]


def _g_mul(p: Graded, q: Graded, k: int) -> Graded:
    out: Graded = {}
    for mp, cp in p.items():
        for mq, cq in q.items():
            key = tuple(a + b for a, b in zip(mp, mq))
            if weighted_degree(key) > k:
                continue
            out[key] = out.get(key, Fraction(0)) + cp * cq
    return {m: c for m, c in out.items() if c}


def _g_add(p: Graded, q: Graded, scale: Fraction = Fraction(1)) -> Graded:
    out = dict(p)
    for m, c in q.items():
        out[m] = out.get(m, Fraction(0)) + scale * c
    return {m: c for m, c in out.items() if c}


@lru_cache(maxsize=None)
def _todd_newton(k: int, m: int) -> ToddPolynomial:
    def c(j: int) -> Graded:
        if j > m:
            return {}
        mono = [0] * k
        mono[j - 1] = 1
        return {tuple(mono): Fraction(1)}

    # power sums p_j in terms of c_j = e_j
    p: list[Graded] = [{}]
    for j in range(1, k + 1):
        acc: Graded = _g_add({}, c(j), Fraction((-1) ** (j - 1) * j))
        for i in range(1, j):
            acc = _g_add(acc, _g_mul(c(i), p[j - i], k), Fraction((-1) ** (i - 1)))
        p.append(acc)

    log_q = _series_log(todd_series(k).coefficients, k)
    s: Graded = {}
    for j in range(1, k + 1):
        s = _g_add(s, p[j], log_q[j])

    one: Graded = {(0,) * k: Fraction(1)}
    total, power = dict(one), dict(one)
    for n in range(1, k + 1):
        power = _g_mul(power, s, k)
        total = _g_add(total, power, Fraction(1, factorial(n)))
    top = {mono: v for mono, v in total.items() if weighted_degree(mono) == k}
    return ToddPolynomial.from_dict(k, top)


def todd_polynomial_newton(k: int, *, variables: int | None = None,
                           max_grade: int = DEFAULT_MAX_GRADE) -> ToddPolynomial:
    """Same polynomial as :func:`todd_polynomial`, via Newton's identities."""
    _check_grade(k, max_grade)
    m = k if variables is None else variables
    if m < k:
        raise InvalidArgument("need at least as many Chern roots as the grade")
    return _todd_newton(k, m)


# ---------------------------------------------------------------------------
# Evaluation


def evaluate_genus(poly: ToddPolynomial, chern: Sequence[int]) -> Fraction:
    """Substitute the Chern numbers ``chern = (c_1, ..., c_k)`` into ``poly``."""
    chern = tuple(chern)
    if len(chern) != poly.grade:
        raise InvalidArgument(
            f"Chern vector has length {len(chern)}, polynomial has grade {poly.grade}")
    total = Fraction(0)
    for mono, coef in poly.terms:
        term = coef
        for value, e in zip(chern, mono):
            if e:
                term *= Fraction(value) ** e
        total += term
    return total


def todd_relative_surface(c1_sq: int, c2: int) -> Fraction:
    """Grade-2 Todd genus from relative Chern numbers: ``(c1^2 + c2) / 12``."""
    return Fraction(c1_sq + c2, 12)


def projective_space_chern(n: int) -> Tuple[int, ...]:
    """Chern numbers of CP^n: ``c_i = C(n+1, i) h^i`` evaluated on [CP^n]."""
    return tuple(comb(n + 1, i) for i in range(1, n + 1))


def format_polynomial(poly: ToddPolynomial) -> str:
    """Canonical text form, e.g. ``1/12*c1^2+1/12*c2``."""
    parts: list[str] = []
    for mono, coef in poly.terms:
        factors = [str(abs(coef))]
        for i, e in enumerate(mono, start=1):
            if e == 1:
                factors.append(f"c{i}")
            elif e > 1:
                factors.append(f"c{i}^{e}")
        body = "*".join(factors)
        if coef < 0:
            parts.append("-" + body)
        else:
            parts.append(("+" if parts else "") + body)
    return "".join(parts) if parts else "0"


def parse_chern_assignment(text: str, grade: int) -> Tuple[int, ...]:
    """Parse ``c1=0,c2=9`` into a Chern vector of the given length."""
    values: Dict[int, int] = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        name, sep, raw = item.partition("=")
        name = name.strip()
        if not sep or not name.startswith("c") or not name[1:].isdigit():
            raise InvalidArgument(f"bad Chern assignment {item!r}")
        idx = int(name[1:])
        if idx < 1 or idx > grade or idx in values:
            raise InvalidArgument(f"bad or repeated Chern index in {item!r}")
        try:
            values[idx] = int(raw)
        except ValueError:
            raise InvalidArgument(f"Chern number must be an integer: {item!r}") from None
    missing = [i for i in range(1, grade + 1) if i not in values]
    if missing:
        raise InvalidArgument(f"missing Chern numbers: {', '.join(f'c{i}' for i in missing)}")
    return tuple(values[i] for i in range(1, grade + 1))


def iter_polynomials(max_k: int) -> Iterable[ToddPolynomial]:
    for k in range(1, max_k + 1):
        yield todd_polynomial(k)

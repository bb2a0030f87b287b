"""Closed-form orders and sizes of supertoken graphs, in exact integers.

``f(n, k, s)`` counts placements of ``k`` equal tokens on ``n`` vertices with
at most ``s`` per vertex; ``h(n, k, s)`` counts the same placements for ``k``
distinct tokens.  Every edge of a supertoken graph moves one token along one
base edge, and the number of supertoken edges over a fixed base edge does not
depend on which edge it is, so ``size = m * per_edge_multiplier``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .tokens import TokenMode, TokenSpec


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, 0 for any negative or out-of-range argument."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(k: int, parts) -> int:
    """``k! / (t_1! ... t_i! (k - sum t)!)``; 0 unless parts are non-negative and sum to at most k."""
    rest = k
    for t in parts:
        if t < 0:
            return 0
        rest -= t
    if rest < 0:
        return 0
    out = math.factorial(k) // math.factorial(rest)
    for t in parts:
        out //= math.factorial(t)
    return out


def f_count(n: int, k: int, s: int) -> int:
    """Inclusion-exclusion count of ``x_1 + ... + x_n = k`` with ``0 <= x_i <= s``."""
    if k < 0:
        return 0
    if k == 0:
        return 1
    total = 0
    for i in range(k // (s + 1) + 1):
        total += (-1) ** i * binomial(n, i) * binomial(n + k - 1 - i * (s + 1), n - 1)
    return total


@lru_cache(maxsize=None)
def _f_row(n: int, s: int) -> tuple:
    # row n of the (s+1)-nomial triangle, length s*n + 1
    row = (1,)
    for _ in range(n):
        nxt = [0] * (len(row) + s)
        for k in range(len(nxt)):
            nxt[k] = sum(row[k - i] for i in range(s + 1) if 0 <= k - i < len(row))
        row = tuple(nxt)
    return row


def f_count_recurrence(n: int, k: int, s: int) -> int:
    """Same value as :func:`f_count`, via ``f(n,k) = sum_{i<=s} f(n-1, k-i)``."""
    if k < 0 or n < 0:
        return 0
    row = _f_row(n, s)
    return row[k] if k < len(row) else 0


def nomial_row(n: int, s: int) -> list[int]:
    return list(_f_row(n, s))


def _bounded_compositions(j: int, low: int, budget: int):
    """Tuples of ``j`` integers, each at least ``low``, with total at most ``budget``."""
    if j == 0:
        yield ()
        return
    for t in range(low, budget - low * (j - 1) + 1):
        for rest in _bounded_compositions(j - 1, low, budget - t):
            yield (t,) + rest


def h_count(n: int, k: int, s: int) -> int:
    """Ordered ``k``-tuples over ``n`` symbols using no symbol more than ``s`` times.

    Inclusion-exclusion over the ``j`` symbols that overflow; the inner sum
    at ``j = 0`` is the single empty composition, giving ``n**k``.
    """
    if k < 0:
        return 0
    total = 0
    for j in range(k // (s + 1) + 1):
        inner = 0
        for ts in _bounded_compositions(j, s + 1, k):
            inner += multinomial(k, ts) * (n - j) ** (k - sum(ts))
        total += (-1) ** j * binomial(n, j) * inner
    return total


def order_of(n: int, spec: TokenSpec) -> int:
    k, s = spec.k, spec.s
    if spec.mode is TokenMode.INDIST:
        if s == 1:
            return binomial(n, k)
        if s == k:
            return binomial(n + k - 1, k)
        return f_count(n, k, s)
    if s == 1:
        return math.perm(n, k) if k <= n else 0
    if s == k:
        return n**k
    return h_count(n, k, s)


def per_edge_multiplier_indist(n: int, k: int, s: int) -> int:
    """Supertoken edges over one base edge, equal tokens.

    ``t`` other tokens sit on the two endpoints; for ``t < s`` there are
    ``t + 1`` ways to split them, for ``s <= t <= min(2s-2, k-1)`` there are
    ``2s - 1 - t``.  Either way the rest goes to the other ``n - 2`` vertices.
    """
    if n < 2:
        raise ValueError("a base graph with an edge has at least 2 vertices")
    s = min(s, k)
    if s == k:
        return binomial(n + k - 2, k - 1)
    return _edge_sum_indist(n, k, s)


def _edge_sum_indist(n: int, k: int, s: int) -> int:
    omega = min(2 * s - 2, k - 1)
    total = sum(i * f_count(n - 2, k - i, s) for i in range(1, s + 1))
    total += sum((s - j) * f_count(n - 2, k - s - j, s) for j in range(1, omega - s + 2))
    return total


def per_edge_multiplier_dist(n: int, k: int, s: int) -> int:
    """Supertoken edges over one base edge, distinct tokens.

    Summed over ``r_u``/``r_v``: how many of the other ``k - 1`` tokens sit on
    ``u``/``v`` in the configuration where the moving token is on ``u``.
    """
    if n < 2:
        raise ValueError("a base graph with an edge has at least 2 vertices")
    s = min(s, k)
    if s == k:
        return k * n ** (k - 1)
    return _edge_sum_dist(n, k, s)


def _edge_sum_dist(n: int, k: int, s: int) -> int:
    return sum(dist_edge_class_count(n, k, s, ru, rv) for ru, rv in dist_edge_classes(k, s))


def dist_edge_classes(k: int, s: int) -> list[tuple[int, int]]:
    return [(ru, rv) for ru in range(s) for rv in range(s) if ru + rv <= k - 1]


def dist_edge_class_count(n: int, k: int, s: int, ru: int, rv: int) -> int:
    return (ru + 1) * multinomial(k, (ru + 1, rv)) * h_count(n - 2, k - ru - rv - 1, s)


def per_edge_multiplier(n: int, spec: TokenSpec) -> int:
    if spec.mode is TokenMode.INDIST:
        if spec.s == 1:
            return binomial(n - 2, spec.k - 1)
        return per_edge_multiplier_indist(n, spec.k, spec.s)
    if spec.s == 1:
        k = spec.k
        return k * math.perm(n - 2, k - 1) if k - 1 <= n - 2 else 0
    return per_edge_multiplier_dist(n, spec.k, spec.s)


def size_of(n: int, m: int, spec: TokenSpec) -> int:
    if m == 0:
        return 0
    return m * per_edge_multiplier(n, spec)


@dataclass
class CountReport:
    order_formula: int
    size_formula: int
    per_edge_multiplier: int
    order_enumerated: int | None = None
    size_enumerated: int | None = None
    notice: str = ""

    @property
    def agrees(self) -> bool | None:
        if self.order_enumerated is None:
            return None
        return (self.order_formula == self.order_enumerated
                and self.size_formula == self.size_enumerated)


class CountMismatch(AssertionError):
    pass


def count_report(g, spec: TokenSpec, with_enumeration: bool = False,
                 cap: int = 200_000) -> CountReport:
    n, m = g.n, g.size
    mult = per_edge_multiplier(n, spec) if n >= 2 else 0
    report = CountReport(order_of(n, spec), m * mult, mult)
    if not with_enumeration:
        return report
    if report.order_formula > cap:
        report.notice = f"enumeration skipped: order {report.order_formula} exceeds cap {cap}"
        return report
    from .builder import build

    st = build(g, spec, cap=cap)
    report.order_enumerated = st.order
    report.size_enumerated = st.size
    if not report.agrees:
        raise CountMismatch(
            f"{g} {spec}: formula {report.order_formula}/{report.size_formula} "
            f"vs enumerated {st.order}/{st.size}")
    return report

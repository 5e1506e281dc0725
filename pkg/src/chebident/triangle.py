"""The coefficient triangle a_i(N) of the derivative expansion of F.

For F(t, x) = 1/(1 - 2tx + t^2) the N-fold power satisfies

    2^N N! F^(N+1) = sum_{i=1..N} a_i(N) (x-t)^(i-2N) F^(i),

where F^(i) is the i-th t-derivative.  The integer coefficients a_i(N)
obey the recurrence

    a_1(N+1)     = (2N-1) a_1(N)
    a_i(N+1)     = a_{i-1}(N) + (2N-i) a_i(N)      (2 <= i <= N)
    a_{N+1}(N+1) = a_N(N)

seeded by a_1(1) = 1.  The recurrence is normative here; the closed forms
(`a1_closed`, `a_closed`) are independent cross-checks, and
`verify_defining_relation` certifies the defining relation itself at the
series level.

Entries grow superexponentially (a_1(13) = 23!! > 3*10^11), hence exact
big integers throughout.
"""

from __future__ import annotations

import math
import threading
import time
from dataclasses import dataclass
from fractions import Fraction

from chebident.exact import double_factorial, falling_factorial
from chebident.laurent import LaurentPoly
from chebident.report import ReportEntry
from chebident.series import TruncatedSeries, denominator_series, x_minus_t_pow

__all__ = [
    "Triangle",
    "triangle_recurrence",
    "a1_closed",
    "a_closed",
    "verify_defining_relation",
]


@dataclass(frozen=True)
class Triangle:
    """Rows N = 1..N_max of the coefficients [a_1(N), ..., a_N(N)]."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def n_max(self) -> int:
        return len(self.rows)

    def row(self, N: int) -> tuple[int, ...]:
        if not 1 <= N <= self.n_max:
            raise IndexError(f"row {N} outside 1..{self.n_max}")
        return self.rows[N - 1]

    def entry(self, i: int, N: int) -> int:
        """a_i(N) for 1 <= i <= N."""
        row = self.row(N)
        if not 1 <= i <= N:
            raise IndexError(f"entry index {i} outside 1..{N}")
        return row[i - 1]


_rows_cache: list[tuple[int, ...]] = [(1,)]
_lock = threading.Lock()


def _rows_up_to(n_max: int) -> list[tuple[int, ...]]:
    with _lock:
        while len(_rows_cache) < n_max:
            prev = _rows_cache[-1]
            N = len(_rows_cache)
            nxt = [(2 * N - 1) * prev[0]]
            nxt.extend(prev[i - 2] + (2 * N - i) * prev[i - 1] for i in range(2, N + 1))
            nxt.append(prev[-1])
            _rows_cache.append(tuple(nxt))
        return _rows_cache[:n_max]


def triangle_recurrence(n_max: int) -> Triangle:
    """Build rows 1..n_max by the recurrence (cached across calls)."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    return Triangle(tuple(_rows_up_to(n_max)))


def a1_closed(N: int) -> int:
    """Closed form a_1(N) = (2N-3)!!, with (-1)!! = 1."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    return double_factorial(2 * N - 3)


def _bounded_tuples(nvars: int, limit: int):
    """All tuples of nvars nonnegative integers with sum <= limit."""
    if nvars == 0:
        yield ()
        return
    for head in range(limit + 1):
        for tail in _bounded_tuples(nvars - 1, limit - head):
            yield (head,) + tail


def a_closed(i: int, N: int) -> int:
    """Nested-sum closed form for a_i(N), 2 <= i <= N.

    a_i(N) = sum over k_1..k_{i-1} >= 0 with sum <= N-i of
        2^K * prod_{j=2..i} (N - sum_{l=j..i-1} k_l - (2i+2-j)/2)_{k_{j-1}}
            * (2(N - i - K) - 1)!!
    with K = sum k_j.  The falling factorials have half-integer bases for
    odd j, so the sum is accumulated in exact rationals; it must collapse
    to a positive integer, anything else signals an index-pattern error.
    """
    if not 2 <= i <= N:
        raise ValueError(f"need 2 <= i <= N, got i={i}, N={N}")
    total = Fraction(0)
    for ks in _bounded_tuples(i - 1, N - i):
        K = sum(ks)
        term = Fraction(2**K)
        for j in range(2, i + 1):
            tail = sum(ks[l - 1] for l in range(j, i))
            base = N - tail - Fraction(2 * i + 2 - j, 2)
            term *= falling_factorial(base, ks[j - 2])
        term *= double_factorial(2 * (N - i - K) - 1)
        total += term
    if total.denominator != 1 or total <= 0:
        raise ArithmeticError(
            f"closed form for a_{i}({N}) evaluated to {total}, expected a positive integer"
        )
    return int(total)


def verify_defining_relation(N: int, order: int) -> ReportEntry:
    """Certify 2^N N! (x-t)^(2N) F^(N+1) = sum_i a_i(N) (x-t)^i F^(i) in t-series.

    Both sides are formed as truncated series (the negative powers of
    (x-t) are cleared by multiplying through by (x-t)^(2N)) and compared
    exactly up to order ``order - N`` (differentiating i times costs i
    orders).  Failure is reported, not raised; the residual recorded on
    failure is the lowest-order nonzero coefficient of the difference.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if order < N:
        raise ValueError(f"series order {order} must be at least N={N}")
    start = time.perf_counter()

    F = denominator_series(order).inverse()
    row = _rows_up_to(N)[N - 1]

    lhs = (2**N * math.factorial(N)) * (x_minus_t_pow(2 * N, order) * F.pow(N + 1))

    rhs = TruncatedSeries.zero(order - 1)
    deriv = F
    for i in range(1, N + 1):
        deriv = deriv.derivative_t()  # order drops to order - i
        rhs = rhs + row[i - 1] * (x_minus_t_pow(i, deriv.order) * deriv)

    diff = lhs - rhs  # truncates to order - N
    residual = LaurentPoly.zero()
    passed = True
    for coeff in diff.coeffs:
        if not coeff.is_zero():
            residual = coeff
            passed = False
            break
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return ReportEntry(
        identity="defining_relation",
        n=order,
        N=N,
        passed=passed,
        residual=residual,
        rhs_polynomial=None,
        elapsed_ms=elapsed_ms,
    )

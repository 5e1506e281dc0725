"""The five polynomial families and their convolution powers.

Base sequences come from three-term recurrences:

    U, V, W, T_classical:  P_{n+1} = 2x P_n - P_{n-1}
        seeds  U: 1, 2x      V: 1, 2x-1      W: 1, 2x+1      T_classical: 1, x
    Legendre:  (n+1) p_{n+1} = (2n+1) x p_n - n p_{n-1},  seeds 1, x

`T_gf` is the first-kind sequence in generating-function normalization:
the coefficients of (1-t^2)/(1-2xt+t^2), i.e. T~_0 = 1, T~_1 = U_1 and
T~_n = U_n - U_{n-2}; equivalently T~_n = 2 T_n for n >= 1.  The two
normalizations are deliberately separate families: mixing them up shifts
every identity by factors of 2.

Order alpha >= 2 means the alpha-fold convolution power of the base
sequence, i.e. the t^n coefficients of the alpha-th power of the base
generating function.  Rows are cached per (kind, alpha) and extended
lazily; the cache is append-only behind a lock, and returned polynomials
are immutable.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum

from chebident.exact import binomial
from chebident.laurent import LaurentPoly

__all__ = [
    "Family",
    "FamilySpec",
    "family_poly",
    "family_polys",
    "explicit_T",
    "ode_residual",
]


class Family(str, Enum):
    T_CLASSICAL = "T_classical"
    T_GF = "T_gf"
    U = "U"
    V = "V"
    W = "W"
    LEGENDRE = "Legendre"


@dataclass(frozen=True)
class FamilySpec:
    """A family together with its convolution order (1 = base family)."""

    kind: Family
    alpha: int = 1

    def __post_init__(self):
        object.__setattr__(self, "kind", Family(self.kind))
        if self.alpha < 1:
            raise ValueError(f"family order must be >= 1, got {self.alpha}")
        if self.kind is Family.T_CLASSICAL and self.alpha != 1:
            raise ValueError(
                "T_classical has no higher orders; use T_gf for convolution powers"
            )


_X = LaurentPoly.x_power(1)
_TWO_X = LaurentPoly.x_power(1, 2)

_SEEDS = {
    Family.U: (LaurentPoly.one(), _TWO_X),
    Family.V: (LaurentPoly.one(), LaurentPoly({1: 2, 0: -1})),
    Family.W: (LaurentPoly.one(), LaurentPoly({1: 2, 0: 1})),
    Family.T_CLASSICAL: (LaurentPoly.one(), _X),
    Family.LEGENDRE: (LaurentPoly.one(), _X),
}

_cache: dict[tuple[Family, int], list[LaurentPoly]] = {}
_lock = threading.Lock()


def _extend_base(kind: Family, rows: list[LaurentPoly], n: int) -> None:
    if kind is Family.T_GF:
        u = _rows_locked(Family.U, 1, n)
        if not rows:
            rows.append(LaurentPoly.one())
        if len(rows) == 1 and n >= 1:
            rows.append(u[1])
        for m in range(len(rows), n + 1):
            rows.append(u[m] - u[m - 2])
        return
    if not rows:
        rows.extend(_SEEDS[kind])
    for m in range(len(rows) - 1, n):
        if kind is Family.LEGENDRE:
            nxt = ((2 * m + 1) * (_X * rows[m]) - m * rows[m - 1]) / (m + 1)
        else:
            nxt = _TWO_X * rows[m] - rows[m - 1]
        rows.append(nxt)


def _extend_convolution(
    base: list[LaurentPoly], prev: list[LaurentPoly], rows: list[LaurentPoly], n: int
) -> None:
    for m in range(len(rows), n + 1):
        acc = LaurentPoly.zero()
        for j in range(m + 1):
            acc = acc + base[j] * prev[m - j]
        rows.append(acc)


def _rows(kind: Family, alpha: int, n: int) -> list[LaurentPoly]:
    with _lock:
        return _rows_locked(kind, alpha, n)


def _rows_locked(kind: Family, alpha: int, n: int) -> list[LaurentPoly]:
    # Caller holds _lock; recursion stays lock-free.
    rows = _cache.setdefault((kind, alpha), [])
    if len(rows) <= n:
        if alpha == 1:
            _extend_base(kind, rows, n)
        else:
            _extend_convolution(
                _rows_locked(kind, 1, n), _rows_locked(kind, alpha - 1, n), rows, n
            )
    return rows


def family_poly(spec: FamilySpec, n: int) -> LaurentPoly:
    """Degree-n member of the family, always a true polynomial."""
    if n < 0:
        raise ValueError(f"polynomial index must be >= 0, got {n}")
    if not isinstance(spec, FamilySpec):
        spec = FamilySpec(spec)
    return _rows(spec.kind, spec.alpha, n)[n]


def family_polys(spec: FamilySpec, n_max: int) -> list[LaurentPoly]:
    """Members 0..n_max of the family, as a list."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if not isinstance(spec, FamilySpec):
        spec = FamilySpec(spec)
    return list(_rows(spec.kind, spec.alpha, n_max)[: n_max + 1])


def explicit_T(n: int) -> LaurentPoly:
    """Closed form for the classical first-kind polynomial:

    T_n(x) = sum_{m=0..floor(n/2)} C(n, 2m) x^(n-2m) (x^2-1)^m
    """
    if n < 0:
        raise ValueError(f"polynomial index must be >= 0, got {n}")
    x2m1 = LaurentPoly({2: 1, 0: -1})
    total = LaurentPoly.zero()
    for m in range(n // 2 + 1):
        total = total + binomial(n, 2 * m) * (x2m1**m).shift(n - 2 * m)
    return total


def ode_residual(kind: Family, n: int) -> LaurentPoly:
    """Residual of the matching second-order differential equation.

    T_classical solves (1-x^2) y'' - x y' + n^2 y = 0 and U solves
    (1-x^2) y'' - 3x y' + n(n+2) y = 0; the residual is identically zero
    when the recurrences are right.
    """
    kind = Family(kind)
    if kind not in (Family.T_CLASSICAL, Family.U):
        raise ValueError(f"no differential-equation check for family {kind.value}")
    y = family_poly(FamilySpec(kind), n)
    y1 = y.derivative()
    y2 = y1.derivative()
    one_minus_x2 = LaurentPoly({0: 1, 2: -1})
    if kind is Family.T_CLASSICAL:
        return one_minus_x2 * y2 - _X * y1 + (n * n) * y
    return one_minus_x2 * y2 - 3 * (_X * y1) + (n * (n + 2)) * y

"""Truncated formal power series in t with Laurent-polynomial coefficients.

This is the oracle machinery: every generating function is expanded here
independently of the recurrence route in `chebident.families`, and the
two are required to agree coefficient by coefficient.

A series carries its truncation order explicitly.  Arithmetic between two
series truncates to the shorter operand (verification drivers naturally
produce staggered orders after differentiation), and all coefficient
arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction

from chebident import _backend as _k
from chebident.exact import binomial
from chebident.families import Family, FamilySpec, family_polys
from chebident.laurent import LaurentPoly

__all__ = [
    "TruncatedSeries",
    "denominator_series",
    "gf_expand",
    "x_minus_t_inverse_pow",
    "x_minus_t_pow",
]


def _as_poly(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPoly.constant(value)
    raise TypeError(f"series coefficients must be LaurentPoly, got {type(value).__name__}")


class TruncatedSeries:
    """Formal power series in t kept to a fixed order, coefficients in x."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs, order: int | None = None):
        polys = [_as_poly(c) for c in coeffs]
        if order is None:
            if not polys:
                raise ValueError("a series needs an order or at least one coefficient")
            order = len(polys) - 1
        if order < 0:
            raise ValueError(f"series order must be >= 0, got {order}")
        if len(polys) < order + 1:
            polys.extend([LaurentPoly.zero()] * (order + 1 - len(polys)))
        self._coeffs = tuple(polys[: order + 1])

    @classmethod
    def _raw(cls, coeffs: tuple) -> "TruncatedSeries":
        s = object.__new__(cls)
        s._coeffs = coeffs
        return s

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([LaurentPoly.one()], order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def coefficient(self, m: int) -> LaurentPoly:
        """Coefficient of t^m."""
        if not 0 <= m <= self.order:
            raise IndexError(f"coefficient {m} outside truncation order {self.order}")
        return self._coeffs[m]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series from order {self.order} to {order}")
        return TruncatedSeries._raw(self._coeffs[: order + 1])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self._coeffs)

    # -- arithmetic (all truncating to the shorter operand) ------------------

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return TruncatedSeries._raw(
            tuple(
                LaurentPoly._raw(_k.add_terms(a._terms, b._terms))
                for a, b in zip(self._coeffs, other._coeffs)
            )[: order + 1]
        )

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return TruncatedSeries._raw(
            tuple(
                LaurentPoly._raw(_k.sub_terms(a._terms, b._terms))
                for a, b in zip(self._coeffs, other._coeffs)
            )[: order + 1]
        )

    def __neg__(self):
        return TruncatedSeries._raw(tuple(-c for c in self._coeffs))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            order = min(self.order, other.order)
            raw = _k.cauchy_mul(
                [c._terms for c in self._coeffs],
                [c._terms for c in other._coeffs],
                order,
            )
            return TruncatedSeries._raw(tuple(LaurentPoly._raw(d) for d in raw))
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def scale(self, factor) -> "TruncatedSeries":
        """Multiply every coefficient by a scalar or a fixed polynomial."""
        factor = _as_poly(factor)
        return TruncatedSeries._raw(tuple(c * factor for c in self._coeffs))

    def pow(self, k: int) -> "TruncatedSeries":
        """k-fold product (k >= 1), truncated at this series' order."""
        if k < 1:
            raise ValueError(f"series power must be >= 1, got {k}")
        result = self
        base = self
        k -= 1
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    __pow__ = pow

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse via the standard coefficient recurrence.

        Requires the constant term (in t) to be a nonzero constant in x:
        b_0 = 1/a_0 and b_m = -(1/a_0) sum_{j=1..m} a_j b_{m-j}.
        """
        a0 = self._coeffs[0]
        if a0.is_zero() or a0.max_degree != 0:
            raise ValueError(
                "series is not invertible: constant coefficient must be a nonzero constant"
            )
        inv0 = Fraction(1) / a0.coefficient(0)
        if inv0.denominator == 1:
            inv0 = int(inv0)  # keep integer-only series integer-typed
        coeffs = [c._terms for c in self._coeffs]
        out = [_k.scale_terms({0: 1}, inv0)]
        neg_inv0 = -inv0
        for m in range(1, self.order + 1):
            acc: dict = {}
            for j in range(1, m + 1):
                aj = coeffs[j]
                if not aj:
                    continue
                prod = _k.mul_terms(aj, out[m - j])
                acc = _k.add_terms(acc, prod)
            out.append(_k.scale_terms(acc, neg_inv0))
        return TruncatedSeries._raw(tuple(LaurentPoly._raw(d) for d in out))

    def derivative_t(self) -> "TruncatedSeries":
        """d/dt: coefficient m of the result is (m+1) * coefficient m+1; order drops by 1."""
        if self.order < 1:
            raise ValueError("cannot differentiate a series of order 0")
        return TruncatedSeries._raw(
            tuple((m + 1) * self._coeffs[m + 1] for m in range(self.order))
        )

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __repr__(self):
        inner = ", ".join(f"t^{m}: {c}" for m, c in enumerate(self._coeffs))
        return f"TruncatedSeries(order={self.order}; {inner})"


# -- generating functions -----------------------------------------------------

_GF_NUMERATORS = {
    Family.T_GF: (1, 0, -1),  # 1 - t^2
    Family.U: (1,),
    Family.V: (1, -1),  # 1 - t
    Family.W: (1, 1),  # 1 + t
}


def denominator_series(order: int) -> TruncatedSeries:
    """The common denominator 1 - 2xt + t^2 as a series in t."""
    return TruncatedSeries(
        [LaurentPoly.one(), LaurentPoly.x_power(1, -2), LaurentPoly.one()], order
    )


def gf_expand(kind, alpha: int, order: int) -> TruncatedSeries:
    """Expand the family generating function raised to an integer order.

    For T_gf, U, V, W this expands (numerator / (1-2xt+t^2))^alpha with
    numerator 1-t^2, 1, 1-t, 1+t respectively.  The Legendre generating
    function involves a square root, so integer orders are produced as
    alpha-fold convolution powers of the base Legendre series (whose
    coefficients come from the three-term recurrence).
    """
    kind = Family(kind)
    if alpha < 1:
        raise ValueError(f"generating-function order must be >= 1, got {alpha}")
    if kind is Family.T_CLASSICAL:
        raise ValueError(
            "T_classical is not generated by its own series here; use T_gf"
        )
    if kind is Family.LEGENDRE:
        base = TruncatedSeries(family_polys(FamilySpec(Family.LEGENDRE), order), order)
    else:
        numerator = TruncatedSeries(
            [LaurentPoly.constant(c) for c in _GF_NUMERATORS[kind]], order
        )
        base = numerator * denominator_series(order).inverse()
    return base if alpha == 1 else base.pow(alpha)


def x_minus_t_inverse_pow(k: int, order: int) -> TruncatedSeries:
    """(x - t)^(-k) for k >= 1: coefficient of t^m is C(k-1+m, m) x^(-k-m)."""
    if k < 1:
        raise ValueError(f"inverse power must be >= 1, got {k}")
    return TruncatedSeries._raw(
        tuple(
            LaurentPoly.x_power(-k - m, binomial(k - 1 + m, m))
            for m in range(order + 1)
        )
    )


def x_minus_t_pow(k: int, order: int) -> TruncatedSeries:
    """(x - t)^k for k >= 0, exactly: coefficient of t^j is C(k, j) (-1)^j x^(k-j)."""
    if k < 0:
        raise ValueError(f"power must be >= 0, got {k}")
    return TruncatedSeries(
        [
            LaurentPoly.x_power(k - j, (-1) ** j * binomial(k, j))
            for j in range(min(k, order) + 1)
        ],
        order,
    )

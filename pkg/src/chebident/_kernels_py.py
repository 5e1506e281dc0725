"""Hot arithmetic kernels, pure-Python implementation.

A Laurent polynomial is represented by a dict mapping integer exponents to
nonzero exact coefficients (int or Fraction).  A truncated series is a
list of such dicts indexed by the power of t.  These kernels carry
essentially all of the runtime; `chebident._kernels_c` is the compiled
twin with identical semantics, and `chebident._backend` picks one of the
two at import time.

Returned dicts are always canonical (no zero coefficients) except for
`iadd_scaled_shifted`, whose accumulator the caller prunes once at the
end via `prune_zeros`.
"""

from __future__ import annotations


def add_terms(a, b):
    """Canonical sum of two term maps."""
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for e, c in b.items():
        v = out.get(e)
        if v is None:
            out[e] = c
        else:
            v = v + c
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def sub_terms(a, b):
    """Canonical difference a - b of two term maps."""
    if not b:
        return dict(a)
    out = dict(a)
    for e, c in b.items():
        v = out.get(e)
        if v is None:
            out[e] = -c
        else:
            v = v - c
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def scale_terms(a, c):
    """c * a for a scalar c; the zero scalar yields the empty map."""
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def mul_terms(a, b):
    """Exact convolution of two term maps (exponents add)."""
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            v = out.get(e)
            out[e] = ca * cb if v is None else v + ca * cb
    return {e: v for e, v in out.items() if v}


def iadd_scaled_shifted(acc, src, c, k):
    """In place: acc += c * x^k * src.  May leave explicit zeros in acc."""
    for e, v in src.items():
        e2 = e + k
        w = acc.get(e2)
        acc[e2] = v * c if w is None else w + v * c


def prune_zeros(d):
    """Drop zero coefficients, restoring canonical form."""
    return {e: v for e, v in d.items() if v}


def cauchy_mul(a, b, order):
    """Cauchy product of two coefficient lists, truncated at ``order``.

    out[m] = sum_{j=0..m} a[j] * b[m-j], each entry a term map.
    """
    out = []
    for m in range(order + 1):
        acc = {}
        for j in range(m + 1):
            aj = a[j]
            bj = b[m - j]
            if not aj or not bj:
                continue
            if len(aj) > len(bj):
                aj, bj = bj, aj
            for ea, ca in aj.items():
                for eb, cb in bj.items():
                    e = ea + eb
                    v = acc.get(e)
                    acc[e] = ca * cb if v is None else v + ca * cb
        out.append({e: v for e, v in acc.items() if v})
    return out

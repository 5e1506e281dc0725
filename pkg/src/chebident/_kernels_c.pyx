# cython: language_level=3
# cython: binding=False
"""Hot arithmetic kernels, compiled twin of `chebident._kernels_py`.

Same representation and contracts as the pure module: term maps are dicts
from int exponents to nonzero exact coefficients (Python int / Fraction),
series are lists of term maps.  The coefficients stay Python objects (the
whole point is arbitrary precision); the win here is removing interpreter
dispatch from the convolution loops.
"""


def add_terms(dict a, dict b):
    """Canonical sum of two term maps."""
    cdef dict out
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


def sub_terms(dict a, dict b):
    """Canonical difference a - b of two term maps."""
    cdef dict out
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


def scale_terms(dict a, c):
    """c * a for a scalar c; the zero scalar yields the empty map."""
    cdef dict out = {}
    if not c:
        return out
    for e, v in a.items():
        out[e] = v * c
    return out


def mul_terms(dict a, dict b):
    """Exact convolution of two term maps (exponents add)."""
    cdef dict out = {}
    cdef dict res = {}
    if not a or not b:
        return out
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            v = out.get(e)
            out[e] = ca * cb if v is None else v + ca * cb
    for e, v in out.items():
        if v:
            res[e] = v
    return res


def iadd_scaled_shifted(dict acc, dict src, c, k):
    """In place: acc += c * x^k * src.  May leave explicit zeros in acc."""
    for e, v in src.items():
        e2 = e + k
        w = acc.get(e2)
        acc[e2] = v * c if w is None else w + v * c


def prune_zeros(dict d):
    """Drop zero coefficients, restoring canonical form."""
    cdef dict out = {}
    for e, v in d.items():
        if v:
            out[e] = v
    return out


def cauchy_mul(list a, list b, Py_ssize_t order):
    """Cauchy product of two coefficient lists, truncated at ``order``."""
    cdef list out = []
    cdef dict acc, res, aj, bj
    cdef Py_ssize_t m, j
    for m in range(order + 1):
        acc = {}
        for j in range(m + 1):
            aj = <dict> a[j]
            bj = <dict> b[m - j]
            if not aj or not bj:
                continue
            if len(aj) > len(bj):
                aj, bj = bj, aj
            for ea, ca in aj.items():
                for eb, cb in bj.items():
                    e = ea + eb
                    v = acc.get(e)
                    acc[e] = ca * cb if v is None else v + ca * cb
        res = {}
        for e, v in acc.items():
            if v:
                res[e] = v
        out.append(res)
    return out

"""Fast arithmetic in Z[b1, b2, ...] with monomials keyed by partitions.

The Hurewicz model stores everything as integer polynomials in the homology
generators b_i (weight i).  A monomial b_{i1} b_{i2} ... is the partition
(i1 >= i2 >= ...); a polynomial is a dict {partition: int} with no zero
values.  This bare representation is the hot path of the whole package;
GradedPoly wraps it only at module boundaries.
"""

from fractions import Fraction

from .partitions import merge

ONE = {(): 1}


def add(a, b):
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def sub(a, b):
    return add(a, {k: -v for k, v in b.items()})


def scale(a, c):
    if c == 0:
        return {}
    return {k: c * v for k, v in a.items()}


def mul(a, b, bound=None):
    out = {}
    for k1, v1 in a.items():
        w1 = sum(k1)
        for k2, v2 in b.items():
            if bound is not None and w1 + sum(k2) > bound:
                continue
            k = merge(k1, k2)
            s = out.get(k, 0) + v1 * v2
            if s:
                out[k] = s
            elif k in out:
                del out[k]
    return out


def weight_of(a):
    """Weight if homogeneous, else ValueError; 0 for the zero polynomial."""
    ws = {sum(k) for k in a}
    if not ws:
        return 0
    if len(ws) > 1:
        raise ValueError("not homogeneous: weights %s" % sorted(ws))
    return ws.pop()


def gen(i):
    return {(i,): 1}


# -- univariate series with bpoly coefficients ---------------------------
# A series is a list s[d] = bpoly coefficient of x^d, d = 0 .. top.


def ser_zero(top):
    return [{} for _ in range(top + 1)]


def ser_mul(f, g, top):
    out = ser_zero(top)
    for i, fi in enumerate(f):
        if i > top or not fi:
            continue
        for j, gj in enumerate(g):
            if i + j > top or not gj:
                continue
            out[i + j] = add(out[i + j], mul(fi, gj))
    return out


def ser_compose(f, g, top):
    """f(g(x)) for series with g[0] = 0."""
    assert not g[0]
    out = ser_zero(top)
    gp = ser_zero(top)
    gp[0] = dict(ONE)
    for k in range(len(f)):
        if k > top:
            break
        if k > 0:
            gp = ser_mul(gp, g, top)
        if f[k]:
            for d in range(top + 1):
                if gp[d]:
                    out[d] = add(out[d], mul(f[k], gp[d]))
    return out


def ser_inverse(f, top):
    """Compositional inverse of f = x + higher; integral whenever f is."""
    assert not f[0] and f[1] == ONE
    g = ser_zero(top)
    g[1] = dict(ONE)
    for d in range(2, top + 1):
        err = ser_compose(f[: d + 1], g, d)[d]
        if err:
            g[d] = scale(err, -1)
    return g


def ser_powers(f, top, count):
    """[f^1, f^2, ..., f^count] truncated at degree top."""
    out = [f]
    cur = f
    for _ in range(count - 1):
        cur = ser_mul(cur, f, top)
        out.append(cur)
    return out


# -- conversions ----------------------------------------------------------


def to_fractions(a):
    return {k: Fraction(v) for k, v in a.items()}


def assert_integral(a):
    for k, v in a.items():
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise ValueError("non-integral coefficient %s at %s" % (v, k))
    return {k: int(v) for k, v in a.items() if int(v)}

"""Transition matrices between symmetric-function bases, per weight.

Bases indexed by partitions of w in the global reverse-lexicographic order:
  m (monomial), e (elementary, = Chern monomials), p (power sums).
Everything a characteristic class needs reduces to three facts:

  * p_lambda expanded in the m basis has the integer coefficients
    "number of ways to distribute the parts of lambda onto the parts of mu";
  * Newton's identity  k*e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i
    converts e to p (rationally);
  * m and e are both Z-bases, so the composite matrices are unimodular.

Vectors over a weight are dicts {partition: coefficient}; matrices are
dicts {(row_partition, col_partition): coefficient}.
"""

from fractions import Fraction
from functools import lru_cache

from .partitions import merge, partitions_of


@lru_cache(maxsize=None)
def distribute_count(lam, mu):
    """Coefficient of the monomial x^mu in p_lam = prod_i (sum_j x_j^{lam_i}):
    the number of maps from the parts of lam onto the slots of mu filling
    each slot exactly."""
    slots = tuple(mu)
    lam_list = tuple(lam)

    @lru_cache(maxsize=None)
    def rec(i, remaining):
        if i == len(lam_list):
            return 1 if all(r == 0 for r in remaining) else 0
        total = 0
        for s in range(len(remaining)):
            if remaining[s] >= lam_list[i]:
                nxt = list(remaining)
                nxt[s] -= lam_list[i]
                total += rec(i + 1, tuple(nxt))
        return total

    return rec(0, slots)


def p_vec_to_m_vec(vec, combine=None):
    """Convert a vector of p-basis coefficients to m-basis coefficients.
    Coefficient addition/scaling is generic: `combine` provides
    (add, scale) for coefficient values; defaults to numbers."""
    if combine is None:
        addc = lambda a, b: a + b
        scalec = lambda a, c: a * c
        zero_like = 0
    else:
        addc, scalec, zero_like = combine
    out = {}
    for lam, coeff in vec.items():
        for mu in partitions_of(sum(lam)):
            c = distribute_count(lam, mu)
            if c:
                cur = out.get(mu, zero_like)
                out[mu] = addc(cur, scalec(coeff, c))
    if combine is None:
        return {k: v for k, v in out.items() if v}
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def e_in_p(k):
    """e_k as a p-basis vector with Fraction coefficients (Newton)."""
    if k == 0:
        return {(): Fraction(1)}
    out = {}
    for i in range(1, k + 1):
        prev = e_in_p(k - i)
        sign = Fraction((-1) ** (i - 1), k)
        for lam, c in prev.items():
            key = merge(lam, (i,))
            out[key] = out.get(key, Fraction(0)) + sign * c
    return {k2: v for k2, v in out.items() if v}


@lru_cache(maxsize=None)
def e_monomial_in_p(mu):
    """e_mu = prod e_{mu_i} as a p-basis vector (Fractions)."""
    out = {(): Fraction(1)}
    for part in mu:
        factor = e_in_p(part)
        nxt = {}
        for l1, c1 in out.items():
            for l2, c2 in factor.items():
                key = merge(l1, l2)
                nxt[key] = nxt.get(key, Fraction(0)) + c1 * c2
        out = {k: v for k, v in nxt.items() if v}
    return out


@lru_cache(maxsize=None)
def e_to_m_matrix(w):
    """Matrix E with E[mu][nu] = coefficient of m_nu in e_mu (integers)."""
    parts = partitions_of(w)
    mat = {}
    for mu in parts:
        mvec = p_vec_to_m_vec({
            lam: c for lam, c in e_monomial_in_p(mu).items()})
        for nu, c in mvec.items():
            assert c.denominator == 1
            mat[(mu, nu)] = int(c)
    return mat


@lru_cache(maxsize=None)
def m_to_e_matrix(w):
    """Inverse of e_to_m_matrix over Z (both are Z-bases)."""
    parts = partitions_of(w)
    n = len(parts)
    E = e_to_m_matrix(w)
    a = [[Fraction(E.get((parts[i], parts[j]), 0)) for i in range(n)]
         + [Fraction(1 if i == j else 0) for i in range(n)]
         for j in range(n)]
    # rows indexed by nu (m-coordinates), columns by mu; invert by Gauss
    for col in range(n):
        sel = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[sel] = a[sel], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    out = {}
    for j, nu in enumerate(parts):      # m_nu = sum_mu out[(nu, mu)] e_mu
        for i, mu in enumerate(parts):
            c = a[i][n + j]
            assert c.denominator == 1, "m-to-e transition must be integral"
            if c:
                out[(nu, mu)] = int(c)
    return out


def m_vec_to_e_vec(vec, w, combine):
    """Convert m-basis coefficients to e-basis coefficients at weight w."""
    addc, scalec, zero_like = combine
    M = m_to_e_matrix(w)
    out = {}
    for nu, coeff in vec.items():
        for mu in partitions_of(w):
            c = M.get((nu, mu), 0)
            if c:
                out[mu] = addc(out.get(mu, zero_like), scalec(coeff, c))
    return {k: v for k, v in out.items() if v}


def m_monomial_in_e(omega):
    """m_omega as an integer combination of Chern monomials e_mu."""
    w = sum(omega)
    M = m_to_e_matrix(w)
    return {mu: c for (nu, mu), c in M.items() if nu == omega}

"""The complex-cobordism coefficient ring in its Hurewicz model.

A class of degree n is a homogeneous weight-n integer polynomial in
Z[b1, b2, ...]; the coordinate of the monomial b^omega is the
monomial-symmetric characteristic number of the stable normal bundle.
The geometric catalog (projective spaces and Milnor hypersurfaces) feeds
a generator search using the classical s-number criterion: degree n admits
a polynomial generator with s_n = p exactly when n+1 is a power of the
prime p, and s_n = 1 otherwise.  Monomials in the chosen generators give
an integral basis of every degree.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import bpoly
from .gradedpoly import GradedPoly, reciprocal
from .intmat import IntMatrix
from .partitions import partitions_of
from .symfun import m_monomial_in_e


class NotInLattice(ValueError):
    pass


class BasisConstructionError(RuntimeError):
    pass


@dataclass(frozen=True)
class MUClass:
    """Element of the degree-n coefficient group, as its Hurewicz image."""
    degree: int
    hb: tuple  # sorted tuple of (partition, int), the b-monomial coordinates

    @classmethod
    def from_dict(cls, degree, coeffs):
        items = tuple(sorted((k, int(v)) for k, v in coeffs.items() if v))
        for part, _ in items:
            assert sum(part) == degree, "non-homogeneous class"
        return cls(degree, items)

    @classmethod
    def zero(cls, degree):
        return cls(degree, ())

    @classmethod
    def unit(cls):
        return cls(0, (((), 1),))

    def coeffs(self):
        return dict(self.hb)

    def is_zero(self):
        return not self.hb

    def coefficient(self, part):
        return dict(self.hb).get(tuple(part), 0)

    def __add__(self, other):
        assert self.degree == other.degree or self.is_zero() or other.is_zero()
        deg = other.degree if self.is_zero() else self.degree
        return MUClass.from_dict(deg, bpoly.add(self.coeffs(), other.coeffs()))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return MUClass.from_dict(self.degree, bpoly.scale(self.coeffs(), c))

    def __mul__(self, other):
        return MUClass.from_dict(self.degree + other.degree,
                                 bpoly.mul(self.coeffs(), other.coeffs()))

    def poly(self, bound=None):
        bound = bound if bound is not None else max(self.degree, 1)
        weights = {"b%d" % i: i for i in range(1, bound + 1)}
        coeffs = {}
        for part, c in self.hb:
            mon = {}
            for i in part:
                mon["b%d" % i] = mon.get("b%d" % i, 0) + 1
            coeffs[tuple(sorted(mon.items()))] = Fraction(c)
        return GradedPoly(weights, bound, coeffs)

    def __str__(self):
        if not self.hb:
            return "0"
        terms = []
        for part, c in self.hb:
            mon = "*".join("b%d" % i for i in part) or "1"
            terms.append("%+d*%s" % (c, mon))
        return " ".join(terms)


def s_number(x):
    """The reported s-number: the b_n coordinate normalized so that
    s_n[CP^n] = n+1 (raw normal-bundle coordinate times the global sign)."""
    assert x.degree >= 1
    return -x.coefficient((x.degree,))


# -- characteristic-number dictionary ------------------------------------


def _chern_weights(n):
    return {"c%d" % i: i for i in range(1, n + 1)}


def _cpoly_coefficient(poly, omega):
    """Coefficient of the Chern monomial prod c_{omega_i} in a GradedPoly
    over the c-variables."""
    mon = {}
    for i in omega:
        mon["c%d" % i] = mon.get("c%d" % i, 0) + 1
    return poly.coefficient(tuple(sorted(mon.items())))


@lru_cache(maxsize=None)
def reciprocal_class_matrix(n):
    """Matrix R[omega][omega']: the Chern monomial c^omega of the
    reciprocal total Chern class, expanded in Chern monomials of the
    original bundle.  Involutive: applying R twice is the identity."""
    weights = _chern_weights(n)
    total = GradedPoly.const(weights, n, 1)
    for i in range(1, n + 1):
        total = total + GradedPoly.gen(weights, n, "c%d" % i)
    recip = reciprocal(total)
    pieces = {w: recip.homogeneous_part(w) for w in range(1, n + 1)}
    mat = {}
    for omega in partitions_of(n):
        prod = GradedPoly.const(weights, n, 1)
        for part in omega:
            prod = prod * pieces[part]
        for omega2 in partitions_of(n):
            c = _cpoly_coefficient(prod, omega2)
            assert c.denominator == 1
            if c:
                mat[(omega, omega2)] = int(c)
    return mat


def _apply_matrix(mat, vec, n):
    out = {}
    for omega in partitions_of(n):
        s = 0
        for omega2 in partitions_of(n):
            c = mat.get((omega, omega2), 0)
            if c:
                s += c * vec.get(omega2, 0)
        if s:
            out[omega] = s
    return out


def chern_numbers_to_hurewicz(tangent_numbers, n):
    """Tangent Chern numbers c_omega(T)[X] -> Hurewicz image (normal
    monomial-symmetric numbers)."""
    if n == 0:
        return MUClass.from_dict(0, {(): tangent_numbers.get((), 0)})
    for omega in partitions_of(n):
        if omega not in tangent_numbers:
            raise KeyError("missing Chern number for partition %s" % (omega,))
    normal_c = _apply_matrix(reciprocal_class_matrix(n), tangent_numbers, n)
    out = {}
    for omega in partitions_of(n):
        s = 0
        for mu, c in m_monomial_in_e(omega).items():
            s += c * normal_c.get(mu, 0)
        if s:
            out[omega] = s
    return MUClass.from_dict(n, out)


def hurewicz_to_chern_numbers(x):
    """Inverse of chern_numbers_to_hurewicz: tangent Chern numbers of a
    class from its Hurewicz coordinates."""
    n = x.degree
    if n == 0:
        return {(): x.coefficient(())}
    from .symfun import e_to_m_matrix
    E = e_to_m_matrix(n)
    normal_c = {}
    for mu in partitions_of(n):
        s = 0
        for nu in partitions_of(n):
            c = E.get((mu, nu), 0)
            if c:
                s += c * x.coefficient(nu)
        if s:
            normal_c[mu] = s
    tangent = _apply_matrix(reciprocal_class_matrix(n), normal_c, n)
    return {omega: tangent.get(omega, 0) for omega in partitions_of(n)}


# -- the geometric catalog ------------------------------------------------


def cpn_class(ctx, n):
    """The class of complex projective n-space: (n+1) times the n-th
    logarithm coefficient."""
    if n == 0:
        return MUClass.unit()
    if n > ctx.bound:
        raise ValueError("degree %d exceeds truncation %d" % (n, ctx.bound))
    return MUClass.from_dict(n, bpoly.scale(ctx.log_coefficient(n), n + 1))


def cpn_tangent_numbers(n):
    """Tangent Chern numbers of CP^n from (1+h)^{n+1} mod h^{n+1}."""
    binom = [1] * (n + 1)
    for k in range(1, n + 1):
        binom[k] = binom[k - 1] * (n + 2 - k) // k
    out = {}
    for omega in partitions_of(n):
        prod = 1
        for part in omega:
            prod *= binom[part]
        out[omega] = prod
    return out


def milnor_hypersurface_class(ctx, i, j):
    """The Milnor hypersurface H_{i,j} in P^i x P^j (a smooth (1,1)
    divisor), via its tangent numbers in Z[x,y]/(x^{i+1}, y^{j+1})."""
    if not (1 <= i <= j):
        raise ValueError("need 1 <= i <= j")
    n = i + j - 1
    if n > ctx.bound:
        raise ValueError("degree %d exceeds truncation %d" % (n, ctx.bound))
    return chern_numbers_to_hurewicz(milnor_tangent_numbers(i, j), n)


@lru_cache(maxsize=None)
def milnor_tangent_numbers(i, j):
    """Tangent Chern numbers of H_{i,j}: total tangent class
    (1+x)^{i+1} (1+y)^{j+1} / (1+x+y), integrated against (x+y)."""
    def rmul(u, v):
        out = {}
        for (a1, b1), c1 in u.items():
            for (a2, b2), c2 in v.items():
                a, b = a1 + a2, b1 + b2
                if a <= i and b <= j:
                    key = (a, b)
                    out[key] = out.get(key, 0) + c1 * c2
        return {k: c for k, c in out.items() if c}

    one = {(0, 0): 1}
    px = dict(one)
    for _ in range(i + 1):
        px = rmul(px, {(0, 0): 1, (1, 0): 1})
    py = dict(one)
    for _ in range(j + 1):
        py = rmul(py, {(0, 0): 1, (0, 1): 1})
    # geometric series for 1/(1+x+y)
    h = {(1, 0): 1, (0, 1): 1}
    inv = dict(one)
    term = dict(one)
    sign = 1
    for _ in range(i + j + 1):
        term = rmul(term, h)
        if not term:
            break
        sign = -sign
        inv = {k: inv.get(k, 0) + sign * term.get(k, 0)
               for k in set(inv) | set(term)}
        inv = {k: c for k, c in inv.items() if c}
    ct = rmul(rmul(px, py), inv)
    n = i + j - 1
    pieces = {}
    for (a, b), c in ct.items():
        pieces.setdefault(a + b, {})[(a, b)] = c
    out = {}
    for omega in partitions_of(n):
        prod = dict(one)
        for part in omega:
            prod = rmul(prod, pieces.get(part, {}))
        paired = rmul(prod, h)  # multiply by the fundamental-class dual x+y
        out[omega] = paired.get((i, j), 0)
    return out


def degree_catalog(ctx, n):
    """Ordered catalog of geometric classes in degree n."""
    assert n >= 1
    entries = [("cp%d" % n, cpn_class(ctx, n))]
    for i in range(1, n // 2 + 2):
        j = n + 1 - i
        if i <= j and j >= 1 and (i, j) != (0, n + 1):
            entries.append(("h%d_%d" % (i, j), milnor_hypersurface_class(ctx, i, j)))
    return entries


def generator_target(n):
    """|s_n| required of a polynomial generator in degree n: p if n+1 is a
    power of the prime p, else 1."""
    m = n + 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            q = m
            while q % d == 0:
                q //= d
            return d if q == 1 else 1
        d += 1
    return m  # n+1 prime


def select_generator(ctx, n):
    """Deterministic integer combination of the degree-n catalog achieving
    the minimal positive s-number.  Sequential extended gcd over the
    catalog in its fixed order."""
    entries = degree_catalog(ctx, n)
    combo = None
    g = 0
    for _, cls in entries:
        s = s_number(cls)
        if s == 0:
            continue
        if combo is None:
            combo, g = cls, s
        else:
            gg, u, v = _ext_gcd(g, s)
            if abs(gg) < abs(g):
                combo = combo.scale(u) + cls.scale(v)
                g = gg
    if combo is None:
        raise BasisConstructionError("no class with nonzero s-number in degree %d" % n)
    if g < 0:
        combo, g = combo.scale(-1), -g
    target = generator_target(n)
    if g != target:
        raise BasisConstructionError(
            "degree %d: achieved |s| = %d, Milnor criterion requires %d "
            "(convention bug or catalog too small)" % (n, g, target))
    return combo


def _ext_gcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


class MUBasis:
    """Monomial basis x^omega of every degree <= max_n, with coordinate
    matrices in the b-monomial coordinates and exact solving."""

    def __init__(self, ctx, max_n=None):
        self.ctx = ctx
        self.max_n = ctx.bound if max_n is None else max_n
        assert self.max_n <= ctx.bound
        self.generators = {}
        for n in range(1, self.max_n + 1):
            self.generators[n] = select_generator(ctx, n)
        self._monomials = {0: [((), MUClass.unit())]}
        self._matrices = {}
        self._solvers = {}

    def basis(self, n):
        """List of (partition label, MUClass) for degree n, in the global
        partition order."""
        if n not in self._monomials:
            entries = []
            for omega in partitions_of(n):
                cls = MUClass.unit()
                for part in omega:
                    cls = cls * self.generators[part]
                entries.append((omega, cls))
            self._monomials[n] = entries
        return self._monomials[n]

    def matrix(self, n):
        """Columns = b-monomial coordinates of the basis classes."""
        if n not in self._matrices:
            parts = partitions_of(n)
            cols = [[cls.coefficient(p) for p in parts] for _, cls in self.basis(n)]
            rows = [[cols[j][i] for j in range(len(cols))] for i in range(len(parts))]
            self._matrices[n] = IntMatrix.from_rows(rows) if rows else IntMatrix.zero(0, 0)
        return self._matrices[n]

    def rank(self, n):
        return len(partitions_of(n))

    def _inverse(self, n):
        """Cached rational inverse of the coordinate matrix."""
        if n not in self._solvers:
            m = self.matrix(n)
            size = m.rows
            a = []
            for i in range(size):
                row = [Fraction(m.entries[i][j]) for j in range(size)]
                row += [Fraction(1 if i == j else 0) for j in range(size)]
                a.append(row)
            for col in range(size):
                sel = next(r for r in range(col, size) if a[r][col] != 0)
                a[col], a[sel] = a[sel], a[col]
                pv = a[col][col]
                a[col] = [x / pv for x in a[col]]
                for r in range(size):
                    if r != col and a[r][col] != 0:
                        f = a[r][col]
                        a[r] = [x - f * y for x, y in zip(a[r], a[col])]
            self._solvers[n] = [row[size:] for row in a]
        return self._solvers[n]

    def to_coordinates(self, x):
        """Coordinates of a class in the degree-n monomial basis; raises
        NotInLattice if the class is not an integer combination."""
        n = x.degree
        if n == 0:
            return [x.coefficient(())]
        parts = partitions_of(n)
        target = [x.coefficient(p) for p in parts]
        inv = self._inverse(n)
        coords = []
        for row in inv:
            c = sum(r * t for r, t in zip(row, target) if t)
            if isinstance(c, Fraction) and c.denominator != 1:
                raise NotInLattice("fractional coordinate %s in degree %d" % (c, n))
            coords.append(int(c))
        return coords

    def contains(self, x):
        try:
            self.to_coordinates(x)
            return True
        except NotInLattice:
            return False

    def from_coordinates(self, n, coords):
        out = MUClass.zero(n)
        for (omega, cls), c in zip(self.basis(n), coords):
            if c:
                out = out + cls.scale(c)
        return out

    def catalog_span_matches(self, n):
        """Whether the Z-span of all products of catalog classes of total
        degree n equals the monomial-basis span (Hermite forms agree)."""
        from .intmat import same_column_span
        parts = partitions_of(n)
        cols = []
        for omega in parts:
            choices = [[cls for _, cls in degree_catalog(self.ctx, part)]
                       for part in omega]
            idx = [0] * len(omega)
            while True:
                cls = MUClass.unit()
                for t, k in enumerate(idx):
                    cls = cls * choices[t][k]
                cols.append([cls.coefficient(p) for p in parts])
                for t in range(len(idx) - 1, -1, -1):
                    idx[t] += 1
                    if idx[t] < len(choices[t]):
                        break
                    idx[t] = 0
                else:
                    break
                if not omega:
                    break
        if not cols:
            cols = [[1]]
        rows = [[c[i] for c in cols] for i in range(len(parts))]
        return same_column_span(IntMatrix.from_rows(rows), self.matrix(n))


def multiply(basis, x, y):
    """Product of two lattice elements, asserting closure."""
    out = x * y
    if out.degree <= basis.max_n:
        basis.to_coordinates(out)
    return out

"""Chern characteristic numbers of explicit varieties.

Hypersurfaces of degree d in projective n-space are computed in the
truncated ring Z[h]/(h^n): total tangent class (1+h)^(n+1)/(1+dh),
integration = d times the coefficient of h^(n-1).  Products of projective
spaces use the multigraded analogue.  The Calabi-Yau certificate is
symbolic: the degree-1 part of the tangent class vanishes identically in
the ambient model (a necessary condition for an actual trivialization of
the determinant; the honest limit of what coefficients can certify).

The generator verdict for the plus part: a class of degree n >= 2 in the
cycle lattice generates a polynomial slot away from 2 exactly when its
s-number is +-(odd prime p) * 2^j for n+1 a power of p, and +-2^j
otherwise.
"""

from dataclasses import dataclass

from . import mu
from .partitions import partitions_of


@dataclass(frozen=True)
class VarietyClass:
    description: str
    dimension: int
    tangent_numbers: tuple  # sorted ((partition, int), ...)
    mu_class: mu.MUClass
    calabi_yau: bool = False

    def tangent(self):
        return dict(self.tangent_numbers)

    def to_json(self):
        return {
            "description": self.description,
            "dimension": self.dimension,
            "tangent_chern_numbers": {
                "+".join(map(str, omega)) if omega else "()": v
                for omega, v in self.tangent_numbers},
            "hurewicz": {"+".join(map(str, p)) if p else "()": c
                         for p, c in self.mu_class.hb},
            "calabi_yau_symbolic": self.calabi_yau,
        }


def hypersurface_class(ambient_n, degree):
    """A smooth hypersurface of the given degree in projective
    ambient_n-space (dimension ambient_n - 1)."""
    assert degree >= 1 and ambient_n >= 1
    n = ambient_n - 1  # dimension of the hypersurface

    # Z[h]/(h^(n+1)): coefficient lists of length n+1
    def hmul(u, v):
        out = [0] * (n + 1)
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b and i + j <= n:
                        out[i + j] += a * b
        return out

    one = [1] + [0] * n
    tangent_total = one
    for _ in range(ambient_n + 1):
        tangent_total = hmul(tangent_total, [1, 1] + [0] * (n - 1) if n >= 1 else [1])
    # divide by 1 + degree*h (geometric series)
    inv = one[:]
    term = one[:]
    sign = 1
    for _ in range(n):
        term = hmul(term, [0, degree] + [0] * (n - 1) if n >= 1 else [0])
        sign = -sign
        inv = [a + sign * b for a, b in zip(inv, term)]
    tangent_total = hmul(tangent_total, inv)

    cy = n >= 1 and tangent_total[1] == 0  # c1 vanishes symbolically
    numbers = {}
    for omega in partitions_of(n):
        prod = one
        for part in omega:
            piece = [0] * (n + 1)
            piece[part] = tangent_total[part]
            prod = hmul(prod, piece)
        numbers[omega] = degree * prod[n]
    cls = mu.chern_numbers_to_hurewicz(numbers, n)
    return VarietyClass(
        description="hypersurface of degree %d in P^%d" % (degree, ambient_n),
        dimension=n,
        tangent_numbers=tuple(sorted(numbers.items())),
        mu_class=cls,
        calabi_yau=cy,
    )


def product_projective_class(dims):
    """A product of projective spaces, via the multigraded tangent class
    prod (1+x_k)^(d_k+1)."""
    dims = list(dims)
    assert all(d >= 0 for d in dims)
    n = sum(dims)
    axes = len(dims)

    def mmul(u, v):
        out = {}
        for e1, a in u.items():
            for e2, b in v.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                if all(e[k] <= dims[k] for k in range(axes)):
                    out[e] = out.get(e, 0) + a * b
        return {k: c for k, c in out.items() if c}

    one = {tuple([0] * axes): 1}
    total = dict(one)
    for k, d in enumerate(dims):
        lin = dict(one)
        unit = tuple(1 if t == k else 0 for t in range(axes))
        lin[unit] = 1
        for _ in range(d + 1):
            total = mmul(total, lin)
    by_degree = {}
    for e, c in total.items():
        by_degree.setdefault(sum(e), {})[e] = c
    top = tuple(dims)
    numbers = {}
    for omega in partitions_of(n):
        prod = dict(one)
        for part in omega:
            prod = mmul(prod, by_degree.get(part, {}))
        numbers[omega] = prod.get(top, 0)
    cls = mu.chern_numbers_to_hurewicz(numbers, n)
    # c1 of a product of projective spaces never vanishes
    return VarietyClass(
        description="product of projective spaces %s" % (tuple(dims),),
        dimension=n,
        tangent_numbers=tuple(sorted(numbers.items())),
        mu_class=cls,
        calabi_yau=False,
    )


def chern_number(x, omega):
    """The Chern number of the stable normal bundle (the negative of the
    tangent bundle) of a coefficient-ring class."""
    omega = tuple(sorted(omega, reverse=True))
    if sum(omega) != x.degree:
        raise ValueError("partition weight %d does not match degree %d"
                         % (sum(omega), x.degree))
    n = x.degree
    if n == 0:
        return x.coefficient(())
    from .symfun import e_to_m_matrix
    E = e_to_m_matrix(n)
    total = 0
    for nu in partitions_of(n):
        c = E.get((omega, nu), 0)
        if c:
            total += c * x.coefficient(nu)
    return total


class NotACycle(ValueError):
    pass


def generator_check_msu(x, cf):
    """Whether a cycle-lattice class has the s-number of a polynomial
    generator of the plus part: odd part exactly p when n+1 is a power of
    the odd prime p, trivial odd part otherwise (powers of 2 are units
    away from 2).  A vanishing s-number fails outright; otherwise the
    class must lie in the cycle lattice (NotACycle if it does not)."""
    n = x.degree
    assert n >= 2
    s = mu.s_number(x)
    if s == 0:
        return False
    from .intmat import HNFSolver
    coords = cf.basis.to_coordinates(x)
    solver = HNFSolver(cf.cycles_in_lattice(n))
    if solver.solve(coords) is None:
        raise NotACycle("class is not a cycle (not in the image of the "
                        "special linear theory)")
    odd = abs(s)
    while odd % 2 == 0:
        odd //= 2
    target = mu.generator_target(n)
    if target != 1 and target % 2 == 1:
        return odd == target
    # n+1 a power of 2 (target 2, absorbed away from 2) or no prime power
    return odd == 1

"""Finitely generated abelian groups in invariant-factor normal form.

A group is Z^free_rank + Z/d1 + ... + Z/dk with 2 <= d1 | d2 | ... | dk.
Groups carry the set of inverted primes of the ambient coefficient ring
Z[1/e]; torsion at an inverted prime is stripped eagerly so that equality
of normal forms is decidable.
"""

from dataclasses import dataclass, field
from functools import reduce
from math import gcd

from .intmat import diagonal_of, smith_normal_form


def _factorint(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _strip_primes(n, primes):
    for p in primes:
        while n % p == 0:
            n //= p
    return n


@dataclass(frozen=True)
class FGAbGroup:
    free_rank: int = 0
    invariant_factors: tuple = ()
    inverted_primes: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        assert self.free_rank >= 0
        fs = self.invariant_factors
        assert all(f >= 2 for f in fs)
        assert all(fs[i + 1] % fs[i] == 0 for i in range(len(fs) - 1))
        assert all(f % p != 0 for f in fs for p in self.inverted_primes)

    @classmethod
    def from_divisors(cls, divisors, inverted_primes=()):
        """Normal form of a direct sum of cyclic groups Z/d (d = 0 means Z).

        >>> FGAbGroup.from_divisors([0, 4, 6])
        FGAbGroup(free_rank=1, invariant_factors=(2, 12), inverted_primes=frozenset())
        """
        inverted = frozenset(int(p) for p in inverted_primes)
        rank = 0
        by_prime = {}
        for d in divisors:
            d = abs(int(d))
            if d == 0:
                rank += 1
                continue
            d = _strip_primes(d, inverted)
            if d == 1:
                continue
            for p, e in _factorint(d).items():
                by_prime.setdefault(p, []).append(e)
        for p in by_prime:
            by_prime[p].sort(reverse=True)
        k = max((len(v) for v in by_prime.values()), default=0)
        factors = []
        for slot in range(k):  # slot 0 collects the largest powers
            f = 1
            for p, exps in by_prime.items():
                if slot < len(exps):
                    f *= p ** exps[slot]
            factors.append(f)
        factors.reverse()
        return cls(rank, tuple(factors), inverted)

    @classmethod
    def trivial(cls, inverted_primes=()):
        return cls(0, (), frozenset(inverted_primes))

    @classmethod
    def free(cls, rank, inverted_primes=()):
        return cls(rank, (), frozenset(inverted_primes))

    @classmethod
    def cyclic(cls, n, inverted_primes=()):
        return cls.from_divisors([n], inverted_primes)

    def is_trivial(self):
        return self.free_rank == 0 and not self.invariant_factors

    def direct_sum(self, *others):
        groups = (self,) + others
        inverted = frozenset().union(*(g.inverted_primes for g in groups))
        divisors = []
        rank = 0
        for g in groups:
            rank += g.free_rank
            divisors.extend(g.invariant_factors)
        out = FGAbGroup.from_divisors(divisors, inverted)
        return FGAbGroup(rank + out.free_rank, out.invariant_factors, inverted)

    def power(self, k):
        """Direct sum of k copies."""
        assert k >= 0
        if k == 0:
            return FGAbGroup.trivial(self.inverted_primes)
        return reduce(lambda a, b: a.direct_sum(b), [self] * k)

    def localize(self, primes):
        """Invert additional primes (strip their torsion)."""
        inverted = self.inverted_primes | frozenset(primes)
        return FGAbGroup.from_divisors(
            [0] * self.free_rank + list(self.invariant_factors), inverted)

    def torsion_part(self):
        return FGAbGroup(0, self.invariant_factors, self.inverted_primes)

    def free_part(self):
        return FGAbGroup(self.free_rank, (), self.inverted_primes)

    def primary_part(self, p):
        """The p-primary torsion subgroup."""
        divisors = []
        for f in self.invariant_factors:
            q = 1
            while f % p == 0:
                f //= p
                q *= p
            if q > 1:
                divisors.append(q)
        return FGAbGroup.from_divisors(divisors, self.inverted_primes)

    def same_groups(self, other):
        """Equality of normal forms ignoring the inverted-prime decoration."""
        return (self.free_rank == other.free_rank
                and self.invariant_factors == other.invariant_factors)

    def to_json(self):
        return {
            "free_rank": self.free_rank,
            "invariant_factors": list(self.invariant_factors),
            "inverted_primes": sorted(self.inverted_primes),
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["free_rank"], tuple(data["invariant_factors"]),
                   frozenset(data["inverted_primes"]))

    def __str__(self):
        terms = []
        if self.free_rank == 1:
            terms.append("Z")
        elif self.free_rank > 1:
            terms.append("Z^%d" % self.free_rank)
        seen = {}
        for f in self.invariant_factors:
            seen[f] = seen.get(f, 0) + 1
        for f in sorted(seen):
            terms.append("Z/%d" % f if seen[f] == 1 else "(Z/%d)^%d" % (f, seen[f]))
        return " + ".join(terms) if terms else "0"


def cokernel(mat, inverted_primes=()):
    """Normal form of Z^rows / column span of mat, localized at Z[1/e]."""
    _, d, _ = smith_normal_form(mat)
    diag = diagonal_of(d)
    r = sum(1 for x in diag if x != 0)
    divisors = [x for x in diag if x != 0] + [0] * (mat.rows - r)
    return FGAbGroup.from_divisors(divisors, inverted_primes)


def lcm(a, b):
    return abs(a * b) // gcd(a, b) if a and b else 0

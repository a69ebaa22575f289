"""Grothendieck-Witt and Witt ring data for the supported base fields.

The catalog covers exactly the field kinds whose Witt groups are finitely
generated: quadratically closed fields, real closed fields, and finite
fields of odd characteristic split by q mod 4.  Stored data per kind:

  kind              W(k)         GW(k)      I(k)    I^2
  quadratically cl. Z/2          Z          0       0
  real closed       Z (signat.)  Z^2        Z (=2Z) Z (=4Z), I^m = 2^m Z
  finite, q=1(4)    Z/2 + Z/2    Z + Z/2    Z/2     0
  finite, q=3(4)    Z/4          Z + Z/2    Z/2     0

GW elements are coordinates (a, b) over the diagonal generators <1>, <u>
(u a non-square; for real closed u = -1; for quadratically closed b = 0),
with multiplication <u>^2 = <1>.  The fundamental ideal is the kernel of
the rank map on GW; rank mod 2 identifies W/I.

The finite-field tables are verified against a brute-force classification
of diagonal forms in wittforms.py; that oracle is part of the test and
verification surface, not of this table module.
"""

from dataclasses import dataclass

from .abelian import FGAbGroup

QUADRATICALLY_CLOSED = "quadratically_closed"
REAL_CLOSED = "real_closed"
FINITE_Q1 = "finite_q1"
FINITE_Q3 = "finite_q3"

KINDS = (QUADRATICALLY_CLOSED, REAL_CLOSED, FINITE_Q1, FINITE_Q3)

KIND_ALIASES = {
    "c": QUADRATICALLY_CLOSED,
    "r": REAL_CLOSED,
    "fq1": FINITE_Q1,
    "fq3": FINITE_Q3,
    QUADRATICALLY_CLOSED: QUADRATICALLY_CLOSED,
    REAL_CLOSED: REAL_CLOSED,
    FINITE_Q1: FINITE_Q1,
    FINITE_Q3: FINITE_Q3,
}


@dataclass(frozen=True)
class FieldDescriptor:
    kind: str
    exponential_characteristic: int = 1

    def __post_init__(self):
        assert self.kind in KINDS
        e = self.exponential_characteristic
        assert e != 2, "theory requires 1/2 in the base"
        if self.kind in (QUADRATICALLY_CLOSED, REAL_CLOSED):
            assert e == 1
        else:
            assert e > 2 and _is_prime(e), "finite kinds need an odd prime"

    @property
    def inverted_primes(self):
        e = self.exponential_characteristic
        return frozenset() if e == 1 else frozenset([e])


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def field_descriptor(kind, q=None):
    """Build a descriptor from a kind alias; finite kinds take the field
    size q (default 5 for q=1 mod 4, 3 for q=3 mod 4)."""
    kind = KIND_ALIASES[kind]
    if kind == FINITE_Q1:
        q = 5 if q is None else q
        assert q % 4 == 1
        return FieldDescriptor(kind, _char_of(q))
    if kind == FINITE_Q3:
        q = 3 if q is None else q
        assert q % 4 == 3
        return FieldDescriptor(kind, _char_of(q))
    return FieldDescriptor(kind, 1)


def _char_of(q):
    d = 2
    while d * d <= q:
        if q % d == 0:
            return d
        d += 1
    return q


@dataclass(frozen=True)
class WittRing:
    """Normal forms and structure maps of GW/W/I for one catalog field."""
    field: FieldDescriptor
    gw: FGAbGroup
    w: FGAbGroup

    # -- GW element calculus: coordinates (a, b) over <1>, <u> ------------

    def gw_normalize(self, elt):
        """Canonical coordinates of a GW element.  For finite kinds the
        relation 2<1> = 2<u> (hyperbolic comparison) gives the normal form
        (a + b - (b mod 2), b mod 2); the infinite kinds are free."""
        a, b = elt
        if self.field.kind in (FINITE_Q1, FINITE_Q3):
            return (a + b - (b % 2), b % 2)
        if self.field.kind == QUADRATICALLY_CLOSED:
            return (a + b, 0)  # <u> = <1>
        return (a, b)

    def gw_add(self, x, y):
        return self.gw_normalize((x[0] + y[0], x[1] + y[1]))

    def gw_mul(self, x, y):
        # <1>, <u> multiply with <u>^2 = <1>
        a = x[0] * y[0] + x[1] * y[1]
        b = x[0] * y[1] + x[1] * y[0]
        return self.gw_normalize((a, b))

    def gw_rank(self, elt):
        return elt[0] + elt[1]

    def gw_is_zero(self, elt):
        return self.gw_normalize(elt) == (0, 0)

    def hyperbolic(self):
        """The hyperbolic form <1> + <-1> as a GW element."""
        if self.field.kind == QUADRATICALLY_CLOSED:
            return self.gw_normalize((2, 0))
        if self.field.kind == REAL_CLOSED:
            return (1, 1)  # <-1> is the non-square generator
        if self.field.kind == FINITE_Q3:
            return (1, 1)  # -1 is a non-square
        return self.gw_normalize((2, 0))  # q = 1 mod 4: -1 is a square

    def in_fundamental_ideal(self, elt):
        return self.gw_rank(elt) == 0

    # -- groups -----------------------------------------------------------

    def fundamental_ideal_power(self, m):
        """I(k)^m as an abstract group (I^0 = W)."""
        assert m >= 0
        inv = self.field.inverted_primes
        if m == 0:
            return self.w
        kind = self.field.kind
        if kind == QUADRATICALLY_CLOSED:
            return FGAbGroup.trivial(inv)
        if kind == REAL_CLOSED:
            return FGAbGroup.free(1, inv)  # 2^m Z inside W = Z
        return FGAbGroup.cyclic(2, inv) if m == 1 else FGAbGroup.trivial(inv)

    def ideal_power_index_in_w(self, m):
        """The index [W : I^m] when finite, for the embedding bookkeeping."""
        kind = self.field.kind
        if kind == REAL_CLOSED:
            return 2 ** m
        if kind == QUADRATICALLY_CLOSED:
            return 2 if m >= 1 else 1
        return {0: 1, 1: 2}.get(m, 4)

    def two_primary_torsion_of_ideal(self, m):
        """The 2-primary torsion subgroup of I^m (m >= 1)."""
        assert m >= 1
        return self.fundamental_ideal_power(m).primary_part(2)

    def rank_mod2_on_w(self, w_elt):
        """Rank mod 2 of a Witt class given in the per-kind W coordinates."""
        kind = self.field.kind
        if kind == QUADRATICALLY_CLOSED:
            return w_elt % 2
        if kind == REAL_CLOSED:
            return w_elt % 2  # signature and rank agree mod 2
        if kind == FINITE_Q3:
            return w_elt % 2  # W = Z/4 generated by <1>
        return (w_elt[0] + w_elt[1]) % 2  # W = Z/2 + Z/2 on <1>, <u>


def witt_data(field):
    """The WittRing record of a catalog field."""
    inv = field.inverted_primes
    kind = field.kind
    if kind == QUADRATICALLY_CLOSED:
        return WittRing(field, gw=FGAbGroup.free(1, inv),
                        w=FGAbGroup.cyclic(2, inv))
    if kind == REAL_CLOSED:
        return WittRing(field, gw=FGAbGroup.free(2, inv),
                        w=FGAbGroup.free(1, inv))
    if kind == FINITE_Q1:
        return WittRing(field, gw=FGAbGroup.from_divisors([0, 2], inv),
                        w=FGAbGroup.from_divisors([2, 2], inv))
    if kind == FINITE_Q3:
        return WittRing(field, gw=FGAbGroup.from_divisors([0, 2], inv),
                        w=FGAbGroup.cyclic(4, inv))
    raise ValueError(kind)

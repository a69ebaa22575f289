import pytest

from slcob.abelian import FGAbGroup
from slcob.witt import (FieldDescriptor, field_descriptor, witt_data,
                        FINITE_Q1, FINITE_Q3, QUADRATICALLY_CLOSED,
                        REAL_CLOSED)
from slcob.wittforms import FormCalculus


def test_descriptor_validation():
    with pytest.raises(AssertionError):
        FieldDescriptor(QUADRATICALLY_CLOSED, 3)
    with pytest.raises(AssertionError):
        FieldDescriptor(FINITE_Q1, 2)
    with pytest.raises(AssertionError):
        FieldDescriptor(FINITE_Q3, 9)  # exponential characteristic is 3
    assert field_descriptor("fq1", 9).exponential_characteristic == 3
    assert field_descriptor("r").inverted_primes == frozenset()
    assert field_descriptor("fq3", 7).inverted_primes == frozenset([7])


def test_tables():
    wc = witt_data(field_descriptor("c"))
    assert wc.w == FGAbGroup.cyclic(2)
    assert wc.gw == FGAbGroup.free(1)
    assert wc.fundamental_ideal_power(1).is_trivial()

    wr = witt_data(field_descriptor("r"))
    assert wr.w == FGAbGroup.free(1)
    assert wr.gw == FGAbGroup.free(2)
    assert wr.fundamental_ideal_power(3) == FGAbGroup.free(1)
    assert wr.ideal_power_index_in_w(3) == 8  # I^3 = 8Z inside W = Z

    for kind, wgroup in ((FINITE_Q1, FGAbGroup.from_divisors([2, 2], [5])),
                         (FINITE_Q3, FGAbGroup.cyclic(4, [3]))):
        fd = field_descriptor("fq1" if kind == FINITE_Q1 else "fq3")
        wd = witt_data(fd)
        assert wd.w == wgroup
        assert wd.gw == FGAbGroup.from_divisors([0, 2], fd.inverted_primes)
        assert wd.fundamental_ideal_power(1) == FGAbGroup.cyclic(
            2, fd.inverted_primes)
        assert wd.fundamental_ideal_power(2).is_trivial()


def test_ideal_power_examples():
    assert witt_data(field_descriptor("c")).fundamental_ideal_power(1).is_trivial()
    r = witt_data(field_descriptor("r"))
    assert r.fundamental_ideal_power(0) == r.w
    q1 = witt_data(field_descriptor("fq1"))
    assert q1.fundamental_ideal_power(2).is_trivial()


def test_two_primary_torsion():
    assert witt_data(field_descriptor("r")).two_primary_torsion_of_ideal(2).is_trivial()
    assert witt_data(field_descriptor("c")).two_primary_torsion_of_ideal(1).is_trivial()
    q3 = witt_data(field_descriptor("fq3"))
    assert q3.two_primary_torsion_of_ideal(1) == FGAbGroup.cyclic(2, [3])


def test_gw_is_ideal_plus_rank_section():
    for kind in ("c", "r", "fq1", "fq3"):
        fd = field_descriptor(kind)
        wd = witt_data(fd)
        ideal = wd.fundamental_ideal_power(1)
        assert wd.gw == ideal.direct_sum(FGAbGroup.free(1, fd.inverted_primes))


def test_rank_mod2_and_w_mod_i():
    for kind in ("c", "r", "fq1", "fq3"):
        wd = witt_data(field_descriptor(kind))
        # I is the rank kernel in GW
        assert wd.in_fundamental_ideal((-1, 1))
        assert not wd.in_fundamental_ideal((1, 0))
        # W / I = Z/2 as orders: [W : I] = 2
        assert wd.ideal_power_index_in_w(1) == 2 or kind == "c"


def test_gw_calculus():
    wd = witt_data(field_descriptor("fq3"))
    one, u = (1, 0), (0, 1)
    assert wd.gw_mul(u, u) == wd.gw_normalize(one)
    h = wd.hyperbolic()
    assert wd.gw_rank(h) == 2
    # 2<1> = 2<u> under the hyperbolic relation
    assert wd.gw_normalize((2, 0)) == wd.gw_normalize((0, 2))


def witt_group_from_oracle(q):
    return FormCalculus(q).group_structure()


@pytest.mark.parametrize("q,expected", [(3, (4,)), (5, (2, 2)), (7, (4,)),
                                        (9, (2, 2))])
def test_brute_force_oracle_group(q, expected):
    assert witt_group_from_oracle(q) == expected


@pytest.mark.parametrize("q", [3, 5, 7])
def test_brute_force_oracle_ideal(q):
    fc = FormCalculus(q)
    assert len(fc.fundamental_ideal()) == 2  # I = Z/2 inside W
    assert fc.ideal_square_elements() == [()]  # I^2 = 0
    assert fc.rank_disc_classifies()


def test_oracle_agrees_with_tables():
    for q in (3, 5, 7, 9):
        fc = FormCalculus(q)
        fd = field_descriptor("fq3" if q % 4 == 3 else "fq1", q)
        wd = witt_data(fd)
        oracle = FGAbGroup.from_divisors(fc.group_structure(),
                                         fd.inverted_primes)
        assert oracle == wd.w


def test_real_closed_signature_oracle():
    """Signatures multiply, so the m-th ideal power is generated by forms
    of signature +-2^m."""
    sig = {(): 0, (1,): 1, (-1,): -1}

    def signature(diag):
        return sum(1 if x > 0 else -1 for x in diag)

    binary_even = [(1, 1), (1, -1), (-1, -1)]
    sigs = {signature(d) for d in binary_even}
    assert sigs == {2, 0, -2}
    # products of m binary forms have signature divisible by 2^m
    from itertools import product as iproduct
    for m in (2, 3):
        values = set()
        for combo in iproduct(binary_even, repeat=m):
            s = 1
            for d in combo:
                s *= signature(d)
            values.add(s)
        assert {abs(v) for v in values} <= {0, 2 ** m}


def test_quadratically_closed_oracle():
    """Where -1 is a square (as in any quadratically closed field, and in
    F_5), the rank-2 form of squares is hyperbolic; forms with square
    entries reduce by rank mod 2."""
    fc = FormCalculus(5)
    assert fc.anisotropic_kernel((1, 1)) == ()
    assert fc.anisotropic_kernel((1, 4)) == ()  # 4 is a square
    assert fc.anisotropic_kernel((1, 1, 1)) == (1,)

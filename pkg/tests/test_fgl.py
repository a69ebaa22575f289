from itertools import permutations

from slcob import bpoly
from slcob.fgl import FGLContext
from slcob.gradedpoly import GradedPoly


def mon(*pairs):
    return tuple(sorted(pairs))


def test_exp_log_are_mutually_inverse(ctx):
    comp = bpoly.ser_compose(ctx.exp_series, ctx.log_series, ctx.top)
    assert comp[1] == bpoly.ONE
    assert all(not comp[d] for d in range(2, ctx.top + 1))


def test_log_coefficients():
    ctx = FGLContext(6)
    assert ctx.log_coefficient(1) == {(1,): -1}
    assert ctx.log_coefficient(2) == {(1, 1): 2, (2,): -1}


def test_formal_group_unit_and_commutativity():
    ctx = FGLContext(6)
    F = ctx.formal_group()
    # F(x, 0) = x: no monomials in x alone except x itself
    pure_x = {m: c for m, c in F.coeffs.items()
              if all(g == "x" or g.startswith("b") for g, _ in m)}
    assert pure_x == {mon(("x", 1)): 1}
    # symmetry in x and y
    swapped = {}
    for m, c in F.coeffs.items():
        d = dict(m)
        d["x"], d["y"] = d.get("y", 0), d.get("x", 0)
        swapped[tuple(sorted((g, e) for g, e in d.items() if e))] = c
    assert swapped == F.coeffs


def test_formal_group_cross_coefficient_is_minus_cp1():
    """The xy-coefficient of the group law equals -[CP1] = 2 b1.

    (The series expansion of exp(log x + log y) fixes the sign; the
    twisted Leibniz anchors in the operations tests depend on it.)"""
    ctx = FGLContext(6)
    F = ctx.formal_group()
    assert F.coefficient(mon(("b1", 1), ("x", 1), ("y", 1))) == 2
    cp1 = bpoly.scale(ctx.log_coefficient(1), 2)
    assert bpoly.scale(cp1, -1) == {(1,): 2}


def test_associativity_via_formal_sum():
    ctx = FGLContext(5)
    fs = ctx.formal_sum(3)
    xs = ["x1", "x2", "x3"]
    for perm in permutations(range(3)):
        permuted = {}
        for m, c in fs.coeffs.items():
            d = dict(m)
            vals = [d.get(x, 0) for x in xs]
            out = {xs[i]: vals[perm[i]] for i in range(3)}
            for g, e in d.items():
                if g.startswith("b"):
                    out[g] = e
            permuted[tuple(sorted((g, e) for g, e in out.items() if e))] = c
        assert permuted == fs.coeffs


def test_associativity_directly():
    ctx = FGLContext(5)
    F = ctx.formal_group()
    w = dict(F.weights)
    w["z"] = 1
    lift = GradedPoly(w, F.bound, dict(F.coeffs))
    inner_xy = GradedPoly(w, F.bound, dict(F.coeffs))
    left = lift.substitute("x", inner_xy).substitute("y", GradedPoly.gen(w, F.bound, "z"))
    inner_yz = {}
    for m, c in F.coeffs.items():
        d = dict(m)
        d2 = {}
        for g, e in d.items():
            d2["y" if g == "x" else "z" if g == "y" else g] = e
        inner_yz[tuple(sorted(d2.items()))] = c
    right = lift.substitute("y", GradedPoly(w, F.bound, inner_yz))
    assert left == right


def test_formal_sum_specialization():
    ctx = FGLContext(5)
    assert ctx.formal_sum(1).coeffs == {mon(("x1", 1)): 1}
    fs2 = ctx.formal_sum(2)
    # setting x2 = 0 leaves x1
    specialized = {m: c for m, c in fs2.coeffs.items()
                   if not any(g == "x2" for g, _ in m)}
    assert specialized == {mon(("x1", 1)): 1}


def test_formal_inverse():
    ctx = FGLContext(6)
    chi = ctx.formal_inverse()
    assert chi.coefficient(mon(("x", 1))) == -1
    assert chi.coefficient(mon(("b1", 1), ("x", 2))) == 2
    # chi(chi(x)) = x
    x = GradedPoly.gen(chi.weights, chi.bound, "x")
    assert chi.substitute("x", chi) == x
    # F(x, chi(x)) = 0: solve order by order independently
    chi_series = ctx.chi_series()
    comp = bpoly.ser_compose(ctx.log_series, chi_series, ctx.top)
    neg_log = [bpoly.scale(c, -1) for c in ctx.log_series]
    assert comp == neg_log  # log(chi(x)) = -log x is equivalent to F(x,chi)=0


def test_chi_by_order_solving_oracle():
    """Solve F(x, chi(x)) = 0 order by order from the group law alone."""
    ctx = FGLContext(4)
    F = ctx.formal_group()
    w = F.weights
    chi = GradedPoly(w, 4, {(("x", 1),): -1})
    for d in range(2, 5):
        trial = F.substitute("y", chi).substitute("x", GradedPoly.gen(w, 4, "x"))
        err = {m: c for m, c in trial.coeffs.items()}
        # pick out the x^d error term (coefficients may involve b's)
        correction = {}
        for m, c in err.items():
            dd = dict(m)
            if dd.get("x", 0) == d:
                rest = tuple((g, e) for g, e in m if g != "x")
                correction[rest] = c
        fix = GradedPoly(w, 4, {tuple(sorted(dict(r + (("x", d),)).items())): -c
                                for r, c in correction.items()})
        chi = chi + fix
    assert chi.coefficient((("b1", 1), ("x", 2))) == 2
    assert chi.coeffs == ctx.formal_inverse().coeffs


def test_c1_determinant_classes():
    ctx = FGLContext(6)
    c1 = ctx.c1_determinant_class(1, dual=False)
    assert c1.coeffs == {mon(("c1", 1)): 1}
    c2 = ctx.c1_determinant_class(2, dual=False)
    assert c2.coefficient(mon(("c1", 1))) == 1
    assert c2.coefficient(mon(("b1", 1), ("c2", 1))) == 2
    dual = ctx.c1_determinant_class(2, dual=True)
    assert dual.coefficient(mon(("c1", 1))) == -1
    # product class begins -c1^2
    prod = c2 * dual
    assert prod.coefficient(mon(("c1", 2))) == -1
    assert prod.coefficient(mon(("c1", 1))) == 0


def test_determinant_class_stability():
    ctx = FGLContext(5)
    big = ctx.c1_determinant_class(3, dual=False)
    # restrict c3 = 0
    restricted = {m: c for m, c in big.coeffs.items()
                  if not any(g == "c3" for g, _ in m)}
    small = ctx.c1_determinant_class(2, dual=False)
    assert restricted == small.coeffs
    bigd = ctx.c1_determinant_class(3, dual=True)
    restricted = {m: c for m, c in bigd.coeffs.items()
                  if not any(g == "c3" for g, _ in m)}
    assert restricted == ctx.c1_determinant_class(2, dual=True).coeffs


def test_integrality_of_all_series():
    ctx = FGLContext(8)
    assert ctx.formal_group().is_integral()
    assert ctx.formal_inverse().is_integral()
    assert ctx.formal_sum(2).is_integral()
    assert ctx.c1_determinant_class(2).is_integral()
    assert ctx.c1_determinant_class(2, dual=True).is_integral()


def test_flip_sign_knob():
    """The documented orientation knob: flipping replaces b_i by -b_i in
    odd weights, so the projective line changes sign coherently."""
    flipped = FGLContext(4, flip_sign=True)
    assert flipped.log_coefficient(1) == {(1,): 1}
    F = flipped.formal_group()
    assert F.coefficient(mon(("b1", 1), ("x", 1), ("y", 1))) == -2
    comp = bpoly.ser_compose(flipped.exp_series, flipped.log_series, flipped.top)
    assert comp[1] == bpoly.ONE

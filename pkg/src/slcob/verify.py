"""Verification suites: each returns a list of (name, ok, detail) checks.

These are the executable forms of the headline identities: the twisted
Leibniz laws on the Wall lattice, the homology pattern, the introduction
table, the Hermitian K-theory relations, and the brute-force Witt oracle.
"""

from . import msl, mu
from .conner_floyd import ConnerFloyd
from .abelian import FGAbGroup
from .operations import apply_operation, boundary_partial, delta_op
from .partitions import partition_count
from .witt import field_descriptor, witt_data
from .wittforms import FormCalculus


def suite_leibniz(ctx, cf, max_degree=12):
    """Both product laws on all ordered pairs of Wall-lattice basis
    classes with total degree within the truncation.  The boundary
    operation's correction term is multiplication by minus the class of
    the projective line (the xy-coefficient of the group law)."""
    checks = []
    pd = boundary_partial(ctx)
    dl = delta_op(ctx)
    a11 = mu.cpn_class(ctx, 1).scale(-1)
    wall = {n: cf.wall_classes(n) for n in range(1, max_degree)}
    papply = {}

    def d(cls):
        key = cls
        if key not in papply:
            papply[key] = apply_operation(ctx, pd, cls)
        return papply[key]

    ok_partial = True
    ok_delta = True
    pairs = 0
    first_bad = ""
    for na in range(1, max_degree):
        for nb in range(1, max_degree - na + 1):
            for a in wall[na]:
                for b in wall[nb]:
                    pairs += 1
                    ab = a * b
                    da, db = d(a), d(b)
                    rhs = da * b + a * db + a11 * da * db
                    if d(ab) != rhs:
                        ok_partial = False
                        first_bad = first_bad or "partial law at (%d,%d)" % (na, nb)
                    lhs = apply_operation(ctx, dl, ab)
                    rhs2 = (da * db).scale(-2)
                    if lhs != rhs2:
                        ok_delta = False
                        first_bad = first_bad or "product law at (%d,%d)" % (na, nb)
    checks.append(("twisted Leibniz for the boundary operation "
                   "(%d Wall pairs)" % pairs, ok_partial, first_bad))
    checks.append(("product law for the shift-2 operation "
                   "(%d Wall pairs)" % pairs, ok_delta, first_bad))
    return checks


def suite_cf_pattern(cf, max_degree=11):
    """Homology pattern, rank bookkeeping, surjectivity, image lattices."""
    checks = []
    for n in range(0, max_degree + 1):
        got = cf.homology(n)
        expected = cf.expected_homology(n)
        checks.append(("H_%d = %s" % (n, expected), got == expected,
                       "got %s" % got))
    ranks_ok = all(cf.w_rank(n) == partition_count(n) - partition_count(n - 2)
                   for n in range(0, max_degree + 2))
    checks.append(("Wall ranks p(n) - p(n-2)", ranks_ok, ""))
    zranks_ok = all(cf.cycles_in_lattice(n).cols
                    == partition_count(n) - partition_count(n - 1)
                    for n in range(0, max_degree + 1))
    checks.append(("cycle ranks p(n) - p(n-1)", zranks_ok, ""))
    surj = all(cf.delta_cokernel(n).is_trivial()
               for n in range(2, min(max_degree + 2, cf.max_n) + 1))
    checks.append(("shift-2 operation surjective on the full lattice", surj, ""))
    return checks


def suite_subring(ctx, cf, max_degree=12):
    """Products of cycles are cycles; boundaries sit inside cycles with
    the 2-torsion quotient."""
    from .intmat import HNFSolver
    checks = []
    ok = True
    solvers = {}
    cycles = {n: cf.cycle_classes(n) for n in range(0, max_degree)}
    for na in range(1, max_degree):
        for nb in range(1, max_degree - na + 1):
            n = na + nb
            if n not in solvers:
                solvers[n] = HNFSolver(cf.cycles_in_lattice(n))
            for a in cycles.get(na, []):
                for b in cycles.get(nb, []):
                    coords = cf.basis.to_coordinates(a * b)
                    if solvers[n].solve(coords) is None:
                        ok = False
    checks.append(("products of cycles are cycles (degrees <= %d)" % max_degree,
                   ok, ""))
    ok_b = True
    for n in range(0, max_degree - 1):
        z = HNFSolver(cf.cycles_in_lattice(n))
        bnd = cf.boundaries_in_lattice(n)
        for j in range(bnd.cols):
            if z.solve(list(bnd.column(j))) is None:
                ok_b = False
    checks.append(("boundaries lie inside cycles", ok_b, ""))
    return checks


def suite_table(kind, q=None):
    """The introduction table and the assembly consistency identities."""
    fd = field_descriptor(kind, q)
    checks = []
    rows = msl.intro_table_rows(fd)
    expected = _expected_intro(fd)
    for row, exp in zip(rows, expected):
        checks.append(("degree %d: %s" % (row["n"], exp),
                       str(row["group"]) == exp, "got %s" % row["group"]))
    for n in range(0, 12):
        q1 = msl.quotient_by_ideal(fd, n)
        q2 = msl.msu_additive(n, fd.inverted_primes)
        checks.append(("quotient by the ideal = special unitary part, n=%d" % n,
                       q1 == q2, ""))
        a1 = msl.away_from_two(fd, n)
        a2 = msl.away_from_two_expected(fd, n)
        checks.append(("away-from-2 splitting, n=%d" % n, a1 == a2, ""))
        checks.append(("eta-surjectivity bookkeeping, n=%d" % n,
                       msl.eta_epi_check(fd, n), ""))
        tor = msl.msl_torsion(fd, n)
        diag_tor = msl.msl_diagonal(fd, n).group.torsion_part()
        checks.append(("torsion consistency, n=%d" % n,
                       tor.primary_part(2) == diag_tor.primary_part(2), ""))
    return checks


def _expected_intro(fd):
    """The published table rows with GW(k) instantiated per kind."""
    wr = witt_data(fd)
    gw = wr.gw

    def render(gw_copies, free, tors2):
        g = FGAbGroup.free(free, fd.inverted_primes)
        for _ in range(gw_copies):
            g = g.direct_sum(gw)
        if tors2:
            g = g.direct_sum(FGAbGroup.cyclic(2, fd.inverted_primes).power(tors2))
        return str(g)

    return [
        render(1, 0, 0),   # GW(k)
        render(0, 0, 1),   # Z/2
        render(0, 1, 0),   # Z
        render(0, 1, 0),   # Z
        render(1, 1, 0),   # GW(k) + Z
        render(0, 2, 1),   # Z^2 + Z/2
        render(0, 4, 0),   # Z^4
        render(0, 4, 0),   # Z^4
        render(2, 5, 0),   # GW(k)^2 + Z^5
        render(0, 8, 2),   # Z^8 + (Z/2)^2
    ]


def suite_kq(kind, q=None, max_degree=16):
    from .kq import KQPresentation
    fd = field_descriptor(kind, q)
    pres = KQPresentation(fd)
    checks = list(pres.relation_check(max_degree))
    surj, ker, iso = pres.eta_top_square_check()
    checks.append(("rank-mod-2 factorization surjective", surj, ""))
    checks.append(("kernel is the fundamental ideal", ker, ""))
    checks.append(("isomorphism iff quadratically closed",
                   iso == (fd.kind == "quadratically_closed"), ""))
    return checks


def suite_witt_oracle(qs=(3, 5, 7)):
    """Brute-force classification over small finite fields against the
    stored tables."""
    checks = []
    for q in qs:
        fc = FormCalculus(q)
        struct = fc.group_structure()
        expected = (4,) if q % 4 == 3 else (2, 2)
        checks.append(("W(F_%d) invariant factors %s" % (q, (expected,)),
                       struct == expected, "got %s" % (struct,)))
        checks.append(("|I(F_%d)| = 2" % q, len(fc.fundamental_ideal()) == 2, ""))
        sq = fc.ideal_square_elements()
        checks.append(("I(F_%d)^2 = 0" % q, sq == [()], "got %s" % (sq,)))
        checks.append(("rank and discriminant classify forms over F_%d" % q,
                       fc.rank_disc_classifies(), ""))
    return checks


def run_suite(name, ctx=None, cf=None, kind=None, q=None, max_degree=12):
    """Dispatch a named suite; heavy fixtures are built on demand."""
    if name in ("leibniz", "cf-pattern", "subring", "all") and cf is None:
        from .fgl import FGLContext
        from .mu import MUBasis
        ctx = ctx or FGLContext(max(max_degree, 2))
        cf = ConnerFloyd(ctx, MUBasis(ctx))
    kinds = [kind] if kind else ["c", "r", "fq1", "fq3"]
    if name == "leibniz":
        return suite_leibniz(ctx, cf, max_degree)
    if name == "cf-pattern":
        return suite_cf_pattern(cf, min(max_degree - 1, 11))
    if name == "subring":
        return suite_subring(ctx, cf, max_degree)
    if name == "table":
        out = []
        for k in kinds:
            out += [("[%s] %s" % (k, n), ok, d) for n, ok, d in suite_table(k, q)]
        return out
    if name == "kq":
        out = []
        for k in kinds:
            out += [("[%s] %s" % (k, n), ok, d) for n, ok, d in suite_kq(k, q)]
        return out
    if name == "witt-oracle":
        return suite_witt_oracle()
    if name == "all":
        out = []
        out += [("leibniz: %s" % n, ok, d)
                for n, ok, d in suite_leibniz(ctx, cf, max_degree)]
        out += [("cf: %s" % n, ok, d)
                for n, ok, d in suite_cf_pattern(cf, min(max_degree - 1, 11))]
        out += [("subring: %s" % n, ok, d)
                for n, ok, d in suite_subring(ctx, cf, max_degree)]
        for k in kinds:
            out += [("table[%s]: %s" % (k, n), ok, d)
                    for n, ok, d in suite_table(k, q)]
            out += [("kq[%s]: %s" % (k, n), ok, d) for n, ok, d in suite_kq(k, q)]
        out += [("witt: %s" % n, ok, d) for n, ok, d in suite_witt_oracle()]
        return out
    raise ValueError("unknown suite %r" % name)

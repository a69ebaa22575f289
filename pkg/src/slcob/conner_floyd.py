"""The Conner-Floyd complex on the Wall lattice.

The Wall lattice in degree n is the kernel of the shift-2 operation inside
the degree-n coefficient lattice; the differential is minus the boundary
operation restricted there.  Cycles, boundaries and homology are computed
with exact integer linear algebra; homology is always an elementary abelian
2-group whose rank follows the partition-counted pattern

    H_n = (Z/2)^p(n/4)      for n = 0 mod 4,
          (Z/2)^p((n-2)/4)  for n = 2 mod 4,
          0                 otherwise,

and the free ranks satisfy rank Ker(shift-2 op) = p(n) - p(n-2) and
rank(cycles) = p(n) - p(n-1).  The module also carries the additive model
of the special unitary cobordism groups and the image lattices of the
special linear theory inside the general one.
"""

from functools import lru_cache

from .abelian import FGAbGroup, cokernel
from .intmat import HNFSolver, IntMatrix, kernel_basis
from .operations import apply_operation, boundary_partial, delta_op
from .partitions import partition_count


class ConventionError(RuntimeError):
    """An operation left the lattice it must preserve."""


class ConnerFloyd:
    def __init__(self, ctx, basis):
        self.ctx = ctx
        self.basis = basis
        self.max_n = basis.max_n

    # -- full-lattice matrices -------------------------------------------

    @lru_cache(maxsize=None)
    def operation_matrix(self, name, n):
        """Matrix of an operation from degree n to degree n - shift in the
        monomial bases (columns indexed by the degree-n basis)."""
        op = {"partial": boundary_partial, "delta": delta_op}[name](self.ctx)
        target_dim = max(partition_count(n - op.shift), 0) if n >= op.shift else 0
        cols = []
        for _, cls in self.basis.basis(n):
            img = apply_operation(self.ctx, op, cls)
            if n < op.shift:
                cols.append([])
                continue
            cols.append(self.basis.to_coordinates(img) if not img.is_zero()
                        else [0] * target_dim)
        if n < op.shift or target_dim == 0:
            return IntMatrix.zero(0, len(cols))
        rows = [[c[i] for c in cols] for i in range(target_dim)]
        return IntMatrix.from_rows(rows)

    def delta_cokernel(self, n):
        """Cokernel of the shift-2 operation from degree n to n-2 on the
        full lattice (trivial for every n: the operation is split onto)."""
        assert n >= 2
        return cokernel(self.operation_matrix("delta", n))

    # -- the Wall lattice ---------------------------------------------------

    @lru_cache(maxsize=None)
    def w_lattice(self, n):
        """Columns: a basis of Ker(shift-2 op) in degree-n monomial
        coordinates.  Degrees 0 and 1 are the full lattice."""
        dim = partition_count(n)
        if n < 2:
            return IntMatrix.identity(dim)
        return kernel_basis(self.operation_matrix("delta", n))

    def w_rank(self, n):
        return self.w_lattice(n).cols

    def wall_classes(self, n):
        """The Wall-lattice basis as actual coefficient-ring classes."""
        w = self.w_lattice(n)
        out = []
        for j in range(w.cols):
            out.append(self.basis.from_coordinates(n, list(w.column(j))))
        return out

    @lru_cache(maxsize=None)
    def _w_solver(self, n):
        return HNFSolver(self.w_lattice(n))

    @lru_cache(maxsize=None)
    def delta_matrix(self, n):
        """The differential (minus the boundary operation) from the Wall
        lattice in degree n to degree n-1, in the Wall bases."""
        assert n >= 1
        src = self.w_lattice(n)
        solver = self._w_solver(n - 1)
        op = boundary_partial(self.ctx)
        cols = []
        for j in range(src.cols):
            cls = self.basis.from_coordinates(n, list(src.column(j)))
            img = apply_operation(self.ctx, op, cls).scale(-1)
            coords = (self.basis.to_coordinates(img) if not img.is_zero()
                      else [0] * partition_count(n - 1))
            sol = solver.solve(coords)
            if sol is None:
                raise ConventionError(
                    "boundary image escapes the Wall lattice in degree %d" % n)
            cols.append(sol)
        tgt_rank = self.w_rank(n - 1)
        if not cols:
            return IntMatrix.zero(tgt_rank, 0)
        rows = [[c[i] for c in cols] for i in range(tgt_rank)]
        return IntMatrix.from_rows(rows)

    # -- cycles, boundaries, homology ---------------------------------------

    @lru_cache(maxsize=None)
    def cycles(self, n):
        """Columns: basis of Ker(differential) in Wall coordinates."""
        if n == 0:
            return IntMatrix.identity(self.w_rank(0))
        return kernel_basis(self.delta_matrix(n))

    def cycle_classes(self, n):
        w = self.w_lattice(n)
        z = self.cycles(n)
        out = []
        for j in range(z.cols):
            coords = w.apply(list(z.column(j)))
            out.append(self.basis.from_coordinates(n, coords))
        return out

    def cycles_in_lattice(self, n):
        """Cycle basis in full monomial coordinates (columns)."""
        w = self.w_lattice(n)
        return w * self.cycles(n)

    def boundaries_in_lattice(self, n):
        """Boundary basis in full monomial coordinates (columns)."""
        assert n + 1 <= self.max_n
        w = self.w_lattice(n)
        return w * self.delta_matrix(n + 1)

    def homology(self, n, inverted_primes=()):
        """Cycles mod boundaries in degree n as a normal-form group.
        Boundaries are expressed in a basis of the (saturated) cycle
        lattice first, so no spurious torsion appears."""
        assert n + 1 <= self.max_n
        z = self.cycles(n)
        b = self.delta_matrix(n + 1)
        solver = HNFSolver(z)
        cols = []
        for j in range(b.cols):
            target = list(b.column(j))
            sol = solver.solve(target)
            if sol is None:
                raise ConventionError(
                    "boundary is not a cycle in degree %d (differential "
                    "squared nonzero)" % n)
            cols.append(sol)
        if not cols:
            mat = IntMatrix.zero(z.cols, 0)
        else:
            mat = IntMatrix.from_rows([[c[i] for c in cols]
                                       for i in range(z.cols)])
        return cokernel(mat, inverted_primes)

    def cf_homology(self, n, inverted_primes=()):
        """(cycles, boundaries, homology) in degree n: the two lattices in
        monomial coordinates and the quotient normal form."""
        return (self.cycles_in_lattice(n), self.boundaries_in_lattice(n),
                self.homology(n, inverted_primes))

    def expected_homology(self, n, inverted_primes=()):
        """The partition-counted pattern for the homology groups."""
        if n % 4 == 0:
            rank = partition_count(n // 4)
        elif n % 4 == 2:
            rank = partition_count((n - 2) // 4)
        else:
            rank = 0
        return FGAbGroup.cyclic(2, inverted_primes).power(rank) if rank else \
            FGAbGroup.trivial(inverted_primes)

    # -- downstream groups ---------------------------------------------------

    def msu_additive(self, n, inverted_primes=()):
        """Additive model of the special unitary cobordism group in degree
        n: free of rank p(n) - p(n-1), plus (Z/2)^p((n-1)/4) when
        n = 1 mod 4."""
        assert n >= 0
        free = partition_count(n) - partition_count(n - 1)
        out = FGAbGroup.free(free, inverted_primes)
        if n % 4 == 1:
            t = partition_count((n - 1) // 4)
            out = out.direct_sum(FGAbGroup.cyclic(2, inverted_primes).power(t))
        return out

    def msl_image_in_mgl(self, n):
        """The image lattice of the special linear theory in degree n:
        cycles if n != 2 mod 4, boundaries if n = 2 mod 4 (columns in
        monomial coordinates)."""
        if n % 4 == 2:
            return self.boundaries_in_lattice(n)
        return self.cycles_in_lattice(n)

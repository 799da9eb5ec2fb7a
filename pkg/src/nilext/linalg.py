"""Dense exact linear algebra over the scalar fields.

Vectors are plain lists of field elements. Subspaces are canonicalized to
reduced row echelon bases, so two subspaces are equal exactly when their
representations are equal.
"""

from __future__ import annotations


def zero_vec(field, n):
    return [field.zero] * n


def vec_add(a, b):
    return [x + y for x, y in zip(a, b)]

def vec_sub(a, b):
    return [x - y for x, y in zip(a, b)]


def vec_scale(c, a):
    return [c * x for x in a]


def is_zero_vec(field, a):
    return all(x == field.zero for x in a)


class Matrix:
    def __init__(self, field, rows):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        assert all(len(r) == self.ncols for r in self.rows)

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[field.one if i == j else field.zero for j in range(n)]
                           for i in range(n)])

    @classmethod
    def zero(cls, field, r, c):
        return cls(field, [[field.zero] * c for _ in range(r)])

    @classmethod
    def from_cols(cls, field, cols):
        return cls(field, cols).transpose()

    def col(self, j):
        return [r[j] for r in self.rows]

    def flatten(self):
        """Row-major list of all entries."""
        return [x for r in self.rows for x in r]

    @classmethod
    def unflatten(cls, field, n, flat):
        assert len(flat) == n * n
        return cls(field, [flat[i * n:(i + 1) * n] for i in range(n)])

    def transpose(self):
        return Matrix(self.field, [[self.rows[i][j] for i in range(self.nrows)]
                                   for j in range(self.ncols)])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            assert self.ncols == other.nrows
            z = self.field.zero
            out = []
            for r in self.rows:
                row = []
                for j in range(other.ncols):
                    acc = z
                    for k, a in enumerate(r):
                        if a != z:
                            acc = acc + a * other.rows[k][j]
                    row.append(acc)
                out.append(row)
            return Matrix(self.field, out)
        return NotImplemented

    def apply(self, vec):
        assert len(vec) == self.ncols
        z = self.field.zero
        out = []
        for r in self.rows:
            acc = z
            for a, x in zip(r, vec):
                if a != z and x != z:
                    acc = acc + a * x
            out.append(acc)
        return out

    def __add__(self, other):
        assert isinstance(other, Matrix)
        return Matrix(self.field, [vec_add(a, b) for a, b in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Matrix(self.field, [vec_sub(a, b) for a, b in zip(self.rows, other.rows)])

    def scale(self, c):
        return Matrix(self.field, [vec_scale(c, r) for r in self.rows])

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.nrows == other.nrows
                and self.ncols == other.ncols
                and all(a == b for ra, rb in zip(self.rows, other.rows)
                        for a, b in zip(ra, rb)))

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def rref(self):
        """Reduced row echelon form; returns (rows, pivot column list)."""
        f = self.field
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            pr = None
            for i in range(r, len(rows)):
                if rows[i][c] != f.zero:
                    pr = i
                    break
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            inv = f.one / rows[r][c]
            rows[r] = [inv * x for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c] != f.zero:
                    rows[i] = vec_sub(rows[i], vec_scale(rows[i][c], rows[r]))
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        return rows[:r], pivots

    def rank(self):
        return len(self.rref()[1])

    def is_invertible(self):
        return self.nrows == self.ncols and self.rank() == self.nrows

    def try_inverse(self):
        if self.nrows != self.ncols:
            return None
        n = self.nrows
        aug = Matrix(self.field,
                     [list(self.rows[i]) + list(Matrix.identity(self.field, n).rows[i])
                      for i in range(n)])
        rows, pivots = aug.rref()
        if pivots != list(range(n)):
            return None
        return Matrix(self.field, [r[n:] for r in rows])

    def inverse(self):
        inv = self.try_inverse()
        assert inv is not None, "matrix is singular"
        return inv

    def __repr__(self):
        return "Matrix(%r)" % (self.rows,)


def kernel_basis(m: Matrix):
    """Basis of the right kernel {x : m x = 0}."""
    f = m.field
    rows, pivots = m.rref()
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for c in free:
        v = zero_vec(f, m.ncols)
        v[c] = f.one
        for r, pc in zip(rows, pivots):
            v[pc] = -r[c]
        basis.append(v)
    return basis


def solve_linear(m: Matrix, b):
    """A particular solution of m x = b, or None."""
    f = m.field
    aug = Matrix(f, [list(r) + [bi] for r, bi in zip(m.rows, b)])
    rows, pivots = aug.rref()
    for r, pc in zip(rows, pivots):
        if pc == m.ncols:
            return None
    x = zero_vec(f, m.ncols)
    for r, pc in zip(rows, pivots):
        if pc < m.ncols:
            x[pc] = r[-1]
    return x


class Subspace:
    """Subspace of field^n with a canonical reduced echelon basis."""

    def __init__(self, field, ambient, vectors=()):
        self.field = field
        self.ambient = ambient
        vecs = [v for v in vectors if not is_zero_vec(field, v)]
        if vecs:
            self.basis = Matrix(field, vecs).rref()[0]
        else:
            self.basis = []

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, vec) -> bool:
        assert len(vec) == self.ambient
        f = self.field
        v = list(vec)
        for b in self.basis:
            lead = next(i for i, x in enumerate(b) if x != f.zero)
            if v[lead] != f.zero:
                v = vec_sub(v, vec_scale(v[lead], b))
        return is_zero_vec(f, v)

    def coords_of(self, vec):
        """Coordinates on the canonical basis, or None if not contained."""
        f = self.field
        v = list(vec)
        coords = []
        for b in self.basis:
            lead = next(i for i, x in enumerate(b) if x != f.zero)
            c = v[lead]
            coords.append(c)
            if c != f.zero:
                v = vec_sub(v, vec_scale(c, b))
        return coords if is_zero_vec(f, v) else None

    def add(self, other) -> "Subspace":
        assert self.ambient == other.ambient
        return Subspace(self.field, self.ambient, list(self.basis) + list(other.basis))

    def intersect(self, other) -> "Subspace":
        assert self.ambient == other.ambient
        if not self.basis or not other.basis:
            return Subspace(self.field, self.ambient)
        cols = [list(b) for b in self.basis] + [list(b) for b in other.basis]
        m = Matrix.from_cols(self.field, cols)
        vecs = []
        for k in kernel_basis(m):
            v = zero_vec(self.field, self.ambient)
            for c, b in zip(k[: len(self.basis)], self.basis):
                v = vec_add(v, vec_scale(c, b))
            vecs.append(v)
        return Subspace(self.field, self.ambient, vecs)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.dim == other.dim
                and all(all(a == b for a, b in zip(ra, rb))
                        for ra, rb in zip(self.basis, other.basis)))

    def __hash__(self):
        return hash((self.ambient, tuple(tuple(r) for r in self.basis)))

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient)


def complement_reps(u: Subspace, w: Subspace):
    """Vectors of u extending a basis of w to one of u (so: coset reps).

    Requires w to be a subspace of u; returns dim u - dim w vectors.
    """
    assert u.ambient == w.ambient
    for b in w.basis:
        assert u.contains(b), "second argument is not contained in the first"
    reps = []
    cur = w
    for b in u.basis:
        if not cur.contains(b):
            reps.append(list(b))
            cur = cur.add(Subspace(u.field, u.ambient, [b]))
    assert cur == u
    return reps

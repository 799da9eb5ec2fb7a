"""Automorphism action on extension data: orbit censuses over small prime
fields, symbolic verification of coefficient transformation tables, and
isomorphism search between algebras."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from .algebra import (Algebra, eval_tree, fingerprint, generating_scheme,
                      is_homomorphism)
from .extensions import (BilinearForm, CohomologyBasis, LineClass, b2_space,
                         central_extension, classify_line, cohomology)
from .linalg import Matrix, solve_linear
from .poly import POLY_RING, MultiPoly
from .scalars import PrimeField


class ResourceBound(Exception):
    """A search space exceeds the configured bound."""


def act(phi: Matrix, theta: BilinearForm) -> BilinearForm:
    """Pullback of the form along phi: (x, y) -> theta(phi x, phi y)."""
    return BilinearForm(theta.field, phi.transpose() * theta.gram * phi)


@dataclass(frozen=True)
class AutFamily:
    """A parametric matrix family inside the automorphism group."""

    label: str
    var_names: tuple
    nonzero: tuple
    entries: tuple  # rows of MultiPoly

    @classmethod
    def from_strings(cls, label, var_names, nonzero, rows):
        from .exprs import poly_str
        entries = tuple(tuple(poly_str(e) for e in row) for row in rows)
        return cls(label, tuple(var_names), tuple(nonzero), entries)

    @property
    def dim(self):
        return len(self.entries)

    def specialize(self, field, env) -> Matrix:
        for nm in self.nonzero:
            assert env[nm] != field.zero, "%s must be nonzero" % nm
        rows = [[e.evaluate(field, env) for e in row] for row in self.entries]
        m = Matrix(field, rows)
        assert m.is_invertible(), "specialized family member is singular"
        return m

    def poly_matrix(self) -> Matrix:
        return Matrix(POLY_RING, [list(r) for r in self.entries])


def _poly_grid_combo(coeffs, grids):
    n = len(grids[0])
    out = [[MultiPoly.const(0) for _ in range(n)] for _ in range(n)]
    for c, g in zip(coeffs, grids):
        for i in range(n):
            for j in range(n):
                out[i][j] = out[i][j] + c * g[i][j]
    return out


def verify_transform_table(family: AutFamily, formulas, nabla_grids, b2_rows):
    """Check symbolically that pulling back a generic combination of the
    named forms along the family lands on the combination given by the
    formulas, up to coboundaries.

    nabla_grids are the named forms as square grids of polynomials; b2_rows
    are flattened coboundary generators, each owning a position where its
    coefficient is a nonzero constant and every other generator vanishes.
    Returns (ok, detail).
    """
    assert len(formulas) == len(nabla_grids)
    n = family.dim
    coeff_vars = [MultiPoly.var("a%d" % (k + 1)) for k in range(len(nabla_grids))]
    generic = _poly_grid_combo(coeff_vars, nabla_grids)
    phi = family.poly_matrix()
    pulled = phi.transpose() * Matrix(POLY_RING, generic) * phi
    target = _poly_grid_combo(formulas, nabla_grids)
    residual = [pulled.rows[i][j] - target[i][j]
                for i in range(n) for j in range(n)]
    for r, row in enumerate(b2_rows):
        pivot = None
        for k, e in enumerate(row):
            if e.is_constant() and e.constant_value() != 0:
                if all(not other[k] for o, other in enumerate(b2_rows) if o != r):
                    pivot = k
                    break
        assert pivot is not None, "coboundary row %d has no clean pivot" % r
        c = residual[pivot] / row[pivot].constant_value()
        residual = [x - c * e for x, e in zip(residual, row)]
    for k, x in enumerate(residual):
        if x:
            return False, "residual at position (%d,%d): %r" % (
                k // n + 1, k % n + 1, x)
    return True, "exact match mod coboundaries"


def aut_group_fp(a: Algebra, max_search=300000):
    """All automorphisms of an algebra over a prime field, by exhausting
    images of a greedy generating set."""
    f = a.field
    elements = f.elements()
    p = len(elements)
    num_gens, trees, values = generating_scheme(a)
    total = p ** (a.dim * num_gens)
    if total > max_search:
        raise ResourceBound("automorphism search needs %d candidates, "
                            "bound is %d" % (total, max_search))
    vmat_inv = Matrix.from_cols(f, values).inverse()
    auts = []
    for flat in product(elements, repeat=a.dim * num_gens):
        gens = [list(flat[k * a.dim:(k + 1) * a.dim]) for k in range(num_gens)]
        try:
            imgs = [eval_tree(a, t, gens) for t in trees]
        except ZeroDivisionError:
            continue
        phi = Matrix.from_cols(f, imgs) * vmat_inv
        if phi.is_invertible() and is_homomorphism(a, a, phi):
            auts.append(phi)
    return auts


def iso_search_fp(a: Algebra, b: Algebra, max_search=300000):
    """Exhaustive isomorphism search over a prime field; None is a proof of
    non-isomorphism at this field."""
    assert a.field.name == b.field.name
    if a.dim != b.dim:
        return None
    f = a.field
    elements = f.elements()
    p = len(elements)
    num_gens, trees, values = generating_scheme(a)
    total = p ** (a.dim * num_gens)
    if total > max_search:
        raise ResourceBound("isomorphism search needs %d candidates, "
                            "bound is %d" % (total, max_search))
    vmat_inv = Matrix.from_cols(f, values).inverse()
    for flat in product(elements, repeat=a.dim * num_gens):
        gens = [list(flat[k * a.dim:(k + 1) * a.dim]) for k in range(num_gens)]
        imgs = [eval_tree(b, t, gens) for t in trees]
        img_mat = Matrix.from_cols(f, imgs)
        if not img_mat.is_invertible():
            continue
        phi = img_mat * vmat_inv
        if is_homomorphism(a, b, phi):
            return phi
    return None


def verify_isomorphism(a: Algebra, b: Algebra, phi: Matrix) -> bool:
    return (a.dim == b.dim and phi.is_invertible()
            and is_homomorphism(a, b, phi))


def _normalize_line(f, coords):
    lead = next((c for c in coords if c != f.zero), None)
    assert lead is not None
    inv = f.one / lead
    return tuple(inv * c for c in coords)


@dataclass
class LineOrbit:
    line_class: LineClass
    rep: tuple
    members: list
    witnesses: dict  # member coords -> automorphism reaching it from rep

    @property
    def size(self):
        return len(self.members)


@dataclass
class Census:
    base_label: str
    field_name: str
    h2_dim: int
    aut_count: int
    lines_total: int
    class_counts: dict
    orbits: list

    def orbits_of(self, line_class: LineClass):
        return [o for o in self.orbits if o.line_class is line_class]


def orbit_census_fp(a: Algebra, coh: CohomologyBasis = None,
                    max_search=300000) -> Census:
    """Partition the projective lines of the form-class space into orbits of
    the automorphism group, over a prime field."""
    assert isinstance(a.field, PrimeField) and a.field.p in (2, 3), \
        "census runs over F2 or F3"
    f = a.field
    if coh is None:
        coh = cohomology(a)
    r = coh.h2_dim
    elements = f.elements()
    lines = []
    for tup in product(elements, repeat=r):
        if all(c == f.zero for c in tup):
            continue
        if _normalize_line(f, tup) == tup:
            lines.append(tup)
    index = {t: k for k, t in enumerate(lines)}
    classes = []
    for t in lines:
        theta = coh.form_from_coords(list(t))
        classes.append(classify_line(a, theta))
    auts = aut_group_fp(a, max_search=max_search)
    maps = []
    for phi in auts:
        cols = [coh.coords_mod_b2(act(phi, rep)) for rep in coh.reps]
        maps.append(Matrix.from_cols(f, cols))
    parent = list(range(len(lines)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = {}
    for k, t in enumerate(lines):
        for phi, tmap in zip(auts, maps):
            img = _normalize_line(f, tuple(tmap.apply(list(t))))
            k2 = index[img]
            assert classes[k] is classes[k2], \
                "automorphism action must preserve the line class"
            edges.setdefault(k, []).append((k2, phi))
            ra, rb = find(k), find(k2)
            if ra != rb:
                parent[ra] = rb
    groups = {}
    for k in range(len(lines)):
        groups.setdefault(find(k), []).append(k)
    orbits = []
    for members in groups.values():
        rep = min(members, key=lambda k: tuple(c.v for c in lines[k]))
        witnesses = {lines[rep]: Matrix.identity(f, a.dim)}
        frontier = [rep]
        while frontier:
            nxt = []
            for k in frontier:
                w = witnesses[lines[k]]
                for k2, phi in edges[k]:
                    if lines[k2] not in witnesses:
                        witnesses[lines[k2]] = w * phi
                        nxt.append(k2)
            frontier = nxt
        assert len(witnesses) == len(members)
        orbits.append(LineOrbit(classes[rep], lines[rep],
                                [lines[k] for k in sorted(members)], witnesses))
    orbits.sort(key=lambda o: (o.line_class.value,
                               tuple(c.v for c in o.rep)))
    counts = {}
    for k in range(len(lines)):
        counts[classes[k].value] = counts.get(classes[k].value, 0) + 1
    return Census(a.label, f.name, r, len(auts), len(lines), counts, orbits)


def extension_of_line(a: Algebra, coh: CohomologyBasis, coords, label=None):
    theta = coh.form_from_coords(list(coords))
    return central_extension(a, [theta], label=label)


def witness_extension_iso(a: Algebra, coh: CohomologyBasis, rep_coords,
                          member_coords, phi: Matrix):
    """Build the extension isomorphism determined by an automorphism whose
    line action sends the orbit representative to the member.

    Returns a (dim+1)-square matrix from the member's extension to the
    representative's.
    """
    f = a.field
    n = a.dim
    theta_rep = coh.form_from_coords(list(rep_coords))
    theta_mem = coh.form_from_coords(list(member_coords))
    pulled = act(phi, theta_rep)
    cols = [theta_mem.flatten()]
    from .extensions import coboundary
    for k in range(n):
        cols.append(coboundary(a, a.basis_vector(k)).flatten())
    sol = solve_linear(Matrix.from_cols(f, cols), pulled.flatten())
    assert sol is not None, "pulled form must match the member mod coboundaries"
    c, fun = sol[0], sol[1:]
    assert c != f.zero
    rows = [list(phi.rows[i]) + [f.zero] for i in range(n)]
    rows.append(list(fun) + [c])
    return Matrix(f, rows)


_DEFAULT_PRIMES = (2, 3, 5, 7)


@dataclass
class Verdict:
    kind: str  # "witness" | "distinct" | "undecided"
    witness: Matrix = None
    component: str = ""
    evidence: dict = dc_field(default_factory=dict)

    @property
    def isomorphic(self):
        if self.kind == "witness":
            return True
        if self.kind == "distinct":
            return False
        return None


def _default_grid(field):
    from fractions import Fraction
    grid = [field.one, -field.one]
    if hasattr(field, "omega"):
        w = field.omega
        ii = field.i
        grid += [w, w * w, -w, -w * w, ii, -ii]
    vals = [2, -2, Fraction(1, 2), Fraction(-1, 2), 0]
    grid += [field.from_fraction(v) for v in vals]
    return grid


def _to_prime_field(a: Algebra, p: int):
    f = PrimeField(p)

    def conv(c):
        if hasattr(c, "is_rational"):
            if not c.is_rational():
                raise ValueError("not rational")
            c = c.rational_value()
        return f.from_fraction(c)

    try:
        return a.change_field(f, conv)
    except (ValueError, AssertionError):
        return None


def iso_search(a: Algebra, b: Algebra, grid=None, primes=_DEFAULT_PRIMES,
               max_search=300000) -> Verdict:
    """Decide isomorphism where possible: invariant separation, witness
    search over a grid of images, and prime-field evidence otherwise."""
    if a.dim != b.dim:
        return Verdict("distinct", component="dim")
    assert a.field.name == b.field.name
    if isinstance(a.field, PrimeField):
        w = iso_search_fp(a, b, max_search=max_search)
        if w is not None:
            return Verdict("witness", witness=w)
        return Verdict("distinct", component="exhaustive-search")
    fa, fb = fingerprint(a), fingerprint(b)
    diff = fa.first_difference(fb)
    if diff is not None:
        return Verdict("distinct", component=diff,
                       evidence={"left": str(fa), "right": str(fb)})
    evidence = {}
    if grid is None:
        grid = _default_grid(a.field)
    num_gens, trees, values = generating_scheme(a)
    total = len(grid) ** (a.dim * num_gens)
    if total <= max_search:
        f = a.field
        n = a.dim
        vmat_inv = Matrix.from_cols(f, values).inverse()
        coeffs = [[vmat_inv.apply(a.multiply(vi, vj)) for vj in values]
                  for vi in values]
        for flat in product(grid, repeat=n * num_gens):
            gens = [list(flat[k * n:(k + 1) * n]) for k in range(num_gens)]
            imgs = [eval_tree(b, t, gens) for t in trees]
            ok = True
            for i in range(n):
                for j in range(n):
                    lhs = b.multiply(imgs[i], imgs[j])
                    rhs = [f.zero] * n
                    for k, c in enumerate(coeffs[i][j]):
                        if c != f.zero:
                            for m in range(n):
                                rhs[m] = rhs[m] + c * imgs[k][m]
                    if lhs != rhs:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            img_mat = Matrix.from_cols(f, imgs)
            if not img_mat.is_invertible():
                continue
            phi = img_mat * vmat_inv
            if is_homomorphism(a, b, phi):
                return Verdict("witness", witness=phi)
        evidence["grid"] = "no witness among %d candidates" % total
    else:
        evidence["grid"] = "skipped, %d candidates above bound %d" % (
            total, max_search)
    for p in primes:
        ra, rb = _to_prime_field(a, p), _to_prime_field(b, p)
        if ra is None or rb is None:
            evidence["F%d" % p] = "reduction unavailable"
            continue
        try:
            w = iso_search_fp(ra, rb, max_search=max_search)
        except ResourceBound:
            evidence["F%d" % p] = "skipped, above bound"
            continue
        evidence["F%d" % p] = ("witness exists" if w is not None
                               else "no witness (exhaustive)")
    return Verdict("undecided", evidence=evidence)

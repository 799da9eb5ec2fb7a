import random

from nilext import catalog, tables
from nilext.algebra import is_homomorphism
from nilext.extensions import (BilinearForm, LineClass, cohomology,
                               central_extension)
from nilext.linalg import Matrix
from nilext.orbits import (AutFamily, Verdict, act, aut_group_fp,
                           extension_of_line, iso_search, iso_search_fp,
                           orbit_census_fp, verify_isomorphism,
                           verify_transform_table, witness_extension_iso)
from nilext.scalars import FIELDS, QQ


def _random_invertible(f, rng, n):
    while True:
        m = Matrix(f, [[f.random(rng) for _ in range(n)] for _ in range(n)])
        if m.is_invertible():
            return m


def test_act_composition_random():
    rng = random.Random(61)
    f = QQ
    for _ in range(200):
        n = rng.randrange(2, 5)
        p1 = _random_invertible(f, rng, n)
        p2 = _random_invertible(f, rng, n)
        th = BilinearForm.from_flat(
            f, n, [f.random(rng) for _ in range(n * n)])
        assert act(p1 * p2, th) == act(p2, act(p1, th))


def test_act_definition():
    f = QQ
    rng = random.Random(62)
    n = 3
    phi = _random_invertible(f, rng, n)
    th = BilinearForm.from_flat(f, n, [f.random(rng) for _ in range(n * n)])
    moved = act(phi, th)
    x = [f.random(rng) for _ in range(n)]
    y = [f.random(rng) for _ in range(n)]
    assert moved.evaluate(x, y) == th.evaluate(phi.apply(x), phi.apply(y))


def test_aut_family_specialize():
    setup = tables.SETUPS["CD3_01"]["aut"]
    fam = AutFamily.from_strings("CD3_01", setup["vars"], setup["nonzero"],
                                 setup["rows"])
    a = catalog.instantiate("CD3_01")
    env = {"x": QQ.from_int(2), "y": QQ.from_int(5)}
    phi = fam.specialize(QQ, env)
    assert is_homomorphism(a, a, phi)


def test_transform_tables_symbolic():
    for bid in sorted(tables.SETUPS):
        ok, msg = catalog.transform_check(bid)
        assert ok, (bid, msg)


def test_transform_table_rejects_wrong_formula():
    setup = tables.SETUPS["CD3_01"]
    aut = setup["aut"]
    fam = AutFamily.from_strings("CD3_01", aut["vars"], aut["nonzero"],
                                 aut["rows"])
    from nilext.exprs import poly_str
    from nilext.poly import MultiPoly
    formulas = [poly_str(s) for s in setup["transform"]]
    formulas[0] = formulas[0] + MultiPoly.var("x")
    n = 3
    grids = []
    for spec in setup["forms"]:
        g = [[MultiPoly.const(0) for _ in range(n)] for _ in range(n)]
        for src, i, j in spec:
            g[i - 1][j - 1] = g[i - 1][j - 1] + poly_str(src)
        grids.append(g)
    rows = []
    for row_spec in setup["b2"]:
        flat = [MultiPoly.const(0) for _ in range(n * n)]
        for src, i, j in row_spec:
            flat[(i - 1) * n + (j - 1)] += poly_str(src)
        rows.append(flat)
    ok, msg = verify_transform_table(fam, formulas, grids, rows)
    assert not ok


def test_aut_group_fp_closure():
    f2 = FIELDS["F2"]
    a = catalog.instantiate("CD3_02", field=f2)
    auts = aut_group_fp(a)
    assert auts
    seen = {m for m in auts}
    rng = random.Random(63)
    for _ in range(30):
        p1 = rng.choice(auts)
        p2 = rng.choice(auts)
        assert p1 * p2 in seen


def test_iso_search_fp_finds_identity():
    f2 = FIELDS["F2"]
    a = catalog.instantiate("N4_17", field=f2)
    w = iso_search_fp(a, a)
    assert w is not None
    assert verify_isomorphism(a, a, w)


def test_iso_search_same_entry():
    a = catalog.instantiate("N4_17")
    v = iso_search(a, a)
    assert v.kind == "witness"
    assert verify_isomorphism(a, a, v.witness)


def test_iso_search_separates():
    a = catalog.instantiate("N4_17")
    b = catalog.instantiate("N4_18")
    v = iso_search(a, b)
    assert v.kind == "distinct"


def test_iso_search_relation_witness():
    vals = {"alpha": 1, "beta": 2}
    flip = {"alpha": -1, "beta": 2}
    a = catalog.instantiate("N4_29", vals)
    b = catalog.instantiate("N4_29", flip)
    v = iso_search(a, b)
    assert v.kind == "witness"
    assert verify_isomorphism(a, b, v.witness)


def test_census_f2_smallest_base():
    f2 = FIELDS["F2"]
    a = catalog.instantiate("CD3_01", field=f2)
    forms = catalog.named_forms("CD3_01", f2, {})
    flags = [k + 1 in tables.SETUPS["CD3_01"]["cd"] for k in range(7)]
    coh = cohomology(a, forms, flags)
    census = orbit_census_fp(a, coh)
    assert census.h2_dim == 7
    assert census.lines_total == 2 ** 7 - 1
    assert sum(census.class_counts.values()) == census.lines_total
    assert sum(o.size for o in census.orbits) == census.lines_total


def test_orbit_witnesses_reach_members():
    f2 = FIELDS["F2"]
    a = catalog.instantiate("CD3_02", field=f2)
    forms = catalog.named_forms("CD3_02", f2, {})
    flags = [k + 1 in tables.SETUPS["CD3_02"]["cd"] for k in range(7)]
    coh = cohomology(a, forms, flags)
    census = orbit_census_fp(a, coh)
    checked = 0
    for o in census.orbits:
        if o.line_class is not LineClass.U1 or o.size < 2:
            continue
        rep_ext = extension_of_line(a, coh, list(o.rep))
        for member in o.members[:3]:
            phi = o.witnesses[member]
            psi = witness_extension_iso(a, coh, list(o.rep), list(member),
                                        phi)
            mem_ext = extension_of_line(a, coh, list(member))
            assert is_homomorphism(mem_ext, rep_ext, psi)
            assert psi.is_invertible()
            checked += 1
    assert checked >= 3

import random

from nilext import catalog, tables
from nilext.extensions import (BilinearForm, LineClass, b2_space,
                               central_extension, classify_line,
                               coboundary, cohomology, is_split, parse_form,
                               render_form, theta_perp)
from nilext.linalg import Subspace
from nilext.scalars import FIELDS, QQ


def _named(bid, vals=None):
    a = catalog.instantiate(bid, vals)
    forms = catalog.named_forms(bid, QQ, vals or {})
    flags = [k + 1 in tables.SETUPS[bid]["cd"] for k in range(7)]
    return a, forms, flags


def test_coboundary_space_dims():
    dims = {"CD3_01": 2, "CD3_02": 2, "CD3_03": 2}
    for bid, want in sorted(dims.items()):
        a = catalog.instantiate(bid)
        assert b2_space(a).dim == want, bid


def test_coboundary_definition_random():
    rng = random.Random(51)
    a = catalog.instantiate("CD3_03")
    f = a.field
    for _ in range(60):
        fun = [f.random(rng) for _ in range(a.dim)]
        d = coboundary(a, fun)
        x = [f.random(rng) for _ in range(a.dim)]
        y = [f.random(rng) for _ in range(a.dim)]
        want = f.zero
        for k, c in enumerate(a.multiply(x, y)):
            want = want + fun[k] * c
        assert d.evaluate(x, y) == want


def test_cohomology_dimension_seven():
    for bid in ("CD3_01", "CD3_02", "CD3_03"):
        a, forms, flags = _named(bid)
        coh = cohomology(a, forms, flags)
        assert coh.h2_dim == 7
        assert coh.canonical
        assert [bool(x) for x in coh.cd_flags] == flags


def test_cohomology_generic_fallback():
    a = catalog.instantiate("CD3_01")
    coh = cohomology(a)
    assert coh.h2_dim == 7
    assert len(coh.reps) == 7


def test_parse_render_round_trip():
    a, forms, _ = _named("CD3_04", {"lambda": 3})
    env = {"lambda": QQ.from_int(3)}
    for th in forms:
        back = parse_form(render_form(th), a.dim, QQ)
        assert back == th
    combo = parse_form("2*N(1)-N(4)+D(3,3)", a.dim, QQ, named=forms, env=env)
    want = forms[0].scale(QQ.from_int(2)) - forms[3] + \
        BilinearForm.unit(QQ, a.dim, 2, 2)
    assert combo == want


def test_parse_form_with_parameter_coefficient():
    a, forms, _ = _named("CD3_04", {"lambda": 3})
    th = parse_form("(lambda-2)*D(1,3)", a.dim, QQ,
                    env={"lambda": QQ.from_int(3)})
    assert th.gram.rows[0][2] == QQ.one


def test_theta_perp():
    a = catalog.instantiate("CD3_01")
    th = parse_form("D(1,2)", a.dim, QQ)
    perp = theta_perp(a, [th])
    assert perp.dim == 1
    assert perp.contains([QQ.zero, QQ.zero, QQ.one])


def test_classify_line_three_ways():
    a, forms, flags = _named("CD3_01")
    assert classify_line(a, forms[0]) is LineClass.NOT_IN_T1
    mix = parse_form("N(1)+N(3)", a.dim, QQ, named=forms)
    assert classify_line(a, mix) is LineClass.U1
    b, bforms, _ = _named("CD3_03")
    assert classify_line(b, bforms[2]) is LineClass.R1


def test_classify_line_rejects_coboundaries():
    a = catalog.instantiate("CD3_01")
    th = parse_form("D(1,1)", a.dim, QQ)
    try:
        classify_line(a, th)
        assert False, "expected a rejection"
    except ValueError:
        pass


def test_central_extension_table():
    a, forms, _ = _named("CD3_01")
    th = parse_form("D(1,3)", a.dim, QQ)
    ext = central_extension(a, [th])
    assert ext.dim == 4
    want = catalog.instantiate("N4_17")
    assert ext.table == want.table


def test_split_detection():
    a, forms, _ = _named("CD3_03")
    th = forms[2]
    assert theta_perp(a, [th]).intersect(a.annihilator()).dim == 0
    assert not is_split(a, [th])
    shifted = th + coboundary(a, [QQ.one, QQ.from_int(2), QQ.zero])
    assert not is_split(a, [shifted])


def test_extension_annihilator_formula():
    rng = random.Random(52)
    a = catalog.instantiate("CD3_02")
    f = a.field
    n = a.dim
    for _ in range(40):
        coords = [f.random(rng) for _ in range(n * n)]
        th = BilinearForm.from_flat(f, n, coords)
        if th.is_zero():
            continue
        ext = central_extension(a, [th])
        inner = theta_perp(a, [th]).intersect(a.annihilator())
        lifted = [list(v) + [f.zero] for v in inner.basis]
        lifted.append([f.zero] * n + [f.one])
        want = Subspace(f, n + 1, lifted)
        assert ext.annihilator() == want

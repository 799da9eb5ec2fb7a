import random
from fractions import Fraction

from nilext.exprs import eval_str, poly_str, variables, parse
from nilext.linalg import Matrix
from nilext.poly import POLY_RING, MultiPoly
from nilext.scalars import QQ, QZ12


def test_poly_arithmetic():
    x = MultiPoly.var("x")
    y = MultiPoly.var("y")
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert (x + 1) ** 3 == x ** 3 + 3 * x ** 2 + 3 * x + 1
    assert not (p - p)
    assert p


def test_poly_constant_division():
    x = MultiPoly.var("x")
    assert (x * 6) / 3 == x * 2
    half = MultiPoly.const(Fraction(1, 2))
    assert (x / 2) == half * x


def test_poly_evaluate_matches_expr_eval():
    rng = random.Random(5)
    srcs = [
        "alpha*(lambda-2)+1",
        "x^2*(x*a1+y*a6)",
        "-(2*lambda-1)",
        "(x^3/3)*(3*x*a1-y*(2*a5+a6)-3*z*a7)",
    ]
    for src in srcs:
        p = poly_str(src)
        for _ in range(25):
            env = {v: QQ.random(rng) for v in variables(parse(src))}
            assert p.evaluate(QQ, env) == eval_str(src, QQ, env)


def test_eval_only_coefficient_with_variable_denominator():
    src = "(lambda+1)*((lambda^2-1)*alpha+lambda+2)/(1-lambda)"
    env = {"lambda": Fraction(2), "alpha": Fraction(3)}
    assert eval_str(src, QQ, env) == Fraction(3) * (Fraction(9) + Fraction(4)) / Fraction(-1)


def test_greek_names_fold():
    assert eval_str("λ+1", QQ, {"lambda": Fraction(2)}) == Fraction(3)
    assert eval_str("α*β", QQ, {"alpha": Fraction(2),
                                "beta": Fraction(5)}) == Fraction(10)


def test_eval_over_cyclotomic():
    w = QZ12.omega
    assert eval_str("omega^3", QZ12, {"omega": w}) == QZ12.one
    env = {"alpha": QZ12.from_int(2), "omega": w}
    assert eval_str("omega*alpha", QZ12, env) == w + w


def test_power_and_precedence():
    assert eval_str("2*3^2", QQ, {}) == Fraction(18)
    assert eval_str("-2^2", QQ, {}) == Fraction(-4)
    assert eval_str("(1-2)^3", QQ, {}) == Fraction(-1)
    assert eval_str("4/2/2", QQ, {}) == Fraction(1)


def test_matrix_over_polynomials():
    x = MultiPoly.var("x")
    y = MultiPoly.var("y")
    m = Matrix(POLY_RING, [[x, MultiPoly.const(0)], [MultiPoly.const(1), y]])
    sq = m * m
    assert sq.rows[0][0] == x * x
    assert sq.rows[1][0] == x + y
    assert sq.rows[1][1] == y * y


def test_variables():
    assert variables(parse("alpha*(lambda-2)+1")) == {"alpha", "lambda"}
    assert variables(parse("3/4")) == set()

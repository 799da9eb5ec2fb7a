"""A small arithmetic expression language.

Catalog coefficient strings like "(alpha*(lambda-2)+1)" and transformation
formulas are parsed here, then either evaluated over a field or converted
to a MultiPoly. Operators: + - * / ^ and parentheses; names are unicode
identifiers (common greek letters are folded to their spelled-out form).
"""

from __future__ import annotations

from fractions import Fraction

from .poly import MultiPoly

GREEK = {
    "λ": "lambda", "α": "alpha", "β": "beta", "γ": "gamma",
    "δ": "delta", "ε": "epsilon", "ω": "omega", "ξ": "xi",
}


def _tokens(s: str):
    out = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*/^()":
            out.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            out.append(int(s[i:j]))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(s) and (s[j].isalnum() or s[j] == "_"):
                j += 1
            name = s[i:j]
            out.append(GREEK.get(name, name))
            i = j
        else:
            raise ValueError("bad character %r in %r" % (ch, s))
    return out


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            node = (("add" if op == "+" else "sub"), node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            node = (("mul" if op == "*" else "div"), node, self.factor())
        return node

    def factor(self):
        if self.peek() == "-":
            self.take()
            return ("neg", self.factor())
        if self.peek() == "+":
            self.take()
            return self.factor()
        node = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                raise ValueError("negative exponents are not supported")
            e = self.take()
            if not isinstance(e, int):
                raise ValueError("exponent must be an integer literal")
            node = ("pow", node, sign * e)
        return node

    def atom(self):
        t = self.take()
        if t == "(":
            node = self.expr()
            if self.take() != ")":
                raise ValueError("unbalanced parentheses")
            return node
        if isinstance(t, int):
            return ("num", Fraction(t))
        if isinstance(t, str) and t not in "+-*/^()":
            return ("var", t)
        raise ValueError("unexpected token %r" % (t,))


def parse(s: str):
    p = _Parser(_tokens(s))
    node = p.expr()
    if p.peek() is not None:
        raise ValueError("trailing input in %r" % s)
    return node


def variables(ast) -> set:
    kind = ast[0]
    if kind == "num":
        return set()
    if kind == "var":
        return {ast[1]}
    if kind in ("neg",):
        return variables(ast[1])
    if kind == "pow":
        return variables(ast[1])
    return variables(ast[1]) | variables(ast[2])


def eval_field(ast, field, env):
    """Evaluate over a field; env maps variable names to field elements."""
    kind = ast[0]
    if kind == "num":
        return field.from_fraction(ast[1])
    if kind == "var":
        if ast[1] not in env:
            raise KeyError("unbound variable %r" % ast[1])
        return env[ast[1]]
    if kind == "neg":
        return -eval_field(ast[1], field, env)
    if kind == "pow":
        return eval_field(ast[1], field, env) ** ast[2]
    a = eval_field(ast[1], field, env)
    b = eval_field(ast[2], field, env)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    assert kind == "div"
    if not b:
        raise ZeroDivisionError("division by zero while evaluating expression")
    return a / b


def to_poly(ast) -> MultiPoly:
    """Convert to a MultiPoly; division is allowed by constants only."""
    kind = ast[0]
    if kind == "num":
        return MultiPoly.const(ast[1])
    if kind == "var":
        return MultiPoly.var(ast[1])
    if kind == "neg":
        return -to_poly(ast[1])
    if kind == "pow":
        return to_poly(ast[1]) ** ast[2]
    a = to_poly(ast[1])
    b = to_poly(ast[2])
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    assert kind == "div"
    return a / b


def eval_str(s: str, field, env):
    return eval_field(parse(s), field, env)


def poly_str(s: str) -> MultiPoly:
    return to_poly(parse(s))

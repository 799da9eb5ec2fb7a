"""Multilinear polynomial identities and their evaluation on algebras.

A word is either a variable index or a pair of words (a product). An
identity is a signed combination of words in which every word contains
each variable exactly once, so checking it on all basis tuples is a
complete test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .linalg import Matrix, Subspace, kernel_basis, is_zero_vec


def _word_vars(word, acc):
    if isinstance(word, int):
        acc.append(word)
    else:
        _word_vars(word[0], acc)
        _word_vars(word[1], acc)
    return acc


def render_word(word) -> str:
    if isinstance(word, int):
        return "x%d" % (word + 1)
    return "(%s*%s)" % (render_word(word[0]), render_word(word[1]))


@dataclass(frozen=True)
class Identity:
    name: str
    arity: int
    terms: tuple  # of (Fraction coefficient, word)

    def __post_init__(self):
        for _, w in self.terms:
            vs = sorted(_word_vars(w, []))
            assert vs == list(range(self.arity)), \
                "identity %s is not multilinear" % self.name

    def render(self) -> str:
        bits = []
        for c, w in self.terms:
            if c == 1:
                bits.append("+%s" % render_word(w))
            elif c == -1:
                bits.append("-%s" % render_word(w))
            else:
                bits.append("%+s*%s" % (c, render_word(w)))
        return " ".join(bits)


def evaluate_word(algebra, word, args):
    """Evaluate a word at vectors of the algebra."""
    if isinstance(word, int):
        return args[word]
    return algebra.multiply(evaluate_word(algebra, word[0], args),
                            evaluate_word(algebra, word[1], args))


def holds(algebra, ident: Identity) -> bool:
    """Whether the identity vanishes on all basis tuples."""
    f = algebra.field
    n = algebra.dim
    basis = [algebra.basis_vector(i) for i in range(n)]
    for tup in product(range(n), repeat=ident.arity):
        args = [basis[i] for i in tup]
        acc = [f.zero] * n
        for c, w in ident.terms:
            v = evaluate_word(algebra, w, args)
            cf = f.from_fraction(c)
            acc = [a + cf * x for a, x in zip(acc, v)]
        if not is_zero_vec(f, acc):
            return False
    return True


def first_failure(algebra, ident: Identity):
    """First basis tuple where the identity fails, with the value, or None."""
    f = algebra.field
    n = algebra.dim
    basis = [algebra.basis_vector(i) for i in range(n)]
    for tup in product(range(n), repeat=ident.arity):
        args = [basis[i] for i in tup]
        acc = [f.zero] * n
        for c, w in ident.terms:
            v = evaluate_word(algebra, w, args)
            cf = f.from_fraction(c)
            acc = [a + cf * x for a, x in zip(acc, v)]
        if not is_zero_vec(f, acc):
            return tup, acc
    return None


def induced_cocycle_constraints(algebra, ident: Identity) -> Subspace:
    """Bilinear forms theta for which the one-dimensional extension by theta
    still satisfies the identity.

    The extension's product discards the added coordinate, so inner products
    evaluate in the base algebra and only the outermost product of each word
    contributes a theta term.
    """
    assert holds(algebra, ident), "base algebra fails %s" % ident.name
    f = algebra.field
    n = algebra.dim
    basis = [algebra.basis_vector(i) for i in range(n)]
    rows = []
    for tup in product(range(n), repeat=ident.arity):
        args = [basis[i] for i in tup]
        row = [f.zero] * (n * n)
        for c, w in ident.terms:
            u = evaluate_word(algebra, w[0], args)
            v = evaluate_word(algebra, w[1], args)
            cf = f.from_fraction(c)
            for i in range(n):
                if u[i] == f.zero:
                    continue
                cu = cf * u[i]
                for j in range(n):
                    if v[j] != f.zero:
                        row[i * n + j] = row[i * n + j] + cu * v[j]
        if not is_zero_vec(f, row):
            rows.append(row)
    if not rows:
        return Subspace(f, n * n, Matrix.identity(f, n * n).rows)
    return Subspace(f, n * n, kernel_basis(Matrix(f, rows)))


def _signed(sign, word):
    return (Fraction(sign), word)


# Variable layout for the arity-4 families: x=0, y=1, a=2, b=3.
_BUILTINS = {}


def _register(name, arity, terms):
    _BUILTINS[name] = Identity(name, arity, tuple(_signed(s, w) for s, w in terms))


# commutator of two right multiplications is a derivation
_register("cd1", 4, [
    (1, (((0, 1), 2), 3)), (-1, (((0, 1), 3), 2)),
    (-1, (((0, 2), 3), 1)), (1, (((0, 3), 2), 1)),
    (-1, (0, ((1, 2), 3))), (1, (0, ((1, 3), 2))),
])

# mixed left/right commutator is a derivation
_register("cd2", 4, [
    (1, ((2, (0, 1)), 3)), (-1, (2, ((0, 1), 3))),
    (-1, (((2, 0), 3), 1)), (1, ((2, (0, 3)), 1)),
    (-1, (0, ((2, 1), 3))), (1, (0, (2, (1, 3)))),
])

# commutator of two left multiplications is a derivation
_register("cd3", 4, [
    (1, (2, (3, (0, 1)))), (-1, (3, (2, (0, 1)))),
    (-1, ((2, (3, 0)), 1)), (1, ((3, (2, 0)), 1)),
    (-1, (0, (2, (3, 1)))), (1, (0, (3, (2, 1)))),
])

# [[x,y],z] + [[y,z],x] + [[z,x],y] with [a,b] = ab - ba
_register("jacobi_commutator", 3, [
    (1, ((0, 1), 2)), (-1, ((1, 0), 2)), (-1, (2, (0, 1))), (1, (2, (1, 0))),
    (1, ((1, 2), 0)), (-1, ((2, 1), 0)), (-1, (0, (1, 2))), (1, (0, (2, 1))),
    (1, ((2, 0), 1)), (-1, ((0, 2), 1)), (-1, (1, (2, 0))), (1, (1, (0, 2))),
])

# P([x,y],z) + P([y,z],x) + P([z,x],y) with P the product itself
_register("alia0", 3, [
    (1, ((0, 1), 2)), (-1, ((1, 0), 2)),
    (1, ((1, 2), 0)), (-1, ((2, 1), 0)),
    (1, ((2, 0), 1)), (-1, ((0, 2), 1)),
])

# same with P(a,b) = ab + ba
_register("alia1", 3, [
    (1, ((0, 1), 2)), (-1, ((1, 0), 2)), (1, (2, (0, 1))), (-1, (2, (1, 0))),
    (1, ((1, 2), 0)), (-1, ((2, 1), 0)), (1, (0, (1, 2))), (-1, (0, (2, 1))),
    (1, ((2, 0), 1)), (-1, ((0, 2), 1)), (1, (1, (2, 0))), (-1, (1, (0, 2))),
])

# same with P(a,b) = ba (the opposite product)
_register("alia_opposite", 3, [
    (1, (2, (0, 1))), (-1, (2, (1, 0))),
    (1, (0, (1, 2))), (-1, (0, (2, 1))),
    (1, (1, (2, 0))), (-1, (1, (0, 2))),
])

_register("left3zero", 3, [(1, ((0, 1), 2))])
_register("right3zero", 3, [(1, (0, (1, 2)))])
_register("commutative", 2, [(1, (0, 1)), (-1, (1, 0))])
_register("anticommutative", 2, [(1, (0, 1)), (1, (1, 0))])


def builtin(name: str) -> Identity:
    if name not in _BUILTINS:
        raise KeyError("unknown identity %r" % name)
    return _BUILTINS[name]


def builtin_names():
    return sorted(_BUILTINS)


CD_NAMES = ("cd1", "cd2", "cd3")
ALIA_NAMES = ("alia0", "alia1", "alia_opposite")

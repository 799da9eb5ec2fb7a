"""Exact scalar arithmetic.

Three coefficient domains: the rationals (stdlib Fraction), the degree-4
cyclotomic field Q(z) where z is a primitive 12th root of unity (so the
field contains i = z^3 and the primitive cube root omega = z^4), and the
prime fields F_p for p in {2, 3, 5, 7}.
"""

from __future__ import annotations

from fractions import Fraction

# z^4 = z^2 - 1, hence the reduced coordinates of z^k for k = 0..11 on the
# basis (1, z, z^2, z^3).
_ZPOW = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
    (-1, 0, 1, 0),
    (0, -1, 0, 1),
    (-1, 0, 0, 0),
    (0, -1, 0, 0),
    (0, 0, -1, 0),
    (0, 0, 0, -1),
    (1, 0, -1, 0),
    (0, 1, 0, -1),
)


class Cyc12:
    """Element of Q(z), stored as coordinates on (1, z, z^2, z^3)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(Fraction(c) for c in coeffs)
        assert len(cs) == 4
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("Cyc12 is immutable")

    @classmethod
    def from_rational(cls, q) -> "Cyc12":
        return cls((Fraction(q), 0, 0, 0))

    @classmethod
    def zpower(cls, k: int) -> "Cyc12":
        return cls(_ZPOW[k % 12])

    def __add__(self, other):
        other = _as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyc12(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyc12(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = _as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        acc = [Fraction(0)] * 7
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    acc[i + j] += a * b
        out = list(acc[:4])
        for k in range(4, 7):
            if acc[k]:
                red = _ZPOW[k]
                for t in range(4):
                    out[t] += acc[k] * red[t]
        return Cyc12(out)

    __rmul__ = __mul__

    def galois(self, k: int) -> "Cyc12":
        """Apply the automorphism z -> z^k (k coprime to 12)."""
        assert k % 12 in (1, 5, 7, 11)
        acc = [Fraction(0)] * 4
        for j, a in enumerate(self.coeffs):
            if a:
                red = _ZPOW[(j * k) % 12]
                for t in range(4):
                    acc[t] += a * red[t]
        return Cyc12(acc)

    def inverse(self) -> "Cyc12":
        assert any(self.coeffs), "division by zero"
        conj = self.galois(5) * self.galois(7) * self.galois(11)
        norm = self * conj
        assert norm.coeffs[1] == 0 and norm.coeffs[2] == 0 and norm.coeffs[3] == 0
        n = norm.coeffs[0]
        return Cyc12(tuple(c / n for c in conj.coeffs))

    def __truediv__(self, other):
        other = _as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        assert isinstance(n, int) and n >= 0
        out = Cyc12.from_rational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = _as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Cyc12", self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        assert self.is_rational(), "element has nonrational part"
        return self.coeffs[0]

    def __repr__(self):
        return "Cyc12(%s)" % render_cyc(self)


def _as_cyc(x):
    if isinstance(x, Cyc12):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyc12.from_rational(x)
    return NotImplemented


def render_cyc(x: Cyc12) -> str:
    parts = []
    names = ("", "z", "z^2", "z^3")
    for c, n in zip(x.coeffs, names):
        if not c:
            continue
        if n == "":
            parts.append(str(c))
        elif c == 1:
            parts.append(n)
        elif c == -1:
            parts.append("-" + n)
        else:
            parts.append("%s*%s" % (c, n))
    if not parts:
        return "0"
    s = parts[0]
    for p in parts[1:]:
        s += p if p.startswith("-") else "+" + p
    return s


def parse_cyc(s: str) -> Cyc12:
    s = s.replace(" ", "")
    assert s, "empty cyclotomic literal"
    # split into signed terms at top level (the format has no parentheses)
    terms = []
    cur = ""
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] not in "+-*/^":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    acc = Cyc12.from_rational(0)
    for t in terms:
        sign = 1
        while t and t[0] in "+-":
            if t[0] == "-":
                sign = -sign
            t = t[1:]
        if "z" in t:
            coef, _, tail = t.partition("z")
            coef = coef.rstrip("*")
            c = Fraction(coef) if coef else Fraction(1)
            k = int(tail[1:]) if tail.startswith("^") else (1 if tail == "" else None)
            assert k is not None, "bad power in %r" % s
            acc = acc + Cyc12.zpower(k) * (sign * c)
        else:
            acc = acc + Fraction(t) * sign
    return acc


class FpElt:
    """Element of F_p."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        object.__setattr__(self, "v", v % p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("FpElt is immutable")

    def _coerce(self, other):
        if isinstance(other, FpElt):
            assert other.p == self.p
            return other
        if isinstance(other, int):
            return FpElt(other, self.p)
        if isinstance(other, Fraction):
            return FpElt(other.numerator, self.p) / FpElt(other.denominator, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else FpElt(self.v + o.v, self.p)

    __radd__ = __add__

    def __neg__(self):
        return FpElt(-self.v, self.p)

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else FpElt(self.v - o.v, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else FpElt(o.v - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else FpElt(self.v * o.v, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "FpElt":
        assert self.v, "division by zero"
        return FpElt(pow(self.v, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o * self.inverse()

    def __pow__(self, n: int):
        assert isinstance(n, int) and n >= 0
        return FpElt(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else (self.v == o.v)

    def __hash__(self):
        return hash(("Fp", self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "%d mod %d" % (self.v, self.p)


class RationalField:
    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def from_fraction(self, q) -> Fraction:
        return Fraction(q)

    def parse(self, s: str):
        return Fraction(s.strip())

    def render(self, x) -> str:
        return str(x)

    def random(self, rng):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    def elements(self):
        raise ValueError("Q is infinite")

    def __repr__(self):
        return "RationalField()"


class CyclotomicField12:
    name = "QZ12"
    zero = Cyc12.from_rational(0)
    one = Cyc12.from_rational(1)
    zeta = Cyc12.zpower(1)
    i = Cyc12.zpower(3)
    omega = Cyc12.zpower(4)

    def from_int(self, n: int) -> Cyc12:
        return Cyc12.from_rational(n)

    def from_fraction(self, q) -> Cyc12:
        return Cyc12.from_rational(q)

    def parse(self, s: str) -> Cyc12:
        return parse_cyc(s)

    def render(self, x: Cyc12) -> str:
        return render_cyc(x)

    def random(self, rng):
        return Cyc12([Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)])

    def elements(self):
        raise ValueError("QZ12 is infinite")

    def __repr__(self):
        return "CyclotomicField12()"


class PrimeField:
    def __init__(self, p: int):
        assert p in (2, 3, 5, 7)
        self.p = p
        self.name = "F%d" % p
        self.zero = FpElt(0, p)
        self.one = FpElt(1, p)

    def from_int(self, n: int) -> FpElt:
        return FpElt(n, self.p)

    def from_fraction(self, q) -> FpElt:
        q = Fraction(q)
        assert q.denominator % self.p != 0, "denominator not invertible mod %d" % self.p
        return FpElt(q.numerator, self.p) / FpElt(q.denominator, self.p)

    def parse(self, s: str) -> FpElt:
        s = s.strip()
        if "mod" in s:
            v, _, p = s.partition("mod")
            assert int(p) == self.p
            return FpElt(int(v), self.p)
        return self.from_fraction(Fraction(s))

    def render(self, x: FpElt) -> str:
        return "%d mod %d" % (x.v, x.p)

    def random(self, rng):
        return FpElt(rng.randrange(self.p), self.p)

    def elements(self):
        return [FpElt(v, self.p) for v in range(self.p)]

    def __repr__(self):
        return "PrimeField(%d)" % self.p


FIELDS = {
    "Q": RationalField(),
    "QZ12": CyclotomicField12(),
    "F2": PrimeField(2),
    "F3": PrimeField(3),
    "F5": PrimeField(5),
    "F7": PrimeField(7),
}

QQ = FIELDS["Q"]
QZ12 = FIELDS["QZ12"]


def roots_of_unity(field, n: int):
    """All solutions of x^n = 1 in the field, for n dividing 12."""
    assert n in (1, 2, 3, 4, 6, 12)
    if isinstance(field, RationalField):
        return [Fraction(1)] if n % 2 else [Fraction(1), Fraction(-1)]
    if isinstance(field, CyclotomicField12):
        return [Cyc12.zpower(12 // n * k) for k in range(n)]
    return [x for x in field.elements() if x and x ** n == field.one]

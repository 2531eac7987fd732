"""Exact arithmetic in Q(q).

``LaurentPoly`` holds a Laurent polynomial in q with rational coefficients,
``Scalar`` an element of the fraction field in canonical form. Both are
immutable; arithmetic returns new objects.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

__all__ = [
    "LaurentPoly",
    "Scalar",
    "ScalarDivisionError",
    "as_scalar",
    "invert_q",
    "normalize",
    "scalar_arith",
    "Q",
    "ONE",
    "ZERO",
]


class ScalarDivisionError(ZeroDivisionError):
    """Division by the zero element of Q(q)."""


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """Sparse Laurent polynomial ``{exponent: coefficient}``; zeros are never stored."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if not isinstance(c, (int, Fraction)):
                        c = Fraction(c)
                    clean[int(e)] = _norm_coeff(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms):
        # trusted constructor: caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp=1, coeff=1):
        return cls._wrap({exp: coeff}) if coeff else cls._wrap({})

    @classmethod
    def constant(cls, c):
        return cls.monomial(0, c)

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return len(self.terms) == 1 and self.terms.get(0) == 1

    def is_monomial(self):
        return len(self.terms) == 1

    @property
    def low(self):
        return min(self.terms)

    @property
    def high(self):
        return max(self.terms)

    def leading_coeff(self):
        return self.terms[self.high]

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __neg__(self):
        return LaurentPoly._wrap({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            if not other:
                return LaurentPoly._wrap({})
            return LaurentPoly._wrap({e: _norm_coeff(c * other) for e, c in self.terms.items()})
        return LaurentPoly._wrap(lmul(self.terms, other.terms))

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by q**k."""
        if not k:
            return self
        return LaurentPoly._wrap({e + k: c for e, c in self.terms.items()})

    def invert_q(self):
        return LaurentPoly._wrap({-e: c for e, c in self.terms.items()})

    def evaluate(self, x):
        x = Fraction(x)
        return sum((c * x**e for e, c in self.terms.items()), Fraction(0))

    def eval_mod(self, x, p):
        total = 0
        for e, c in self.terms.items():
            v = pow(x, e, p) if e >= 0 else pow(pow(x, -1, p), -e, p)
            if isinstance(c, Fraction):
                v = v * (c.numerator % p) * pow(c.denominator, -1, p)
            else:
                v = v * c
            total += v
        return total % p

    def to_json(self):
        return [[e, _frac_str(c)] for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data):
        return cls({int(e): Fraction(c) for e, c in data})

    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"LaurentPoly({self.terms!r})"


def _frac_str(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def lmul(a, b):
    """Product of two raw Laurent dicts."""
    if len(a) == 1 and len(b) == 1:
        (ea, ca), = a.items()
        (eb, cb), = b.items()
        return {ea + eb: ca * cb}
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def format_laurent(p):
    """Descending powers of q, e.g. ``q - q^-1`` or ``-2*q^3 + 1``."""
    if not p.terms:
        return "0"
    parts = []
    for e in sorted(p.terms, reverse=True):
        c = p.terms[e]
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            body = _frac_str(a)
        else:
            qp = "q" if e == 1 else f"q^{e}"
            body = qp if a == 1 else f"{_frac_str(a)}*{qp}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# dense polynomial helpers (ascending coefficient lists over Q)


def _to_dense(p):
    lo = p.low
    out = [Fraction(0)] * (p.high - lo + 1)
    for e, c in p.terms.items():
        out[e - lo] = Fraction(c)
    return out, lo


def _from_dense(coeffs, shift=0):
    return LaurentPoly._wrap({i + shift: _norm_coeff(c) for i, c in enumerate(coeffs) if c})


def _trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _divmod_dense(a, b):
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(a) - 1 < db:
        return [], _trim(a)
    quot = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        c = a[i + db] / lb
        quot[i] = c
        if c:
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    return quot, _trim(a[:db])


def _gcd_dense(a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _divmod_dense(a, b)
        a, b = b, r
    if not a:
        return [Fraction(1)]
    lc = a[-1]
    return [c / lc for c in a]


def _poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd of the polynomial parts (q-power factors ignored)."""
    da, _ = _to_dense(a)
    db, _ = _to_dense(b)
    return _from_dense(_gcd_dense(da, db))


def _exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    da, la = _to_dense(a)
    db, lb = _to_dense(b)
    quot, rem = _divmod_dense(da, db)
    if rem:
        raise ArithmeticError("inexact polynomial division")
    return _from_dense(quot, la - lb)


def _lcm_int(a, b):
    return a * b // gcd(a, b)


# ---------------------------------------------------------------------------


_POLY_ONE = LaurentPoly._wrap({0: 1})
_POLY_ZERO = LaurentPoly._wrap({})


class Scalar:
    """Element of Q(q) stored as ``num/den`` in canonical form.

    The denominator is a primitive integer polynomial with nonzero constant
    term and positive leading coefficient, coprime to the numerator. With
    that, equality is structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if isinstance(num, Scalar) or isinstance(den, Scalar):
            a, b = as_scalar(num), as_scalar(den)
            num, den = a.num * b.den, a.den * b.num
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.constant(num)
        if not isinstance(den, LaurentPoly):
            den = LaurentPoly.constant(den)
        n, d = _canonical(num, den)
        self.num = n
        self.den = d
        self._hash = None

    @classmethod
    def _wrap(cls, num, den=_POLY_ONE):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def laurent(cls, terms):
        """Scalar from a raw ``{exp: coeff}`` dict (no zeros)."""
        return cls._wrap(LaurentPoly._wrap(terms))

    @classmethod
    def q_power(cls, k, coeff=1):
        return cls._wrap(LaurentPoly.monomial(k, coeff))

    @classmethod
    def neg_q_power(cls, k):
        """(-q)**k"""
        return cls.q_power(k, -1 if k % 2 else 1)

    def is_zero(self):
        return not self.num.terms

    def is_laurent(self):
        return self.den is _POLY_ONE or self.den.is_one()

    def is_one(self):
        return self.is_laurent() and self.num.is_one()

    def __bool__(self):
        return bool(self.num.terms)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self == as_scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self):
        return Scalar._wrap(-self.num, self.den)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            if self.is_laurent():
                return Scalar._wrap(self.num + other.num)
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.is_laurent() and other.is_laurent():
            return Scalar._wrap(self.num * other.num)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ScalarDivisionError("division by zero in Q(q)")
        if other.is_laurent() and other.num.is_monomial() and self.is_laurent():
            (e, c), = other.num.terms.items()
            out = self.num.shift(-e)
            return Scalar._wrap(out if c == 1 else out * _inv(c))
        return Scalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k):
        if k < 0:
            return (ONE / self) ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def invert_q(self):
        return Scalar(self.num.invert_q(), self.den.invert_q())

    def evaluate(self, x):
        d = self.den.evaluate(x)
        if not d:
            raise ScalarDivisionError(f"denominator vanishes at q = {x}")
        return self.num.evaluate(x) / d

    def eval_mod(self, x, p):
        d = self.den.eval_mod(x, p)
        if not d:
            raise ScalarDivisionError("denominator vanishes modulo p")
        return self.num.eval_mod(x, p) * pow(d, -1, p) % p

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(LaurentPoly.from_json(data["num"]), LaurentPoly.from_json(data["den"]))

    def __str__(self):
        if self.is_laurent():
            return format_laurent(self.num)
        return f"({format_laurent(self.num)})/({format_laurent(self.den)})"

    def __repr__(self):
        return f"Scalar({self})"


def _inv(c):
    return Fraction(1, c) if isinstance(c, int) else 1 / c


def _canonical(num: LaurentPoly, den: LaurentPoly):
    if not den.terms:
        raise ScalarDivisionError("zero denominator")
    if not num.terms:
        return _POLY_ZERO, _POLY_ONE
    lo = den.low
    if lo:
        den = den.shift(-lo)
        num = num.shift(-lo)
    if len(den.terms) == 1:
        c = den.terms[0]
        return (num * _inv(c) if c != 1 else num), _POLY_ONE
    g = _poly_gcd(num, den)
    if len(g.terms) > 1:
        num = _exact_div(num, g)
        den = _exact_div(den, g)
    # primitive integer denominator with positive leading coefficient
    coeffs = [Fraction(c) for c in den.terms.values()]
    dl = 1
    for c in coeffs:
        dl = _lcm_int(dl, c.denominator)
    ints = [int(c * dl) for c in coeffs]
    ng = 0
    for v in ints:
        ng = gcd(ng, v)
    scale = Fraction(dl, ng)
    if den.leading_coeff() < 0:
        scale = -scale
    if scale != 1:
        den = den * scale
        num = num * scale
    return num, den


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar._wrap(LaurentPoly.constant(x))
    if isinstance(x, LaurentPoly):
        return Scalar._wrap(x)
    return None


def as_scalar(x) -> Scalar:
    s = _coerce(x)
    if s is None:
        raise TypeError(f"cannot interpret {x!r} as an element of Q(q)")
    return s


Q = Scalar._wrap(LaurentPoly._wrap({1: 1}))
ONE = Scalar._wrap(_POLY_ONE)
ZERO = Scalar._wrap(_POLY_ZERO)


def scalar_arith(a, b, op):
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def invert_q(a) -> Scalar:
    return as_scalar(a).invert_q()


def normalize(num, den=1) -> Scalar:
    """Canonical Scalar for ``num/den``; raises ScalarDivisionError when ``den == 0``."""
    if isinstance(num, Scalar):
        num, d0 = num.num, num.den
        den = as_scalar(den)
        return Scalar(num * den.den, d0 * den.num)
    if not isinstance(num, LaurentPoly):
        num = LaurentPoly.constant(num)
    if not isinstance(den, LaurentPoly):
        den = LaurentPoly.constant(den)
    return Scalar(num, den)

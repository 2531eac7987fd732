"""The quantum matrix algebra O_q(M_mn) in PBW normal form.

Elements are sparse maps from PBW monomials to ``Scalar`` coefficients.
Products go through the rewriting kernel (``qgr.kernel``); everything else
(minors, the transpose, the anti-endomorphism Gamma, the coaction lambda)
is built on top of that product.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from fractions import Fraction

from .coeff import ONE, LaurentPoly, Scalar, _exact_div, _poly_gcd, as_scalar
from .kernel import get_kernel

__all__ = [
    "Ambient",
    "AmbientError",
    "IndexRangeError",
    "MatAlgElem",
    "TensorElem",
    "PbwMonomial",
    "gamma",
    "gamma_tau",
    "generator",
    "inversions",
    "lambda_coaction",
    "mul",
    "normal_form",
    "quantum_determinant",
    "quantum_minor",
    "reduce_word",
    "relation_defects",
    "tau",
    "tensor_mul",
]


class AmbientError(ValueError):
    """Operands live in different algebras, or the algebra has the wrong shape."""


class IndexRangeError(ValueError):
    """A generator or index set is out of range for its ambient."""


@dataclass(frozen=True, order=True)
class Ambient:
    """Shape of O_q(M_mn); ``qinv`` selects the algebra at q^-1."""

    m: int
    n: int
    qinv: bool = False

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise IndexRangeError(f"bad ambient {self.m}x{self.n}")

    @property
    def square(self):
        return self.m == self.n

    def inverted(self):
        return Ambient(self.m, self.n, not self.qinv)

    def kernel(self):
        return get_kernel(self.m, self.n, self.qinv)

    def code(self, i, j):
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise IndexRangeError(f"generator X[{i},{j}] outside {self.m}x{self.n}")
        return (i - 1) * self.n + (j - 1)

    def index(self, g):
        return g // self.n + 1, g % self.n + 1

    def q(self):
        """The deformation parameter of this algebra as a Scalar."""
        return Scalar.q_power(-1 if self.qinv else 1)


def _as_ambient(a):
    if isinstance(a, Ambient):
        return a
    return Ambient(*a)


def inversions(seq):
    return sum(1 for x in range(len(seq)) for y in range(x + 1, len(seq)) if seq[x] > seq[y])


@dataclass(frozen=True)
class PbwMonomial:
    """``X_{i1 j1}^{e1} X_{i2 j2}^{e2} ...`` with factors in (row, col) order."""

    exponents: tuple  # ((i, j, e), ...)

    @classmethod
    def from_codes(cls, codes, ambient):
        out = []
        for g in codes:
            i, j = ambient.index(g)
            if out and out[-1][:2] == (i, j):
                out[-1] = (i, j, out[-1][2] + 1)
            else:
                out.append((i, j, 1))
        return cls(tuple(out))

    def codes(self, ambient):
        return tuple(ambient.code(i, j) for i, j, e in self.exponents for _ in range(e))

    def degree(self):
        return sum(e for _, _, e in self.exponents)

    def __str__(self):
        if not self.exponents:
            return "1"
        return "*".join(f"X[{i},{j}]" + (f"^{e}" if e > 1 else "") for i, j, e in self.exponents)


def _split_denominators(terms):
    """Raw Laurent numerators over a common denominator."""
    dens = {c.den for c in terms.values()}
    if all(d.is_one() for d in dens):
        return {mono: c.num.terms for mono, c in terms.items()}, None
    common = LaurentPoly.constant(1)
    for d in dens:
        g = _poly_gcd(common, d)
        common = _exact_div(common * d, g)
    raw = {}
    for mono, c in terms.items():
        raw[mono] = (c * Scalar._wrap(common)).num.terms
    return raw, common


class MatAlgElem:
    """Element of O_q(M_mn): ``terms`` maps code tuples (PBW monomials) to Scalars."""

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient, terms=None):
        self.ambient = _as_ambient(ambient)
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                c = as_scalar(c)
                if c:
                    self.terms[tuple(mono)] = c

    @classmethod
    def _wrap(cls, ambient, terms):
        obj = cls.__new__(cls)
        obj.ambient = ambient
        obj.terms = terms
        return obj

    @classmethod
    def from_raw(cls, ambient, raw, den=None):
        if den is None:
            return cls._wrap(ambient, {mono: Scalar.laurent(c) for mono, c in raw.items() if c})
        d = Scalar._wrap(den)
        out = {}
        for mono, c in raw.items():
            if c:
                out[mono] = Scalar(LaurentPoly._wrap(c), den) if not d.is_one() else Scalar.laurent(c)
        return cls._wrap(ambient, out)

    @classmethod
    def one(cls, ambient):
        return cls._wrap(_as_ambient(ambient), {(): ONE})

    @classmethod
    def zero(cls, ambient):
        return cls._wrap(_as_ambient(ambient), {})

    @classmethod
    def scalar(cls, ambient, c):
        c = as_scalar(c)
        return cls._wrap(_as_ambient(ambient), {(): c} if c else {})

    def raw(self):
        """(numerators, common denominator or None)."""
        return _split_denominators(self.terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if self.ambient != other.ambient:
            raise AmbientError(f"ambient mismatch: {self.ambient} vs {other.ambient}")

    def _lift(self, other):
        if isinstance(other, MatAlgElem):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, Scalar, LaurentPoly)):
            return MatAlgElem.scalar(self.ambient, other)
        return None

    def __eq__(self, other):
        if isinstance(other, MatAlgElem):
            return self.ambient == other.ambient and self.terms == other.terms
        if isinstance(other, (int, Scalar)):
            return self == MatAlgElem.scalar(self.ambient, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ambient, frozenset(self.terms.items())))

    def __neg__(self):
        return MatAlgElem._wrap(self.ambient, {m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, c in other.terms.items():
            v = out.get(mono)
            v = c if v is None else v + c
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
        return MatAlgElem._wrap(self.ambient, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = as_scalar(c)
        if not c:
            return MatAlgElem.zero(self.ambient)
        return MatAlgElem._wrap(self.ambient, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, MatAlgElem):
            return mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        return self.scale(ONE / as_scalar(other))

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not defined in O_q(M_mn)")
        out = MatAlgElem.one(self.ambient)
        for _ in range(k):
            out = out * self
        return out

    def monomials(self):
        return [(PbwMonomial.from_codes(m, self.ambient), c) for m, c in sorted(self.terms.items())]

    def column_content(self, mono):
        counts = [0] * self.ambient.n
        for g in mono:
            counts[g % self.ambient.n] += 1
        return tuple(counts)

    def __str__(self):
        from .textio import format_matalg

        return format_matalg(self)

    def __repr__(self):
        return f"MatAlgElem({self.ambient.m}x{self.ambient.n}: {self})"


def generator(ambient, i, j):
    ambient = _as_ambient(ambient)
    return MatAlgElem._wrap(ambient, {(ambient.code(i, j),): ONE})


def normal_form(word, ambient):
    """PBW normal form of the word ``X_{i1 j1} X_{i2 j2} ...`` given as (i, j) pairs."""
    ambient = _as_ambient(ambient)
    codes = [ambient.code(i, j) for i, j in word]
    return MatAlgElem.from_raw(ambient, ambient.kernel().word(codes))


def mul(a: MatAlgElem, b: MatAlgElem) -> MatAlgElem:
    if a.ambient != b.ambient:
        raise AmbientError(f"ambient mismatch: {a.ambient} vs {b.ambient}")
    if not a.terms or not b.terms:
        return MatAlgElem.zero(a.ambient)
    ra, da = a.raw()
    rb, db = b.raw()
    raw = a.ambient.kernel().mul(ra, rb)
    if da is None and db is None:
        return MatAlgElem.from_raw(a.ambient, raw)
    den = (da or LaurentPoly.constant(1)) * (db or LaurentPoly.constant(1))
    return MatAlgElem.from_raw(a.ambient, raw, den)


def _minor_raw(ambient, rows, cols):
    """Raw quantum minor: rows ascending give PBW-ordered words directly."""
    base = -1 if ambient.qinv else 1
    out = {}
    for perm in permutations(range(len(cols))):
        l = inversions(perm)
        mono = tuple(ambient.code(r, cols[p]) for r, p in zip(rows, perm))
        out[mono] = {base * l: -1 if l % 2 else 1}
    return out


_minor_cache = {}


def minor_raw(ambient, rows, cols):
    key = (ambient, tuple(rows), tuple(cols))
    hit = _minor_cache.get(key)
    if hit is None:
        hit = _minor_raw(ambient, tuple(rows), tuple(cols))
        _minor_cache[key] = hit
    return hit


def _check_index_set(s, bound, what):
    s = tuple(s)
    if any(b <= a for a, b in zip(s, s[1:])):
        raise IndexRangeError(f"{what} {list(s)} must be strictly increasing")
    if s and (s[0] < 1 or s[-1] > bound):
        raise IndexRangeError(f"{what} {list(s)} outside 1..{bound}")
    return s


def quantum_minor(rows, cols, ambient) -> MatAlgElem:
    """[rows|cols] = sum over permutations of (-q)^inv * X_{r1 c_s(1)} ... X_{rk c_s(k)}."""
    ambient = _as_ambient(ambient)
    rows = _check_index_set(rows, ambient.m, "row set")
    cols = _check_index_set(cols, ambient.n, "column set")
    if len(rows) != len(cols):
        raise IndexRangeError(f"minor needs |I| = |J|, got {len(rows)} and {len(cols)}")
    if not rows:
        return MatAlgElem.one(ambient)
    return MatAlgElem.from_raw(ambient, minor_raw(ambient, rows, cols))


def quantum_determinant(ambient) -> MatAlgElem:
    ambient = _as_ambient(ambient)
    if not ambient.square:
        raise AmbientError("the quantum determinant needs a square ambient")
    idx = tuple(range(1, ambient.m + 1))
    return quantum_minor(idx, idx, ambient)


# ---------------------------------------------------------------------------
# reference rewriting (independent of the kernel)


def _rewrite_pair(ambient, h, g):
    """X_h X_g with h > g as [(coeff, (u, v))] in order."""
    n = ambient.n
    k, l = divmod(h, n)
    i, j = divmod(g, n)
    qq = ambient.q()
    if i == k or j == l:
        return [(ONE / qq, (g, h))]
    if j > l:
        return [(ONE, (g, h))]
    return [(ONE, (g, h)), (-(qq - ONE / qq), (i * n + l, k * n + j))]


def reduce_word(word, ambient, strategy="leftmost") -> MatAlgElem:
    """Rewrite one adjacent descent at a time until every word is ordered.

    ``strategy`` picks the leftmost or rightmost descent; any choice must
    reach the same normal form.
    """
    ambient = _as_ambient(ambient)
    work = {tuple(ambient.code(i, j) for i, j in word): ONE}
    done = {}
    while work:
        w, c = work.popitem()
        pos = [p for p in range(len(w) - 1) if w[p] > w[p + 1]]
        if not pos:
            v = done.get(w, 0) + c
            if v:
                done[w] = v
            else:
                done.pop(w, None)
            continue
        p = pos[0] if strategy == "leftmost" else pos[-1]
        for coeff, pair in _rewrite_pair(ambient, w[p], w[p + 1]):
            nw = w[:p] + pair + w[p + 2:]
            v = work.get(nw, 0) + c * coeff
            if v:
                work[nw] = v
            else:
                work.pop(nw, None)
    return MatAlgElem(ambient, done)


def relation_defects(image, m, n, q=None):
    """Check relations (1) on images of the generators.

    ``image(i, j)`` returns the image of X_ij; returns a list of
    ``(label, defect)`` with every defect expected to vanish.
    """
    out = []
    qq = q if q is not None else image(1, 1).ambient.q()
    corr = qq - ONE / qq
    for i in range(1, m + 1):
        for k in range(i, m + 1):
            for j in range(1, n + 1):
                for l in range(j, n + 1):
                    if i == k and j == l:
                        continue
                    if i == k:
                        d = image(i, j) * image(i, l) - image(i, l) * image(i, j) * qq
                        out.append((f"row X{i}{j}X{i}{l}", d))
                    elif j == l:
                        d = image(i, j) * image(k, j) - image(k, j) * image(i, j) * qq
                        out.append((f"col X{i}{j}X{k}{j}", d))
                    else:
                        d = image(i, l) * image(k, j) - image(k, j) * image(i, l)
                        out.append((f"commute X{i}{l}X{k}{j}", d))
                        d = image(i, j) * image(k, l) - image(k, l) * image(i, j) - image(i, l) * image(k, j) * corr
                        out.append((f"cross X{i}{j}X{k}{l}", d))
    return out


# ---------------------------------------------------------------------------
# tau, Gamma, Gamma o tau


def _require_square(a):
    if not a.ambient.square:
        raise AmbientError("operation needs a square ambient O_q(M_u)")


def _apply_on_generators(a, image, anti=False):
    amb = a.ambient
    out = MatAlgElem.zero(amb)
    cache = {}
    for mono, c in a.terms.items():
        factors = [cache.setdefault(g, image(*amb.index(g))) for g in mono]
        if anti:
            factors.reverse()
        prod = MatAlgElem.one(amb)
        for f in factors:
            prod = prod * f
        out = out + prod.scale(c)
    return out


def tau(a: MatAlgElem) -> MatAlgElem:
    """Transpose: the algebra morphism X_ij -> X_ji."""
    _require_square(a)
    amb = a.ambient
    return _apply_on_generators(a, lambda i, j: generator(amb, j, i))


def _complement(s, u):
    return tuple(x for x in range(1, u + 1) if x not in s)


def gamma(a: MatAlgElem) -> MatAlgElem:
    """Anti-endomorphism X_ij -> (-q)^(i-j) [{j}~ | {i}~]."""
    _require_square(a)
    amb = a.ambient
    u = amb.m
    mq = -amb.q()

    def image(i, j):
        return quantum_minor(_complement((j,), u), _complement((i,), u), amb).scale(mq ** (i - j))

    return _apply_on_generators(a, image, anti=True)


def gamma_tau(a: MatAlgElem) -> MatAlgElem:
    return gamma(tau(a))


# ---------------------------------------------------------------------------
# tensor products and the coaction


class TensorElem:
    """Element of O_q(M_m) (x) O_q(M_mn) with terms keyed by (left, right) monomials."""

    __slots__ = ("left", "right", "terms")

    def __init__(self, left, right, terms=None):
        self.left = _as_ambient(left)
        self.right = _as_ambient(right)
        self.terms = {}
        for key, c in (terms or {}).items():
            c = as_scalar(c)
            if c:
                self.terms[key] = c

    @classmethod
    def one(cls, left, right):
        return cls(left, right, {((), ()): ONE})

    @classmethod
    def pure(cls, x: MatAlgElem, y: MatAlgElem):
        """x (x) y"""
        terms = {}
        for mx, cx in x.terms.items():
            for my, cy in y.terms.items():
                terms[(mx, my)] = cx * cy
        return cls(x.ambient, y.ambient, terms)

    def _check(self, other):
        if (self.left, self.right) != (other.left, other.right):
            raise AmbientError("tensor ambient mismatch")

    def __eq__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        return (self.left, self.right) == (other.left, other.right) and self.terms == other.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            v = c if v is None else v + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return TensorElem(self.left, self.right, out)

    def __neg__(self):
        return TensorElem(self.left, self.right, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_scalar(c)
        return TensorElem(self.left, self.right, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorElem):
            return tensor_mul(self, other)
        return self.scale(other)

    def is_zero(self):
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (ml, mr), c in sorted(self.terms.items()):
            lt = PbwMonomial.from_codes(ml, self.left)
            rt = PbwMonomial.from_codes(mr, self.right)
            parts.append(f"({c})*{str(lt).replace('X', 'T')} (x) {str(rt).replace('X', 'Z')}")
        return " + ".join(parts)


def tensor_mul(a: TensorElem, b: TensorElem) -> TensorElem:
    """(x (x) y)(x' (x) y') = xx' (x) yy', each leg in normal form."""
    a._check(b)
    kl, kr = a.left.kernel(), a.right.kernel()
    acc = {}
    for (la, ra), ca in a.terms.items():
        for (lb, rb), cb in b.terms.items():
            c = ca * cb
            for ml, cl in kl.mul_mono(la, lb):
                sl = c * Scalar.laurent(cl)
                for mr, cr in kr.mul_mono(ra, rb):
                    key = (ml, mr)
                    v = sl * Scalar.laurent(cr)
                    old = acc.get(key)
                    acc[key] = v if old is None else old + v
    return TensorElem(a.left, a.right, acc)


def lambda_coaction(a: MatAlgElem) -> TensorElem:
    """Z_ij -> sum_k T_ik (x) Z_kj, extended multiplicatively."""
    right = a.ambient
    m = right.m
    left = Ambient(m, m, right.qinv)
    images = {}

    def image(g):
        if g not in images:
            i, j = right.index(g)
            images[g] = TensorElem(
                left, right, {((left.code(i, k),), (right.code(k, j),)): ONE for k in range(1, m + 1)}
            )
        return images[g]

    out = TensorElem(left, right)
    for mono, c in a.terms.items():
        prod = TensorElem.one(left, right)
        for g in mono:
            prod = tensor_mul(prod, image(g))
        out = out + prod.scale(c)
    return out

"""Dehomogenisation of G_q(m,n) at the top minor b = [n-m+1 .. n].

A ``DhomElem`` stores ``{(tableau, c): Scalar}`` meaning the sum of
``coeff * T * b^-c``. The canonical form has preferred tableaux, and a
tableau carries a trailing b row only when its power is 0; since b is the
largest generator, this makes equality structural.

Conjugation by b scales a minor: ``b [I] b^-1 = q^-s(I) [I]`` with
``s(I) = m - |I & top|``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .coeff import ONE, LaurentPoly, Scalar, as_scalar
from .grassmann import GrassElem, embed, ell, straighten
from .linalg import exact_rank
from .qmatrix import Ambient, AmbientError, IndexRangeError, MatAlgElem, PbwMonomial

__all__ = [
    "BraceExpr",
    "DhomElem",
    "dhom_mul",
    "gens_expand",
    "mincomm_check",
    "normalize_dhom",
    "rho_generator",
    "rho_image",
    "rho_injectivity_rank",
    "s_exponent",
    "sigma",
    "top_set",
    "verify_rho_relations",
]


def _amb(a):
    return a if isinstance(a, Ambient) else Ambient(*a)


def top_set(amb):
    return tuple(range(amb.n - amb.m + 1, amb.n + 1))


def s_exponent(I, amb):
    return amb.m - len(set(I) & set(top_set(amb)))


def _weight(tab, amb):
    top = set(top_set(amb))
    return sum(amb.m - len(set(r) & top) for r in tab)


def sigma(g: GrassElem, power=1) -> GrassElem:
    """Conjugation by b^power: each tableau T scales by q^(-power * sum of s over rows)."""
    amb = g.ambient
    q = amb.q()
    return GrassElem._wrap(
        amb, {t: c * q ** (-power * _weight(t, amb)) for t, c in g.terms.items()}
    )


def mincomm_check(I, ambient):
    """[I] b = q^s b [I] in O_q(M_mn)."""
    amb = _amb(ambient)
    I = tuple(I)
    top = top_set(amb)
    s = s_exponent(I, amb)
    lhs = embed(GrassElem.tableau(amb, [I, top]))
    rhs = embed(GrassElem.tableau(amb, [top, I], amb.q() ** s))
    return lhs == rhs


class DhomElem:
    __slots__ = ("ambient", "terms")

    def __init__(self, ambient, terms=None):
        self.ambient = _amb(ambient)
        self.terms = _normalize_terms(self.ambient, terms or {})

    @classmethod
    def _wrap(cls, ambient, terms):
        obj = cls.__new__(cls)
        obj.ambient = ambient
        obj.terms = terms
        return obj

    @classmethod
    def brace(cls, ambient, cols):
        amb = _amb(ambient)
        return cls(amb, {((tuple(cols),), 1): ONE})

    @classmethod
    def from_grass(cls, g: GrassElem, power=0):
        return cls(g.ambient, {(t, power): c for t, c in g.terms.items()})

    @classmethod
    def top_power(cls, ambient, k):
        """b^k for any integer k."""
        amb = _amb(ambient)
        if k >= 0:
            return cls(amb, {((top_set(amb),) * k, 0): ONE})
        return cls._wrap(amb, {((), -k): ONE})

    @classmethod
    def one(cls, ambient):
        return cls._wrap(_amb(ambient), {((), 0): ONE})

    @classmethod
    def zero(cls, ambient):
        return cls._wrap(_amb(ambient), {})

    @classmethod
    def scalar(cls, ambient, c):
        c = as_scalar(c)
        return cls._wrap(_amb(ambient), {((), 0): c} if c else {})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _lift(self, other):
        if isinstance(other, DhomElem):
            if other.ambient != self.ambient:
                raise AmbientError(f"ambient mismatch: {self.ambient} vs {other.ambient}")
            return other
        if isinstance(other, GrassElem):
            return DhomElem.from_grass(other)
        if isinstance(other, (int, Fraction, Scalar, LaurentPoly)):
            return DhomElem.scalar(self.ambient, other)
        return None

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.ambient, frozenset(self.terms.items())))

    def __neg__(self):
        return DhomElem._wrap(self.ambient, {k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            v = c if v is None else v + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return DhomElem._wrap(self.ambient, out)

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
            return DhomElem.zero(self.ambient)
        return DhomElem._wrap(self.ambient, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        lifted = self._lift(other) if not isinstance(other, (int, Fraction, Scalar, LaurentPoly)) else None
        if lifted is not None:
            return dhom_mul(self, lifted)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, GrassElem):
            return dhom_mul(DhomElem.from_grass(other), self)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        return self.scale(ONE / as_scalar(other))

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are only defined for the top minor")
        out = DhomElem.one(self.ambient)
        for _ in range(k):
            out = dhom_mul(out, self)
        return out

    def max_power(self):
        return max((c for _, c in self.terms), default=0)

    def times_top(self, k):
        """self * b^k as a GrassElem; needs k >= every stored power."""
        amb = self.ambient
        top = top_set(amb)
        out = {}
        for (t, c), v in self.terms.items():
            if c > k:
                raise ValueError(f"power {c} exceeds {k}")
            out[t + (top,) * (k - c)] = v
        return GrassElem(amb, out)

    def __str__(self):
        from .textio import format_dhom

        return format_dhom(self)

    def __repr__(self):
        return f"DhomElem({self.ambient.m}x{self.ambient.n}: {self})"


def _normalize_terms(amb, terms):
    by_power = {}
    for (t, c), v in terms.items():
        v = as_scalar(v)
        if not v:
            continue
        if c < 0:
            raise ValueError("stored powers of b^-1 must be nonnegative")
        t = tuple(tuple(r) for r in t)
        bucket = by_power.setdefault(c, {})
        bucket[t] = bucket[t] + v if t in bucket else v
    top = top_set(amb)
    out = {}
    for c, bucket in by_power.items():
        g = straighten(GrassElem(amb, bucket))
        for t, v in g.terms.items():
            cc = c
            while cc > 0 and t and t[-1] == top:
                t = t[:-1]
                cc -= 1
            key = (t, cc)
            w = out.get(key)
            w = v if w is None else w + v
            if w:
                out[key] = w
            else:
                out.pop(key, None)
    return out


def normalize_dhom(a: DhomElem) -> DhomElem:
    return DhomElem(a.ambient, a.terms)


def dhom_mul(a: DhomElem, b: DhomElem) -> DhomElem:
    """(T1 b^-c1)(T2 b^-c2) = q^(c1 * S(T2)) T1 T2 b^-(c1+c2)."""
    if a.ambient != b.ambient:
        raise AmbientError(f"ambient mismatch: {a.ambient} vs {b.ambient}")
    amb = a.ambient
    q = amb.q()
    raw = {}
    for (t1, c1), v1 in a.terms.items():
        for (t2, c2), v2 in b.terms.items():
            key = (t1 + t2, c1 + c2)
            v = v1 * v2 * q ** (c1 * _weight(t2, amb))
            raw[key] = raw[key] + v if key in raw else v
    return DhomElem(amb, raw)


# ---------------------------------------------------------------------------
# the map rho from O_q(M_{m, n-m})


def rho_generator(i, j, m, n):
    if not (1 <= m < n):
        raise IndexRangeError("need 1 <= m < n")
    if not (1 <= i <= m and 1 <= j <= n - m):
        raise IndexRangeError(f"X[{i},{j}] outside {m}x{n - m}")
    amb = Ambient(m, n)
    top = top_set(amb)
    cols = tuple(sorted({j} | (set(top) - {n - i + 1})))
    return DhomElem.brace(amb, cols)


def rho_image(a: MatAlgElem, n):
    """Image of an element of O_q(M_{m, n-m}) in the dehomogenisation of G_q(m, n)."""
    m = a.ambient.m
    if a.ambient.n != n - m:
        raise AmbientError(f"source must be {m}x{n - m}")
    amb = Ambient(m, n)
    out = DhomElem.zero(amb)
    gens = {}
    for codes, c in a.terms.items():
        prod = DhomElem.one(amb)
        for g in codes:
            i, j = a.ambient.index(g)
            if (i, j) not in gens:
                gens[(i, j)] = rho_generator(i, j, m, n)
            prod = dhom_mul(prod, gens[(i, j)])
        out = out + prod.scale(c)
    return out


def verify_rho_relations(m, n):
    """Check the four relation families of O_q(M_{m, n-m}) on rho-images.

    Returns a list of (family, indices, passed); the last entries check that
    sigma scales each generator numerator by q^-1.
    """
    p = n - m
    amb = Ambient(m, n)
    q = amb.q()
    Y = {(i, j): rho_generator(i, j, m, n) for i in range(1, m + 1) for j in range(1, p + 1)}
    report = []
    for i in range(1, m + 1):
        for j in range(1, p + 1):
            for l in range(i + 1, m + 1):
                ok = dhom_mul(Y[i, j], Y[l, j]) == dhom_mul(Y[l, j], Y[i, j]).scale(q)
                report.append(("column", (i, j, l, j), ok))
            for r in range(j + 1, p + 1):
                ok = dhom_mul(Y[i, j], Y[i, r]) == dhom_mul(Y[i, r], Y[i, j]).scale(q)
                report.append(("row", (i, j, i, r), ok))
    for i in range(1, m + 1):
        for l in range(i + 1, m + 1):
            for j in range(1, p + 1):
                for r in range(j + 1, p + 1):
                    ok = dhom_mul(Y[i, r], Y[l, j]) == dhom_mul(Y[l, j], Y[i, r])
                    report.append(("antidiagonal", (i, r, l, j), ok))
                    lhs = dhom_mul(Y[i, j], Y[l, r]) - dhom_mul(Y[l, r], Y[i, j])
                    rhs = dhom_mul(Y[i, r], Y[l, j]).scale(q - q ** -1)
                    report.append(("diagonal", (i, j, l, r), lhs == rhs))
    for (i, j), y in sorted(Y.items()):
        ((t, _),) = y.terms
        g = GrassElem.tableau(amb, t)
        report.append(("twist", (i, j), sigma(g) == g.scale(q ** -1)))
    return report


def rho_injectivity_rank(m, n, degree=2):
    """(number of PBW monomials of degree <= ``degree``, rank of their rho-images)."""
    p = n - m
    src = Ambient(m, p)
    gens = list(range(m * p))
    monos = [()]
    for d in range(1, degree + 1):
        monos.extend(tuple(c) for c in _multisets(gens, d))
    images = [rho_image(MatAlgElem(src, {mono: ONE}), n) for mono in monos]
    cols = []
    for img in images:
        g = straighten(img.times_top(degree))
        cols.append(dict(g.terms))
    return len(monos), exact_rank(cols)


def _multisets(items, d):
    from itertools import combinations_with_replacement

    return combinations_with_replacement(items, d)


# ---------------------------------------------------------------------------
# generators of the dehomogenisation


class BraceExpr:
    """Polynomial in brace generators: ``{(cols1, cols2, ...): Scalar}`` (words, in order)."""

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient, terms):
        self.ambient = ambient
        self.terms = {w: c for w, c in terms.items() if c}

    def evaluate(self) -> DhomElem:
        out = DhomElem.zero(self.ambient)
        for word, c in self.terms.items():
            prod = DhomElem.one(self.ambient)
            for cols in word:
                prod = dhom_mul(prod, DhomElem.brace(self.ambient, cols))
            out = out + prod.scale(c)
        return out

    def __str__(self):
        from .textio import format_terms

        items = [
            ("".join("{" + " ".join(map(str, w)) + "}" for w in word), self.terms[word])
            for word in sorted(self.terms, key=lambda w: (len(w), w))
        ]
        return format_terms(items)

    def __repr__(self):
        return f"BraceExpr({self})"


def _is_generator(I, amb):
    return len(set(I) - set(top_set(amb))) <= 1


def gens_expand(I, ambient) -> BraceExpr:
    """Write {I} as a polynomial in the generators {j, top minus one entry}.

    Induction on the number of entries of I below the top block: with
    i1 = min(I), J2 = I - {i1} and K = top + {i1}, the Pluecker relation
    for (empty, J2, K) expresses b[I] through products [A_l][l, J2].
    """
    amb = _amb(ambient)
    I = tuple(sorted(I))
    top = top_set(amb)
    q = amb.q()
    mq = -q

    def expand(I):
        if I == top:
            return {(): ONE}
        if _is_generator(I, amb):
            return {(I,): ONE}
        i1, J2 = I[0], I[1:]
        K = tuple(sorted(set(top) | {i1}))

        def exponent(x):
            K2 = (x,)
            K1 = tuple(k for k in K if k != x)
            return ell(K1, K2) + ell(K2, J2)

        e0 = exponent(i1)
        out = {}
        for l in top:
            if l in J2:
                continue
            A = tuple(sorted((set(top) - {l}) | {i1}))
            B = tuple(sorted({l} | set(J2)))
            coeff = -(mq ** (exponent(l) - e0)) * q ** (s_exponent(I, amb) - s_exponent(B, amb))
            for word, c in expand(B).items():
                key = (A,) + word
                v = out.get(key)
                v = coeff * c if v is None else v + coeff * c
                out[key] = v
        return out

    return BraceExpr(amb, expand(I))

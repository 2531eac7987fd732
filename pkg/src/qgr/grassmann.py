"""The quantum grassmannian G_q(m,n) inside O_q(M_mn).

A ``GrassElem`` is a formal combination of tableaux, each tableau a tuple of
strictly increasing column sets; the product of the corresponding maximal
minors is its value in O_q(M_mn). Straightening rewrites an element onto
preferred tableaux (rows weakly increasing for the componentwise order).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from fractions import Fraction

from .coeff import ONE, LaurentPoly, Scalar, as_scalar
from .linalg import InconsistentSystem, exact_rank, solve_columns
from .qmatrix import Ambient, AmbientError, IndexRangeError, MatAlgElem, minor_raw

__all__ = [
    "GrassElem",
    "InvalidPlueckerInput",
    "StraighteningError",
    "commutation_check",
    "compare_column_sets",
    "content",
    "delta_linear",
    "delta_map",
    "ell",
    "embed",
    "embed_raw",
    "is_preferred",
    "lex_less",
    "normality_mod_ideal_check",
    "own_parameter",
    "pluecker_relation",
    "preferred_tableaux",
    "star_leq",
    "straighten",
    "straighten_by_rewriting",
]


class InvalidPlueckerInput(ValueError):
    """Index sets violate the size hypothesis of the Pluecker relations."""


class StraighteningError(RuntimeError):
    """The linear system for straightening had no solution; this is a bug."""


def _amb(a):
    return a if isinstance(a, Ambient) else Ambient(*a)


# ---------------------------------------------------------------------------
# column sets and tableaux


def star_leq(a, b):
    """Componentwise order on sorted sets of equal size."""
    return all(x <= y for x, y in zip(a, b))


def lex_less(a, b):
    return tuple(a) < tuple(b)


def compare_column_sets(a, b):
    return {"lex_less": lex_less(a, b), "star_leq": star_leq(a, b)}


def is_preferred(tableau):
    return all(star_leq(r, s) for r, s in zip(tableau, tableau[1:]))


def content(tableau, n):
    counts = [0] * n
    for row in tableau:
        for j in row:
            counts[j - 1] += 1
    return tuple(counts)


def ell(I, J):
    """Number of pairs (i, j) in I x J with i > j."""
    return sum(1 for i in I for j in J if i > j)


def _check_row(row, amb):
    row = tuple(row)
    if len(row) != amb.m:
        raise IndexRangeError(f"column set {list(row)} must have {amb.m} entries")
    if any(b <= a for a, b in zip(row, row[1:])) or row[0] < 1 or row[-1] > amb.n:
        raise IndexRangeError(f"column set {list(row)} is not increasing within 1..{amb.n}")
    return row


class GrassElem:
    """Element of G_q(m,n) as ``{tableau: Scalar}``."""

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient, terms=None):
        self.ambient = _amb(ambient)
        self.terms = {}
        for t, c in (terms or {}).items():
            c = as_scalar(c)
            if c:
                t = tuple(_check_row(r, self.ambient) for r in t)
                self.terms[t] = self.terms.get(t, 0) + c if t in self.terms else c
        self.terms = {t: c for t, c in self.terms.items() if c}

    @classmethod
    def _wrap(cls, ambient, terms):
        obj = cls.__new__(cls)
        obj.ambient = ambient
        obj.terms = terms
        return obj

    @classmethod
    def minor(cls, ambient, cols):
        amb = _amb(ambient)
        return cls._wrap(amb, {(_check_row(cols, amb),): ONE})

    @classmethod
    def tableau(cls, ambient, rows, coeff=ONE):
        amb = _amb(ambient)
        c = as_scalar(coeff)
        return cls._wrap(amb, {tuple(_check_row(r, amb) for r in rows): c} if c else {})

    @classmethod
    def one(cls, ambient):
        return cls._wrap(_amb(ambient), {(): ONE})

    @classmethod
    def zero(cls, ambient):
        return cls._wrap(_amb(ambient), {})

    @classmethod
    def scalar(cls, ambient, c):
        c = as_scalar(c)
        return cls._wrap(_amb(ambient), {(): c} if c else {})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _lift(self, other):
        if isinstance(other, GrassElem):
            if other.ambient != self.ambient:
                raise AmbientError(f"ambient mismatch: {self.ambient} vs {other.ambient}")
            return other
        if isinstance(other, (int, Fraction, Scalar, LaurentPoly)):
            return GrassElem.scalar(self.ambient, other)
        return None

    def __eq__(self, other):
        other = self._lift(other) if not isinstance(other, GrassElem) else other
        if other is None:
            return NotImplemented
        return self.ambient == other.ambient and self.terms == other.terms

    def __hash__(self):
        return hash((self.ambient, frozenset(self.terms.items())))

    def __neg__(self):
        return GrassElem._wrap(self.ambient, {t: -c for t, c in self.terms.items()})

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for t, c in other.terms.items():
            v = out.get(t)
            v = c if v is None else v + c
            if v:
                out[t] = v
            else:
                out.pop(t, None)
        return GrassElem._wrap(self.ambient, out)

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
            return GrassElem.zero(self.ambient)
        return GrassElem._wrap(self.ambient, {t: v * c for t, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, GrassElem):
            if other.ambient != self.ambient:
                raise AmbientError(f"ambient mismatch: {self.ambient} vs {other.ambient}")
            out = {}
            for t, c in self.terms.items():
                for s, d in other.terms.items():
                    key = t + s
                    v = out.get(key)
                    v = c * d if v is None else v + c * d
                    if v:
                        out[key] = v
                    else:
                        out.pop(key, None)
            return GrassElem._wrap(self.ambient, out)
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
            raise ValueError("negative powers are not defined in G_q(m,n)")
        out = GrassElem.one(self.ambient)
        for _ in range(k):
            out = out * self
        return out

    def components(self):
        """Split by content; returns {content: GrassElem}."""
        n = self.ambient.n
        out = {}
        for t, c in self.terms.items():
            out.setdefault(content(t, n), {})[t] = c
        return {k: GrassElem._wrap(self.ambient, v) for k, v in out.items()}

    def degrees(self):
        return {len(t) for t in self.terms}

    def __str__(self):
        from .textio import format_grass

        return format_grass(self)

    def __repr__(self):
        return f"GrassElem({self.ambient.m}x{self.ambient.n}: {self})"


# ---------------------------------------------------------------------------
# embedding into O_q(M_mn)

_tableau_cache = {}
_TABLEAU_CACHE_LIMIT = 200_000


def _tableau_raw(amb, tab):
    key = (amb, tab)
    hit = _tableau_cache.get(key)
    if hit is not None:
        return hit
    rows = tuple(range(1, amb.m + 1))
    if not tab:
        out = {(): {0: 1}}
    elif len(tab) == 1:
        out = minor_raw(amb, rows, tab[0])
    else:
        # split in half so sub-products are shared across tableaux
        h = len(tab) // 2
        out = amb.kernel().mul(_tableau_raw(amb, tab[:h]), _tableau_raw(amb, tab[h:]))
    if len(_tableau_cache) >= _TABLEAU_CACHE_LIMIT:
        _tableau_cache.clear()
    _tableau_cache[key] = out
    return out


def embed_raw(amb, tab):
    """Raw PBW expansion ``{mono: {exp: coeff}}`` of the product of row minors."""
    return _tableau_raw(_amb(amb), tuple(tuple(r) for r in tab))


def embed(g: GrassElem) -> MatAlgElem:
    amb = g.ambient
    acc = {}
    for t, c in g.terms.items():
        for mono, coeff in embed_raw(amb, t).items():
            v = c * Scalar.laurent(coeff)
            old = acc.get(mono)
            acc[mono] = v if old is None else old + v
    return MatAlgElem(amb, acc)


# ---------------------------------------------------------------------------
# Pluecker relations


def pluecker_relation(J1, J2, K, ambient) -> GrassElem:
    """sum over K' u K'' = K of (-q)^(l(J1;K') + l(K';K'') + l(K'';J2)) [J1 u K'][K'' u J2].

    Splittings whose minors repeat a column contribute zero.
    """
    amb = _amb(ambient)
    m = amb.m
    J1, J2, K = tuple(sorted(J1)), tuple(sorted(J2)), tuple(sorted(K))
    if len(J1) > m or len(J2) > m:
        raise InvalidPlueckerInput(f"|J1|, |J2| must be at most m = {m}")
    if len(K) != 2 * m - len(J1) - len(J2):
        raise InvalidPlueckerInput(f"|K| must equal 2m - |J1| - |J2| = {2 * m - len(J1) - len(J2)}")
    if len(K) <= m:
        raise InvalidPlueckerInput(f"|K| = {len(K)} must exceed m = {m}")
    for s in (J1, J2, K):
        if s and (s[0] < 1 or s[-1] > amb.n):
            raise IndexRangeError(f"index set {list(s)} outside 1..{amb.n}")
    mq = -amb.q()
    out = GrassElem.zero(amb)
    for K1 in combinations(K, m - len(J1)):
        K2 = tuple(x for x in K if x not in K1)
        row1 = set(J1) | set(K1)
        row2 = set(K2) | set(J2)
        if len(row1) < m or len(row2) < m:
            continue
        e = ell(J1, K1) + ell(K1, K2) + ell(K2, J2)
        out = out + GrassElem.tableau(amb, [sorted(row1), sorted(row2)], mq**e)
    return out


# ---------------------------------------------------------------------------
# straightening


@lru_cache(maxsize=None)
def _msubsets(m, n):
    return tuple(combinations(range(1, n + 1), m))


def preferred_tableaux(cont, ambient):
    """All preferred tableaux of the given content, in lexicographic order."""
    amb = _amb(ambient)
    m, n = amb.m, amb.n
    total = sum(cont)
    if total % m:
        return []
    d = total // m
    subsets = _msubsets(m, n)
    out = []
    rem = list(cont)

    def rec(prev, rows_left, acc):
        if rows_left == 0:
            out.append(tuple(acc))
            return
        if any(c > rows_left for c in rem):
            return
        for J in subsets:
            if prev is not None and not star_leq(prev, J):
                continue
            if all(rem[j - 1] for j in J):
                for j in J:
                    rem[j - 1] -= 1
                acc.append(J)
                rec(J, rows_left - 1, acc)
                acc.pop()
                for j in J:
                    rem[j - 1] += 1

    rec(None, d, [])
    return out


_basis_cache = {}


def _basis_columns(amb, cont):
    key = (amb, cont)
    hit = _basis_cache.get(key)
    if hit is None:
        tabs = preferred_tableaux(cont, amb)
        cols = [{mono: Scalar.laurent(c) for mono, c in embed_raw(amb, t).items()} for t in tabs]
        hit = (tabs, cols)
        _basis_cache[key] = hit
    return hit


def _straighten_component(g):
    amb = g.ambient
    (cont,) = g.components().keys()
    if all(is_preferred(t) for t in g.terms):
        return g
    target = embed(g).terms
    tabs, cols = _basis_columns(amb, cont)
    try:
        x = solve_columns(cols, target)
    except InconsistentSystem as exc:
        raise StraighteningError(f"no preferred expansion for content {cont}: {exc}") from exc
    return GrassElem._wrap(amb, {t: c for t, c in zip(tabs, x) if c})


def straighten(g: GrassElem) -> GrassElem:
    """Rewrite g on the preferred-tableau basis, one content component at a time."""
    out = GrassElem.zero(g.ambient)
    for comp in g.components().values():
        out = out + _straighten_component(comp)
    return out


def _first_violation(tab):
    for a in range(len(tab) - 1):
        A, B = tab[a], tab[a + 1]
        for p in range(len(A)):
            if A[p] > B[p]:
                return a, p
    return None


def _rewrite_step(amb, tab):
    """Express a non-preferred tableau through one Pluecker relation.

    Returns {tableau: coeff} with every tableau lexicographically below ``tab``.
    """
    a, p = _first_violation(tab)
    A, B = tab[a], tab[a + 1]
    J1, J2 = A[:p], B[p + 1:]
    K = tuple(sorted(A[p:] + B[: p + 1]))
    rel = pluecker_relation(J1, J2, K, amb)
    lead = rel.terms[(A, B)]
    out = {}
    for (r1, r2), c in rel.terms.items():
        if (r1, r2) == (A, B):
            continue
        out[tab[:a] + (r1, r2) + tab[a + 2:]] = -c / lead
    return out


def straighten_by_rewriting(g: GrassElem) -> GrassElem:
    """Straighten with repeated single Pluecker exchanges, largest tableau first."""
    amb = g.ambient
    work = dict(g.terms)
    done = {}
    while work:
        tab = max(work)
        c = work.pop(tab)
        if not c:
            continue
        if _first_violation(tab) is None:
            done[tab] = c
            continue
        for t, d in _rewrite_step(amb, tab).items():
            v = work.get(t)
            v = c * d if v is None else v + c * d
            work[t] = v
    return GrassElem._wrap(amb, {t: c for t, c in done.items() if c})


# ---------------------------------------------------------------------------
# commutation and normality


def _s_exp(I, J, m):
    return m - len(set(I) & set(J))


def commutation_check(I, J, ambient):
    """Straightened defect of [I][J] - q^s [J][I] and whether it has the expected shape."""
    amb = _amb(ambient)
    I, J = _check_row(I, amb), _check_row(J, amb)
    if not lex_less(I, J):
        raise ValueError(f"commutation_check needs I <_lex J, got {list(I)}, {list(J)}")
    s = _s_exp(I, J, amb.m)
    g = GrassElem.tableau(amb, [I, J]) - GrassElem.tableau(amb, [J, I], amb.q() ** s)
    defect = straighten(g)
    inter = set(I) & set(J)
    union = set(I) | set(J)
    conforms = True
    for t in defect.terms:
        if len(t) != 2:
            conforms = False
            break
        L, L2 = t
        expected = tuple(sorted(inter | (union - set(L))))
        if not (lex_less(L, I) and L2 == expected):
            conforms = False
            break
    return {"s": s, "defect": defect, "conforms": conforms}


def normality_mod_ideal_check(I, ambient, details=False):
    """[I] commutes with every generator up to q^(+-s), modulo minors below I in lex order."""
    amb = _amb(ambient)
    I = _check_row(I, amb)
    ok = True
    report = []
    for J in _msubsets(amb.m, amb.n):
        if J == I:
            continue
        s = _s_exp(I, J, amb.m)
        if lex_less(I, J):
            g = GrassElem.tableau(amb, [I, J]) - GrassElem.tableau(amb, [J, I], amb.q() ** s)
        else:
            g = GrassElem.tableau(amb, [I, J]) - GrassElem.tableau(amb, [J, I], amb.q() ** (-s))
        defect = straighten(g)
        good = all(len(t) == 2 and lex_less(t[0], I) for t in defect.terms)
        ok = ok and good
        report.append((J, defect, good))
    return (ok, report) if details else ok


# ---------------------------------------------------------------------------
# the reflection isomorphism G_q(m,n) -> G_{q^-1}(m,n)


def _reflect(t, n):
    return tuple(tuple(sorted(n - j + 1 for j in row)) for row in t)


def delta_linear(g: GrassElem) -> GrassElem:
    """Columns j -> n - j + 1 into the algebra with parameter q^-1; coefficients unchanged."""
    amb = g.ambient
    return GrassElem._wrap(amb.inverted(), {_reflect(t, amb.n): c for t, c in g.terms.items()})


def own_parameter(g: GrassElem) -> GrassElem:
    """Rewrite an element of the q^-1 algebra with coefficients in its own parameter.

    Renaming the parameter turns the q^-1 algebra into the q algebra, so
    the result lives in the ordinary ambient.
    """
    amb = g.ambient
    return GrassElem._wrap(amb.inverted(), {t: c.invert_q() for t, c in g.terms.items()})


def delta_map(g: GrassElem) -> GrassElem:
    """Columns j -> n - j + 1, coefficients q -> q^-1.

    The target is G_{q^-1}(m,n) written in its own parameter; its products
    are computed with the same rules as the source.
    """
    return own_parameter(delta_linear(g))


def preferred_rank(ambient, degree):
    """(number of preferred tableaux with ``degree`` rows, rank of their embeddings)."""
    amb = _amb(ambient)
    count = 0
    rank = 0
    by_content = {}
    for tab in _all_preferred(amb, degree):
        by_content.setdefault(content(tab, amb.n), []).append(tab)
        count += 1
    for cont, tabs in by_content.items():
        cols = [{mono: Scalar.laurent(c) for mono, c in embed_raw(amb, t).items()} for t in tabs]
        rank += exact_rank(cols)
    return count, rank


def _all_preferred(amb, d):
    subsets = _msubsets(amb.m, amb.n)

    def rec(prev, left):
        if left == 0:
            yield ()
            return
        for J in subsets:
            if prev is None or star_leq(prev, J):
                for rest in rec(J, left - 1):
                    yield (J,) + rest

    yield from rec(None, d)

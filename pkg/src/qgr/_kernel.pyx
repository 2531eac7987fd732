# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled PBW rewriting kernel for O_q(M_mn).

Same contract and encoding as ``_pykernel``: generator codes
``(i-1)*n + (j-1)``, monomials as non-decreasing tuples, coefficients as raw
Laurent dicts.
"""

cdef dict _ONE = {0: 1}


cdef dict _lmul(dict a, dict b):
    cdef dict out
    cdef long e
    if len(a) == 1 and len(b) == 1:
        for ea, ca in a.items():
            for eb, cb in b.items():
                return {<long>ea + <long>eb: ca * cb}
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = <long>ea + <long>eb
            v = out.get(e)
            out[e] = ca * cb if v is None else v + ca * cb
    return out


cdef void _acc(dict acc, object key, dict c):
    cdef dict d = acc.get(key)
    if d is None:
        acc[key] = dict(c)
        return
    for e, v in c.items():
        w = d.get(e)
        if w is None:
            d[e] = v
        else:
            w = w + v
            if w:
                d[e] = w
            else:
                del d[e]


cdef tuple _pack(dict acc):
    cdef list out = []
    cdef dict c, cc
    for mono, c in acc.items():
        cc = {}
        for e, v in c.items():
            if v:
                cc[e] = v
        if cc:
            out.append((mono, cc))
    return tuple(out)


cdef class PBWKernel:
    """Normal-form multiplication in O_q(M_mn), or O_{q^-1}(M_mn) when ``qinv``."""

    cdef public int m
    cdef public int n
    cdef public bint qinv
    cdef public Py_ssize_t memo_limit
    cdef dict _scale
    cdef dict _corr
    cdef dict _insert_memo
    cdef dict _mono_memo

    def __init__(self, int m, int n, qinv=False, Py_ssize_t memo_limit=0):
        cdef int sign = 1 if qinv else -1
        self.m = m
        self.n = n
        self.qinv = bool(qinv)
        self.memo_limit = memo_limit
        self._scale = {sign: 1}
        self._corr = {-sign: -1, sign: 1}
        self._insert_memo = {}
        self._mono_memo = {}

    def cache_size(self):
        return len(self._insert_memo) + len(self._mono_memo)

    def clear(self):
        self._insert_memo.clear()
        self._mono_memo.clear()

    cdef tuple _rule(self, Py_ssize_t h, Py_ssize_t g):
        cdef Py_ssize_t n = self.n
        cdef Py_ssize_t k = h // n, l = h % n, i = g // n, j = g % n
        if i == k or j == l:
            return ((self._scale, g, h),)
        if j > l:
            return ((_ONE, g, h),)
        return ((_ONE, g, h), (self._corr, i * n + l, k * n + j))

    cpdef tuple insert(self, tuple mono, Py_ssize_t g):
        """Normal form of ``mono * X_g`` as a tuple of (monomial, coeff)."""
        cdef Py_ssize_t ln = len(mono)
        cdef Py_ssize_t h, u, v
        cdef tuple prefix, res, key
        cdef dict acc, c, c1, c2, c01
        if ln == 0 or <Py_ssize_t>mono[ln - 1] <= g:
            return ((mono + (g,), _ONE),)
        key = (mono, g)
        hit = self._insert_memo.get(key)
        if hit is not None:
            return <tuple>hit
        h = mono[ln - 1]
        prefix = mono[:ln - 1]
        acc = {}
        for c, u, v in self._rule(h, g):
            for m1, c1 in self.insert(prefix, u):
                c01 = _lmul(c, c1)
                for m2, c2 in self.insert(m1, v):
                    _acc(acc, m2, _lmul(c01, c2))
        res = _pack(acc)
        if self.memo_limit and len(self._insert_memo) >= self.memo_limit:
            self._insert_memo.clear()
        self._insert_memo[key] = res
        return res

    cpdef tuple mul_mono(self, tuple a, tuple b):
        cdef tuple cur, key
        cdef dict acc, c, c2
        cdef Py_ssize_t g
        if len(b) == 0:
            return ((a, _ONE),)
        if len(a) == 0 or <Py_ssize_t>a[len(a) - 1] <= <Py_ssize_t>b[0]:
            return ((a + b, _ONE),)
        key = (a, b)
        hit = self._mono_memo.get(key)
        if hit is not None:
            return <tuple>hit
        cur = ((a, _ONE),)
        for g in b:
            acc = {}
            for mono, c in cur:
                for m2, c2 in self.insert(mono, g):
                    _acc(acc, m2, _lmul(c, c2))
            cur = _pack(acc)
        if self.memo_limit and len(self._mono_memo) >= self.memo_limit:
            self._mono_memo.clear()
        self._mono_memo[key] = cur
        return cur

    cpdef dict mul(self, dict A, dict B):
        """Product of two raw elements ``{mono: {exp: coeff}}``."""
        cdef dict acc = {}
        cdef dict ca, cb, cab, cp
        for ma, ca in A.items():
            for mb, cb in B.items():
                cab = _lmul(ca, cb)
                for mm, cp in self.mul_mono(ma, mb):
                    _acc(acc, mm, _lmul(cab, cp))
        return {mono: c for mono, c in _pack(acc)}

    def word(self, w):
        """Normal form of the word X_{w[0]} X_{w[1]} ..."""
        cdef dict cur = {(): _ONE}
        cdef dict acc, c, c2
        for g in w:
            acc = {}
            for mono, c in cur.items():
                for m2, c2 in self.insert(mono, g):
                    _acc(acc, m2, _lmul(c, c2))
            cur = {mono: c for mono, c in _pack(acc)}
        return cur

"""Pure-Python PBW rewriting kernel for O_q(M_mn).

Generators are encoded as ``g = (i-1)*n + (j-1)`` so that integer order is
the lexicographic order on (row, col). A PBW monomial is a non-decreasing
tuple of such codes. Coefficients are raw Laurent dicts ``{exp: coeff}``.

This module mirrors ``_kernel.pyx`` line for line; keep them in sync.
"""

_ONE = {0: 1}


def _lmul(a, b):
    if len(a) == 1 and len(b) == 1:
        for ea, ca in a.items():
            for eb, cb in b.items():
                return {ea + eb: ca * cb}
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            out[e] = out.get(e, 0) + ca * cb
    return out


def _acc(acc, key, c):
    d = acc.get(key)
    if d is None:
        acc[key] = dict(c)
        return
    for e, v in c.items():
        w = d.get(e, 0) + v
        if w:
            d[e] = w
        else:
            d.pop(e, None)


def _pack(acc):
    out = []
    for mono, c in acc.items():
        c = {e: v for e, v in c.items() if v}
        if c:
            out.append((mono, c))
    return tuple(out)


class PBWKernel:
    """Normal-form multiplication in O_q(M_mn), or O_{q^-1}(M_mn) when ``qinv``."""

    def __init__(self, m, n, qinv=False, memo_limit=0):
        self.m = m
        self.n = n
        self.qinv = bool(qinv)
        self.memo_limit = memo_limit
        sign = 1 if qinv else -1
        # X_kl X_ij (same row or column) -> q^-1 X_ij X_kl
        self._scale = {sign: 1}
        # X_kl X_ij (i<k, j<l) correction: -(q - q^-1) X_il X_kj
        self._corr = {-sign: -1, sign: 1}
        self._insert_memo = {}
        self._mono_memo = {}

    def cache_size(self):
        return len(self._insert_memo) + len(self._mono_memo)

    def clear(self):
        self._insert_memo.clear()
        self._mono_memo.clear()

    def _rule(self, h, g):
        n = self.n
        k, l = divmod(h, n)
        i, j = divmod(g, n)
        if i == k or j == l:
            return ((self._scale, g, h),)
        if j > l:
            return ((_ONE, g, h),)
        return ((_ONE, g, h), (self._corr, i * n + l, k * n + j))

    def insert(self, mono, g):
        """Normal form of ``mono * X_g`` as a tuple of (monomial, coeff)."""
        if not mono or mono[-1] <= g:
            return ((mono + (g,), _ONE),)
        key = (mono, g)
        hit = self._insert_memo.get(key)
        if hit is not None:
            return hit
        h = mono[-1]
        prefix = mono[:-1]
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

    def mul_mono(self, a, b):
        if not b:
            return ((a, _ONE),)
        if not a or a[-1] <= b[0]:
            return ((a + b, _ONE),)
        key = (a, b)
        hit = self._mono_memo.get(key)
        if hit is not None:
            return hit
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

    def mul(self, A, B):
        """Product of two raw elements ``{mono: {exp: coeff}}``."""
        acc = {}
        for ma, ca in A.items():
            for mb, cb in B.items():
                cab = _lmul(ca, cb)
                for mm, cp in self.mul_mono(ma, mb):
                    _acc(acc, mm, _lmul(cab, cp))
        return {mono: c for mono, c in _pack(acc)}

    def word(self, w):
        """Normal form of the word X_{w[0]} X_{w[1]} ..."""
        cur = {(): _ONE}
        for g in w:
            acc = {}
            for mono, c in cur.items():
                for m2, c2 in self.insert(mono, g):
                    _acc(acc, m2, _lmul(c, c2))
            cur = {mono: c for mono, c in _pack(acc)}
        return cur

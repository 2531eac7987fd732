"""Independent reference implementations used by the tests.

Nothing here imports the kernel, the linear solver or the coefficient
field: coefficients are sympy expressions and normal forms come from a
naive word rewriter written straight from the defining relations.
"""

from itertools import combinations, permutations, product

import sympy

q = sympy.Symbol("q")


def scalar_to_sympy(s):
    num = sum(sympy.Rational(c.numerator, c.denominator) * q**e for e, c in s.num.terms.items())
    den = sum(sympy.Rational(c.numerator, c.denominator) * q**e for e, c in s.den.terms.items())
    return sympy.cancel(num / den)


def same(a, b):
    return sympy.cancel(a - b) == 0


def _rewrite(x, y, p):
    """Rewrite the adjacent pair X_x X_y, x > y in (row, col) order, at parameter p.

    Returns [(coeff, word)] with each word of length 2.
    """
    (k, l), (i, j) = x, y
    if i == k:  # same row, j < l: X_ij X_il = p X_il X_ij
        return [(1 / p, (y, x))]
    if j == l:  # same column, i < k
        return [(1 / p, (y, x))]
    if j > l:  # X_il' X_kj' with i < k and column of upper > lower: they commute
        return [(1, (y, x))]
    # i < k, j < l: X_kl X_ij = X_ij X_kl - (p - 1/p) X_il X_kj
    return [(1, (y, x)), (-(p - 1 / p), ((i, l), (k, j)))]


def naive_normal_form(words, p=q):
    """``words``: {tuple of (i, j): coeff}. Returns the same shape in PBW order."""
    work = {tuple(w): c for w, c in words.items()}
    done = {}
    while work:
        w, c = work.popitem()
        pos = next((t for t in range(len(w) - 1) if w[t] > w[t + 1]), None)
        if pos is None:
            done[w] = done.get(w, 0) + c
            continue
        for coeff, pair in _rewrite(w[pos], w[pos + 1], p):
            nw = w[:pos] + pair + w[pos + 2:]
            work[nw] = work.get(nw, 0) + c * coeff
    out = {}
    for w, c in done.items():
        c = sympy.cancel(c)
        if c != 0:
            out[w] = c
    return out


def inversions(seq):
    return sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])


def naive_minor(rows, cols, p=q):
    out = {}
    for perm in permutations(range(len(cols))):
        w = tuple((r, cols[s]) for r, s in zip(rows, perm))
        out[w] = (-p) ** inversions(perm)
    return out


def word_product(a, b):
    out = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            out[wa + wb] = out.get(wa + wb, 0) + ca * cb
    return out


def naive_tableau(tab, m, p=q):
    acc = {(): sympy.Integer(1)}
    rows = tuple(range(1, m + 1))
    for r in tab:
        acc = naive_normal_form(word_product(acc, naive_minor(rows, r, p)), p)
    return acc


def naive_grass(terms, m, p=q):
    """``terms``: {tableau: sympy coeff} -> normal form dict."""
    acc = {}
    for tab, c in terms.items():
        for w, v in naive_tableau(tab, m, p).items():
            acc[w] = acc.get(w, 0) + c * v
    return {w: sympy.cancel(v) for w, v in acc.items() if sympy.cancel(v) != 0}


def grass_to_sympy_terms(g):
    return {t: scalar_to_sympy(c) for t, c in g.terms.items()}


def matalg_to_words(a):
    amb = a.ambient
    return {tuple(amb.index(g) for g in mono): scalar_to_sympy(c) for mono, c in a.terms.items()}


def dicts_equal(a, b):
    keys = set(a) | set(b)
    return all(same(a.get(k, 0), b.get(k, 0)) for k in keys)


def star_leq(a, b):
    return all(x <= y for x, y in zip(a, b))


def brute_hilbert(m, n, d):
    gens = list(combinations(range(1, n + 1), m))
    return sum(1 for seq in product(gens, repeat=d) if all(star_leq(a, b) for a, b in zip(seq, seq[1:])))


def brute_covers(A, n):
    gens = list(combinations(range(1, n + 1), len(A)))
    above = [B for B in gens if B != tuple(A) and star_leq(A, B)]
    return sorted(B for B in above if not any(C != B and star_leq(C, B) for C in above))

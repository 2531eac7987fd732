"""The componentwise order on m-subsets of {1..n}: covers, paths, Hilbert counts."""

from functools import lru_cache
from itertools import combinations, product

from .grassmann import star_leq

__all__ = [
    "all_maximal_paths",
    "covers",
    "covers_bruteforce",
    "finite_differences",
    "generators",
    "gk_dimension",
    "growth_degree",
    "hasse_dot",
    "hasse_edges",
    "hilbert_dimension",
    "hilbert_dimension_bruteforce",
    "maximal_path_length",
    "poset_axioms_hold",
]


@lru_cache(maxsize=None)
def generators(m, n):
    return tuple(combinations(range(1, n + 1), m))


def covers(A, n):
    """Upper covers of A: raise one entry by one where that stays strictly increasing."""
    A = tuple(A)
    out = []
    for i, a in enumerate(A):
        nxt = A[i + 1] if i + 1 < len(A) else n + 1
        if a + 1 < nxt:
            out.append(A[:i] + (a + 1,) + A[i + 1:])
    return sorted(out)


def covers_bruteforce(A, n):
    A = tuple(A)
    gens = generators(len(A), n)
    above = [B for B in gens if B != A and star_leq(A, B)]
    return sorted(
        B for B in above
        if not any(C != B and star_leq(C, B) for C in above)
    )


def poset_axioms_hold(m, n):
    gens = generators(m, n)
    for a in gens:
        if not star_leq(a, a):
            return False
    for a, b in product(gens, repeat=2):
        if a != b and star_leq(a, b) and star_leq(b, a):
            return False
    for a, b, c in product(gens, repeat=3):
        if star_leq(a, b) and star_leq(b, c) and not star_leq(a, c):
            return False
    return True


def _bottom_top(m, n):
    return tuple(range(1, m + 1)), tuple(range(n - m + 1, n + 1))


def maximal_path_length(m, n):
    """Nodes on a longest saturated chain from bottom to top, by search."""
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    bottom, _ = _bottom_top(m, n)

    @lru_cache(maxsize=None)
    def longest(A):
        ups = covers(A, n)
        return 1 + max((longest(B) for B in ups), default=0)

    return longest(bottom)


def all_maximal_paths(m, n):
    """Every saturated chain from bottom to top (exhaustive; desk scale only)."""
    bottom, top = _bottom_top(m, n)
    out = []

    def walk(path):
        ups = covers(path[-1], n)
        if not ups:
            out.append(tuple(path))
            return
        for B in ups:
            path.append(B)
            walk(path)
            path.pop()

    walk([bottom])
    return out


def hilbert_dimension(m, n, d):
    """Number of weakly increasing chains J1 <=* ... <=* Jd (preferred tableaux with d rows)."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    gens = generators(m, n)
    if d == 0:
        return 1
    ways = [1] * len(gens)
    below = [[i for i, a in enumerate(gens) if star_leq(a, b)] for b in gens]
    for _ in range(d - 1):
        ways = [sum(ways[i] for i in below[j]) for j in range(len(gens))]
    return sum(ways)


def hilbert_dimension_bruteforce(m, n, d):
    gens = generators(m, n)
    return sum(
        1 for seq in product(gens, repeat=d)
        if all(star_leq(a, b) for a, b in zip(seq, seq[1:]))
    )


def finite_differences(values):
    rows = [list(values)]
    while len(rows[-1]) > 1:
        r = rows[-1]
        rows.append([b - a for a, b in zip(r, r[1:])])
    return rows


def growth_degree(m, n, dmax=None):
    """Degree of the polynomial interpolating hilbert_dimension(m, n, 1..dmax)."""
    alpha = m * (n - m) + 1
    dmax = dmax or alpha + 2
    rows = finite_differences([hilbert_dimension(m, n, d) for d in range(1, dmax + 1)])
    deg = None
    for k, r in enumerate(rows):
        if any(r):
            deg = k
    return deg


def gk_dimension(m, n):
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    return m * (n - m) + 1


def hasse_edges(m, n):
    return sorted((a, b) for a in generators(m, n) for b in covers(a, n))


def _label(A):
    return "".join(str(a) for a in A) if max(A, default=0) < 10 else "_".join(map(str, A))


def hasse_dot(m, n):
    lines = [f"digraph G_{m}_{n} {{", "  rankdir=BT;"]
    for a in generators(m, n):
        lines.append(f'  "{_label(a)}";')
    for a, b in hasse_edges(m, n):
        lines.append(f'  "{_label(a)}" -> "{_label(b)}";')
    lines.append("}")
    return "\n".join(lines)

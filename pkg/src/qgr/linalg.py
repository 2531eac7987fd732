"""Exact linear algebra over Q(q) for sparse column systems.

Pivot rows are located by elimination at a random point modulo a large
prime; the solve itself and the final residual check are exact, so the
modular step only affects speed.
"""

from __future__ import annotations

import random

from .coeff import ONE, ZERO, Scalar, as_scalar

__all__ = ["InconsistentSystem", "exact_rank", "solve_columns"]

_P = (1 << 61) - 1
_rng = random.Random(20011)


class InconsistentSystem(ArithmeticError):
    """The right-hand side is not in the span of the columns."""


def _mod_vec(col, rows, x):
    return [as_scalar(col[r]).eval_mod(x, _P) if r in col else 0 for r in rows]


def _modular_pivots(columns, rows, x):
    """Row indices giving a maximal nonsingular square block at q = x (mod p)."""
    k = len(columns)
    mat = [_mod_vec(c, rows, x) for c in columns]  # column-major
    # transpose to row-major for elimination on columns
    work = [[mat[j][i] for j in range(k)] for i in range(len(rows))]
    pivots_rows, pivot_cols = [], []
    basis = []  # reduced rows with leading column
    for i, row in enumerate(work):
        v = list(row)
        for lead, brow in basis:
            f = v[lead]
            if f:
                v = [(a - f * b) % _P for a, b in zip(v, brow)]
        lead = next((j for j, a in enumerate(v) if a), None)
        if lead is None:
            continue
        inv = pow(v[lead], -1, _P)
        v = [a * inv % _P for a in v]
        basis.append((lead, v))
        pivots_rows.append(i)
        pivot_cols.append(lead)
        if len(basis) == k:
            break
    return pivots_rows, pivot_cols


def _gauss_solve(a, b):
    """Solve a square system over Scalars; returns None when singular."""
    n = len(a)
    m = [list(row) + [rhs] for row, rhs in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = ONE / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[col])]
    return [row[n] for row in m]


def _gauss_rank(rows):
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = ONE / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _row_keys(columns, target=None):
    keys = set()
    for c in columns:
        keys.update(c)
    if target:
        keys.update(target)
    return sorted(keys)


def solve_columns(columns, target):
    """Coefficients x with sum x_i * columns[i] == target, exactly.

    ``columns`` and ``target`` are sparse maps row -> Scalar. Raises
    InconsistentSystem when no solution exists; the columns must be
    linearly independent.
    """
    k = len(columns)
    if not target:
        return [ZERO] * k
    if k == 0:
        raise InconsistentSystem("nonzero target with no columns")
    rows = _row_keys(columns, target)
    sel = None
    for _ in range(4):
        x = _rng.randrange(2, _P - 1)
        try:
            prow, _ = _modular_pivots(columns, rows, x)
        except ZeroDivisionError:
            continue
        if len(prow) == k:
            sel = [rows[i] for i in prow]
            break
    if sel is None:
        # columns dependent at every sampled point: treat as exact failure
        if exact_rank(columns) < k:
            raise InconsistentSystem("columns are linearly dependent")
        sel = _exact_pivot_rows(columns, rows)
    a = [[as_scalar(columns[j].get(r, ZERO)) for j in range(k)] for r in sel]
    b = [as_scalar(target.get(r, ZERO)) for r in sel]
    x = _gauss_solve(a, b)
    if x is None:
        raise InconsistentSystem("selected block is singular")
    for r in rows:
        acc = -as_scalar(target.get(r, ZERO))
        for j in range(k):
            v = columns[j].get(r)
            if v is not None and x[j]:
                acc = acc + x[j] * as_scalar(v)
        if acc:
            raise InconsistentSystem(f"residual nonzero at row {r!r}")
    return x


def _exact_pivot_rows(columns, rows):
    k = len(columns)
    chosen = []
    for r in rows:
        trial = chosen + [r]
        mat = [[as_scalar(columns[j].get(rr, ZERO)) for j in range(k)] for rr in trial]
        if _gauss_rank(mat) == len(trial):
            chosen = trial
            if len(chosen) == k:
                return chosen
    raise InconsistentSystem("columns are linearly dependent")


def exact_rank(columns):
    """Rank over Q(q) of sparse column vectors."""
    k = len(columns)
    if k == 0:
        return 0
    rows = _row_keys(columns)
    x = _rng.randrange(2, _P - 1)
    try:
        prow, _ = _modular_pivots(columns, rows, x)
    except ZeroDivisionError:
        prow = []
    if len(prow) == k:
        # certify with an exact computation on the selected block
        block = [[as_scalar(columns[j].get(rows[i], ZERO)) for j in range(k)] for i in prow]
        if _gauss_rank(block) == k:
            return k
    mat = [[as_scalar(c.get(r, ZERO)) for c in columns] for r in rows]
    return _gauss_rank(mat)

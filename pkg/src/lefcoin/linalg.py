"""Dense exact linear algebra over a coefficient field.

Matrices are numpy arrays with dtype=object whose entries are field
scalars (Fraction or ModP); numpy is used purely as a convenient 2-d
container with matmul.  Every routine takes the field as its first
argument and performs exact arithmetic, no pivoting heuristics beyond
"first nonzero wins" so results are deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .fields import Field, FieldError, ModP


class LinAlgError(ValueError):
    pass


def matrix(field: Field, rows: Sequence[Sequence]) -> np.ndarray:
    """Build an object-dtype matrix of field scalars from nested sequences."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    out = np.empty((nrows, ncols), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != ncols:
            raise LinAlgError("ragged rows")
        for j, v in enumerate(row):
            out[i, j] = field.of(v)
    return out


def zeros(field: Field, nrows: int, ncols: int) -> np.ndarray:
    out = np.empty((nrows, ncols), dtype=object)
    out[...] = field.zero
    return out


def identity(field: Field, n: int) -> np.ndarray:
    out = zeros(field, n, n)
    for i in range(n):
        out[i, i] = field.one
    return out


def vector(field: Field, entries: Iterable) -> np.ndarray:
    vals = [field.of(v) for v in entries]
    out = np.empty(len(vals), dtype=object)
    for i, v in enumerate(vals):
        out[i] = v
    return out


def zero_vector(field: Field, n: int) -> np.ndarray:
    out = np.empty(n, dtype=object)
    out[...] = field.zero
    return out


def eq(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape != b.shape:
        return False
    return all(x == y for x, y in zip(a.flat, b.flat))


def is_zero(a: np.ndarray) -> bool:
    return all(not bool(x) for x in a.flat)


def rref(field: Field, a: np.ndarray):
    """Reduced row-echelon form.

    Returns (r, pivots, rank) where pivots lists the pivot column of each
    nonzero row in order.  The pivot for each column is the first row with
    a nonzero entry, which keeps the reduction fully deterministic.
    """
    r = a.copy()
    nrows, ncols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        sel = None
        for i in range(row, nrows):
            if r[i, col] != field.zero:
                sel = i
                break
        if sel is None:
            continue
        if sel != row:
            r[[row, sel], :] = r[[sel, row], :]
        pivot = r[row, col]
        if pivot != field.one:
            inv = field.one / pivot
            for j in range(col, ncols):
                r[row, j] = r[row, j] * inv
        for i in range(nrows):
            if i != row and r[i, col] != field.zero:
                factor = r[i, col]
                for j in range(col, ncols):
                    r[i, j] = r[i, j] - factor * r[row, j]
        pivots.append(col)
        row += 1
    return r, pivots, len(pivots)


def rank(field: Field, a: np.ndarray) -> int:
    return rref(field, a)[2]


def kernel_basis(field: Field, a: np.ndarray) -> np.ndarray:
    """Columns spanning the null space of `a`, in free-column order."""
    nrows, ncols = a.shape
    r, pivots, rk = rref(field, a)
    free = [j for j in range(ncols) if j not in set(pivots)]
    out = zeros(field, ncols, len(free))
    for idx, j in enumerate(free):
        out[j, idx] = field.one
        for row_i, col in enumerate(pivots):
            out[col, idx] = -r[row_i, j]
    return out


def solve_matrix(field: Field, a: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
    """Solve a @ x = b columnwise; returns None when inconsistent.

    Free variables are set to zero, so the solution is deterministic.
    """
    nrows, ncols = a.shape
    if b.ndim == 1:
        b = b.reshape(nrows, 1)
    if b.shape[0] != nrows:
        raise LinAlgError("shape mismatch")
    aug = np.hstack([a, b])
    r, pivots, _ = rref(field, aug)
    for col in pivots:
        if col >= ncols:
            return None
    x = zeros(field, ncols, b.shape[1])
    for row_i, col in enumerate(pivots):
        for j in range(b.shape[1]):
            x[col, j] = r[row_i, ncols + j]
    return x


def solve(field: Field, a: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
    x = solve_matrix(field, a, b.reshape(-1, 1) if b.ndim == 1 else b)
    if x is None:
        return None
    return x[:, 0] if b.ndim == 1 else x


def invert(field: Field, a: np.ndarray) -> np.ndarray:
    nrows, ncols = a.shape
    if nrows != ncols:
        raise LinAlgError("cannot invert a %dx%d matrix" % (nrows, ncols))
    aug = np.hstack([a, identity(field, nrows)])
    r, pivots, rk = rref(field, aug)
    if rk < nrows or any(p >= nrows for p in pivots):
        raise LinAlgError("matrix is singular")
    return r[:, nrows:]


def _simplex_phase1(rows: list[list[Fraction]], rhs: list[Fraction]) -> Optional[list[Fraction]]:
    """Find x >= 0 with rows @ x = rhs via an exact phase-1 simplex.

    Bland's rule on both the entering and leaving choices rules out
    cycling, so termination is guaranteed.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    if m == 0:
        return [Fraction(0)] * n
    tab = []
    for i in range(m):
        row = list(rows[i])
        if rhs[i] < 0:
            row = [-v for v in row]
            bi = -rhs[i]
        else:
            bi = rhs[i]
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        tab.append(row + art + [bi])
    basis = [n + i for i in range(m)]
    width = n + m + 1
    obj = [Fraction(0)] * width
    for i in range(m):
        for j in range(width):
            obj[j] += tab[i][j]
    for j in range(n, n + m):
        obj[j] -= Fraction(1)

    while True:
        enter = None
        for j in range(n + m):
            if obj[j] > 0:
                enter = j
                break
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            coef = tab[i][enter]
            if coef > 0:
                ratio = tab[i][-1] / coef
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            raise LinAlgError("phase-1 objective unbounded")
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [v - f * w for v, w in zip(tab[i], tab[leave])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [v - f * w for v, w in zip(obj, tab[leave])]
        basis[leave] = enter

    if obj[-1] != 0:
        return None
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = tab[i][-1]
    return x


def linear_feasibility(
    field: Field,
    eq_matrix: np.ndarray,
    rhs: np.ndarray,
    nonneg: Iterable[int],
) -> Optional[np.ndarray]:
    """Solve eq_matrix @ x = rhs with x[i] >= 0 for i in nonneg, exactly.

    Only meaningful over an ordered field, so prime fields are rejected.
    Returns a witness vector or None when the system is infeasible.
    """
    if not field.is_rational:
        raise FieldError("feasibility queries need an ordered field; got %s" % field.token)
    for v in list(eq_matrix.flat) + list(np.asarray(rhs).flat):
        if isinstance(v, ModP):
            raise FieldError("feasibility queries need rational entries")
    m, n = eq_matrix.shape
    nonneg = set(nonneg)
    for i in nonneg:
        if not 0 <= i < n:
            raise LinAlgError("nonneg index %d out of range" % i)
    # Split free variables into differences of nonnegative ones.
    cols: list[tuple[int, int]] = []
    for j in range(n):
        cols.append((j, 1))
        if j not in nonneg:
            cols.append((j, -1))
    rows = []
    for i in range(m):
        rows.append([Fraction(eq_matrix[i, j]) * s for (j, s) in cols])
    rhs_list = [Fraction(v) for v in np.asarray(rhs).flat]
    if len(rhs_list) != m:
        raise LinAlgError("shape mismatch")
    sol = _simplex_phase1(rows, rhs_list)
    if sol is None:
        return None
    x = [Fraction(0)] * n
    for val, (j, s) in zip(sol, cols):
        x[j] += val if s > 0 else -val
    out = np.empty(n, dtype=object)
    for j in range(n):
        out[j] = x[j]
    return out

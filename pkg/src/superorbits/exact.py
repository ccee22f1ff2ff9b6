"""Exact linear algebra over the rationals.

Dense matrices are plain nested lists (or numpy object arrays) of ints and
Fractions. Sparse vectors and matrices are dicts keyed by index or by
``(row, col)`` pairs. Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Any, Hashable, Iterable, Mapping, Sequence

import numpy as np

Scalar = int | Fraction
SparseVec = dict[Hashable, Scalar]
SparseMat = dict[tuple[int, int], Scalar]


def _as_rows(matrix: Any) -> list[list[Scalar]]:
    if isinstance(matrix, np.ndarray):
        if matrix.ndim != 2:
            raise ValueError("expected a 2-d matrix")
        return [[_exact(v) for v in row] for row in matrix.tolist()]
    return [[_exact(v) for v in row] for row in matrix]


def _exact(value: Any) -> Scalar:
    if isinstance(value, (bool, np.bool_)):
        return int(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"non-exact entry {value!r} of type {type(value).__name__}")


def integer_rows(matrix: Any) -> list[list[int]]:
    """Scale each row by the lcm of its denominators."""
    out = []
    for row in _as_rows(matrix):
        den = 1
        for v in row:
            if isinstance(v, Fraction):
                den = lcm(den, v.denominator)
        out.append([int(v * den) for v in row])
    return out


def rank(matrix: Any) -> int:
    """Exact rank by fraction-free (Bareiss) elimination."""
    rows = [r for r in integer_rows(matrix) if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    nrows = len(rows)
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        prow = rows[r]
        for i in range(r + 1, nrows):
            row = rows[i]
            a = row[c]
            if a:
                rows[i] = [0] * (c + 1) + [(p * row[j] - a * prow[j]) // prev for j in range(c + 1, ncols)]
            elif p != prev:
                rows[i] = [0] * (c + 1) + [(p * row[j]) // prev for j in range(c + 1, ncols)]
        prev = p
        r += 1
    return r


def kernel_dim(matrix: Any, ncols: int | None = None) -> int:
    rows = _as_rows(matrix)
    width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    return width - (rank(rows) if rows else 0)


def sparse_rank(mat: Mapping[tuple[int, int], Scalar], nrows: int, ncols: int) -> int:
    dense = [[0] * ncols for _ in range(nrows)]
    for (i, j), v in mat.items():
        dense[i][j] = v
    return rank(dense)


def inverse(matrix: Any) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over Fractions."""
    rows = _as_rows(matrix)
    n = len(rows)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [v * inv for v in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def normalize(value: Scalar) -> Scalar:
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def dense_to_sparse(matrix: Any) -> SparseMat:
    return {
        (i, j): normalize(v)
        for i, row in enumerate(_as_rows(matrix))
        for j, v in enumerate(row)
        if v != 0
    }


def sparse_to_dense(mat: Mapping[tuple[int, int], Scalar], nrows: int, ncols: int | None = None) -> np.ndarray:
    ncols = nrows if ncols is None else ncols
    out = np.zeros((nrows, ncols), dtype=object)
    out[:, :] = 0
    for (i, j), v in mat.items():
        out[i, j] = v
    return out


def sp_add(*terms: tuple[Scalar, Mapping[Hashable, Scalar]]) -> dict:
    """Linear combination of sparse objects given as (coefficient, sparse) pairs."""
    out: dict = {}
    for coeff, vec in terms:
        if coeff == 0:
            continue
        for key, v in vec.items():
            out[key] = out.get(key, 0) + coeff * v
    return {k: normalize(v) for k, v in out.items() if v != 0}


def sp_matmul(a: Mapping[tuple[int, int], Scalar], b: Mapping[tuple[int, int], Scalar]) -> SparseMat:
    by_row: dict[int, list[tuple[int, Scalar]]] = {}
    for (k, j), v in b.items():
        by_row.setdefault(k, []).append((j, v))
    out: dict[tuple[int, int], Scalar] = {}
    for (i, k), v in a.items():
        for j, w in by_row.get(k, ()):
            out[(i, j)] = out.get((i, j), 0) + v * w
    return {k: normalize(v) for k, v in out.items() if v != 0}


def sp_commutator(a: SparseMat, b: SparseMat) -> SparseMat:
    return sp_add((1, sp_matmul(a, b)), (-1, sp_matmul(b, a)))


def sp_anticommutator(a: SparseMat, b: SparseMat) -> SparseMat:
    return sp_add((1, sp_matmul(a, b)), (1, sp_matmul(b, a)))


def sp_trace_product(a: Mapping[tuple[int, int], Scalar], b: Mapping[tuple[int, int], Scalar]) -> Scalar:
    """tr(ab) without forming the product."""
    return normalize(sum((v * b.get((j, i), 0) for (i, j), v in a.items()), 0))


def sp_transpose(a: Mapping[tuple[int, int], Scalar]) -> SparseMat:
    return {(j, i): v for (i, j), v in a.items()}


def sp_embed(a: Mapping[tuple[int, int], Scalar], row: int, col: int) -> SparseMat:
    return {(i + row, j + col): v for (i, j), v in a.items()}


def kron(a: Any, b: Any) -> list[list[Scalar]]:
    ra, rb = _as_rows(a), _as_rows(b)
    return [[x * y for x in row_a for y in row_b] for row_a in ra for row_b in rb]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Any, b: Any) -> list[list[Scalar]]:
    ra, rb = _as_rows(a), _as_rows(b)
    cols = list(zip(*rb)) if rb else []
    return [[normalize(sum((x * y for x, y in zip(row, col)), 0)) for col in cols] for row in ra]


def matrix_power_ranks(matrix: Any) -> list[int]:
    """[rank(x^0), rank(x^1), ...] until the rank stops changing."""
    rows = _as_rows(matrix)
    n = len(rows)
    ranks = [n]
    power = rows
    while True:
        rk = rank(power) if n else 0
        ranks.append(rk)
        if rk == ranks[-2] or rk == 0:
            return ranks
        power = matmul(power, rows)


class CoordinateSystem:
    """Coordinates of sparse vectors with respect to a fixed independent family.

    The family is brought to reduced row-echelon form once. Each echelon row
    has a pivot key where it is 1 and every other row vanishes, so the
    coordinates of a vector in the span can be read off its pivot entries.
    A residual check rejects vectors outside the span.
    """

    def __init__(self, basis: Sequence[Mapping[Hashable, Scalar]]):
        self.size = len(basis)
        self._pivots: list[Hashable] = []
        self._rows: list[dict[Hashable, Fraction]] = []
        self._combos: list[dict[int, Fraction]] = []
        for idx, vec in enumerate(basis):
            row = {k: Fraction(v) for k, v in vec.items() if v != 0}
            combo: dict[int, Fraction] = {idx: Fraction(1)}
            for p, erow, ecombo in zip(self._pivots, self._rows, self._combos):
                f = row.get(p)
                if f:
                    _axpy(row, -f, erow)
                    _axpy(combo, -f, ecombo)
            if not row:
                raise ValueError(f"basis vector {idx} is linearly dependent on earlier ones")
            pivot = min(row, key=_sort_key)
            inv = 1 / row[pivot]
            row = {k: v * inv for k, v in row.items()}
            combo = {k: v * inv for k, v in combo.items()}
            for erow, ecombo in zip(self._rows, self._combos):
                f = erow.get(pivot)
                if f:
                    _axpy(erow, -f, row)
                    _axpy(ecombo, -f, combo)
            self._pivots.append(pivot)
            self._rows.append(row)
            self._combos.append(combo)
        self._pivot_index = {p: i for i, p in enumerate(self._pivots)}

    def coords(self, vec: Mapping[Hashable, Scalar]) -> list[Scalar] | None:
        """Coordinates of ``vec``, or None if it lies outside the span."""
        residual = {k: Fraction(v) for k, v in vec.items() if v != 0}
        out: dict[int, Fraction] = {}
        for key, value in list(residual.items()):
            i = self._pivot_index.get(key)
            if i is None:
                continue
            _axpy(out, value, self._combos[i])
        # vec is in the span iff it equals the combination of echelon rows
        # weighted by its own pivot entries
        recon: dict[Hashable, Fraction] = {}
        for key, value in vec.items():
            i = self._pivot_index.get(key)
            if i is not None and value != 0:
                _axpy(recon, Fraction(value), self._rows[i])
        if recon != residual:
            return None
        dense: list[Scalar] = [0] * self.size
        for i, v in out.items():
            dense[i] = normalize(v)
        return dense


def _axpy(target: dict, alpha: Fraction, source: Mapping) -> None:
    for k, v in source.items():
        nv = target.get(k, 0) + alpha * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


def _sort_key(key: Hashable) -> tuple:
    return key if isinstance(key, tuple) else (key,)


def as_fraction_array(rows: Iterable[Iterable[Scalar]]) -> np.ndarray:
    data = [[normalize(v) for v in row] for row in rows]
    out = np.empty((len(data), len(data[0]) if data else 0), dtype=object)
    for i, row in enumerate(data):
        for j, v in enumerate(row):
            out[i, j] = v
    return out

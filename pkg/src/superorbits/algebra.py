"""Matrix realizations of Lie superalgebras and the odd form matrix M(g).

Every realizable family is built as a pair of bases inside an ambient matrix
space: even elements are block-diagonal, odd elements block-off-diagonal, and
the super-bracket is the commutator or anticommutator of matrices. GAMMA has
no ambient odd space; its odd part is the abstract tensor cube of the
2-dimensional sl(2)-module, with the odd-odd bracket written in terms of the
symplectic form psi and the symmetric map pi.

All structure constants are exact (ints and Fractions).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Any, Mapping, Sequence

import numpy as np

from . import exact
from .errors import InvalidLabel, JacobiFailure, NotInEvenPart, NotNilpotent, UnsupportedFamily
from .exact import CoordinateSystem, Scalar, SparseMat, normalize, sp_add, sp_matmul
from .families import AlgebraSpec, Family, OrbitLabel, check_label
from .partitions import Partition, jordan_matrix

__all__ = [
    "SuperAlgebra",
    "GZeroElement",
    "OddFormMatrix",
    "build_algebra",
    "form_matrix",
    "evaluate_form",
    "orbit_representative",
    "jordan_type",
    "centralizer_dims",
    "jacobi_check",
    "osp_adapted_grams",
    "factor_blocks",
]

CoeffVec = dict[int, Scalar]


@dataclass(frozen=True, eq=False)
class SuperAlgebra:
    """A concrete superalgebra with exact structure tables.

    ``bracket_odd[(i, j)]`` is the sparse coefficient vector of [v_i, v_j]
    over the even basis, stored for both orders. ``odd_action[k]`` is the
    matrix of ad(e_k) on g1 in odd coordinates and ``even_action[k]`` the
    matrix of ad(e_k) on g0, both as sparse ``{(row, col): value}`` dicts.
    """

    spec: AlgebraSpec
    ambient_size: int
    even_basis: tuple[SparseMat, ...]
    even_labels: tuple[str, ...]
    odd_basis: tuple[SparseMat, ...] | None
    odd_labels: tuple[str, ...]
    bracket_odd: Mapping[tuple[int, int], CoeffVec]
    odd_action: tuple[SparseMat, ...]
    even_action: tuple[SparseMat, ...]
    gram: tuple[tuple[Scalar, ...], ...]
    metadata: Mapping[str, Any] = field(default_factory=dict)
    _coords: CoordinateSystem | None = field(default=None, repr=False)

    @property
    def dim_even(self) -> int:
        return len(self.even_basis)

    @property
    def dim_odd(self) -> int:
        return len(self.odd_labels)

    def even_matrix(self, k: int) -> np.ndarray:
        return exact.sparse_to_dense(self.even_basis[k], self.ambient_size)

    def even_coords(self, matrix: Any) -> list[Scalar]:
        sparse = matrix if isinstance(matrix, dict) else exact.dense_to_sparse(matrix)
        coords = self._coords.coords(sparse)
        if coords is None:
            raise NotInEvenPart(f"matrix is not in the even part of {self.spec}")
        return coords

    def element(self, matrix: Any) -> GZeroElement:
        coords = self.even_coords(matrix)
        return GZeroElement(_object_array(matrix, self.ambient_size), self.spec, tuple(coords))

    def element_from_coeffs(self, coeffs: Sequence[Scalar]) -> GZeroElement:
        if len(coeffs) != self.dim_even:
            raise NotInEvenPart("coefficient vector has the wrong length")
        mat = sp_add(*((c, b) for c, b in zip(coeffs, self.even_basis)))
        return GZeroElement(exact.sparse_to_dense(mat, self.ambient_size), self.spec, tuple(normalize(c) for c in coeffs))

    def zero(self) -> GZeroElement:
        return self.element_from_coeffs([0] * self.dim_even)


@dataclass(frozen=True, eq=False)
class GZeroElement:
    """An even element: its ambient matrix and its even-basis coordinates."""

    matrix: np.ndarray
    spec: AlgebraSpec
    coeffs: tuple[Scalar, ...]

    def preserves_forms(self) -> bool:
        """For OSP: x^t G + G x = 0 on both factors. Always True elsewhere."""
        if self.spec.family is not Family.OSP:
            return True
        g1, g2 = osp_grams(self.spec)
        x1, x2 = factor_blocks(self)
        return _form_defect(x1, g1) and _form_defect(x2, g2)


def _form_defect(x: np.ndarray, gram: Sequence[Sequence[Scalar]]) -> bool:
    g = np.array(gram, dtype=object)
    return not np.any(x.T.dot(g) + g.dot(x))


@dataclass(frozen=True, eq=False)
class OddFormMatrix:
    """M(g) as a (dim g1, dim g1, dim g0) array of even coefficients."""

    entries: np.ndarray
    even_labels: tuple[str, ...]
    odd_labels: tuple[str, ...]

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def entry(self, i: int, j: int) -> tuple[Scalar, ...]:
        return tuple(self.entries[i, j])

    def is_symmetric(self) -> bool:
        return bool(np.all(self.entries == self.entries.transpose(1, 0, 2)))

    def block_is_zero(self, rows: range, cols: range) -> bool:
        return not np.any(self.entries[rows.start:rows.stop, cols.start:cols.stop])

    def symbolic(self, i: int, j: int) -> str:
        terms = []
        for c, name in zip(self.entries[i, j], self.even_labels):
            if c == 0:
                continue
            terms.append(name if c == 1 else f"-{name}" if c == -1 else f"{c}*{name}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


# ---------------------------------------------------------------------------
# small helpers


def _e(i: int, j: int, v: Scalar = 1) -> SparseMat:
    return {(i, j): v}


def _object_array(matrix: Any, size: int) -> np.ndarray:
    if isinstance(matrix, dict):
        return exact.sparse_to_dense(matrix, size)
    arr = np.array(matrix, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = normalize(exact._exact(v))
    return out


def _dense_sparse(rows: Sequence[Sequence[Scalar]]) -> SparseMat:
    return {(i, j): normalize(v) for i, row in enumerate(rows) for j, v in enumerate(row) if v != 0}


def _block(mats: Sequence[Sequence[Sequence[Scalar]]]) -> list[list[Scalar]]:
    size = sum(len(m) for m in mats)
    out = [[0] * size for _ in range(size)]
    off = 0
    for m in mats:
        for i, row in enumerate(m):
            for j, v in enumerate(row):
                out[off + i][off + j] = v
        off += len(m)
    return out


# ---------------------------------------------------------------------------
# orthosymplectic Gram matrices adapted to a nilpotent representative


def _single_form(d: int) -> list[list[int]]:
    """Antidiagonal form S_ij = (-1)^i [i + j = d + 1], 1-based."""
    s = [[0] * d for _ in range(d)]
    for i in range(1, d + 1):
        s[i - 1][d - i] = (-1) ** i
    return s


def _jordan_rows(d: int, above: bool = True) -> list[list[int]]:
    return jordan_matrix(Partition((d,)), "above" if above else "below").tolist()


def _adapted_blocks(mu: Partition, orthogonal: bool):
    """(x, G, first pair block offset) for one factor.

    A single part d uses (J_d, S_d); paired parts use diag(J_d, -J_d^t) with
    the hyperbolic form. In the orthogonal factor odd parts are single and
    even parts come in pairs; in the symplectic factor it is the reverse.
    """
    xs, gs = [], []
    first_pair: tuple[int, int] | None = None
    offset = 0
    counts = mu.multiplicities()
    for d in sorted(counts, reverse=True):
        c = counts[d]
        single = (d % 2 == 1) == orthogonal
        if single:
            for _ in range(c):
                xs.append(_jordan_rows(d))
                gs.append(_single_form(d))
                offset += d
            continue
        if c % 2:
            raise InvalidLabel(f"part {d} of {mu} needs even multiplicity")
        for _ in range(c // 2):
            jd = _jordan_rows(d)
            minus_jt = [[-jd[j][i] for j in range(d)] for i in range(d)]
            xs.append(_block([jd, minus_jt]))
            eps = 1 if orthogonal else -1
            g = [[0] * (2 * d) for _ in range(2 * d)]
            for i in range(d):
                g[i][d + i] = 1
                g[d + i][i] = eps
            gs.append(g)
            if first_pair is None:
                first_pair = (offset, d)
            offset += 2 * d
    return _block(xs), _block(gs), first_pair


def osp_adapted_grams(mu: Partition, nu: Partition) -> tuple[list[list[int]], list[list[int]]]:
    """Gram matrices (symmetric on V1, skew on V2) adapted to the (mu, nu) representative."""
    _, g1, _ = _adapted_blocks(mu, True)
    _, g2, _ = _adapted_blocks(nu, False)
    return g1, g2


def osp_grams(spec: AlgebraSpec):
    if spec.gram1 is not None and spec.gram2 is not None:
        return spec.gram1, spec.gram2
    g1, g2 = osp_adapted_grams(Partition((1,) * spec.m), Partition((1,) * spec.n))
    return (spec.gram1 or g1), (spec.gram2 or g2)


# ---------------------------------------------------------------------------
# family builders: each returns (size, even basis, even labels, odd basis, odd labels, metadata)


def _gl_bases(m: int, n: int, special: bool):
    size = m + n
    i1, i2 = range(m), range(m, size)
    even, elabels = [], []
    for block in (i1, i2):
        for i, j in product(block, block):
            if special and i == j:
                continue
            even.append(_e(i, j))
            elabels.append(f"e{i + 1},{j + 1}")
    if special:
        # traceless-in-total diagonal: consecutive differences inside each
        # block, plus one element bridging the two blocks
        for block in (i1, i2):
            for a, b in zip(block, block[1:]):
                even.append({(a, a): 1, (b, b): -1})
                elabels.append(f"h{a + 1},{b + 1}")
        even.append({(m - 1, m - 1): 1, (m, m): 1})
        elabels.append(f"z{m},{m + 1}")
    odd, olabels = [], []
    for i, k in product(i1, i2):
        odd.append(_e(i, k))
        olabels.append(f"e{i + 1},{k + 1}")
    for j, l in product(i1, i2):
        odd.append(_e(l, j))
        olabels.append(f"e{l + 1},{j + 1}")
    meta = {"odd_plus": (0, m * n), "odd_minus": (m * n, 2 * m * n)}
    return size, even, elabels, odd, olabels, meta


def _osp_bases(spec: AlgebraSpec):
    m, n = spec.m, spec.n
    g1, g2 = osp_grams(spec)
    g1inv, g2inv = exact.inverse(g1), exact.inverse(g2)
    size = m + n
    even, elabels = [], []
    for i in range(m):
        for j in range(i + 1, m):
            mat = {}
            for r in range(m):
                v = g1inv[r][i]
                if v:
                    mat[(r, j)] = normalize(v)
                w = g1inv[r][j]
                if w:
                    mat[(r, i)] = normalize(mat.get((r, i), 0) - w)
            even.append({k: v for k, v in mat.items() if v != 0})
            elabels.append(f"a{i + 1},{j + 1}")
    for i in range(n):
        for j in range(i, n):
            sym = {(i, j): 1, (j, i): 1} if i != j else {(i, i): 1}
            mat = sp_matmul(_dense_sparse(g2inv), sym)
            even.append(exact.sp_embed(mat, m, m))
            elabels.append(f"d{i + 1},{j + 1}")
    odd, olabels = [], []
    for i in range(m):
        for k in range(n):
            # X = [[0, B], [C, 0]] with B = e_ik and C = G2^{-1} B^t G1
            mat: SparseMat = {(i, m + k): 1}
            for r in range(n):
                a = g2inv[r][k]
                if not a:
                    continue
                for c in range(m):
                    b = g1[i][c]
                    if b:
                        mat[(m + r, c)] = normalize(mat.get((m + r, c), 0) + a * b)
            odd.append({key: v for key, v in mat.items() if v != 0})
            olabels.append(f"v{i + 1}*w{k + 1}")
    return size, even, elabels, odd, olabels, {"gram1": g1, "gram2": g2}


def _q_bases(n: int, special: bool):
    size = 2 * n
    even, elabels = [], []
    for i, j in product(range(n), range(n)):
        even.append({(i, j): 1, (n + i, n + j): 1})
        elabels.append(f"e{i + 1},{j + 1}")
    odd, olabels = [], []
    for i, j in product(range(n), range(n)):
        if special and i == j:
            continue
        odd.append({(i, n + j): 1, (n + i, j): 1})
        olabels.append(f"o{i + 1},{j + 1}")
    if special:
        for k in range(n - 1):
            odd.append({(k, n + k): 1, (n + k, k): 1, (k + 1, n + k + 1): -1, (n + k + 1, k + 1): -1})
            olabels.append(f"oh{k + 1}")
    return size, even, elabels, odd, olabels, {}


def _p_bases(n: int):
    big = n + 1
    size = 2 * big
    even, elabels = [], []
    for i, j in product(range(big), range(big)):
        if i != j:
            even.append({(i, j): 1, (big + j, big + i): -1})
            elabels.append(f"e{i + 1},{j + 1}")
    for i in range(big - 1):
        even.append({(i, i): 1, (i + 1, i + 1): -1, (big + i, big + i): -1, (big + i + 1, big + i + 1): 1})
        elabels.append(f"h{i + 1}")
    odd, olabels = [], []
    # skew lower-left block first, then the symmetric upper-right block
    for i in range(big):
        for j in range(i + 1, big):
            odd.append({(big + i, j): 1, (big + j, i): -1})
            olabels.append(f"c{i + 1},{j + 1}")
    n_plus = len(odd)
    for i in range(big):
        for j in range(i, big):
            odd.append({(i, big + j): 1, (j, big + i): 1} if i != j else {(i, big + i): 1})
            olabels.append(f"b{i + 1},{j + 1}")
    return size, even, elabels, odd, olabels, {"odd_plus": (0, n_plus), "odd_minus": (n_plus, len(odd))}


# ---------------------------------------------------------------------------
# GAMMA: g0 = sl(2)^3, g1 = V (x) V (x) V


_SL2 = {"e": {(0, 1): 1}, "h": {(0, 0): 1, (1, 1): -1}, "f": {(1, 0): 1}}
_PSI = ((0, 1), (-1, 0))


def _pi(a: int, b: int) -> dict[str, Scalar]:
    """pi(u_a, u_b) in (e, h, f) coordinates, where pi(u, v)z = psi(v, z)u - psi(z, u)v."""
    mat = [[0, 0], [0, 0]]
    for z in range(2):
        # column z of the 2x2 matrix
        mat[a][z] += _PSI[b][z]
        mat[b][z] -= _PSI[z][a]
    assert mat[0][0] == -mat[1][1]
    return {"e": mat[0][1], "h": mat[0][0], "f": mat[1][0]}


def _gamma_algebra(spec: AlgebraSpec) -> dict:
    sigma = spec.sigma
    size = 6
    even, elabels = [], []
    for factor in range(3):
        for name in ("e", "h", "f"):
            even.append(exact.sp_embed(_SL2[name], 2 * factor, 2 * factor))
            elabels.append(f"{name}{factor + 1}")
    index = {(factor, name): 3 * factor + k for factor in range(3) for k, name in enumerate("ehf")}
    triples = list(product(range(2), repeat=3))
    olabels = ["".join("xy"[t] for t in triple) for triple in triples]
    bracket: dict[tuple[int, int], CoeffVec] = {}
    for i, a in enumerate(triples):
        for j, b in enumerate(triples):
            vec: dict[int, Scalar] = {}
            for factor in range(3):
                others = [t for t in range(3) if t != factor]
                scale = sigma[factor]
                for t in others:
                    scale *= _PSI[a[t]][b[t]]
                if not scale:
                    continue
                for name, c in _pi(a[factor], b[factor]).items():
                    if c:
                        k = index[(factor, name)]
                        vec[k] = vec.get(k, 0) + scale * c
            bracket[(i, j)] = {k: normalize(v) for k, v in vec.items() if v != 0}
    odd_action = []
    for factor in range(3):
        for name in ("e", "h", "f"):
            act: SparseMat = {}
            for col, b in enumerate(triples):
                for (r, c), v in _SL2[name].items():
                    if b[factor] != c:
                        continue
                    target = list(b)
                    target[factor] = r
                    act[(triples.index(tuple(target)), col)] = v
            odd_action.append(act)
    return {
        "size": size,
        "even": even,
        "elabels": elabels,
        "olabels": olabels,
        "bracket": bracket,
        "odd_action": odd_action,
    }


# ---------------------------------------------------------------------------
# assembly


def _even_tables(even: Sequence[SparseMat]):
    coords = CoordinateSystem(even)
    actions = []
    for k, a in enumerate(even):
        act: SparseMat = {}
        for col, b in enumerate(even):
            c = coords.coords(exact.sp_commutator(a, b))
            if c is None:
                raise JacobiFailure(f"even bracket of elements {k},{col} leaves the even part")
            for row, v in enumerate(c):
                if v:
                    act[(row, col)] = v
        actions.append(act)
    gram = tuple(tuple(exact.sp_trace_product(a, b) for b in even) for a in even)
    return coords, tuple(actions), gram


@lru_cache(maxsize=512)
def build_algebra(spec: AlgebraSpec, check: bool = True) -> SuperAlgebra:
    """Construct the realization of ``spec`` and run the structural self-checks."""
    f = spec.family
    if not f.realizable:
        raise UnsupportedFamily(f"{f.value} has no matrix realization in this library")
    if f is Family.GAMMA:
        data = _gamma_algebra(spec)
        coords, even_action, gram = _even_tables(data["even"])
        alg = SuperAlgebra(
            spec=spec,
            ambient_size=data["size"],
            even_basis=tuple(data["even"]),
            even_labels=tuple(data["elabels"]),
            odd_basis=None,
            odd_labels=tuple(data["olabels"]),
            bracket_odd=data["bracket"],
            odd_action=tuple(data["odd_action"]),
            even_action=even_action,
            gram=gram,
            metadata={},
            _coords=coords,
        )
    else:
        if f in (Family.GL, Family.SL):
            size, even, elabels, odd, olabels, meta = _gl_bases(spec.m, spec.n, f is Family.SL)
        elif f is Family.OSP:
            size, even, elabels, odd, olabels, meta = _osp_bases(spec)
        elif f in (Family.Q, Family.SQ):
            size, even, elabels, odd, olabels, meta = _q_bases(spec.n, f is Family.SQ)
        else:
            size, even, elabels, odd, olabels, meta = _p_bases(spec.n)
        coords, even_action, gram = _even_tables(even)
        odd_coords = CoordinateSystem(odd)
        bracket: dict[tuple[int, int], CoeffVec] = {}
        for i, a in enumerate(odd):
            for j in range(i, len(odd)):
                c = coords.coords(exact.sp_anticommutator(a, odd[j]))
                if c is None:
                    raise JacobiFailure(f"odd bracket [{olabels[i]}, {olabels[j]}] leaves the even part")
                vec = {k: v for k, v in enumerate(c) if v}
                bracket[(i, j)] = vec
                bracket[(j, i)] = vec
        odd_action = []
        for k, a in enumerate(even):
            act: SparseMat = {}
            for col, b in enumerate(odd):
                c = odd_coords.coords(exact.sp_commutator(a, b))
                if c is None:
                    raise JacobiFailure(f"[{elabels[k]}, {olabels[col]}] leaves the odd part")
                for row, v in enumerate(c):
                    if v:
                        act[(row, col)] = v
            odd_action.append(act)
        alg = SuperAlgebra(
            spec=spec,
            ambient_size=size,
            even_basis=tuple(even),
            even_labels=tuple(elabels),
            odd_basis=tuple(odd),
            odd_labels=tuple(olabels),
            bracket_odd=bracket,
            odd_action=tuple(odd_action),
            even_action=even_action,
            gram=gram,
            metadata=meta,
            _coords=coords,
        )
    if check:
        jacobi_check(alg)
    return alg


def _combo(coeffs: Mapping[int, Scalar], mats: Sequence[SparseMat]) -> SparseMat:
    return sp_add(*((c, mats[k]) for k, c in coeffs.items()))


def _columns(mat: SparseMat) -> dict[int, dict[int, Scalar]]:
    cols: dict[int, dict[int, Scalar]] = {}
    for (r, c), v in mat.items():
        cols.setdefault(c, {})[r] = v
    return cols


def jacobi_check(alg: SuperAlgebra) -> None:
    """Super-Jacobi identity on all basis triples, bracket symmetry, and a nonsingular form.

    Raises JacobiFailure naming the first failing triple.
    """
    d0, d1 = alg.dim_even, alg.dim_odd
    ad0, rho = alg.even_action, alg.odd_action
    bracket = alg.bracket_odd
    for (i, j), vec in bracket.items():
        if bracket[(j, i)] != vec:
            raise JacobiFailure(f"odd bracket not symmetric at ({i},{j})")
    if exact.rank(alg.gram) != d0:
        raise JacobiFailure("even pairing is degenerate")
    col0 = [_columns(a) for a in ad0]
    struct = [{b: col0[a].get(b, {}) for b in range(d0)} for a in range(d0)]  # [e_a, e_b]
    # even-even-even and even-even-odd: ad and rho are representations
    for a in range(d0):
        for b in range(a + 1, d0):
            c_ab = struct[a][b]
            if exact.sp_commutator(ad0[a], ad0[b]) != _combo(c_ab, ad0):
                raise JacobiFailure(f"even Jacobi fails for ({alg.even_labels[a]}, {alg.even_labels[b]})")
            if exact.sp_commutator(rho[a], rho[b]) != _combo(c_ab, rho):
                raise JacobiFailure(f"even-even-odd Jacobi fails for ({alg.even_labels[a]}, {alg.even_labels[b]})")
    rho_cols = [_columns(r) for r in rho]
    # even-odd-odd: [e_k, [v_i, v_j]] = [[e_k, v_i], v_j] + [v_i, [e_k, v_j]]
    for k in range(d0):
        for i in range(d1):
            for j in range(i, d1):
                lhs = _apply(ad0[k], bracket[(i, j)])
                rhs: dict[int, Scalar] = {}
                for l, v in rho_cols[k].get(i, {}).items():
                    _acc(rhs, v, bracket[(l, j)])
                for l, v in rho_cols[k].get(j, {}).items():
                    _acc(rhs, v, bracket[(i, l)])
                if lhs != _clean(rhs):
                    raise JacobiFailure(
                        f"even-odd-odd Jacobi fails for ({alg.even_labels[k]}, {alg.odd_labels[i]}, {alg.odd_labels[j]})"
                    )
    # odd-odd-odd: [[v_i, v_j], v_l] + cyclic = 0
    for i in range(d1):
        for j in range(i, d1):
            for l in range(j, d1):
                total: dict[int, Scalar] = {}
                for (a, b), c in (((i, j), l), ((j, l), i), ((l, i), j)):
                    for k, coef in bracket[(a, b)].items():
                        _acc(total, coef, rho_cols[k].get(c, {}))
                if _clean(total):
                    raise JacobiFailure(
                        f"odd Jacobi fails for ({alg.odd_labels[i]}, {alg.odd_labels[j]}, {alg.odd_labels[l]})"
                    )


def _apply(mat: SparseMat, vec: Mapping[int, Scalar]) -> dict[int, Scalar]:
    out: dict[int, Scalar] = {}
    for (r, c), v in mat.items():
        x = vec.get(c)
        if x:
            out[r] = out.get(r, 0) + v * x
    return _clean(out)


def _acc(target: dict[int, Scalar], scale: Scalar, vec: Mapping[int, Scalar]) -> None:
    for k, v in vec.items():
        target[k] = target.get(k, 0) + scale * v


def _clean(vec: Mapping[int, Scalar]) -> dict[int, Scalar]:
    return {k: normalize(v) for k, v in vec.items() if v != 0}


# ---------------------------------------------------------------------------
# M(g) and its evaluation


def form_matrix(alg: SuperAlgebra) -> OddFormMatrix:
    d0, d1 = alg.dim_even, alg.dim_odd
    entries = np.zeros((d1, d1, d0), dtype=object)
    for (i, j), vec in alg.bracket_odd.items():
        for k, v in vec.items():
            entries[i, j, k] = v
    return OddFormMatrix(entries, alg.even_labels, alg.odd_labels)


def _coeffs_of(alg: SuperAlgebra, x: GZeroElement | Sequence[Scalar]) -> tuple[Scalar, ...]:
    if isinstance(x, GZeroElement):
        if x.spec != alg.spec:
            raise NotInEvenPart(f"element belongs to {x.spec}, not {alg.spec}")
        return x.coeffs
    coeffs = tuple(x)
    if len(coeffs) != alg.dim_even:
        raise NotInEvenPart("coefficient vector has the wrong length")
    return coeffs


def evaluate_form(alg: SuperAlgebra, x: GZeroElement | Sequence[Scalar]) -> np.ndarray:
    """K_ij = <[v_i, v_j], x> under the trace pairing on g0."""
    coeffs = _coeffs_of(alg, x)
    paired = [sum((g * c for g, c in zip(row, coeffs) if c), 0) for row in alg.gram]
    d1 = alg.dim_odd
    out = np.zeros((d1, d1), dtype=object)
    for (i, j), vec in alg.bracket_odd.items():
        if j < i:
            continue
        val = normalize(sum((v * paired[k] for k, v in vec.items()), 0))
        out[i, j] = val
        out[j, i] = val
    return out


def centralizer_dims(alg: SuperAlgebra, x: GZeroElement | Sequence[Scalar]) -> tuple[int, int]:
    """(dim g0^x, dim g1^x) from exact kernels of ad(x)."""
    coeffs = _coeffs_of(alg, x)
    terms = {k: c for k, c in enumerate(coeffs) if c}
    ad_even = _combo(terms, alg.even_action)
    ad_odd = _combo(terms, alg.odd_action)
    d0, d1 = alg.dim_even, alg.dim_odd
    return (
        d0 - exact.sparse_rank(ad_even, d0, d0),
        d1 - exact.sparse_rank(ad_odd, d1, d1),
    )


# ---------------------------------------------------------------------------
# representatives


def orbit_representative(spec: AlgebraSpec, label: OrbitLabel) -> GZeroElement:
    """An explicit nilpotent even element in the orbit named by ``label``.

    For OSP the element lives in the realization whose Gram matrices are
    adapted to the label; the returned element's ``spec`` carries them, so
    evaluate it in ``build_algebra(x.spec)``.
    """
    check_label(spec, label)
    f = spec.family
    if not f.realizable:
        raise UnsupportedFamily(f"{f.value} has no matrix realization in this library")
    if f in (Family.GL, Family.SL):
        mat = _block([jordan_matrix(label.mu).tolist(), jordan_matrix(label.nu).tolist()])
        target = spec
    elif f is Family.OSP:
        x1, g1, pair = _adapted_blocks(label.mu, True)
        x2, g2, _ = _adapted_blocks(label.nu, False)
        if label.tag == "II":
            # conjugate by the reflection swapping the first hyperbolic pair
            start, d = pair
            perm = list(range(len(x1)))
            perm[start], perm[start + d] = perm[start + d], perm[start]
            x1 = [[x1[perm[i]][perm[j]] for j in range(len(x1))] for i in range(len(x1))]
        target = AlgebraSpec.osp(spec.m, spec.n, g1, g2)
        if (spec.gram1 is not None and spec.gram1 != target.gram1) or (
            spec.gram2 is not None and spec.gram2 != target.gram2
        ):
            raise InvalidLabel("explicit Gram matrices do not match the label-adapted realization")
        mat = _block([x1, x2])
    elif f in (Family.Q, Family.SQ):
        j = jordan_matrix(label.mu).tolist()
        mat = _block([j, j])
        target = spec
    elif f is Family.P:
        j = jordan_matrix(label.mu, "below").tolist()
        size = len(j)
        mat = _block([j, [[-j[c][r] for c in range(size)] for r in range(size)]])
        target = spec
    else:
        mat = _block([jordan_matrix(p).tolist() for p in label.triple])
        target = spec
    alg = build_algebra(target)
    return alg.element(mat)


def factor_blocks(x: GZeroElement) -> list[np.ndarray]:
    """The element restricted to each simple or gl factor, in its defining representation."""
    spec, mat = x.spec, x.matrix
    f = spec.family
    if f in (Family.GL, Family.SL, Family.OSP):
        m = spec.m
        return [mat[:m, :m], mat[m:, m:]]
    if f in (Family.Q, Family.SQ):
        return [mat[: spec.n, : spec.n]]
    if f is Family.P:
        return [mat[: spec.n + 1, : spec.n + 1]]
    return [mat[2 * i : 2 * i + 2, 2 * i : 2 * i + 2] for i in range(3)]


def jordan_type(x: Any) -> Partition:
    """Jordan type of a nilpotent matrix from the ranks of its powers."""
    arr = np.array(x, dtype=object)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("jordan_type needs a square matrix")
    ranks = exact.matrix_power_ranks(arr)
    if ranks[-1] != 0:
        raise NotNilpotent("matrix is not nilpotent")
    dual_parts = [a - b for a, b in zip(ranks, ranks[1:]) if a - b > 0]
    return Partition(tuple(dual_parts)).dual()

"""Levi-module decomposition of the odd exterior algebra of a gl parabolic.

Weights are integer vectors on the diagonal torus of gl(m) x gl(n), indexed
0..m+n-1. The even Levi is a product of gl blocks (see ``levi_blocks``);
a weight is block-dominant when it is weakly decreasing on every block in
increasing index order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, permutations
from math import prod
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InvariantMismatch, NegativeResidual, NonDominantLeader, NotBorelCompatible, NotDominant
from .parabolic import GradedParabolic, levi_blocks

__all__ = [
    "WeightPolynomial",
    "LeviHighestWeight",
    "DimIdentityReport",
    "exterior_character",
    "odd_quotient_weights",
    "levi_weyl_dim",
    "schur_character",
    "levi_character",
    "decompose",
    "check_dim_identity",
]

Weight = tuple[int, ...]
LeviHighestWeight = tuple[tuple[int, ...], ...]
Levi = Sequence[Sequence[int]]


class WeightPolynomial:
    """Finitely supported map from weights of a fixed length to integers."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Weight, int] | None = None):
        self.rank = rank
        self.terms: dict[Weight, int] = {}
        for w, c in (terms or {}).items():
            if len(w) != rank:
                raise ValueError(f"weight {w} does not have length {rank}")
            if c:
                self.terms[tuple(w)] = self.terms.get(tuple(w), 0) + c

    @classmethod
    def one(cls, rank: int) -> WeightPolynomial:
        return cls(rank, {(0,) * rank: 1})

    @classmethod
    def monomial(cls, weight: Sequence[int], coeff: int = 1) -> WeightPolynomial:
        return cls(len(weight), {tuple(weight): coeff})

    def __mul__(self, other: WeightPolynomial) -> WeightPolynomial:
        out: dict[Weight, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = tuple(a + b for a, b in zip(w1, w2))
                out[w] = out.get(w, 0) + c1 * c2
        return WeightPolynomial(self.rank, {w: c for w, c in out.items() if c})

    def __add__(self, other: WeightPolynomial) -> WeightPolynomial:
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return WeightPolynomial(self.rank, {w: c for w, c in out.items() if c})

    def __sub__(self, other: WeightPolynomial) -> WeightPolynomial:
        return self + other.scale(-1)

    def scale(self, k: int) -> WeightPolynomial:
        return WeightPolynomial(self.rank, {w: k * c for w, c in self.terms.items()})

    def dimension(self) -> int:
        return sum(self.terms.values())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeightPolynomial) and self.rank == other.rank and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self.terms)

    def items(self):
        return self.terms.items()

    def __repr__(self) -> str:
        return f"WeightPolynomial(rank={self.rank}, terms={len(self.terms)}, dim={self.dimension()})"


def odd_quotient_weights(p: GradedParabolic) -> list[Weight]:
    """Weights eps_i - eps_j of the odd e_ij with deg(i) > deg(j)."""
    if p.is_q:
        raise NotBorelCompatible("character decomposition is implemented for gl only")
    m, size = p.m, p.m + p.n
    out = []
    for i in range(size):
        for j in range(size):
            if (i < m) == (j < m) or p.degrees[i] <= p.degrees[j]:
                continue
            w = [0] * size
            w[i] += 1
            w[j] -= 1
            out.append(tuple(w))
    return out


def _offset_weight(p: GradedParabolic, offset: Sequence[int]) -> Weight:
    """Character of the one-dimensional Levi module with per-level supertrace scalars."""
    if len(offset) != p.t:
        raise ValueError(f"offset needs one constant per level ({p.t})")
    return tuple(offset[d - 1] * (1 if i < p.m else -1) for i, d in enumerate(p.degrees))


def exterior_character(p: GradedParabolic, offset: Sequence[int] | None = None) -> WeightPolynomial:
    """Character of the exterior algebra on the odd part of g/p, optionally twisted."""
    size = p.m + p.n
    chi = WeightPolynomial.one(size)
    for w in odd_quotient_weights(p):
        chi = chi * WeightPolynomial(size, {(0,) * size: 1, w: 1})
    if offset is not None:
        chi = chi * WeightPolynomial.monomial(_offset_weight(p, offset))
    return chi


def _is_dominant(block_weight: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(block_weight, block_weight[1:]))


def _gl_dim(lam: Sequence[int]) -> int:
    num, den = 1, 1
    for i in range(len(lam)):
        for j in range(i + 1, len(lam)):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    return num // den


def levi_weyl_dim(levi: Levi, lam: LeviHighestWeight) -> int:
    """Product of gl Weyl dimensions over the blocks."""
    if len(levi) != len(lam):
        raise ValueError("one highest weight per block is required")
    for block, part in zip(levi, lam):
        if len(block) != len(part):
            raise ValueError("block weight has the wrong length")
        if not _is_dominant(part):
            raise NotDominant(f"{part} is not dominant")
    return prod(_gl_dim(part) for part in lam)


# ---------------------------------------------------------------------------
# Schur polynomials


def _complete(k: int, nvars: int) -> dict[Weight, int]:
    """Complete homogeneous symmetric polynomial h_k in nvars variables."""
    if k < 0:
        return {}
    out: dict[Weight, int] = {}
    for combo in combinations_with_replacement(range(nvars), k):
        w = [0] * nvars
        for v in combo:
            w[v] += 1
        out[tuple(w)] = 1
    return out


def _poly_mul(a: Mapping[Weight, int], b: Mapping[Weight, int]) -> dict[Weight, int]:
    out: dict[Weight, int] = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            w = tuple(x + y for x, y in zip(w1, w2))
            out[w] = out.get(w, 0) + c1 * c2
    return {w: c for w, c in out.items() if c}


def _schur_local(lam: Sequence[int]) -> dict[Weight, int]:
    """s_lam(x_1..x_r) for a partition lam (zeros allowed) via Jacobi-Trudi."""
    r = len(lam)
    parts = [x for x in lam if x]
    size = len(parts)
    if size == 0:
        return {(0,) * r: 1}
    cache: dict[int, dict[Weight, int]] = {}

    def h(k: int) -> dict[Weight, int]:
        if k not in cache:
            cache[k] = _complete(k, r)
        return cache[k]

    total: dict[Weight, int] = {}
    for perm in permutations(range(size)):
        sign = _perm_sign(perm)
        term: dict[Weight, int] = {(0,) * r: sign}
        for i, j in enumerate(perm):
            factor = h(parts[i] - i + j)
            if not factor:
                term = {}
                break
            term = _poly_mul(term, factor)
        for w, c in term.items():
            total[w] = total.get(w, 0) + c
    return {w: c for w, c in total.items() if c}


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def schur_character(lam: Sequence[int], variables: Sequence[int], rank: int) -> WeightPolynomial:
    """Character of the irreducible gl(len(variables)) module of highest weight lam.

    ``lam`` may have negative entries; the lowest entry is factored out as a
    power of the determinant.
    """
    lam = tuple(lam)
    if len(lam) != len(variables):
        raise ValueError("one weight entry per variable is required")
    if not _is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    shift = lam[-1] if lam else 0
    local = _schur_local(tuple(x - shift for x in lam))
    out: dict[Weight, int] = {}
    for w, c in local.items():
        full = [0] * rank
        for var, e in zip(variables, w):
            full[var] = e + shift
        out[tuple(full)] = c
    return WeightPolynomial(rank, out)


def levi_character(levi: Levi, lam: LeviHighestWeight, rank: int) -> WeightPolynomial:
    chi = WeightPolynomial.one(rank)
    for block, part in zip(levi, lam):
        chi = chi * schur_character(part, block, rank)
    return chi


def _restrict(weight: Weight, levi: Levi) -> LeviHighestWeight:
    return tuple(tuple(weight[i] for i in block) for block in levi)


def decompose(chi: WeightPolynomial, levi: Levi) -> list[LeviHighestWeight]:
    """Highest weights of the irreducible Levi summands of ``chi``, with repetition.

    Weights are visited in decreasing lexicographic order of their block
    restrictions; this order refines dominance, so every weight reached with
    a nonzero residual is maximal and must be block-dominant.
    """
    covered = sorted(i for block in levi for i in block)
    if covered != list(range(chi.rank)):
        raise ValueError("levi blocks must partition the weight coordinates")
    residual = dict(chi.terms)
    order = sorted(residual, key=lambda w: _restrict(w, levi), reverse=True)
    found: list[LeviHighestWeight] = []
    for w in order:
        c = residual.get(w, 0)
        if c == 0:
            continue
        if c < 0:
            raise NegativeResidual(f"multiplicity {c} at weight {w}")
        lam = _restrict(w, levi)
        if not all(_is_dominant(part) for part in lam):
            raise NonDominantLeader(f"leading weight {w} is not block-dominant")
        for weight, mult in levi_character(levi, lam, chi.rank).items():
            value = residual.get(weight, 0) - c * mult
            if value < 0:
                raise NegativeResidual(f"multiplicity {value} at weight {weight}")
            residual[weight] = value
        found.extend([lam] * c)
    return found


@dataclass(frozen=True)
class DimIdentityReport:
    degrees: tuple[int, ...]
    levi: tuple[tuple[int, ...], ...]
    highest_weights: list[LeviHighestWeight] = field(default_factory=list)
    dims: list[int] = field(default_factory=list)
    total: int = 0
    expected: int = 1

    @property
    def length(self) -> int:
        return len(self.highest_weights)

    @property
    def ok(self) -> bool:
        return self.total == self.expected

    def as_dict(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "levi": [list(b) for b in self.levi],
            "highest_weights": [[list(part) for part in lam] for lam in self.highest_weights],
            "dims": self.dims,
            "length": self.length,
            "total": self.total,
            "expected": self.expected,
            "ok": self.ok,
        }


def check_dim_identity(
    p: GradedParabolic, offset: Sequence[int] | None = None, *, strict: bool = True
) -> DimIdentityReport:
    """Decompose the odd exterior character and compare the summed dimensions with 2^c1."""
    levi = levi_blocks(p)
    chi = exterior_character(p, offset)
    lams = decompose(chi, levi)
    dims = [levi_weyl_dim(levi, lam) for lam in lams]
    rep = DimIdentityReport(
        degrees=p.degrees, levi=levi, highest_weights=lams, dims=dims, total=sum(dims), expected=2**p.c1
    )
    if strict and not rep.ok:
        raise InvariantMismatch(f"summand dimensions total {rep.total}, expected {rep.expected}")
    return rep

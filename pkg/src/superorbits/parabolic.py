"""Graded parabolic subalgebras, Richardson orbits, and induced-module numerics.

A parabolic is given by a degree map on the natural basis, 1-based:
indices 1..m span V_0 and m+1..m+n span V_1. For the Q family only the
first n degrees are given; the odd copy mirrors them.

The parabolic is p = span{e_ij : deg(i) <= deg(j)}, so g/p is spanned by
the e_ij with deg(i) > deg(j).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Sequence

from .errors import InvariantMismatch, NotBorelCompatible
from .families import AlgebraSpec, Family, OrbitLabel
from .invariants import ell, k_formula
from .partitions import Partition, min_sum

__all__ = [
    "GradedParabolic",
    "InducedNumerics",
    "parabolic_from_degrees",
    "richardson_orbit",
    "is_good",
    "goodness_checks",
    "find_good_parabolic",
    "induced_numerics",
    "enumerate_borel_compatible",
    "levi_blocks",
]

_Q_FAMILIES = (Family.Q, Family.SQ)


@dataclass(frozen=True)
class GradedParabolic:
    spec: AlgebraSpec
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        f = self.spec.family
        if f not in (Family.GL,) + _Q_FAMILIES:
            raise NotBorelCompatible(f"graded parabolics are supported for gl and the q family, not {f.value}")
        expected = self.m + self.n if f is Family.GL else self.spec.n
        degrees = tuple(int(d) for d in self.degrees)
        if len(degrees) != expected:
            raise NotBorelCompatible(f"expected {expected} degrees, got {len(degrees)}")
        if any(d < 1 for d in degrees):
            raise NotBorelCompatible("degrees must be positive")
        for block in self._blocks(degrees):
            if any(a > b for a, b in zip(block, block[1:])):
                raise NotBorelCompatible(f"degrees {degrees} are not weakly increasing within each block")
        object.__setattr__(self, "degrees", degrees)

    def _blocks(self, degrees: Sequence[int]):
        if self.is_q:
            return [degrees]
        return [degrees[: self.m], degrees[self.m :]]

    @property
    def is_q(self) -> bool:
        return self.spec.family in _Q_FAMILIES

    @property
    def m(self) -> int:
        return self.spec.n if self.is_q else self.spec.m

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def t(self) -> int:
        return max(self.degrees)

    @cached_property
    def levels(self) -> tuple[tuple[int, ...], ...]:
        """Lambda_k for k = 1..t as 1-based index tuples (over I1 only for Q)."""
        return tuple(tuple(i + 1 for i, d in enumerate(self.degrees) if d == k) for k in range(1, self.t + 1))

    @cached_property
    def r(self) -> tuple[int, ...]:
        first = self.degrees if self.is_q else self.degrees[: self.m]
        return tuple(sum(1 for d in first if d == k) for k in range(1, self.t + 1))

    @cached_property
    def s(self) -> tuple[int, ...]:
        if self.is_q:
            return self.r
        return tuple(sum(1 for d in self.degrees[self.m :] if d == k) for k in range(1, self.t + 1))

    @property
    def levi(self) -> tuple[tuple[int, int], ...]:
        """(r_k, s_k): the Levi factor is the sum of gl(r_k, s_k)."""
        return tuple(zip(self.r, self.s))

    @property
    def c0(self) -> int:
        if self.is_q:
            return (self.n**2 - sum(x * x for x in self.r)) // 2
        return (self.m**2 - sum(x * x for x in self.r)) // 2 + (self.n**2 - sum(x * x for x in self.s)) // 2

    @property
    def c1(self) -> int:
        if self.is_q:
            return (self.n**2 - sum(x * x for x in self.r)) // 2
        return self.m * self.n - sum(a * b for a, b in zip(self.r, self.s))

    def levi_text(self) -> str:
        if self.is_q:
            return " + ".join(f"q({a})" for a in self.r)
        return " + ".join(f"gl({a},{b})" for a, b in self.levi)


def parabolic_from_degrees(spec: AlgebraSpec, degrees: Sequence[int]) -> GradedParabolic:
    return GradedParabolic(spec, tuple(degrees))


def _dual_of_sorted(seq: Sequence[int]) -> Partition:
    return Partition(tuple(sorted((x for x in seq if x), reverse=True))).dual()


def richardson_orbit(p: GradedParabolic) -> OrbitLabel:
    """Dense orbit in G.m for the nilradical m: duals of the sorted block sizes."""
    if p.is_q:
        return OrbitLabel(p.spec.family, _dual_of_sorted(p.r))
    return OrbitLabel(Family.GL, _dual_of_sorted(p.r), _dual_of_sorted(p.s))


def goodness_checks(p: GradedParabolic) -> dict[str, bool]:
    """Independent goodness tests; for gl all three must agree."""
    label = richardson_orbit(p)
    by_ell = p.c1 == ell(k_formula(label))
    if p.is_q:
        return {"ell": by_ell, "odd_part": p.spec.family is Family.Q or any(x % 2 for x in label.mu)}
    pairs = sorted(zip(p.r, p.s), key=lambda rs: (-rs[0], -rs[1]))
    permutation = all(a[1] >= b[1] for a, b in zip(pairs, pairs[1:]))
    by_sum = sum(a * b for a, b in p.levi) == min_sum(label.mu, label.nu)
    return {"permutation": permutation, "sum": by_sum, "ell": by_ell}


def is_good(p: GradedParabolic) -> bool:
    """Whether dim (g/p)_1 equals ell of the Richardson orbit.

    For gl this is decided by a single permutation sorting r and s at once;
    the other criteria are checked to agree. For the q family goodness holds
    for Q itself, and for the quotient family exactly when the orbit has an
    odd part.
    """
    checks = goodness_checks(p)
    verdicts = set(checks.values())
    if len(verdicts) != 1:
        raise InvariantMismatch(f"goodness criteria disagree for {p.degrees}: {checks}")
    return verdicts.pop()


def find_good_parabolic(mu: Partition, nu: Partition | None = None, *, family: Family | str = Family.GL) -> GradedParabolic:
    """A good parabolic whose Richardson orbit is (mu, nu), with r = mu' and s = nu'."""
    f = Family(family)
    if f in _Q_FAMILIES:
        r = mu.dual().parts or (0,)
        degrees = [k + 1 for k, size in enumerate(r) for _ in range(size)]
        return GradedParabolic(AlgebraSpec(f, n=mu.weight), tuple(degrees))
    if nu is None:
        raise ValueError("gl needs both partitions")
    r, s = mu.dual().parts, nu.dual().parts
    t = max(len(r), len(s), 1)
    r = r + (0,) * (t - len(r))
    s = s + (0,) * (t - len(s))
    first = [k + 1 for k in range(t) for _ in range(r[k])]
    second = [k + 1 for k in range(t) for _ in range(s[k])]
    return GradedParabolic(AlgebraSpec.gl(mu.weight, nu.weight), tuple(first + second))


def enumerate_borel_compatible(spec: AlgebraSpec) -> list[GradedParabolic]:
    """Every surjective Borel-compatible degree map, ordered by t then degrees."""
    out = []
    if spec.family in _Q_FAMILIES:
        n = spec.n
        for t in range(1, n + 1):
            for seq in combinations_with_replacement(range(1, t + 1), n):
                if set(seq) == set(range(1, t + 1)):
                    out.append(GradedParabolic(spec, seq))
        return out
    m, n = spec.m, spec.n
    for t in range(1, m + n + 1):
        for a in combinations_with_replacement(range(1, t + 1), m):
            for b in combinations_with_replacement(range(1, t + 1), n):
                if set(a) | set(b) == set(range(1, t + 1)):
                    out.append(GradedParabolic(spec, a + b))
    return out


def levi_blocks(p: GradedParabolic) -> tuple[tuple[int, ...], ...]:
    """0-based index sets of the gl factors of the even Levi, level by level."""
    if p.is_q:
        raise NotBorelCompatible("Levi blocks of the q family are type q, not gl")
    blocks = []
    for k in range(1, p.t + 1):
        for lo, hi in ((0, p.m), (p.m, p.m + p.n)):
            block = tuple(i for i in range(lo, hi) if p.degrees[i] == k)
            if block:
                blocks.append(block)
    return tuple(blocks)


@dataclass(frozen=True)
class InducedNumerics:
    c0: int
    c1: int
    d: int
    e: int
    goldie: int
    good: bool
    dim_lt: int
    k: int
    ell: int
    lower_bound: int

    @property
    def strict(self) -> bool:
        return self.e > self.lower_bound

    def as_dict(self) -> dict:
        return {
            "c0": self.c0,
            "c1": self.c1,
            "d": self.d,
            "e": self.e,
            "goldie": self.goldie,
            "good": self.good,
            "dim_lt": self.dim_lt,
            "k": self.k,
            "ell": self.ell,
            "lower_bound": self.lower_bound,
            "strict": self.strict,
        }


def induced_numerics(p: GradedParabolic, dim_lt: int = 1) -> InducedNumerics:
    """Dimension, multiplicity and Goldie rank of the module induced from p.

    The inducing module is finite dimensional of dimension ``dim_lt``, so
    d = c0 and e = 2^c1 * dim_lt. The lower bound is 2^ell * dim_lt for the
    Richardson orbit; it is attained exactly for good parabolics.
    """
    if dim_lt < 1:
        raise ValueError("dim_lt must be a positive integer")
    label = richardson_orbit(p)
    k = k_formula(label)
    good = is_good(p)
    e = 2**p.c1 * dim_lt
    bound = 2 ** ell(k) * dim_lt
    if e < bound or (good != (e == bound)):
        raise InvariantMismatch(f"multiplicity {e} inconsistent with bound {bound} (good={good})")
    return InducedNumerics(
        c0=p.c0, c1=p.c1, d=p.c0, e=e, goldie=e, good=good, dim_lt=dim_lt, k=k, ell=ell(k), lower_bound=bound
    )

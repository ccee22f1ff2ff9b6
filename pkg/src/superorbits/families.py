"""Algebra families, their parameters, and nilpotent orbit labels."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .errors import InvalidLabel, InvalidSpec
from .partitions import Partition, PartitionClass, enumerate_partitions, parse_partition

# Labels for P(n) are partitions of n + P_WEIGHT_OFFSET, i.e. nilpotent orbits
# of the even part sl(n+1). Fixed by `invariants.resolve_p_convention`.
P_WEIGHT_OFFSET = 1


class Family(str, Enum):
    GL = "gl"
    SL = "sl"
    OSP = "osp"
    Q = "q"
    SQ = "sq"
    P = "p"
    GAMMA = "gamma"
    G3 = "g3"
    F4 = "f4"

    @property
    def realizable(self) -> bool:
        return self not in (Family.G3, Family.F4)


Gram = tuple[tuple[Fraction | int, ...], ...]


def _freeze_gram(gram: Sequence[Sequence] | None) -> Gram | None:
    if gram is None:
        return None
    return tuple(tuple(int(v) if Fraction(v).denominator == 1 else Fraction(v) for v in row) for row in gram)


@dataclass(frozen=True)
class AlgebraSpec:
    """Family tag plus parameters. Use the classmethod constructors."""

    family: Family
    m: int | None = None
    n: int | None = None
    sigma: tuple[Fraction, Fraction, Fraction] | None = None
    gram1: Gram | None = None
    gram2: Gram | None = None
    checked: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.checked:
            self._validate()

    def _validate(self) -> None:
        f, m, n = self.family, self.m, self.n
        if f in (Family.GL, Family.SL):
            if m is None or n is None or m < 1 or n < 1:
                raise InvalidSpec(f"{f.value}(m,n) needs m, n >= 1")
        elif f is Family.OSP:
            if m is None or n is None or m < 1 or n < 2 or n % 2:
                raise InvalidSpec("osp(m,n) needs m >= 1 and even n >= 2")
            _check_gram(self.gram1, m, symmetric=True)
            _check_gram(self.gram2, n, symmetric=False)
        elif f in (Family.Q, Family.SQ):
            if n is None or n < 3:
                raise InvalidSpec(f"{f.value}(n) needs n >= 3")
        elif f is Family.P:
            if n is None or n < 1:
                raise InvalidSpec("p(n) needs n >= 1")
        elif f is Family.GAMMA:
            if self.sigma is None or len(self.sigma) != 3:
                raise InvalidSpec("gamma needs three parameters")
            if any(s == 0 for s in self.sigma) or sum(self.sigma) != 0:
                raise InvalidSpec("gamma parameters must be nonzero and sum to zero")

    @classmethod
    def gl(cls, m: int, n: int) -> AlgebraSpec:
        return cls(Family.GL, m, n)

    @classmethod
    def sl(cls, m: int, n: int) -> AlgebraSpec:
        return cls(Family.SL, m, n)

    @classmethod
    def osp(cls, m: int, n: int, gram1: Sequence[Sequence] | None = None, gram2: Sequence[Sequence] | None = None) -> AlgebraSpec:
        return cls(Family.OSP, m, n, gram1=_freeze_gram(gram1), gram2=_freeze_gram(gram2))

    @classmethod
    def q(cls, n: int, *, checked: bool = True) -> AlgebraSpec:
        """``checked=False`` admits n < 3 for low-level desk checks."""
        return cls(Family.Q, n=n, checked=checked)

    @classmethod
    def sq(cls, n: int) -> AlgebraSpec:
        return cls(Family.SQ, n=n)

    @classmethod
    def p(cls, n: int) -> AlgebraSpec:
        return cls(Family.P, n=n)

    @classmethod
    def gamma(cls, s1, s2, s3) -> AlgebraSpec:
        return cls(Family.GAMMA, sigma=(Fraction(s1), Fraction(s2), Fraction(s3)))

    @classmethod
    def g3(cls) -> AlgebraSpec:
        return cls(Family.G3)

    @classmethod
    def f4(cls) -> AlgebraSpec:
        return cls(Family.F4)

    def with_grams(self, gram1: Sequence[Sequence], gram2: Sequence[Sequence]) -> AlgebraSpec:
        return AlgebraSpec.osp(self.m, self.n, gram1, gram2)

    @property
    def params(self) -> dict:
        out: dict = {}
        if self.m is not None:
            out["m"] = self.m
        if self.n is not None:
            out["n"] = self.n
        if self.sigma is not None:
            out["sigma"] = [str(s) for s in self.sigma]
        return out

    def __str__(self) -> str:
        f = self.family
        if f in (Family.GL, Family.SL, Family.OSP):
            return f"{f.value}({self.m},{self.n})"
        if f in (Family.Q, Family.SQ, Family.P):
            return f"{f.value}({self.n})"
        if f is Family.GAMMA:
            return "gamma(" + ",".join(str(s) for s in self.sigma) + ")"
        return f.value


def _check_gram(gram: Gram | None, size: int, symmetric: bool) -> None:
    if gram is None:
        return
    from .exact import rank

    if len(gram) != size or any(len(row) != size for row in gram):
        raise InvalidSpec(f"Gram matrix must be {size}x{size}")
    sign = 1 if symmetric else -1
    if any(gram[i][j] != sign * gram[j][i] for i in range(size) for j in range(size)):
        raise InvalidSpec("Gram matrix has the wrong symmetry")
    if rank(gram) != size:
        raise InvalidSpec("Gram matrix is singular")


# Exceptional data: (Bala-Carter name, mu) for G(3); (eta, mu = sigma(eta)) for F(4).
G3_TABLE: tuple[tuple[str, Partition, int], ...] = tuple(
    (name, parse_partition(mu), dim)
    for name, mu, dim in [
        ("0", "1^7", 0),
        ("A1", "2^2,1^3", 6),
        ("Ã1", "3,2^2", 8),
        ("G2(a1)", "3^2,1", 10),
        ("G2", "7", 12),
    ]
)
F4_TABLE: tuple[tuple[Partition, Partition, int], ...] = tuple(
    (parse_partition(eta), parse_partition(mu), dim)
    for eta, mu, dim in [
        ("1^7", "1^8", 0),
        ("2^2,1^3", "2^2,1^4", 8),
        ("3,1^4", "2^4", 10),
        ("3,2^2", "3,2^2,1", 12),
        ("3^2,1", "3^2,1^2", 14),
        ("5,1^2", "4^2", 16),
        ("7", "7,1", 18),
    ]
)
EXCEPTIONAL_ODD_DIM = {Family.G3: 14, Family.F4: 16}
EXCEPTIONAL_V1_DIM = {Family.G3: 7, Family.F4: 8}

TWO = parse_partition("2")
ONE_ONE = parse_partition("1^2")
# keyed by the sorted triple of partitions of 2, in source table order
GAMMA_TABLE: tuple[tuple[tuple[Partition, Partition, Partition], int, int], ...] = (
    ((TWO, TWO, TWO), 6, 5),
    ((TWO, TWO, ONE_ONE), 4, 4),
    ((TWO, ONE_ONE, ONE_ONE), 2, 4),
    ((ONE_ONE, ONE_ONE, ONE_ONE), 0, 0),
)


def gamma_key(triple: Iterable[Partition]) -> tuple[Partition, ...]:
    return tuple(sorted(triple, reverse=True))


@dataclass(frozen=True)
class OrbitLabel:
    """Partition data naming a nilpotent orbit of the even part.

    ``mu``/``nu`` for GL, SL, OSP, G3, F4; ``mu`` alone for Q, SQ, P;
    ``triple`` for GAMMA. ``tag`` is "I" or "II" exactly when the orthogonal
    partition is very even.
    """

    family: Family
    mu: Partition | None = None
    nu: Partition | None = None
    triple: tuple[Partition, Partition, Partition] | None = None
    tag: str | None = None

    def __post_init__(self) -> None:
        f = self.family
        if f is Family.GAMMA:
            if self.triple is None or len(self.triple) != 3 or self.mu or self.nu:
                raise InvalidLabel("gamma labels carry exactly a triple of partitions")
            if any(p.weight != 2 for p in self.triple):
                raise InvalidLabel("gamma label partitions must have weight 2")
        elif f in (Family.Q, Family.SQ, Family.P):
            if self.mu is None or self.nu is not None or self.triple is not None:
                raise InvalidLabel(f"{f.value} labels carry a single partition")
        else:
            if self.mu is None or self.nu is None or self.triple is not None:
                raise InvalidLabel(f"{f.value} labels carry a pair of partitions")
        if f is Family.OSP:
            if not PartitionClass.B_D.contains(self.mu):
                raise InvalidLabel(f"{self.mu} is not an orthogonal partition")
            if not PartitionClass.C.contains(self.nu):
                raise InvalidLabel(f"{self.nu} is not a symplectic partition")
        if f is Family.G3 and self.mu not in {row[1] for row in G3_TABLE}:
            raise InvalidLabel(f"{self.mu} is not a G(3) orbit partition")
        if f is Family.F4 and self.mu not in {row[1] for row in F4_TABLE}:
            raise InvalidLabel(f"{self.mu} is not an F(4) orbit partition")
        if f in (Family.G3, Family.F4) and self.nu.weight != 2:
            raise InvalidLabel("the sl(2) partition must have weight 2")
        very_even = f is Family.OSP and self.mu.weight > 0 and self.mu.is_very_even()
        if very_even and self.tag not in ("I", "II"):
            raise InvalidLabel(f"very even {self.mu} needs tag I or II")
        if not very_even and self.tag is not None:
            raise InvalidLabel("tag is only allowed for very even orthogonal partitions")

    @classmethod
    def pair(cls, family: Family | str, mu, nu, tag: str | None = None) -> OrbitLabel:
        return cls(Family(family), _as_partition(mu), _as_partition(nu), tag=tag)

    @classmethod
    def single(cls, family: Family | str, mu) -> OrbitLabel:
        return cls(Family(family), _as_partition(mu))

    @classmethod
    def gamma(cls, a, b, c) -> OrbitLabel:
        return cls(Family.GAMMA, triple=(_as_partition(a), _as_partition(b), _as_partition(c)))

    @property
    def is_zero(self) -> bool:
        parts = self.triple if self.triple is not None else tuple(p for p in (self.mu, self.nu) if p is not None)
        return all(p.is_zero_orbit() for p in parts)

    def as_dict(self) -> dict:
        out: dict = {}
        if self.triple is not None:
            out["triple"] = [str(p) for p in self.triple]
        if self.mu is not None:
            out["mu"] = str(self.mu)
        if self.nu is not None:
            out["nu"] = str(self.nu)
        out["tag"] = self.tag
        return out

    def __str__(self) -> str:
        if self.triple is not None:
            return "{" + "; ".join(str(p) for p in self.triple) + "}"
        text = f"({self.mu})" if self.nu is None else f"({self.mu} | {self.nu})"
        return f"{text} {self.tag}" if self.tag else text


def _as_partition(value) -> Partition:
    if isinstance(value, Partition):
        return value
    if isinstance(value, str):
        return parse_partition(value)
    return Partition.of(*value)


def check_label(spec: AlgebraSpec, label: OrbitLabel) -> None:
    """Raise InvalidLabel unless ``label`` names an orbit of ``spec``."""
    f = spec.family
    if label.family is not f:
        raise InvalidLabel(f"label family {label.family.value} does not match {spec}")
    if f in (Family.GL, Family.SL, Family.OSP):
        if label.mu.weight != spec.m or label.nu.weight != spec.n:
            raise InvalidLabel(f"{label} does not have weights ({spec.m},{spec.n})")
    elif f in (Family.Q, Family.SQ):
        if label.mu.weight != spec.n:
            raise InvalidLabel(f"{label} does not have weight {spec.n}")
    elif f is Family.P:
        if label.mu.weight != spec.n + P_WEIGHT_OFFSET:
            raise InvalidLabel(f"{label} does not have weight {spec.n + P_WEIGHT_OFFSET}")


def orbit_labels(spec: AlgebraSpec) -> list[OrbitLabel]:
    """Every orbit label for ``spec`` in a deterministic order."""
    f = spec.family
    if f in (Family.GL, Family.SL):
        return [
            OrbitLabel(f, mu, nu)
            for mu, nu in product(enumerate_partitions(spec.m), enumerate_partitions(spec.n))
        ]
    if f is Family.OSP:
        out = []
        for mu, nu in product(
            enumerate_partitions(spec.m, PartitionClass.B_D),
            enumerate_partitions(spec.n, PartitionClass.C),
        ):
            if mu.is_very_even():
                out += [OrbitLabel(f, mu, nu, tag="I"), OrbitLabel(f, mu, nu, tag="II")]
            else:
                out.append(OrbitLabel(f, mu, nu))
        return out
    if f in (Family.Q, Family.SQ):
        return [OrbitLabel(f, mu) for mu in enumerate_partitions(spec.n)]
    if f is Family.P:
        return [OrbitLabel(f, mu) for mu in enumerate_partitions(spec.n + P_WEIGHT_OFFSET)]
    if f is Family.GAMMA:
        twos = enumerate_partitions(2)
        return [OrbitLabel(f, triple=t) for t in product(twos, repeat=3)]
    if f is Family.G3:
        return [OrbitLabel(f, mu, nu) for _, mu, _ in G3_TABLE for nu in enumerate_partitions(2)]
    if f is Family.F4:
        return [OrbitLabel(f, mu, nu) for _, mu, _ in F4_TABLE for nu in enumerate_partitions(2)]
    raise InvalidSpec(f"unknown family {f}")

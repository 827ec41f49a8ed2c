"""Truncated characteristic-class arithmetic on projective space.

Classes are polynomials in the hyperplane class h of P^n truncated at
h^(n+1) = 0, with exact rational coefficients indexed by codimension.
``DimIndexedClass`` re-expresses such a class by cycle dimension so results
living on the same scheme X can be compared across different ambient
projective spaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import (
    AmbientMismatchError,
    InvalidArgumentError,
    NonInvertibleClassError,
    OutOfRangeError,
    SupportViolationError,
)

Scalar = int | Fraction


@dataclass(frozen=True)
class ChowClass:
    """sum_i coeffs[i] * h^i in the Chow group of P^ambient_dim."""

    ambient_dim: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.ambient_dim < 0:
            raise InvalidArgumentError("ambient dimension must be >= 0")
        if len(self.coeffs) != self.ambient_dim + 1:
            raise InvalidArgumentError("need exactly ambient_dim + 1 coefficients")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    def _check(self, other: "ChowClass"):
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatchError(
                f"classes live in P^{self.ambient_dim} and P^{other.ambient_dim}"
            )

    def __add__(self, other: "ChowClass") -> "ChowClass":
        self._check(other)
        return ChowClass(self.ambient_dim, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        self._check(other)
        return ChowClass(self.ambient_dim, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.ambient_dim, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return class_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Scalar) -> "ChowClass":
        c = Fraction(c)
        return ChowClass(self.ambient_dim, tuple(c * a for a in self.coeffs))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def format(self) -> str:
        """Human form like ``2 h - 4 h^2``, omitting zero terms."""
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            num = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if i == 0:
                body = num
            else:
                mono = "h" if i == 1 else f"h^{i}"
                body = mono if mag == 1 else f"{num} {mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"<P^{self.ambient_dim}: {self.format()}>"


def chow_class(n: int, coeffs: dict[int, Scalar] | None = None) -> ChowClass:
    """Build a class on P^n from a sparse {codim: coefficient} mapping."""
    vec = [Fraction(0)] * (n + 1)
    for i, c in (coeffs or {}).items():
        if not 0 <= i <= n:
            raise OutOfRangeError(f"codimension {i} out of range for P^{n}")
        vec[i] = Fraction(c)
    return ChowClass(n, tuple(vec))


def one(n: int) -> ChowClass:
    return chow_class(n, {0: 1})


def hyperplane_power(n: int, i: int) -> ChowClass:
    return chow_class(n, {i: 1})


def class_mul(a: ChowClass, b: ChowClass) -> ChowClass:
    """Product truncated at h^(n+1)."""
    a._check(b)
    n = a.ambient_dim
    out = [Fraction(0)] * (n + 1)
    for i, ca in enumerate(a.coeffs):
        if not ca:
            continue
        for j, cb in enumerate(b.coeffs):
            if i + j > n:
                break
            if cb:
                out[i + j] += ca * cb
    return ChowClass(n, tuple(out))


def class_inv(a: ChowClass) -> ChowClass:
    """Multiplicative inverse in the truncated ring (needs a_0 != 0)."""
    if not a.coeffs[0]:
        raise NonInvertibleClassError("constant term is zero")
    n = a.ambient_dim
    inv = [Fraction(0)] * (n + 1)
    inv[0] = 1 / a.coeffs[0]
    for i in range(1, n + 1):
        acc = Fraction(0)
        for j in range(1, i + 1):
            acc += a.coeffs[j] * inv[i - j]
        inv[i] = -acc / a.coeffs[0]
    return ChowClass(n, tuple(inv))


def binom_power(k: int, n: int) -> ChowClass:
    """(1 + h)^k on P^n; negative k via the inverse of the positive power."""
    if k >= 0:
        return ChowClass(n, tuple(Fraction(comb(k, i)) for i in range(n + 1)))
    return class_inv(binom_power(-k, n))


def class_degree(a: ChowClass, codim: int) -> Fraction:
    """Coefficient of h^codim."""
    if not 0 <= codim <= a.ambient_dim:
        raise OutOfRangeError(f"codimension {codim} out of range for P^{a.ambient_dim}")
    return a.coeffs[codim]


@dataclass(frozen=True)
class SplitBundle:
    """A direct sum of line bundles O(d_1) + ... + O(d_c) on projective space."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def total_chern(self, n: int) -> ChowClass:
        """prod_j (1 + d_j h) truncated on P^n."""
        acc = one(n)
        for d in self.degrees:
            acc = class_mul(acc, chow_class(n, {0: 1, 1: d}) if n >= 1 else one(n))
        return acc

    def union(self, other: "SplitBundle") -> "SplitBundle":
        return SplitBundle(self.degrees + other.degrees)


def cap_with_bundle(bundle: SplitBundle, a: ChowClass) -> ChowClass:
    """c(E) . a, the total-Chern-class cap against a class on the same P^n."""
    return class_mul(bundle.total_chern(a.ambient_dim), a)


@dataclass
class DimIndexedClass:
    """A class graded by cycle dimension, independent of any ambient space.

    ``entries`` holds every dimension from 0 up to the dimension of the
    supporting scheme, explicit zeros included, so equality across different
    ambients is plain mapping equality.
    """

    entries: dict[int, Fraction] = field(default_factory=dict)

    def dims(self) -> list[int]:
        return sorted(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, DimIndexedClass) and self.entries == other.entries

    def format(self) -> str:
        inner = ", ".join(f"dim{d}: {self.entries[d]}" for d in sorted(self.entries, reverse=True))
        return "{" + inner + "}"


def to_dim_indexed(a: ChowClass, dim_x: int) -> DimIndexedClass:
    """Reindex a class supported on a dim_x-dimensional X by cycle dimension.

    Requires the class to vanish in codimension below n - dim_x (otherwise it
    cannot come from X).
    """
    n = a.ambient_dim
    if not 0 <= dim_x <= n:
        raise OutOfRangeError(f"dim {dim_x} out of range for P^{n}")
    for i in range(n - dim_x):
        if a.coeffs[i]:
            raise SupportViolationError(
                f"nonzero coefficient in codim {i} < codim X = {n - dim_x}"
            )
    return DimIndexedClass({d: a.coeffs[n - d] for d in range(dim_x + 1)})


def from_dim_indexed(d: DimIndexedClass, n: int) -> ChowClass:
    """Inverse of ``to_dim_indexed`` into the Chow group of P^n."""
    coeffs = {}
    for dim, c in d.entries.items():
        if not 0 <= dim <= n:
            raise OutOfRangeError(f"cycle dimension {dim} does not fit in P^{n}")
        coeffs[n - dim] = c
    return chow_class(n, coeffs)

"""Sparse multivariate polynomials over exact rationals.

A polynomial is a map from exponent tuples to nonzero ``Fraction``
coefficients; the zero polynomial has an empty term map.  All arithmetic is
exact and all values are immutable after construction, so everything here is
safe to share freely.

Conventions fixed for the whole package:

* a ring with n+1 variables hosts subschemes of P^n;
* grevlex is the default monomial order;
* homogenization/dehomogenization is with respect to the last variable
  unless a function takes an explicit variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    InvalidArgumentError,
    NonlinearSubstitutionError,
    RingMismatchError,
)

Exponents = tuple[int, ...]
Scalar = int | Fraction


@dataclass(frozen=True)
class Ring:
    """A named polynomial ring Q[variables] with a fixed variable order."""

    name: str
    variables: tuple[str, ...]

    def __post_init__(self):
        if not self.variables:
            raise InvalidArgumentError("a ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise InvalidArgumentError(f"duplicate variable names in ring {self.name!r}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def ambient_dim(self) -> int:
        """Dimension n of the projective space P^n this ring describes."""
        return len(self.variables) - 1

    def variable_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise InvalidArgumentError(f"no variable {name!r} in ring {self.name!r}") from None


# ---------------------------------------------------------------------------
# monomials: bare exponent tuples plus helper functions


def mono_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Exponents, b: Exponents) -> Exponents:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Exponents, b: Exponents) -> bool:
    """True if a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Exponents) -> int:
    return sum(a)


def _grevlex_key(e: Exponents):
    # degree first; ties broken by the rightmost differing exponent, smaller
    # exponent winning, which the negated reversed tuple encodes
    return sum(e), tuple(-x for x in reversed(e))


@dataclass(frozen=True)
class MonomialOrder:
    """grevlex, lex, or a block order eliminating the first ``block`` variables.

    ``key`` maps an exponent tuple to a sort key: larger key means larger
    monomial.  The block order compares the eliminated block by grevlex
    first, then the remaining variables by grevlex, which makes it a proper
    elimination order.
    """

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise InvalidArgumentError(f"unknown monomial order kind {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise InvalidArgumentError("elimination order needs a positive block size")

    def key(self, e: Exponents):
        if self.kind == "grevlex":
            return _grevlex_key(e)
        if self.kind == "lex":
            return e
        return _grevlex_key(e[: self.block]), _grevlex_key(e[self.block :])


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def elimination_order(block: int) -> MonomialOrder:
    return MonomialOrder("elim", block)


def monomial_compare(a: Exponents, b: Exponents, order: MonomialOrder = GREVLEX) -> int:
    """-1, 0 or +1 according to the given order."""
    if len(a) != len(b):
        raise RingMismatchError("cannot compare monomials from different rings")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable sparse polynomial over Q.

    ``terms`` maps exponent tuples to nonzero Fractions.  The constructor
    merges duplicate monomials, drops zero coefficients and validates the
    exponents against the ring, so any constructed value is normalized.
    """

    __slots__ = ("ring", "terms")

    def __init__(
        self,
        ring: Ring,
        terms: Mapping[Exponents, Scalar] | Iterable[tuple[Exponents, Scalar]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponents, Fraction] = {}
        n = ring.nvars
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != n or any(e < 0 or not isinstance(e, int) for e in exps):
                raise InvalidArgumentError(f"bad exponent tuple {exps!r} for ring {ring.name!r}")
            c = clean.get(exps, Fraction(0)) + Fraction(coeff)
            if c:
                clean[exps] = c
            else:
                clean.pop(exps, None)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):  # pragma: no cover
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring) -> "Polynomial":
        return cls(ring)

    @classmethod
    def constant(cls, ring: Ring, c: Scalar) -> "Polynomial":
        return cls(ring, {(0,) * ring.nvars: c})

    @classmethod
    def variable(cls, ring: Ring, which: int | str) -> "Polynomial":
        i = ring.variable_index(which) if isinstance(which, str) else which
        e = [0] * ring.nvars
        e[i] = 1
        return cls(ring, {tuple(e): 1})

    @classmethod
    def monomial(cls, ring: Ring, exps: Exponents, coeff: Scalar = 1) -> "Polynomial":
        return cls(ring, {tuple(exps): coeff})

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Max term degree; -1 for the zero polynomial."""
        return max((mono_degree(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {mono_degree(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_degree(self) -> int | None:
        """The common term degree, or None if inhomogeneous or zero."""
        degs = {mono_degree(e) for e in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list[tuple[Exponents, Fraction]]:
        """Terms in descending monomial order (the canonical presentation)."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Exponents:
        if not self.terms:
            raise InvalidArgumentError("the zero polynomial has no leading term")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    # -- arithmetic ----------------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"operands live in different rings ({self.ring.name!r} vs {other.ring.name!r})"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _raw(self.ring, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return _raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_ring(other)
        out: dict[Exponents, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = mono_mul(ea, eb)
                s = out.get(e, Fraction(0)) + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return _raw(self.ring, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.ring)
        return _raw(self.ring, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise InvalidArgumentError("negative polynomial powers are not defined")
        out = Polynomial.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    __hash__ = None  # mutable-dict backed; identity hashing would mislead

    # -- calculus and evaluation ----------------------------------------------

    def evaluate(self, values: Iterable[Scalar]) -> Fraction:
        vals = [Fraction(v) for v in values]
        if len(vals) != self.ring.nvars:
            raise InvalidArgumentError("wrong number of coordinates")
        acc = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t *= v**k
            acc += t
        return acc

    def derivative(self, which: int | str) -> "Polynomial":
        i = self.ring.variable_index(which) if isinstance(which, str) else which
        out: dict[Exponents, Fraction] = {}
        for e, c in self.terms.items():
            if e[i]:
                de = list(e)
                de[i] -= 1
                out[tuple(de)] = c * e[i]
        return _raw(self.ring, out)

    # -- presentation ----------------------------------------------------------

    def format(self, order: MonomialOrder = GREVLEX) -> str:
        """Render in the input-language syntax (sorted, explicit ``*`` and ``^``)."""
        if not self.terms:
            return "0"
        parts: list[str] = []
        for e, c in self.sorted_terms(order):
            factors = []
            for name, k in zip(self.ring.variables, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mono = "*".join(factors)
            if not mono:
                body = _coeff_str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{_coeff_str(abs(c))}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"<{self.ring.name}: {self.format()}>"


def _coeff_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _raw(ring: Ring, terms: dict[Exponents, Fraction]) -> Polynomial:
    """Build a Polynomial from an already-normalized term dict (internal)."""
    p = object.__new__(Polynomial)
    object.__setattr__(p, "ring", ring)
    object.__setattr__(p, "terms", terms)
    return p


def poly_normalize(ring: Ring, raw_terms: Iterable[tuple[Exponents, Scalar]]) -> Polynomial:
    """Merge like terms, reduce coefficients, drop zeros.  Idempotent."""
    return Polynomial(ring, raw_terms)


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def substitute_linear(f: Polynomial, mapping: Mapping[int | str, Polynomial]) -> Polynomial:
    """Compose f with an affine-linear substitution of its variables.

    Each target must be a polynomial of total degree at most 1 in the same
    ring (constants are allowed, so dehomogenizing at a chart variable is a
    special case).  Variables not mentioned map to themselves.
    """
    ring = f.ring
    targets: list[Polynomial] = [Polynomial.variable(ring, i) for i in range(ring.nvars)]
    for which, target in mapping.items():
        i = ring.variable_index(which) if isinstance(which, str) else which
        if target.ring != ring:
            raise RingMismatchError("substitution targets must live in the same ring")
        if target.total_degree() > 1:
            raise NonlinearSubstitutionError(
                f"substitution target for {ring.variables[i]!r} has degree > 1"
            )
        targets[i] = target
    acc = Polynomial.zero(ring)
    for e, c in f.terms.items():
        term = Polynomial.constant(ring, c)
        for i, k in enumerate(e):
            if k:
                term = term * targets[i] ** k
        acc = acc + term
    return acc


def compose(f: Polynomial, targets: Sequence[Polynomial], ring: Ring) -> Polynomial:
    """Substitute targets[i] (polynomials in ``ring``) for variable i of f."""
    if len(targets) != f.ring.nvars:
        raise InvalidArgumentError("need one substitution target per variable")
    acc = Polynomial.zero(ring)
    for e, c in f.terms.items():
        term = Polynomial.constant(ring, c)
        for i, k in enumerate(e):
            if k:
                term = term * targets[i] ** k
        acc = acc + term
    return acc


def dehomogenize(f: Polynomial, which: int | str | None = None) -> Polynomial:
    """Set one variable to 1 (the last variable by default)."""
    ring = f.ring
    if which is None:
        i = ring.nvars - 1
    else:
        i = ring.variable_index(which) if isinstance(which, str) else which
    return substitute_linear(f, {i: Polynomial.constant(ring, 1)})


def iter_monomials(nvars: int, degree: int) -> Iterator[Exponents]:
    """All exponent tuples of the given total degree, lexicographically."""
    if nvars == 1:
        yield (degree,)
        return
    for head in range(degree, -1, -1):
        for tail in iter_monomials(nvars - 1, degree - head):
            yield (head,) + tail

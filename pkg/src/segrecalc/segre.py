"""Pushforward Segre classes of projective subschemes via projective degrees.

For X a proper nonempty subscheme of P^n cut out by a homogeneous ideal, the
engine computes the integer vector of projective degrees (g_0, ..., g_n) of
the rational map given by generic equal-degree combinations of the
generators, then assembles the class

    s = 1 - sum_i g_i h^i (1 + d h)^-(i+1)   (truncated at h^(n+1))

where d is the common generator degree.  The assembly formula is validated
against the regular-embedding oracle s = c(N)^-1 . [X] on a suite of
complete intersections before being trusted on singular inputs; see the
tests.

Generic choices are drawn from a splittable hash-based generator so that
every run is reproducible from its seed.  A wrong-dimensional residual after
saturation triggers a re-randomized retry; results are additionally computed
under a second derived seed and must agree exactly.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Sequence

from .chow import ChowClass, SplitBundle, chow_class, class_inv, class_mul, one
from .errors import (
    GenericityFailureError,
    InternalConsistencyError,
    InvalidArgumentError,
    NotHomogeneousError,
)
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    hilbert_dim_degree,
    saturate_product_sweep,
    tangent_cone_multiplicity,
)
from .polyring import Polynomial, Ring, Scalar, compose, iter_monomials

from fractions import Fraction

MAX_RETRIES = 5
COEFF_BOUND = 10_000


def derive_seed(seed: int, *tags) -> int:
    """Split a seed deterministically; stable across platforms and runs."""
    h = hashlib.sha256(str(seed).encode())
    for t in tags:
        h.update(b"/")
        h.update(str(t).encode())
    return int.from_bytes(h.digest()[:8], "big")


def _int_stream(seed: int) -> Iterator[int]:
    """Uniform-ish integers in [-COEFF_BOUND, COEFF_BOUND] from a hash chain."""
    counter = 0
    while True:
        block = hashlib.sha256(f"{seed}#{counter}".encode()).digest()
        for i in range(0, 32, 4):
            yield int.from_bytes(block[i : i + 4], "big") % (2 * COEFF_BOUND + 1) - COEFF_BOUND
        counter += 1


def random_form(ring: Ring, degree: int, seed: int) -> Polynomial:
    """A dense random form of the given degree with bounded integer coefficients."""
    for attempt in range(MAX_RETRIES + 1):
        coeffs = _int_stream(derive_seed(seed, "form", attempt))
        terms = [(e, c) for e, c in zip(iter_monomials(ring.nvars, degree), coeffs)]
        p = Polynomial(ring, terms)
        if not p.is_zero():
            return p
    raise GenericityFailureError("random form came out zero repeatedly")


def _random_combination(gens: Sequence[Polynomial], seed: int) -> Polynomial:
    ring = gens[0].ring
    for attempt in range(MAX_RETRIES + 1):
        coeffs = islice(_int_stream(derive_seed(seed, "combo", attempt)), len(gens))
        p = Polynomial.zero(ring)
        for c, g in zip(coeffs, gens):
            p = p + g.scale(c)
        if not p.is_zero():
            return p
    raise GenericityFailureError("random combination came out zero repeatedly")


@dataclass(frozen=True)
class SchemeSpec:
    """A subscheme of P^n given by a homogeneous ideal that is neither zero
    nor (detectably) the whole ring."""

    ring: Ring
    ideal: Ideal
    label: str = "X"

    def __post_init__(self):
        if self.ideal.ring != self.ring:
            raise InvalidArgumentError("ideal does not live in the declared ring")
        if self.ideal.is_zero:
            raise InvalidArgumentError(f"scheme {self.label!r}: the zero ideal cuts all of P^n")
        if not self.ideal.homogeneous:
            raise NotHomogeneousError(f"scheme {self.label!r} needs homogeneous generators")


def scheme(ring: Ring, generators: Sequence[Polynomial], label: str = "X") -> SchemeSpec:
    return SchemeSpec(ring, Ideal(ring, tuple(generators)), label)


@dataclass(frozen=True)
class ProjectiveDegrees:
    common_degree: int
    g: tuple[int, ...]
    seed: int
    retries_used: int


@dataclass(frozen=True)
class SegreResult:
    """Pushforward to P^n of s(X, P^n), plus how it was obtained."""

    chow_class: ChowClass
    degrees: ProjectiveDegrees | None
    dim_x: int
    method: str  # "projective-degrees" | "regular-oracle"


def raise_to_common_degree(I: Ideal, seed: int) -> Ideal:
    """Regenerate I in a single degree d = max generator degree.

    Already-equal degrees (in particular a single generator) are returned
    unchanged.  Otherwise each of the ambient_dim + 1 + k output generators
    is a random integer combination sum_j c_j * (m_j * f_j) with m_j a random
    form of complementary degree, which generically preserves the saturation.
    """
    if I.is_zero:
        raise InvalidArgumentError("cannot raise the zero ideal")
    degs = []
    for g in I.generators:
        d = g.homogeneous_degree()
        if d is None:
            raise NotHomogeneousError("raising needs homogeneous generators")
        degs.append(d)
    d = max(degs)
    if all(x == d for x in degs):
        return I
    ring = I.ring
    count = ring.ambient_dim + 1 + len(I.generators)
    out = []
    for idx in range(count):
        coeffs = islice(_int_stream(derive_seed(seed, "mix", idx)), len(I.generators))
        p = Polynomial.zero(ring)
        for j, (c, g) in enumerate(zip(coeffs, I.generators)):
            m = random_form(ring, d - degs[j], derive_seed(seed, "pad", idx, j))
            p = p + (m * g).scale(c)
        if p.is_zero():
            raise GenericityFailureError("degree-raising produced a zero combination")
        out.append(p)
    return Ideal(ring, tuple(out))


def _section_targets(ring: Ring, i: int, seed: int) -> tuple[Ring, list[Polynomial]] | None:
    """Parametrize the intersection of n-i generic hyperplanes by P^i.

    Solves the random linear system for the trailing n-i coordinates in
    terms of the leading i+1, returning per-variable substitution targets in
    the section's coordinate ring, or None when the trailing block happens
    to be singular (callers retry with a fresh seed).
    """
    n = ring.ambient_dim
    k = n - i
    rows = [
        [Fraction(c) for c in islice(_int_stream(derive_seed(seed, "L", j)), n + 1)]
        for j in range(k)
    ]
    # solve T * x_tail = -H * x_head by Gaussian elimination on [T | -H]
    aug = [row[i + 1 :] + [-c for c in row[: i + 1]] for row in rows]
    for col in range(k):
        pivot = next((r for r in range(col, k) if aug[r][col]), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [c * inv for c in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    small = Ring(f"{ring.name}_sec{i}", ring.variables[: i + 1])
    head = [Polynomial.variable(small, b) for b in range(i + 1)]
    tail = [
        Polynomial(small, {e: aug[a][k + b] for b, e in enumerate(_unit_exponents(i + 1))})
        for a in range(k)
    ]
    return small, head + tail


def _unit_exponents(nvars: int):
    for b in range(nvars):
        e = [0] * nvars
        e[b] = 1
        yield tuple(e)


def projective_degrees(X: SchemeSpec, seed: int = 0) -> ProjectiveDegrees:
    """The vector (g_0, ..., g_n): g_i is the degree of the residual
    zero-dimensional scheme cut by i generic combinations and n-i generic
    hyperplanes after saturating X away.

    For i < n the hyperplane intersection is parametrized as a P^i and the
    combinations and X are pulled back to it, so the saturation runs in i+1
    variables; degrees of subschemes of a linear section agree with their
    ambient degrees, so g_i is unchanged.  X is saturated away one defining
    equation at a time (a sweep to a fixed point), which for the generic
    cuts built here removes exactly the part of the residual scheme
    supported on X.  A unit saturation means the residual is empty and
    g_i = 0; a residual of positive dimension means the random choices were
    degenerate and the computation retries with a derived seed.
    """
    I = X.ideal
    ring = X.ring
    n = ring.ambient_dim
    gb = buchberger(I)
    if gb.is_unit:
        raise InvalidArgumentError(f"scheme {X.label!r} is empty")
    raised = raise_to_common_degree(I, derive_seed(seed, "raise"))
    d = raised.generators[0].homogeneous_degree()
    g: list[int] = []
    retries = 0
    for i in range(n + 1):
        for attempt in range(MAX_RETRIES + 1):
            s = derive_seed(seed, "g", i, attempt)
            combos = [
                _random_combination(raised.generators, derive_seed(s, "P", j)) for j in range(i)
            ]
            if i == n:
                cut, x_ideal = Ideal(ring, tuple(combos)), I
            else:
                section = _section_targets(ring, i, s)
                if section is None:
                    continue
                small, targets = section
                x_gens = [compose(f, targets, small) for f in I.generators]
                if all(f.is_zero() for f in x_gens):
                    continue  # the section lies inside X: not generic
                cut = Ideal(small, tuple(compose(p, targets, small) for p in combos))
                x_ideal = Ideal(small, tuple(x_gens))
            residual, residual_gb = saturate_product_sweep(cut, x_ideal)
            hd = hilbert_dim_degree(residual, residual_gb)
            if hd.projective_dim <= 0:
                g.append(hd.degree)
                retries += attempt
                break
        else:
            raise GenericityFailureError(
                f"no generic choice found for g_{i} after {MAX_RETRIES} retries", index=i
            )
    return ProjectiveDegrees(d, tuple(g), seed, retries)


def segre_from_degrees(pd: ProjectiveDegrees, n: int) -> ChowClass:
    """Assemble 1 - sum_i g_i h^i (1 + d h)^-(i+1) on P^n."""
    inv = class_inv(chow_class(n, {0: 1, 1: pd.common_degree}))
    s = one(n)
    power = inv
    for i, gi in enumerate(pd.g):
        if gi:
            s = s - class_mul(chow_class(n, {i: gi}), power)
        power = class_mul(power, inv)
    return s


def segre_class(X: SchemeSpec, seed: int = 0) -> SegreResult:
    """Pushforward of s(X, P^n), cross-checked under two seeds.

    Every coefficient must come out an integer and a second derived seed must
    reproduce the class exactly; either failure aborts rather than returning
    a doubtful value.
    """
    n = X.ring.ambient_dim
    pd = projective_degrees(X, seed)
    cls = segre_from_degrees(pd, n)
    pd2 = projective_degrees(X, derive_seed(seed, "confirm"))
    if segre_from_degrees(pd2, n) != cls:
        raise InternalConsistencyError(
            f"projective degrees disagree across seeds: {pd.g} vs {pd2.g}"
        )
    if not cls.is_integral():
        raise InternalConsistencyError(f"non-integer Segre coefficients: {cls.format()}")
    dim_x = hilbert_dim_degree(X.ideal).projective_dim
    return SegreResult(cls, pd, dim_x, "projective-degrees")


def regular_segre_oracle(dim_x: int, deg_x: int, normal: SplitBundle, n: int) -> SegreResult:
    """s = c(N)^-1 . [X] for a regular embedding with split normal bundle.

    Independent of the projective-degrees path; used as the ground truth the
    pipeline is compared against.
    """
    if normal.rank != n - dim_x:
        raise InvalidArgumentError(
            f"normal bundle rank {normal.rank} != codimension {n - dim_x}"
        )
    cls = class_mul(class_inv(normal.total_chern(n)), chow_class(n, {n - dim_x: deg_x}))
    return SegreResult(cls, None, dim_x, "regular-oracle")


def point_segre_multiplicity(Y: SchemeSpec, point: Sequence[Scalar]) -> int:
    """Multiplicity of Y at a rational point (the degree of the Segre class
    of the point's embedding), measured by the tangent-cone oracle."""
    return tangent_cone_multiplicity(Y.ideal, point)

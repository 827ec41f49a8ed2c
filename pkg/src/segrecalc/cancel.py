"""Segre-class cancellation for complete-intersection ambients.

Given X inside Y inside P^n with Y cut by hypersurfaces of known degrees,
the pipeline computes

    c(N_Y|_X) . s(X, P^n)

reindexed by cycle dimension, which equals s(X, Y) whenever the embedding of
Y satisfies the required local-triviality hypothesis (smooth complete
intersections qualify).  That hypothesis is not machine-checkable, so it is
carried as a user assertion and stamped on every report; without it the
output is labelled a formal pipeline value.  The node of a nodal cubic is
the standard witness that the formula genuinely fails without the
hypothesis, and reports can carry the independent tangent-cone multiplicity
to expose such disagreements.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .chow import (
    ChowClass,
    DimIndexedClass,
    SplitBundle,
    cap_with_bundle,
    chow_class,
    class_mul,
    to_dim_indexed,
)
from .errors import ContainmentError, InvalidArgumentError, OutOfRangeError
from .groebner import buchberger, image_under_map, normal_form
from .polyring import Polynomial, Ring, Scalar
from .segre import (
    SchemeSpec,
    SegreResult,
    derive_seed,
    point_segre_multiplicity,
    regular_segre_oracle,
    segre_class,
)


def linear_reembedding(X: SchemeSpec, label: str | None = None) -> SchemeSpec:
    """Present X inside one more projective dimension: its image under the
    identity coordinates plus a zero coordinate lands in a hyperplane, so an
    ambient Y cut by degrees (d_1, ..., d_c) is cut there by
    (d_1, ..., d_c, 1)."""
    forms = [Polynomial.variable(X.ring, i) for i in range(X.ring.nvars)]
    forms.append(Polynomial.zero(X.ring))
    target = Ring(f"{X.ring.name}_plus", tuple(f"y{i}" for i in range(X.ring.nvars + 1)))
    img = image_under_map(X.ideal, forms, target)
    return SchemeSpec(target, img, label or f"{X.label}-reembedded")


@dataclass(frozen=True)
class CancellationInput:
    """X, the degrees of the hypersurfaces cutting the ambient Y, and the
    user's assertion that the embedding of Y qualifies for cancellation.

    ``Y`` itself is optional; when present the containment of X in Y is
    verified and point multiplicities on Y can be measured directly.
    ``point`` (coordinates of X when X is a single rational point) requests
    that direct check.  ``dim_x``, when given, is validated against the
    computed dimension.
    """

    X: SchemeSpec
    Y_degrees: SplitBundle
    hypothesis_asserted: bool = False
    Y: SchemeSpec | None = None
    point: tuple[Scalar, ...] | None = None
    dim_x: int | None = None


@dataclass
class CancellationReport:
    sXZ: SegreResult
    sXY: DimIndexedClass
    direct_check: int | None
    agrees: bool | None
    hypothesis_asserted: bool
    interpretation: str
    seeds: tuple[int, ...]


def cancel_segre(inp: CancellationInput, seed: int = 0) -> CancellationReport:
    """Cap s(X, P^n) with the total Chern class of Y's normal bundle.

    When a point and Y are supplied, the dim-0 entry is compared against the
    tangent-cone multiplicity of Y at that point; ``agrees`` records the
    outcome and is never patched over.
    """
    ring = inp.X.ring
    n = ring.ambient_dim
    if inp.Y_degrees.rank > n:
        raise InvalidArgumentError("more cutting hypersurfaces than the ambient dimension")
    if inp.Y is not None:
        if inp.Y.ring != ring:
            raise InvalidArgumentError("X and Y must live in the same projective space")
        gb = buchberger(inp.X.ideal)
        for g in inp.Y.ideal.generators:
            if not normal_form(g, gb).is_zero():
                raise ContainmentError(
                    f"{inp.X.label!r} is not contained in {inp.Y.label!r}"
                )
    sxz = segre_class(inp.X, seed)
    if inp.dim_x is not None and inp.dim_x != sxz.dim_x:
        raise InvalidArgumentError(
            f"declared dim {inp.dim_x} but computed dim {sxz.dim_x}"
        )
    capped = cap_with_bundle(inp.Y_degrees, sxz.chow_class)
    sxy = to_dim_indexed(capped, sxz.dim_x)
    direct = None
    agrees = None
    if inp.point is not None:
        if inp.Y is None:
            raise InvalidArgumentError("a direct point check needs Y's equations")
        direct = point_segre_multiplicity(inp.Y, inp.point)
        agrees = sxy.entries.get(0) == direct
    interpretation = (
        "s(X,Y)" if inp.hypothesis_asserted else "formal pipeline value (hypothesis not asserted)"
    )
    return CancellationReport(
        sXZ=sxz,
        sXY=sxy,
        direct_check=direct,
        agrees=agrees,
        hypothesis_asserted=inp.hypothesis_asserted,
        interpretation=interpretation,
        seeds=(seed,),
    )


@dataclass
class IndependenceReport:
    ok: bool
    class_a: DimIndexedClass
    class_b: DimIndexedClass

    def __bool__(self) -> bool:
        return self.ok


def verify_independence(
    a: CancellationInput, b: CancellationInput, seed: int = 0
) -> IndependenceReport:
    """Run the pipeline on two presentations of the same pair (X, Y) in
    different ambient projective spaces and compare the dimension-indexed
    outputs entry by entry."""
    ra = cancel_segre(a, derive_seed(seed, "indep", "a"))
    rb = cancel_segre(b, derive_seed(seed, "indep", "b"))
    if sorted(ra.sXY.entries) != sorted(rb.sXY.entries):
        raise InvalidArgumentError(
            "cannot compare: the two presentations have different dimensions"
        )
    return IndependenceReport(ra.sXY == rb.sXY, ra.sXY, rb.sXY)


@dataclass
class CompositionReport:
    ok: bool
    restricted: ChowClass
    capped: ChowClass

    def __bool__(self) -> bool:
        return self.ok


def verify_composition(
    r: int,
    m: int,
    n: int,
    degrees_y_in_z: SplitBundle,
    degrees_x_in_y: SplitBundle,
) -> CompositionReport:
    """Check the composition identity on a split complete-intersection flag
    X (dim r) in Y (dim m) in P^n: restricting s(Y, P^n) to X agrees with
    capping s(X, P^n) by c(N_X Y).  Both sides are in closed form."""
    if not 0 <= r <= m <= n:
        raise OutOfRangeError(f"need 0 <= r <= m <= n, got ({r}, {m}, {n})")
    if degrees_x_in_y.rank != m - r:
        raise InvalidArgumentError("X-in-Y degrees must number m - r")
    if degrees_y_in_z.rank != n - m:
        raise InvalidArgumentError("Y-in-Z degrees must number n - m")
    deg_y = prod(degrees_y_in_z.degrees)
    deg_x = deg_y * prod(degrees_x_in_y.degrees)
    s_yz = regular_segre_oracle(m, deg_y, degrees_y_in_z, n).chow_class
    # Gysin restriction to X: multiply by the product of the X-cutting
    # hyperplane sections, which carries [Y] to [X]
    restricted = class_mul(s_yz, chow_class(n, {m - r: prod(degrees_x_in_y.degrees)}))
    s_xz = regular_segre_oracle(r, deg_x, degrees_y_in_z.union(degrees_x_in_y), n).chow_class
    capped = cap_with_bundle(degrees_x_in_y, s_xz)
    return CompositionReport(restricted == capped, restricted, capped)

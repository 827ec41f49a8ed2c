import random
from fractions import Fraction
from itertools import combinations_with_replacement
from math import prod

import pytest

from segrecalc.errors import (
    InvalidArgumentError,
    NotAMorphismError,
)
from segrecalc.groebner import (
    GroebnerBasis,
    HilbertData,
    Ideal,
    buchberger,
    division_cofactors,
    eliminate,
    hilbert_dim_degree,
    ideal,
    ideal_contains,
    ideal_intersection,
    ideal_quotient,
    ideals_equal,
    image_under_map,
    is_groebner_basis,
    normal_form,
    saturate,
    spolynomial,
    tangent_cone_multiplicity,
)
from segrecalc.polyring import GREVLEX, LEX, Polynomial, Ring, elimination_order
from segrecalc.segre import derive_seed, random_form

from conftest import random_poly, variables


def basis_strings(G: GroebnerBasis) -> list[str]:
    return sorted(p.format(G.order) for p in G.basis)


def same_ideal_across_rings(I: Ideal, J: Ideal) -> bool:
    """Compare ideals living in rings that differ only by variable names."""
    assert I.ring.nvars == J.ring.nvars
    moved = Ideal(I.ring, tuple(Polynomial(I.ring, g.terms) for g in J.generators))
    return ideals_equal(I, moved)


class TestBuchberger:
    def test_already_reduced(self, p2):
        x, y, _ = variables(p2)
        assert basis_strings(buchberger(ideal(p2, x, y))) == ["x", "y"]

    def test_hand_reduction(self, p2):
        x, y, _ = variables(p2)
        assert basis_strings(buchberger(ideal(p2, x + y, x - y))) == ["x", "y"]

    def test_principal(self, p2):
        x, _, _ = variables(p2)
        for order in (GREVLEX, LEX):
            assert basis_strings(buchberger(ideal(p2, x), order)) == ["x"]

    def test_all_spolys_reduce(self, p3):
        rng = random.Random(23)
        for _ in range(25):
            gens = [random_poly(rng, p3, 2, 3) for _ in range(3)]
            I = Ideal(p3, tuple(gens))
            G = buchberger(I)
            assert is_groebner_basis(G)

    def test_deterministic(self, p3):
        x, y, z, w = variables(p3)
        gens = (x * z - y**2, x * w - y * z, y * w - z**2)
        a = buchberger(Ideal(p3, gens))
        b = buchberger(Ideal(p3, gens))
        assert a.basis == b.basis


class TestNormalForm:
    def test_membership(self, p2):
        x, y, _ = variables(p2)
        G = buchberger(ideal(p2, x, y))
        assert normal_form(x, G).is_zero()

    def test_non_membership(self, p2):
        x, y, z = variables(p2)
        G = buchberger(ideal(p2, x, y))
        assert normal_form(z, G) == z

    def test_division(self, p2):
        x, y, z = variables(p2)
        G = buchberger(ideal(p2, x, y))
        assert normal_form(x**2 + z, G) == z

    def test_cofactors_reexpand(self, p2):
        rng = random.Random(29)
        for _ in range(40):
            gens = [random_poly(rng, p2, 2, 3) for _ in range(2)]
            I = Ideal(p2, tuple(gens))
            if I.is_zero:
                continue
            G = buchberger(I)
            f = random_poly(rng, p2, 3, 5)
            qs, r = division_cofactors(f, G)
            recomposed = r
            for q, g in zip(qs, G.basis):
                recomposed = recomposed + q * g
            assert recomposed == f
            assert (normal_form(f, G) == r)
            if r.is_zero():
                assert ideal_contains(I, ideal(p2, f) if not f.is_zero() else Ideal(p2, ()))

    def test_spolynomial_shape(self, p2):
        x, y, _ = variables(p2)
        s = spolynomial(x**2 + y**2, x * y + x, GREVLEX)
        # the common leading monomial x^2 y cancels
        assert (2, 1, 0) not in s.terms
        assert s == y**3 - x**2


class TestQuotient:
    def test_principal_square(self, p2):
        x, _, _ = variables(p2)
        assert basis_strings(buchberger(ideal_quotient(ideal(p2, x**2), x))) == ["x"]

    def test_nonzerodivisor(self, p2):
        x, y, _ = variables(p2)
        assert basis_strings(buchberger(ideal_quotient(ideal(p2, y), x))) == ["y"]

    def test_quotient_by_own_generator(self, p2):
        x, _, _ = variables(p2)
        assert basis_strings(buchberger(ideal_quotient(ideal(p2, x), x))) == ["1"]

    def test_zero_divisor_rejected(self, p2):
        x, _, _ = variables(p2)
        with pytest.raises(InvalidArgumentError):
            ideal_quotient(ideal(p2, x), Polynomial.zero(p2))


class TestSaturate:
    def test_one_step(self, p2):
        x, y, z = variables(p2)
        got = saturate(ideal(p2, x * y, x * z), ideal(p2, x))
        assert basis_strings(buchberger(got)) == ["y", "z"]

    def test_already_saturated(self, p2):
        x, y, _ = variables(p2)
        got = saturate(ideal(p2, y), ideal(p2, x))
        assert basis_strings(buchberger(got)) == ["y"]

    def test_two_steps_to_unit(self, p2):
        x, _, _ = variables(p2)
        got = saturate(ideal(p2, x**2), ideal(p2, x))
        assert basis_strings(buchberger(got)) == ["1"]

    def test_nonprincipal_is_intersection_not_product(self, p2):
        # ((x) : (x,y)^inf) = (x); a generator-product saturation would give (1)
        x, y, _ = variables(p2)
        got = saturate(ideal(p2, x), ideal(p2, x, y))
        assert basis_strings(buchberger(got)) == ["x"]

    def test_irrelevant_component_removed(self, p2):
        x, y, z = variables(p2)
        m = ideal(p2, x, y, z)
        got = saturate(ideal(p2, x**2, x * y, x * z), m)
        assert basis_strings(buchberger(got)) == ["x"]

    def test_idempotent(self, p2):
        x, y, z = variables(p2)
        m = ideal(p2, x, y, z)
        for I in [ideal(p2, x * y, x * z), ideal(p2, x**2, x * y, x * z), ideal(p2, x**2)]:
            once = saturate(I, m)
            assert ideals_equal(saturate(once, m), once)

    def test_intersection(self, p2):
        x, y, _ = variables(p2)
        got = ideal_intersection(ideal(p2, x), ideal(p2, y))
        assert basis_strings(buchberger(got)) == ["x*y"]


class TestEliminate:
    def test_veronese_conic_relation(self):
        R = Ring("A", ("s", "t", "a", "b", "c"))
        s, t, a, b, c = variables(R)
        got = eliminate(ideal(R, a - s**2, b - s * t, c - t**2), ["s", "t"])
        assert len(got.generators) == 1
        rel = got.generators[0]
        assert rel.format() == "b^2 - a*c"
        # parametrization oracle: the relation vanishes identically on
        # (a, b, c) = (s^2, s t, t^2)
        rng = random.Random(31)
        for _ in range(20):
            sv, tv = Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9))
            assert rel.evaluate((sv * sv, sv * tv, tv * tv)) == 0

    def test_uninvolved_variable(self, p2):
        x, _, _ = variables(p2)
        got = eliminate(ideal(p2, x), ["y"])
        assert [g.format() for g in got.generators] == ["x"]

    def test_no_relation_survives(self, p2):
        x, y, _ = variables(p2)
        got = eliminate(ideal(p2, x - y), ["x"])
        assert got.is_zero

    def test_result_contained_and_free_of_vars(self, p3):
        rng = random.Random(37)
        for _ in range(10):
            gens = [random_poly(rng, p3, 2, 3) for _ in range(2)]
            I = Ideal(p3, tuple(gens))
            if I.is_zero:
                continue
            got = eliminate(I, [0])
            G = buchberger(I)
            for g in got.generators:
                lifted = Polynomial(p3, {(0,) + e: c for e, c in g.terms.items()})
                assert normal_form(lifted, G).is_zero()


class TestHilbert:
    def test_hyperplane_in_p2(self, p2):
        x, _, _ = variables(p2)
        assert hilbert_dim_degree(ideal(p2, x)) == HilbertData(1, 1)

    def test_two_generic_quadrics_p3(self, p3):
        q1 = random_form(p3, 2, derive_seed(0, "hq", 1))
        q2 = random_form(p3, 2, derive_seed(0, "hq", 2))
        assert hilbert_dim_degree(ideal(p3, q1, q2)) == HilbertData(1, 4)

    def test_point_in_p2(self, p2):
        x, y, _ = variables(p2)
        assert hilbert_dim_degree(ideal(p2, x, y)) == HilbertData(0, 1)

    def test_unit_ideal(self, p2):
        one = Polynomial.constant(p2, 1)
        assert hilbert_dim_degree(ideal(p2, one)) == HilbertData(-1, 0)

    def test_ci_grid(self):
        from segrecalc.acceptance import generic_ci

        for n in range(1, 5):
            for c in range(1, n + 1):
                for degs in combinations_with_replacement((1, 2, 3), c):
                    if n == 4 and sum(degs) > 9:
                        continue  # heaviest cases run in the acceptance suite
                    X = generic_ci(n, degs, 1)
                    hd = hilbert_dim_degree(X.ideal)
                    assert (hd.projective_dim, hd.degree) == (n - c, prod(degs)), (n, degs)


class TestTangentCone:
    def test_node(self, p2):
        x, y, z = variables(p2)
        I = ideal(p2, y**2 * z - x**3 - x**2 * z)
        assert tangent_cone_multiplicity(I, (0, 0, 1)) == 2

    def test_cusp(self, p2):
        x, y, z = variables(p2)
        assert tangent_cone_multiplicity(ideal(p2, y**2 * z - x**3), (0, 0, 1)) == 2

    def test_smooth_point(self, p2):
        x, y, z = variables(p2)
        I = ideal(p2, y**2 * z - x**3 - x**2 * z)
        assert tangent_cone_multiplicity(I, (-1, 0, 1)) == 1

    def test_point_off_scheme_rejected(self, p2):
        x, y, z = variables(p2)
        with pytest.raises(InvalidArgumentError):
            tangent_cone_multiplicity(ideal(p2, x), (1, 1, 1))

    def test_all_zero_point_rejected(self, p2):
        x, _, _ = variables(p2)
        with pytest.raises(InvalidArgumentError):
            tangent_cone_multiplicity(ideal(p2, x), (0, 0, 0))

    def test_matches_jacobian_rank_on_hypersurfaces(self, p2):
        # multiplicity 1 exactly where the dehomogenized Jacobian has rank 1
        x, y, z = variables(p2)
        cases = [
            (y**2 * z - x**3 - x**2 * z, (0, 0, 1)),
            (y**2 * z - x**3 - x**2 * z, (-1, 0, 1)),
            (y**2 * z - x**3, (0, 0, 1)),
            (x * z - y**2, (1, 0, 0)),
            (x * z - y**2, (0, 0, 1)),
            (z * y**2 * x - x**4 - y**4, (0, 0, 1)),
        ]
        for f, pt in cases:
            mult = tangent_cone_multiplicity(ideal(p2, f), pt)
            grad = [f.derivative(i).evaluate(pt) for i in range(3)]
            smooth = any(grad)
            assert (mult == 1) == smooth, (f.format(), pt)


class TestImageUnderMap:
    def test_veronese_conic(self):
        R = Ring("P1", ("s", "t"))
        s, t = variables(R)
        img = image_under_map(Ideal(R, ()), [s**2, s * t, t**2])
        G = buchberger(img)
        assert [g.format() for g in G.basis] == ["y1^2 - y0*y2"]

    def test_line_under_full_veronese(self, p2):
        x, y, z = variables(p2)
        monos = [x**2, x * y, x * z, y**2, y * z, z**2]
        img = image_under_map(ideal(p2, y), monos)
        assert hilbert_dim_degree(img) == HilbertData(1, 2)

    def test_identity_map(self, p2):
        x, y, z = variables(p2)
        I = ideal(p2, x * z - y**2)
        img = image_under_map(I, [x, y, z])
        assert same_ideal_across_rings(I, img)

    def test_base_locus_detected(self, p2):
        x, y, _ = variables(p2)
        # the pencil (x, y) has base point (0:0:1) lying on V(0) = P^2
        with pytest.raises(NotAMorphismError):
            image_under_map(Ideal(p2, ()), [x, y])

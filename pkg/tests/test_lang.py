from fractions import Fraction

import pytest

from segrecalc.corpus import error_fixtures, valid_sources
from segrecalc.errors import (
    DuplicateDefinitionError,
    NoRingError,
    SourceError,
    UndefinedIdentifierError,
)
from segrecalc.lang import parse_source, tokenize
from segrecalc.polyring import Polynomial


class TestParsing:
    def test_single_cubic(self):
        prog = parse_source("ring P vars x y z ; ideal C = y^2*z - x^3 - x^2*z ;")
        assert prog.ring.variables == ("x", "y", "z")
        assert list(prog.ideals) == ["C"]
        (gen,) = prog.ideals["C"].generators
        assert gen.homogeneous_degree() == 3
        assert len(gen.terms) == 3

    def test_ideal_before_ring_rejected(self):
        with pytest.raises(NoRingError):
            parse_source("ideal X = x , y ;")

    def test_inhomogeneous_is_a_job_error_not_a_parse_error(self):
        # parseable; the projective check fires when the ideal is used
        prog = parse_source("ring P vars x y z ; ideal B = x + 1 ;")
        from segrecalc.errors import NotHomogeneousError
        from segrecalc.segre import SchemeSpec

        with pytest.raises(NotHomogeneousError, match="B"):
            SchemeSpec(prog.ring, prog.ideals["B"], "B")

    def test_points_and_rationals(self):
        prog = parse_source(
            "ring P vars x y ; point q = ( -1/2 : 3 ) ; ideal I = 2/3*x - y ;"
        )
        assert prog.points["q"] == (Fraction(-1, 2), Fraction(3))
        (gen,) = prog.ideals["I"].generators
        assert gen.terms[(1, 0)] == Fraction(2, 3)

    def test_operator_precedence_and_parens(self):
        prog = parse_source("ring P vars x y ; ideal I = -x*(x + y)^2 + y^3 ;")
        (gen,) = prog.ideals["I"].generators
        x = Polynomial.variable(prog.ring, 0)
        y = Polynomial.variable(prog.ring, 1)
        assert gen == -x * (x + y) ** 2 + y**3

    def test_comments_and_positions(self):
        text = "# leading comment\nring P vars x ;\nideal I = x + q ;\n"
        with pytest.raises(UndefinedIdentifierError) as err:
            parse_source(text)
        assert err.value.line == 3 and err.value.col == 15

    def test_duplicate_names(self):
        with pytest.raises(DuplicateDefinitionError):
            parse_source("ring P vars x ; ideal I = x ; point I = ( 1 ) ;")

    def test_point_arity_checked(self):
        with pytest.raises(SourceError):
            parse_source("ring P vars x y z ; point p = ( 1 : 2 ) ;")

    def test_zero_denominator_rejected(self):
        with pytest.raises(SourceError):
            parse_source("ring P vars x ; ideal I = 1/0*x ;")

    def test_tokenizer_positions(self):
        toks = tokenize("ring P\n  vars x ;")
        assert toks[0] == ("ident", "ring", 1, 1)
        assert toks[2].line == 2 and toks[2].col == 3


class TestCorpus:
    def test_at_least_ten_files(self):
        assert len(valid_sources()) + len(error_fixtures()) >= 10

    @pytest.mark.parametrize("name,text", valid_sources(), ids=lambda v: str(v)[:30])
    def test_round_trip(self, name, text):
        prog = parse_source(text)
        assert parse_source(prog.pretty()) == prog

    @pytest.mark.parametrize("name,text,code", error_fixtures(), ids=lambda v: str(v)[:30])
    def test_error_fixture_codes(self, name, text, code):
        with pytest.raises(SourceError) as err:
            parse_source(text)
        assert err.value.code == code
        assert err.value.line >= 1 and err.value.col >= 1

"""Bundled example programs: valid sources plus one fixture per error path."""

from __future__ import annotations

from importlib import resources

VALID = (
    "conic.seg",
    "cuspidal_cubic.seg",
    "inhomogeneous.seg",
    "line_in_p3.seg",
    "nodal_cubic.seg",
    "point_p2.seg",
    "quadric_surface.seg",
    "quartic_triple_point.seg",
    "rational_coeffs.seg",
    "twisted_cubic.seg",
)

# fixture -> the error code its parse must raise
ERRORS = (
    ("err_bad_char.seg", "parse-error"),
    ("err_dup_name.seg", "duplicate-definition"),
    ("err_dup_ring.seg", "duplicate-definition"),
    ("err_no_ring.seg", "no-ring"),
    ("err_point_arity.seg", "parse-error"),
    ("err_syntax.seg", "parse-error"),
    ("err_undefined.seg", "undefined-identifier"),
)


def read(name: str) -> str:
    return (resources.files(__package__) / name).read_text()


def valid_sources() -> list[tuple[str, str]]:
    return [(name, read(name)) for name in VALID]


def error_fixtures() -> list[tuple[str, str, str]]:
    return [(name, read(name), code) for name, code in ERRORS]

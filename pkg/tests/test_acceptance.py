"""The acceptance gate: runs every criterion of the catalog at its stated
(exact) tolerance and prints one pass/fail line per criterion.

The catalog itself lives in segrecalc.acceptance so the CLI verify-suite
command runs the identical checks; this module asserts them and adds the
whole-suite byte-determinism comparison, which needs two independent runs.
"""

import sys

import pytest

from segrecalc import cli
from segrecalc.acceptance import CHECKS, run_all

CRITERIA = [
    "01-linear-segre",
    "02-hypersurface-catalog",
    "03-twisted-cubic",
    "04-cancel-smooth",
    "05-negative-control",
    "06-independence",
    "07-composition",
    "08-riemann-kempf",
    "09-cmk",
    "10-engine-properties",
    "11-cli",
]


@pytest.fixture(scope="module")
def catalog():
    results = {r.name: r for r in run_all(seed=0)}
    assert sorted(results) == CRITERIA
    return results


@pytest.mark.parametrize("name", CRITERIA)
def test_criterion(name, catalog):
    result = catalog[name]
    line = f"{'PASS' if result.ok else 'FAIL'} {name}"
    print(line, file=sys.stderr)
    assert result.ok, result.details


def test_verify_suite_byte_identical_across_runs():
    """Criterion 11, whole-suite form: two verify-suite runs with the same
    seed emit identical JSON bytes."""
    job = cli.JobSpec(command="verify-suite", seed=0, output="json")
    first = cli.emit_output(cli.run_job(None, job), "json")
    second = cli.emit_output(cli.run_job(None, job), "json")
    assert first == second
    assert '"failed": []' in first

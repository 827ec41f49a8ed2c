"""Command-line surface: parse a source program, run one named job, emit a
deterministic document.

    segrecalc --job segre --input conic.seg --ideal C --json
    segrecalc --job cancel --input nodal_cubic.seg --ideal N --y-ideal C \\
              --degrees 3 --point node
    segrecalc --job rkf --p 3 --d 2 --r 1
    segrecalc --job verify-suite --json

stdout carries the document, stderr anything else; the exit code is zero
exactly on success.  JSON output is byte-stable for fixed inputs and seed:
keys are sorted, integers are unquoted, non-integer rationals are "p/q"
strings.  Environment variables are never consulted.

Conventions fixed here: homogenization is with respect to the last ring
variable; the default seed is 0 and every generic choice derives from it.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import acceptance
from .cancel import CancellationInput, cancel_segre, linear_reembedding, verify_independence
from .chow import ChowClass, DimIndexedClass, SplitBundle
from .curves import (
    CMKInput,
    RKFInput,
    cmk_multiplicities,
    generalized_rkf_class,
    proof_chain_check,
    rkf_multiplicity,
    rkf_notes,
    theta_multiplicity_readings,
)
from .errors import JobError, SegrecalcError
from .lang import SourceProgram, parse_source
from .segre import SchemeSpec, point_segre_multiplicity, segre_class

SCHEMA_VERSION = "1"

COMMANDS = (
    "segre",
    "cancel",
    "independence",
    "multiplicity",
    "rkf",
    "cmk",
    "chain-check",
    "verify-suite",
)


@dataclass
class JobSpec:
    command: str
    ideal: str | None = None
    y_ideal: str | None = None
    point: str | None = None
    degrees: tuple[int, ...] | None = None
    p: int | None = None
    d: int | None = None
    r: int | None = None
    multz: int = 1
    nodes: int | None = None
    h0: int | None = None
    s: int | None = None
    assert_hypothesis: bool = False
    seed: int = 0
    output: str = "text"


@dataclass
class OutputDocument:
    command: str
    seed: int
    inputs: dict
    results: dict
    diagnostics: list = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION
    ok: bool = True


def _num(value) -> int | str:
    """Integers unquoted; other rationals as 'p/q' strings."""
    f = Fraction(value)
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _class_json(c: ChowClass) -> dict:
    return {f"h^{i}": _num(v) for i, v in enumerate(c.coeffs) if v}


def _dim_json(d: DimIndexedClass) -> dict:
    return {f"dim{k}": _num(v) for k, v in d.entries.items()}


def _require(condition, message: str):
    if not condition:
        raise JobError(message)


def _get_scheme(program: SourceProgram | None, name: str | None, what: str) -> SchemeSpec:
    _require(program is not None, f"this command needs --input with {what}")
    _require(name is not None, f"this command needs {what}")
    _require(name in program.ideals, f"no ideal named {name!r} in the program")
    return SchemeSpec(program.ring, program.ideals[name], name)


def _get_point(program: SourceProgram, name: str) -> tuple[Fraction, ...]:
    _require(name in program.points, f"no point named {name!r} in the program")
    return program.points[name]


def run_job(program: SourceProgram | None, job: JobSpec) -> OutputDocument:
    """Dispatch one job; deterministic for fixed program, job and seed."""
    handler = _HANDLERS.get(job.command)
    if handler is None:
        raise JobError(f"unknown command {job.command!r}")
    return handler(program, job)


def _job_segre(program, job) -> OutputDocument:
    X = _get_scheme(program, job.ideal, "--ideal")
    res = segre_class(X, job.seed)
    return OutputDocument(
        command="segre",
        seed=job.seed,
        inputs={"ideal": job.ideal},
        results={
            "class": _class_json(res.chow_class),
            "class_text": res.chow_class.format(),
            "dim": res.dim_x,
            "method": res.method,
            "projective_degrees": list(res.degrees.g),
            "common_degree": res.degrees.common_degree,
            "retries": res.degrees.retries_used,
        },
    )


def _job_multiplicity(program, job) -> OutputDocument:
    Y = _get_scheme(program, job.ideal, "--ideal")
    _require(job.point is not None, "multiplicity needs --point")
    pt = _get_point(program, job.point)
    mult = point_segre_multiplicity(Y, pt)
    return OutputDocument(
        command="multiplicity",
        seed=job.seed,
        inputs={"ideal": job.ideal, "point": job.point},
        results={"multiplicity": mult},
    )


def _cancel_input(program, job) -> CancellationInput:
    X = _get_scheme(program, job.ideal, "--ideal")
    _require(job.degrees is not None, "this command needs --degrees")
    Y = _get_scheme(program, job.y_ideal, "--y-ideal") if job.y_ideal else None
    pt = _get_point(program, job.point) if job.point else None
    return CancellationInput(
        X,
        SplitBundle(job.degrees),
        hypothesis_asserted=job.assert_hypothesis,
        Y=Y,
        point=pt,
    )


def _job_cancel(program, job) -> OutputDocument:
    rep = cancel_segre(_cancel_input(program, job), job.seed)
    diagnostics = []
    if not rep.hypothesis_asserted:
        diagnostics.append(
            {
                "code": "hypothesis-not-asserted",
                "message": "output is a formal pipeline value; the embedding "
                "hypothesis was not asserted",
            }
        )
    results = {
        "s_x_pn": _class_json(rep.sXZ.chow_class),
        "s_x_y": _dim_json(rep.sXY),
        "dim": rep.sXZ.dim_x,
        "interpretation": rep.interpretation,
        "hypothesis_asserted": rep.hypothesis_asserted,
    }
    if rep.direct_check is not None:
        results["direct_check"] = rep.direct_check
        results["agrees"] = rep.agrees
    return OutputDocument(
        command="cancel",
        seed=job.seed,
        inputs={
            "ideal": job.ideal,
            "y_ideal": job.y_ideal,
            "degrees": list(job.degrees),
            "point": job.point,
        },
        results=results,
        diagnostics=diagnostics,
    )


def _job_independence(program, job) -> OutputDocument:
    X = _get_scheme(program, job.ideal, "--ideal")
    _require(job.degrees is not None, "independence needs --degrees")
    Y = _get_scheme(program, job.y_ideal, "--y-ideal") if job.y_ideal else None
    a = CancellationInput(X, SplitBundle(job.degrees), hypothesis_asserted=True, Y=Y)
    b = CancellationInput(
        linear_reembedding(X, f"{X.label}-reembedded"),
        SplitBundle(tuple(job.degrees) + (1,)),
        hypothesis_asserted=True,
        Y=linear_reembedding(Y, f"{Y.label}-reembedded") if Y else None,
    )
    rep = verify_independence(a, b, job.seed)
    return OutputDocument(
        command="independence",
        seed=job.seed,
        inputs={"ideal": job.ideal, "y_ideal": job.y_ideal, "degrees": list(job.degrees)},
        results={
            "independent": rep.ok,
            "class_in_given_space": _dim_json(rep.class_a),
            "class_reembedded": _dim_json(rep.class_b),
        },
        ok=rep.ok,
    )


def _job_rkf(program, job) -> OutputDocument:
    _require(None not in (job.p, job.d, job.r), "rkf needs --p, --d and --r")
    inp = RKFInput(job.p, job.d, job.r, mult_z=job.multz)
    cls = generalized_rkf_class(inp)
    diagnostics = [{"code": "reading-note", "message": note} for note in rkf_notes(inp)]
    if job.d == job.p - 1:
        readings = theta_multiplicity_readings(job.multz, job.r + 1)
        diagnostics.append(
            {
                "code": "theta-readings",
                "message": "theta multiplicity readings at d = p - 1: "
                f"corollary display {readings['corollary_display']}, "
                f"binomial specialization {readings['binomial_specialization']}",
            }
        )
    return OutputDocument(
        command="rkf",
        seed=job.seed,
        inputs={"p": job.p, "d": job.d, "r": job.r, "multz": job.multz},
        results={
            "multiplicity": rkf_multiplicity(inp),
            "class": _class_json(cls),
            "class_text": cls.format(),
        },
        diagnostics=diagnostics,
    )


def _job_cmk(program, job) -> OutputDocument:
    _require(None not in (job.nodes, job.h0), "cmk needs --nodes and --h0")
    pic, theta = cmk_multiplicities(CMKInput(job.nodes, job.h0))
    return OutputDocument(
        command="cmk",
        seed=job.seed,
        inputs={"nodes": job.nodes, "h0": job.h0},
        results={"mult_pic": pic, "mult_theta": theta},
    )


def _job_chain_check(program, job) -> OutputDocument:
    _require(None not in (job.p, job.d, job.r, job.s), "chain-check needs --p, --d, --r and --s")
    rep = proof_chain_check(RKFInput(job.p, job.d, job.r, mult_z=job.multz, s=job.s))
    return OutputDocument(
        command="chain-check",
        seed=job.seed,
        inputs={"p": job.p, "d": job.d, "r": job.r, "s": job.s, "multz": job.multz},
        results={
            "ok": rep.ok,
            "solve_step": rep.solve_step_ok,
            "cancellation_step": rep.cancel_step_ok,
            "large_degree_exponent": rep.large_exponent,
            "final_exponent": rep.final_exponent,
        },
        ok=rep.ok,
    )


def _job_verify_suite(program, job) -> OutputDocument:
    results = acceptance.run_all(job.seed)
    checks = {
        r.name: {"ok": r.ok, **{k: v for k, v in r.details.items() if k != "failures"}}
        for r in results
    }
    failed = [r.name for r in results if not r.ok]
    for r in results:
        if not r.ok:
            checks[r.name]["failures"] = [str(f) for f in r.details.get("failures", [])]
    return OutputDocument(
        command="verify-suite",
        seed=job.seed,
        inputs={},
        results={
            "checks": checks,
            "passed": len(results) - len(failed),
            "failed": failed,
        },
        ok=not failed,
    )


_HANDLERS = {
    "segre": _job_segre,
    "cancel": _job_cancel,
    "independence": _job_independence,
    "multiplicity": _job_multiplicity,
    "rkf": _job_rkf,
    "cmk": _job_cmk,
    "chain-check": _job_chain_check,
    "verify-suite": _job_verify_suite,
}


# ---------------------------------------------------------------------------
# emission


def _doc_dict(doc: OutputDocument) -> dict:
    return {
        "schema_version": doc.schema_version,
        "command": doc.command,
        "seed": doc.seed,
        "inputs": doc.inputs,
        "results": doc.results,
        "diagnostics": doc.diagnostics,
    }


def emit_output(doc: OutputDocument, mode: str) -> str:
    if mode == "json":
        return json.dumps(_doc_dict(doc), sort_keys=True, indent=2) + "\n"
    lines = [f"command: {doc.command}", f"seed: {doc.seed}"]
    for key, value in sorted(doc.inputs.items()):
        if value is not None:
            lines.append(f"input {key}: {value}")
    lines.extend(_render_text("", doc.results))
    for diag in doc.diagnostics:
        lines.append(f"note [{diag['code']}]: {diag['message']}")
    return "\n".join(lines) + "\n"


def _render_text(prefix: str, value) -> list[str]:
    if isinstance(value, dict):
        out = []
        for key in value:
            out.extend(_render_text(f"{prefix}{key}.", value[key]) if isinstance(value[key], dict)
                       else [f"{prefix}{key}: {_plain(value[key])}"])
        return out
    return [f"{prefix}: {_plain(value)}"]


def _plain(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(str(x) for x in v) + "]"
    return str(v)


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="segrecalc",
        description="Segre classes of projective subschemes, cancellation "
        "pipelines, and multiplicity formula checks over exact rationals.",
    )
    parser.add_argument("--job", required=True, choices=COMMANDS)
    parser.add_argument("--input", help="source program file")
    parser.add_argument("--seed", type=int, default=0, help="seed for generic choices")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--ideal", help="name of the subject ideal")
    parser.add_argument("--y-ideal", dest="y_ideal", help="name of the enclosing ideal Y")
    parser.add_argument("--point", help="name of a declared point")
    parser.add_argument("--degrees", help="comma-separated hypersurface degrees, e.g. 2,1")
    parser.add_argument("--p", type=int, help="arithmetic genus")
    parser.add_argument("--d", type=int, help="degree parameter")
    parser.add_argument("--r", type=int, help="fiber dimension")
    parser.add_argument("--multz", type=int, default=1, help="base point multiplicity")
    parser.add_argument("--nodes", type=int, help="number of nodes")
    parser.add_argument("--h0", type=int, help="h^0 value")
    parser.add_argument("--s", type=int, help="degree raise for the chain check")
    parser.add_argument(
        "--assert-hypothesis",
        dest="assert_hypothesis",
        action="store_true",
        help="assert that the ambient embedding satisfies the cancellation hypothesis",
    )
    return parser


def _parse_degrees(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise JobError(f"bad --degrees value {text!r}; expected integers like 2,1") from None


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    mode = "json" if args.json else "text"
    job = JobSpec(
        command=args.job,
        ideal=args.ideal,
        y_ideal=args.y_ideal,
        point=args.point,
        degrees=None,
        p=args.p,
        d=args.d,
        r=args.r,
        multz=args.multz,
        nodes=args.nodes,
        h0=args.h0,
        s=args.s,
        assert_hypothesis=args.assert_hypothesis,
        seed=args.seed,
        output=mode,
    )
    try:
        job.degrees = _parse_degrees(args.degrees)
        program = None
        if args.input:
            with open(args.input, encoding="utf-8") as fh:
                program = parse_source(fh.read())
        doc = run_job(program, job)
    except SegrecalcError as exc:
        doc = OutputDocument(
            command=args.job,
            seed=args.seed,
            inputs={},
            results={},
            diagnostics=[{"code": exc.code, "message": str(exc)}],
            ok=False,
        )
        sys.stdout.write(emit_output(doc, mode))
        return 1
    except OSError as exc:
        doc = OutputDocument(
            command=args.job,
            seed=args.seed,
            inputs={},
            results={},
            diagnostics=[{"code": "io-error", "message": str(exc)}],
            ok=False,
        )
        sys.stdout.write(emit_output(doc, mode))
        return 1
    sys.stdout.write(emit_output(doc, mode))
    if args.job == "verify-suite" and not doc.ok:
        _print_failures(doc)
        return 1
    return 0 if doc.ok else 1


def _print_failures(doc: OutputDocument) -> None:
    for name in doc.results.get("failed", []):
        sys.stderr.write(f"FAILED: {name}\n")


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

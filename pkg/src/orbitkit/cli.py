"""Command-line frontend.

Commands
    orbits <TYPE>                         nilpotent orbit count of one type
    embed <G> <R> [--l N]                 verdict for one embedding case
    report appendix [--lmax N] [--format text|json]
                                          full case-analysis reproduction
    lnd verify [--cap N]                  SL2 derivation verification suite

Exit codes: 0 pass, 1 check failure, 2 usage or parse error,
3 unsupported case.  Reports go to stdout, diagnostics to stderr.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from . import __version__
from .embedcheck import (
    CaseVerdict,
    InconsistencyError,
    UnsupportedCaseError,
    Witness,
    dimension_gap_exceptions,
    embedding_verdict,
    principal_table,
    rank2_cases_report,
    subregular_membership_check,
)
from .lndcalc import (
    NotNilpotentError,
    delta_degree,
    hypersurface_identity_holds,
    is_in_kernel,
    preserves_relations,
    sign_flip_fixes_hypersurface,
    sl2_coordinate_ring,
    sl2_standard_derivations,
    verify_semicompatibility_witness,
)
from .orbits import nilpotent_orbit_count
from .rootsys import InvalidLieTypeError, LieType

__all__ = ["Record", "Report", "main", "console_main",
           "EXIT_PASS", "EXIT_CHECK_FAILURE", "EXIT_USAGE", "EXIT_UNSUPPORTED"]

EXIT_PASS = 0
EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3


def _jsonable(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else \
            f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


@dataclass
class Record:
    kind: str  # orbit-count | table-row | verdict | lnd-check
    anchor: str
    inputs: dict
    outputs: dict
    passed: bool

    def to_dict(self) -> dict:
        return {"kind": self.kind, "anchor": self.anchor,
                "inputs": _jsonable(self.inputs), "outputs": _jsonable(self.outputs),
                "pass": self.passed}

    @classmethod
    def from_dict(cls, data: dict) -> "Record":
        return cls(kind=data["kind"], anchor=data["anchor"], inputs=data["inputs"],
                   outputs=data["outputs"], passed=data["pass"])

    def text_line(self) -> str:
        detail = " ".join(f"{k}={v}" for k, v in _jsonable(self.outputs).items()
                          if v is not None)
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.anchor}: {detail}"


@dataclass
class Report:
    command: str
    results: list[Record] = field(default_factory=list)
    tool_version: str = __version__

    @property
    def status(self) -> str:
        if not self.results:
            return "partial"
        return "pass" if all(r.passed for r in self.results) else "fail"

    def to_dict(self) -> dict:
        return {"version": self.tool_version, "command": self.command,
                "status": self.status, "results": [r.to_dict() for r in self.results]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        report = cls(command=data["command"],
                     results=[Record.from_dict(r) for r in data["results"]],
                     tool_version=data["version"])
        if report.status != data["status"]:
            raise ValueError(f"inconsistent status field: {data['status']}")
        return report

    def render_text(self) -> str:
        lines = [f"orbitkit {self.tool_version} -- {self.command}"]
        lines += [r.text_line() for r in self.results]
        lines.append(f"status: {self.status} ({len(self.results)} records)")
        return "\n".join(lines)


def _verdict_outputs(v: CaseVerdict) -> dict:
    out: dict[str, Any] = {"criterion": v.criterion, "witness": v.witness,
                           "holds": v.holds}
    out.update(v.numbers)
    if v.partition is not None:
        out["partition"] = str(v.partition)
    if v.citation is not None:
        out["citation"] = v.citation
    if v.note is not None:
        out["note"] = v.note
    return out


def _verdict_record(v: CaseVerdict, anchor: str) -> Record:
    return Record(kind="verdict", anchor=anchor,
                  inputs={"g": str(v.case.g_type), "r": str(v.case.r_type),
                          "l": v.case.family_parameter},
                  outputs=_verdict_outputs(v), passed=v.holds)


# -- command handlers ----------------------------------------------------


def cmd_orbits(args) -> tuple[Report, int]:
    t = LieType.from_string(args.type)
    oc = nilpotent_orbit_count(t)
    record = Record(
        kind="orbit-count", anchor=f"nilpotent orbit count {t}",
        inputs={"type": str(t)},
        outputs={"count": oc.count, "method": oc.method, "notes": list(oc.notes)},
        passed=True)
    return Report(command=f"orbits {args.type}", results=[record]), EXIT_PASS


def cmd_embed(args) -> tuple[Report, int]:
    g = LieType.from_string(args.g)
    r = LieType.from_string(args.r)
    verdict = embedding_verdict(g, r)
    if args.l is not None and verdict.case.family_parameter != args.l:
        print(f"--l {args.l} does not match the family parameter"
              f" {verdict.case.family_parameter} of {g} > {r}", file=sys.stderr)
        return Report(command=_embed_command(args)), EXIT_USAGE
    record = _verdict_record(verdict, f"embedding verdict: {g} > {r}")
    code = EXIT_PASS if verdict.holds and verdict.witness is not Witness.NONE \
        else EXIT_CHECK_FAILURE
    return Report(command=_embed_command(args), results=[record]), code


def _embed_command(args) -> str:
    extra = f" --l {args.l}" if args.l is not None else ""
    return f"embed {args.g} {args.r}{extra}"


def cmd_report_appendix(args) -> tuple[Report, int]:
    if args.lmax < 4:
        print(f"--lmax must be at least 4, got {args.lmax}", file=sys.stderr)
        return Report(command="report appendix"), EXIT_USAGE
    l_max = args.lmax
    results = []
    for v in rank2_cases_report(l_max):
        case_no = v.numbers.get("case")
        results.append(_verdict_record(v, f"orbit-count case ({case_no}): {v.case}"))
    rows = principal_table(l_max)
    for row in rows:
        suffix = f" l={row.case.family_parameter}" if row.case.family_parameter else ""
        outputs = {"rank_plus_3": row.rank_plus_3, "dim_gap": row.dim_gap,
                   "gap_exceeds": row.gap_exceeds}
        if row.alias_note:
            outputs["alias"] = row.alias_note
        results.append(Record(
            kind="table-row", anchor=f"principal table row: {row.case}{suffix}",
            inputs={"g": str(row.case.g_type), "r": str(row.case.r_type),
                    "l": row.case.family_parameter},
            outputs=outputs, passed=True))
    for row in rows:
        v = subregular_membership_check(row.case.g_type, row.case.r_type)
        results.append(_verdict_record(v, f"subregular check: {v.case}"))
    exceptions = sorted(str(c) for c in dimension_gap_exceptions(l_max))
    expected = ["A3 > B2", "D4 > B3"]
    results.append(Record(
        kind="table-row", anchor="dimension-gap exception set",
        inputs={"l_max": l_max},
        outputs={"expected": expected, "found": exceptions},
        passed=exceptions == expected))
    report = Report(command=f"report appendix --lmax {l_max}", results=results)
    return report, EXIT_PASS if report.status == "pass" else EXIT_CHECK_FAILURE


def cmd_lnd_verify(args) -> tuple[Report, int]:
    cap = args.cap
    ring = sl2_coordinate_ring()
    d1, d2 = sl2_standard_derivations()
    gens = {name: ring.generator(name) for name in ring.gens}
    results = []

    d1_preserves = preserves_relations(ring, d1)
    d2_preserves = preserves_relations(ring, d2)
    results.append(Record(
        kind="lnd-check", anchor="determinant relation preserved",
        inputs={"relation": "a1*b2 - a2*b1 - 1"},
        outputs={"d1": d1_preserves, "d2": d2_preserves},
        passed=d1_preserves and d2_preserves))

    degrees = {}
    nilpotent = True
    for label, d in (("d1", d1), ("d2", d2)):
        for name, g in gens.items():
            try:
                degrees[f"deg_{label}({name})"] = delta_degree(ring, d, g, cap)
            except NotNilpotentError:
                nilpotent = False
                degrees[f"deg_{label}({name})"] = f">{cap}"
    results.append(Record(
        kind="lnd-check", anchor=f"local nilpotence on generators (cap {cap})",
        inputs={"cap": cap}, outputs=degrees, passed=nilpotent))

    memberships = {
        "a1 in ker d1": is_in_kernel(ring, d1, gens["a1"]),
        "a2 in ker d1": is_in_kernel(ring, d1, gens["a2"]),
        "b1 in ker d2": is_in_kernel(ring, d2, gens["b1"]),
        "b2 in ker d2": is_in_kernel(ring, d2, gens["b2"]),
        "b1 not in ker d1": not is_in_kernel(ring, d1, gens["b1"]),
        "a1 not in ker d2": not is_in_kernel(ring, d2, gens["a1"]),
    }
    results.append(Record(
        kind="lnd-check", anchor="kernel memberships",
        inputs={}, outputs=memberships, passed=all(memberships.values())))

    witness = verify_semicompatibility_witness(
        ring, d1, d2, [gens["a1"], gens["a2"]], [gens["b1"], gens["b2"]])
    results.append(Record(
        kind="lnd-check", anchor="semi-compatibility witness",
        inputs={"kernel1": ["a1", "a2"], "kernel2": ["b1", "b2"],
                "degree_cap": witness.degree_cap},
        outputs={"equation": witness.equation(), "found_degree": witness.found_degree},
        passed=witness.found))

    a = ring.element("a1*b2")
    deg1 = delta_degree(ring, d1, a, cap)
    deg2 = delta_degree(ring, d2, a, cap)
    results.append(Record(
        kind="lnd-check", anchor="compatibility element a1*b2",
        inputs={"a": "a1*b2"},
        outputs={"deg_d1(a1*b2)": deg1, "deg_d2(a1*b2)": deg2},
        passed=deg1 == 1 and deg2 <= 1))

    reduces = hypersurface_identity_holds()
    results.append(Record(
        kind="lnd-check", anchor="invariant hypersurface",
        inputs={"u": "a1*a2", "v": "b1*b2", "z": "a2*b1 + 1/2"},
        outputs={"identity": "u*v - z^2 + 1/4 == 0 in C[SL2]", "reduces_to_zero": reduces},
        passed=reduces))

    flip_fixed = sign_flip_fixes_hypersurface()
    results.append(Record(
        kind="lnd-check", anchor="sign-flip equivariance",
        inputs={"action": "(u,v,z) -> (-u,-v,-z)"},
        outputs={"fixes_hypersurface": flip_fixed},
        passed=flip_fixed))

    report = Report(command=f"lnd verify --cap {cap}", results=results)
    return report, EXIT_PASS if report.status == "pass" else EXIT_CHECK_FAILURE


# -- argument parsing ------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitkit",
        description="exact verification of orbit counts, embedding case"
                    " analyses, and the SL2 derivation calculus")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbits", help="nilpotent orbit count for one simple type")
    p.add_argument("type", help="Lie type label, e.g. A3, B2, E6")
    p.set_defaults(handler=cmd_orbits)

    p = sub.add_parser("embed", help="embedding verdict for a pair of types")
    p.add_argument("g")
    p.add_argument("r")
    p.add_argument("--l", type=int, default=None,
                   help="expected family parameter (cross-checked)")
    p.set_defaults(handler=cmd_embed)

    p = sub.add_parser("report", help="batch reproductions")
    rsub = p.add_subparsers(dest="report_kind", required=True)
    ap = rsub.add_parser("appendix", help="full case-analysis reproduction")
    ap.add_argument("--lmax", type=int, default=50)
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.set_defaults(handler=cmd_report_appendix)

    p = sub.add_parser("lnd", help="derivation calculus checks")
    lsub = p.add_subparsers(dest="lnd_kind", required=True)
    vp = lsub.add_parser("verify", help="run the SL2 derivation suite")
    vp.add_argument("--cap", type=int, default=4,
                    help="iteration cap for nilpotence certification")
    vp.set_defaults(handler=cmd_lnd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        report, code = args.handler(args)
    except InvalidLieTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnsupportedCaseError as exc:
        print(f"unsupported case: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILURE
    if report.results:
        if getattr(args, "format", "text") == "json":
            print(report.to_json())
        else:
            print(report.render_text())
    return code


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()

"""Command-line front end.

Exit codes: 0 = success, 1 = usage, I/O or schema problems, 2 = domain
violations (invalid datum, failed audit assertion), so shell pipelines can
tell bad input from bad math.  All output is deterministic for fixed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .audit import FAIL, audit_passed, run_audit
from .boundary import (BoundaryDatum, datum_from_jsonable, datum_to_jsonable, datum_warnings,
                       dual_graph_of_groups, quotient_stability, tuple_from_jsonable,
                       tuple_to_jsonable, validate)
from .cohomology import (character_to_jsonable, classes_to_jsonable, de_rham_character,
                         render_character_table)
from .covers import CoverCurve, build_cover, cover_report, cover_to_dot, node_class_summary
from .degen import dihedral_degenerations, local_model_fixpoint_orbits, predicted_fixpoint_orbits, \
    dedup as dedup_degenerations, split_degenerations
from .errors import HurwitzDegenError, InvalidDatum, SchemaError


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the contract reserves 2 for
    # domain violations, so remap usage problems to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(path, f"cannot read file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(path, f"invalid JSON at line {exc.lineno} column {exc.colno}: "
                                f"{exc.msg}") from None


def _node_classes_with_smoothing(cover: CoverCurve) -> tuple[list[dict], list[str]]:
    warnings = []
    out = []
    for entry in node_class_summary(cover):
        entry = dict(entry)
        if entry["kind"] == "dihedral":
            order = entry["stabilizer_order"]
            oracle = local_model_fixpoint_orbits(order // 2)
            predicted = predicted_fixpoint_orbits(order)
            entry["smoothing_fixpoint_orbits"] = {
                "local_model": oracle,
                "involution_class_prediction": predicted,
                "agree": oracle == predicted,
            }
            if oracle != predicted:
                warnings.append(
                    f"smoothing a stabilizer-order-{order} dihedral node: local model "
                    f"gives {oracle} fixpoint orbits, the involution-class count "
                    f"predicts {predicted}")
        else:
            entry["smoothing_fixpoint_orbits"] = None
        out.append(entry)
    return out, warnings


def analyze_datum(datum: BoundaryDatum) -> tuple[dict, int]:
    """Full analysis report plus the analyze exit code (0 or 2)."""
    violations = validate(datum)
    stable_quotient = quotient_stability(datum)
    warnings = list(datum_warnings(datum))
    if not stable_quotient:
        warnings.append("quotient curve is not stable "
                        "(a rational component has fewer than 3 marked points)")
    report: dict = {
        "datum": datum_to_jsonable(datum),
        "validation": {
            "ok": not violations,
            "violations": [{"kind": v.kind, "location": v.location, "detail": v.detail}
                           for v in violations],
            "quotient_stable": stable_quotient,
        },
        "cover": None,
        "characters": None,
        "warnings": warnings,
    }
    if violations:
        return report, 2

    cover = build_cover(datum)
    cov = cover_report(cover)
    cov["node_classes"], smoothing_warnings = _node_classes_with_smoothing(cover)
    warnings.extend(smoothing_warnings)
    report["cover"] = cov
    if not cov["connected"]:
        warnings.append("cover is disconnected; arithmetic genus reported per component")

    dev = de_rham_character(cover)
    G = datum.group
    chars: dict = {
        "classes": classes_to_jsonable(G),
        "positive_genus": dev.positive_genus,
        "connected": dev.connected,
        "degree_chi_dR": dev.degree_chi_dR,
        "chi_dR": None,
        "chi_dR_literal": None,
        "chi_normalization": None,
        "edge_induction_sum": None,
        "h1": None,
    }
    if not dev.positive_genus:
        chars["chi_dR"] = character_to_jsonable(dev.chi_dR)
        chars["chi_dR_literal"] = character_to_jsonable(dev.chi_dR_literal)
        chars["chi_normalization"] = character_to_jsonable(dev.chi_normalization)
        chars["edge_induction_sum"] = character_to_jsonable(dev.edge_induction_sum)
        if dev.h1_character is not None:
            chars["h1"] = character_to_jsonable(dev.h1_character)
    else:
        warnings.append("positive-genus normalization components: character withheld, "
                        "only deg chi_dR = 2 - 2*g_a reported")
    report["characters"] = chars
    return report, 0


def _print_pretty(report: dict, out) -> None:
    datum = report["datum"]
    print(f"group: degree {datum['group']['degree']}, "
          f"{len(datum['components'])} quotient component(s)", file=out)
    val = report["validation"]
    if val["ok"]:
        print("validation: ok", file=out)
    else:
        print(f"validation: {len(val['violations'])} violation(s)", file=out)
        for v in val["violations"]:
            print(f"  - {v['kind']} at {v['location']}: {v['detail']}", file=out)
    print(f"quotient stable: {'yes' if val['quotient_stable'] else 'no'}", file=out)
    cov = report["cover"]
    if cov:
        ga = cov["arithmetic_genus"]
        print(f"cover: {cov['component_count']} component(s), {cov['node_count']} node(s), "
              f"connected={'yes' if cov['connected'] else 'no'}, "
              f"stable={'yes' if cov['stable'] else 'no'}, "
              f"arithmetic genus={ga if ga is not None else 'n/a'}", file=out)
        for entry in cov["node_classes"]:
            line = (f"  nodes: {entry['count']} x {entry['kind']} "
                    f"(stabilizer order {entry['stabilizer_order']})")
            orbits = entry["smoothing_fixpoint_orbits"]
            if orbits:
                line += (f", smoothing fixpoint orbits: local model {orbits['local_model']}, "
                         f"prediction {orbits['involution_class_prediction']}"
                         + ("" if orbits["agree"] else "  [DISCREPANCY]"))
            print(line, file=out)
    chars = report["characters"]
    if chars:
        print(f"deg chi_dR = {chars['degree_chi_dR']}", file=out)
        if chars["chi_dR"] is not None:
            labels = [c["label"] for c in chars["classes"]]
            header = ["class", "order", "size", "chi_dR"] + \
                (["h1"] if chars["h1"] else [])
            print("  ".join(header), file=out)
            for i, cls in enumerate(chars["classes"]):
                row = [labels[i], str(cls["order"]), str(cls["size"]),
                       str(chars["chi_dR"]["values"][i])]
                if chars["h1"]:
                    row.append(str(chars["h1"]["values"][i]))
                print("  ".join(row), file=out)
    for w in report["warnings"]:
        print(f"warning: {w}", file=out)


def cmd_analyze(args) -> int:
    datum = datum_from_jsonable(_load_json(args.path))
    report, code = analyze_datum(datum)
    if args.pretty:
        _print_pretty(report, sys.stdout)
    else:
        json.dump(report, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return code


def cmd_degenerate(args) -> int:
    t = tuple_from_jsonable(_load_json(args.path))
    degs = []
    warnings = []
    if args.splits:
        degs.extend(split_degenerations(t))
    if args.dihedral is not None:
        found = dihedral_degenerations(t, args.dihedral)
        if not found:
            warnings.append(
                f"no inverting involution exists for entry {args.dihedral} "
                f"(order {t.group.element_order(t.entries[args.dihedral])}): "
                "this dihedral boundary stratum is not realizable for this group")
        degs.extend(found)
    if args.dedup:
        degs = dedup_degenerations(degs)
    out = {"tuple": tuple_to_jsonable(t), "count": len(degs),
           "degenerations": [], "warnings": warnings}
    for deg in degs:
        report, _ = analyze_datum(deg.datum)
        entry = {"kind": deg.kind, "analysis": report}
        if deg.kind == "split":
            entry["split_at"] = deg.split_at
        else:
            entry["index"] = deg.index
            entry["involution"] = list(t.group.perm(deg.involution))
        out["degenerations"].append(entry)
    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def cmd_character(args) -> int:
    datum = datum_from_jsonable(_load_json(args.path))
    report, code = analyze_datum(datum)
    if code != 0:
        for v in report["validation"]["violations"]:
            print(f"{v['kind']} at {v['location']}: {v['detail']}", file=sys.stderr)
        return code
    chars = report["characters"]
    if args.json:
        json.dump(chars, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return 0
    if chars["chi_dR"] is None:
        print(f"deg chi_dR = {chars['degree_chi_dR']} "
              "(positive-genus components: full character withheld)")
        return 0
    cover = build_cover(datum)
    dev = de_rham_character(cover)
    table = {"chi_dR": dev.chi_dR, "chi_dR_literal": dev.chi_dR_literal}
    if dev.h1_character is not None:
        table["h1"] = dev.h1_character
    sys.stdout.write(render_character_table(datum.group, table))
    return 0


def cmd_graph(args) -> int:
    datum = datum_from_jsonable(_load_json(args.path))
    if args.which == "quotient":
        dot = dual_graph_of_groups(datum).to_dot()
    else:
        dot = cover_to_dot(build_cover(datum))
    with open(args.dot, "w", encoding="utf-8") as fh:
        fh.write(dot)
    return 0


def cmd_verify_examples(_args) -> int:
    checks = run_audit()
    width = max(len(c.name) for c in checks)
    for c in checks:
        print(f"{c.status:<4}  {c.name:<{width}}  {c.detail}")
    n_pass = sum(1 for c in checks if c.status == "PASS")
    n_warn = sum(1 for c in checks if c.status == "WARN")
    n_fail = sum(1 for c in checks if c.status == FAIL)
    print(f"{n_pass} passed, {n_warn} warning(s), {n_fail} failure(s)")
    if not audit_passed(checks):
        first = next(c for c in checks if c.status == FAIL)
        print(f"FAILED: {first.name}", file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hurwitzdegen",
                     description="Boundary data, covers, characters and "
                                 "degenerations of group actions on curves")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="validate a datum and report its cover and characters")
    p.add_argument("path", help="datum JSON file")
    p.add_argument("--pretty", action="store_true", help="human-readable output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("degenerate", help="enumerate codimension-1 degenerations of a tuple")
    p.add_argument("path", help="tuple JSON file")
    p.add_argument("--splits", action="store_true", help="split degenerations")
    p.add_argument("--dihedral", type=int, metavar="INDEX",
                   help="dihedral degenerations at the given entry")
    p.add_argument("--dedup", action="store_true",
                   help="one representative per conjugation class")
    p.set_defaults(func=cmd_degenerate)

    p = sub.add_parser("character", help="print the character table of a datum's cover")
    p.add_argument("path", help="datum JSON file")
    p.add_argument("--json", action="store_true", help="JSON mirror of the table")
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("graph", help="export a dual graph as DOT")
    p.add_argument("path", help="datum JSON file")
    p.add_argument("--dot", required=True, metavar="OUT", help="output DOT file")
    p.add_argument("--which", choices=["quotient", "cover"], default="quotient")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify-examples", help="run the pinned worked-example audit")
    p.set_defaults(func=cmd_verify_examples)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvalidDatum as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HurwitzDegenError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())

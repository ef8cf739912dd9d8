"""Command-line front end. Every subcommand prints one JSON document.

Exit codes: 0 success, 1 domain error or failed check, 2 unparsable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from permlab.amalgamation import (MAIN_SPEC, AmalgamCertificate, LineDrawing,
                                  MarkedPermutation, check_one_amalgam,
                                  draw_av123, one_amalgamate_av1423_1342)
from permlab.classes import av, count_class, enumerate_class, member
from permlab.errors import InvalidWord, NotInClass, PermlabError
from permlab.inflation import AV_123, InflationTree, structure_decompose
from permlab.perm import avoids, find_embedding, format_perm, lr_minima, parse_perm
from permlab.splitting import TwoColoring, split_av1423_1342
from permlab.verify import SUITES, run_suites

OK, NOT_FOUND, ERROR = "ok", "not_found", "error"
SPLIT_PARTS = av("463152", lr_closed=True)


class UsageError(Exception):
    pass


def _perm(text: str):
    try:
        return parse_perm(text)
    except InvalidWord as exc:
        raise UsageError(str(exc)) from None


def _marked(text: str, mark: int) -> MarkedPermutation:
    p = _perm(text)
    if not 1 <= mark <= len(p):
        raise UsageError(f"mark {mark} out of range for {text!r}")
    return MarkedPermutation(p, mark)


def cmd_contains(args):
    pattern, host = _perm(args.pattern), _perm(args.host)
    emb = find_embedding(pattern, host)
    return OK, {"kind": "containment", "pattern": format_perm(pattern),
                "host": format_perm(host), "contains": emb is not None,
                "embedding": None if emb is None else list(emb)}


def cmd_enumerate(args):
    spec = av(*[_perm(b) for b in args.basis], lr_closed=args.lr_closed)
    if args.count_only:
        counts = [[n, count_class(spec, n)] for n in range(1, args.n + 1)]
        return OK, {"kind": "counts", "class": str(spec), "counts": counts}
    if spec.lr_closed:
        perms = [p for p in enumerate_class(av(), args.n) if member(spec, p)]
    else:
        perms = list(enumerate_class(spec, args.n))
    return OK, {"kind": "enumeration", "class": str(spec), "n": args.n,
                "perms": [format_perm(p) for p in perms]}


def cmd_decompose(args):
    p = _perm(args.perm)
    return OK, {"kind": "inflation_tree", "perm": format_perm(p),
                "tree": structure_decompose(p).to_json()}


def cmd_split(args):
    p = _perm(args.perm)
    return OK, {"kind": "two_coloring", "perm": format_perm(p),
                "coloring": split_av1423_1342(p).to_json()}


def cmd_amalgamate(args):
    m1, m2 = _marked(args.perm1, args.mark1), _marked(args.perm2, args.mark2)
    cert = one_amalgamate_av1423_1342(m1, m2)
    return OK, {"kind": "amalgam",
                "m1": {"perm": format_perm(m1.perm), "mark": m1.mark},
                "m2": {"perm": format_perm(m2.perm), "mark": m2.mark},
                "certificate": cert.to_json()}


def cmd_draw(args):
    p = _perm(args.perm)
    return OK, {"kind": "line_drawing", "perm": format_perm(p),
                "drawing": draw_av123(p).to_json()}


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = run_suites(names, max_n=args.max_n)
    for r in results:
        print(r.line(), file=sys.stderr)
    status = OK if all(r.passed for r in results) else ERROR
    return status, {"kind": "verification", "suites": [r.to_json() for r in results]}


def _check_document(doc: dict) -> Optional[str]:
    """None if the emitted certificate re-validates, else a reason."""
    payload = doc.get("payload", doc)
    kind = payload.get("kind")
    if kind == "inflation_tree":
        tree = InflationTree.from_json(payload["tree"])
        if tree.evaluate() != parse_perm(payload["perm"]):
            return "tree does not evaluate to perm"
        if not all(avoids(s, AV_123) for s in tree.skeletons()):
            return "a skeleton contains 123"
        return None
    if kind == "two_coloring":
        coloring = TwoColoring.from_json(payload["coloring"], parse_perm(payload["perm"]))
        if not (member(SPLIT_PARTS, coloring.red_part())
                and member(SPLIT_PARTS, coloring.blue_part())):
            return f"a part is outside {SPLIT_PARTS}"
        return None
    if kind == "amalgam":
        m1 = MarkedPermutation(parse_perm(payload["m1"]["perm"]), payload["m1"]["mark"])
        m2 = MarkedPermutation(parse_perm(payload["m2"]["perm"]), payload["m2"]["mark"])
        verdict = check_one_amalgam(AmalgamCertificate.from_json(payload["certificate"]),
                                    m1, m2, MAIN_SPEC)
        return verdict.reason
    if kind == "line_drawing":
        perm = parse_perm(payload["perm"])
        drawing = LineDrawing.from_json(payload["drawing"])
        xs = [x for _, x in drawing.points]
        ys = [drawing.y(i) for i in range(len(xs))]
        if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
            return "coordinates collide"
        if drawing.read_back() != perm:
            return "read-back differs from perm"
        lower = tuple(i for i, (line, _) in enumerate(drawing.points, 1) if line == "lower")
        if lower != lr_minima(perm):
            return "lower line does not hold exactly the LR-minima"
        return None
    return f"unknown certificate kind {kind!r}"


def cmd_check(args):
    try:
        text = sys.stdin.read() if args.file == "-" else open(args.file).read()
        doc = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read certificate: {exc}") from None
    try:
        reason = _check_document(doc)
    except (KeyError, TypeError, ValueError) as exc:
        reason = f"malformed certificate: {exc}"
    return (OK if reason is None else ERROR), {"kind": "check", "valid": reason is None,
                                               "reason": reason}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permlab", description=__doc__)
    parser.add_argument("--pretty", action="store_true", help="indent the JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("contains", help="pattern containment with witness")
    p.add_argument("pattern")
    p.add_argument("host")
    p.set_defaults(func=cmd_contains)

    p = sub.add_parser("enumerate", help="list or count members of Av(basis)")
    p.add_argument("basis", nargs="*", help="basis permutations (none: all permutations)")
    p.add_argument("-n", type=int, required=True, help="length (count table runs 1..n)")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--lr-closed", action="store_true", help="use the LR-closure of Av(basis)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("decompose", help="LR-inflation tree of a member of Av(1423, 1342)")
    p.add_argument("perm")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("split", help="LR-merge coloring of a member of Av(1423, 1342)")
    p.add_argument("perm")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("amalgamate", help="1-amalgamation in Av(1423, 1342)")
    p.add_argument("perm1")
    p.add_argument("mark1", type=int)
    p.add_argument("perm2")
    p.add_argument("mark2", type=int)
    p.set_defaults(func=cmd_amalgamate)

    p = sub.add_parser("draw", help="two-line drawing of a 123-avoider")
    p.add_argument("perm")
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("verify", help="run acceptance suites")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--max-n", type=int, default=None, help="override the suite's default size")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", help="re-validate a document emitted by another subcommand")
    p.add_argument("file", help="JSON file, or - for stdin")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    indent = 2 if args.pretty else None
    try:
        status, payload = args.func(args)
        code = 0 if status == OK else 1
    except UsageError as exc:
        print(json.dumps({"status": ERROR, "payload": {"error": "UsageError", "message": str(exc)}},
                         indent=indent))
        return 2
    except NotInClass as exc:
        status, payload, code = ERROR, exc.to_json(), 1
    except (PermlabError, IndexError) as exc:
        status, payload, code = ERROR, {"error": type(exc).__name__, "message": str(exc)}, 1
    print(json.dumps({"status": status, "payload": payload}, indent=indent))
    return code


if __name__ == "__main__":
    sys.exit(main())

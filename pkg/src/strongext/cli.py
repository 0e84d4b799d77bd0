"""Command-line interface.

Subcommands: analyze, certify, extend, bounds, dice eval, dice realize, gen.
Exit codes: 0 success or connectable, 1 negative verdict, 2 input error,
3 budget exceeded.  All output is deterministic; --json switches the
report-style commands to a machine-readable variant with the same content.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .dice import (
    LOSER_TO_WINNER,
    WINNER_TO_LOSER,
    DiceSet,
    beats_digraph,
    is_balanced,
    parse_dice,
    search_balanced_realization,
    serialize_dice,
    win_matrix,
)
from .dicut import (
    DicutCertificate,
    find_complete_dicut,
    format_certificate,
    parse_certificate,
    verify_complete_dicut,
)
from .digraph import (
    Condensation,
    Edge,
    StrictDigraph,
    is_strong,
    parse_edge_list,
    serialize_edge_list,
    strong_components,
)
from .errors import (
    BudgetError,
    EmptyGraphError,
    HasCompleteDicutError,
    InvalidCertificateError,
    InvalidInputError,
    StrongExtError,
)
from .extend import (
    BoundsReport,
    ExtensionPlan,
    bounds,
    brute_force_min_extension,
    extend,
    gen_bipartite_plus_isolated,
    gen_disjoint_cycles,
    gen_tt_minus_path,
    serialize_bounds,
    serialize_plan,
)

VERDICT_CONNECTABLE = "strongly-connectable"
VERDICT_NOT = "not-strongly-connectable"
VERDICT_STRONG = "already-strong"
VERDICT_TOO_SMALL = "too-small"


@dataclass(frozen=True)
class AnalysisReport:
    verdict: str
    summary: Condensation | None = None
    certificate: DicutCertificate | None = None
    plan: ExtensionPlan | None = None
    bounds_report: BoundsReport | None = None

    @property
    def exit_code(self) -> int:
        if self.verdict == VERDICT_TOO_SMALL:
            return 2
        return 1 if self.verdict == VERDICT_NOT else 0

    def to_text(self) -> str:
        lines = [f"verdict: {self.verdict}"]
        if self.certificate is not None:
            lines.append(format_certificate(self.certificate))
        if self.summary is not None:
            lines.extend(_summary_lines(self.summary))
        out = "\n".join(lines) + "\n"
        if self.plan is not None:
            out += "plan:\n" + serialize_plan(self.plan)
        if self.bounds_report is not None:
            out += "bounds:\n" + serialize_bounds(self.bounds_report)
        return out

    def to_json(self) -> str:
        payload: dict = {"verdict": self.verdict}
        if self.certificate is not None:
            payload["dicut"] = list(self.certificate.sorted_vertices())
        if self.summary is not None:
            payload["summary"] = _summary_dict(self.summary)
        if self.plan is not None:
            payload["plan"] = _plan_dict(self.plan)
        if self.bounds_report is not None:
            payload["bounds"] = _bounds_dict(self.bounds_report)
        return _dump(payload)


def analyze(g: StrictDigraph) -> AnalysisReport:
    if g.n == 0:
        raise EmptyGraphError("the empty digraph has nothing to analyze")
    if g.n < 3:
        return AnalysisReport(VERDICT_TOO_SMALL)
    cond = strong_components(g)
    cert = find_complete_dicut(g)
    if cert is not None:
        return AnalysisReport(VERDICT_NOT, summary=cond, certificate=cert)
    if is_strong(g):
        return AnalysisReport(VERDICT_STRONG, summary=cond)
    return AnalysisReport(
        VERDICT_CONNECTABLE,
        summary=cond,
        plan=extend(g),
        bounds_report=bounds(g),
    )


def _summary_lines(cond: Condensation) -> list[str]:
    return [
        f"r: {cond.r}",
        f"s: {cond.s}",
        f"t: {cond.t}",
        f"c: {cond.c}",
        f"c-prime: {cond.c_prime}",
        f"u: {cond.u}",
    ]


def _summary_dict(cond: Condensation) -> dict:
    return {
        "r": cond.r,
        "s": cond.s,
        "t": cond.t,
        "c": cond.c,
        "c_prime": cond.c_prime,
        "u": cond.u,
    }


def _plan_dict(plan: ExtensionPlan) -> dict:
    return {
        "added": [list(e) for e in plan.added],
        "resulting": _graph_dict(plan.resulting),
    }


def _graph_dict(g: StrictDigraph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def _bounds_dict(report: BoundsReport) -> dict:
    return {
        "lower": report.lower,
        "lower_matched": report.lower_matched,
        "upper_theorem": report.upper_theorem,
        "upper_cyclic": report.upper_cyclic,
        "upper_prop": report.upper_prop,
        "brute_min": report.brute_min,
    }


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _read_graph(path: str) -> StrictDigraph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def cmd_analyze(args) -> int:
    report = analyze(_read_graph(args.file))
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    return report.exit_code


def cmd_certify(args) -> int:
    g = _read_graph(args.file)
    if args.verify is not None:
        with open(args.verify, encoding="utf-8") as fh:
            return _verify_certificate(g, fh.read())
    plan = extend(g)
    for u, v in plan.added:
        print(f"+ {u} {v}")
    return 0


def _verify_certificate(g: StrictDigraph, text: str) -> int:
    """Check a certificate of either kind; prints valid/invalid.

    Syntax problems are input errors; a well-formed certificate that fails
    its semantic check is reported as invalid with exit code 1.
    """
    dicut_line = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("dicut:"):
            if dicut_line is not None or edges:
                raise InvalidCertificateError(
                    f"line {lineno}: certificate must be a single dicut line "
                    "or a list of added edges"
                )
            dicut_line = line
        elif line.startswith("+"):
            if dicut_line is not None:
                raise InvalidCertificateError(
                    f"line {lineno}: added edge after a dicut line"
                )
            parts = line[1:].split()
            if len(parts) != 2:
                raise InvalidCertificateError(
                    f"line {lineno}: expected '+ u v', got {raw!r}"
                )
            try:
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise InvalidCertificateError(
                    f"line {lineno}: expected integer endpoints, got {raw!r}"
                ) from None
        else:
            raise InvalidCertificateError(
                f"line {lineno}: unrecognized certificate line {raw!r}"
            )
    if dicut_line is not None:
        cert = parse_certificate(dicut_line)
        try:
            ok = verify_complete_dicut(g, cert)
        except InvalidCertificateError:
            ok = False
    else:
        try:
            ok = is_strong(g.with_edges(edges))
        except ValueError:
            ok = False
    print("valid" if ok else "invalid")
    return 0 if ok else 1


def cmd_extend(args) -> int:
    g = _read_graph(args.file)
    if args.minimize:
        result = brute_force_min_extension(g)
        if result is None:
            cert = find_complete_dicut(g)
            assert cert is not None
            print("no strong extension exists")
            print(format_certificate(cert))
            return 1
        minimum, plan = result
        if args.json:
            payload = {"minimum": minimum, "plan": _plan_dict(plan)}
            sys.stdout.write(_dump(payload))
        else:
            print(f"minimum: {minimum}")
            sys.stdout.write(serialize_plan(plan))
        return 0
    plan = extend(g)
    if args.json:
        sys.stdout.write(_dump(_plan_dict(plan)))
    else:
        sys.stdout.write(serialize_plan(plan))
    return 0


def cmd_bounds(args) -> int:
    report = bounds(_read_graph(args.file))
    if args.json:
        sys.stdout.write(_dump(_bounds_dict(report)))
    else:
        sys.stdout.write(serialize_bounds(report))
    return 0


def _read_dice(path: str) -> DiceSet:
    with open(path, encoding="utf-8") as fh:
        return parse_dice(fh.read())


def _balance_fields(d: DiceSet) -> tuple[bool | None, Fraction | None]:
    if d.count < 2:
        return None, None
    balanced, p = is_balanced(d)
    return balanced, p


def cmd_dice_eval(args) -> int:
    d = _read_dice(args.file)
    m = win_matrix(d)
    balanced, p = _balance_fields(d)
    beats = beats_digraph(d, args.direction)
    if args.json:
        payload = {
            "dice": [list(die) for die in d.dice],
            "sides": d.sides,
            "win_counts": [
                [None if i == j else m.counts[i][j] for j in range(d.count)]
                for i in range(d.count)
            ],
            "balanced": balanced,
            "p": None if p is None else str(p),
            "direction": args.direction,
            "beats": _graph_dict(beats),
        }
        sys.stdout.write(_dump(payload))
        return 0
    total = d.sides * d.sides
    print("dice:")
    sys.stdout.write(serialize_dice(d))
    print("win-matrix:")
    for i in range(d.count):
        row = [
            "-" if i == j else f"{m.counts[i][j]}/{total}"
            for j in range(d.count)
        ]
        print(" ".join(row))
    if balanced is None:
        print("balanced: n/a (single die)")
    elif not balanced:
        print("balanced: no")
    elif p == Fraction(1, 2) or p == 1:
        print(f"balanced: yes (degenerate, p = {p})")
    else:
        print(f"balanced: yes (p = {p})")
    print(f"beats ({args.direction}):")
    sys.stdout.write(serialize_edge_list(beats))
    return 0


def cmd_dice_realize(args) -> int:
    h = _read_graph(args.file)
    found = search_balanced_realization(h, args.k, args.direction)
    if found is not None:
        _, p = is_balanced(found)
        if args.json:
            payload = {
                "dice": [list(die) for die in found.dice],
                "p": str(p),
                "direction": args.direction,
            }
            sys.stdout.write(_dump(payload))
        else:
            sys.stdout.write(serialize_dice(found))
            print(f"p: {p}")
        return 0
    cert = find_complete_dicut(h)
    if args.json:
        payload = {
            "dice": None,
            "reason": "complete-dicut" if cert is not None else "search-exhausted",
        }
        if cert is not None:
            payload["dicut"] = list(cert.sorted_vertices())
        sys.stdout.write(_dump(payload))
        return 1
    print(f"no balanced realization with {args.k}-sided dice")
    if cert is not None:
        print(format_certificate(cert))
    else:
        print("no complete dicut found; larger dice may admit a realization")
    return 1


GEN_FAMILIES = {
    "tt-minus-path": (1, gen_tt_minus_path),
    "bipartite": (2, gen_bipartite_plus_isolated),
    "cycles": (2, gen_disjoint_cycles),
}


def cmd_gen(args) -> int:
    arity, builder = GEN_FAMILIES[args.family]
    if len(args.params) != arity:
        raise InvalidInputError(
            f"family {args.family} takes {arity} parameter(s), "
            f"got {len(args.params)}"
        )
    sys.stdout.write(serialize_edge_list(builder(*args.params)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strongext",
        description="Decide strong connectability of strict digraphs, "
        "construct extensions, and evaluate dice sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full verdict/plan/bounds report")
    p.add_argument("file", help="edge-list file")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("certify", help="emit or verify a certificate")
    p.add_argument("file", help="edge-list file")
    p.add_argument("--verify", metavar="CERT", help="certificate file to check")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("extend", help="construct a strong extension")
    p.add_argument("file", help="edge-list file")
    p.add_argument(
        "--minimize",
        action="store_true",
        help="brute-force the exact minimum (small inputs only)",
    )
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("bounds", help="report extension-size bounds")
    p.add_argument("file", help="edge-list file")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_bounds)

    dice = sub.add_parser("dice", help="dice-set commands")
    dice_sub = dice.add_subparsers(dest="dice_command", required=True)

    p = dice_sub.add_parser("eval", help="win matrix, balance, beats digraph")
    p.add_argument("file", help="dice file, one die per line")
    p.add_argument(
        "--direction",
        choices=[WINNER_TO_LOSER, LOSER_TO_WINNER],
        default=WINNER_TO_LOSER,
        help="beats-digraph edge direction (default: %(default)s)",
    )
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_dice_eval)

    p = dice_sub.add_parser("realize", help="search dice realizing a digraph")
    p.add_argument("file", help="edge-list file for the target digraph")
    p.add_argument("-k", type=int, required=True, help="faces per die")
    p.add_argument(
        "--direction",
        choices=[WINNER_TO_LOSER, LOSER_TO_WINNER],
        default=WINNER_TO_LOSER,
        help="how target edges map to wins (default: %(default)s)",
    )
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_dice_realize)

    p = sub.add_parser("gen", help="generate example digraphs")
    p.add_argument("family", choices=sorted(GEN_FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except HasCompleteDicutError as exc:
        print(format_certificate(exc.certificate))
        return 1
    except (StrongExtError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success (``certify``: bounds meet), 1 check failed or a gap
remains, 2 bad input or a cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import complexes as cx
from .bounds import certify
from .covers import cover_summary
from .errors import AraError, BudgetExceeded
from .resolutions import (
    DEFAULT_BUDGET,
    RESOLUTION_CAP,
    given_ordering,
    l_length,
    lex_ordering,
    lyubeznik_resolution,
    max_admissible_length,
    construction_ordering,
    verify_complex,
    whisker_ordering,
)
from .sv import check_partition, load_partition, multiwhisker_cycle_sv, render_generators, sunlet_sv

FAMILIES = ("sunlet", "multiwhisker-cycle", "cycle", "path", "partition-whisker",
            "clique-whisker", "multiwhisker", "graft", "multigraft")


class UsageError(AraError):
    pass


def _emit(args, payload, text=None):
    if args.pretty and text is not None:
        out = text.rstrip("\n") + "\n"
    else:
        out = json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _note(args, msg):
    # keep stdout clean when it carries the JSON payload
    print(msg, file=sys.stdout if args.out else sys.stderr)


def _parse_partition(text: str, allow_empty=False):
    if text is None:
        raise UsageError("--partition is required, e.g. 'x1,x2;x3'")
    blocks = []
    for chunk in text.split(";"):
        labels = [x.strip() for x in chunk.split(",") if x.strip()]
        if not labels and not allow_empty:
            raise UsageError("empty block in --partition")
        blocks.append(labels)
    return blocks


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for this family")
    return value


def cmd_family(args):
    name = args.name
    partition = None
    if name == "sunlet":
        delta = cx.sunlet(_need(args, "n"))
        partition = sunlet_sv(args.n)
    elif name == "multiwhisker-cycle":
        delta = cx.multiwhisker_cycle(_need(args, "n"), _need(args, "k"))
        partition = multiwhisker_cycle_sv(args.n, args.k)
    elif name == "cycle":
        delta = cx.cycle_graph(_need(args, "n"))
    elif name == "path":
        delta = cx.path_graph(_need(args, "n"))
    else:
        base = cx.load_complex(_need(args, "input"))
        if name == "partition-whisker":
            delta = cx.partition_whisker(base, _parse_partition(args.partition))
        elif name == "clique-whisker":
            if args.partition is None:
                blocks = [[x] for x in base.vertices.names]
            else:
                blocks = _parse_partition(args.partition, args.allow_empty)
            delta = cx.clique_whisker(base, blocks, allow_empty=args.allow_empty)
        elif name == "multiwhisker":
            delta = cx.multiwhisker(base, _need(args, "k"))
        else:
            with open(_need(args, "spec"), encoding="utf-8") as fh:
                spec = cx.GraftSpec.from_json(_load_json(fh, args.spec))
            delta = cx.graft(base, spec) if name == "graft" else cx.multigraft(base, spec)

    if args.sv_out:
        if partition is None:
            raise UsageError(f"no explicit partition is known for family {name!r}")
        with open(args.sv_out, "w", encoding="utf-8") as fh:
            json.dump(partition.to_json(), fh, indent=2)
            fh.write("\n")
    text = "\n".join([f"{len(delta.vertices)} vertices, {len(delta.facets)} facets",
                      *("  " + " ".join(f) for f in delta.facet_labels())])
    _emit(args, delta.to_json(), text)
    _note(args, f"{delta.n_vertices} vertices, {len(delta.facets)} facets")
    return 0


def _load_json(fh, path):
    try:
        return json.load(fh)
    except json.JSONDecodeError as exc:
        raise AraError(f"{path}: malformed JSON ({exc.msg})") from None


def cmd_ideal(args):
    delta = cx.load_complex(args.input)
    ideal = cx.facet_ideal(delta)
    _emit(args, ideal.to_json(), "\n".join(ideal.render()))
    return 0


def cmd_covers(args):
    delta = cx.load_complex(args.input)
    summary = cover_summary(delta)
    payload = summary.to_json(delta.vertices)
    text = "\n".join([f"height {summary.height}  bight {summary.bight}  unmixed {summary.unmixed}",
                      *("  " + " ".join(delta.vertices.labels(c)) for c in summary.covers)])
    _emit(args, payload, text)
    return 0


_ORDER_SOURCES = {
    "given": lambda delta: given_ordering(cx.facet_ideal(delta)),
    "whisker": whisker_ordering,
    "lex": lex_ordering,
    "paper": construction_ordering,
}


def cmd_resolution(args):
    delta = cx.load_complex(args.input)
    ideal = cx.facet_ideal(delta)
    payload = {}
    if args.ordering in ("exhaustive", "random"):
        if args.ordering == "random" and args.seed is None:
            raise UsageError("--seed is required with --ordering random")
        found = l_length(ideal, args.ordering, samples=args.samples, seed=args.seed,
                         budget=args.budget)
        ordering = found.ordering
        payload["l_length"] = {"value": found.value,
                               "flag": "exact" if found.exact else "upper_bound"}
    else:
        ordering = _ORDER_SOURCES[args.ordering](delta)
    best = max_admissible_length(ordering, args.budget)
    payload["ordering"] = ordering.to_json()
    payload["max_length"] = best.length
    payload["witness_symbol"] = list(best.symbol)
    lines = [f"ordering: {', '.join(ordering.render())}",
             f"longest admissible symbol: {best.length} {list(best.symbol)}"]
    if "l_length" in payload:
        lines.insert(0, f"L-length: {payload['l_length']['value']} ({payload['l_length']['flag']})")
    if not args.no_dump:
        if len(ordering) > RESOLUTION_CAP:
            raise AraError(f"full resolution is capped at {RESOLUTION_CAP} generators "
                           f"(got {len(ordering)}); pass --no-dump")
        res = lyubeznik_resolution(ordering)
        check = verify_complex(res)
        payload["verified"] = check.ok
        payload["resolution"] = res.to_json()
        lines.append(f"ranks: {res.ranks()}  d∘d = 0: {check.ok}")
    _emit(args, payload, "\n".join(lines))
    return 0 if payload.get("verified", True) else 1


def cmd_sv_check(args):
    delta = cx.load_complex(args.ideal)
    ideal = cx.facet_ideal(delta)
    part = load_partition(args.partition, delta.vertices)
    report = check_partition(part, ideal)
    payload = report.to_json(delta.vertices)
    payload["generators"] = render_generators(part)
    lines = [f"layers: {report.size}",
             f"conditions (i)-(iii): {'ok' if report.conditions_ok else 'FAILED'}",
             f"radical cover: {'ok' if report.radical_cover_ok else 'FAILED'}"]
    for v in payload["violations"]:
        lines.append(f"  ({v['condition']}) layer {v['layer']}: {', '.join(v['witness'])}")
    for m in payload["uncovered_generators"]:
        lines.append(f"  generator {m} is not a multiple of any partition monomial")
    for m in payload["foreign_monomials"]:
        lines.append(f"  partition monomial {m} is not in the ideal")
    lines += ["  " + q for q in payload["generators"]]
    _emit(args, payload, "\n".join(lines))
    return 0 if report.ok else 1


def cmd_certify(args):
    delta = cx.load_complex(args.input)
    sv = []
    for item in args.sv or ():
        sv.append("paper" if item == "paper" else load_partition(item, delta.vertices))
    cert = certify(delta, sv=sv, lyu=args.lyu or [], lyu_exhaustive=args.lyu_exhaustive,
                   budget=args.budget)
    payload = cert.to_json()
    lines = [f"height {cert.height}  bight {cert.bight}  cover {' '.join(payload['lower']['cover'])}"]
    for u in cert.uppers:
        lines.append(f"  upper {u.kind}/{u.source}: {u.value if u.complete else 'incomplete'}")
    for r in cert.rejected:
        lines.append(f"  rejected {r['kind']}/{r['source']}")
    lines.append(f"ara in [{cert.ara_lower}, {cert.ara_upper}]  equal {cert.equal}  "
                 f"stci {cert.stci}  exact {cert.exact}")
    _emit(args, payload, "\n".join(lines))
    return 0 if cert.equal else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--pretty", action="store_true", help="human-readable text instead of JSON")
    common.add_argument("--seed", type=int, help="seed for random ordering strategies")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="node budget per admissible-symbol search")

    parser = argparse.ArgumentParser(prog="aracert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", parents=[common], help="build a graph or complex")
    p.add_argument("name", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--input", help="base graph/complex JSON")
    p.add_argument("--partition", help="blocks as 'x1,x2;x3'")
    p.add_argument("--allow-empty", action="store_true")
    p.add_argument("--spec", help="graft spec JSON")
    p.add_argument("--sv-out", help="also write the explicit partition (sunlet, multiwhisker-cycle)")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("ideal", parents=[common], help="list the facet ideal generators")
    p.add_argument("input")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("covers", parents=[common], help="minimal vertex covers, height, bight")
    p.add_argument("input")
    p.set_defaults(func=cmd_covers)

    p = sub.add_parser("resolution", parents=[common], help="Lyubeznik resolution of an ordering")
    p.add_argument("input")
    p.add_argument("--ordering", default="paper",
                   choices=("given", "whisker", "lex", "paper", "exhaustive", "random"))
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--no-dump", action="store_true", help="skip the full resolution dump")
    p.set_defaults(func=cmd_resolution)

    p = sub.add_parser("sv-check", parents=[common], help="check a Schmitt–Vogel partition")
    p.add_argument("partition")
    p.add_argument("ideal", help="complex JSON whose facet ideal is tested")
    p.set_defaults(func=cmd_sv_check)

    p = sub.add_parser("certify", parents=[common], help="arithmetical-rank certificate")
    p.add_argument("input")
    p.add_argument("--sv", action="append", metavar="paper|FILE")
    p.add_argument("--lyu", action="append", choices=tuple(_ORDER_SOURCES))
    p.add_argument("--lyu-exhaustive", action="store_true")
    p.set_defaults(func=cmd_certify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (AraError, BudgetExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

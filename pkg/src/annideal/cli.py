"""Command-line front end.

Subcommands: quotient (analyze an ideal), ideal (expand a named family),
group (build one presentation and verify it), verify (run a campaign),
tables (reproduce the structure tables).  Exit codes: 0 all checks pass,
1 any FAIL or an unbounded quotient, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bipoly import ParseError, format_poly, parse_ideal
from .families import NoPrediction, family_generators, parse_family, predicted_annihilator
from .groups import (
    InconsistentPresentation,
    InvalidParameters,
    MaxClassParams,
    NonMaxParams,
    build_max_class,
    build_nonmax_3,
    verify_annihilator,
    verify_surjectivity,
)
from .harness import CAMPAIGN_NAMES, Campaign, run_campaign
from .quotient import PossiblyInfiniteQuotient, build_quotient
from .reports import FAIL, jsonl, markdown_summary


def _parse_range(text: str) -> list[int]:
    """'3..10' -> [3..10]; '2,3,5' -> [2,3,5]; '7' -> [7]."""
    if ".." in text:
        lo, _, hi = text.partition("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(v) for v in text.split(",") if v != ""]


def _parse_kv(pairs: list[str]) -> dict[str, str]:
    out = {}
    for item in pairs:
        if "=" not in item:
            raise InvalidParameters(f"expected key=value, got {item!r}")
        key, _, val = item.partition("=")
        out[key] = val
    return out


def _print_quotient(model, fmt: str) -> None:
    if fmt == "json":
        print(model.to_json())
        return
    basis = model.basis()
    lines = [
        ("ideal", ", ".join(format_poly(g) for g in model.generators)),
        ("basis", ", ".join(str(m) for m, _ in basis)),
        ("orders", ", ".join(str(n) for _, n in basis)),
        ("type", str(model.type)),
        ("order", str(model.order)),
    ]
    if fmt == "markdown":
        print("| field | value |")
        print("|---|---|")
        for k, v in lines:
            print(f"| {k} | {v} |")
    else:
        for k, v in lines:
            print(f"{k}: {v}")


def cmd_quotient(args) -> int:
    gens = parse_ideal(args.ideal)
    try:
        model = build_quotient(gens, args.cap)
    except PossiblyInfiniteQuotient as exc:
        print(f"PossiblyInfiniteQuotient: {exc}", file=sys.stderr)
        return 1
    _print_quotient(model, args.format)
    return 0


def cmd_ideal(args) -> int:
    fam = parse_family(" ".join(args.family))
    gens = family_generators(fam)
    if args.format == "json":
        print(json.dumps({"family": fam.label(), "generators": [format_poly(g) for g in gens]}))
    else:
        print(f"family: {fam.label()}")
        print(f"generators: {', '.join(format_poly(g) for g in gens)}")
    return 0


def _build_group(args):
    kv = _parse_kv(args.spec)
    if args.kind == "max":
        a_raw = kv.get("a", "")
        a = tuple(int(v) % int(kv.get("p", 3)) for v in a_raw.split(",") if v != "" and v != "-")
        params = MaxClassParams(
            p=int(kv.get("p", 3)),
            m=int(kv["m"]),
            k=int(kv.get("k", len(a))),
            w=int(kv.get("w", 0)),
            z=int(kv.get("z", 0)),
            a_vector=a,
        )
        return params, build_max_class(params)
    params = NonMaxParams(
        m=int(kv["m"]),
        n=int(kv["n"]),
        alpha=int(kv.get("alpha", 0)),
        beta=int(kv.get("beta", 0)),
        gamma=int(kv.get("gamma", 0)),
        delta=int(kv.get("delta", 0)),
        rho=int(kv.get("rho", 0)),
    )
    return params, build_nonmax_3(params)


def cmd_group(args) -> int:
    params, model = _build_group(args)
    if isinstance(params, MaxClassParams):
        klass, coclass, e, k = params.m - 1, 1, None, params.k
        order = params.p**params.m
    else:
        klass, coclass, e, k = params.m - 1, params.e - 1, params.e, params.k
        order = 3**params.n
    try:
        prediction = predicted_annihilator(params)
        report = verify_annihilator(model, prediction.generators, args.cap)
        ann_text = prediction.text()
        verdict = report.verdict
    except NoPrediction as exc:
        ann_text, verdict = f"no prediction ({exc})", "NoPrediction"
    surjective = verify_surjectivity(model)
    if args.format == "json":
        payload = {
            "params": params.label(),
            "order": order,
            "class": klass,
            "coclass": coclass,
            "e": e,
            "k": k,
            "derived_type": str(model.derived_type),
            "predicted_annihilator": ann_text,
            "annihilator_verdict": verdict,
            "surjective": surjective,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"group: {params.label()}")
        print(f"order: {order}")
        print(f"class: {klass}  coclass: {coclass}  e: {e if e else '-'}  k: {k}")
        print(f"derived subgroup type: {model.derived_type}")
        print(f"predicted annihilator: {ann_text}")
        print(f"verification: {verdict}")
        print(f"surjective: {surjective}")
    return 0 if verdict in ("PASS", "NoPrediction") and surjective else 1


def cmd_verify(args) -> int:
    ranges = {}
    if args.p:
        ranges["p_set"] = tuple(_parse_range(args.p))
    if args.m:
        ranges["m_range"] = _parse_range(args.m)
    if args.mu:
        ranges["mu_range"] = _parse_range(args.mu)
    if args.n_max:
        ranges["mn_set"] = [
            (m, n)
            for m in range(4, args.n_max)
            for n in range(m + 1, min(2 * m - 3, args.n_max) + 1)
        ]
    campaign = Campaign(kind=args.campaign, ranges=ranges, degree_cap=args.cap, seed=args.seed)
    reports = run_campaign(campaign, jobs=args.jobs)
    text = jsonl(reports, include_timings=args.timings)
    summary = markdown_summary(reports)
    if args.out:
        with open(args.out + ".jsonl", "w") as fh:
            fh.write(text)
        with open(args.out + ".md", "w") as fh:
            fh.write(summary)
    if args.format == "json":
        sys.stdout.write(text)
    else:
        sys.stdout.write(summary)
    return 1 if any(r.verdict == FAIL for r in reports) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="annideal",
        description="Annihilator ideals of two-generated metabelian p-groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    q = sub.add_parser("quotient", help="analyze Z[X,Y] modulo a comma-separated ideal")
    q.add_argument("ideal")
    q.add_argument("--cap", type=int, default=None)
    q.add_argument("--format", choices=("plain", "json", "markdown"), default="plain")
    q.set_defaults(func=cmd_quotient)

    i = sub.add_parser("ideal", help="expand a named ideal family, e.g. 'S mu=5 nu=3 beta=1 delta=0 rho=1'")
    i.add_argument("family", nargs="+")
    i.add_argument("--format", choices=("plain", "json", "markdown"), default="plain")
    i.set_defaults(func=cmd_ideal)

    g = sub.add_parser("group", help="build one presentation: 'max p=3 m=6 ...' or 'nonmax m=6 n=7 ...'")
    g.add_argument("kind", choices=("max", "nonmax"))
    g.add_argument("spec", nargs="*")
    g.add_argument("--cap", type=int, default=None)
    g.add_argument("--format", choices=("plain", "json", "markdown"), default="plain")
    g.set_defaults(func=cmd_group)

    v = sub.add_parser("verify", help="run a verification campaign")
    v.add_argument("campaign", choices=CAMPAIGN_NAMES)
    v.add_argument("--p", default=None, help="prime set, e.g. 2,3,5,7")
    v.add_argument("--m", default=None, help="nilpotency index range, e.g. 3..10")
    v.add_argument("--mu", default=None, help="exponent range, e.g. 3..10")
    v.add_argument("--n-max", type=int, default=None, help="largest logarithmic order for nonmax")
    v.add_argument("--cap", type=int, default=None)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--out", default=None, help="write OUT.jsonl and OUT.md")
    v.add_argument("--format", choices=("plain", "json", "markdown"), default="plain")
    v.add_argument("--timings", action="store_true")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tables", help="reproduce the structure tables")
    t.add_argument("--cap", type=int, default=None)
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--jobs", type=int, default=1)
    t.add_argument("--out", default=None)
    t.add_argument("--format", choices=("plain", "json", "markdown"), default="plain")
    t.add_argument("--timings", action="store_true")
    t.set_defaults(func=cmd_verify, campaign="tables", p=None, m=None, mu=None, n_max=None)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ParseError, InvalidParameters, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InconsistentPresentation, PossiblyInfiniteQuotient) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front door.

Subcommands: check, classify, search, catalog, bundle-extend, verify-paper.
JSON is the machine interface (--json where applicable); outputs use exact
rational strings and stable key order.  Exit codes: 0 ok, 1 a check failed,
2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog, dsl, sasakian, search, verify
from .errors import BadParams, DslSyntaxError, GauduchonError, UnknownFamily
from .hermitian import Metric, classify
from .scalars import ComplexRational, format_rational
from .search import parse_target


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _load_structure(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json"):
        return dsl.structure_from_json(json.loads(text))
    return dsl.parse_structure(text)


def _load_metric(path: str) -> Metric:
    with open(path, "r", encoding="utf-8") as fh:
        spec = json.load(fh)
    x = [
        [
            ComplexRational(Fraction(cell["re"]), Fraction(cell["im"]))
            for cell in row
        ]
        for row in spec["X"]
    ]
    return Metric(x)


def _load_contact(path: str) -> sasakian.ContactData:
    with open(path, "r", encoding="utf-8") as fh:
        return sasakian.contact_from_json(json.load(fh))


def cmd_check(args) -> int:
    se = _load_structure(args.structure)  # raises on Jacobi/integrability
    payload = {
        "n": se.n,
        "jacobi": "ok",
        "integrable": "ok",
        "unimodular": se.is_unimodular(),
    }
    if args.json:
        print(_dump(payload))
    else:
        print(f"n = {se.n}: Jacobi ok, integrable ok, unimodular = {payload['unimodular']}")
    return 0


def cmd_classify(args) -> int:
    se = _load_structure(args.structure)
    metric = _load_metric(args.metric)
    report = classify(metric, se)
    if args.json:
        print(_dump(report.to_json()))
    else:
        print(f"label: {report.label}")
        for name in ("kahler", "skt", "astheno", "balanced"):
            print(f"{name:>9}: {getattr(report, name)}")
        for k in sorted(report.gauduchon):
            print(f"gauduchon{k}: {report.gauduchon[k]}  (gamma{k} = {report.gamma[k]})")
        print(f"lee form: {report.lee!r}")
    return 0


def cmd_search(args) -> int:
    se = _load_structure(args.structure)
    target = parse_target(args.target)
    family = args.family
    params = None
    if family == "jt":
        params = Fraction(args.family_params[0])
    elif family == "family8":
        params = (Fraction(args.family_params[0]), Fraction(args.family_params[1]))
    elif family == "reduced6":
        rho, b, x, y = args.family_params
        params = catalog.Reduced6Params(
            int(rho), dsl.parse_complex_literal(b), Fraction(x), Fraction(y)
        )
    outcome = search.find_metric(
        se, target, budget=args.budget, seed=args.seed, family=family, params=params
    )
    outcome.replay = (
        f"gauduchon search --structure {args.structure} --target {args.target}"
        f" --budget {args.budget} --seed {args.seed}"
    )
    text = _dump(outcome.to_json())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        listing = catalog.list_families()
        listing["solvable5"] = {"params": {}, "doc": "contact data (JSON, feeds bundle-extend)"}
        listing["heisenberg5"] = {"params": {}, "doc": "contact data (JSON, feeds bundle-extend)"}
        print(_dump(listing))
        return 0
    name = args.name
    if name is None:
        print("catalog emit needs a family name", file=sys.stderr)
        return 2
    if name in ("solvable5", "heisenberg5"):
        contact = (
            catalog.solvable5_contact() if name == "solvable5"
            else catalog.heisenberg5_contact()
        )
        text = _dump(sasakian.contact_to_json(contact)) + "\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            print(text, end="")
        return 0
    params = {}
    for item in args.param or []:
        key, _, value = item.partition("=")
        if key in ("eps", "rho", "n", "sign"):
            params[key] = int(value)
        elif key in ("x", "y", "t", "p", "q"):
            params[key] = Fraction(value)
        else:
            params[key] = dsl.parse_complex_literal(value)
    se = catalog.build(name, **params)
    text = dsl.format_structure(se)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


def cmd_bundle_extend(args) -> int:
    contact = _load_contact(args.contact)
    ext = sasakian.bundle_extend(contact)
    payload = {
        "structure_dsl": dsl.format_structure(ext.structure),
        "metric": {
            "n": ext.metric.n,
            "X": [
                [
                    {"re": format_rational(v.re), "im": format_rational(v.im)}
                    for v in row
                ]
                for row in ext.metric.x
            ],
        },
        "criterion_form": dsl.real_form_to_json(ext.criterion_form),
        "criterion_scalar": str(ext.criterion_scalar),
    }
    if args.json:
        print(_dump(payload))
    else:
        from .forms import format_real_form

        print(payload["structure_dsl"], end="")
        print(f"criterion form: {format_real_form(ext.criterion_form)}")
        print(f"criterion scalar: {ext.criterion_scalar}")
    return 0


def cmd_verify_paper(args) -> int:
    report = verify.run_verify_paper(seed=args.seed, only=args.only)
    if args.json:
        print(_dump(report.to_json()))
    else:
        print(report.to_text())
    if report.overall:
        return 0
    failure = report.first_failure()
    print(f"first failing claim: {failure.claim}", file=sys.stderr)
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gauduchon",
        description="exact invariant Hermitian geometry on Lie algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a structure-equation file")
    p.add_argument("--structure", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("classify", help="full metric-class report")
    p.add_argument("--structure", required=True)
    p.add_argument("--metric", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("search", help="search metric space for a target")
    p.add_argument("--structure", required=True)
    p.add_argument("--target", required=True,
                   help="gamma1<0 | gamma1>0 | gauduchon1=0 | skt | balanced")
    p.add_argument("--budget", type=int, default=search.DEFAULT_BUDGET)
    p.add_argument("--seed", type=lambda s: int(s, 0), default=search.DEFAULT_SEED)
    p.add_argument("--family", default=None,
                   help="optional closed-form context: reduced6 | jt | family8 | ...")
    p.add_argument("--family-params", nargs="*", default=[],
                   help="family parameters, e.g. '1/2' for jt or 'p q' for family8")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("catalog", help="list families or emit DSL text")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("name", nargs="?")
    p.add_argument("--param", action="append",
                   help="key=value; repeat per parameter (e.g. --param t=1/2)")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("bundle-extend", help="extend contact data by a curvature form")
    p.add_argument("--contact", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_bundle_extend)

    p = sub.add_parser("verify-paper", help="run the bundled reproduction suite")
    p.add_argument("--only", default=None, help="run a single claim id")
    p.add_argument("--seed", type=lambda s: int(s, 0), default=verify.DEFAULT_SEED)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (DslSyntaxError, BadParams, UnknownFamily) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GauduchonError as exc:
        # structural checks that failed on well-formed input
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: bad input ({exc})", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Every subcommand prints one JSON document to standard output.  Exit codes:
0 success, 1 domain error (the document is {"code", "message"}), 2 usage
error.  The payload builders here are shared with the HTTP service so both
front ends emit byte-identical JSON.
"""

from __future__ import annotations

import argparse
import re
import sys

from . import jsonio
from .cark import expand_cark, path_on_spine, revolve_around_spine, spine_signature
from .errors import DomainError
from .geometry import geodesic_of_form, to_disk
from .modular_group import GroupElement, Word, word_to_matrix
from .quadratic_forms import QuadForm, classify_form, is_on_spine
from .reduction import cark_reduce_path, reduce_form
from .representation import automorph, enumerate_solutions, solve_definite, solve_form_detailed
from .sunburst import enumerate_cells, recenter


def _spine_entry(f: QuadForm) -> QuadForm:
    if is_on_spine(f):
        return f
    return cark_reduce_path(f).end


def classify_payload(f: QuadForm) -> dict:
    return {"class": classify_form(f)}


def form_of_payload(m: GroupElement) -> dict:
    from .quadratic_forms import form_of_element

    return {"form": jsonio.form_json(form_of_element(m))}


def reduce_payload(f: QuadForm, method: str) -> dict:
    return jsonio.reduction_json(reduce_form(f, method))


def spine_payload(f: QuadForm) -> dict:
    return jsonio.spine_json(revolve_around_spine(_spine_entry(f)))


def signature_payload(f: QuadForm) -> dict:
    cycle = revolve_around_spine(_spine_entry(f))
    return {"signature": spine_signature(cycle).to_string()}


def path_on_spine_payload(f_from: QuadForm, f_to: QuadForm) -> dict:
    word = path_on_spine(f_from, f_to)
    return {
        "letters": word.to_string(),
        "matrix": jsonio.element_json(word_to_matrix(word)),
    }


def solve_payload(f: QuadForm, n: int, count: int) -> dict:
    kind = classify_form(f)
    if kind in ("positive_definite", "negative_definite"):
        sols = solve_definite(f, n)[:count]
        return {"solutions": [[str(s.x), str(s.y)] for s in sols]}
    result = solve_form_detailed(f, n)
    if result.solution is None:
        return {"solutions": []}
    orbit = enumerate_solutions(f, n, count)
    return jsonio.solve_json(result, orbit, automorph(f))


def geodesic_payload(f: QuadForm, model: str, samples: int) -> dict:
    g = geodesic_of_form(f)
    if model == "disk":
        return jsonio.geodesic_json(to_disk(g), samples)
    return jsonio.geodesic_json(g, samples)


def sunburst_payload(depth: int, center: str) -> dict:
    if center:
        layout = recenter(Word.from_string(center), depth)
    else:
        layout = enumerate_cells(depth)
    return jsonio.sunburst_json(layout)


def cark_payload(f: QuadForm, depth: int) -> dict:
    return jsonio.cark_json(expand_cark(f, depth))


def _parse_element(text: str) -> GroupElement:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError(f"expected 'p,q,r,s', got {text!r}")
    return GroupElement(*(int(p.strip()) for p in parts))


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reads arguments like "-1,1,1" as positionals
    (coefficient triples may start with a minus sign)."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+(?:,-?\d+)*$")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="carkwork")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="classify a form a,b,c")
    p.add_argument("form")

    p = sub.add_parser("form-of", help="form of a group element p,q,r,s")
    p.add_argument("element")

    p = sub.add_parser("reduce", help="reduce a form")
    p.add_argument("--method", choices=("gauss", "cark", "lagrange"), default="gauss")
    p.add_argument("form")

    p = sub.add_parser("spine", help="spine cycle through a form's class")
    p.add_argument("form")

    p = sub.add_parser("signature", help="canonical spine signature")
    p.add_argument("form")

    p = sub.add_parser("path-on-spine", help="word from one spine form to another")
    p.add_argument("form_from")
    p.add_argument("form_to")

    p = sub.add_parser("solve", help="solve f(x,y) = n")
    p.add_argument("form")
    p.add_argument("n", type=int)
    p.add_argument("--count", type=int, default=1)

    p = sub.add_parser("geodesic", help="geodesic of a form")
    p.add_argument("form")
    p.add_argument("--model", choices=("h", "disk"), default="h")
    p.add_argument("--samples", type=int, default=64)

    p = sub.add_parser("sunburst", help="slit-disk cell layout")
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--center", default="")

    p = sub.add_parser("cark", help="expand a cark graph")
    p.add_argument("form")
    p.add_argument("--depth", type=int, default=1)

    p = sub.add_parser("serve", help="run the HTTP JSON service")
    p.add_argument("--port", type=int, default=8000)

    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2

    try:
        if args.command == "classify":
            payload = classify_payload(jsonio.parse_form(args.form))
        elif args.command == "form-of":
            payload = form_of_payload(_parse_element(args.element))
        elif args.command == "reduce":
            payload = reduce_payload(jsonio.parse_form(args.form), args.method)
        elif args.command == "spine":
            payload = spine_payload(jsonio.parse_form(args.form))
        elif args.command == "signature":
            payload = signature_payload(jsonio.parse_form(args.form))
        elif args.command == "path-on-spine":
            payload = path_on_spine_payload(
                jsonio.parse_form(args.form_from), jsonio.parse_form(args.form_to)
            )
        elif args.command == "solve":
            payload = solve_payload(jsonio.parse_form(args.form), args.n, args.count)
        elif args.command == "geodesic":
            payload = geodesic_payload(jsonio.parse_form(args.form), args.model, args.samples)
        elif args.command == "sunburst":
            payload = sunburst_payload(args.depth, args.center)
        elif args.command == "cark":
            payload = cark_payload(jsonio.parse_form(args.form), args.depth)
        elif args.command == "serve":
            from .service import run_service

            run_service(args.port)
            return 0
        else:  # pragma: no cover - argparse enforces the choice
            parser.print_usage(sys.stderr)
            return 2
    except ValueError as exc:
        if isinstance(exc, DomainError):
            print(jsonio.dumps(jsonio.error_json(exc)))
            return 1
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2

    print(jsonio.dumps(payload))
    return 0


def main() -> None:  # console-script entry point
    raise SystemExit(cli_main())


if __name__ == "__main__":
    main()

"""Command-line interface: ``sl3webs <command> ...``.

Exit status: 0 success, 1 invalid input or failed verification, 2 usage
error, 3 broken internal invariant.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .bijection import build_pipeline, verify_join, verify_rotation, verify_sign
from .errors import InvariantError, Sl3WebsError, ValidationError
from .mdiagram import build_m_diagram
from .render import RenderSpec, render
from .signs_tableaux import SignString, Tableau, enumerate_fillings, jdt_promote, shuffle
from .web import (
    canonical_code,
    join,
    rotate,
    web_from_json,
    web_from_m_diagram,
    web_to_json,
    web_to_tableau,
)

_SIGN_OPTIONS = ("--sign", "--with")
_SIGN_VALUE = re.compile(r"^[+\-−]*$")


def _glue_sign_values(argv: list[str]) -> list[str]:
    """Let ``--sign --++`` through argparse by rewriting it as ``--sign=--++``."""
    out, k = [], 0
    while k < len(argv):
        tok = argv[k]
        if tok in _SIGN_OPTIONS and k + 1 < len(argv) and _SIGN_VALUE.match(argv[k + 1]):
            out.append(f"{tok}={argv[k + 1]}")
            k += 2
        else:
            out.append(tok)
            k += 1
    return out


def _read_web(path: str):
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: not JSON ({exc})", code="BadWebJson") from exc
    return web_from_json(data)


def _write(text: str, path: str | None) -> None:
    if path and path != "-":
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _web_for(args):
    if getattr(args, "web", None):
        return _read_web(args.web)
    if args.tableau is None:
        raise ValidationError("give --web FILE or --tableau (with --sign for a filling)", code="MissingInput")
    T = Tableau.parse(args.tableau)
    if args.sign is None:
        return web_from_m_diagram(build_m_diagram(T))
    return build_pipeline(T, args.sign).web


def cmd_build(args) -> int:
    p = build_pipeline(Tableau.parse(args.tableau), args.sign)
    data = web_to_json(p.web)
    if args.verbose:
        data["pipeline"] = {
            "standard": str(p.standard),
            "conjugate": str(p.conjugate),
            "m_diagram": str(p.m_diagram),
            "minus_pairs": {str(k): list(v) for k, v in p.pair_map.minus_pairs.items()},
        }
    _write(json.dumps(data, indent=2) + "\n", args.out)
    return 0


def cmd_invert(args) -> int:
    w = _read_web(args.web)
    T = web_to_tableau(w)
    print(json.dumps(T.to_json()) if args.json else str(T))
    return 0


def cmd_mdiagram(args) -> int:
    T = Tableau.parse(args.tableau)
    m = build_pipeline(T, args.sign).m_diagram if args.sign is not None else build_m_diagram(T)
    print(json.dumps(m.to_json()) if args.json else str(m))
    return 0


def cmd_enumerate(args) -> int:
    s = SignString(args.sign)
    for T in enumerate_fillings(s):
        if args.webs:
            print(f"{T}\t{canonical_code(build_pipeline(T, s).web)}")
        else:
            print(T)
    return 0


def cmd_verify(args) -> int:
    if args.what == "bijection":
        report = verify_sign(args.sign, workers=args.workers)
    elif args.what == "rotation":
        report = verify_rotation(args.sign)
    else:
        if args.with_ is None or args.at is None:
            raise ValidationError("verify join needs --with and --at", code="MissingInput")
        report = verify_join(args.sign, args.with_, args.at)
    print(json.dumps(report.to_json(), indent=2) if args.json else report.table())
    return 0 if report.success else 1


def cmd_promote(args) -> int:
    T = Tableau.parse(args.tableau)
    for _ in range(args.times):
        T = jdt_promote(T)
    print(T)
    return 0


def cmd_shuffle(args) -> int:
    print(shuffle(Tableau.parse(args.from_), Tableau.parse(args.into), args.at, by=args.by))
    return 0


def cmd_rotate(args) -> int:
    w = rotate(_read_web(args.web), args.times)
    _write(json.dumps(web_to_json(w), indent=2) + "\n", args.out)
    return 0


def cmd_join(args) -> int:
    w = join(_read_web(args.web), _read_web(args.other), args.at)
    _write(json.dumps(web_to_json(w), indent=2) + "\n", args.out)
    return 0


def cmd_render(args) -> int:
    spec = RenderSpec(args.format, Fraction(args.scale), args.depths, not args.no_signs)
    _write(render(_web_for(args), spec), args.out)
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sl3webs", description="Semistandard tableaux and non-elliptic sl3 webs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="web of a filling")
    p.add_argument("--tableau", required=True)
    p.add_argument("--sign", required=True)
    p.add_argument("--out")
    p.add_argument("--verbose", action="store_true", help="include intermediate objects")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("invert", help="filling of a web (depth rule)")
    p.add_argument("--web", required=True, help="web JSON file, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("mdiagram", help="m-diagram of a three-row standard tableau, or of a filling with --sign")
    p.add_argument("--tableau", required=True)
    p.add_argument("--sign")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mdiagram)

    p = sub.add_parser("enumerate", help="list fillings of content --sign")
    p.add_argument("--sign", required=True)
    p.add_argument("--webs", action="store_true", help="also print canonical web codes")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustive checks")
    p.add_argument("what", choices=["bijection", "rotation", "join"])
    p.add_argument("--sign", required=True)
    p.add_argument("--with", dest="with_")
    p.add_argument("--at", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("promote", help="jeu-de-taquin promotion")
    p.add_argument("--tableau", required=True)
    p.add_argument("--times", type=int, default=1)
    p.set_defaults(func=cmd_promote)

    p = sub.add_parser("shuffle", help="shuffle --from into --into at --at")
    p.add_argument("--into", required=True)
    p.add_argument("--from", dest="from_", required=True)
    p.add_argument("--at", type=int, required=True)
    p.add_argument("--by", choices=["columns", "rows"], default="columns")
    p.set_defaults(func=cmd_shuffle)

    p = sub.add_parser("rotate", help="rotate a web")
    p.add_argument("--web", required=True)
    p.add_argument("--times", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_rotate)

    p = sub.add_parser("join", help="insert --other into --web after boundary vertex --at")
    p.add_argument("--web", required=True)
    p.add_argument("--other", required=True)
    p.add_argument("--at", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_join)

    p = sub.add_parser("render", help="SVG or TikZ drawing")
    p.add_argument("--web")
    p.add_argument("--tableau")
    p.add_argument("--sign", help="content of --tableau; omit to read it as a three-row standard tableau")
    p.add_argument("--format", choices=["svg", "tikz"], default="svg")
    p.add_argument("--scale", default="1")
    p.add_argument("--depths", action="store_true", help="label faces along the boundary with depths")
    p.add_argument("--no-signs", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = make_parser().parse_args(_glue_sign_values(argv))
    try:
        return args.func(args)
    except InvariantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (Sl3WebsError, ValueError, OSError) as exc:
        code = getattr(exc, "code", type(exc).__name__)
        print(f"error: {code}: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return 1


run = main

if __name__ == "__main__":
    sys.exit(main())

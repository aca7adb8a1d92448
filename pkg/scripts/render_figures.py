"""Draw the webs of a few small fillings as SVG (or TikZ) files.

    python3 scripts/render_figures.py --outdir figures
"""

import argparse
from pathlib import Path

from sl3webs.bijection import tableau_to_web
from sl3webs.mdiagram import build_m_diagram
from sl3webs.render import RenderSpec, render
from sl3webs.signs_tableaux import Tableau, enumerate_fillings
from sl3webs.web import web_from_m_diagram

CATALOG = ["---", "--++", "-++++", "++-++-+"]


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", type=Path, default=Path("figures"))
    ap.add_argument("--format", choices=["svg", "tikz"], default="svg")
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    spec = RenderSpec(format=args.format, label_depths=True)
    ext = "svg" if args.format == "svg" else "tex"

    jobs = [("all_plus_13-25-46", web_from_m_diagram(build_m_diagram(Tableau.parse("13/25/46"))))]
    for s in CATALOG:
        for T in enumerate_fillings(s):
            if s == "++-++-+" and str(T) != "134/256/367":
                continue
            jobs.append((f"{s.replace('-', 'm').replace('+', 'p')}_{str(T).replace('/', '-')}", tableau_to_web(T, s)))
    for name, w in jobs:
        path = args.outdir / f"{name}.{ext}"
        path.write_text(render(w, spec))
        print(path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

"""figkit: render reference figures from simctl CSV files."""

from __future__ import annotations

import argparse
import sys

from .render import FIGURE_IDS, FigkitError, FigureSpec, render


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="figkit", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("render", help="render one figure from CSV input")
    p.add_argument("--figure", required=True, choices=FIGURE_IDS)
    p.add_argument("--csv", action="append", required=True,
                   help="input CSV (repeatable where a figure needs several)")
    p.add_argument("--out", required=True, help="output image path (.png/.svg/.pdf)")
    p.add_argument("--require-column", action="append", default=[],
                   help="fail unless this CSV column exists")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    spec = FigureSpec(
        figure=args.figure,
        csv_paths=tuple(args.csv),
        out_path=args.out,
        columns=tuple(args.require_column),
    )
    try:
        out = render(spec)
    except FigkitError as exc:
        print(f"figkit: error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

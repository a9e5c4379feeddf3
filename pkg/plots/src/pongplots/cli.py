"""CLI: plots <kind> --in <csv...> --out <img>

Renders one of the three figure kinds (vuln, transfer, attack) from harness
CSV logs to a PNG. Exit 0 on success; named one-line error on stderr and a
nonzero exit otherwise (2 for schema mismatches, 1 for anything else).
"""

from __future__ import annotations

import argparse
import sys

from .render import FigureSpec, SchemaMismatchError, render_figure


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="plots",
                                     description="render ponglab experiment figures")
    parser.add_argument("kind", choices=("vuln", "transfer", "attack"))
    parser.add_argument("--in", dest="inputs", nargs="+", required=True,
                        metavar="CSV", help="input CSV log(s)")
    parser.add_argument("--out", required=True, help="output PNG path")
    args = parser.parse_args(argv)
    try:
        series = render_figure(FigureSpec(kind=args.kind, inputs=args.inputs,
                                          out=args.out))
    except Exception as err:
        message = str(err).replace("\n", " ")
        print(f"error: {type(err).__name__}: {message}", file=sys.stderr)
        return 2 if isinstance(err, SchemaMismatchError) else 1
    total = sum(series.values())
    print(f"wrote {args.out}: {len(series)} series, {total} points")
    return 0


if __name__ == "__main__":
    sys.exit(main())

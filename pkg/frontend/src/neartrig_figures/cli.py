"""The render_figures command: turn a directory of neartrig CSV curves into
the six reference figures."""

from __future__ import annotations

import argparse
import glob
import os
import sys

from .csvio import CurveParseError
from .render import MissingStyleError, build_spec, render_figure


def render_directory(indir: str, outdir: str, only_figure: int | None,
                     image_format: str) -> list:
    written = []
    os.makedirs(outdir, exist_ok=True)
    for fid in range(1, 7):
        if only_figure is not None and fid != only_figure:
            continue
        paths = sorted(glob.glob(os.path.join(indir, f"fig{fid}*.csv")))
        if not paths:
            if only_figure is not None:
                raise CurveParseError(f"no fig{fid}*.csv files in {indir}")
            continue
        out = os.path.join(outdir, f"figure{fid}.{image_format}")
        spec = build_spec(fid, paths, out)
        render_figure(spec)
        written.append(out)
    return written


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="render_figures",
        description="Render neartrig figure CSVs into images.",
    )
    parser.add_argument("--indir", required=True, help="directory of fig*.csv files")
    parser.add_argument("--outdir", required=True, help="directory for the images")
    parser.add_argument("--figure", type=int, choices=range(1, 7), default=None,
                        help="render only this figure")
    parser.add_argument("--format", choices=("svg", "png"), default="svg")
    args = parser.parse_args(argv)
    try:
        written = render_directory(args.indir, args.outdir, args.figure, args.format)
    except MissingStyleError as exc:
        print(f"error: no style for curve {exc}", file=sys.stderr)
        return 2
    except CurveParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O failure: {exc}", file=sys.stderr)
        return 4
    if not written:
        print(f"error: no figure CSVs found in {args.indir}", file=sys.stderr)
        return 2
    for path in written:
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

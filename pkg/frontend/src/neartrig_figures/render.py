"""Figure assembly: CSV curves in, one multi-panel image out.

The renderer never computes function values; every plotted number comes
straight out of a CSV cell.  Styles follow the reference captions
("continuous", "dotted", "dashed").
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from matplotlib.figure import Figure

from .csvio import CurveParseError, ParsedCurve, parse_curve

LINESTYLES = {"continuous": "-", "dotted": ":", "dashed": "--"}

# panels per figure, ordered left-to-right/top-to-bottom by letter
PANEL_COUNTS = {1: 1, 2: 4, 3: 3, 4: 1, 5: 1, 6: 2}
_PANEL_GRID = {1: (1, 1), 2: (2, 2), 3: (1, 3), 4: (1, 1), 5: (1, 1), 6: (1, 2)}

_YLABEL = {
    "cos_m": "cos_m(x)",
    "sin_m": "sin_m(x)",
    "cos_m_deriv": "derivative",
    "e_m": "e_m(x)",
    "e_half": "e_half_m(-x)",
    "os": "os_m(x)",
    "fel_gain": "gain(x)",
    "trig_locus": "sin_m(t)",
}


class MissingStyleError(KeyError):
    """A curve has no entry in the figure's style map."""


@dataclass
class FigureSpec:
    figure_id: int
    csv_paths: list
    style_map: dict          # curve label -> continuous | dotted | dashed
    output_path: str
    curves: list = field(default_factory=list)

    def __post_init__(self):
        if self.figure_id not in PANEL_COUNTS:
            raise ValueError("figure id must be 1..6")
        if not self.csv_paths:
            raise CurveParseError("a figure needs at least one input CSV")
        self.curves = [parse_curve(p) for p in self.csv_paths]
        for curve in self.curves:
            if curve.label not in self.style_map:
                raise MissingStyleError(curve.label)


def default_style(label: str) -> str:
    """Caption line styles keyed on the curve label."""
    rules = [
        (r"^fig1_cos_m3$", "continuous"),
        (r"^fig1_cos_m0\.5$", "dotted"),
        (r"^fig2[ab]_cos_", "continuous"),
        (r"^fig2[ab]_sin_", "dotted"),
        (r"^fig2[cd]_negdcos_", "continuous"),
        (r"^fig2[cd]_sin_", "dotted"),
        (r"^fig3[abc]_locus_", "continuous"),
        (r"^fig4_e_m-0\.5$", "continuous"),
        (r"^fig4_e_m0\.5$", "dotted"),
        (r"^fig4_e_m0$", "dashed"),
        (r"^fig5_e_half_m0$", "continuous"),
        (r"^fig5_e_half_m0\.5$", "dotted"),
        (r"^fig5_e_half_m1$", "dashed"),
        (r"^fig6[ab]_", "continuous"),
    ]
    for pattern, style in rules:
        if re.match(pattern, label):
            return style
    raise MissingStyleError(label)


def build_spec(figure_id: int, csv_paths, output_path: str) -> FigureSpec:
    paths = sorted(csv_paths)
    styles = {}
    for p in paths:
        label = p.rsplit("/", 1)[-1].rsplit(".", 1)[0]
        styles[label] = default_style(label)
    return FigureSpec(figure_id, paths, styles, output_path)


def _panel_index(curve: ParsedCurve) -> int:
    return 0 if not curve.panel else ord(curve.panel) - ord("a")


def render_figure(spec: FigureSpec) -> Figure:
    """Draw the figure and write it to spec.output_path.

    Returns the Figure object so callers can extract the plotted series
    (line data round-trips exactly to the CSV cells).
    """
    rows, cols = _PANEL_GRID[spec.figure_id]
    panels = PANEL_COUNTS[spec.figure_id]
    fig = Figure(figsize=(5.0 * cols, 3.6 * rows))
    axes = [fig.add_subplot(rows, cols, i + 1) for i in range(panels)]

    for curve in spec.curves:
        ax = axes[_panel_index(curve)]
        style = LINESTYLES[spec.style_map[curve.label]]
        if curve.columns == ("t", "cos", "sin"):
            xs = [r[1] for r in curve.rows]
            ys = [r[2] for r in curve.rows]
            ax.set_xlabel("cos_m(t)")
            ax.set_aspect("equal", adjustable="datalim")
        else:
            xs = [r[0] for r in curve.rows]
            ys = [r[1] for r in curve.rows]
            ax.set_xlabel("x")
        ax.plot(xs, ys, linestyle=style, label=curve.label.split("_", 1)[1])
        ax.set_ylabel(_YLABEL.get(curve.fn_id, "value"))

    for i, ax in enumerate(axes):
        if panels > 1:
            ax.set_title(f"({chr(ord('a') + i)})")
        ax.legend(loc="best", fontsize="small")
    fig.tight_layout()
    fig.savefig(spec.output_path)
    return fig

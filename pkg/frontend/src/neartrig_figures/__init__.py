"""Render neartrig CSV curve files into the six reference figures."""

from .csvio import CurveParseError, ParsedCurve, parse_curve
from .render import (
    FigureSpec,
    LINESTYLES,
    MissingStyleError,
    PANEL_COUNTS,
    build_spec,
    default_style,
    render_figure,
)

__version__ = "0.1.0"

__all__ = [
    "CurveParseError",
    "FigureSpec",
    "LINESTYLES",
    "MissingStyleError",
    "PANEL_COUNTS",
    "ParsedCurve",
    "build_spec",
    "default_style",
    "parse_curve",
    "render_figure",
]

"""Sampled curves and their CSV serialization, plus the fixed curve sets
that reproduce the six reference figures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .gaussian import gauss_like, gauss_like_half, lorentz_power
from .ntf import nearly_cos, nearly_cos_deriv, nearly_sin
from .transforms import fel_gain_curve

FN_IDS = ("cos_m", "sin_m", "cos_m_deriv", "e_m", "e_half", "os", "fel_gain")


@dataclass
class Curve:
    """A sampled function: strictly increasing grid, same-length finite values."""

    fn_id: str
    params: dict
    grid: list[float]
    values: list[float]
    label: str = ""
    columns: tuple = ("x", "value")
    extra: list = field(default_factory=list)  # second value column (parametric loci)

    def __post_init__(self):
        if len(self.grid) != len(self.values):
            raise ValueError("grid and values must have equal length")
        if self.extra and len(self.extra) != len(self.grid):
            raise ValueError("extra column length mismatch")
        for a, b in zip(self.grid, self.grid[1:]):
            if not b > a:
                raise ValueError("grid must be strictly increasing")
        for v in self.values:
            if not math.isfinite(v):
                raise ValueError("curve values must be finite")


def _evaluator(fn_id: str, params: dict):
    if fn_id == "cos_m":
        m = params["m"]
        return lambda x: nearly_cos(m, x)
    if fn_id == "sin_m":
        m = params["m"]
        return lambda x: nearly_sin(m, x)
    if fn_id == "cos_m_deriv":
        m, k = params["m"], int(params.get("k", 1))
        sign = float(params.get("sign", 1))
        if sign == 1.0:
            return lambda x: nearly_cos_deriv(m, k, x)
        return lambda x: -nearly_cos_deriv(m, k, x)
    if fn_id == "e_m":
        m = params["m"]
        return lambda x: gauss_like(m, x)
    if fn_id == "e_half":
        m = params["m"]
        if params.get("negate_arg"):
            return lambda x: gauss_like_half(m, -x)
        return lambda x: gauss_like_half(m, x)
    if fn_id == "os":
        m, nu = params["m"], params["nu"]
        return lambda x: lorentz_power(m, nu, x)
    if fn_id == "fel_gain":
        return fel_gain_curve
    raise ValueError(f"unknown fn id {fn_id!r}; choose one of {', '.join(FN_IDS)}")


def grid_curve(fn_id: str, params: dict, lo: float, hi: float, n: int,
               label: str = "") -> Curve:
    if not lo < hi:
        raise ValueError("need from < to")
    if n < 2:
        raise ValueError("need at least two grid points")
    f = _evaluator(fn_id, params)
    xs = [float(t) for t in np.linspace(lo, hi, n)]
    return Curve(fn_id, params, xs, [f(x) for x in xs], label or fn_id)


def _fmt(v: float) -> str:
    return format(v, ".17g")


def curve_csv(curve: Curve) -> str:
    """CSV per the interchange contract: a single comment line, a header,
    then full-round-trip numeric rows with LF endings."""
    params = ",".join(f"{k}={v:g}" if isinstance(v, float) else f"{k}={v}"
                      for k, v in curve.params.items())
    lines = [f"# fn={curve.fn_id} params={params} generated-by=neartrig"]
    lines.append(",".join(curve.columns))
    if curve.extra:
        for x, a, b in zip(curve.grid, curve.values, curve.extra):
            lines.append(f"{_fmt(x)},{_fmt(a)},{_fmt(b)}")
    else:
        for x, v in zip(curve.grid, curve.values):
            lines.append(f"{_fmt(x)},{_fmt(v)}")
    return "\n".join(lines) + "\n"


def write_curve(curve: Curve, path) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(curve_csv(curve))


# --- the six reference figures -------------------------------------------------

FIGURE_GRID_N = 1001


def _locus_curve(m: float, label: str) -> Curve:
    ts = [float(t) for t in np.linspace(0.0, 40.0, FIGURE_GRID_N)]
    cos_vals = [nearly_cos(m, t) for t in ts]
    sin_vals = [nearly_sin(m, t) for t in ts]
    return Curve("trig_locus", {"m": m}, ts, cos_vals, label,
                 columns=("t", "cos", "sin"), extra=sin_vals)


def figure_curves(figure_id: int) -> list[Curve]:
    """Curves for one of the six figures, labelled fig<id><panel>_<curve>."""
    n = FIGURE_GRID_N
    if figure_id == 1:
        return [
            grid_curve("cos_m", {"m": 3.0}, -20.0, 20.0, n, "fig1_cos_m3"),
            grid_curve("cos_m", {"m": 0.5}, -20.0, 20.0, n, "fig1_cos_m0.5"),
        ]
    if figure_id == 2:
        out = []
        for panel, m in (("a", 0.5), ("b", 5.0)):
            out.append(grid_curve("cos_m", {"m": m}, -20.0, 20.0, n, f"fig2{panel}_cos_m{m:g}"))
            out.append(grid_curve("sin_m", {"m": m}, -20.0, 20.0, n, f"fig2{panel}_sin_m{m:g}"))
        for panel, m in (("c", 0.5), ("d", 5.0)):
            out.append(grid_curve("cos_m_deriv", {"m": m, "k": 1, "sign": -1},
                                  -20.0, 20.0, n, f"fig2{panel}_negdcos_m{m:g}"))
            out.append(grid_curve("sin_m", {"m": m}, -20.0, 20.0, n, f"fig2{panel}_sin_m{m:g}"))
        return out
    if figure_id == 3:
        return [
            _locus_curve(0.0, "fig3a_locus_m0"),
            _locus_curve(0.5, "fig3b_locus_m0.5"),
            _locus_curve(2.0, "fig3c_locus_m2"),
        ]
    if figure_id == 4:
        return [
            grid_curve("e_m", {"m": -0.5}, -4.0, 4.0, n, "fig4_e_m-0.5"),
            grid_curve("e_m", {"m": 0.5}, -4.0, 4.0, n, "fig4_e_m0.5"),
            grid_curve("e_m", {"m": 0.0}, -4.0, 4.0, n, "fig4_e_m0"),
        ]
    if figure_id == 5:
        return [
            grid_curve("e_half", {"m": m, "negate_arg": 1}, -1.0, 6.0, n,
                       f"fig5_e_half_m{m:g}")
            for m in (0.0, 0.5, 1.0)
        ]
    if figure_id == 6:
        out = []
        for m in (0.5, 1.0, 2.0, 5.0):
            out.append(grid_curve("cos_m", {"m": m}, -20.0, 20.0, n, f"fig6a_cos_m{m:g}"))
        for m in (0.5, 1.0, 2.0, 5.0):
            out.append(grid_curve("sin_m", {"m": m}, -20.0, 20.0, n, f"fig6b_sin_m{m:g}"))
        return out
    raise ValueError("figure id must be 1..6")

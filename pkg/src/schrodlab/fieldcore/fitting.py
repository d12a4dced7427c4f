"""Log-log exponent fitting for the scaling experiments."""

from dataclasses import dataclass

import numpy as np

from ..errors import DegenerateInput


@dataclass
class ExponentFit:
    slope: float
    intercept: float
    max_residual: float
    points: list

    def predict(self, scale):
        return np.exp(self.intercept) * np.asarray(scale, dtype=float) ** self.slope


def fit_exponent(points) -> ExponentFit:
    """Least-squares line through (log scale, log value).

    points: iterable of (scale, value) pairs, all positive, >= 3 of them
    with distinct scales.
    """
    pts = [(float(s), float(v)) for s, v in points]
    if len(pts) < 3:
        raise DegenerateInput(f"need >= 3 points, got {len(pts)}")
    scales = np.array([p[0] for p in pts])
    values = np.array([p[1] for p in pts])
    if np.any(scales <= 0) or np.any(values <= 0):
        raise DegenerateInput("scales and values must be positive")
    if len(np.unique(scales)) < len(scales):
        raise DegenerateInput("scales must be distinct")
    ls = np.log(scales)
    lv = np.log(values)
    slope, intercept = np.polyfit(ls, lv, 1)
    resid = lv - (slope * ls + intercept)
    return ExponentFit(
        slope=float(slope),
        intercept=float(intercept),
        max_residual=float(np.max(np.abs(resid))),
        points=[(s, v) for s, v in zip(ls, lv)],
    )

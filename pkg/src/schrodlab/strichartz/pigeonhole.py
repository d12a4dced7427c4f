"""Dyadic pigeonholing: trade a log factor for a constancy class."""

from dataclasses import dataclass

import numpy as np

from ..errors import AllBelowFloor


@dataclass
class PigeonholeSelection:
    class_exponent: int        # selected dyadic class: values in [2^m, 2^(m+1))
    selected: np.ndarray       # indices into the input arrays
    retained_mass: float
    total_mass: float          # mass surviving the floor
    dropped_mass: float        # mass discarded below the floor
    n_classes: int

    @property
    def retained_fraction(self):
        return self.retained_mass / (self.total_mass + self.dropped_mass)


def dyadic_pigeonhole(values, masses=None, R=None, floor_exponent=20) -> PigeonholeSelection:
    """Pick the dyadic magnitude class of `values` holding the most mass.

    Values below max(values) * R^(-floor_exponent) are pre-dropped.  The
    selected class retains at least total/(number of classes) of the
    surviving mass, and there are at most ~ floor_exponent*log2(R) classes.
    """
    values = np.asarray(values, dtype=float)
    if np.any(values < 0):
        raise ValueError("values must be positive")
    if masses is None:
        masses = values
    masses = np.asarray(masses, dtype=float)
    if R is None:
        raise ValueError("R is required to place the value floor")

    reference = values.max() if values.size else 0.0
    if reference <= 0:
        raise AllBelowFloor("no positive values")
    floor = reference * float(R) ** (-floor_exponent)
    alive = values > floor
    if not alive.any():
        raise AllBelowFloor("every value sits below the floor")
    dropped = float(masses[~alive].sum())

    exps = np.floor(np.log2(values[alive])).astype(int)
    idx_alive = np.flatnonzero(alive)
    classes = {}
    for e in np.unique(exps):
        members = idx_alive[exps == e]
        classes[int(e)] = (members, float(masses[members].sum()))
    best = max(classes.items(), key=lambda kv: kv[1][1])
    total = float(masses[alive].sum())
    return PigeonholeSelection(
        class_exponent=best[0],
        selected=best[1][0],
        retained_mass=best[1][1],
        total_mass=total,
        dropped_mass=dropped,
        n_classes=len(classes),
    )

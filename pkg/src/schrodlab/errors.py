"""Exception types shared across the library.

Every failure mode that callers are expected to handle gets its own class;
plain ValueError is reserved for programming errors (bad argument shapes,
nonsense parameters).
"""


class SchrodLabError(Exception):
    """Base class for all library-specific errors."""


class GridTooCoarse(SchrodLabError):
    """Grid cannot resolve the requested frequency band."""


class EmptyRegion(SchrodLabError):
    """A norm was requested over a region containing no grid points."""


class BadSupport(SchrodLabError):
    """Spectral data leaks outside its declared frequency support ball."""


class ScaleMismatch(SchrodLabError):
    """Two objects built for different scales R (or grids) were combined."""


class DegenerateInput(SchrodLabError):
    """Input degenerate for a fit (too few points, repeated scales, ...)."""


class BisectionNotFound(SchrodLabError):
    """The ham-sandwich solver exhausted its restarts without bisecting."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class NoNonSingularPoints(SchrodLabError):
    """All sampled zero-set points had vanishing gradient."""


class TooManyPackets(SchrodLabError):
    """Requested packet count exceeds the disjoint-support capacity."""


class ConstructionDegenerate(SchrodLabError):
    """An extremal example came out structurally wrong (e.g. |X| too small)."""


class UnknownExperiment(SchrodLabError):
    """Experiment name not in the registry."""


class AllBelowFloor(SchrodLabError):
    """Every value fell below the dyadic pigeonhole floor."""


class NonUniformCubes(SchrodLabError):
    """Per-cube norms violate the essential-constancy precondition."""


class SeparationViolated(SchrodLabError):
    """Fourier supports are closer than the required separation."""


class SupportViolation(SchrodLabError):
    """A decoupling piece leaks outside its assigned frequency box."""


class PreconditionFailed(SchrodLabError):
    """A pointwise hypothesis failed everywhere, leaving nothing to check."""

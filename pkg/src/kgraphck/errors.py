"""Exception hierarchy for the toolkit.

Every error carries enough data to replay the failure independently
(witness paths, certificates, offending ids).
"""


class KGraphError(Exception):
    """Base class for all toolkit errors."""


# --- presentation / validation ---------------------------------------------

class DuplicateSquare(KGraphError):
    """A bicoloured composable pair occurs in more than one factorisation square."""


class MissingSquare(KGraphError):
    """A composable bicoloured pair has no factorisation square."""


class MismatchedEndpoints(KGraphError):
    """A factorisation square violates range/source compatibility."""


class AssociativityFailure(KGraphError):
    """The cube condition failed; carries the witness edge triple."""

    def __init__(self, msg, triple=None):
        super().__init__(msg)
        self.triple = triple


class UnknownVertex(KGraphError):
    pass


class NotComposable(KGraphError):
    pass


class DegreeOutOfRange(KGraphError):
    pass


# --- algebra ----------------------------------------------------------------

class GraphMismatch(KGraphError):
    """Operands live over different graphs."""


class NotAGraphTrace(KGraphError):
    """Vertex weighting fails the graph-trace equation."""


class NotFinitelySummable(KGraphError):
    """The defining net is not a finite sum (cyclic graph, no truncation bound)."""


# --- trace analysis ----------------------------------------------------------

class MissingVertexValue(KGraphError):
    pass


class NotLocallyConvex(KGraphError):
    pass


class RangeMismatch(KGraphError):
    pass


class SufficientConditionUnmet(KGraphError):
    pass


# --- k-theory ----------------------------------------------------------------

class UnsaturatedLattice(KGraphError):
    """Doubling the search box changed the end-group lattice; escalate."""


# --- spectral ----------------------------------------------------------------

class ProjectorMismatch(KGraphError):
    """Closed-form and constructive projector families disagree beyond tolerance."""


class NotQuantized(KGraphError):
    """Curvature sum is not near an integer; grid too coarse."""


class UnstableKernel(KGraphError):
    """Truncated index not constant under enlarging the mode cutoff."""


class DivergenceDetected(KGraphError):
    """Log-linear fit residual exceeds threshold."""

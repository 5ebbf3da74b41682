"""Exception hierarchy shared by all knotdet modules."""


class KnotdetError(Exception):
    """Base class for every error raised by this package."""


class PDError(KnotdetError):
    """Base class for errors detected while reading PD-code input."""


class MalformedLine(PDError):
    """A PD line does not consist of `X` followed by four integers."""


class BadEdgeMultiplicity(PDError):
    """Some edge label does not appear exactly twice."""


class Disconnected(PDError):
    """The crossings do not form a single connected universe."""


class EmptyDiagram(PDError):
    """No crossings given; diagrams need at least one crossing."""


class InconsistentOrientation(PDError):
    """The PD code cannot be traversed with every under-strand entering
    at its first position."""


class NonPlanarEmbedding(KnotdetError):
    """Face count of the rotation system is not n + 2, so the PD code
    does not describe a sphere/plane diagram."""


class NotBipartiteFaces(KnotdetError):
    """Face adjacency admits no proper 2-coloring (corrupt map data)."""


class MultiComponent(KnotdetError):
    """Operation is defined for knots only but the diagram has several
    link components."""


class NotAlternating(KnotdetError):
    """Operation requires an alternating diagram."""


class SignMixture(KnotdetError):
    """State evaluations at t = -1 on an alternating knot did not share
    one sign; this indicates an implementation bug, not bad input."""


class ClockTheoremViolation(KnotdetError):
    """State lattice is disconnected or its extremal states are not
    unique; indicates an implementation bug, not bad input."""


class NotEulerian(KnotdetError):
    """Digraph is not connected and balanced."""


class LoopsNotAllowed(KnotdetError):
    """Digraph contains a loop but loops were not explicitly enabled."""


class TooLarge(KnotdetError):
    """Instance exceeds an enumeration guard.

    Guards exist so that the exponential enumeration paths are only taken
    on desk-scale instances.  They can be raised per call or globally via
    the KDL_GUARD_MAX environment variable.
    """


class DegenerateSimplex(KnotdetError):
    """Vertex set is affinely dependent (input was not a spanning tree)."""

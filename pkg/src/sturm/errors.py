"""Exception hierarchy for the package."""


class SturmError(Exception):
    """Base class for every error raised by this package."""


# permutation parsing and group utilities

class EmptyInput(SturmError):
    """Permutation text contained no entries."""


class NotABijection(SturmError):
    """The given images are not a bijection of {1..N}."""


class MalformedCycle(SturmError):
    """Cycle notation could not be parsed."""


class SizeMismatch(SturmError):
    """Permutations of different sizes were combined."""


# index and zero-number recursions

class NotDissipative(SturmError):
    """sigma(1) = 1 or sigma(N) = N fails, so the recursion anchors are undefined."""


class AnchorMismatch(SturmError):
    """The forward index recursion does not land back on zero at the last position."""


class SymmetryViolation(SturmError):
    """The two triangles of the zero-number matrix disagree; the input is not Sturm."""


class EqualLabels(SturmError):
    """A signed zero number of an equilibrium against itself was requested."""


class NegativeDimension(SturmError):
    """Chafee-Infante attractors need a nonnegative dimension."""


# meander geometry

class BoundExceeded(SturmError):
    """Requested enumeration size exceeds the configured bound."""


# connection graph

class IndexOrderViolated(SturmError):
    """A blocking query needs a strictly larger Morse index at the source."""


class NotSturm(SturmError):
    """The permutation is not a dissipative Morse meander."""


# complex model

class MalformedJSON(SturmError):
    """Complex or template text is not valid JSON."""


class SchemaViolation(SturmError):
    """JSON is well formed but does not match the documented schema."""


class ComplexInvalid(SturmError):
    """Structural findings present and the force flag was not set."""


class ReconstructionFailed(SturmError):
    """A complex could not be canonicalized through boundary-order reconstruction."""


# descendants and reconstruction

class NoCandidate(SturmError):
    """No cell qualifies as the next descendant; the complex is not Sturm."""


class MultipleCandidates(SturmError):
    """Several cells qualify as the next descendant; the complex is not Sturm."""


class SlotConflict(SturmError):
    """Two cells claim the same neighbor slot during reconstruction."""


class BrokenChain(SturmError):
    """Successor links do not form one path over all cells."""


class BadEndpoints(SturmError):
    """A reconstructed boundary order does not start and end at 0-cells."""


class LabelMismatch(SturmError):
    """The two boundary orders do not range over the same labels."""


# geometric templates

class InvalidBipolarity(SturmError):
    """Edge orientations are cyclic or have extra sources or sinks."""


class PathMismatch(SturmError):
    """A declared face or meridian path is inconsistent with the 1-skeleton."""


class TemplateInvalid(SturmError):
    """The ball template fails validation and the force flag was not set."""

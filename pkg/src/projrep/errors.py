"""Exception hierarchy for the projrep package."""


class ProjrepError(Exception):
    """Base class for all projrep errors."""


class NotPermutation(ProjrepError):
    """A generator is not a permutation of the stated point set."""


class ClosureTooLarge(ProjrepError):
    """Group closure exceeded the configured order cap."""


class NotNormal(ProjrepError):
    """Operation requires a normal subgroup."""


class NotPiSeparable(ProjrepError):
    """Operation requires a pi-separable group."""


class ComplementSearchExhausted(ProjrepError):
    """Hall complement search ran out of retries (cap too low)."""


class ModulusMismatch(ProjrepError):
    """Cocycle tables have incompatible moduli or shapes."""


class GroupTooLargeForH2(ProjrepError):
    """Group order exceeds the configured multiplier computation cap."""


class NotCentral(ProjrepError):
    """Subgroup is not central in the extension."""


class NotCyclic(ProjrepError):
    """Central subgroup must be cyclic."""


class NumericDegeneracy(ProjrepError):
    """Randomized spectral splitting failed after bounded retries."""


class DegreeNotIntegral(ProjrepError):
    """A block degree did not round to an integer within tolerance."""


class CrossCheckMismatch(ProjrepError):
    """Two independent computations of the same quantity disagree."""


class CocycleMismatch(ProjrepError):
    """Representations do not share a cocycle within tolerance."""


class InertiaMismatch(ProjrepError):
    """Claimed inertia subgroup has an element with no intertwiner."""


class PhaseInstability(ProjrepError):
    """Intertwiner phase could not be fixed stably."""


class FactorizationFailure(ProjrepError):
    """Tensor factorization over an extension failed; indicates a bug."""


class ReconstructionFailure(ProjrepError):
    """Decomposition certificate failed to reconstruct its input."""


class UnknownGroup(ProjrepError):
    """Group name is not in the catalog and not a readable file."""


class BadCoclassIndex(ProjrepError):
    """Coclass index is out of range for the group's multiplier."""


class ParseError(ProjrepError):
    """Malformed group or cocycle JSON input."""


class ConfigError(ProjrepError):
    """Invalid run configuration."""

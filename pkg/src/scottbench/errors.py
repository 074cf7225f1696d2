"""Exception types shared across the workbench."""


class WorkbenchError(Exception):
    """Base class for all errors raised by scottbench."""


class SizeCapExceeded(WorkbenchError):
    """A poset or product would exceed the bitmask word-width cap."""


class IndexOutOfRange(WorkbenchError):
    """An element index is outside 0..n-1."""


class GroundMismatch(WorkbenchError):
    """A subset or family does not live over the expected ground set."""


class CycleDetected(WorkbenchError):
    """Antisymmetry failed after transitive closure."""


class NotAPartialOrder(WorkbenchError):
    """A full relation was not reflexive/transitive as given."""


class UnknownName(WorkbenchError):
    """Unrecognized named-poset generator."""


class MaterializationCapExceeded(WorkbenchError):
    """A set family is too large to materialize; use predicate form."""


class NotALattice(WorkbenchError):
    """Operation requires binary joins and meets."""


class NoBinaryJoins(WorkbenchError):
    """Operation requires a sup semilattice."""


class NotMonotone(WorkbenchError):
    """A map table violates order preservation."""


class NotAnOpen(WorkbenchError):
    """Argument is not an open (upper) set of the space in question."""


class NotSaturated(WorkbenchError):
    """Argument is not a saturated (upper) set."""


class WitnessNotFound(WorkbenchError):
    """A constructive witness the theory guarantees could not be built."""


class CollectionOracleCapExceeded(WorkbenchError):
    """The collection-quantified oracle is only enumerable on tiny lattices."""


class ConsonanceCapExceeded(WorkbenchError):
    """The consonance scan would exceed the open-family quantifier cap."""


class UnknownTheorem(WorkbenchError):
    """Theorem id is not registered."""

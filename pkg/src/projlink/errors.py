"""Exception types shared across the package."""


class MapError(Exception):
    """Base class for all domain errors raised by this package."""


class MalformedPairing(MapError):
    """The dart pairing is not a fixed-point-free involution on 0..2E-1."""


class MalformedRotations(MapError):
    """The vertex rotations do not partition the dart set."""


class NotConnected(MapError):
    """The underlying graph of the map is not connected."""


class NotSpherical(MapError):
    """The rotation system does not embed in the sphere (Euler count != 2)."""

    def __init__(self, euler: int):
        super().__init__(f"rotation system has Euler characteristic {euler}, expected 2")
        self.euler = euler


class NotEulerian(MapError):
    """A 4-regular map was required but some vertex has a different degree."""


class TooLarge(MapError):
    """The diagram exceeds the configured crossing bound for exact state sums."""


class NotAWitness(MapError):
    """A claimed antipodal witness does not verify against the given map."""


class NotProjective(MapError):
    """An operation requiring a projective verdict was called on a rejected map."""


class NotAntipodallySelfDual(MapError):
    """An operation requiring an antipodal self-duality was called without one."""


class PoleInput(MapError):
    """Exactly one side of the inversion identity evaluated to infinity."""


class ContradictionError(MapError):
    """An internal consistency check that should be impossible to violate failed."""

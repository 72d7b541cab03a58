"""Exception types shared across the package."""


class InputError(Exception):
    """Invalid mathematical input: bad quivers, mismatched vectors, caps."""


class LoopError(InputError):
    """An arrow starts and ends at the same vertex."""


class DimensionMismatchError(InputError):
    """A vector does not match the object it is paired with."""


class CapExceededError(InputError):
    """A brute-force enumeration would exceed the configured search-space cap."""


class ConsistencyError(Exception):
    """Two independent computations of the same quantity disagreed, or an
    integrality/positivity guarantee failed.  Always indicates a bug, never
    bad user input."""

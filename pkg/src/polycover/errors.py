"""Exception hierarchy shared by all polycover modules."""


class PolycoverError(Exception):
    """Base class for all library errors."""


class InvalidPolygon(PolycoverError):
    pass


class PointOutside(PolycoverError):
    pass


class NotAChord(PolycoverError):
    pass


class NotConvexVertex(PolycoverError):
    pass


class NotWVP(PolycoverError):
    """Input is not weakly visible from the given convex edge."""


class NotAnAntichain(PolycoverError):
    pass


class NotAFan(PolycoverError):
    pass


class NotAMountain(PolycoverError):
    pass


class NotARockingChair(PolycoverError):
    pass


class EmptyKernel(PolycoverError):
    pass


class NoWeakChordFound(PolycoverError):
    pass


class NotOrthogonal(PolycoverError):
    pass


class NotAFunnel(PolycoverError):
    pass


class NotAPseudotriangle(PolycoverError):
    pass


class TooLarge(PolycoverError):
    pass


class ChordDegeneracy(PolycoverError):
    pass

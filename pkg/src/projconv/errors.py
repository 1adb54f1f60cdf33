"""Exception types shared across the package."""


class ProjconvError(Exception):
    """Base class for every library error."""


# kernel
class ZeroVector(ProjconvError):
    pass


class DimensionMismatch(ProjconvError):
    pass


# projective
class EqualPoints(ProjconvError):
    pass


# convexset
class InvalidPolytope(ProjconvError):
    pass


class NotMembers(ProjconvError):
    pass


class NotContained(ProjconvError):
    pass


class NotDisjoint(ProjconvError):
    pass


# multiconvex
class MixedTopology(ProjconvError):
    pass


class EmptyMultiConvex(ProjconvError):
    pass


class NotSaturated(ProjconvError):
    pass


class NotAComponent(ProjconvError):
    pass


# duality
class EmptySet(ProjconvError):
    pass


class WholeSpace(ProjconvError):
    pass


# oracle
class DegeneratePolygon(ProjconvError):
    pass


class NotGeneric(ProjconvError):
    pass


# scene / cli
class CollinearVertices(ProjconvError):
    pass


class SceneError(ProjconvError):
    pass


class NoAvoidingLines(ProjconvError):
    pass


class VerificationFailure(ProjconvError):
    pass

"""Exception hierarchy shared by all subpackages."""


class LabError(Exception):
    """Base class for every error raised by borsuk_lab."""


class DimensionError(LabError, ValueError):
    pass


class InvalidRootError(LabError, ValueError):
    pass


class EmptyInputError(LabError, ValueError):
    pass


class IncompatibilityError(LabError, ValueError):
    pass


class NoBranchError(LabError):
    """0 lies in the convex hull of the sampled spectrum, so no logarithm branch exists."""


class ResourceError(LabError):
    pass


class ConfigurationError(LabError, ValueError):
    pass


class RefinementError(LabError):
    pass


class SymmetrizationError(LabError):
    pass


class VanishingError(LabError):
    """The sampled function has a (numerical) zero on the vertex set."""


class AliasingError(LabError):
    """A phase jump along a loop is at least pi; the loop is under-resolved."""


class ExprSyntaxError(LabError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position

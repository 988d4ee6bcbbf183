class ConeError(ValueError):
    """Base class for precondition failures on cone inputs."""


class NotPointed(ConeError):
    pass


class NotProper(ConeError):
    pass


class ZeroCone(ConeError):
    pass


class NotPermutationInvariant(ConeError):
    pass


class InvalidAB(ConeError):
    """(a, b) makes (a-b)I + bE singular: a == b or a == (1-n) b."""


class DocumentError(ValueError):
    """Malformed cone document or CLI input."""


class NonConvergence(RuntimeError):
    pass

class SubshiftError(Exception):
    """
    Base class of all errors raised by SubshiftLab.
    """


class DomainError(SubshiftError, ValueError):
    """
    An argument lies outside the domain of an operation, e.g. a letter that
    does not belong to the alphabet of a substitution.
    """


class NotAFactorError(DomainError):
    """
    A word was expected to belong to the factor language, but does not.
    """

    def __init__(self, message: str, word=None):
        super().__init__(message)
        self.word = word


class OutOfRegimeError(DomainError):
    """
    A closed-form expression was evaluated outside the range of lengths it
    describes.
    """


class CapacityError(SubshiftError, RuntimeError):
    """
    A generator would produce a word longer than the configured capacity cap.
    """

    def __init__(self, message: str, requested: int = 0, cap: int = 0):
        super().__init__(message)
        self.requested = requested
        self.cap = cap

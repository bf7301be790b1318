class PackedWordsError(Exception):
    pass


class StructureError(PackedWordsError, ValueError):
    """An expression does not have the shape an operation expects."""


class ContractViolation(PackedWordsError, ValueError):
    """A documented precondition was not met by the caller."""


class DegreeCapExceeded(PackedWordsError):
    def __init__(self, degree, cap, what="basis"):
        self.degree = degree
        self.cap = cap
        super(DegreeCapExceeded, self).__init__(
            "%s of degree %d exceeds the configured cap of %d" % (what, degree, cap)
        )


class ExpressionSyntaxError(PackedWordsError, ValueError):
    def __init__(self, message, position):
        self.position = position
        super(ExpressionSyntaxError, self).__init__(
            "%s at position %d" % (message, position)
        )

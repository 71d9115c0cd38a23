"""Exception types shared across the package.

Plain ``ValueError`` is used for malformed arguments; the classes here mark
the two situations callers may want to handle specially: running into a
configured resource cap, and an exact computation contradicting a structural
fact that the rest of the pipeline relies on.
"""


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured memory/size cap.

    Carries ``limit_n``, the first index that could not be produced, when the
    failure happens inside a streaming pipeline.
    """

    def __init__(self, message: str, limit_n: int | None = None):
        super().__init__(message)
        self.limit_n = limit_n


class InvariantError(AssertionError):
    """An exact computation violated a structural invariant.

    Raised e.g. when a run decomposition produces a run of length other than
    2 or 3, or when a triangle row fails to match its defining product.
    ``detail`` holds the first offending datum (an exponent, an index, ...).
    """

    def __init__(self, message: str, detail=None):
        super().__init__(message)
        self.detail = detail

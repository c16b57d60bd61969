"""Exception types shared across the package."""


class NotUnitaryError(ValueError):
    """Input polynomial is not of the form x + c2*x^2 + ... + cd*x^d."""


class NoFactorError(Exception):
    """The requested split shape admits no factorization.

    This is a mathematically negative answer, not a usage error.  ``stage``
    names the family of coefficient equations that ruled the split out and is
    one of ``STAGE_LAMBDA``, ``STAGE_MU``, ``STAGE_MIDDLE``.
    """

    def __init__(self, stage: str, message: str) -> None:
        super().__init__(message)
        self.stage = stage


STAGE_LAMBDA = "lambda-undefined"
STAGE_MU = "mu-check"
STAGE_MIDDLE = "middle-coefficient-check"


class NotInFreeMonoidError(Exception):
    """The polynomial is not a product of single-term generators.

    ``stage`` is ``"head"`` when the leading/pre-leading terms do not point at
    a generator, ``"strip"`` when dividing the candidate head out fails.
    """

    def __init__(self, stage: str, message: str) -> None:
        super().__init__(message)
        self.stage = stage


class InternalInvariantError(Exception):
    """An internal consistency guard tripped; indicates a bug, not bad input."""

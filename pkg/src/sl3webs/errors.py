"""Exception types shared across the package.

Every error carries a ``code`` naming the failure (``"WrongContent"``,
``"PairNotCoincident"``, ...). The CLI maps :class:`ValidationError` to exit
status 1 and :class:`InvariantError` to exit status 3.
"""


class Sl3WebsError(Exception):
    code = "Error"

    def __init__(self, message: str = "", code: str | None = None):
        if code is not None:
            self.code = code
        super().__init__(message or self.code)

    def __str__(self) -> str:
        return f"{self.code}: {self.args[0]}"


class ValidationError(Sl3WebsError, ValueError):
    """Input does not satisfy an operation's preconditions."""

    code = "ValidationError"


class InvalidSign(ValidationError):
    code = "InvalidSign"


class InvalidTableau(ValidationError):
    """Raised with the full list of problems found by ``validate_tableau``."""

    code = "InvalidTableau"

    def __init__(self, problems, message: str = "", code: str | None = None):
        self.problems = list(problems)
        first = self.problems[0].kind if self.problems else "InvalidTableau"
        text = message or "; ".join(str(p) for p in self.problems)
        super().__init__(text, code=code or first)


class IndexOutOfRange(ValidationError):
    code = "IndexOutOfRange"


class InvalidWeb(ValidationError):
    code = "InvalidWeb"

    def __init__(self, problems, message: str = ""):
        self.problems = list(problems)
        first = self.problems[0].kind if self.problems else "InvalidWeb"
        text = message or "; ".join(str(p) for p in self.problems)
        super().__init__(text, code=first)


class InvariantError(Sl3WebsError, RuntimeError):
    """A property that the construction guarantees was found broken."""

    code = "InvariantError"

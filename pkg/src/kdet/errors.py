"""Exception hierarchy shared by all kdet modules.

Every error carries a short machine-readable ``code`` that the CLI echoes
in its JSON error objects.
"""


class KdetError(ValueError):
    code = "error"


class DomainError(KdetError):
    code = "domain_error"


class PoleError(DomainError):
    code = "pole_error"


class ParseError(KdetError):
    code = "parse_error"

    def __init__(self, message, position=None, expected=None):
        self.position = position
        self.expected = expected
        detail = message
        if position is not None:
            detail += f" at position {position}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


class DegreeError(KdetError):
    code = "degree_error"


class NotSquarefreeError(KdetError):
    code = "not_squarefree"

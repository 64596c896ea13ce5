"""Exception types shared across the toolkit."""


class TextlawsError(Exception):
    """Base class for all errors raised by textlaws."""


class ValidationError(TextlawsError):
    """An input value violates a documented precondition."""


class DomainError(TextlawsError):
    """A numeric argument lies outside a function's mathematical domain."""


class RuleGapError(ValidationError):
    """A character has no applicable rewrite rule and no default is set."""


class ResourceFormatError(TextlawsError):
    """A resource file is malformed; carries the path and line number."""

    def __init__(self, path, line_no, message):
        self.path = str(path)
        self.line_no = line_no
        super().__init__(f"{self.path}:{line_no}: {message}")

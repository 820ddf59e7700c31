class DslError(Exception):
    """Base class for identity-language errors."""


class DslSyntaxError(DslError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class DslEvalError(DslError):
    pass


class DegreeBoundError(DslError):
    pass

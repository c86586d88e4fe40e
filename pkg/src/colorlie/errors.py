class ColorLieError(ValueError):
    """Base class for every error raised by the library."""


class UnsupportedError(ColorLieError):
    """The inputs are well formed but outside what is implemented."""


class ParseError(ColorLieError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


class SchemaError(ColorLieError):
    pass

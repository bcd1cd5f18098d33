class PeiError(ValueError):
    Category: str = "error"

    def __init__(self, message: str):
        super().__init__(message)
        self.Message = message

    def __str__(self):
        return f"{self.Message}"


class DimensionError(PeiError):
    Category = "dimension"


class ParseError(PeiError):
    Category = "syntax"
    Line: int
    Column: int

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(message)
        self.Line = line
        self.Column = column

    def __str__(self):
        return f"line {self.Line}, column {self.Column}: {self.Message}"


class ValidationError(PeiError):
    Category = "validation"


class PreconditionError(PeiError):
    Category = "precondition"


class BudgetError(PeiError):
    Category = "budget"

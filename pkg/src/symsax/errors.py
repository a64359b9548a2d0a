"""Exception types raised across the package."""


class SymsaxError(Exception):
    """Base class for all package errors."""


class InvalidParameterError(SymsaxError, ValueError):
    """A configuration value (alphabet size, word length, grid) is out of range."""


class InvalidInputError(SymsaxError, ValueError):
    """Input data violates an operation's precondition."""


class IncompatibleWordsError(InvalidInputError):
    """Two symbolic words cannot be compared.

    The ``field`` attribute names the mismatched property.
    """

    def __init__(self, field, left, right):
        self.field = field
        self.left = left
        self.right = right
        super().__init__(f"words differ in {field}: {left!r} != {right!r}")


class IncompatibleSeriesError(InvalidInputError):
    """Two raw series have different lengths."""


class FormatError(SymsaxError, ValueError):
    """A dataset file is malformed."""

    def __init__(self, message, path=None, line=None, column=None):
        self.path = path
        self.line = line
        self.column = column
        where = []
        if path is not None:
            where.append(str(path))
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class DatasetNotFoundError(SymsaxError, FileNotFoundError):
    """Train/test files for a dataset could not be located."""

    def __init__(self, name, probed):
        self.name = name
        self.probed = list(probed)
        listing = "\n  ".join(str(p) for p in self.probed)
        super().__init__(f"dataset {name!r} not found; probed:\n  {listing}")

"""Exception types shared across tckit."""


class TckitError(Exception):
    """Base class for every domain error raised by tckit."""


class IndexOutOfRange(TckitError, ValueError):
    pass


class DegreeMismatch(TckitError, ValueError):
    pass


class RangeError(TckitError, ValueError):
    pass


class InvalidMovie(TckitError, ValueError):
    """Raised when an invariant is requested on a movie that fails validation."""

    def __init__(self, report):
        self.report = report
        reasons = "; ".join(f"{loc}: {why}" for loc, why in report.failures[:3])
        super().__init__(f"invalid movie ({reasons})")


class OddEulerCharacteristic(TckitError, ValueError):
    pass


class NonCommutingBoundary(TckitError, ValueError):
    pass


class ParseError(TckitError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)

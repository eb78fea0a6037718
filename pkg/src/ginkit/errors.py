"""Exception hierarchy shared by every computation in the package."""


class GinkitError(Exception):
    """Base class for computation errors (CLI exit code 1)."""

    code = "error"

    def to_dict(self):
        return {"error": self.code, "message": str(self)}


class UnitIdeal(GinkitError):
    code = "unit_ideal"


class NotHomogeneous(GinkitError):
    code = "not_homogeneous"


class CharNotZero(GinkitError):
    code = "char_not_zero"


class NotBorelFixed(GinkitError):
    code = "not_borel_fixed"


class NotFilterRegular(GinkitError):
    code = "not_filter_regular"

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"x{index} is not filter-regular (colon degree is unbounded)")

    def to_dict(self):
        d = super().to_dict()
        d["index"] = self.index
        return d


class GinUnstable(GinkitError):
    code = "gin_unstable"


class BorelCheckFailed(GinkitError):
    code = "borel_check_failed"


class NotAReduction(GinkitError):
    code = "not_a_reduction"


class NoPower(GinkitError):
    code = "no_power"


class RouteDisagreement(GinkitError):
    code = "route_disagreement"


class ParseError(ValueError):
    """Syntax or declaration error in an ideal file (CLI exit code 2)."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)

    def to_dict(self):
        return {"error": "parse_error", "message": str(self), "line": self.line, "column": self.column}

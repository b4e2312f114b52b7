"""Exception types. Every error carries a stable ``code`` used by the CLI."""


class AddvolError(Exception):
    code = "ERROR"
    exit_code = 3

    def __init__(self, message: str = "", **info):
        super().__init__(message or self.code)
        self.info = info


class InvalidInput(AddvolError):
    exit_code = 2


class ParseError(InvalidInput):
    code = "PARSE_ERROR"

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message, position=position)
        self.position = position


class DuplicateElement(InvalidInput):
    code = "DUPLICATE_ELEMENT"


class EmptySet(InvalidInput):
    code = "EMPTY_SET"


class ParamsOutOfRange(InvalidInput):
    code = "PARAMS_OUT_OF_RANGE"


class TOutOfRange(InvalidInput):
    code = "T_OUT_OF_RANGE"


class MapNotTotal(AddvolError):
    code = "MAP_NOT_TOTAL"


class MapTargetOutside(AddvolError):
    code = "MAP_TARGET_OUTSIDE"


class Collinear(AddvolError):
    code = "COLLINEAR"


class DimNotTwo(AddvolError):
    code = "DIM_NOT_TWO"


class NotInjective(AddvolError):
    code = "NOT_INJECTIVE"


class NoValidVector(AddvolError):
    code = "NO_VALID_VECTOR"


class ConstructionFailed(AddvolError):
    code = "CONSTRUCTION_FAILED"


class NotFound(AddvolError):
    code = "NOT_FOUND"


class BudgetExceeded(AddvolError):
    code = "BUDGET_EXCEEDED"
    exit_code = 4

"""Exception hierarchy shared by every layer of the package.

Each exception carries a stable ``code`` string so reports and the command
line can name the failure class without parsing messages.
"""


class CoincidenceError(Exception):
    code = "ERROR"


class ShapeMismatch(CoincidenceError, ValueError):
    code = "SHAPE_MISMATCH"


class InfiniteSetError(CoincidenceError, ValueError):
    code = "INFINITE_SET"


class CatalogError(CoincidenceError):
    code = "CATALOG_ERROR"


class ParseError(CatalogError):
    code = "PARSE_ERROR"


class SchemaViolation(CatalogError):
    code = "SCHEMA_VIOLATION"


class IllDefinedHom(CatalogError, ValueError):
    code = "ILL_DEFINED_HOM"


class InconsistentStability(CatalogError):
    code = "INCONSISTENT_STABILITY"


class MissingData(CoincidenceError, LookupError):
    code = "MISSING_DATA"


class InvalidQuery(CoincidenceError, ValueError):
    code = "INVALID_QUERY"


class HypothesisViolated(CoincidenceError, ValueError):
    code = "HYPOTHESIS_VIOLATED"


class WeckenUnknown(CoincidenceError):
    code = "WECKEN_UNKNOWN"

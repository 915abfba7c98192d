"""Exception types shared across the package."""


class SyllabError(Exception):
    """Base class for all package-specific errors."""


class ConfigurationError(SyllabError):
    """Unusable configuration: unknown phone set, language, or option combination."""


class DictParseError(SyllabError):
    """A dictionary or corpus file line could not be parsed (strict mode)."""

    def __init__(self, path, line_no: int, message: str):
        self.path = path
        self.line_no = line_no
        super().__init__(f"{path}:{line_no}: {message}")


class UnknownSymbolError(SyllabError):
    """A phone or letter has no entry in the active sonority hierarchy."""

    def __init__(self, symbol: str, symbol_set: str):
        self.symbol = symbol
        self.symbol_set = symbol_set
        super().__init__(f"symbol {symbol!r} is not classified in the {symbol_set} hierarchy")


class UnsupportedNumeralError(SyllabError):
    """Numeral outside the supported range/shape for the requested language."""


class UndefinedMetricError(SyllabError):
    """A metric was requested over an empty record set."""

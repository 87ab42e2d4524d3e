"""Exception hierarchy. Everything raised on bad input derives from ValueError."""


class ImpactPlotError(ValueError):
    pass


class ParseError(ImpactPlotError):
    """Malformed CSV/JSON syntax. ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class SchemaError(ImpactPlotError):
    """A syntactically valid record that breaks a field rule."""

    def __init__(self, message, record_id=None, field=None):
        self.record_id = record_id
        self.field = field
        prefix = []
        if record_id is not None:
            prefix.append(f"record {record_id!r}")
        if field is not None:
            prefix.append(f"field {field!r}")
        if prefix:
            message = f"{', '.join(prefix)}: {message}"
        super().__init__(message)


class PercentileError(ImpactPlotError):
    """Percentile computation failed, e.g. a missing reference cell."""

    def __init__(self, message, record_id=None):
        self.record_id = record_id
        if record_id is not None:
            message = f"record {record_id!r}: {message}"
        super().__init__(message)

class MavQganError(Exception):
    """Base class for errors raised by mav_qgan."""


class DomainError(MavQganError, ValueError):
    pass


class DegenerateInputError(DomainError):
    pass


class CapacityError(DomainError):
    pass


class UnsupportedMethodError(DomainError):
    pass


class ConfigurationError(MavQganError, ValueError):
    pass


class TraceParseError(MavQganError, ValueError):
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f'line {lineno}: {message}'
        super().__init__(message)
        self.lineno = lineno


class EmptyTraceError(TraceParseError):
    pass


class ReportError(MavQganError, OSError):
    pass


class UsageError(MavQganError, ValueError):
    pass

"""Exception types raised by the analyzer."""


class AnalyzerError(Exception):
    """Base class for every error raised by good_set_analyzer."""


class PreconditionError(AnalyzerError, ValueError):
    """An operation was called on input that violates its documented precondition."""


class InstanceParseError(AnalyzerError, ValueError):
    """An instance or configuration file could not be parsed."""


class CertificateError(AnalyzerError, RuntimeError):
    """A produced certificate failed its own re-verification."""

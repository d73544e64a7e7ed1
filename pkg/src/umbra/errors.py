"""Exception hierarchy shared by every module."""


class UmbraError(Exception):
    """Base class for all library errors."""


class DomainError(UmbraError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ResourceError(UmbraError):
    """A configured size cap (degree, truncation, enumeration size) was exceeded."""

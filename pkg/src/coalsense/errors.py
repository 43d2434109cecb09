"""Exceptions shared across modules."""


class CapacityError(Exception):
    """A combinatorial operation was requested beyond its size guard."""


class ConfigError(Exception):
    """A configuration file or override is malformed."""

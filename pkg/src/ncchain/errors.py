"""Exception types shared across the package."""


class NcChainError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(NcChainError):
    """Invalid or inconsistent model/CLI configuration."""


class DomainError(NcChainError):
    """Parameters outside the mathematical domain of a formula."""


class UnsupportedDegreeError(NcChainError):
    """Auxiliary-generator degree above the supported averaging cap."""


class ConsistencyError(NcChainError):
    """Two independently computed representations of the same object disagree.

    This always signals an implementation bug, never bad user input.
    """

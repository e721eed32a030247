"""Exception classes shared across the toolkit.

Each class maps to one CLI exit code (see cli.EXIT_CODES), so solver and
IO failures stay distinguishable in batch runs.
"""


class CementSimError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(CementSimError):
    """Invalid or inconsistent run configuration."""

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class VolumeFormatError(CementSimError):
    """Raw volume file does not match its declared metadata."""


class SurfaceError(CementSimError):
    """Triangle surface violates manifoldness or format requirements."""


class TopologyError(CementSimError):
    """Voxel domain lacks required connectivity (e.g. inlet to outlet)."""


class SolverError(CementSimError):
    """Iterative or nonlinear solver failed to converge."""

    def __init__(self, message, residual=None, iterations=None):
        self.residual = residual
        self.iterations = iterations
        if residual is not None:
            message = f"{message} (residual {residual:.3e} after {iterations} iterations)"
        super().__init__(message)


class MappingError(CementSimError):
    """Transfer mapping could not be built for some target point."""

"""Desk-scale simulation of acrylic bone cement injection and curing.

The package covers the full chain: voxel microstructure ingestion and
segmentation, two-phase injection of the curing cement dough into the pore
network, transfer of the injected state onto a voxel finite-element mesh,
and thermo-chemo-mechanically coupled curing with residual-stress output.
"""

__version__ = "0.1.0"

from . import kinetics, rheology

__all__ = ["kinetics", "rheology", "__version__"]

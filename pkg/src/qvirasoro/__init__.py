"""Exact verification of level-1 vertex operator identities for quantum
affine sl2 and of the deformed Virasoro currents built from them."""

from .params import Params

__version__ = "0.1.0"

__all__ = ["Params", "__version__"]

"""Exact symmetric-function kernel for operators induced by Adams powers of the
tautological bundle on Hilbert schemes of points, and the induced product."""

from .partitions import Partition, partitions_of
from .symfunc import SymFunc

__all__ = ["Partition", "SymFunc", "partitions_of"]
__version__ = "0.1.0"

"""Exact computation of the geometric diagonal of special linear cobordism.

Everything is computed degree by degree in a finite truncation of the
complex-cobordism coefficient ring, modelled through its Hurewicz embedding
into Z[b1, b2, ...].  Degrees are half the topological degrees throughout
(the class of a dimension-2n manifold sits in degree n).
"""

from .abelian import FGAbGroup, cokernel
from .partitions import partition_count, partitions_of

__version__ = "0.1.0"

__all__ = [
    "FGAbGroup",
    "cokernel",
    "partition_count",
    "partitions_of",
]

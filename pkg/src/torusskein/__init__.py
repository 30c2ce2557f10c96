"""Exact computations in the HOMFLY-PT skein of the solid torus.

The skein is realized as the ring of symmetric functions over Q(a, s);
on top of it sit truncated tensor-power series, the relative skein of the
annulus with two boundary points, recursion-relation solvers, and the BPS
partition functions with their verification suites.
"""

from .scalars import Scalar, parse_scalar, scalar_to_text

__all__ = ["Scalar", "parse_scalar", "scalar_to_text"]
__version__ = "0.1.0"

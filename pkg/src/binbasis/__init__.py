"""Conversions between polynomial bases over binary extension fields.

Subpackages are organized by layer: `field` provides exact GF(2^m)
arithmetic, `basisgen` builds subspace bases, `redtree` represents and
validates reduction trees, `precomp` derives the per-vertex tables the
conversions consume, `transforms` holds the instrumented conversion
algorithms, `oracle` is the brute-force reference implementation, and
`cli` is the command-line driver.
"""

from binbasis.field import Field, get_field

__all__ = ["Field", "get_field"]

__version__ = "0.1.0"

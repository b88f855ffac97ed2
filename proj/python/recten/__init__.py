"""S-type singular value inclusion sets and largest-singular-value bounds for
real rectangular tensors."""

from ._recten import *  # noqa: F401,F403
from ._recten import RectenError, RectangularTensor

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

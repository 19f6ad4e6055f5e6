"""Cut-volume and section bounds for convex bodies.

Thin re-export of the compiled ``_core`` extension.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

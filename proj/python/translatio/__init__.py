"""Exact triangle functions for translation functors.

Thin re-export of the compiled extension; all rationals and rational
functions cross the boundary as strings.
"""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __version__  # noqa: F401
except ImportError:  # build-tree layout: extension next to the package
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401

"""Checker for confluence and non-confluence certificates of first-order
term rewrite systems.

The native module carries the implementation; this package only re-exports
it so both the installed layout (module inside the package) and the build
tree layout (module next to the package) work.
"""

try:
    from ._confcheck import *  # noqa: F401,F403
    from ._confcheck import __version__  # noqa: F401
except ImportError:  # build-tree layout
    from _confcheck import *  # noqa: F401,F403
    from _confcheck import __version__  # noqa: F401

"""Simple dependency trees, window-defined tree languages, recursive
linearisations and their grammar constructions.

The compiled extension carries the whole API; see `help(dtl._core)`.
"""

from ._core import *  # noqa: F401,F403
from ._core import fixtures  # noqa: F401

"""Local distinguishability of generalized Bell state sets."""

from ._gbs_locc import *  # noqa: F401,F403
from ._gbs_locc import __doc__  # noqa: F401

__version__ = "0.1.0"

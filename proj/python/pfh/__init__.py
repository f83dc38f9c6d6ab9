from ._pfh import *  # noqa: F401,F403
from ._pfh import __doc__  # noqa: F401

"""Semi-copulas, generalized Kendall distributions, and bivariate ageing."""

from ._bivage import *  # noqa: F401,F403
from ._bivage import __version__  # noqa: F401

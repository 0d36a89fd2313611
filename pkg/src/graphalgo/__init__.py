"""Graph algorithms, planarity, flows and spectral graph theory."""

from ._accel import backend, set_backend, set_threads, use_backend
from .connectivity import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from .euler import *  # noqa: F401,F403
from .flow import *  # noqa: F401,F403
from .graph import *  # noqa: F401,F403
from .io import *  # noqa: F401,F403
from .metrics import *  # noqa: F401,F403
from .planarity import *  # noqa: F401,F403
from .shortest_path import *  # noqa: F401,F403
from .spanning import *  # noqa: F401,F403
from .spectral import *  # noqa: F401,F403
from .traversal import *  # noqa: F401,F403

__version__ = "0.1.0"

from .alphabet import *  # noqa: F401,F403
from .substitution import *  # noqa: F401,F403
from .tau import *  # noqa: F401,F403

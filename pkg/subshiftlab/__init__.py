from .closedform import *  # noqa: F401,F403
from .config import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from .export import *  # noqa: F401,F403
from .factors import *  # noqa: F401,F403
from .paths import *  # noqa: F401,F403
from .presentation import *  # noqa: F401,F403
from .rauzy import *  # noqa: F401,F403
from .substitution import *  # noqa: F401,F403
from .utils import *  # noqa: F401,F403

from .complexity import *  # noqa: F401,F403
from .special import *  # noqa: F401,F403
from .verification import *  # noqa: F401,F403

from .factorset import *  # noqa: F401,F403
from .index import FactorIndex  # noqa: F401
from .repetitivity import *  # noqa: F401,F403

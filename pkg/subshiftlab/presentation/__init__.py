from .lysenok import *  # noqa: F401,F403

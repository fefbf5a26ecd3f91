import os

DEFAULT_BUDGET = 10**8
MAX_COVER_VERTICES = 24


def budget(override=None):
    """Enumeration budget: explicit override, else $SPT_BUDGET, else the default."""
    if override is not None:
        return int(override)
    env = os.environ.get("SPT_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET

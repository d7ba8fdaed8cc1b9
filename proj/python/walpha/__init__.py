"""Exact rational arithmetic for the l1-predual hyperplanes of c."""

try:
    from ._walpha import *  # noqa: F401,F403
    from ._walpha import __doc__  # noqa: F401
except ImportError:  # development layout: extension on PYTHONPATH
    from _walpha import *  # noqa: F401,F403
    from _walpha import __doc__  # noqa: F401

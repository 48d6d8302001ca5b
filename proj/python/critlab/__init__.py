"""Critical weights, diagonal counterexample dynamics, and scaling checks."""

try:
    from ._critlab import *  # noqa: F401,F403  (installed layout)
    from ._critlab import __version__  # noqa: F401
except ImportError:  # in-tree build: extension sits on sys.path
    from _critlab import *  # noqa: F401,F403
    from _critlab import __version__  # noqa: F401

"""Generalized fractional integral evaluation and Gruss-type inequality checks.

The heavy lifting lives in the _fracgruss extension; this package re-exports
its surface.
"""

try:
    from ._fracgruss import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:  # pragma: no cover - in-tree builds put the module on sys.path
    from _fracgruss import *  # noqa: F401,F403

__version__ = "0.1.0"

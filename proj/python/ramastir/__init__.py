"""Exact arithmetic for the Stirling-series coefficient family.

Rational results are returned as fractions.Fraction; values in Q(sqrt 2) come
back as an (a, b) pair of Fractions meaning a + b*sqrt(2).
"""

try:
    from ._ramastir import *  # noqa: F401,F403
    from ._ramastir import __version__  # noqa: F401
except ImportError:  # extension built outside the package, e.g. a CMake tree
    from _ramastir import *  # noqa: F401,F403
    from _ramastir import __version__  # noqa: F401

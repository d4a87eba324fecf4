"""chromalg: exact chromatic polynomials, factorization, Galois groups, and
chromatic-root realization search."""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"

"""Shadow verification for mapping class groups of S(n)."""

from ._core import *  # noqa: F401,F403
from ._core import ParseError, DomainError, UnsupportedError  # noqa: F401

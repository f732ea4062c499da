"""Span-level mistake list alignment and scoring."""

from ._accuscore import *  # noqa: F401,F403
from ._accuscore import __doc__  # noqa: F401

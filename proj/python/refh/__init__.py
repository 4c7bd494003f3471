"""Departmental h-index, research-assessment scores, correlations and rankings."""

from ._refh import *  # noqa: F401,F403
from ._refh import __doc__  # noqa: F401

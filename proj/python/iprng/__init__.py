"""Period analysis of inversive generators x -> a*x^-1 + b over prime fields."""

from ._iprng import *  # noqa: F401,F403

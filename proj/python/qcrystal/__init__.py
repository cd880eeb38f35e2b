"""Crystal combinatorics for words and shifted decomposition tableaux.

Thin re-export of the compiled module; words and tableaux travel as text
("2321", "66325/421/3"), shapes as comma-separated parts ("3,1").
"""

from ._qcrystal import *  # noqa: F401,F403
from ._qcrystal import __doc__  # noqa: F401

__version__ = "0.1.0"

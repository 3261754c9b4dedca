"""Exact representations of the generalized Weyl-Heisenberg algebra A(r),
the commuting Grassmann calculus built on it, and Barut-Girardello coherent
states for su(r+1).

Every value is exact: matrix entries and coefficients cross the boundary as
radical text such as "2*sqrt(2)" or "1/2"; rational strings can be handed to
fractions.Fraction unchanged.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__doc__ = _core_doc if _core_doc else __doc__

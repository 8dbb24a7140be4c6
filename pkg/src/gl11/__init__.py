"""Exact computations in the representation category of U_q(gl(1|1)).

Submodules:

* :mod:`gl11.laurent`: Laurent polynomials and quantum integers
* :mod:`gl11.superlin`: super vector spaces, morphisms, Koszul tensor, supertrace
* :mod:`gl11.rep`: wedge powers, merge/split, cups/caps, generator actions
* :mod:`gl11.ladder`: ladders, divided powers, braiding elements
* :mod:`gl11.morse`: MOY diagrams in Morse position
* :mod:`gl11.relations`: relation checkers
* :mod:`gl11.alexander`: Alexander polynomial of braid closures
"""

from .laurent import LaurentPoly, quantum_binomial, quantum_integer
from .superlin import GradedBasis, Morphism, NotScalar

__all__ = [
    "LaurentPoly",
    "quantum_integer",
    "quantum_binomial",
    "GradedBasis",
    "Morphism",
    "NotScalar",
]

__version__ = "0.1.0"

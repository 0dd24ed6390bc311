"""Finite monoid acts: decomposition, homomorphisms and injectivity checks."""

from .act import FiniteAct, Subact, ActHom
from .monoid import FiniteMonoid, RightCongruence, RightIdeal

__version__ = "0.1.0"

__all__ = ["FiniteAct", "FiniteMonoid", "Subact", "ActHom", "RightCongruence", "RightIdeal", "__version__"]

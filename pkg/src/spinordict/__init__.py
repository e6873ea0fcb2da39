"""Exact spinor models: polyform (Fock) Clifford models, composition algebras and the dictionaries between them."""

from .clifford import MODEL_NAMES, build_model, verify_clifford
from .composition import make_algebra
from .dictionary import DICTIONARIES, get_dictionary
from .exact_linalg import GaussRational, Matrix
from .polyforms import Polyform

__all__ = [
    "MODEL_NAMES",
    "DICTIONARIES",
    "GaussRational",
    "Matrix",
    "Polyform",
    "build_model",
    "get_dictionary",
    "make_algebra",
    "verify_clifford",
]
__version__ = "0.1.0"

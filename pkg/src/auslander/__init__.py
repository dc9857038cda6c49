"""Exact recollements of functor categories and higher Auslander-Reiten checks on small algebras."""
from .linalg import Field, FieldError, Mat, QQ, GF
from .algebra import Algebra, Arrow, QuiverPresentation, from_quiver, truncated_polynomial_algebra
from .modules import Module
from .approx import AddSubcategory, make_subcategory
from .knit import enumerate_indecomposables
from .recollement import Recollement, verify_recollement
from .abridger import ABContext, ab_sequence, compare_with_right_defining
from .higher_ar import HigherContext, tau_n, tau_n_minus, sigma_n, sigma_n_minus
from .instance import parse_instance

__version__ = "0.1.0"

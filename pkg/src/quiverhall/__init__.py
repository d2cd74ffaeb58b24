"""Hall polynomials, bar involution and canonical bases for finite-type quivers with automorphism."""
from .quiver import QuiverWithAutomorphism, catalog, catalog_labels, fold, validate_admissible
from .reps import ModuleClass, enumerate_modules, parse_module, type_data
from .hall import HallPolynomial, filtration_polynomial, hall_number, hall_polynomial
from .algebra import AlgebraElement, degeneration_leq, multiply, pbw_class, structure_constants
from .canonical import TransitionMatrix, bar_matrix_gs, bar_matrix_oracle, canonical_basis

__version__ = "0.1.0"

"""skoszul: exact computer algebra for skew polynomial rings S[T; phi].

The package constructs the twisted Koszul complex attached to a
structural endomorphism x_i -> s_i x_i, verifies its defining identities
symbolically, lifts cycles to boundaries constructively, and computes
the graded pieces of the Frobenius algebra of a monomial quotient in
prime characteristic.  All arithmetic is exact (F_p or Q).
"""

from .endo import Endo, parse_endo
from .errors import (ArityMismatch, CharacteristicMismatch, DegenerateIdeal,
                     EmptySequence, EndoMismatch, FieldUnsupported,
                     InvalidExponent, InvariantViolation, LevelOutOfRange,
                     NoSolution, NonHomogeneous, NonMonomialSequence,
                     NotACycle, NotStructural, ParseError, ShapeMismatch,
                     SkoszulError, UndefinedColon)
from .fedder import FrobeniusPiece, fedder_piece, generation_check
from .fields import GF2, GF3, QQ, FieldSpec, parse_field
from .koszul import koszul_matrix, poly_matrix_mul, solve_right, subsets, twist_diagonal
from .monomial import MonomialIdeal
from .phikoszul import (CycleWitness, PhiKoszulComplex, build_phi_koszul,
                        random_poly, random_row, random_skew)
from .poly import Poly, monomials_of_degree, monomials_up_to_degree, parse_poly
from .reporting import CheckResult, Report
from .skew import SkewMatrix, SkewPoly, opposite_product

__version__ = "0.1.0"

__all__ = [
    "Endo", "parse_endo",
    "FieldSpec", "parse_field", "QQ", "GF2", "GF3",
    "Poly", "parse_poly", "monomials_of_degree", "monomials_up_to_degree",
    "MonomialIdeal",
    "SkewPoly", "SkewMatrix", "opposite_product",
    "koszul_matrix", "twist_diagonal", "subsets", "solve_right", "poly_matrix_mul",
    "PhiKoszulComplex", "build_phi_koszul", "CycleWitness",
    "random_poly", "random_skew", "random_row",
    "FrobeniusPiece", "fedder_piece", "generation_check",
    "CheckResult", "Report",
    "SkoszulError", "ArityMismatch", "UndefinedColon", "InvalidExponent",
    "NotStructural", "CharacteristicMismatch", "EndoMismatch", "ShapeMismatch",
    "LevelOutOfRange", "NoSolution", "NonHomogeneous", "NotACycle",
    "InvariantViolation", "NonMonomialSequence", "FieldUnsupported",
    "DegenerateIdeal", "EmptySequence", "ParseError",
]

"""Exact free bases for derivation modules of multi-Coxeter arrangements.

The pipeline: realize a finite Coxeter group exactly, compute basic
invariants, apply the inverse of the connection along the primitive
direction k times to the Euler field, differentiate along a base basis,
and certify the result by contact orders, the degree count, and the
determinant factorization.
"""

from .basis import BasisRequest, BasisResult, base_basis, build_basis
from .certify import (Certificate, contact_order, graded_dimension,
                      graded_member_basis, hodge_equality_check, nabla_partial_P,
                      ziegler_certify)
from .connection import (nabla_D, nabla_D_inverse, primitive_numerator,
                         universal_field)
from .coxeter import (Arrangement, CoxeterDatum, Multiplicity, ReflectionGroup,
                      act, act_derivation, build_group, make_datum, parse_type,
                      reynolds)
from .derivations import Derivation, euler_field, nabla
from .errors import (BudgetExceeded, CertificateFailed, CoxBasisError,
                     JacobianDegenerate, NoSolution, NonUniqueSolution, NotABasis,
                     NotDivisible, NotPolynomial, OrderBoundExceeded,
                     UnsupportedType)
from .invariants import InvariantSystem, compute_invariants, gradient_basis, partial_P_field
from .poly import Poly, linear_form_order
from .scalars import Quad, format_scalar, parse_scalar

__version__ = "0.1.0"

__all__ = [
    "Arrangement", "BasisRequest", "BasisResult", "BudgetExceeded", "Certificate",
    "CertificateFailed", "CoxBasisError", "CoxeterDatum", "Derivation",
    "InvariantSystem", "JacobianDegenerate", "Multiplicity", "NoSolution",
    "NonUniqueSolution", "NotABasis", "NotDivisible", "NotPolynomial",
    "OrderBoundExceeded", "Poly", "Quad", "ReflectionGroup", "UnsupportedType",
    "act", "act_derivation", "base_basis", "build_basis", "build_group",
    "compute_invariants", "contact_order", "euler_field", "format_scalar",
    "graded_dimension", "graded_member_basis", "gradient_basis",
    "hodge_equality_check", "linear_form_order", "make_datum", "nabla",
    "nabla_D", "nabla_D_inverse", "nabla_partial_P", "parse_scalar", "parse_type",
    "partial_P_field", "primitive_numerator", "reynolds", "universal_field",
    "ziegler_certify",
]

"""Exact q-deformed calculus on a quadratic algebra and its operator realization.

The package provides, over exact Laurent-polynomial scalars:

  * ``ring``       q-integers, q-factorials, exact division, cyclotomic
                   root-of-unity tests, and the fraction field of Q[q, q^-1]
  * ``aq``         the quadratic algebra on w1..w4 with PBW normal ordering
  * ``qcalc``      q-difference operators z^a K^d [d]^g in canonical form
  * ``transform``  the divided-powers correspondence and right-dual operators
  * ``uq``         the enveloping-algebra fragment: quantum Serre ideal
                   oracles, straightening, Hopf data, and the star action
  * ``verma``      highest-weight vectors, raising actions, singular scans
  * ``dirac``      the 2x2 operator matrices factoring the wave operator
  * ``suites``     named verification suites with deterministic reports
  * ``cli``        the ``quadalg`` command-line front end
"""

from .aq import AqElement, center_element, commutator, multiply, normal_order
from .qcalc import Poly4, Poly4Vec2, QOperator, compose, mul_z, qdiff, scaling
from .ring import (
    ExactDivisionError,
    LaurentPoly,
    RatQ,
    divide_exact,
    parse_laurent,
    q_factorial,
    q_int,
    vanishes_at_root_of_unity,
)
from .transform import (
    DualFunctional,
    box_operator,
    psi,
    psi_inv,
    right_dual_bruteforce,
    right_dual_closed,
    verify_dual,
)
from .uq import UqElement, graded_dimension, serre_reduce, star_act, straighten, w_embed
from .verma import (
    SingularReport,
    VermaVector,
    Weight,
    act,
    singular_candidate_plus,
    singular_test,
    target_weight,
)
from .dirac import (
    OpMatrix2,
    VectorDualFunctional,
    dirac_minus,
    dirac_plus,
    factorization_check,
    intertwine_bruteforce,
    intertwine_check,
)

__version__ = "0.1.0"

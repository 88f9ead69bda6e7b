"""Symbolic powers of curve primes and point configurations, computed exactly."""

from .arith import QQ, DEFAULT_PRIME, Field, PolyRing, Polynomial, TermOrder, xyz_ring
from .groebner import Budget, Ideal, ResourceLimit, groebner_basis, intersect, quotient, saturate
from .moncurve import MonomialCurve, curve_kernel_oracle, herzog_presentation
from .symbolic import cube_closed_form, schenzel_delta1, symbolic_power

__version__ = "0.1.0"

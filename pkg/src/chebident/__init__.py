"""chebident: exact generating-function arithmetic and identity certification
for the Chebyshev polynomial families (four kinds) and Legendre polynomials.

The package computes, in exact rational arithmetic:

  * the five base families and their convolution (higher-order) powers;
  * truncated formal power series in t with Laurent-polynomial
    coefficients, as an independent oracle for every generating function;
  * the integer coefficient triangle a_i(N) of the derivative expansion
    2^N N! F^(N+1) = sum_i a_i(N) (x-t)^(i-2N) F^(i) for
    F = 1/(1 - 2tx + t^2);
  * symbolic certification (exact zero residual, no tolerances) of a
    catalog of convolution identities linking all of the above.
"""

from chebident._backend import kernel_backend
from chebident.exact import BigRational, binomial, double_factorial, falling_factorial
from chebident.families import (
    Family,
    FamilySpec,
    explicit_T,
    family_poly,
    family_polys,
    ode_residual,
)
from chebident.laurent import LaurentPoly
from chebident.report import ReportEntry, VerificationReport
from chebident.series import (
    TruncatedSeries,
    gf_expand,
    x_minus_t_inverse_pow,
    x_minus_t_pow,
)
from chebident.triangle import (
    Triangle,
    a1_closed,
    a_closed,
    triangle_recurrence,
    verify_defining_relation,
)
from chebident.verify import (
    IdentityId,
    compositions3,
    run_suite,
    sample_points,
    verify_U_from_Legendre,
    verify_cor3,
    verify_cor4_reconstructed,
    verify_intro_U_from_T,
    verify_thm2,
    verify_thm5,
    verify_thm6,
    verify_thm7,
)

__version__ = "0.1.0"

__all__ = [
    "BigRational",
    "Family",
    "FamilySpec",
    "IdentityId",
    "LaurentPoly",
    "ReportEntry",
    "Triangle",
    "TruncatedSeries",
    "VerificationReport",
    "a1_closed",
    "a_closed",
    "binomial",
    "compositions3",
    "double_factorial",
    "explicit_T",
    "falling_factorial",
    "family_poly",
    "family_polys",
    "gf_expand",
    "kernel_backend",
    "ode_residual",
    "run_suite",
    "sample_points",
    "triangle_recurrence",
    "verify_U_from_Legendre",
    "verify_cor3",
    "verify_cor4_reconstructed",
    "verify_defining_relation",
    "verify_intro_U_from_T",
    "verify_thm2",
    "verify_thm5",
    "verify_thm6",
    "verify_thm7",
    "x_minus_t_inverse_pow",
    "x_minus_t_pow",
]

#pragma once

#include "singwalk/matrix.hpp"
#include "singwalk/rational.hpp"
#include "singwalk/series.hpp"

#include <cstddef>

namespace singwalk {

/// Chebyshev polynomial of the second kind, U_n(z), by the three-term
/// recurrence U_{n+1} = 2z U_n - U_{n-1}, U_0 = 1, U_1 = 2z.
Rational chebyshev_u(unsigned n, const Rational& z);
double chebyshev_u(unsigned n, double z);

/// The tridiagonal matrix with 1 on the diagonal and -t beside it; its
/// inverse F_n collects the segment-walk generating functions.
Matrix<Rational> tridiagonal_kernel(unsigned n, const Rational& t);

/// F_n by exact Gaussian elimination. Throws std::domain_error at the
/// poles t = 1/(2 cos(k pi/(n+1))).
Matrix<Rational> f_matrix_by_inversion(unsigned n, const Rational& t);

/// F_n from the Chebyshev closed form
///   f_{i,j} = (1/t) U_{n-j}(1/2t) U_{i-1}(1/2t) / U_n(1/2t),  i <= j,
/// symmetric fill for i > j (1-based indices). Requires t != 0 and
/// U_n(1/2t) != 0; the inversion path still covers t = 0.
Matrix<Rational> f_matrix_closed_form(unsigned n, const Rational& t);

/// F_n at t = 1/2: entry (i,j) = 2 i (n-j+1) / (n+1) for i <= j, so every
/// entry lies in (1/(n+1)) * N.
Matrix<Rational> f_matrix_half(unsigned n);

/// det(F_n^{-1}) = (-t)^n U_n(-1/(2t)) (as a polynomial identity in t;
/// here evaluated at rational t != 0).
Rational f_inverse_determinant(unsigned n, const Rational& t);

/// Walks confined to the antidiagonal segment S_k = {(k,0),...,(0,k)}:
/// number of n-step paths from P_i = (k-i, i) to P_j, as a truncated
/// t-series computed by one-dimensional DP. Coefficientwise this is the
/// Neumann expansion of the (i+1, j+1) entry of F_{k+1}.
TruncSeries<Rational> w_series(unsigned k, unsigned i, unsigned j, std::size_t order);

/// The matrix of w_series truncations for a whole segment.
Matrix<TruncSeries<Rational>> w_series_matrix(unsigned k, std::size_t order);

struct PoleData {
    double pole;      ///< 1/(2 cos(pi/(k+2))), always > 1/2
    double residue;   ///< c with W_k(P_i,P_j,t) = c/(pole - t) + O(1); positive
};

/// First pole and residue of W_k(P_i, P_j, t). The residue uses 0-based
/// segment indices i <= j (swapped if needed):
///   c = sin^2(th) U_{k-j}(cos th) U_i(cos th) / ((k+2) cos th), th = pi/(k+2).
PoleData pole_and_residue(unsigned k, unsigned i, unsigned j);

}  // namespace singwalk

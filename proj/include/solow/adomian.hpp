#pragma once

#include <span>
#include <vector>

namespace solow {

/// Coefficients c_0..c_N of a series in the monomials t^{n alpha}.
using CoeffVec = std::vector<double>;

/// Adomian polynomials of N[k] = k^mu along the ansatz k = sum c_n t^{n alpha}.
///
/// Every term of the ansatz is a single monomial, so the n-th Adomian
/// polynomial is a_n t^{n alpha} where a_n is the n-th power-series coefficient
/// of (sum c_i x^i)^mu. The a_n follow Miller's recurrence
///
///   a_0 = c_0^mu,  a_n = 1/(n c_0) sum_{j=1..n} (j mu - (n - j)) c_j a_{n-j}.
///
/// mu may be any finite real (model code restricts it to (0, 1)).
/// Throws DomainError if c is empty, c_0 <= 0 or an entry is non-finite.
CoeffVec adomian_power_coeffs(double mu, std::span<const double> c);

/// Extends a (holding a_0..a_{m-1}) by a_m, given c_0..c_m. Used by the series
/// builder, which learns c_m only after a_{m-1} is known.
double next_adomian_coeff(double mu, std::span<const double> c, std::span<const double> a);

struct AdomianOracleEstimate {
    double value;
    /// False for n > 6, where the finite-difference stencil loses accuracy.
    bool accurate;
};

/// Brute-force A_n = (1/n!) d^n/dx^n (sum c_i x^i)^mu at x = 0.
///
/// Central differences with h = 1e-2, h/2, h/4 and two Richardson levels,
/// evaluated in 50-digit floating point so round-off stays far below the
/// O(h^6) truncation error. Independent of the recurrence above.
AdomianOracleEstimate adomian_bruteforce_oracle(double mu, std::span<const double> c, int n);

}  // namespace solow

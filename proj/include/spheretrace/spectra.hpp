#pragma once

// Multipliers of the three kernel operators on harmonic subspaces and the
// Fourier-side constants that factor them.
//
//   symplectic  (T f)(eta) = int f(w) |[w, eta]|^{-mu-n} dsigma(w)   on S^{2n-1}
//   distance    (R f)(eta) = int f(w) |w - eta|^{-mu-m} dsigma(w)    on S^m
//   inner       (Q f)(eta) = int f(w) |<w, eta>|^{-mu-N/2} dsigma(w) on S^{N-1}
//
// dsigma is the unnormalized surface measure.  Every formula goes through
// eval_gamma_ratio, so integer kernels produce structured zeros instead of
// NaN.

#include <optional>

#include "spheretrace/specfun.hpp"

namespace spheretrace::spectra {

/// i^{-k}, exact by quadrant.
Complex inverse_i_power(int k);

/// Multiplier of T on H^{a,b}(C^n) with a + b = k, up to the sign (-1)^b.
/// Zero for odd k.
MeroValue symplectic_multiplier(int n, int k, Complex mu);

/// Multiplier of T on H^{alpha,beta}(C^n): (-1)^beta symplectic_multiplier(n, alpha+beta, mu).
MeroValue bidegree_eigenvalue(int n, int alpha, int beta, Complex mu);

/// Fourier transform constant on homogeneous harmonics:
/// F(p |x|^lambda) = B p |y|^{-lambda-N-2k} for p in H^k(R^N).
MeroValue fourier_homogeneous_constant(int N, Complex lambda, int k);

/// Normalizing constant relating Q (or T) to the restricted Fourier
/// transform, from its gamma-ratio form.
MeroValue inner_fourier_constant(int N, Complex mu);

/// The same constant from its cosine form (2 pi)^{mu+N/2} / (Gamma(mu+N/2) cos(pi/2 (mu+N/2))).
/// Plain complex evaluation; only meaningful away from zeros and poles.
Complex inner_fourier_constant_cosine_form(int N, Complex mu);

/// Multiplier of R on H^k(R^{m+1}) as printed in the literature formula.
MeroValue distance_multiplier_printed(int m, int k, Complex mu);

/// Multiplier of R on H^k(R^{m+1}) from the Funk-Hecke theorem with the
/// unnormalized measure:
///   2^{-mu} pi^{m/2} G(-mu/2) G(k+(m+mu)/2) / (G((m+mu)/2) G(k+(m-mu)/2)).
MeroValue distance_multiplier_funk_hecke(int m, int k, Complex mu);

/// distance_multiplier_printed / symplectic_multiplier(m, 2k, .), independent of k:
///   G(m+1/2) G(-mu/2) / (2^{mu+2} pi^m G((1-m-mu)/2)).
MeroValue distance_to_symplectic_ratio(int m, Complex mu);

/// distance_multiplier_funk_hecke / symplectic_multiplier(m, 2k, .), independent of k.
MeroValue funk_hecke_to_symplectic_ratio(int m, Complex mu);

/// Multiplier of Q on H^{2l}(R^N):
///   (-1)^l 2 pi^{(N-1)/2} G((2-N-2mu)/4) G(l+(N+2mu)/4) / (G((N+2mu)/4) G(l+(N-2mu)/4)).
MeroValue inner_multiplier(int N, int l, Complex mu);

/// Multiplier of Q on H^k(R^N); zero for odd k.
MeroValue inner_multiplier_degree(int N, int k, Complex mu);

/// Surface area of S^{N-1} in R^N.
double sphere_volume(int N);

/// Degree beyond which the multipliers vanish identically, when the kernel
/// is a polynomial in the pairing: a nonpositive integer -t for the
/// Pochhammer base gives t.
std::optional<int> symplectic_cutoff(int n, Complex mu);
std::optional<int> distance_cutoff(int m, Complex mu);
std::optional<int> inner_cutoff(int N, Complex mu);

}  // namespace spheretrace::spectra

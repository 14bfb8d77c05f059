#ifndef QION_VOIGT_HPP
#define QION_VOIGT_HPP

#include <complex>
#include <vector>

namespace qion {

// Faddeeva function w(z) = exp(-z^2) erfc(-iz) for Im z >= 0.
// Pole-corrected sampling of the defining integral on two interleaved node
// grids (the one farther from Re z is used, so the near-real-axis
// cancellation stays bounded), Laplace continued fraction for |z| >= 7.
std::complex<double> faddeeva_w(std::complex<double> z);

// Voigt line: Gaussian (sigma) convolved with Lorentzian (HWHM gamma),
// scaled so that `amplitude` is the total area. Pure-Gaussian and
// pure-Lorentzian limits are evaluated by their exact formulas.
struct VoigtPeak {
  double center_ev = 0.0;
  double gaussian_sigma_ev = 0.0;
  double lorentzian_gamma_ev = 0.0;
  double amplitude = 0.0;  // integrated area

  void validate() const;
};

double voigt_eval(const VoigtPeak& peak, double e_ev);
std::vector<double> voigt_eval(const VoigtPeak& peak,
                               const std::vector<double>& e_ev);

// d/dcenter, d/dsigma, d/dgamma, d/damplitude at e_ev (for fitters).
struct VoigtGradient {
  double value = 0.0;
  double d_center = 0.0;
  double d_sigma = 0.0;
  double d_gamma = 0.0;
  double d_amplitude = 0.0;
};
VoigtGradient voigt_gradient(const VoigtPeak& peak, double e_ev);

} // namespace qion

#endif

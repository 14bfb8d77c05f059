#include "qion/voigt.hpp"

#include <cmath>

#include "qion/errors.hpp"

namespace qion {

namespace {

using cplxd = std::complex<double>;

constexpr double kSqrtPi = 1.7724538509055160;
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kH = 0.4;      // node spacing of the sampled integral
constexpr int kNodes = 26;      // covers |t| <= 10.2, exp(-t^2) < 1e-45

// Laplace continued fraction, accurate to ~1e-13 for |z| >= 7, Im z >= 0.
cplxd w_continued_fraction(cplxd z) {
  cplxd f(0.0, 0.0);
  for (int k = 12; k >= 1; --k) f = (0.5 * k) / (z - f);
  return cplxd(0.0, 1.0) / (kSqrtPi * (z - f));
}

// Sampled integral representation with the Poisson pole correction.
// Midpoint nodes t = (n+1/2)h:  w = S + 2 exp(-z^2) / (1 + exp(-2 pi i z/h))
// Integer nodes  t = n h:       w = S + 2 exp(-z^2) / (1 - exp(-2 pi i z/h))
cplxd w_sampled(cplxd z, bool midpoint) {
  const cplxd i(0.0, 1.0);
  cplxd s(0.0, 0.0);
  if (midpoint) {
    for (int n = -kNodes; n < kNodes; ++n) {
      const double t = (n + 0.5) * kH;
      s += std::exp(-t * t) / (z - t);
    }
  } else {
    for (int n = -kNodes; n <= kNodes; ++n) {
      const double t = n * kH;
      s += std::exp(-t * t) / (z - t);
    }
  }
  s *= i * kH / M_PI;
  const cplxd e = std::exp(-2.0 * M_PI * i * z / kH);
  const cplxd corr = 2.0 * std::exp(-z * z) / (midpoint ? 1.0 + e : 1.0 - e);
  return s + corr;
}

} // namespace

std::complex<double> faddeeva_w(std::complex<double> z) {
  if (z.imag() < 0.0) {
    // w(-conj z) = conj(w(z)) extends the upper-half-plane evaluation
    const cplxd w = faddeeva_w(cplxd(-z.real(), -z.imag()));
    return 2.0 * std::exp(-z * z) - std::conj(w);
  }
  if (std::norm(z) >= 49.0) return w_continued_fraction(z);
  // pick the node grid farther from Re z
  const double u = z.real() / kH;
  const double d_mid = std::abs(u - 0.5 - std::round(u - 0.5));
  const double d_int = std::abs(u - std::round(u));
  return w_sampled(z, d_mid >= d_int);
}

void VoigtPeak::validate() const {
  if (!(gaussian_sigma_ev >= 0.0) || !(lorentzian_gamma_ev >= 0.0))
    throw DomainError("VoigtPeak: widths must be >= 0");
  if (gaussian_sigma_ev == 0.0 && lorentzian_gamma_ev == 0.0)
    throw DomainError("VoigtPeak: sigma and gamma cannot both be 0");
  if (!(amplitude >= 0.0))
    throw DomainError("VoigtPeak: amplitude must be >= 0");
}

double voigt_eval(const VoigtPeak& peak, double e_ev) {
  peak.validate();
  const double x = e_ev - peak.center_ev;
  const double s = peak.gaussian_sigma_ev;
  const double g = peak.lorentzian_gamma_ev;
  if (g == 0.0) {
    const double u = x / s;
    return peak.amplitude * std::exp(-0.5 * u * u) / (s * std::sqrt(2.0 * M_PI));
  }
  if (s == 0.0) {
    return peak.amplitude * (g / M_PI) / (x * x + g * g);
  }
  const cplxd z(x / (s * kSqrt2), g / (s * kSqrt2));
  return peak.amplitude * faddeeva_w(z).real() / (s * kSqrt2 * kSqrtPi);
}

std::vector<double> voigt_eval(const VoigtPeak& peak,
                               const std::vector<double>& e_ev) {
  std::vector<double> out(e_ev.size());
  for (std::size_t i = 0; i < e_ev.size(); ++i) out[i] = voigt_eval(peak, e_ev[i]);
  return out;
}

VoigtGradient voigt_gradient(const VoigtPeak& peak, double e_ev) {
  VoigtGradient gr;
  const double x = e_ev - peak.center_ev;
  const double s = peak.gaussian_sigma_ev;
  const double g = peak.lorentzian_gamma_ev;
  const double a = peak.amplitude;

  if (g == 0.0 || s == 0.0) {
    // limits are smooth enough for centered differences on the rare path
    const double hs = std::max(1e-9, 1e-6 * (s + g));
    auto f = [&](double cc, double ss, double gg) {
      VoigtPeak p{cc, ss, gg, a};
      return voigt_eval(p, e_ev);
    };
    gr.value = voigt_eval(peak, e_ev);
    gr.d_center = (f(peak.center_ev + hs, s, g) - f(peak.center_ev - hs, s, g)) / (2 * hs);
    gr.d_sigma = s == 0.0 ? (f(peak.center_ev, hs, g) - gr.value) / hs
                          : (f(peak.center_ev, s + hs, g) - f(peak.center_ev, s - hs, g)) / (2 * hs);
    gr.d_gamma = g == 0.0 ? (f(peak.center_ev, s, hs) - gr.value) / hs
                          : (f(peak.center_ev, s, g + hs) - f(peak.center_ev, s, g - hs)) / (2 * hs);
    gr.d_amplitude = a > 0.0 ? gr.value / a : gr.value;
    return gr;
  }

  // analytic derivatives via w'(z) = -2 z w(z) + 2i/sqrt(pi)
  const double inv = 1.0 / (s * kSqrt2);
  const cplxd z(x * inv, g * inv);
  const cplxd w = faddeeva_w(z);
  const cplxd wp = -2.0 * z * w + cplxd(0.0, 2.0 / kSqrtPi);
  const double norm = inv / kSqrtPi;

  gr.value = a * norm * w.real();
  gr.d_amplitude = norm * w.real();
  gr.d_center = -a * norm * wp.real() * inv;
  gr.d_gamma = a * norm * (-wp.imag()) * inv;
  // d/ds of [w(z(s)).re / (s sqrt2 sqrtPi)] with z = (x + i g)/(s sqrt2)
  const cplxd dz_ds = -z / s;
  gr.d_sigma = a * norm * ((wp * dz_ds).real() - w.real() / s);
  return gr;
}

} // namespace qion

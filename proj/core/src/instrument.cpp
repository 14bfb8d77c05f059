#include "qion/instrument.hpp"

#include <algorithm>
#include <cmath>

#include "qion/errors.hpp"

namespace qion {

namespace {
constexpr double kFwhmToSigma = 1.0 / 2.3548200450309493;

// Half-width of the discrete kernel in grid points (6 sigma support).
std::size_t kernel_halfwidth(double sigma_ev, double spacing_ev) {
  return static_cast<std::size_t>(std::ceil(6.0 * sigma_ev / spacing_ev));
}

std::vector<double> kernel_taps(double sigma_ev, double spacing_ev) {
  const std::size_t hw = kernel_halfwidth(sigma_ev, spacing_ev);
  std::vector<double> taps(2 * hw + 1);
  for (std::size_t k = 0; k < taps.size(); ++k) {
    const double x = (static_cast<double>(k) - static_cast<double>(hw)) * spacing_ev;
    taps[k] = std::exp(-0.5 * x * x / (sigma_ev * sigma_ev));
  }
  return taps;
}

// Convolution with per-output renormalization over the in-grid support.
std::vector<double> convolve_taps(const std::vector<double>& p,
                                  const std::vector<double>& taps) {
  const std::size_t n = p.size();
  const long hw = static_cast<long>(taps.size() / 2);
  std::vector<double> out(n, 0.0);
  for (long i = 0; i < static_cast<long>(n); ++i) {
    double acc = 0.0, wsum = 0.0;
    const long k_lo = std::max<long>(-hw, -i);
    const long k_hi = std::min<long>(hw, static_cast<long>(n) - 1 - i);
    for (long k = k_lo; k <= k_hi; ++k) {
      const double w = taps[k + hw];
      acc += w * p[i + k];
      wsum += w;
    }
    out[i] = acc / wsum;
  }
  return out;
}

} // namespace

double InstrumentResponse::kernel_sigma_ev() const {
  const double mbes_sigma =
      reference_energy_ev / resolving_power * kFwhmToSigma;
  return std::hypot(photon_bandwidth_sigma_ev, mbes_sigma);
}

void InstrumentResponse::validate() const {
  if (!(photon_bandwidth_sigma_ev > 0.0))
    throw DomainError("instrument: photon_bandwidth_sigma must be > 0");
  if (!(resolving_power > 0.0))
    throw DomainError("instrument: resolving_power must be > 0");
  if (!(reference_energy_ev > 0.0))
    throw DomainError("instrument: reference_energy must be > 0");
}

std::vector<double> gaussian_convolve(const std::vector<double>& p,
                                      const SpectralGrid& grid,
                                      const InstrumentResponse& response) {
  response.validate();
  grid.validate();
  if (p.size() != grid.n_points)
    throw DomainError("gaussian_convolve: spectrum length mismatch");
  const double sigma = response.kernel_sigma_ev();
  if (sigma < grid.spacing_ev() / 4.0)
    throw DomainError("gaussian_convolve: kernel under-resolved on this grid");
  return convolve_taps(p, kernel_taps(sigma, grid.spacing_ev()));
}

std::vector<double> deconvolve(const std::vector<double>& p_meas,
                               const SpectralGrid& grid,
                               const InstrumentResponse& response,
                               int max_iter, double stop_tol) {
  response.validate();
  grid.validate();
  if (p_meas.size() != grid.n_points)
    throw DomainError("deconvolve: spectrum length mismatch");
  for (double v : p_meas)
    if (!std::isfinite(v) || v < 0.0)
      throw DomainError("deconvolve: input must be finite and >= 0");
  const double sigma = response.kernel_sigma_ev();
  if (sigma < grid.spacing_ev() / 4.0)
    throw DomainError("deconvolve: kernel under-resolved on this grid");

  const std::vector<double> taps = kernel_taps(sigma, grid.spacing_ev());
  const std::size_t n = p_meas.size();
  std::vector<double> u = p_meas;  // start from the measurement
  std::vector<double> ratio(n);

  auto objective = [&](const std::vector<double>& blurred) {
    // I-divergence D(m || K u); 0 log 0 := 0
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double m = p_meas[i], b = blurred[i];
      if (m > 0.0 && b > 0.0) d += m * std::log(m / b) - m + b;
      else d += b;
    }
    return d;
  };

  double prev_obj = -1.0;
  for (int iter = 0; iter < max_iter; ++iter) {
    const std::vector<double> blurred = convolve_taps(u, taps);
    const double obj = objective(blurred);
    if (prev_obj >= 0.0) {
      const double rel = std::abs(prev_obj - obj) / std::max(prev_obj, 1e-300);
      if (rel < stop_tol) break;
    }
    prev_obj = obj;
    for (std::size_t i = 0; i < n; ++i)
      ratio[i] = blurred[i] > 0.0 ? p_meas[i] / blurred[i] : 0.0;
    const std::vector<double> back = convolve_taps(ratio, taps);
    for (std::size_t i = 0; i < n; ++i) u[i] = std::max(0.0, u[i] * back[i]);
  }
  return u;
}

} // namespace qion

#ifndef QION_INSTRUMENT_HPP
#define QION_INSTRUMENT_HPP

#include <vector>

#include "qion/grid.hpp"

namespace qion {

// Spectral broadening model: photon bandwidth (Gaussian sigma) combined in
// quadrature with the spectrometer resolution, Gaussian of
// FWHM = reference_energy / resolving_power at the retarded reference energy.
struct InstrumentResponse {
  double photon_bandwidth_sigma_ev = 0.037 / 2.3548200450309493;
  double resolving_power = 50.0;     // E / dE
  double reference_energy_ev = 1.0;  // retarded kinetic energy at the analyzer

  double kernel_sigma_ev() const;
  void validate() const;
};

// Discrete convolution with a normalized Gaussian kernel; edge kernels are
// renormalized over their truncated support. Non-negative in, non-negative
// out; area preserved to 1e-6 relative for spectra vanishing at the edges.
std::vector<double> gaussian_convolve(const std::vector<double>& p,
                                      const SpectralGrid& grid,
                                      const InstrumentResponse& response);

// Richardson-Lucy deconvolution (non-negativity preserving). Stops at
// max_iter or when the relative change of the I-divergence objective drops
// below stop_tol.
std::vector<double> deconvolve(const std::vector<double>& p_meas,
                               const SpectralGrid& grid,
                               const InstrumentResponse& response,
                               int max_iter = 200, double stop_tol = 1e-6);

} // namespace qion

#endif

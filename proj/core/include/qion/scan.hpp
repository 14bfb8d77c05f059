#ifndef QION_SCAN_HPP
#define QION_SCAN_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qion/amplitudes.hpp"

namespace qion {

// Photoelectron intensity over (photon energy, kinetic energy).
struct SpectrumMap {
  std::vector<double> photon_energies_ev;
  SpectralGrid grid;
  std::vector<double> intensity;  // row-major [n_photon][n_kinetic]
  std::map<std::string, std::string> meta;

  std::size_t rows() const { return photon_energies_ev.size(); }
  std::size_t cols() const { return grid.n_points; }
  double& at(std::size_t row, std::size_t col) {
    return intensity[row * cols() + col];
  }
  double at(std::size_t row, std::size_t col) const {
    return intensity[row * cols() + col];
  }
  std::vector<double> row(std::size_t r) const {
    return {intensity.begin() + r * cols(), intensity.begin() + (r + 1) * cols()};
  }
  void validate() const;
};

// End-of-pulse spectrum per photon energy; rows are independent work items
// with deterministic, order-independent assembly.
SpectrumMap photon_energy_scan(const PulseSpec& pulse_template,
                               const AtomicSystem& atom, const SpectralGrid& grid,
                               const std::vector<double>& photon_energies_ev,
                               unsigned threads = 1);

// Focal-volume intensity average: log-spaced shells on
// [fraction*I_peak, I_peak] weighted by 1/I (2D Gaussian transverse beam,
// thin jet), normalized. map_builder produces the single-intensity map.
SpectrumMap volume_average(
    const std::function<SpectrumMap(double intensity_w_cm2)>& map_builder,
    double peak_intensity_w_cm2, std::size_t n_shells, double i_min_fraction);

// The shell intensities and normalized weights used by volume_average.
struct VolumeShells {
  std::vector<double> intensities_w_cm2;
  std::vector<double> weights;
};
VolumeShells volume_shells(double peak_intensity_w_cm2, std::size_t n_shells,
                           double i_min_fraction);

} // namespace qion

#endif

#include "qion/scan.hpp"

#include <algorithm>
#include <cmath>

#include "qion/errors.hpp"
#include "qion/parallel.hpp"

namespace qion {

void SpectrumMap::validate() const {
  grid.validate();
  if (intensity.size() != rows() * cols())
    throw DomainError("SpectrumMap: intensity dimensions mismatch");
  for (double v : intensity)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw DomainError("SpectrumMap: intensity must be finite and >= 0");
}

SpectrumMap photon_energy_scan(const PulseSpec& pulse_template,
                               const AtomicSystem& atom, const SpectralGrid& grid,
                               const std::vector<double>& photon_energies_ev,
                               unsigned threads) {
  if (photon_energies_ev.empty())
    throw DomainError("photon_energy_scan: empty photon energy list");
  if (!std::is_sorted(photon_energies_ev.begin(), photon_energies_ev.end()))
    throw DomainError("photon_energy_scan: photon energies must be sorted");

  SpectrumMap map;
  map.photon_energies_ev = photon_energies_ev;
  map.grid = grid;
  map.intensity.assign(map.rows() * map.cols(), 0.0);

  parallel_for(map.rows(), threads, [&](std::size_t r) {
    PulseSpec pulse = pulse_template;
    pulse.photon_energy_ev = photon_energies_ev[r];
    const ChannelAmplitudes amps =
        channel_amplitudes(pulse, atom, grid, pulse.end_of_pulse_fs());
    const std::vector<double> p = photoelectron_spectrum(amps);
    std::copy(p.begin(), p.end(), map.intensity.begin() + r * map.cols());
  });
  return map;
}

VolumeShells volume_shells(double peak_intensity_w_cm2, std::size_t n_shells,
                           double i_min_fraction) {
  if (!(peak_intensity_w_cm2 > 0.0))
    throw DomainError("volume_shells: peak intensity must be > 0");
  VolumeShells s;
  if (n_shells == 1) {  // degenerate single-shell case
    s.intensities_w_cm2 = {peak_intensity_w_cm2};
    s.weights = {1.0};
    return s;
  }
  if (n_shells < 2) throw DomainError("volume_shells: n_shells must be >= 1");
  if (!(i_min_fraction > 0.0 && i_min_fraction < 1.0))
    throw DomainError("volume_shells: i_min_fraction must be in (0, 1)");

  const double lo = std::log(i_min_fraction * peak_intensity_w_cm2);
  const double hi = std::log(peak_intensity_w_cm2);
  double wsum = 0.0;
  for (std::size_t k = 0; k < n_shells; ++k) {
    const double u = static_cast<double>(k) / static_cast<double>(n_shells - 1);
    const double ik = std::exp(lo + (hi - lo) * u);
    s.intensities_w_cm2.push_back(ik);
    s.weights.push_back(1.0 / ik);
    wsum += 1.0 / ik;
  }
  for (double& w : s.weights) w /= wsum;
  return s;
}

SpectrumMap volume_average(
    const std::function<SpectrumMap(double intensity_w_cm2)>& map_builder,
    double peak_intensity_w_cm2, std::size_t n_shells, double i_min_fraction) {
  const VolumeShells shells =
      volume_shells(peak_intensity_w_cm2, n_shells, i_min_fraction);

  SpectrumMap acc;
  for (std::size_t k = 0; k < shells.intensities_w_cm2.size(); ++k) {
    SpectrumMap m = map_builder(shells.intensities_w_cm2[k]);
    if (k == 0) {
      acc = m;
      for (double& v : acc.intensity) v *= shells.weights[0];
    } else {
      if (m.rows() != acc.rows() || !(m.grid == acc.grid))
        throw DomainError("volume_average: shell maps have mismatched axes");
      for (std::size_t i = 0; i < acc.intensity.size(); ++i)
        acc.intensity[i] += shells.weights[k] * m.intensity[i];
    }
  }
  acc.meta["volume_averaging"] = "thin-jet 2D Gaussian beam, log-spaced shells, 1/I weights";
  return acc;
}

} // namespace qion

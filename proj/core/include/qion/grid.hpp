#ifndef QION_GRID_HPP
#define QION_GRID_HPP

#include <cstddef>
#include <vector>

#include "qion/errors.hpp"

namespace qion {

// Uniform kinetic-energy grid (eV).
struct SpectralGrid {
  double e_min_ev = 14.0;
  double e_max_ev = 18.5;
  std::size_t n_points = 2001;

  double spacing_ev() const {
    return (e_max_ev - e_min_ev) / static_cast<double>(n_points - 1);
  }
  double energy_ev(std::size_t i) const {
    return e_min_ev + spacing_ev() * static_cast<double>(i);
  }
  std::vector<double> energies_ev() const {
    std::vector<double> e(n_points);
    for (std::size_t i = 0; i < n_points; ++i) e[i] = energy_ev(i);
    return e;
  }
  // nearest grid index to an energy (clamped)
  std::size_t index_of(double e_ev) const;

  void validate() const {
    if (!(e_min_ev < e_max_ev))
      throw DomainError("grid: e_min must be < e_max");
    if (n_points < 2) throw DomainError("grid: n_points must be >= 2");
  }

  bool operator==(const SpectralGrid&) const = default;
};

} // namespace qion

#endif

#ifndef QION_POPULATIONS_HPP
#define QION_POPULATIONS_HPP

#include <cstddef>
#include <vector>

#include "qion/amplitudes.hpp"

namespace qion {

// Time-resolved ionic channel populations and ground-state survival.
struct PopulationTrace {
  std::vector<double> times_fs;
  std::vector<double> p_a;
  std::vector<double> p_b;
  std::vector<double> p_total;
  std::vector<double> p_ground;
};

// p_i(t) = int |c_i(t,E)|^2 dE at the requested times (sorted, inside the
// pulse window). Times are snapped to the internal quadrature grid; the
// returned times_fs carry the actual evaluation times.
PopulationTrace population_trace(const PulseSpec& pulse, const AtomicSystem& atom,
                                 const SpectralGrid& grid,
                                 const std::vector<double>& times_fs,
                                 unsigned threads = 1);

// Sign changes of (p_a - p_b), ignoring changes within debounce_fs of the
// previously counted one.
int crossing_count(const PopulationTrace& trace, double debounce_fs);

// Least-squares line fit quality of y(x); returns R^2 in [0, 1].
double linear_fit_r2(const std::vector<double>& x, const std::vector<double>& y);

} // namespace qion

#endif

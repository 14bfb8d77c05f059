#include "qion/populations.hpp"

#include <algorithm>
#include <cmath>

#include "qion/errors.hpp"
#include "qion/parallel.hpp"

namespace qion {

PopulationTrace population_trace(const PulseSpec& pulse, const AtomicSystem& atom,
                                 const SpectralGrid& grid,
                                 const std::vector<double>& times_fs,
                                 unsigned threads) {
  if (times_fs.empty())
    throw DomainError("population_trace: empty time list");
  if (!std::is_sorted(times_fs.begin(), times_fs.end()))
    throw DomainError("population_trace: times must be sorted");
  if (times_fs.front() < 0.0 || times_fs.back() > pulse.total_window_fs + 1e-9)
    throw DomainError("population_trace: times outside the pulse window");

  detail::AmplitudeEngine engine(pulse, atom, grid, times_fs.back());

  std::vector<std::size_t> nodes(times_fs.size());
  for (std::size_t k = 0; k < times_fs.size(); ++k)
    nodes[k] = engine.node_at_or_below(times_fs[k]);

  PopulationTrace trace;
  const std::size_t n = times_fs.size();
  trace.times_fs.resize(n);
  trace.p_a.resize(n);
  trace.p_b.resize(n);
  trace.p_total.resize(n);
  trace.p_ground.resize(n);

  const double tau_g_fs = atom.tau_g_fs_at(
      std::max(pulse.peak_intensity_w_cm2, 1e-300), pulse.photon_energy_ev);

  parallel_for(n, threads, [&](std::size_t k) {
    const ChannelAmplitudes amps = engine.at_node(nodes[k]);
    const double de = grid.spacing_ev();
    double pa = 0.0, pb = 0.0;
    for (std::size_t i = 0; i < amps.c_a.size(); ++i) {
      pa += std::norm(amps.c_a[i]);
      pb += std::norm(amps.c_b[i]);
    }
    pa *= de;
    pb *= de;
    trace.times_fs[k] = amps.time_fs;
    trace.p_a[k] = pa;
    trace.p_b[k] = pb;
    trace.p_total[k] = pa + pb;
    trace.p_ground[k] = std::exp(-pulse.exposure_fs(amps.time_fs) / tau_g_fs);
  });
  return trace;
}

int crossing_count(const PopulationTrace& trace, double debounce_fs) {
  const auto& t = trace.times_fs;
  if (t.empty()) throw DomainError("crossing_count: empty trace");
  int count = 0;
  double last_crossing = -std::numeric_limits<double>::infinity();
  double prev = trace.p_a[0] - trace.p_b[0];
  for (std::size_t k = 1; k < t.size(); ++k) {
    const double cur = trace.p_a[k] - trace.p_b[k];
    if (prev != 0.0 && cur != 0.0 && std::signbit(prev) != std::signbit(cur)) {
      // linear-interpolated crossing time for the debounce window
      const double tc = t[k - 1] + (t[k] - t[k - 1]) * prev / (prev - cur);
      if (tc - last_crossing > debounce_fs) {
        ++count;
        last_crossing = tc;
      }
    }
    if (cur != 0.0) prev = cur;
  }
  return count;
}

double linear_fit_r2(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 3 || y.size() != n)
    throw DomainError("linear_fit_r2: need >= 3 matched points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double nn = static_cast<double>(n);
  const double denom = nn * sxx - sx * sx;
  if (denom == 0.0) return 0.0;
  const double slope = (nn * sxy - sx * sy) / denom;
  const double icept = (sy - slope * sx) / nn;
  double ss_res = 0, ss_tot = 0;
  const double ybar = sy / nn;
  for (std::size_t i = 0; i < n; ++i) {
    const double fit = icept + slope * x[i];
    ss_res += (y[i] - fit) * (y[i] - fit);
    ss_tot += (y[i] - ybar) * (y[i] - ybar);
  }
  if (ss_tot == 0.0) return 1.0;
  return 1.0 - ss_res / ss_tot;
}

} // namespace qion

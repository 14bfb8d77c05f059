#include "qion/peaks.hpp"

#include <algorithm>
#include <cmath>

namespace qion {

std::vector<Peak> find_local_maxima(const std::vector<double>& x,
                                    const std::vector<double>& y) {
  std::vector<Peak> peaks;
  const std::size_t n = y.size();
  if (n < 3) return peaks;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(y[i] > y[i - 1]) || !(y[i] >= y[i + 1])) continue;
    // flat-top plateau: count once at its left edge
    if (y[i] == y[i + 1] && i + 2 < n && y[i + 2] >= y[i]) continue;
    Peak p;
    p.index = i;
    p.height = y[i];
    const double denom = y[i - 1] - 2.0 * y[i] + y[i + 1];
    double shift = 0.0;
    if (denom < 0.0) {
      shift = 0.5 * (y[i - 1] - y[i + 1]) / denom;
      shift = std::clamp(shift, -0.5, 0.5);
      p.height = y[i] - 0.25 * (y[i - 1] - y[i + 1]) * shift;
    }
    p.position = x[i] + shift * (x[1] - x[0]);
    peaks.push_back(p);
  }
  const double mid = 0.5 * (x.front() + x.back());
  std::sort(peaks.begin(), peaks.end(), [mid](const Peak& a, const Peak& b) {
    if (a.height != b.height) return a.height > b.height;
    return std::abs(a.position - mid) < std::abs(b.position - mid);
  });
  return peaks;
}

bool find_doublet(const std::vector<double>& x, const std::vector<double>& y,
                  double min_separation, Peak& lower, Peak& upper) {
  const auto peaks = find_local_maxima(x, y);
  if (peaks.empty()) return false;
  const Peak& first = peaks[0];
  for (std::size_t k = 1; k < peaks.size(); ++k) {
    if (std::abs(peaks[k].position - first.position) >= min_separation) {
      lower = first.position < peaks[k].position ? first : peaks[k];
      upper = first.position < peaks[k].position ? peaks[k] : first;
      return true;
    }
  }
  return false;
}

} // namespace qion

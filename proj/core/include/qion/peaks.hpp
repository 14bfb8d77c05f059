#ifndef QION_PEAKS_HPP
#define QION_PEAKS_HPP

#include <cstddef>
#include <vector>

namespace qion {

struct Peak {
  std::size_t index = 0;     // grid index of the local maximum
  double position = 0.0;     // sub-grid position (same axis units as x)
  double height = 0.0;
};

// Interior local maxima of y on the uniform axis x, refined by quadratic
// interpolation through the three points around each maximum. Sorted by
// height, highest first; ties broken toward the axis midpoint.
std::vector<Peak> find_local_maxima(const std::vector<double>& x,
                                    const std::vector<double>& y);

// The two dominant maxima separated by at least min_separation, ordered by
// position. Returns false if no such pair exists.
bool find_doublet(const std::vector<double>& x, const std::vector<double>& y,
                  double min_separation, Peak& lower, Peak& upper);

} // namespace qion

#endif

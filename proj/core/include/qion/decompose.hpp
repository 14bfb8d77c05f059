#ifndef QION_DECOMPOSE_HPP
#define QION_DECOMPOSE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qion/errors.hpp"
#include "qion/scan.hpp"
#include "qion/voigt.hpp"

namespace qion {

// Initialization hints for the three-Voigt decomposition: one line at the
// undressed photoelectron energy plus a symmetric doublet at the dressed
// energies. The doublet Voigts share their widths; the line center is bounded
// within +-0.05 eV of the prediction.
struct ModelHints {
  double einstein_center_ev = 0.0;
  double lower_center_ev = 0.0;
  double upper_center_ev = 0.0;
  double width_hint_ev = 0.02;
  int max_iter = 200;
  int n_starts = 5;
  std::uint64_t seed = 1;
};

struct DecompositionResult {
  VoigtPeak einstein_line;
  VoigtPeak doublet_lower;
  VoigtPeak doublet_upper;
  double entangled_fraction = 0.0;  // doublet area / total area
  double residual_norm = 0.0;       // ||residual|| / ||data||
  bool converged = false;

  std::vector<double> model(const std::vector<double>& e_ev) const;
};

// Nonlinear least squares (damped Gauss-Newton with parameter-bound
// transforms and seeded multi-start) of the deconvolved spectrum.
struct FitNotConverged : NumericError {
  FitNotConverged(const std::string& what, DecompositionResult best)
      : NumericError(what), best_so_far(std::move(best)) {}
  DecompositionResult best_so_far;
};

DecompositionResult decompose(const std::vector<double>& p,
                              const SpectralGrid& grid, const ModelHints& hints);

// Pointwise convex combination fraction*entangled + (1-fraction)*einstein.
SpectrumMap mixture_map(const SpectrumMap& entangled, const SpectrumMap& einstein,
                        double fraction);

} // namespace qion

#endif

#ifndef QION_ENTANGLEMENT_HPP
#define QION_ENTANGLEMENT_HPP

#include <array>
#include <utility>
#include <vector>

#include "qion/amplitudes.hpp"

namespace qion {

// 2x2 reduced ion density matrix conditioned on ionization.
struct ReducedIonDensity {
  std::array<cplx, 4> rho{};  // rho[2*i + j]
  double p_ion = 0.0;
  double time_fs = 0.0;

  cplx at(int i, int j) const { return rho[2 * i + j]; }
  // eigenvalues sorted descending; clamped to [0, 1] within 1e-9 tolerance
  std::array<double, 2> eigenvalues() const;
};

// rho[i][j] = (1/P_ion) sum_E c_i(E) conj(c_j(E)) * spacing.
ReducedIonDensity reduced_ion_density_matrix(const ChannelAmplitudes& amps);

// Von Neumann entropy -sum lambda log2 lambda of a conditioned 2x2 state.
double entropy(const ReducedIonDensity& rho);

// Relative channel phase arg c_b - arg c_a at the two doublet peaks of P(E),
// wrapped to (-pi, pi]. omega_radfs supplies the expected splitting used to
// require a resolved doublet. Throws when the peaks are unresolved.
std::pair<double, double> channel_phase_difference(const ChannelAmplitudes& amps,
                                                   double omega_radfs);

// Weights of the joint state on the dressed products
//   (|a> + i|b>)/sqrt2 x |E < mid>   and   (|a> - i|b>)/sqrt2 x |E > mid>
// with the kinetic-energy axis split at the spectrum's intensity centroid.
std::pair<double, double> bell_overlap(const ChannelAmplitudes& amps);

struct EntanglementReport {
  std::vector<double> times_fs;
  std::vector<double> entropy;
  std::vector<double> phase_minus;  // NaN where the doublet is unresolved
  std::vector<double> phase_plus;
  std::vector<double> bell_minus;
  std::vector<double> bell_plus;
};

// Entropy / phases / dressed-basis weights over interaction time. Times are
// snapped to the quadrature grid; below the first resolvable step (ion yield
// underflow) the entropy is reported as 0.
EntanglementReport entropy_trace(const PulseSpec& pulse, const AtomicSystem& atom,
                                 const SpectralGrid& grid,
                                 const std::vector<double>& times_fs,
                                 unsigned threads = 1);

} // namespace qion

#endif

#ifndef QION_AMPLITUDES_HPP
#define QION_AMPLITUDES_HPP

#include <complex>
#include <vector>

#include "qion/atom.hpp"
#include "qion/grid.hpp"
#include "qion/pulse.hpp"
#include "qion/rabi.hpp"

namespace qion {

// Joint photoelectron/ion spectral amplitudes c_a(E), c_b(E) at time t.
struct ChannelAmplitudes {
  SpectralGrid grid;
  std::vector<cplx> c_a;
  std::vector<cplx> c_b;
  double time_fs = 0.0;
  double midpoint_ev = 0.0;  // hw - E_bin + hbar*dw/2 of the run

  // Ion yield: sum (|c_a|^2 + |c_b|^2) * spacing.
  double ion_yield() const;
};

// Spectral amplitudes from the first-order resolvent model: ionization at t'
// with field-amplitude weight, ground-state survival g(t'), free-electron
// phase about the doublet midpoint, and the dressed-ion propagator from t'
// to t. Product (Filon) quadrature in t': the oscillatory electron phase is
// integrated exactly, the smooth ionic factor by a three-point rule.
ChannelAmplitudes channel_amplitudes(const PulseSpec& pulse,
                                     const AtomicSystem& atom,
                                     const SpectralGrid& grid, double t_fs);

// P(E) = |c_a|^2 + |c_b|^2 on the grid.
std::vector<double> photoelectron_spectrum(const ChannelAmplitudes& amps);

namespace detail {

// Shared machinery for single spectra and time traces.
class AmplitudeEngine {
 public:
  AmplitudeEngine(const PulseSpec& pulse, const AtomicSystem& atom,
                  const SpectralGrid& grid, double t_max_fs,
                  std::size_t min_nodes = 0);

  // Amplitudes at quadrature node index j_t (must be even for the Simpson
  // pairing); node times are in node_times_fs().
  ChannelAmplitudes at_node(std::size_t j_t) const;
  const std::vector<double>& node_times_fs() const { return times_; }
  // largest even node index whose time <= t (nodes are uniform)
  std::size_t node_at_or_below(double t_fs) const;

  double bound_continuum_coupling_radfs() const { return omega_ag_pk_; }

 private:
  const PulseSpec pulse_;
  const AtomicSystem atom_;
  SpectralGrid grid_;
  double dt_fs_ = 0.0;
  double omega_eff_ = 0.0;   // calibrated ionic Rabi coupling, rad/fs
  double dw_ = 0.0;          // detuning, rad/fs
  double omega_ag_pk_ = 0.0; // bound-continuum coupling, rad/fs
  double midpoint_ev_ = 0.0;
  std::vector<double> times_;
  std::vector<Mat2c> table_;         // U(t_j, 0)
  std::vector<double> kappa_;        // (omega_ag/2) f(t') g_eff(t') at nodes, 1/fs
};

} // namespace detail

} // namespace qion

#endif

#ifndef QION_RABI_HPP
#define QION_RABI_HPP

#include <array>
#include <complex>
#include <vector>

#include "qion/atom.hpp"
#include "qion/pulse.hpp"

namespace qion {

using cplx = std::complex<double>;

// Column-major-free tiny 2x2 complex matrix (row i, col j).
struct Mat2c {
  std::array<cplx, 4> m{};  // m[2*i + j]
  cplx& operator()(int i, int j) { return m[2 * i + j]; }
  const cplx& operator()(int i, int j) const { return m[2 * i + j]; }

  static Mat2c identity();
  Mat2c adjoint() const;
  friend Mat2c operator*(const Mat2c& a, const Mat2c& b);
  // max abs element of (this^dagger * this - 1)
  double unitarity_defect() const;
};

// <1s|z|2p0> for a hydrogenic ion of charge Z: (2^7 sqrt2 / 3^5) / Z.
double hydrogenic_dipole(double z_charge);

// Peak ionic Rabi frequency Omega = d * E0 in rad/fs. Cycle-averaged field
// amplitude (RWA); no calibration factor applied here.
double rabi_frequency(const PulseSpec& pulse, const AtomicSystem& atom);

// Model coupling actually used in the dynamics: rabi_frequency * rabi_scale.
double effective_rabi_frequency(const PulseSpec& pulse, const AtomicSystem& atom);

// Calibration factor that makes the effective Rabi period equal
// target_period_fs at this pulse intensity.
double rabi_scale_for_period(const PulseSpec& pulse, const AtomicSystem& atom,
                             double target_period_fs);

// W = sqrt(Omega^2 + dw^2), rad/fs in -> rad/fs out.
double generalized_rabi(double omega_radfs, double detuning_radfs);

struct RabiParams {
  double rabi_frequency_radfs = 0.0;
  double detuning_radfs = 0.0;
  double generalized_rabi_radfs = 0.0;
  double rabi_period_fs = 0.0;
};
RabiParams make_rabi_params(double omega_radfs, double detuning_radfs);

// Detuning (omega - omega_ba) of the pulse against the ionic transition, rad/fs.
double detuning_radfs(const PulseSpec& pulse, const AtomicSystem& atom);

// Dressed-state photoelectron energies:
//   E(+-) = hw - E_bin + hbar*dw/2 +- hbar*W/2
struct DressedEnergies {
  double lower_ev = 0.0;
  double upper_ev = 0.0;
  double midpoint_ev = 0.0;
  double splitting_ev = 0.0;
};
DressedEnergies dressed_kinetic_energies(const PulseSpec& pulse,
                                         const AtomicSystem& atom,
                                         double omega_radfs);

// Ground-state amplitude survival factor exp(-t / 2 tau_g).
double ground_survival(double t_fs, double tau_g_ns);

// Fock-state bookkeeping label for the dressed basis: channel A = 1s+ ion
// with N-1 photons, channel B = 2p+ with N-2.
enum class IonChannel { A, B };
struct DressedStateLabel {
  IonChannel channel = IonChannel::A;
  int photon_offset = -1;  // relative to the initial Fock label N
  void validate() const;   // photon_offset must be -1 or -2
};

// Propagator of the rotating-frame two-level ion over [t_start, t_end]:
//   H(t) = 1/2 [[-dw, Omega(t)], [Omega(t), +dw]],  Omega(t) = Omega_pk * f(t)
// with f the pulse's field-amplitude envelope and dw = omega - omega_ba.
// Unitary by construction (commutator-free 4th-order Magnus steps, each an
// exact 2x2 exponential); adaptive step doubling to rel_tol.
// First column is (a, b) for a system starting in |a>; flat-top closed form
//   a(tau) = cos(W tau/2) + i (dw/W) sin(W tau/2)
//   b(tau) = -i (Omega/W) sin(W tau/2)
Mat2c two_level_propagator(const PulseSpec& pulse, double omega_peak_radfs,
                           double detuning_radfs, double t_start_fs,
                           double t_end_fs, double rel_tol = 1e-10);

// Cached U(t_j, 0) on a fixed time grid, for quadratures that need many
// (t, t') pairs: U(t, t') = U(t,0) * U(t',0)^dagger.
class PropagatorTable {
 public:
  PropagatorTable(const PulseSpec& pulse, double omega_peak_radfs,
                  double detuning_radfs, std::vector<double> times_fs,
                  double rel_tol = 1e-10);

  const std::vector<double>& times_fs() const { return times_; }
  const Mat2c& at(std::size_t j) const { return table_[j]; }
  // U(times[j_end], times[j_start])
  Mat2c between(std::size_t j_start, std::size_t j_end) const;

 private:
  std::vector<double> times_;
  std::vector<Mat2c> table_;
};

} // namespace qion

#endif

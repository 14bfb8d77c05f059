#include "qion/rabi.hpp"

#include <cmath>
#include <sstream>

#include "qion/constants.hpp"
#include "qion/errors.hpp"

namespace qion {

//======================================================================
// Mat2c
//======================================================================

Mat2c Mat2c::identity() {
  Mat2c u;
  u(0, 0) = 1.0;
  u(1, 1) = 1.0;
  return u;
}

Mat2c Mat2c::adjoint() const {
  Mat2c r;
  r(0, 0) = std::conj((*this)(0, 0));
  r(0, 1) = std::conj((*this)(1, 0));
  r(1, 0) = std::conj((*this)(0, 1));
  r(1, 1) = std::conj((*this)(1, 1));
  return r;
}

Mat2c operator*(const Mat2c& a, const Mat2c& b) {
  Mat2c r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

double Mat2c::unitarity_defect() const {
  const Mat2c p = adjoint() * (*this);
  double d = 0.0;
  d = std::max(d, std::abs(p(0, 0) - 1.0));
  d = std::max(d, std::abs(p(1, 1) - 1.0));
  d = std::max(d, std::abs(p(0, 1)));
  d = std::max(d, std::abs(p(1, 0)));
  return d;
}

//======================================================================
// Couplings and dressed energies
//======================================================================

double hydrogenic_dipole(double z_charge) {
  if (!(z_charge > 0.0))
    throw DomainError("hydrogenic_dipole: Z must be > 0");
  constexpr double num = 128.0 * 1.4142135623730951 / 243.0;  // 2^7 sqrt2 / 3^5
  return num / z_charge;
}

double rabi_frequency(const PulseSpec& pulse, const AtomicSystem& atom) {
  const double e0 = units::field_amplitude_au(pulse.peak_intensity_w_cm2);
  const double omega_au = atom.dipole_element_au * e0;
  return units::au_to_radfs(omega_au);
}

double effective_rabi_frequency(const PulseSpec& pulse, const AtomicSystem& atom) {
  return rabi_frequency(pulse, atom) * atom.rabi_scale;
}

double rabi_scale_for_period(const PulseSpec& pulse, const AtomicSystem& atom,
                             double target_period_fs) {
  if (!(target_period_fs > 0.0))
    throw DomainError("rabi_scale_for_period: target period must be > 0");
  const double omega = rabi_frequency(pulse, atom);
  if (omega <= 0.0)
    throw DomainError("rabi_scale_for_period: zero-intensity pulse");
  return (2.0 * M_PI / target_period_fs) / omega;
}

double generalized_rabi(double omega_radfs, double detuning_radfs) {
  if (!(omega_radfs >= 0.0))
    throw DomainError("generalized_rabi: Omega must be >= 0");
  return std::hypot(omega_radfs, detuning_radfs);
}

RabiParams make_rabi_params(double omega_radfs, double detuning_radfs) {
  RabiParams p;
  p.rabi_frequency_radfs = omega_radfs;
  p.detuning_radfs = detuning_radfs;
  p.generalized_rabi_radfs = generalized_rabi(omega_radfs, detuning_radfs);
  p.rabi_period_fs =
      omega_radfs > 0.0 ? 2.0 * M_PI / omega_radfs
                        : std::numeric_limits<double>::infinity();
  return p;
}

double detuning_radfs(const PulseSpec& pulse, const AtomicSystem& atom) {
  return (pulse.photon_energy_ev - atom.ion_transition_ev) / units::hbar_ev_fs;
}

DressedEnergies dressed_kinetic_energies(const PulseSpec& pulse,
                                         const AtomicSystem& atom,
                                         double omega_radfs) {
  if (!(pulse.photon_energy_ev > atom.binding_energy_ev))
    throw DomainError("dressed_kinetic_energies: photon energy below threshold");
  const double dw = detuning_radfs(pulse, atom);
  const double w = generalized_rabi(omega_radfs, dw);
  DressedEnergies e;
  e.midpoint_ev = pulse.photon_energy_ev - atom.binding_energy_ev +
                  0.5 * units::hbar_ev_fs * dw;
  e.splitting_ev = units::hbar_ev_fs * w;
  e.lower_ev = e.midpoint_ev - 0.5 * e.splitting_ev;
  e.upper_ev = e.midpoint_ev + 0.5 * e.splitting_ev;
  if (!(e.lower_ev > 0.0))
    throw DomainError("dressed_kinetic_energies: lower branch below threshold");
  return e;
}

double ground_survival(double t_fs, double tau_g_ns) {
  if (!(t_fs >= 0.0)) throw DomainError("ground_survival: t must be >= 0");
  if (!(tau_g_ns > 0.0)) throw DomainError("ground_survival: tau_g must be > 0");
  return std::exp(-t_fs / (2.0 * units::ns_to_fs(tau_g_ns)));
}

void DressedStateLabel::validate() const {
  if (photon_offset != -1 && photon_offset != -2)
    throw DomainError("DressedStateLabel: photon_offset must be -1 or -2");
}

//======================================================================
// Two-level propagator
//======================================================================

namespace {

// Exact exp(-i (x sigma_x + z sigma_z) * dt) for the traceless 2x2 generator
// H = [[z, x], [x, -z]] (x, z real).
Mat2c exact_step(double x, double z, double dt) {
  const double w = std::hypot(x, z);
  const double th = w * dt;
  double c, snc;  // cos(th), sin(th)/w guarded at w -> 0
  if (th * th < 1e-300) {
    c = 1.0;
    snc = dt;
  } else {
    c = std::cos(th);
    snc = std::sin(th) / w;
  }
  Mat2c u;
  u(0, 0) = cplx(c, -z * snc);
  u(1, 1) = cplx(c, +z * snc);
  u(0, 1) = cplx(0.0, -x * snc);
  u(1, 0) = cplx(0.0, -x * snc);
  return u;
}

double mat_dist(const Mat2c& a, const Mat2c& b) {
  double d = 0.0;
  for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(a.m[k] - b.m[k]));
  return d;
}

// Commutator-free 4th-order Magnus step over [t, t+h].
// Exact for a time-constant generator, unitary for any step size.
class TwoLevelStepper {
 public:
  TwoLevelStepper(const PulseSpec& pulse, double omega_peak_radfs,
                  double detuning_radfs)
      : pulse_(pulse), omega_pk_(omega_peak_radfs), dw_(detuning_radfs) {}

  Mat2c step(double t, double h) const {
    static constexpr double kSqrt3 = 1.7320508075688772;
    const double c1 = 0.5 - kSqrt3 / 6.0, c2 = 0.5 + kSqrt3 / 6.0;
    const double a1 = (3.0 - 2.0 * kSqrt3) / 12.0;
    const double a2 = (3.0 + 2.0 * kSqrt3) / 12.0;
    const double x1 = coupling(t + c1 * h), x2 = coupling(t + c2 * h);
    // H = x sigma_x + z sigma_z with z = -dw/2
    const double z = -0.5 * dw_;
    const Mat2c u1 = exact_step(a1 * x1 + a2 * x2, (a1 + a2) * z, h);
    const Mat2c u2 = exact_step(a2 * x1 + a1 * x2, (a1 + a2) * z, h);
    return u2 * u1;
  }

  // Adaptive step-doubling propagation over [t0, t1].
  Mat2c propagate(double t0, double t1, double rel_tol) const {
    Mat2c u = Mat2c::identity();
    if (t1 == t0) return u;
    const double dir = t1 > t0 ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);
    // smallest timescale of the generator sets the initial step
    const double wmax = std::hypot(omega_pk_, dw_);
    double h = dir * std::min(span, wmax > 0.0 ? 0.5 / wmax : span);
    double t = t0;
    const double h_min = span * 1e-14;
    while (dir * (t1 - t) > 0.0) {
      if (dir * h > dir * (t1 - t)) h = t1 - t;
      const Mat2c full = step(t, h);
      const Mat2c half = step(t + 0.5 * h, 0.5 * h) * step(t, 0.5 * h);
      const double err = mat_dist(full, half);
      if (err < rel_tol || std::abs(h) <= h_min) {
        if (std::abs(h) <= h_min && err >= rel_tol) {
          std::ostringstream msg;
          msg << "two_level_propagator: step size underflow at t=" << t
              << " fs (h=" << h << ", err=" << err << ", tol=" << rel_tol << ")";
          throw NumericError(msg.str());
        }
        u = half * u;
        t += h;
        const double grow = err > 0.0 ? 0.9 * std::pow(rel_tol / err, 0.2) : 4.0;
        h *= std::clamp(grow, 0.2, 4.0);
      } else {
        h *= std::max(0.2, 0.9 * std::pow(rel_tol / err, 0.2));
      }
    }
    return u;
  }

 private:
  double coupling(double t) const {
    return 0.5 * omega_pk_ * pulse_.amplitude_envelope(t);
  }

  const PulseSpec& pulse_;
  double omega_pk_;
  double dw_;
};

// Envelope discontinuities that an integration span must be split at.
std::vector<double> breakpoints(const PulseSpec& pulse, double t0, double t1) {
  std::vector<double> b;
  if (pulse.envelope == Envelope::FlatTop) {
    for (double edge : {0.0, pulse.fwhm_fs}) {
      if (edge > std::min(t0, t1) && edge < std::max(t0, t1)) b.push_back(edge);
    }
  }
  if (t1 < t0) std::reverse(b.begin(), b.end());
  return b;
}

} // namespace

Mat2c two_level_propagator(const PulseSpec& pulse, double omega_peak_radfs,
                           double detuning_radfs, double t_start_fs,
                           double t_end_fs, double rel_tol) {
  if (!(t_end_fs >= t_start_fs))
    throw DomainError("two_level_propagator: t_end must be >= t_start");
  TwoLevelStepper stepper(pulse, omega_peak_radfs, detuning_radfs);
  Mat2c u = Mat2c::identity();
  double t = t_start_fs;
  for (double edge : breakpoints(pulse, t_start_fs, t_end_fs)) {
    u = stepper.propagate(t, edge, rel_tol) * u;
    t = edge;
  }
  return stepper.propagate(t, t_end_fs, rel_tol) * u;
}

PropagatorTable::PropagatorTable(const PulseSpec& pulse, double omega_peak_radfs,
                                 double detuning_radfs,
                                 std::vector<double> times_fs, double rel_tol)
    : times_(std::move(times_fs)) {
  table_.reserve(times_.size());
  if (times_.empty()) return;
  TwoLevelStepper stepper(pulse, omega_peak_radfs, detuning_radfs);
  Mat2c u = Mat2c::identity();
  double t = 0.0;
  for (double tj : times_) {
    for (double edge : breakpoints(pulse, t, tj)) {
      u = stepper.propagate(t, edge, rel_tol) * u;
      t = edge;
    }
    u = stepper.propagate(t, tj, rel_tol) * u;
    t = tj;
    table_.push_back(u);
  }
}

Mat2c PropagatorTable::between(std::size_t j_start, std::size_t j_end) const {
  return table_[j_end] * table_[j_start].adjoint();
}

} // namespace qion

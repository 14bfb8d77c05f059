#include "qion/amplitudes.hpp"

#include <algorithm>
#include <cmath>

#include "qion/constants.hpp"
#include "qion/errors.hpp"

namespace qion {

double ChannelAmplitudes::ion_yield() const {
  double p = 0.0;
  for (std::size_t i = 0; i < c_a.size(); ++i)
    p += std::norm(c_a[i]) + std::norm(c_b[i]);
  return p * grid.spacing_ev();
}

std::vector<double> photoelectron_spectrum(const ChannelAmplitudes& amps) {
  std::vector<double> p(amps.grid.n_points);
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] = std::norm(amps.c_a[i]) + std::norm(amps.c_b[i]);
  return p;
}

std::size_t SpectralGrid::index_of(double e_ev) const {
  const double u = (e_ev - e_min_ev) / spacing_ev();
  const long i = std::lround(u);
  return static_cast<std::size_t>(std::clamp<long>(i, 0, static_cast<long>(n_points) - 1));
}

namespace detail {

namespace {

// Moments of the quadratic Lagrange basis against exp(-i theta u) on [-1,1];
// the oscillatory factor is integrated exactly, so the grid only needs to
// resolve the smooth ionic factor.
struct FilonWeights {
  cplx w_minus, w_zero, w_plus;
};

FilonWeights filon_weights(double theta) {
  double m0, m2;
  double m1_im;  // m1 = i * m1_im
  if (std::abs(theta) < 0.05) {
    const double t2 = theta * theta;
    m0 = 2.0 * (1.0 - t2 / 6.0 + t2 * t2 / 120.0 - t2 * t2 * t2 / 5040.0);
    m1_im = -2.0 * theta * (1.0 / 3.0 - t2 / 30.0 + t2 * t2 / 840.0);
    m2 = 2.0 * (1.0 / 3.0 - t2 / 10.0 + t2 * t2 / 168.0);
  } else {
    const double s = std::sin(theta), c = std::cos(theta);
    m0 = 2.0 * s / theta;
    m1_im = -2.0 * (s - theta * c) / (theta * theta);
    m2 = 2.0 * ((theta * theta - 2.0) * s + 2.0 * theta * c) /
         (theta * theta * theta);
  }
  const cplx m1(0.0, m1_im);
  FilonWeights w;
  w.w_minus = 0.5 * (m2 - m1);
  w.w_zero = cplx(m0 - m2, 0.0);
  w.w_plus = 0.5 * (m2 + m1);
  return w;
}

std::size_t node_count(const PulseSpec& pulse, double omega_eff_radfs,
                       double dw_radfs, double span_fs, std::size_t min_nodes) {
  const double w = std::hypot(omega_eff_radfs, dw_radfs);  // rad/fs
  double n = 512.0;
  if (w > 0.0) n = std::max(n, 80.0 * span_fs * w / (2.0 * M_PI));
  if (pulse.envelope == Envelope::Gaussian)
    n = std::max(n, 64.0 * span_fs / pulse.fwhm_fs);
  std::size_t ni = static_cast<std::size_t>(std::ceil(n));
  ni = std::max(ni, min_nodes);
  if (ni % 2 == 1) ++ni;  // even interval count for the three-point rule
  return ni;
}

} // namespace

AmplitudeEngine::AmplitudeEngine(const PulseSpec& pulse, const AtomicSystem& atom,
                                 const SpectralGrid& grid, double t_max_fs,
                                 std::size_t min_nodes)
    : pulse_(pulse), atom_(atom), grid_(grid) {
  pulse_.validate();
  grid_.validate();
  if (!(t_max_fs >= 0.0) || t_max_fs > pulse_.total_window_fs + 1e-9)
    throw DomainError("channel_amplitudes: t outside [0, total_window]");

  omega_eff_ = effective_rabi_frequency(pulse_, atom_);
  dw_ = detuning_radfs(pulse_, atom_);
  midpoint_ev_ = pulse_.photon_energy_ev - atom_.binding_energy_ev +
                 0.5 * units::hbar_ev_fs * dw_;

  // grid must cover the doublet with margin
  const double halo = 3.0 * units::hbar_ev_fs * omega_eff_;
  const double edge = 3.0 * grid_.spacing_ev();
  const double w_gen = generalized_rabi(omega_eff_, dw_);
  const double e_lo = midpoint_ev_ - 0.5 * units::hbar_ev_fs * w_gen;
  const double e_hi = midpoint_ev_ + 0.5 * units::hbar_ev_fs * w_gen;
  if (midpoint_ev_ - halo < grid_.e_min_ev || midpoint_ev_ + halo > grid_.e_max_ev ||
      e_lo - edge < grid_.e_min_ev || e_hi + edge > grid_.e_max_ev)
    throw DomainError("channel_amplitudes: grid clipping (doublet too close to "
                      "a grid edge)");

  const std::size_t n = node_count(pulse_, omega_eff_, dw_, t_max_fs, min_nodes);
  dt_fs_ = t_max_fs > 0.0 ? t_max_fs / static_cast<double>(n) : 0.0;
  times_.resize(n + 1);
  for (std::size_t j = 0; j <= n; ++j)
    times_[j] = dt_fs_ * static_cast<double>(j);
  if (t_max_fs == 0.0) times_.assign(1, 0.0);

  PropagatorTable prop(pulse_, omega_eff_, dw_, times_);
  table_.resize(times_.size());
  for (std::size_t j = 0; j < times_.size(); ++j) table_[j] = prop.at(j);

  // bound-continuum coupling calibrated to the configured ionization rate at
  // the pulse peak intensity: Gamma = pi |Omega_ag|^2 / 2 = 1 / tau_g
  const double tau_g_au = units::fs_to_au(
      atom_.tau_g_fs_at(std::max(pulse_.peak_intensity_w_cm2, 1e-300),
                        pulse_.photon_energy_ev));
  omega_ag_pk_ = atom_.photoionization_dipole_scale *
                 std::sqrt(2.0 / (M_PI * tau_g_au));

  kappa_.resize(times_.size());
  for (std::size_t j = 0; j < times_.size(); ++j) {
    const double f = pulse_.amplitude_envelope(times_[j]);
    const double g = std::exp(-pulse_.exposure_fs(times_[j]) /
                              (2.0 * units::au_to_fs(tau_g_au)));
    kappa_[j] = 0.5 * omega_ag_pk_ * f * g;  // a.u. angular frequency
  }
}

std::size_t AmplitudeEngine::node_at_or_below(double t_fs) const {
  if (dt_fs_ <= 0.0) return 0;
  auto j = static_cast<std::size_t>(std::floor(t_fs / dt_fs_ + 1e-9));
  j = std::min(j, times_.size() - 1);
  if (j % 2 == 1) --j;
  return j;
}

ChannelAmplitudes AmplitudeEngine::at_node(std::size_t j_t) const {
  ChannelAmplitudes out;
  out.grid = grid_;
  out.time_fs = times_[j_t];
  out.midpoint_ev = midpoint_ev_;
  out.c_a.assign(grid_.n_points, cplx(0.0, 0.0));
  out.c_b.assign(grid_.n_points, cplx(0.0, 0.0));
  if (j_t == 0) return out;
  if (j_t % 2 == 1)
    throw DomainError("AmplitudeEngine: evaluation node must be even");

  // Smooth ionic factor s_i(t') = kappa(t') * ubar_i(t, t'). The dressed
  // propagator column in the frame matched to the midpoint phase is the
  // conjugate of the public convention, with the b row twisted by -i:
  //   ubar_a = conj(U_aa),  ubar_b = -i conj(U_ba)
  const std::size_t n = j_t;
  const Mat2c& u_t = table_[j_t];
  std::vector<cplx> sa(n + 1), sb(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const Mat2c u = u_t * table_[j].adjoint();
    sa[j] = kappa_[j] * std::conj(u(0, 0));
    sb[j] = kappa_[j] * cplx(0.0, -1.0) * std::conj(u(1, 0));
  }

  const double h_au = units::fs_to_au(dt_fs_);
  const double t_au = units::fs_to_au(times_[j_t]);
  const double inv_sqrt_hartree = 1.0 / std::sqrt(units::hartree_ev);

  for (std::size_t ie = 0; ie < grid_.n_points; ++ie) {
    const double x = units::ev_to_au(grid_.energy_ev(ie) - midpoint_ev_);
    // phase factor exp(-i x (t - t')) integrated exactly per interval pair;
    // u-substitution centers each pair at its midpoint node
    const FilonWeights w = filon_weights(-x * h_au);
    const cplx step = std::polar(1.0, 2.0 * x * h_au);
    cplx phase = std::polar(1.0, -x * (t_au - h_au));  // at first pair midpoint
    cplx acc_a(0.0, 0.0), acc_b(0.0, 0.0);
    for (std::size_t m = 0; m + 2 <= n; m += 2) {
      acc_a += phase * (w.w_minus * sa[m] + w.w_zero * sa[m + 1] + w.w_plus * sa[m + 2]);
      acc_b += phase * (w.w_minus * sb[m] + w.w_zero * sb[m + 1] + w.w_plus * sb[m + 2]);
      phase *= step;
    }
    out.c_a[ie] = acc_a * h_au * inv_sqrt_hartree;
    out.c_b[ie] = acc_b * h_au * inv_sqrt_hartree;
  }
  return out;
}

} // namespace detail

ChannelAmplitudes channel_amplitudes(const PulseSpec& pulse,
                                     const AtomicSystem& atom,
                                     const SpectralGrid& grid, double t_fs) {
  detail::AmplitudeEngine engine(pulse, atom, grid, t_fs);
  return engine.at_node(engine.node_times_fs().size() - 1);
}

} // namespace qion

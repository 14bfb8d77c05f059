#include "qion/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "qion/constants.hpp"
#include "qion/errors.hpp"
#include "qion/parallel.hpp"
#include "qion/peaks.hpp"

namespace qion {

namespace {

constexpr double kYieldFloor = 1e-280;
constexpr double kEigenClamp = 1e-9;

double wrap_phase(double phi) {
  while (phi > M_PI) phi -= 2.0 * M_PI;
  while (phi <= -M_PI) phi += 2.0 * M_PI;
  return phi;
}

double binary_entropy_of(const std::array<double, 2>& lam) {
  double s = 0.0;
  for (double l : lam) {
    if (l > 0.0) s -= l * std::log2(l);
  }
  return std::clamp(s, 0.0, 1.0);
}

} // namespace

std::array<double, 2> ReducedIonDensity::eigenvalues() const {
  const double a = at(0, 0).real();
  const double d = at(1, 1).real();
  const double off = std::abs(at(0, 1));
  const double mean = 0.5 * (a + d);
  const double r = std::hypot(0.5 * (a - d), off);
  std::array<double, 2> lam{mean + r, mean - r};
  for (double& l : lam) {
    if (l < -kEigenClamp)
      throw NumericError("entropy: density matrix is not positive semidefinite");
    l = std::clamp(l, 0.0, 1.0);
  }
  return lam;
}

ReducedIonDensity reduced_ion_density_matrix(const ChannelAmplitudes& amps) {
  const double p = amps.ion_yield();
  if (!(p > kYieldFloor))
    throw DomainError("reduced_ion_density_matrix: no ionization; entropy undefined");

  const double de = amps.grid.spacing_ev();
  cplx raa(0, 0), rbb(0, 0), rab(0, 0);
  for (std::size_t i = 0; i < amps.c_a.size(); ++i) {
    raa += amps.c_a[i] * std::conj(amps.c_a[i]);
    rbb += amps.c_b[i] * std::conj(amps.c_b[i]);
    rab += amps.c_a[i] * std::conj(amps.c_b[i]);
  }
  ReducedIonDensity rho;
  rho.p_ion = p;
  rho.time_fs = amps.time_fs;
  rho.rho[0] = raa * de / p;
  rho.rho[1] = rab * de / p;
  rho.rho[2] = std::conj(rab) * de / p;
  rho.rho[3] = rbb * de / p;
  return rho;
}

double entropy(const ReducedIonDensity& rho) {
  return binary_entropy_of(rho.eigenvalues());
}

std::pair<double, double> channel_phase_difference(const ChannelAmplitudes& amps,
                                                   double omega_radfs) {
  const std::vector<double> p = photoelectron_spectrum(amps);
  const std::vector<double> e = amps.grid.energies_ev();
  const double min_sep = 0.5 * units::hbar_ev_fs * omega_radfs;
  Peak lower, upper;
  if (min_sep <= 0.0 || !find_doublet(e, p, min_sep, lower, upper))
    throw NumericError("channel_phase_difference: peaks unresolved");

  auto phase_at = [&](const Peak& pk) {
    const std::size_t i = amps.grid.index_of(pk.position);
    return wrap_phase(std::arg(amps.c_b[i]) - std::arg(amps.c_a[i]));
  };
  return {phase_at(lower), phase_at(upper)};
}

std::pair<double, double> bell_overlap(const ChannelAmplitudes& amps) {
  const double p = amps.ion_yield();
  if (!(p > kYieldFloor))
    throw DomainError("bell_overlap: no ionization");

  // split the kinetic-energy axis at the intensity centroid
  const std::vector<double> spec = photoelectron_spectrum(amps);
  double wsum = 0.0, esum = 0.0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    wsum += spec[i];
    esum += spec[i] * amps.grid.energy_ev(i);
  }
  const double e_split = esum / wsum;

  const double de = amps.grid.spacing_ev();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  double w_minus = 0.0, w_plus = 0.0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const cplx minus = (amps.c_a[i] - cplx(0, 1) * amps.c_b[i]) * inv_sqrt2;
    const cplx plus = (amps.c_a[i] + cplx(0, 1) * amps.c_b[i]) * inv_sqrt2;
    if (amps.grid.energy_ev(i) < e_split)
      w_minus += std::norm(minus);
    else
      w_plus += std::norm(plus);
  }
  return {w_minus * de / p, w_plus * de / p};
}

EntanglementReport entropy_trace(const PulseSpec& pulse, const AtomicSystem& atom,
                                 const SpectralGrid& grid,
                                 const std::vector<double>& times_fs,
                                 unsigned threads) {
  if (times_fs.empty())
    throw DomainError("entropy_trace: empty time list");
  if (!std::is_sorted(times_fs.begin(), times_fs.end()))
    throw DomainError("entropy_trace: times must be sorted");
  if (times_fs.front() < 0.0 || times_fs.back() > pulse.total_window_fs + 1e-9)
    throw DomainError("entropy_trace: times outside the pulse window");

  detail::AmplitudeEngine engine(pulse, atom, grid, times_fs.back());
  const double omega = effective_rabi_frequency(pulse, atom);

  const std::size_t n = times_fs.size();
  EntanglementReport rep;
  rep.times_fs.resize(n);
  rep.entropy.resize(n);
  rep.phase_minus.assign(n, std::numeric_limits<double>::quiet_NaN());
  rep.phase_plus.assign(n, std::numeric_limits<double>::quiet_NaN());
  rep.bell_minus.assign(n, 0.0);
  rep.bell_plus.assign(n, 0.0);

  parallel_for(n, threads, [&](std::size_t k) {
    const ChannelAmplitudes amps = engine.at_node(engine.node_at_or_below(times_fs[k]));
    rep.times_fs[k] = amps.time_fs;
    if (!(amps.ion_yield() > kYieldFloor)) {
      rep.entropy[k] = 0.0;  // 0+ limit before the first resolvable step
      return;
    }
    rep.entropy[k] = entropy(reduced_ion_density_matrix(amps));
    const auto bw = bell_overlap(amps);
    rep.bell_minus[k] = bw.first;
    rep.bell_plus[k] = bw.second;
    try {
      const auto ph = channel_phase_difference(amps, omega);
      rep.phase_minus[k] = ph.first;
      rep.phase_plus[k] = ph.second;
    } catch (const NumericError&) {
      // doublet not yet resolved; leave NaN
    }
  });
  return rep;
}

} // namespace qion

#include "qion/regime.hpp"

#include <cmath>

#include "qion/constants.hpp"
#include "qion/errors.hpp"
#include "qion/pulse.hpp"
#include "qion/rabi.hpp"

namespace qion {

RegimeReport regime_classify(double intensity_w_cm2, double duration_fs,
                             const AtomicSystem& atom) {
  if (!(intensity_w_cm2 > 0.0))
    throw DomainError("regime_classify: intensity must be > 0");
  if (!(duration_fs > 0.0))
    throw DomainError("regime_classify: duration must be > 0");

  PulseSpec probe = make_flat_top(atom.ion_transition_ev, intensity_w_cm2,
                                  duration_fs);
  const double omega = effective_rabi_frequency(probe, atom);
  RegimeReport r;
  r.rabi_period_fs = omega > 0.0 ? 2.0 * M_PI / omega
                                 : std::numeric_limits<double>::infinity();
  r.tau_g_fs = atom.tau_g_fs_at(intensity_w_cm2, atom.ion_transition_ev);
  r.tau_ion_fs = atom.tau_ion_fs_at(intensity_w_cm2, atom.ion_transition_ev);
  r.tau_se_fs = units::ns_to_fs(atom.tau_se_ns);

  if (duration_fs < r.rabi_period_fs) {
    r.region = Regime::I;
  } else if (duration_fs < r.tau_g_fs) {
    r.region = Regime::II;
  } else if (r.tau_g_fs <= duration_fs && duration_fs < r.tau_ion_fs) {
    r.region = Regime::III;
  } else {
    r.region = Regime::IV;
  }

  r.entangling = (2.0 * r.rabi_period_fs < duration_fs) &&
                 (r.rabi_period_fs < 0.01 * r.tau_g_fs) &&
                 (intensity_w_cm2 < 1e15);
  r.boundary = !r.entangling && r.rabi_period_fs <= duration_fs &&
               duration_fs <= 2.0 * r.rabi_period_fs;
  return r;
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::I: return "I";
    case Regime::II: return "II";
    case Regime::III: return "III";
    case Regime::IV: return "IV";
  }
  return "?";
}

} // namespace qion

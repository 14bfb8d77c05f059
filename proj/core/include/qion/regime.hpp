#ifndef QION_REGIME_HPP
#define QION_REGIME_HPP

#include <string>

#include "qion/atom.hpp"

namespace qion {

// Interaction-time regimes of the driven ionization process:
//   I   pulse shorter than one Rabi period
//   II  dressed-ion regime (doublet / entanglement window)
//   III neutral ground state saturated
//   IV  dressed ion itself depleted by further ionization
enum class Regime { I, II, III, IV };

struct RegimeReport {
  Regime region = Regime::I;
  bool entangling = false;
  bool boundary = false;     // within one Rabi period of the 2 T_R threshold
  double rabi_period_fs = 0.0;
  double tau_g_fs = 0.0;
  double tau_ion_fs = 0.0;
  double tau_se_fs = 0.0;
};

// Classify (intensity, duration). T_R uses the calibrated model coupling at
// the ionic transition energy; tau_g / tau_ion follow the atom's rate mode.
// The entangling flag requires 2 T_R < dt, T_R << tau_g, and I < 1e15 W/cm^2.
RegimeReport regime_classify(double intensity_w_cm2, double duration_fs,
                             const AtomicSystem& atom);

std::string to_string(Regime r);

} // namespace qion

#endif

#include "qion/atom.hpp"

#include <cmath>

#include "qion/constants.hpp"
#include "qion/errors.hpp"

namespace qion {

double cross_section_rate_per_fs(double sigma_mb, double intensity_w_cm2,
                                 double photon_energy_ev) {
  // rate = sigma * photon flux; flux = I / (hbar*omega)
  const double sigma_cm2 = sigma_mb * units::mb_cm2;
  const double photon_j = photon_energy_ev * units::ev_joule;
  const double flux = intensity_w_cm2 / photon_j;  // photons / (s cm^2)
  return sigma_cm2 * flux * 1e-15;                 // 1/fs
}

double AtomicSystem::tau_g_fs_at(double intensity_w_cm2,
                                 double photon_energy_ev) const {
  if (rate_mode == RateMode::CrossSections) {
    const double rate =
        cross_section_rate_per_fs(cross_section_mb, intensity_w_cm2, photon_energy_ev);
    return 1.0 / rate;
  }
  return units::ns_to_fs(tau_g_ns) * reference_intensity_w_cm2 / intensity_w_cm2;
}

double AtomicSystem::tau_ion_fs_at(double intensity_w_cm2,
                                   double photon_energy_ev) const {
  if (rate_mode == RateMode::CrossSections) {
    const double rate = cross_section_rate_per_fs(ion_cross_section_mb,
                                                  intensity_w_cm2, photon_energy_ev);
    return 1.0 / rate;
  }
  return tau_ion_fs * reference_intensity_w_cm2 / intensity_w_cm2;
}

std::vector<std::string> AtomicSystem::validate() const {
  if (!(binding_energy_ev > 0.0))
    throw DomainError("atom: binding_energy must be > 0");
  if (!(ion_transition_ev > 0.0))
    throw DomainError("atom: ion_transition must be > 0");
  if (!(dipole_element_au > 0.0))
    throw DomainError("atom: dipole_element must be > 0");
  if (!(photoionization_dipole_scale > 0.0))
    throw DomainError("atom: photoionization_dipole_scale must be > 0");
  if (!(rabi_scale > 0.0))
    throw DomainError("atom: rabi_scale must be > 0");
  if (!(tau_g_ns > 0.0) || !(tau_ion_fs > 0.0) || !(tau_se_ns > 0.0))
    throw DomainError("atom: all timescales must be > 0");
  if (!(reference_intensity_w_cm2 > 0.0))
    throw DomainError("atom: reference_intensity must be > 0");
  if (rate_mode == RateMode::CrossSections &&
      (!(cross_section_mb > 0.0) || !(ion_cross_section_mb > 0.0)))
    throw DomainError("atom: cross sections must be > 0 in cross-section mode");

  std::vector<std::string> warnings;
  if (units::ns_to_fs(tau_se_ns) < 10.0 * tau_ion_fs) {
    warnings.push_back("atom: tau_se is not much larger than tau_ion; "
                       "coherent dynamics may be cut off by ion depletion");
  }
  return warnings;
}

} // namespace qion

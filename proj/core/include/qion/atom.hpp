#ifndef QION_ATOM_HPP
#define QION_ATOM_HPP

#include <string>
#include <vector>

namespace qion {

struct PulseSpec;

// He / He+ system constants. Timescales tau_g (neutral depletion) and
// tau_ion (ion depletion) are quoted at reference_intensity_w_cm2 and scale
// as 1/I; alternatively they may be derived from cross sections. The two
// modes are mutually exclusive per run.
enum class RateMode { DirectTimescales, CrossSections };

struct AtomicSystem {
  double binding_energy_ev = 24.587;    // neutral binding, eps_a - eps_g
  double ion_transition_ev = 40.814;    // hbar*omega_ba of the residual ion
  double dipole_element_au = 0.3724677695;  // <a|z|b>, hydrogenic Z=2 default
  double photoionization_dipole_scale = 1.0; // scales the bound-continuum coupling
  double rabi_scale = 1.0;              // calibration factor on the ionic coupling

  RateMode rate_mode = RateMode::DirectTimescales;
  double reference_intensity_w_cm2 = 1.25e13;
  double tau_g_ns = 20.0;               // neutral depletion time at reference I
  double tau_ion_fs = 1700.0;           // ion depletion time at reference I
  double tau_se_ns = 0.1;               // spontaneous-emission lifetime

  // CrossSections mode inputs
  double cross_section_mb = 2.6;        // neutral photoionization
  double ion_cross_section_mb = 0.3;    // excited-ion photoionization

  // Depletion times at intensity I, per the active mode.
  double tau_g_fs_at(double intensity_w_cm2, double photon_energy_ev) const;
  double tau_ion_fs_at(double intensity_w_cm2, double photon_energy_ev) const;

  // Invariant check; returns human-readable warnings (e.g. tau_se not >> tau_ion).
  std::vector<std::string> validate() const;
};

// One-photon ionization rate (1/fs) from a cross section in Mb at the given
// intensity and photon energy.
double cross_section_rate_per_fs(double sigma_mb, double intensity_w_cm2,
                                 double photon_energy_ev);

} // namespace qion

#endif

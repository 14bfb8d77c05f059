#ifndef QION_PULSE_HPP
#define QION_PULSE_HPP

#include <string>

namespace qion {

enum class Envelope { FlatTop, Gaussian };

// XUV driving field. The flat-top envelope is 1 on [0, fwhm_fs] and 0
// outside; the Gaussian is an intensity envelope of the given FWHM centered
// in the total window, normalized so the peak intensity equals
// peak_intensity_w_cm2.
struct PulseSpec {
  double photon_energy_ev = 40.814;
  double peak_intensity_w_cm2 = 1.25e13;
  double fwhm_fs = 73.0;
  Envelope envelope = Envelope::FlatTop;
  double total_window_fs = 73.0;

  // Field-amplitude envelope (dimensionless, peak 1) at time t_fs.
  double amplitude_envelope(double t_fs) const;
  // Intensity envelope = amplitude^2.
  double intensity_envelope(double t_fs) const;

  // Integral of the intensity envelope over [0, t_fs]; the exposure that
  // drives ground-state depletion. Equals t_fs inside a flat top.
  double exposure_fs(double t_fs) const;

  // End-of-pulse evaluation time: flat top at fwhm, Gaussian at the window end.
  double end_of_pulse_fs() const;

  void validate() const; // throws DomainError on violated invariants
};

PulseSpec make_flat_top(double photon_energy_ev, double intensity_w_cm2,
                        double duration_fs);
PulseSpec make_gaussian(double photon_energy_ev, double intensity_w_cm2,
                        double fwhm_fs);

std::string to_string(Envelope e);
Envelope envelope_from_string(const std::string& s);

} // namespace qion

#endif

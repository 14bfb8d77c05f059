#include "qion/pulse.hpp"

#include <cmath>

#include "qion/errors.hpp"

namespace qion {

namespace {
constexpr double kLn2 = 0.6931471805599453;
}

double PulseSpec::amplitude_envelope(double t_fs) const {
  switch (envelope) {
    case Envelope::FlatTop:
      return (t_fs >= 0.0 && t_fs <= fwhm_fs) ? 1.0 : 0.0;
    case Envelope::Gaussian: {
      // intensity FWHM = fwhm_fs, so the field envelope carries half the rate
      const double tc = 0.5 * total_window_fs;
      const double u = (t_fs - tc) / fwhm_fs;
      return std::exp(-2.0 * kLn2 * u * u);
    }
  }
  return 0.0;
}

double PulseSpec::intensity_envelope(double t_fs) const {
  const double a = amplitude_envelope(t_fs);
  return a * a;
}

double PulseSpec::exposure_fs(double t_fs) const {
  if (t_fs <= 0.0) return 0.0;
  switch (envelope) {
    case Envelope::FlatTop:
      return std::min(t_fs, fwhm_fs);
    case Envelope::Gaussian: {
      // int exp(-4 ln2 (t-tc)^2 / fwhm^2) dt via erf
      const double tc = 0.5 * total_window_fs;
      const double a = 2.0 * std::sqrt(kLn2) / fwhm_fs;
      const double norm = std::sqrt(M_PI) / (2.0 * a);
      return norm * (std::erf(a * (t_fs - tc)) - std::erf(a * (0.0 - tc)));
    }
  }
  return 0.0;
}

double PulseSpec::end_of_pulse_fs() const {
  return envelope == Envelope::FlatTop ? fwhm_fs : total_window_fs;
}

void PulseSpec::validate() const {
  if (!(photon_energy_ev > 0.0))
    throw DomainError("pulse: photon_energy must be > 0");
  if (!(peak_intensity_w_cm2 >= 0.0))
    throw DomainError("pulse: peak_intensity must be >= 0");
  if (!(fwhm_fs > 0.0))
    throw DomainError("pulse: fwhm_duration must be > 0");
  if (!(total_window_fs >= fwhm_fs))
    throw DomainError("pulse: total_window must be >= fwhm_duration");
}

PulseSpec make_flat_top(double photon_energy_ev, double intensity_w_cm2,
                        double duration_fs) {
  PulseSpec p;
  p.photon_energy_ev = photon_energy_ev;
  p.peak_intensity_w_cm2 = intensity_w_cm2;
  p.fwhm_fs = duration_fs;
  p.envelope = Envelope::FlatTop;
  p.total_window_fs = duration_fs;
  p.validate();
  return p;
}

PulseSpec make_gaussian(double photon_energy_ev, double intensity_w_cm2,
                        double fwhm_fs) {
  PulseSpec p;
  p.photon_energy_ev = photon_energy_ev;
  p.peak_intensity_w_cm2 = intensity_w_cm2;
  p.fwhm_fs = fwhm_fs;
  p.envelope = Envelope::Gaussian;
  p.total_window_fs = 4.0 * fwhm_fs;
  p.validate();
  return p;
}

std::string to_string(Envelope e) {
  return e == Envelope::FlatTop ? "flat_top" : "gaussian";
}

Envelope envelope_from_string(const std::string& s) {
  if (s == "flat_top") return Envelope::FlatTop;
  if (s == "gaussian") return Envelope::Gaussian;
  throw DomainError("unknown envelope '" + s + "' (expected flat_top|gaussian)");
}

} // namespace qion

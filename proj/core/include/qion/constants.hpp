#ifndef QION_CONSTANTS_HPP
#define QION_CONSTANTS_HPP

// Unit system: all kernels work in Hartree atomic units (hbar = m_e = e = 1).
// eV / fs / ns / W cm^-2 / Mb appear only at API boundaries.

namespace qion::units {

inline constexpr double hartree_ev = 27.211386245988;
inline constexpr double au_time_fs = 0.024188843265857;    // 1 a.u. of time in fs
inline constexpr double fs_au = 1.0 / au_time_fs;          // 1 fs in a.u.
inline constexpr double hbar_ev_fs = hartree_ev * au_time_fs;  // 0.6582119569...
inline constexpr double au_intensity_w_cm2 = 3.50944758e16;    // E0 = 1 a.u.
inline constexpr double mb_cm2 = 1e-18;                    // 1 megabarn in cm^2
inline constexpr double ev_joule = 1.602176634e-19;
inline constexpr double ev_nm = 1239.8419843320026;        // E[eV] * lambda[nm]
inline constexpr double au_velocity_nm_fs = 2.18769126364; // 1 a.u. of velocity

inline constexpr double ev_to_au(double e_ev) { return e_ev / hartree_ev; }
inline constexpr double au_to_ev(double e_au) { return e_au * hartree_ev; }
inline constexpr double fs_to_au(double t_fs) { return t_fs * fs_au; }
inline constexpr double au_to_fs(double t_au) { return t_au * au_time_fs; }
inline constexpr double ns_to_fs(double t_ns) { return t_ns * 1e6; }

// Peak field amplitude (a.u.) from cycle-averaged intensity in W/cm^2.
inline double field_amplitude_au(double intensity_w_cm2);

// rad/fs <-> a.u. angular frequency
inline constexpr double radfs_to_au(double w) { return w * au_time_fs; }
inline constexpr double au_to_radfs(double w) { return w / au_time_fs; }

} // namespace qion::units

#include <cmath>

namespace qion::units {

inline double field_amplitude_au(double intensity_w_cm2) {
  return std::sqrt(intensity_w_cm2 / au_intensity_w_cm2);
}

} // namespace qion::units

#endif

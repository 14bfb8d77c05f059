#include "qion/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "qion/peaks.hpp"

namespace qion {

namespace {

constexpr int kNParams = 10;
constexpr double kWidthFloor = 1e-5;  // eV
constexpr double kCenterBound = 0.05; // eV, allowed Einstein-line shift

// Parameter vector layout (unconstrained space):
//   0 log A_einstein, 1 einstein center offset (tanh-bounded),
//   2 log sigma_e, 3 log gamma_e,
//   4 log A_minus, 5 c_minus, 6 log A_plus, 7 c_plus,
//   8 log sigma_d (shared), 9 log gamma_d (shared)
struct Params {
  double u[kNParams];
};

struct PhysicalModel {
  VoigtPeak einstein, lower, upper;
};

PhysicalModel to_physical(const Params& p, const ModelHints& hints) {
  PhysicalModel m;
  m.einstein.amplitude = std::exp(p.u[0]);
  m.einstein.center_ev = hints.einstein_center_ev + kCenterBound * std::tanh(p.u[1]);
  m.einstein.gaussian_sigma_ev = kWidthFloor + std::exp(p.u[2]);
  m.einstein.lorentzian_gamma_ev = kWidthFloor + std::exp(p.u[3]);
  m.lower.amplitude = std::exp(p.u[4]);
  m.lower.center_ev = p.u[5];
  m.upper.amplitude = std::exp(p.u[6]);
  m.upper.center_ev = p.u[7];
  m.lower.gaussian_sigma_ev = m.upper.gaussian_sigma_ev = kWidthFloor + std::exp(p.u[8]);
  m.lower.lorentzian_gamma_ev = m.upper.lorentzian_gamma_ev = kWidthFloor + std::exp(p.u[9]);
  return m;
}

// residuals r_i = model(e_i) - data_i and Jacobian dr_i/du_k
void residuals_jacobian(const Params& p, const ModelHints& hints,
                        const std::vector<double>& e,
                        const std::vector<double>& data, std::vector<double>& r,
                        std::vector<double>& jac) {
  const PhysicalModel m = to_physical(p, hints);
  const std::size_t n = e.size();
  r.assign(n, 0.0);
  jac.assign(n * kNParams, 0.0);
  const double dcenter_du1 =
      kCenterBound * (1.0 - std::tanh(p.u[1]) * std::tanh(p.u[1]));
  for (std::size_t i = 0; i < n; ++i) {
    const VoigtGradient ge = voigt_gradient(m.einstein, e[i]);
    const VoigtGradient gl = voigt_gradient(m.lower, e[i]);
    const VoigtGradient gu = voigt_gradient(m.upper, e[i]);
    r[i] = ge.value + gl.value + gu.value - data[i];
    double* j = &jac[i * kNParams];
    j[0] = ge.d_amplitude * m.einstein.amplitude;  // d/d log A
    j[1] = ge.d_center * dcenter_du1;
    j[2] = ge.d_sigma * (m.einstein.gaussian_sigma_ev - kWidthFloor);
    j[3] = ge.d_gamma * (m.einstein.lorentzian_gamma_ev - kWidthFloor);
    j[4] = gl.d_amplitude * m.lower.amplitude;
    j[5] = gl.d_center;
    j[6] = gu.d_amplitude * m.upper.amplitude;
    j[7] = gu.d_center;
    j[8] = (gl.d_sigma + gu.d_sigma) * (m.lower.gaussian_sigma_ev - kWidthFloor);
    j[9] = (gl.d_gamma + gu.d_gamma) * (m.lower.lorentzian_gamma_ev - kWidthFloor);
  }
}

double cost_of(const std::vector<double>& r) {
  double c = 0.0;
  for (double v : r) c += v * v;
  return 0.5 * c;
}

// Solve (A + lambda diag(A)) x = b for the 10x10 normal system, in place.
bool solve_damped(const double a_in[kNParams][kNParams], const double b_in[kNParams],
                  double lambda, double x[kNParams]) {
  double a[kNParams][kNParams];
  double b[kNParams];
  for (int i = 0; i < kNParams; ++i) {
    b[i] = b_in[i];
    for (int j = 0; j < kNParams; ++j) a[i][j] = a_in[i][j];
    a[i][i] += lambda * std::max(a_in[i][i], 1e-300);
  }
  // Gaussian elimination with partial pivoting
  int piv[kNParams];
  for (int i = 0; i < kNParams; ++i) piv[i] = i;
  for (int col = 0; col < kNParams; ++col) {
    int best = col;
    for (int row = col + 1; row < kNParams; ++row)
      if (std::abs(a[row][col]) > std::abs(a[best][col])) best = row;
    if (std::abs(a[best][col]) < 1e-300) return false;
    std::swap_ranges(a[col], a[col] + kNParams, a[best]);
    std::swap(b[col], b[best]);
    for (int row = col + 1; row < kNParams; ++row) {
      const double f = a[row][col] / a[col][col];
      for (int j = col; j < kNParams; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  for (int i = kNParams - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < kNParams; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return true;
}

struct FitOutcome {
  Params p{};
  double cost = std::numeric_limits<double>::infinity();
  bool converged = false;
};

FitOutcome levenberg_marquardt(Params p, const ModelHints& hints,
                               const std::vector<double>& e,
                               const std::vector<double>& data) {
  std::vector<double> r, jac;
  residuals_jacobian(p, hints, e, data, r, jac);
  double cost = cost_of(r);
  double lambda = 1e-3;
  FitOutcome out;
  out.p = p;
  out.cost = cost;

  const std::size_t n = e.size();
  for (int iter = 0; iter < hints.max_iter; ++iter) {
    double jtj[kNParams][kNParams] = {};
    double jtr[kNParams] = {};
    for (std::size_t i = 0; i < n; ++i) {
      const double* j = &jac[i * kNParams];
      for (int a = 0; a < kNParams; ++a) {
        jtr[a] += j[a] * r[i];
        for (int b = a; b < kNParams; ++b) jtj[a][b] += j[a] * j[b];
      }
    }
    for (int a = 0; a < kNParams; ++a)
      for (int b = 0; b < a; ++b) jtj[a][b] = jtj[b][a];

    double gmax = 0.0;
    for (int a = 0; a < kNParams; ++a) gmax = std::max(gmax, std::abs(jtr[a]));
    if (gmax < 1e-12 * (1.0 + cost)) {
      out.converged = true;
      break;
    }

    bool stepped = false;
    for (int tries = 0; tries < 12 && !stepped; ++tries) {
      double neg_jtr[kNParams];
      for (int a = 0; a < kNParams; ++a) neg_jtr[a] = -jtr[a];
      double delta[kNParams];
      if (!solve_damped(jtj, neg_jtr, lambda, delta)) {
        lambda *= 10.0;
        continue;
      }
      Params trial = out.p;
      for (int a = 0; a < kNParams; ++a) trial.u[a] += delta[a];
      std::vector<double> r_try, jac_try;
      residuals_jacobian(trial, hints, e, data, r_try, jac_try);
      const double cost_try = cost_of(r_try);
      if (cost_try < cost) {
        const double rel = (cost - cost_try) / std::max(cost, 1e-300);
        out.p = trial;
        cost = cost_try;
        out.cost = cost;
        r.swap(r_try);
        jac.swap(jac_try);
        lambda = std::max(lambda / 3.0, 1e-12);
        stepped = true;
        if (rel < 1e-12) {
          out.converged = true;
          return out;
        }
      } else {
        lambda *= 10.0;
      }
    }
    if (!stepped) {
      out.converged = true;  // no descent direction left at machine level
      break;
    }
  }
  return out;
}

double portable_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

} // namespace

std::vector<double> DecompositionResult::model(const std::vector<double>& e_ev) const {
  std::vector<double> m(e_ev.size(), 0.0);
  for (std::size_t i = 0; i < e_ev.size(); ++i)
    m[i] = voigt_eval(einstein_line, e_ev[i]) + voigt_eval(doublet_lower, e_ev[i]) +
           voigt_eval(doublet_upper, e_ev[i]);
  return m;
}

DecompositionResult decompose(const std::vector<double>& p,
                              const SpectralGrid& grid, const ModelHints& hints) {
  grid.validate();
  if (p.size() != grid.n_points)
    throw DomainError("decompose: spectrum length mismatch");
  double pmax = 0.0;
  for (double v : p) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw DomainError("decompose: spectrum must be finite and >= 0");
    pmax = std::max(pmax, v);
  }
  const std::vector<double> e = grid.energies_ev();
  if (find_local_maxima(e, p).empty())
    throw DomainError("decompose: spectrum has no local maximum");

  double area = 0.0, norm2 = 0.0;
  for (double v : p) {
    area += v;
    norm2 += v * v;
  }
  area *= grid.spacing_ev();
  const double data_norm = std::sqrt(norm2);
  if (!(area > 0.0)) throw DomainError("decompose: zero spectrum");

  std::mt19937_64 gen(hints.seed);
  const double w0 = std::max(hints.width_hint_ev, 2.0 * grid.spacing_ev());

  FitOutcome best;        // best converged start
  FitOutcome best_any;    // best regardless of convergence, for diagnostics
  double best_asym = std::numeric_limits<double>::infinity();
  bool any = false;
  for (int start = 0; start < std::max(1, hints.n_starts); ++start) {
    Params p0;
    double jc = 0.0, ja = 1.0, jw = 1.0;
    if (start > 0) {
      jc = (portable_uniform(gen) - 0.5) * w0 * 2.0;
      ja = std::exp((portable_uniform(gen) - 0.5) * 1.5);
      jw = std::exp((portable_uniform(gen) - 0.5) * 1.2);
    }
    p0.u[0] = std::log(0.34 * area * ja);
    p0.u[1] = 0.0;
    p0.u[2] = std::log(w0 * jw);
    p0.u[3] = std::log(0.3 * w0 * jw);
    p0.u[4] = std::log(0.33 * area / ja);
    p0.u[5] = hints.lower_center_ev + jc;
    p0.u[6] = std::log(0.33 * area / ja);
    p0.u[7] = hints.upper_center_ev - jc;
    p0.u[8] = std::log(w0 / jw);
    p0.u[9] = std::log(0.3 * w0 / jw);

    const FitOutcome fit = levenberg_marquardt(p0, hints, e, p);
    if (fit.cost < best_any.cost) best_any = fit;
    if (!fit.converged) continue;
    any = true;
    const PhysicalModel m = to_physical(fit.p, hints);
    const double asym = std::abs(m.lower.amplitude - m.upper.amplitude);
    const bool better =
        fit.cost < best.cost * (1.0 - 1e-9) ||
        (std::abs(fit.cost - best.cost) <= 1e-9 * std::max(best.cost, 1e-300) &&
         asym < best_asym);
    if (better) {
      best = fit;
      best_asym = asym;
    }
  }

  auto assemble = [&](const FitOutcome& fit, bool converged) {
    const PhysicalModel m = to_physical(fit.p, hints);
    DecompositionResult res;
    res.einstein_line = m.einstein;
    // report in energy order
    res.doublet_lower = m.lower.center_ev <= m.upper.center_ev ? m.lower : m.upper;
    res.doublet_upper = m.lower.center_ev <= m.upper.center_ev ? m.upper : m.lower;
    const double total =
        m.einstein.amplitude + m.lower.amplitude + m.upper.amplitude;
    res.entangled_fraction =
        total > 0.0 ? (m.lower.amplitude + m.upper.amplitude) / total : 0.0;
    res.residual_norm =
        data_norm > 0.0 ? std::sqrt(2.0 * fit.cost) / data_norm : 0.0;
    res.converged = converged;
    return res;
  };

  if (!any) {
    std::ostringstream msg;
    msg << "decompose: fit not converged after " << hints.max_iter
        << " iterations x " << hints.n_starts << " starts (best cost "
        << best.cost << ")";
    throw FitNotConverged(msg.str(), assemble(best, false));
  }
  return assemble(best, true);
}

SpectrumMap mixture_map(const SpectrumMap& entangled, const SpectrumMap& einstein,
                        double fraction) {
  if (!(fraction >= 0.0 && fraction <= 1.0))
    throw DomainError("mixture_map: fraction must be in [0, 1]");
  if (entangled.photon_energies_ev != einstein.photon_energies_ev ||
      !(entangled.grid == einstein.grid))
    throw DomainError("mixture_map: axis mismatch");
  SpectrumMap out = entangled;
  for (std::size_t i = 0; i < out.intensity.size(); ++i)
    out.intensity[i] = fraction * entangled.intensity[i] +
                       (1.0 - fraction) * einstein.intensity[i];
  out.meta["mixture_fraction"] = std::to_string(fraction);
  return out;
}

} // namespace qion

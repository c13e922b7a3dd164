#include "gatetime/search.hpp"

#include "gatetime/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace gatetime {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> linspace_closed(double lo, double hi, int n) {
  std::vector<double> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  v.front() = lo;
  v.back() = hi;
  return v;
}

// Replace the grid value nearest to `exact` so the point is searched exactly.
void snap_nearest(std::vector<double>& grid, double exact) {
  size_t best = 0;
  double dist = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < grid.size(); ++i) {
    const double d = std::abs(grid[i] - exact);
    if (d < dist) {
      dist = d;
      best = i;
    }
  }
  grid[best] = exact;
}

// Frame angles with sub-eps axis components flushed to exact zeros, so grid
// points that sit exactly on the energy budget stay feasible.
struct FrameTrig {
  double phi1;
  double s2;  // sin(2 phi1), >= 0 on [0, pi/2]
  double c2;  // cos(2 phi1)
};

FrameTrig frame_trig(double phi1) {
  double s2 = std::sin(2.0 * phi1);
  double c2 = std::cos(2.0 * phi1);
  if (std::abs(c2) < 1e-12) {
    c2 = 0.0;
    s2 = 1.0;
  } else if (std::abs(s2) < 1e-12) {
    s2 = 0.0;
    c2 = (c2 < 0.0) ? -1.0 : 1.0;
  }
  return {phi1, s2, c2};
}

// Same construction as family_hamiltonian, parameterized by (gap, mean,
// frame) with the frame trig precomputed.
HermitianOperator2 grid_hamiltonian(double gap, double mean,
                                    const FrameTrig& f, double phi2) {
  const double hg = 0.5 * gap;
  Matrix2 m;
  m(0, 0) = mean - hg * f.c2;
  m(1, 1) = mean + hg * f.c2;
  m(0, 1) = -hg * f.s2 * std::polar(1.0, phi2);
  m(1, 0) = std::conj(m(0, 1));
  return HermitianOperator2(m);
}

struct Candidate {
  bool found = false;
  double t = std::numeric_limits<double>::infinity();
  double e1 = 0.0, e2 = 0.0, phi1 = 0.0, phi2 = 0.0;
};

// Total order: found first, then earliest time, then lexicographically
// smallest parameters. Makes the parallel reduction order-independent.
bool candidate_better(const Candidate& a, const Candidate& b) {
  if (a.found != b.found) return a.found;
  if (!a.found) return false;
  if (a.t != b.t) return a.t < b.t;
  if (a.e1 != b.e1) return a.e1 < b.e1;
  if (a.e2 != b.e2) return a.e2 < b.e2;
  if (a.phi1 != b.phi1) return a.phi1 < b.phi1;
  return a.phi2 < b.phi2;
}

// Earliest t in (lo, hi] where pass() holds, given pass(lo) false and
// pass(hi) true; the returned time itself passes.
template <typename Pass>
double bisect_onset(Pass&& pass, double lo, double hi) {
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (pass(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

// Root of a continuous f given f(lo) = flo and sign(f(hi)) != sign(flo).
template <typename F>
double bisect_root(F&& f, double lo, double hi, double flo) {
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Gate target: U(t) must swap the basis states with phase exp(-i theta).
// Only the two off-diagonal entries of U(t) matter; they are assembled from
// the spectral projectors of the candidate Hamiltonian at each probe time.
// ---------------------------------------------------------------------------

struct GateKernel {
  double lam_lo, lam_hi;
  cx plo01, phi01;  // (0,1) entries of the two projectors; (1,0) = conj
  cx ei_theta;      // exp(+i theta); |arg(U01 * ei_theta)| is the residual
  double fid_min_sq;
  double tan_tol;
};

GateKernel make_gate_kernel(const EigenSystem2& es, cx ei_theta, double tol) {
  GateKernel k;
  k.lam_lo = es.eigenvalue_low;
  k.lam_hi = es.eigenvalue_high;
  k.plo01 = es.eigvec_low.a() * std::conj(es.eigvec_low.b());
  k.phi01 = es.eigvec_high.a() * std::conj(es.eigvec_high.b());
  k.ei_theta = ei_theta;
  k.fid_min_sq = (1.0 - tol) * (1.0 - tol);
  k.tan_tol = std::tan(tol);
  return k;
}

struct GateStep {
  double t;
  cx z1, z2;
  bool passed;
};

// One direct-evolution evaluation. The pass predicate is algebraically the
// check_gate condition: both off-diagonal magnitudes >= 1 - tol and both
// overlap phases within tol of -theta (for z = overlap * exp(i theta) and
// tol < pi/2, |arg z| <= tol iff Re z > 0 and |Im z| <= tan(tol) Re z).
GateStep gate_step(const GateKernel& k, double t, long long& evals) {
  ++evals;
  const cx a = std::polar(1.0, -k.lam_lo * t);
  const cx b = std::polar(1.0, -k.lam_hi * t);
  const cx u01 = a * k.plo01 + b * k.phi01;
  const cx u10 = a * std::conj(k.plo01) + b * std::conj(k.phi01);
  GateStep s;
  s.t = t;
  s.z1 = u01 * k.ei_theta;
  s.z2 = u10 * k.ei_theta;
  const bool fid_ok =
      std::norm(u01) >= k.fid_min_sq && std::norm(u10) >= k.fid_min_sq;
  s.passed = fid_ok && s.z1.real() > 0.0 &&
             std::abs(s.z1.imag()) <= k.tan_tol * s.z1.real() &&
             s.z2.real() > 0.0 &&
             std::abs(s.z2.imag()) <= k.tan_tol * s.z2.real();
  return s;
}

// Earliest pass within (0, nsteps*dt]. Pass windows narrower than the step
// are caught by bisecting the zero crossings of the overlap phases; windows
// that graze the tolerance without a phase zero crossing between grid points
// are not claimed (missing one can only report a later, still-passing time).
std::optional<double> earliest_gate_onset(const GateKernel& k, double dt,
                                          long long nsteps,
                                          long long& evals) {
  auto pass = [&](double t) { return gate_step(k, t, evals).passed; };
  GateStep prev = gate_step(k, 0.0, evals);  // identity: never passes
  for (long long step = 1; step <= nsteps; ++step) {
    const GateStep cur = gate_step(k, static_cast<double>(step) * dt, evals);
    std::array<double, 2> roots{};
    int nroots = 0;
    if (prev.z1.imag() * cur.z1.imag() < 0.0 && prev.z1.real() > 0.0 &&
        cur.z1.real() > 0.0) {
      roots[nroots++] = bisect_root(
          [&](double t) { return gate_step(k, t, evals).z1.imag(); }, prev.t,
          cur.t, prev.z1.imag());
    }
    if (prev.z2.imag() * cur.z2.imag() < 0.0 && prev.z2.real() > 0.0 &&
        cur.z2.real() > 0.0) {
      roots[nroots++] = bisect_root(
          [&](double t) { return gate_step(k, t, evals).z2.imag(); }, prev.t,
          cur.t, prev.z2.imag());
    }
    if (nroots == 2 && roots[1] < roots[0]) std::swap(roots[0], roots[1]);
    for (int i = 0; i < nroots; ++i) {
      if (pass(roots[i])) return bisect_onset(pass, prev.t, roots[i]);
    }
    if (cur.passed) return bisect_onset(pass, prev.t, cur.t);
    prev = cur;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rotation target: reach overlap magnitude <= cos(alpha) + tol with the
// known initial state. With weights q = |<v|psi0>|^2 on the two eigenvectors,
// |<psi0|U(t)|psi0>|^2 = q_lo^2 + q_hi^2 + 2 q_lo q_hi cos(gap t).
// ---------------------------------------------------------------------------

struct RotationKernel {
  double base;       // q_lo^2 + q_hi^2
  double cross;      // 2 q_lo q_hi
  double gap;        // lam_hi - lam_lo
  double thresh_sq;  // (cos(alpha) + tol)^2
};

RotationKernel make_rotation_kernel(const EigenSystem2& es,
                                    const QubitState& psi0, double thresh) {
  const double q_lo = std::norm(inner(es.eigvec_low, psi0));
  const double q_hi = std::norm(inner(es.eigvec_high, psi0));
  RotationKernel k;
  k.base = q_lo * q_lo + q_hi * q_hi;
  k.cross = 2.0 * q_lo * q_hi;
  k.gap = es.eigenvalue_high - es.eigenvalue_low;
  k.thresh_sq = thresh * thresh;
  return k;
}

// Smallest reachable |overlap|^2 over all t; used as an exact skip.
double rotation_floor_sq(const RotationKernel& k) { return k.base - k.cross; }

std::optional<double> earliest_rotation_onset(const RotationKernel& k,
                                              double dt, long long nsteps,
                                              long long& evals) {
  auto f = [&](double t) {
    ++evals;
    return k.base + k.cross * std::cos(k.gap * t) - k.thresh_sq;
  };
  auto pass = [&](double t) { return f(t) <= 0.0; };
  double prev_t = dt;
  if (f(dt) <= 0.0) return dt;  // already inside the target cone at the
                                // first step; resolution-limited onset
  for (long long step = 2; step <= nsteps; ++step) {
    const double t = static_cast<double>(step) * dt;
    if (f(t) <= 0.0) return bisect_onset(pass, prev_t, t);
    prev_t = t;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Shared grid driver and refinement
// ---------------------------------------------------------------------------

struct ParamPoint {
  double gap, mean, phi1, phi2;
};

ParamPoint clamp_point(ParamPoint p, double energy) {
  p.phi1 = std::clamp(p.phi1, 0.0, kPi / 2.0);
  p.phi2 = std::fmod(p.phi2, kTwoPi);
  if (p.phi2 < 0.0) p.phi2 += kTwoPi;
  if (p.phi2 >= kTwoPi) p.phi2 = 0.0;
  const FrameTrig f = frame_trig(p.phi1);
  const double gap_max = 2.0 * energy / (1.0 + std::abs(f.c2));
  p.gap = std::clamp(p.gap, 0.0, gap_max);
  const double m_lo = 0.5 * p.gap;
  const double m_hi = energy - 0.5 * p.gap * std::abs(f.c2);
  p.mean = std::clamp(p.mean, m_lo, m_hi);
  return p;
}

Candidate candidate_from(const ParamPoint& p, double t) {
  Candidate c;
  c.found = true;
  c.t = t;
  c.e1 = p.mean - 0.5 * p.gap;
  c.e2 = p.mean + 0.5 * p.gap;
  c.phi1 = p.phi1;
  c.phi2 = p.phi2;
  return c;
}

// Deterministic coordinate descent: fixed coordinate order, fixed step
// halving per round, strict-improvement acceptance.
template <typename EvalFn>
Candidate coordinate_refine(const Candidate& start, double energy,
                            std::array<double, 4> steps, int rounds,
                            EvalFn&& eval) {
  ParamPoint cur{start.e2 - start.e1, 0.5 * (start.e1 + start.e2),
                 start.phi1, start.phi2};
  cur = clamp_point(cur, energy);
  std::optional<double> cur_t = eval(cur);
  for (int round = 0; round < rounds; ++round) {
    for (int coord = 0; coord < 4; ++coord) {
      for (const double dir : {-1.0, 1.0}) {
        ParamPoint cand = cur;
        switch (coord) {
          case 0: cand.gap += dir * steps[0]; break;
          case 1: cand.mean += dir * steps[1]; break;
          case 2: cand.phi1 += dir * steps[2]; break;
          default: cand.phi2 += dir * steps[3]; break;
        }
        cand = clamp_point(cand, energy);
        const std::optional<double> t = eval(cand);
        if (t && (!cur_t || *t < *cur_t)) {
          cur = cand;
          cur_t = t;
        }
      }
    }
    for (double& s : steps) s *= 0.5;
  }
  if (!cur_t) return start;  // nothing passed at the tightened tolerance
  return candidate_from(cur, *cur_t);
}

struct Grids {
  std::vector<double> gaps;
  std::vector<FrameTrig> frames;
  std::vector<double> phi2s;
};

Grids build_grids(const SearchConfig& cfg, double snapped_gap) {
  Grids g;
  const double energy = cfg.energy.value();
  g.gaps.reserve(static_cast<size_t>(cfg.grid_e));
  for (int i = 1; i <= cfg.grid_e; ++i) {
    g.gaps.push_back(2.0 * energy * static_cast<double>(i) /
                     static_cast<double>(cfg.grid_e));
  }
  snap_nearest(g.gaps, snapped_gap);

  std::vector<double> phi1s = linspace_closed(0.0, kPi / 2.0, cfg.grid_phi1);
  snap_nearest(phi1s, kPi / 4.0);
  g.frames.reserve(phi1s.size());
  for (const double p : phi1s) g.frames.push_back(frame_trig(p));

  g.phi2s.reserve(static_cast<size_t>(cfg.grid_phi2));
  for (int j = 0; j < cfg.grid_phi2; ++j) {
    g.phi2s.push_back(kTwoPi * static_cast<double>(j) /
                      static_cast<double>(cfg.grid_phi2));
  }
  snap_nearest(g.phi2s, kPi);
  return g;
}

std::vector<double> mean_grid(double m_lo, double m_hi, int count,
                              double energy) {
  std::vector<double> means = linspace_closed(m_lo, m_hi, count);
  if (energy >= m_lo && energy <= m_hi) snap_nearest(means, energy);
  means.erase(std::unique(means.begin(), means.end()), means.end());
  return means;
}

long long step_count(const SearchConfig& cfg) {
  const double n = std::ceil(cfg.time_horizon / cfg.time_resolution - 1e-12);
  return std::max<long long>(1, static_cast<long long>(n));
}

SearchResult assemble(const Candidate& best, double analytic,
                      long long evals) {
  return SearchResult{
      best.found,
      best.found ? best.t : 0.0,
      UnitaryFamilyParams(best.e1, best.e2, best.phi1, best.phi2),
      analytic,
      (best.found && analytic > 0.0) ? best.t / analytic - 1.0 : 0.0,
      evals};
}

std::array<double, 4> refine_steps(const SearchConfig& cfg) {
  const double energy = cfg.energy.value();
  return {2.0 * energy / cfg.grid_e, energy / cfg.grid_e,
          (kPi / 2.0) / (cfg.grid_phi1 - 1), kTwoPi / cfg.grid_phi2};
}

Candidate scan_gate_grid(const SearchConfig& cfg, const GatePhase& theta,
                         double tol, bool parallel, long long& evals) {
  const double energy = cfg.energy.value();
  const double dt = cfg.time_resolution;
  const long long nsteps = step_count(cfg);
  const cx ei_theta = std::polar(1.0, theta.theta());

  const EigenvaluePair exact = eigenvalue_pair(theta, cfg.energy);
  const Grids grids = build_grids(cfg, std::abs(exact.e2 - exact.e1));
  const int n1 = static_cast<int>(grids.frames.size());
  const int n2 = static_cast<int>(grids.phi2s.size());
  const long long ntasks =
      static_cast<long long>(grids.gaps.size()) * n1 * n2;

  Candidate best;

#pragma omp parallel if (parallel)
  {
    Candidate local;
    long long local_evals = 0;
#pragma omp for schedule(static, 1)
    for (long long task = 0; task < ntasks; ++task) {
      const long long frame_stride = static_cast<long long>(n1) * n2;
      const int ig = static_cast<int>(task / frame_stride);
      const int rem = static_cast<int>(task % frame_stride);
      const FrameTrig& frame = grids.frames[static_cast<size_t>(rem / n2)];
      const double phi2 = grids.phi2s[static_cast<size_t>(rem % n2)];
      const double gap = grids.gaps[static_cast<size_t>(ig)];
      // The off-diagonal magnitude never exceeds sin(2 phi1): frames below
      // the fidelity tolerance cannot pass at any time.
      if (frame.s2 < 1.0 - tol) continue;
      const double m_lo = 0.5 * gap;
      const double m_hi = energy - 0.5 * gap * std::abs(frame.c2);
      if (m_hi < m_lo) continue;
      for (const double mean : mean_grid(m_lo, m_hi, cfg.grid_e, energy)) {
        const EigenSystem2 es =
            eig_hermitian(grid_hamiltonian(gap, mean, frame, phi2));
        const GateKernel kernel = make_gate_kernel(es, ei_theta, tol);
        const std::optional<double> onset =
            earliest_gate_onset(kernel, dt, nsteps, local_evals);
        if (onset) {
          const Candidate c =
              candidate_from({gap, mean, frame.phi1, phi2}, *onset);
          if (candidate_better(c, local)) local = c;
        }
      }
    }
#pragma omp critical
    {
      if (candidate_better(local, best)) best = local;
      evals += local_evals;
    }
  }
  return best;
}

SearchResult run_gate_search(const SearchConfig& cfg, bool parallel) {
  cfg.validate();
  const GatePhase* theta = std::get_if<GatePhase>(&cfg.target);
  if (theta == nullptr) {
    throw std::invalid_argument("gate search requires a gate-phase target");
  }
  const double energy = cfg.energy.value();
  const double analytic = gate_min_time(*theta, cfg.energy);
  const double dt = cfg.time_resolution;
  const long long nsteps = step_count(cfg);
  const cx ei_theta = std::polar(1.0, theta->theta());

  long long evals = 0;
  Candidate best = scan_gate_grid(cfg, *theta, cfg.success_tol, parallel,
                                  evals);

  if (best.found && cfg.refine_iterations > 0) {
    const double tol_fine = std::min(cfg.success_tol, 1e-6);
    auto eval = [&](const ParamPoint& p) -> std::optional<double> {
      const FrameTrig frame = frame_trig(p.phi1);
      const EigenSystem2 es =
          eig_hermitian(grid_hamiltonian(p.gap, p.mean, frame, p.phi2));
      const GateKernel kernel = make_gate_kernel(es, ei_theta, tol_fine);
      return earliest_gate_onset(kernel, dt, nsteps, evals);
    };
    // Near the sawtooth discontinuity the coarse tolerance admits the other
    // branch's shorter time; such winners cannot pass the tightened
    // tolerance, so the grid is rescanned at the tight tolerance instead of
    // reporting the artifact.
    const ParamPoint start = clamp_point(
        ParamPoint{best.e2 - best.e1, 0.5 * (best.e1 + best.e2), best.phi1,
                   best.phi2},
        energy);
    if (tol_fine < cfg.success_tol && !eval(start).has_value()) {
      const Candidate fine =
          scan_gate_grid(cfg, *theta, tol_fine, parallel, evals);
      if (fine.found) best = fine;
    }
    best = coordinate_refine(best, energy, refine_steps(cfg),
                             cfg.refine_iterations, eval);
  }
  return assemble(best, analytic, evals);
}

Candidate scan_rotation_grid(const SearchConfig& cfg,
                             const RotationTarget& target, double tol,
                             bool parallel, long long& evals) {
  const double energy = cfg.energy.value();
  const double dt = cfg.time_resolution;
  const long long nsteps = step_count(cfg);
  const double thresh = std::cos(target.alpha) + tol;
  const QubitState psi0 = target.initial_state;

  const Grids grids = build_grids(cfg, 2.0 * energy);
  const int n1 = static_cast<int>(grids.frames.size());
  const int n2 = static_cast<int>(grids.phi2s.size());
  const long long ntasks =
      static_cast<long long>(grids.gaps.size()) * n1 * n2;

  Candidate best;

#pragma omp parallel if (parallel)
  {
    Candidate local;
    long long local_evals = 0;
#pragma omp for schedule(static, 1)
    for (long long task = 0; task < ntasks; ++task) {
      const long long frame_stride = static_cast<long long>(n1) * n2;
      const int ig = static_cast<int>(task / frame_stride);
      const int rem = static_cast<int>(task % frame_stride);
      const FrameTrig& frame = grids.frames[static_cast<size_t>(rem / n2)];
      const double phi2 = grids.phi2s[static_cast<size_t>(rem % n2)];
      const double gap = grids.gaps[static_cast<size_t>(ig)];
      const double m_lo = 0.5 * gap;
      const double m_hi = energy - 0.5 * gap * std::abs(frame.c2);
      if (m_hi < m_lo) continue;
      for (const double mean : mean_grid(m_lo, m_hi, cfg.grid_e, energy)) {
        const EigenSystem2 es =
            eig_hermitian(grid_hamiltonian(gap, mean, frame, phi2));
        const RotationKernel kernel = make_rotation_kernel(es, psi0, thresh);
        if (rotation_floor_sq(kernel) > kernel.thresh_sq) continue;
        const std::optional<double> onset =
            earliest_rotation_onset(kernel, dt, nsteps, local_evals);
        if (onset) {
          const Candidate c =
              candidate_from({gap, mean, frame.phi1, phi2}, *onset);
          if (candidate_better(c, local)) local = c;
        }
      }
    }
#pragma omp critical
    {
      if (candidate_better(local, best)) best = local;
      evals += local_evals;
    }
  }
  return best;
}

SearchResult run_rotation_search(const SearchConfig& cfg, bool parallel) {
  cfg.validate();
  const RotationTarget* target = std::get_if<RotationTarget>(&cfg.target);
  if (target == nullptr) {
    throw std::invalid_argument("rotation search requires a rotation target");
  }
  const double energy = cfg.energy.value();
  const double analytic = rotation_min_time(target->alpha, cfg.energy);
  const double dt = cfg.time_resolution;
  const long long nsteps = step_count(cfg);
  const QubitState psi0 = target->initial_state;

  long long evals = 0;
  Candidate best =
      scan_rotation_grid(cfg, *target, cfg.success_tol, parallel, evals);

  if (best.found && cfg.refine_iterations > 0) {
    const double tol_fine = std::min(cfg.success_tol, 1e-6);
    const double thresh_fine = std::cos(target->alpha) + tol_fine;
    auto eval = [&](const ParamPoint& p) -> std::optional<double> {
      const FrameTrig frame = frame_trig(p.phi1);
      const EigenSystem2 es =
          eig_hermitian(grid_hamiltonian(p.gap, p.mean, frame, p.phi2));
      const RotationKernel kernel =
          make_rotation_kernel(es, psi0, thresh_fine);
      if (rotation_floor_sq(kernel) > kernel.thresh_sq) return std::nullopt;
      return earliest_rotation_onset(kernel, dt, nsteps, evals);
    };
    // Coarse winners that only cleared the looser threshold are replaced by
    // a rescan at the tight threshold rather than reported.
    const ParamPoint start = clamp_point(
        ParamPoint{best.e2 - best.e1, 0.5 * (best.e1 + best.e2), best.phi1,
                   best.phi2},
        energy);
    if (tol_fine < cfg.success_tol && !eval(start).has_value()) {
      const Candidate fine =
          scan_rotation_grid(cfg, *target, tol_fine, parallel, evals);
      if (fine.found) best = fine;
    }
    best = coordinate_refine(best, energy, refine_steps(cfg),
                             cfg.refine_iterations, eval);
  }
  return assemble(best, analytic, evals);
}

}  // namespace

SearchConfig SearchConfig::for_gate(GatePhase theta, EnergyBudget energy) {
  const double tau = gate_min_time(theta, energy);
  return SearchConfig{energy, theta, 64,   32, 32,
                      tau / 200.0,   2.0 * tau, 1e-3, 3};
}

SearchConfig SearchConfig::for_rotation(double alpha, QubitState initial_state,
                                        EnergyBudget energy) {
  const double tau = rotation_min_time(alpha, energy);
  const double scale = tau > 0.0 ? tau : orthogonality_time(energy);
  return SearchConfig{energy,
                      RotationTarget{alpha, initial_state},
                      64,
                      32,
                      32,
                      scale / 200.0,
                      2.0 * scale,
                      1e-3,
                      3};
}

void SearchConfig::validate() const {
  if (grid_e < 2 || grid_phi1 < 2 || grid_phi2 < 2) {
    throw std::domain_error("SearchConfig: grid counts must be >= 2");
  }
  if (!std::isfinite(time_resolution) || time_resolution <= 0.0) {
    throw std::domain_error("SearchConfig: time_resolution must be > 0");
  }
  if (!std::isfinite(time_horizon) || time_horizon <= 0.0) {
    throw std::domain_error("SearchConfig: time_horizon must be > 0");
  }
  if (!(success_tol > 0.0) || !(success_tol < 0.1)) {
    throw std::domain_error("SearchConfig: success_tol must lie in (0, 0.1)");
  }
  if (refine_iterations < 0) {
    throw std::domain_error("SearchConfig: refine_iterations must be >= 0");
  }
  if (const RotationTarget* r = std::get_if<RotationTarget>(&target)) {
    if (!std::isfinite(r->alpha) || r->alpha < 0.0 ||
        r->alpha > kPi / 2.0) {
      throw std::domain_error("SearchConfig: alpha must lie in [0, pi/2]");
    }
  }
}

SearchResult search_min_gate_time(const SearchConfig& config) {
  return run_gate_search(config, true);
}

SearchResult search_min_gate_time_serial(const SearchConfig& config) {
  return run_gate_search(config, false);
}

SearchResult search_min_rotation_time(const SearchConfig& config) {
  return run_rotation_search(config, true);
}

SearchResult search_min_rotation_time_serial(const SearchConfig& config) {
  return run_rotation_search(config, false);
}

std::vector<SpeedLimitReport> sweep_sawtooth(
    const std::vector<GatePhase>& thetas, EnergyBudget energy,
    bool with_oracle) {
  if (thetas.empty()) {
    throw std::invalid_argument("sweep_sawtooth: empty theta list");
  }
  std::vector<SpeedLimitReport> reports;
  reports.reserve(thetas.size());
  for (const GatePhase& theta : thetas) {
    std::optional<double> oracle;
    if (with_oracle) {
      // One search per theta: a reduced grid keeps sweeps fast, and the
      // snapped optimum keeps the found time exact at any grid size.
      SearchConfig cfg = SearchConfig::for_gate(theta, energy);
      cfg.grid_e = 16;
      cfg.grid_phi1 = 9;
      cfg.grid_phi2 = 8;
      cfg.refine_iterations = 2;
      const SearchResult r = search_min_gate_time(cfg);
      if (r.found) oracle = r.min_time_found;
    }
    reports.push_back(build_report(GateSpec{theta, energy}, oracle));
  }
  return reports;
}

}  // namespace gatetime

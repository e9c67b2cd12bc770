#include "lpx/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "lpx/numeric.hpp"

namespace lpx {

std::vector<double> project_to_simplex(std::vector<double> v) {
  const std::size_t n = v.size();
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cum = 0.0;
  double tau = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cum += u[i];
    double t = (cum - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0) tau = t;
  }
  for (double& x : v) x = std::max(x - tau, 0.0);
  return v;
}

namespace {

// Shared workspace for one minimax solve: objective F(t or z) =
// max_i ||x_i - y||, y = sum_j t_j h_j (hull mode) or y = z (ambient mode).
struct MinimaxProblem {
  const WeightedSpace& space;
  const std::vector<Point>& targets;
  const std::vector<Point>* hull;  // null in ambient mode

  std::vector<double> y;      // current center coefficients
  std::vector<double> grad;   // gradient buffer (hull weights or coefficients)
  std::vector<double> wbuf;   // per-cell norm-derivative weights
  std::size_t attain = 0;     // lowest index attaining the current max

  MinimaxProblem(const WeightedSpace& s, const std::vector<Point>& t, const std::vector<Point>* h)
      : space(s), targets(t), hull(h), y(s.dim(), 0.0),
        grad(h ? h->size() : s.dim(), 0.0), wbuf(s.dim(), 0.0) {}

  void center_from_weights(const std::vector<double>& t) {
    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t j = 0; j < hull->size(); ++j) {
      const Point& hpt = (*hull)[j];
      const double tj = t[j];
      for (std::size_t k = 0; k < y.size(); ++k) y[k] += tj * hpt[k];
    }
  }

  // Max distance from y to the targets; remembers the lowest attaining index.
  double objective() {
    double best = -1.0;
    attain = 0;
    const double p = space.p();
    const std::vector<double>& mu = space.cells();
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const Point& x = targets[i];
      double vmax = 0.0;
      for (std::size_t k = 0; k < y.size(); ++k) {
        vmax = std::max(vmax, std::fabs(x[k] - y[k]));
      }
      double d = 0.0;
      if (vmax > 0.0) {
        double sum = 0.0;
        for (std::size_t k = 0; k < y.size(); ++k) {
          sum += mu[k] * detail::pow_abs((x[k] - y[k]) / vmax, p);
        }
        d = vmax * std::pow(sum, 1.0 / p);
      }
      if (d > best) {
        best = d;
        attain = i;
      }
    }
    return best;
  }

  // Distance from y to one target (same arithmetic as objective()).
  double distance_to(std::size_t i) const {
    const double p = space.p();
    const std::vector<double>& mu = space.cells();
    const Point& x = targets[i];
    double vmax = 0.0;
    for (std::size_t k = 0; k < y.size(); ++k) {
      vmax = std::max(vmax, std::fabs(x[k] - y[k]));
    }
    if (vmax <= 0.0) return 0.0;
    double sum = 0.0;
    for (std::size_t k = 0; k < y.size(); ++k) {
      sum += mu[k] * detail::pow_abs((x[k] - y[k]) / vmax, p);
    }
    return vmax * std::pow(sum, 1.0 / p);
  }

  // Gradient of the distance to target i at the current center, written to
  // `out` (hull-weight space or coefficient space). `value` must be the
  // distance itself and positive.
  void gradient_for(std::size_t i, double value, std::vector<double>& out) {
    const double p = space.p();
    const std::vector<double>& mu = space.cells();
    const Point& x = targets[i];
    // d||u||/du_k scaled by 1/||u||^{p-1}: mu_k |u_k/N|^{p-1} sign(u_k)
    for (std::size_t k = 0; k < y.size(); ++k) {
      double u = x[k] - y[k];
      double w = mu[k] * detail::pow_abs(u / value, p - 1.0);
      wbuf[k] = (u >= 0.0) ? w : -w;
      if (u == 0.0) wbuf[k] = 0.0;
    }
    if (hull) {
      out.assign(hull->size(), 0.0);
      for (std::size_t j = 0; j < hull->size(); ++j) {
        const Point& hpt = (*hull)[j];
        double g = 0.0;
        for (std::size_t k = 0; k < y.size(); ++k) g += wbuf[k] * hpt[k];
        out[j] = -g;
      }
    } else {
      out.assign(y.size(), 0.0);
      for (std::size_t k = 0; k < y.size(); ++k) out[k] = -wbuf[k];
    }
  }

  // Subgradient of the attaining distance. Fills `grad`; returns its
  // Euclidean length. `value` must be the objective at the current center.
  double subgradient(double value) {
    gradient_for(attain, value, grad);
    double norm2 = 0.0;
    for (double g : grad) norm2 += g * g;
    return std::sqrt(norm2);
  }
};

struct LoopResult {
  std::vector<double> best_arg;
  double best_value = 0.0;
  int iterations = 0;
  double gap_estimate = 0.0;
  bool converged = false;
};

// Restarted projected-subgradient loop shared by the hull and ambient modes.
// `set_center` maps the argument vector onto problem.y; `project` constrains
// an argument update in place (identity in ambient mode).
template <typename SetCenter, typename Project>
LoopResult subgradient_loop(MinimaxProblem& problem, std::vector<double> arg, double step0,
                            double lipschitz, const SolverConfig& cfg, SetCenter set_center,
                            Project project) {
  LoopResult out;
  set_center(arg);
  double f = problem.objective();
  out.best_arg = arg;
  out.best_value = f;

  if (f <= 0.0) {  // all targets coincide with the start center
    out.converged = true;
    return out;
  }

  const double lip = std::max(lipschitz, 1e-30);
  const double c_stop = std::max(1e-15, 0.25 * cfg.tolerance / lip);
  const int round_len =
      std::max(120, std::min(2500, cfg.max_iters / 64));
  double c = std::max(step0, 2.0 * c_stop);

  std::vector<double> avg(arg.size(), 0.0);
  std::vector<double> trial(arg.size(), 0.0);
  int used = 0;
  double prev_best = out.best_value;
  double last_improve = out.best_value;

  while (c > c_stop && used < cfg.max_iters && out.best_value > 0.0) {
    arg = out.best_arg;
    set_center(arg);
    f = problem.objective();
    std::fill(avg.begin(), avg.end(), 0.0);
    int inner = 0;
    int averaged = 0;
    for (int k = 1; k <= round_len && used < cfg.max_iters; ++k, ++used, ++inner) {
      if (f <= 0.0) break;  // exact cover, nothing left to improve
      double gnorm = problem.subgradient(f);
      if (!(gnorm > 0.0) || !std::isfinite(gnorm)) break;
      const double s = c / std::sqrt(static_cast<double>(k));
      for (std::size_t j = 0; j < arg.size(); ++j) arg[j] -= s * problem.grad[j] / gnorm;
      project(arg);
      set_center(arg);
      f = problem.objective();
      if (f < out.best_value) {
        out.best_value = f;
        out.best_arg = arg;
      }
      // Suffix average: the late iterates straddle the valley floor, the
      // early ones are still in transit and would drag the mean off it.
      if (2 * k > round_len) {
        for (std::size_t j = 0; j < arg.size(); ++j) avg[j] += arg[j];
        ++averaged;
      }
    }
    if (averaged > 0) {
      for (std::size_t j = 0; j < arg.size(); ++j) trial[j] = avg[j] / averaged;
      project(trial);
      set_center(trial);
      double favg = problem.objective();
      if (favg < out.best_value) {
        out.best_value = favg;
        out.best_arg = trial;
      }
    }
    last_improve = prev_best - out.best_value;
    prev_best = out.best_value;
    // Halve only once a round stops paying for its step scale; halving on a
    // fixed schedule freezes the iterate when the valley is longer than one
    // round can walk.
    if (last_improve < 0.1 * c * lip) c *= 0.5;
  }

  out.iterations = used;
  out.converged = (c <= c_stop);
  out.gap_estimate = std::max(0.0, last_improve) + 2.0 * c * lip;
  if (out.best_value <= 0.0) {  // an iterate covered every target exactly
    out.converged = true;
    out.gap_estimate = 0.0;
  }
  return out;
}

// Wolfe's minimum-norm-point algorithm over conv{G[0..m-1]} in R^n. The
// corral stays small (at most the affine dimension plus one), each affine
// centering is a dense KKT solve of size |corral|+1, and termination is
// finite, so the result is exact up to round-off. A first-order scheme is
// not enough here: the min-norm element can be orders of magnitude shorter
// than the vertices, and any O(1/k) residual buries it.
std::vector<double> min_norm_point(const std::vector<std::vector<double>>& G,
                                   std::size_t n) {
  const std::size_t m = G.size();
  auto dotv = [n](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += a[j] * b[j];
    return s;
  };
  std::vector<double> gram(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      gram[i * m + j] = gram[j * m + i] = dotv(G[i], G[j]);
    }
  }

  std::size_t start = 0;
  for (std::size_t i = 1; i < m; ++i) {
    if (gram[i * m + i] < gram[start * m + start]) start = i;
  }
  std::vector<std::size_t> corral{start};
  std::vector<double> lam{1.0};
  std::vector<double> w = G[start];

  const int major_cap = static_cast<int>(3 * m) + 40;
  for (int major = 0; major < major_cap; ++major) {
    const double ww = dotv(w, w);
    std::size_t jmin = 0;
    double dmin = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      double dj = 0.0;
      for (std::size_t a = 0; a < corral.size(); ++a) dj += lam[a] * gram[corral[a] * m + j];
      if (j == 0 || dj < dmin) {
        dmin = dj;
        jmin = j;
      }
    }
    if (dmin >= ww - 1e-14 * std::max(1.0, ww)) break;  // no vertex improves w
    bool present = false;
    for (std::size_t a : corral) present = present || (a == jmin);
    if (present) break;  // round-off stall
    corral.push_back(jmin);
    lam.push_back(0.0);

    for (std::size_t minor = 0; minor <= m; ++minor) {
      // affine min-norm over the corral: KKT system [[M 1][1^T 0]] [nu mu] = [0 1]
      const std::size_t k = corral.size();
      std::vector<double> A((k + 1) * (k + 1), 0.0);
      std::vector<double> rhs(k + 1, 0.0);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) A[i * (k + 1) + j] = gram[corral[i] * m + corral[j]];
        A[i * (k + 1) + k] = 1.0;
        A[k * (k + 1) + i] = 1.0;
      }
      rhs[k] = 1.0;
      double scale = 1.0;
      for (double v : A) scale = std::max(scale, std::fabs(v));
      bool singular = false;
      for (std::size_t col = 0; col <= k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r <= k; ++r) {
          if (std::fabs(A[r * (k + 1) + col]) > std::fabs(A[piv * (k + 1) + col])) piv = r;
        }
        if (std::fabs(A[piv * (k + 1) + col]) <= 1e-13 * scale) {
          singular = true;
          break;
        }
        if (piv != col) {
          for (std::size_t cc = 0; cc <= k; ++cc) std::swap(A[piv * (k + 1) + cc], A[col * (k + 1) + cc]);
          std::swap(rhs[piv], rhs[col]);
        }
        for (std::size_t r = col + 1; r <= k; ++r) {
          const double fmul = A[r * (k + 1) + col] / A[col * (k + 1) + col];
          if (fmul == 0.0) continue;
          for (std::size_t cc = col; cc <= k; ++cc) A[r * (k + 1) + cc] -= fmul * A[col * (k + 1) + cc];
          rhs[r] -= fmul * rhs[col];
        }
      }
      if (singular) {
        minor = m + 1;  // keep the current clipped iterate
        break;
      }
      std::vector<double> nu(k + 1);
      for (std::size_t r = k + 1; r-- > 0;) {
        double s = rhs[r];
        for (std::size_t cc = r + 1; cc <= k; ++cc) s -= A[r * (k + 1) + cc] * nu[cc];
        nu[r] = s / A[r * (k + 1) + r];
      }
      nu.resize(k);

      bool inside = true;
      for (double v : nu) inside = inside && v >= -1e-12;
      if (inside) {
        double sum = 0.0;
        for (double& v : nu) {
          v = std::max(0.0, v);
          sum += v;
        }
        for (double& v : nu) v /= sum;
        lam = nu;
        break;
      }
      double theta = 1.0;
      for (std::size_t a = 0; a < k; ++a) {
        if (nu[a] <= 0.0 && lam[a] > nu[a]) theta = std::min(theta, lam[a] / (lam[a] - nu[a]));
      }
      for (std::size_t a = 0; a < k; ++a) lam[a] += theta * (nu[a] - lam[a]);
      for (std::size_t a = k; a-- > 0;) {
        if (lam[a] <= 1e-14) {
          lam.erase(lam.begin() + static_cast<std::ptrdiff_t>(a));
          corral.erase(corral.begin() + static_cast<std::ptrdiff_t>(a));
        }
      }
    }

    std::fill(w.begin(), w.end(), 0.0);
    for (std::size_t a = 0; a < corral.size(); ++a) {
      for (std::size_t j = 0; j < n; ++j) w[j] += lam[a] * G[corral[a]][j];
    }
  }
  return w;
}

// Exact line searches along vertex and edge directions of the simplex from
// the incumbent. The subgradient phase lands near the optimum but its steps
// live in weight space, where a thin point configuration crushes one center
// direction; the 1-d searches are immune to that scaling and finish the job.
// Returns the improved objective value; `t` is updated in place.
double polish_on_simplex(MinimaxProblem& problem, std::vector<double>& t, double f_best,
                         int eval_budget, double stop_gain, int& evals_used) {
  const std::size_t nh = t.size();
  std::vector<double> trial(nh);
  int evals = 0;

  auto eval_line = [&](const std::vector<double>& base, std::size_t add, std::size_t sub,
                       bool vertex, double theta) {
    if (vertex) {
      for (std::size_t j = 0; j < nh; ++j) trial[j] = (1.0 - theta) * base[j];
      trial[add] += theta;
    } else {
      trial = base;
      trial[add] += theta;
      trial[sub] -= theta;
    }
    problem.center_from_weights(trial);
    ++evals;
    return problem.objective();
  };

  // Steepest-descent step for the max: line search along minus the min-norm
  // element of the active subdifferential. Edge directions alone stall in the
  // valley where two distances tie, because leaving the tie is uphill both
  // ways; the min-norm direction follows the tie.
  auto tie_step = [&]() -> bool {
    problem.center_from_weights(t);
    const std::size_t nt = problem.targets.size();
    double fcur = 0.0;
    std::vector<double> d(nt);
    for (std::size_t i = 0; i < nt; ++i) {
      d[i] = problem.distance_to(i);
      fcur = std::max(fcur, d[i]);
    }
    ++evals;
    if (!(fcur > 0.0)) return false;

    const double band = std::max(1e-12, 1e-7 * fcur);
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < nt && active.size() < 16; ++i) {
      if (d[i] >= fcur - band) active.push_back(i);
    }
    if (active.empty()) return false;

    // Coordinates already on the boundary stay frozen; the vertex sweep is
    // the path off a face, the tie step only slides along one.
    std::vector<char> frozen(nh, 0);
    std::size_t nfree = 0;
    for (std::size_t j = 0; j < nh; ++j) {
      frozen[j] = t[j] <= 1e-13 ? 1 : 0;
      if (!frozen[j]) ++nfree;
    }
    if (nfree < 2) return false;

    std::vector<std::vector<double>> G(active.size());
    double gscale = 0.0;
    for (std::size_t a = 0; a < active.size(); ++a) {
      problem.gradient_for(active[a], d[active[a]], G[a]);
      double mean = 0.0;
      for (std::size_t j = 0; j < nh; ++j) {
        if (frozen[j]) {
          G[a][j] = 0.0;
        } else {
          mean += G[a][j];
        }
      }
      mean /= static_cast<double>(nfree);
      double n2 = 0.0;
      for (std::size_t j = 0; j < nh; ++j) {
        if (!frozen[j]) G[a][j] -= mean;  // tangent to the face's own simplex
        n2 += G[a][j] * G[a][j];
      }
      gscale = std::max(gscale, std::sqrt(n2));
    }
    if (!(gscale > 0.0)) return false;

    std::vector<double> w = min_norm_point(G, nh);
    double wn = 0.0;
    for (double x : w) wn += x * x;
    wn = std::sqrt(wn);
    if (!(wn > 1e-11 * gscale)) return false;  // stationary on this face

    std::vector<double> dir(nh);
    for (std::size_t j = 0; j < nh; ++j) dir[j] = -w[j] / wn;
    double theta_max = 2.0;
    for (std::size_t j = 0; j < nh; ++j) {
      if (dir[j] < 0.0) theta_max = std::min(theta_max, t[j] / -dir[j]);
    }
    if (!(theta_max > 1e-13)) return false;  // pinned to this face

    std::vector<double> base = t;
    auto eval_dir = [&](double theta) {
      for (std::size_t j = 0; j < nh; ++j) trial[j] = std::max(0.0, base[j] + theta * dir[j]);
      problem.center_from_weights(trial);
      ++evals;
      return problem.objective();
    };
    double lo = 0.0, hi = theta_max;
    double best_theta = 0.0, best_f = f_best;
    for (int it = 0; it < 45 && hi - lo > 1e-13 && evals + 2 <= eval_budget; ++it) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      const double f1 = eval_dir(m1);
      const double f2 = eval_dir(m2);
      if (f1 < best_f) {
        best_f = f1;
        best_theta = m1;
      }
      if (f2 < best_f) {
        best_f = f2;
        best_theta = m2;
      }
      if (f1 < f2) {
        hi = m2;
      } else {
        lo = m1;
      }
    }
    if (best_f < f_best) {
      eval_dir(best_theta);
      t = project_to_simplex(trial);
      f_best = best_f;
      return true;
    }
    return false;
  };

  bool improved = true;
  while (improved && evals < eval_budget) {
    improved = false;
    const double sweep_start = f_best;
    for (std::size_t a = 0; a < nh && evals < eval_budget; ++a) {
      for (std::size_t b = 0; b <= a && evals < eval_budget; ++b) {
        const bool vertex = (a == b);
        double lo, hi;
        if (vertex) {
          if (t[a] >= 1.0) continue;
          lo = -t[a] / (1.0 - t[a]);
          hi = 1.0;
        } else {
          lo = -t[a];
          hi = t[b];
        }
        if (!(hi - lo > 1e-14)) continue;
        std::vector<double> base = t;
        double best_theta = 0.0;
        double best_f = f_best;
        for (int it = 0; it < 45 && hi - lo > 1e-13 && evals + 2 <= eval_budget; ++it) {
          const double m1 = lo + (hi - lo) / 3.0;
          const double m2 = hi - (hi - lo) / 3.0;
          const double f1 = eval_line(base, a, b, vertex, m1);
          const double f2 = eval_line(base, a, b, vertex, m2);
          if (f1 < best_f) {
            best_f = f1;
            best_theta = m1;
          }
          if (f2 < best_f) {
            best_f = f2;
            best_theta = m2;
          }
          if (f1 < f2) {
            hi = m2;
          } else {
            lo = m1;
          }
        }
        if (best_f < f_best) {
          eval_line(base, a, b, vertex, best_theta);
          t = trial;
          t = project_to_simplex(std::move(t));  // shed rounding dust
          f_best = best_f;
          improved = true;
        }
      }
    }
    while (evals < eval_budget && tie_step()) improved = true;
    if (sweep_start - f_best <= stop_gain) break;
  }
  problem.center_from_weights(t);
  evals_used = evals;
  return f_best;
}

ChebyshevSolution solve_hull(const PointSet& targets, const PointSet& hull,
                             const SolverConfig& cfg) {
  if (!(targets.space() == hull.space())) {
    throw std::invalid_argument("radius_over_hull: targets and hull live in different spaces");
  }
  const std::size_t nh = hull.size();
  MinimaxProblem problem(targets.space(), targets.points(), &hull.points());

  ChebyshevSolution sol;
  if (nh == 1) {
    sol.weights = SimplexWeights::uniform(1);
    sol.center = hull[0];
    problem.y = hull[0].coeffs;
    sol.radius = problem.objective();
    sol.gap_estimate = 0.0;
    sol.converged = true;
    return sol;
  }

  // Lipschitz bound for the objective under an l2 step on the weights:
  // a zero-sum weight change dt moves the center by at most ||dt||_1 * D.
  double hull_diam = diameter(hull);
  const double lip = std::sqrt(static_cast<double>(nh)) * hull_diam;

  auto set_center = [&](const std::vector<double>& t) { problem.center_from_weights(t); };
  auto project = [](std::vector<double>& t) { t = project_to_simplex(std::move(t)); };

  std::vector<double> t0(nh, 1.0 / static_cast<double>(nh));
  LoopResult run = subgradient_loop(problem, t0, cfg.step, lip, cfg, set_center, project);

  if (cfg.restarts > 0) {
    std::mt19937_64 rng(cfg.seed);
    for (int r = 0; r < cfg.restarts; ++r) {
      std::vector<double> start(nh);
      double sum = 0.0;
      for (double& s : start) {
        s = -std::log(1.0 - detail::uniform_unit(rng));
        sum += s;
      }
      for (double& s : start) s = (sum > 0.0) ? s / sum : 1.0 / static_cast<double>(nh);
      LoopResult alt = subgradient_loop(problem, start, cfg.step, lip, cfg, set_center, project);
      run.iterations += alt.iterations;
      if (alt.best_value < run.best_value) {
        alt.iterations = run.iterations;
        run = std::move(alt);
      }
    }
  }

  if (run.best_value > 0.0) {
    int polish_evals = 0;
    run.best_value = polish_on_simplex(problem, run.best_arg, run.best_value,
                                       std::min(20000, cfg.max_iters), 0.1 * cfg.tolerance,
                                       polish_evals);
    run.iterations += polish_evals;
  }

  SimplexWeights w{run.best_arg};
  Point center = combine(hull, w);
  problem.y = center.coeffs;
  sol.radius = problem.objective();  // exact value at the returned center
  sol.center = std::move(center);
  sol.weights = std::move(w);
  sol.iterations = run.iterations;
  sol.gap_estimate = run.gap_estimate;
  sol.converged = run.converged;
  return sol;
}

}  // namespace

ChebyshevSolution radius_over_hull(const PointSet& targets, const PointSet& hull,
                                   const SolverConfig& cfg) {
  return solve_hull(targets, hull, cfg);
}

ChebyshevSolution relative_radius(const PointSet& points, const SolverConfig& cfg) {
  return solve_hull(points, points, cfg);
}

ChebyshevSolution ambient_radius(const PointSet& points, const SolverConfig& cfg) {
  MinimaxProblem problem(points.space(), points.points(), nullptr);

  // Two starts: the barycenter, and the hull-restricted solution. Keeping the
  // better one makes ambient <= relative hold under solver error, not just in
  // exact arithmetic.
  ChebyshevSolution constrained = relative_radius(points, cfg);
  Point bary = barycenter(points);

  problem.y = bary.coeffs;
  double f_bary = problem.objective();
  const bool bary_start = f_bary <= constrained.radius;
  std::vector<double> z0 = bary_start ? bary.coeffs : constrained.center.coeffs;

  // Step scale: coefficient-space scatter around the start.
  double scatter = 0.0;
  for (const Point& x : points.points()) {
    double s2 = 0.0;
    for (std::size_t k = 0; k < z0.size(); ++k) {
      double d = x[k] - z0[k];
      s2 += d * d;
    }
    scatter = std::max(scatter, std::sqrt(s2));
  }

  // |F(z) - F(z')| <= || z - z' ||_{p,mu} <= lip * ||z - z'||_2.
  const double p = points.space().p();
  double mu_max = 0.0;
  for (double mu : points.space().cells()) mu_max = std::max(mu_max, mu);
  double lip = std::pow(mu_max, 1.0 / p);
  if (p < 2.0) {
    lip *= std::pow(static_cast<double>(points.space().dim()), 1.0 / p - 0.5);
  }

  auto set_center = [&](const std::vector<double>& z) { problem.y = z; };
  auto project = [](std::vector<double>&) {};

  SolverConfig acfg = cfg;
  acfg.step = std::max(cfg.step * scatter, 1e-12);
  LoopResult run = subgradient_loop(problem, z0, acfg.step, lip, acfg, set_center, project);

  ChebyshevSolution sol;
  if (constrained.radius < run.best_value) {
    sol.radius = constrained.radius;
    sol.center = constrained.center;
  } else {
    sol.center = Point(run.best_arg);
    problem.y = sol.center.coeffs;
    sol.radius = problem.objective();
  }
  sol.weights = std::nullopt;
  sol.iterations = run.iterations + constrained.iterations;
  sol.gap_estimate = run.gap_estimate;
  sol.converged = run.converged && constrained.converged;
  return sol;
}

EquidistantCore equidistant_core(const PointSet& points, const SolverConfig& cfg) {
  if (points.size() < 2) {
    throw std::invalid_argument("equidistant_core: need at least 2 points");
  }

  EquidistantCore out;
  std::vector<std::size_t> current(points.size());
  for (std::size_t i = 0; i < current.size(); ++i) current[i] = i;

  // The survivor set shrinks strictly between rounds, so the guard can only
  // trip if tolerance jitter stalls the loop; then the best round wins.
  const int max_rounds = static_cast<int>(points.size()) + 2;
  double best_radius = -1.0;
  EquidistantCore best;

  for (int round = 1; round <= max_rounds; ++round) {
    PointSet sub = points.subset(current);
    ChebyshevSolution sol = relative_radius(sub, cfg);

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < current.size(); ++i) {
      double d = distance(points.space(), sub[i], sol.center);
      if (d >= sol.radius - cfg.active_tol) keep.push_back(current[i]);
    }
    if (keep.empty()) keep = current;  // cannot happen (the max attains), belt and braces

    out.indices = current;
    out.solution = sol;
    out.rounds = round;
    if (sol.radius > best_radius) {
      best_radius = sol.radius;
      best = out;
    }
    if (keep.size() == current.size()) {
      out.cycled = false;
      return out;
    }
    current = std::move(keep);
  }

  best.cycled = true;
  return best;
}

}  // namespace lpx

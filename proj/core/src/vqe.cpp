// Copyright 2026 swapnet contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swapnet/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "swapnet/rng.hpp"
#include "swapnet/statevector.hpp"

namespace swapnet {

void VqeConfig::validate() const {
  if (max_iters < 1) throw std::invalid_argument("vqe: max_iters must be >= 1");
  if (init_scale < 0.0)
    throw std::invalid_argument("vqe: init_scale must be >= 0");
  if (tol <= 0.0) throw std::invalid_argument("vqe: tol must be > 0");
}

std::vector<double> central_difference_gradient(const Objective& f,
                                                const std::vector<double>& x,
                                                double step) {
  std::vector<double> g(x.size());
  std::vector<double> p = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    p[i] = x[i] + step;
    double fp = f(p);
    p[i] = x[i] - step;
    double fm = f(p);
    p[i] = x[i];
    g[i] = (fp - fm) / (2 * step);
  }
  return g;
}

namespace {

// Budget-limited objective wrapper recording the evaluation trace.
class TracedObjective {
 public:
  TracedObjective(Objective f, int budget)
      : f_(std::move(f)), budget_(budget) {}

  double operator()(const std::vector<double>& x) {
    if (evals_ >= budget_) throw BudgetExhausted{};
    ++evals_;
    double v = f_(x);
    trace_.push_back(v);
    if (v < best_value_) {
      best_value_ = v;
      best_point_ = x;
    }
    return v;
  }

  struct BudgetExhausted {};

  int evals() const { return evals_; }
  double best_value() const { return best_value_; }
  const std::vector<double>& best_point() const { return best_point_; }
  const std::vector<double>& trace() const { return trace_; }

 private:
  Objective f_;
  int budget_;
  int evals_ = 0;
  double best_value_ = std::numeric_limits<double>::infinity();
  std::vector<double> best_point_;
  std::vector<double> trace_;
};

// Standard Nelder-Mead with reflection/expansion/contraction/shrink.
void nelder_mead(TracedObjective& f, std::vector<double> x0, double tol) {
  const std::size_t n = x0.size();
  const double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
  const double init_step = 0.1;

  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  for (std::size_t i = 1; i <= n; ++i) pts[i][i - 1] += init_step;
  for (std::size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);

  std::vector<std::size_t> order(n + 1);
  for (;;) {
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return vals[a] < vals[b]; });
    if (vals[order[n]] - vals[order[0]] < tol) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t i = 0; i < n; ++i) centroid[i] += pts[order[r]][i] / n;

    auto affine = [&](double t) {
      std::vector<double> p(n);
      for (std::size_t i = 0; i < n; ++i)
        p[i] = centroid[i] + t * (centroid[i] - pts[order[n]][i]);
      return p;
    };

    auto reflected = affine(kReflect);
    double fr = f(reflected);
    if (fr < vals[order[0]]) {
      auto expanded = affine(kExpand);
      double fe = f(expanded);
      if (fe < fr) {
        pts[order[n]] = expanded;
        vals[order[n]] = fe;
      } else {
        pts[order[n]] = reflected;
        vals[order[n]] = fr;
      }
    } else if (fr < vals[order[n - 1]]) {
      pts[order[n]] = reflected;
      vals[order[n]] = fr;
    } else {
      auto contracted = affine(fr < vals[order[n]] ? kContract : -kContract);
      double fc = f(contracted);
      if (fc < std::min(fr, vals[order[n]])) {
        pts[order[n]] = contracted;
        vals[order[n]] = fc;
      } else {
        for (std::size_t r = 1; r <= n; ++r) {
          auto& p = pts[order[r]];
          for (std::size_t i = 0; i < n; ++i)
            p[i] = pts[order[0]][i] + kShrink * (p[i] - pts[order[0]][i]);
          vals[order[r]] = f(p);
        }
      }
    }
  }
}

// Limited-memory BFGS with central finite-difference gradients and Armijo
// backtracking. Parameters are unbounded (angles are periodic).
void lbfgs(TracedObjective& f, std::vector<double> x, double tol) {
  const std::size_t n = x.size();
  const int memory = 10;
  const double fd_step = 1e-4;
  const double armijo = 1e-4;

  auto grad = [&](const std::vector<double>& p) {
    return central_difference_gradient([&f](const std::vector<double>& q) { return f(q); },
                                       p, fd_step);
  };

  double fx = f(x);
  auto g = grad(x);
  std::deque<std::vector<double>> s_hist, y_hist;
  std::deque<double> rho_hist;

  int stall = 0;
  for (;;) {
    // Two-loop recursion.
    std::vector<double> q = g;
    std::vector<double> alpha(s_hist.size());
    for (int i = static_cast<int>(s_hist.size()) - 1; i >= 0; --i) {
      double a = rho_hist[i] *
                 std::inner_product(s_hist[i].begin(), s_hist[i].end(),
                                    q.begin(), 0.0);
      alpha[i] = a;
      for (std::size_t k = 0; k < n; ++k) q[k] -= a * y_hist[i][k];
    }
    double gamma = 1.0;
    if (!s_hist.empty()) {
      double sy = std::inner_product(s_hist.back().begin(), s_hist.back().end(),
                                     y_hist.back().begin(), 0.0);
      double yy = std::inner_product(y_hist.back().begin(), y_hist.back().end(),
                                     y_hist.back().begin(), 0.0);
      if (yy > 0) gamma = sy / yy;
    }
    for (auto& v : q) v *= gamma;
    for (std::size_t i = 0; i < s_hist.size(); ++i) {
      double b = rho_hist[i] *
                 std::inner_product(y_hist[i].begin(), y_hist[i].end(),
                                    q.begin(), 0.0);
      for (std::size_t k = 0; k < n; ++k) q[k] += (alpha[i] - b) * s_hist[i][k];
    }
    // q is now the ascent-scaled gradient; descend along -q.
    double gq = std::inner_product(g.begin(), g.end(), q.begin(), 0.0);
    if (gq <= 0) {  // not a descent direction, fall back to steepest descent
      q = g;
      gq = std::inner_product(g.begin(), g.end(), g.begin(), 0.0);
    }
    if (std::sqrt(gq) < tol) break;

    double step = 1.0;
    std::vector<double> xn(n);
    double fn = fx;
    bool moved = false;
    for (int ls = 0; ls < 30; ++ls) {
      for (std::size_t k = 0; k < n; ++k) xn[k] = x[k] - step * q[k];
      fn = f(xn);
      if (fn <= fx - armijo * step * gq) {
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;

    auto gn = grad(xn);
    std::vector<double> s(n), y(n);
    for (std::size_t k = 0; k < n; ++k) {
      s[k] = xn[k] - x[k];
      y[k] = gn[k] - g[k];
    }
    double sy = std::inner_product(s.begin(), s.end(), y.begin(), 0.0);
    if (sy > 1e-12) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(y));
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > memory) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    stall = (fx - fn < tol) ? stall + 1 : 0;
    x = std::move(xn);
    fx = fn;
    g = std::move(gn);
    if (stall >= 3) break;
  }
}

}  // namespace

VqeResult run_vqe(const Circuit& c, const PauliSum& hm, const VqeConfig& cfg) {
  cfg.validate();
  if (c.n_qubits != hm.n_qubits)
    throw std::invalid_argument("vqe: circuit/Hamiltonian qubit mismatch");
  c.validate();

  Rng rng(cfg.seed);
  std::vector<double> x0(c.n_params);
  for (auto& v : x0) v = cfg.init_scale * rng.next_symmetric();

  Objective objective = [&](const std::vector<double>& p) {
    return expectation(simulate(c, p), hm);
  };
  TracedObjective traced(objective, cfg.max_iters);

  try {
    if (c.n_params == 0) {
      traced(x0);
    } else if (cfg.optimizer == Optimizer::simplex_free) {
      nelder_mead(traced, x0, cfg.tol);
    } else {
      lbfgs(traced, x0, cfg.tol);
    }
  } catch (const TracedObjective::BudgetExhausted&) {
    // budget spent; best-so-far already recorded
  }

  VqeResult result;
  result.best_energy = traced.best_value();
  result.best_params = traced.best_point();
  result.energy_trace = traced.trace();
  result.iterations_used = traced.evals();
  result.circuit_metrics = metrics(c);
  return result;
}

double energy_error(const VqeResult& result, double reference) {
  if (!std::isfinite(reference))
    throw std::invalid_argument("energy_error: non-finite reference");
  return result.best_energy - reference;
}

MedianIqr median_iqr(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median_iqr: empty input");
  std::sort(values.begin(), values.end());
  auto quantile = [&](double q) {
    double pos = q * (static_cast<double>(values.size()) - 1);
    auto lo = static_cast<std::size_t>(pos);
    auto hi = std::min(lo + 1, values.size() - 1);
    double frac = pos - static_cast<double>(lo);
    return values[lo] * (1 - frac) + values[hi] * frac;
  };
  return {quantile(0.5), quantile(0.25), quantile(0.75)};
}

std::string VqeResult::to_json() const {
  nlohmann::json j;
  j["best_energy"] = best_energy;
  j["best_params"] = best_params;
  j["energy_trace"] = energy_trace;
  j["iterations_used"] = iterations_used;
  j["metrics"] = {{"cnot_count", circuit_metrics.cnot_count},
                  {"depth", circuit_metrics.depth},
                  {"n_params", circuit_metrics.n_params}};
  return j.dump(2) + "\n";
}

}  // namespace swapnet

#include "train/lbfgs.hpp"

#include <cmath>
#include <deque>

namespace kandae::train {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

struct Pair {
  std::vector<double> s, y;
  double rho;
};

// r = -H g by the two-loop recursion, scaled with the latest curvature pair
void two_loop(const std::deque<Pair>& hist, std::span<const double> g,
              std::vector<double>& r, std::vector<double>& alpha_buf) {
  r.assign(g.begin(), g.end());
  alpha_buf.resize(hist.size());
  for (std::size_t i = hist.size(); i-- > 0;) {
    const Pair& p = hist[i];
    alpha_buf[i] = p.rho * dot(p.s, r);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= alpha_buf[i] * p.y[j];
  }
  if (!hist.empty()) {
    const Pair& last = hist.back();
    const double gamma = 1.0 / (last.rho * dot(last.y, last.y));
    for (double& v : r) v *= gamma;
  }
  for (std::size_t i = 0; i < hist.size(); ++i) {
    const Pair& p = hist[i];
    const double beta = p.rho * dot(p.y, r);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] += (alpha_buf[i] - beta) * p.s[j];
  }
  for (double& v : r) v = -v;
}

struct Probe {
  double alpha = 0.0;
  double f = 0.0;
  std::vector<double> x, g;
  double slope = 0.0;  // g . d
};

class LineSearch {
 public:
  LineSearch(const Objective& obj, std::span<const double> x0,
             std::span<const double> d, double f0, double slope0, int budget)
      : obj_(obj), x0_(x0), d_(d), f0_(f0), slope0_(slope0), budget_(budget) {}

  bool evaluate(double alpha, Probe& p) {
    if (evals_ >= budget_) return false;
    ++evals_;
    p.alpha = alpha;
    p.x.resize(x0_.size());
    for (std::size_t i = 0; i < x0_.size(); ++i) p.x[i] = x0_[i] + alpha * d_[i];
    p.f = obj_(p.x, p.g);
    p.slope = dot(p.g, d_);
    return true;
  }

  // strong-Wolfe search (bracket then zoom); returns true with the accepted
  // probe in `out`
  bool search(double alpha_init, double c1, double c2, Probe& out) {
    c1_ = c1;
    c2_ = c2;
    Probe prev;
    prev.alpha = 0.0;
    prev.f = f0_;
    prev.slope = slope0_;
    double alpha = alpha_init;
    bool first = true;
    while (true) {
      Probe cur;
      if (!evaluate(alpha, cur)) return false;
      if (cur.f > f0_ + c1_ * cur.alpha * slope0_ || (!first && cur.f >= prev.f))
        return zoom(prev, cur, out);
      if (std::abs(cur.slope) <= -c2_ * slope0_) {
        out = std::move(cur);
        return true;
      }
      if (cur.slope >= 0.0) return zoom(cur, prev, out);
      prev = std::move(cur);
      alpha *= 2.0;
      first = false;
      if (alpha > 1e12) return false;
    }
  }

 private:
  bool zoom(Probe lo, Probe hi, Probe& out) {
    while (true) {
      Probe mid;
      if (!evaluate(0.5 * (lo.alpha + hi.alpha), mid)) return false;
      if (mid.f > f0_ + c1_ * mid.alpha * slope0_ || mid.f >= lo.f) {
        hi = std::move(mid);
      } else {
        if (std::abs(mid.slope) <= -c2_ * slope0_) {
          out = std::move(mid);
          return true;
        }
        if (mid.slope * (hi.alpha - lo.alpha) >= 0.0) hi = std::move(lo);
        lo = std::move(mid);
      }
      if (std::abs(hi.alpha - lo.alpha) < 1e-16 * std::max(1.0, std::abs(lo.alpha)))
        return false;
    }
  }

  const Objective& obj_;
  std::span<const double> x0_;
  std::span<const double> d_;
  double f0_, slope0_;
  int budget_;
  int evals_ = 0;
  double c1_ = 1e-4, c2_ = 0.9;
};

}  // namespace

LbfgsReport lbfgs_minimize(std::vector<double>& x, const Objective& objective,
                           const LbfgsOptions& opt, std::size_t epochs,
                           std::size_t eval_every, const SnapshotFn& snapshot) {
  require(!x.empty(), "lbfgs: empty parameter vector");

  LbfgsReport report;
  std::vector<double> g;
  double f = objective(x, g);
  require(g.size() == x.size(), "lbfgs: gradient length mismatch");
  double gnorm = norm2(g);
  if (snapshot) snapshot(0, f, gnorm);
  std::size_t last_snap = 0;

  std::deque<Pair> hist;
  std::vector<double> d, alpha_buf;
  int fail_streak = 0;

  auto finish = [&](const char* status) {
    report.status = status;
    report.final_loss = f;
    report.final_grad_norm = gnorm;
    if (snapshot && report.iterations > 0 && last_snap != report.iterations)
      snapshot(report.iterations, f, gnorm);
    return report;
  };

  if (gnorm < opt.grad_tol) return finish("grad_tol");

  for (std::size_t iter = 1; iter <= epochs; ++iter) {
    two_loop(hist, g, d, alpha_buf);
    double slope = dot(g, d);
    if (!(slope < 0.0)) {
      // defective direction; restart from steepest descent
      hist.clear();
      for (std::size_t i = 0; i < g.size(); ++i) d[i] = -g[i];
      slope = -gnorm * gnorm;
    }

    const double alpha_init =
        hist.empty() ? std::min(1.0, 1.0 / std::max(gnorm, 1e-12)) : 1.0;

    LineSearch ls(objective, x, d, f, slope, opt.max_line_search);
    Probe accepted;
    bool ok = ls.search(alpha_init, opt.c1, opt.c2, accepted);

    if (!ok) {
      // fallback: plain gradient halving until simple decrease
      report.line_search_failures += 1;
      ++fail_streak;
      std::vector<double> sd(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) sd[i] = -g[i];
      LineSearch fb(objective, x, sd, f, -gnorm * gnorm, opt.max_line_search);
      double a = 1.0 / std::max(gnorm, 1.0);
      bool got = false;
      Probe p;
      for (int h = 0; h < opt.max_line_search; ++h, a *= 0.5) {
        if (!fb.evaluate(a, p)) break;
        if (p.f < f) {
          got = true;
          break;
        }
      }
      if (!got || fail_streak >= 10) {
        report.iterations = iter - 1;
        // refresh the objective's state at the current iterate so any final
        // snapshot reflects it rather than the last rejected trial
        f = objective(x, g);
        gnorm = norm2(g);
        return finish("line_search");
      }
      hist.clear();
      accepted = std::move(p);
    } else {
      fail_streak = 0;
    }

    const double f_prev = f;
    std::vector<double> s(x.size()), yv(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      s[i] = accepted.x[i] - x[i];
      yv[i] = accepted.g[i] - g[i];
    }
    x = accepted.x;
    f = accepted.f;
    g = accepted.g;
    gnorm = norm2(g);
    report.iterations = iter;

    const double sy = dot(s, yv);
    if (sy > 1e-10 * norm2(s) * norm2(yv)) {
      hist.push_back({std::move(s), std::move(yv), 1.0 / sy});
      if (hist.size() > opt.history) hist.pop_front();
    }

    if (snapshot && iter % eval_every == 0) {
      snapshot(iter, f, gnorm);
      last_snap = iter;
    }

    if (gnorm < opt.grad_tol) return finish("grad_tol");
    if (std::abs(f_prev - f) < opt.loss_tol) return finish("loss_tol");
  }
  report.iterations = epochs;
  return finish("epochs");
}

}  // namespace kandae::train

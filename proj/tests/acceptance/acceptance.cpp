// Runs every acceptance criterion at its stated tolerance and prints one
// PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lattice_hardy/cli.hpp"
#include "lattice_hardy/constants.hpp"
#include "lattice_hardy/correspondence.hpp"
#include "lattice_hardy/estimator.hpp"
#include "lattice_hardy/lattice.hpp"
#include "lattice_hardy/seeding.hpp"

using namespace lattice_hardy;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Suite {
 public:
  void run(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_s) {
      o.pass = false;
      o.detail += "; over runtime budget of " + std::to_string(budget_s) + " s";
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << o.detail << "; "
              << std::to_string(secs) << " s]" << std::endl;
    if (!o.pass) ++failures_;
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

Rational q(long long a, long long b) { return Rational(a) / Rational(b); }

Outcome closed_forms() {
  int checked = 0;
  for (int d = 3; d <= 200; ++d, ++checked) {
    if (weighted_hardy_constant_exact(0, d) != q(1LL * d * (d - 2) * (d - 2), 3LL * d * d + 8 * d + 4)) {
      return {false, "H(0," + std::to_string(d) + ") differs from d(d-2)^2/(3d^2+8d+4)"};
    }
  }
  for (int d = 8; d <= 200; ++d, ++checked) {
    if (weighted_hardy_rellich_constant_exact(0, d) != q(1LL * d * d, 3LL * d + 20)) {
      return {false, "HR(0," + std::to_string(d) + ") differs from d^2/(3d+20)"};
    }
  }
  return {true, std::to_string(checked) + " exact rational comparisons"};
}

Outcome correspondence() {
  double worst = 0.0;
  int count = 0;
  for (int d = 1; d <= 4; ++d) {
    for (int k = 0; k <= 2; ++k) {
      for (auto kind : {InequalityKind::hardy, InequalityKind::rellich}) {
        for (int i = 0; i < 50; ++i) {
          const auto u = random_lattice_function(d, 2, derive_seed(0xc0ffee + 100 * d + 10 * k, i));
          const CorrespondenceKind ck{kind, k};
          worst = std::max({worst, verify_norm_identity(u, ck).rel_err, verify_form_identity(u, ck).rel_err});
          count += 2;
        }
      }
    }
  }
  std::ostringstream s;
  s << count << " identities, max rel_err " << worst;
  return {worst < 1e-10, s.str()};
}

struct TorusConfig {
  std::vector<std::string> args;
  bool expect_domain_error = false;
};

Outcome torus_batches() {
  const std::vector<TorusConfig> configs = {
      {{"--theorem", "hardy", "--dim", "3", "--k", "0"}},
      {{"--theorem", "hardy", "--dim", "4", "--k", "0"}},
      {{"--theorem", "hardy", "--dim", "3", "--k", "-1"}, true},
      {{"--theorem", "hardy", "--dim", "4", "--k", "-1"}, true},
      {{"--theorem", "hardy", "--dim", "5", "--k", "-1"}},
      {{"--theorem", "hr", "--dim", "8", "--k", "0"}},
      {{"--theorem", "rellich", "--dim", "5", "--k", "0"}},
      {{"--theorem", "rellich", "--dim", "6", "--k", "0"}},
      {{"--theorem", "lemma34", "--dim", "6", "--alpha", "0"}},
      {{"--theorem", "higher", "--form", "laplacian", "--m", "1", "--k", "0", "--dim", "5"}},
      {{"--theorem", "higher", "--form", "gradient", "--m", "1", "--k", "0", "--dim", "7"}},
  };
  std::ostringstream detail;
  bool pass = true;
  int polys = 0;
  for (const auto& c : configs) {
    std::vector<std::string> argv = {"lattice-hardy", "verify-torus", "--batch", "100", "--seed", "20240601"};
    argv.insert(argv.end(), c.args.begin(), c.args.end());
    std::ostringstream out, err;
    const int code = cli::run(argv, out, err);
    std::string label;
    for (const auto& a : c.args) label += (label.empty() ? "" : " ") + a;
    if (code == cli::kExitFalsified) {
      pass = false;
      detail << "falsified: " << label << "; ";
    } else if (c.expect_domain_error) {
      if (code != cli::kExitUsage) {
        pass = false;
        detail << "expected domain rejection: " << label << "; ";
      }
    } else if (code != cli::kExitOk) {
      pass = false;
      detail << "error (" << err.str() << "): " << label << "; ";
    } else {
      polys += 100;
    }
  }
  detail << polys << " polynomials verified in " << configs.size() - 2
         << " configurations, k=-1 at d=3,4 rejected as outside the domain";
  return {pass, detail.str()};
}

Outcome brackets() {
  std::ostringstream s;
  bool pass = true;
  auto check = [&](int k, InequalityKind kind, const std::vector<int>& dims, int radius) {
    EstimateOptions opt;
    opt.tol = 1e-8;
    const auto table = sweep(k, kind, dims, radius, opt, 1);
    for (const auto& row : table.rows) {
      const double v = row.estimate.value;
      const bool ok = row.bracket && row.bracket->lower <= v * (1 + opt.tol) && v <= row.bracket->upper * (1 + opt.tol);
      pass = pass && ok;
      if (s.tellp() > 0) s << "; ";
      s << to_string(kind) << " d=" << row.estimate.box.dim << ": " << (row.bracket ? row.bracket->lower : NAN)
        << " <= " << v << " <= " << (row.bracket ? row.bracket->upper : NAN) << (ok ? "" : " VIOLATED");
    }
  };
  check(0, InequalityKind::hardy, {3, 4, 5, 6}, 4);
  check(1, InequalityKind::rellich, {5, 6}, 3);
  return {pass, s.str()};
}

Outcome hand_values() {
  std::ostringstream s;
  const double h = estimate_sharp_constant(0, 1, 1, InequalityKind::hardy).value;
  const double r = estimate_sharp_constant(1, 1, 1, InequalityKind::rellich).value;
  bool pass = std::abs(h - 2.0) <= 1e-10 && std::abs(r - 5.0) <= 1e-10;
  s.precision(17);
  s << "hardy d=1 R=1: " << h << ", rellich k=1 d=1 R=1: " << r << "; floor:";
  double prev = INFINITY;
  for (int radius = 1; radius <= 512; radius *= 2) {
    const double v = estimate_sharp_constant(0, 1, radius, InequalityKind::hardy).value;
    if (v < 0.25 || v > prev) pass = false;
    s << ' ' << radius << "->" << v;
    prev = v;
  }
  return {pass, s.str()};
}

Outcome slopes() {
  std::ostringstream s;
  bool pass = true;
  auto fit = [](int k, InequalityKind kind, bool dyadic) {
    std::vector<std::pair<double, double>> lo, hi;
    for (int d = 64; d <= 4096; d = dyadic ? 2 * d : d + 1) {
      const auto b = discrete_bound_bracket(k, d, kind);
      lo.emplace_back(d, b.lower);
      hi.emplace_back(d, b.upper);
    }
    return std::make_pair(fit_log_slope(lo).slope, fit_log_slope(hi).slope);
  };
  for (int k = 0; k <= 2; ++k) {
    const auto [shl, shu] = fit(k, InequalityKind::hardy, false);
    const auto [srl, sru] = fit(k, InequalityKind::rellich, false);
    const double dhl = fit(k, InequalityKind::hardy, true).first;
    const double drl = fit(k, InequalityKind::rellich, true).first;
    pass = pass && std::abs(shl - (2 * k + 1)) <= 0.05 && std::abs(srl - 2 * k) <= 0.05 &&
           std::abs(shu - (2 * k + 1)) <= 1e-9 && std::abs(sru - 2 * k) <= 1e-9;
    s << "k=" << k << ": hardy " << shl << "/" << shu << " (dyadic lower " << dhl << "), rellich " << srl << "/"
      << sru << " (dyadic lower " << drl << "); ";
  }
  s << "(lower/upper slopes, every integer d)";
  return {pass, s.str()};
}

Outcome operator_norm() {
  int count = 0;
  double worst = 0.0;  // largest form / bound
  for (int d = 2; d <= 4; ++d) {
    for (int k = 1; k <= 2; ++k) {
      for (int i = 0; i < 200; ++i) {
        const auto u = random_lattice_function(d, 2, derive_seed(0xbeef + 10 * d + k, i));
        const double mass = squared_norm(u);
        const double rb = std::pow(4.0 * d, 2 * k) * mass;
        const double hb = std::pow(4.0 * d, 2 * k + 1) * mass;
        const double rf = rellich_form(u, k);
        const double hf = dirichlet_form(u, k);
        if (rf > rb || hf > hb) return {false, "bound exceeded at d=" + std::to_string(d) + " k=" + std::to_string(k)};
        worst = std::max({worst, rf / rb, hf / hb});
        count += 2;
      }
    }
  }
  std::ostringstream s;
  s << count << " comparisons, largest form/bound " << worst;
  return {true, s.str()};
}

}  // namespace

int main() {
  Suite suite;
  suite.run(1, "closed forms of H(0,d) and HR(0,d) in exact arithmetic", 1.0, closed_forms);
  suite.run(2, "lattice/torus transfer identities, rel_err < 1e-10", 30.0, correspondence);
  suite.run(3, "torus inequalities on random polynomials, no falsification", 300.0, torus_batches);
  suite.run(4, "estimates inside the lower/upper brackets", 300.0, brackets);
  suite.run(5, "hand values and the one-dimensional floor", 30.0, hand_values);
  suite.run(6, "log-log slopes of the bracket bounds over d in [64, 4096]", 5.0, slopes);
  suite.run(7, "operator-norm bounds of the lattice forms", 10.0, operator_norm);
  std::cout << (suite.failures() == 0 ? "all criteria passed" : std::to_string(suite.failures()) + " criteria failed")
            << std::endl;
  return suite.failures();
}

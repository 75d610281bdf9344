#include "lattice_hardy/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <charconv>
#include <cmath>
#include <algorithm>
#include <exception>
#include <functional>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "lattice_hardy/constants.hpp"
#include "lattice_hardy/correspondence.hpp"
#include "lattice_hardy/errors.hpp"
#include "lattice_hardy/lattice_io.hpp"
#include "lattice_hardy/seeding.hpp"
#include "lattice_hardy/torus_verify.hpp"

namespace lattice_hardy::cli {
namespace {

using json = nlohmann::json;

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

template <class F>
void parallel_for(std::size_t count, int threads, F&& body) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

enum class Format { csv, json };

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw ArgumentError("unknown format '" + s + "' (expected csv|json)");
}

// ---------------------------------------------------------------------------
// constants / bounds

struct ConstantsArgs {
  std::string table = "hardy";
  int k = 0;
  int m = 1;
  std::string dims;
  std::string format = "csv";
};

int cmd_constants(const ConstantsArgs& a, std::ostream& out) {
  const auto dims = parse_dims(a.dims);
  const Format fmt = parse_format(a.format);
  const bool has_m = a.table == "higher" || a.table == "higher-gradient";
  std::function<double(int)> eval;
  std::string name = a.table;
  if (a.table == "hardy") {
    eval = [&](int d) { return weighted_hardy_constant(a.k, d); };
  } else if (a.table == "hardy-rellich") {
    eval = [&](int d) { return weighted_hardy_rellich_constant(a.k, d); };
  } else if (a.table == "rellich") {
    eval = [&](int d) { return weighted_rellich_constant(a.k, d); };
  } else if (a.table == "higher") {
    eval = [&](int d) { return rellich_chain_constant(a.m, a.k, d); };
  } else if (a.table == "higher-gradient") {
    eval = [&](int d) { return hardy_chain_constant(a.m, a.k, d); };
  } else if (a.table == "beta") {
    eval = [&](int d) { return rellich_beta(a.k / 2.0, d).beta; };
  } else {
    throw ArgumentError("unknown table '" + a.table + "'");
  }
  std::vector<double> values;
  for (int d : dims) values.push_back(eval(d));  // validates every row first

  if (fmt == Format::csv) {
    out << (has_m ? "name,m,k,d,value\n" : "name,k,d,value\n");
    for (std::size_t i = 0; i < dims.size(); ++i) {
      out << name << ',';
      if (has_m) out << a.m << ',';
      out << a.k << ',' << dims[i] << ',' << format_number(values[i]) << '\n';
    }
  } else {
    json rows = json::array();
    for (std::size_t i = 0; i < dims.size(); ++i) {
      json row = {{"name", name}, {"k", a.k}, {"d", dims[i]}, {"value", number(values[i])}};
      if (has_m) row["m"] = a.m;
      rows.push_back(row);
    }
    out << rows.dump() << '\n';
  }
  return kExitOk;
}

struct BoundsArgs {
  std::string kind = "hardy";
  int k = 0;
  std::string dims;
  std::string format = "csv";
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  const auto dims = parse_dims(a.dims);
  const Format fmt = parse_format(a.format);
  const InequalityKind kind = parse_inequality_kind(a.kind);
  std::vector<BoundBracket> rows;
  std::vector<std::optional<double>> quotients;
  for (int d : dims) {
    rows.push_back(discrete_bound_bracket(a.k, d, kind));
    // The test function is evaluated on the lattice, which caps the dimension.
    quotients.push_back(d <= kMaxDim ? std::optional(test_function_quotient(a.k, d, kind)) : std::nullopt);
  }
  if (fmt == Format::csv) {
    out << "kind,k,d,lower,upper,test_quotient\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out << a.kind << ',' << a.k << ',' << rows[i].d << ',' << format_number(rows[i].lower) << ','
          << format_number(rows[i].upper) << ',' << (quotients[i] ? format_number(*quotients[i]) : "") << '\n';
    }
  } else {
    json arr = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      arr.push_back({{"kind", a.kind},
                     {"k", a.k},
                     {"d", rows[i].d},
                     {"lower", number(rows[i].lower)},
                     {"upper", number(rows[i].upper)},
                     {"test_quotient", quotients[i] ? number(*quotients[i]) : json(nullptr)}});
    }
    out << arr.dump() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// estimate / sweep

json estimate_json(const SweepRow& row) {
  const EstimateResult& e = row.estimate;
  json j = {{"kind", std::string(to_string(e.kind))},
            {"k", e.k},
            {"dim", e.box.dim},
            {"radius", e.box.radius},
            {"sites", e.box.size()},
            {"value", number(e.value)},
            {"iterations", e.iterations},
            {"inner_iterations", e.inner_iterations},
            {"residual", number(e.residual)},
            {"quotient_check", number(e.quotient_check)},
            {"test_quotient", number(row.test_quotient)},
            {"contained", row.contained}};
  if (row.bracket) {
    j["lower"] = number(row.bracket->lower);
    j["upper"] = number(row.bracket->upper);
  } else {
    j["lower"] = nullptr;
    j["upper"] = nullptr;
  }
  return j;
}

struct EstimateArgs {
  int dim = 1;
  int order = 0;
  int radius = 4;
  std::string kind = "hardy";
  double tol = 1e-8;
  std::string output;
  std::string format = "json";
};

int cmd_estimate(const EstimateArgs& a, std::ostream& out) {
  const InequalityKind kind = parse_inequality_kind(a.kind);
  const Format fmt = parse_format(a.format);
  EstimateOptions opt;
  opt.tol = a.tol;
  opt.keep_vector = !a.output.empty();
  SweepTable table = sweep(a.order, kind, {a.dim}, a.radius, opt, 1);
  const SweepRow& row = table.rows.front();
  if (!a.output.empty()) save_lattice_function(a.output, row.estimate.eigenvector);
  if (fmt == Format::json) {
    out << estimate_json(row).dump() << '\n';
  } else {
    out << "kind,k,d,radius,value,lower,upper,test_quotient,iterations,residual\n";
    out << a.kind << ',' << a.order << ',' << a.dim << ',' << a.radius << ',' << format_number(row.estimate.value)
        << ',' << (row.bracket ? format_number(row.bracket->lower) : "") << ','
        << (row.bracket ? format_number(row.bracket->upper) : "") << ',' << format_number(row.test_quotient) << ','
        << row.estimate.iterations << ',' << format_number(row.estimate.residual) << '\n';
  }
  return row.contained ? kExitOk : kExitFalsified;
}

struct SweepArgs {
  std::string dims;
  int radius = 4;
  int order = 0;
  std::string kind = "hardy";
  double tol = 1e-8;
  bool fit = false;
  std::string plot_data;
  std::string format = "json";
};

std::vector<std::pair<double, double>> series_points(const SweepTable& t, int which) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& row : t.rows) {
    const double d = row.estimate.box.dim;
    if (which == 0) pts.emplace_back(d, row.estimate.value);
    if (which == 1 && row.bracket) pts.emplace_back(d, row.bracket->lower);
    if (which == 2 && row.bracket) pts.emplace_back(d, row.bracket->upper);
  }
  return pts;
}

constexpr const char* kSeriesNames[3] = {"estimate", "lower", "upper"};

int cmd_sweep(const SweepArgs& a, int threads, std::ostream& out) {
  const InequalityKind kind = parse_inequality_kind(a.kind);
  const Format fmt = parse_format(a.format);
  const auto dims = parse_dims(a.dims);
  EstimateOptions opt;
  opt.tol = a.tol;
  const SweepTable table = sweep(a.order, kind, dims, a.radius, opt, threads);

  bool all_contained = true;
  for (const auto& row : table.rows) all_contained = all_contained && row.contained;

  std::optional<SlopeFit> fit;
  if (a.fit) {
    const auto pts = series_points(table, 0);
    if (pts.size() >= 3) fit = fit_log_slope(pts);
  }
  if (fmt == Format::json) {
    json rows = json::array();
    for (const auto& row : table.rows) rows.push_back(estimate_json(row));
    json j = {{"kind", a.kind}, {"k", a.order}, {"radius", a.radius}, {"rows", rows}, {"all_contained", all_contained}};
    if (fit) j["fit"] = {{"slope", fit->slope}, {"intercept", fit->intercept}, {"r_squared", fit->r_squared}};
    out << j.dump() << '\n';
  } else {
    out << "kind,k,d,radius,value,lower,upper,test_quotient,contained\n";
    for (const auto& row : table.rows) {
      out << a.kind << ',' << a.order << ',' << row.estimate.box.dim << ',' << a.radius << ','
          << format_number(row.estimate.value) << ',' << (row.bracket ? format_number(row.bracket->lower) : "")
          << ',' << (row.bracket ? format_number(row.bracket->upper) : "") << ','
          << format_number(row.test_quotient) << ',' << (row.contained ? "true" : "false") << '\n';
    }
    if (fit) {
      out << "# fit slope=" << format_number(fit->slope) << " intercept=" << format_number(fit->intercept)
          << " r2=" << format_number(fit->r_squared) << '\n';
    }
  }
  if (!a.plot_data.empty()) {
    std::ofstream f(a.plot_data);
    if (!f) throw ArgumentError("cannot open plot data file '" + a.plot_data + "'");
    emit_plot_data(table, a.fit, f);
  }
  return all_contained ? kExitOk : kExitFalsified;
}

// ---------------------------------------------------------------------------
// verify-torus

struct TorusArgs {
  int dim = 3;
  int k = 0;
  int m = 1;
  std::string theorem = "hardy";
  std::string form = "laplacian";
  int batch = 1;
  std::uint64_t seed = 0;
  int grid = 0;
  int radius = 0;
  std::string method = "kernel";
  std::optional<double> alpha, beta, gamma;
  bool complex_coeffs = false;
  std::string format = "json";
};

json torus_json(const TorusReport& r) {
  json j = {{"theorem", r.inequality},
            {"dim", r.dim},
            {"k", r.k},
            {"m", r.m},
            {"constant", number(r.constant)},
            {"lhs", number(r.lhs)},
            {"rhs", number(r.rhs)},
            {"lhs_integral", number(r.lhs_integral)},
            {"rhs_integral", number(r.rhs_integral)},
            {"ratio", r.ratio ? number(*r.ratio) : json(nullptr)},
            {"holds", r.holds},
            {"exact", r.exact},
            {"tolerance", r.tolerance},
            {"diagnostic", number(r.diagnostic)},
            {"method", std::string(to_string(r.method))}};
  return j;
}

json lemma_json(const TwoParameterReport& r) {
  return {{"theorem", "lemma34"},
          {"dim", r.dim},
          {"alpha", r.alpha},
          {"beta", number(r.beta)},
          {"gamma", number(r.gamma)},
          {"lhs", number(r.lhs)},
          {"rhs", number(r.rhs)},
          {"coeff_gradient", number(r.coeff_gradient)},
          {"coeff_mass", number(r.coeff_mass)},
          {"gradient_term", number(r.gradient_term)},
          {"mass_term", number(r.mass_term)},
          {"remainder", number(r.remainder)},
          {"terms", {number(r.j1), number(r.j2), number(r.j3), number(r.j4), number(r.j5)}},
          {"scale", number(r.scale)},
          {"holds", r.holds},
          {"exact", r.exact},
          {"tolerance", r.tolerance},
          {"diagnostic", number(r.diagnostic)},
          {"method", std::string(to_string(r.method))}};
}

int cmd_verify_torus(const TorusArgs& a, int threads, std::ostream& out) {
  check_dimension(a.dim);
  const Format fmt = parse_format(a.format);
  if (a.batch < 0) throw ArgumentError("--batch must be non-negative");
  const int radius = a.radius > 0 ? a.radius : (a.dim <= 5 ? 2 : 1);
  VerifyOptions opt;
  opt.integrals.method = parse_integral_method(a.method);
  opt.integrals.grid_nodes = a.grid;

  const std::string& th = a.theorem;
  const double alpha = a.alpha.value_or(a.k / 2.0);
  // Validate the hypotheses before any polynomial is drawn.
  if (th == "hardy") {
    weighted_hardy_constant(a.k, a.dim);
  } else if (th == "hr") {
    weighted_hardy_rellich_constant(a.k, a.dim);
  } else if (th == "rellich") {
    weighted_rellich_constant(a.k, a.dim);
  } else if (th == "higher") {
    if (a.form == "laplacian") {
      rellich_chain_constant(a.m, a.k, a.dim);
    } else if (a.form == "gradient") {
      hardy_chain_constant(a.m, a.k, a.dim);
    } else {
      throw ArgumentError("unknown --form '" + a.form + "' (expected laplacian|gradient)");
    }
  } else if (th == "lemma34") {
    if (alpha > 0.0) throw DomainError("two-parameter inequality requires alpha <= 0");
    if (!(a.dim > -4.0 * alpha + 4.0)) throw DomainError("two-parameter inequality requires d > -4alpha+4");
    if (a.beta && !two_parameter_admissible(alpha, *a.beta)) {
      throw DomainError("two-parameter inequality requires beta^2 - beta(2alpha-1) >= 0");
    }
  } else {
    throw ArgumentError("unknown --theorem '" + th + "' (expected hardy|hr|rellich|lemma34|higher)");
  }

  const auto n = static_cast<std::size_t>(a.batch);
  std::vector<json> reports(n);
  std::vector<bool> holds(n, true);
  parallel_for(n, threads, [&](std::size_t i) {
    const std::uint64_t item_seed = derive_seed(a.seed, i);
    const TrigPoly psi = random_trig_poly(a.dim, radius, item_seed, true, !a.complex_coeffs);
    json j;
    if (th == "lemma34") {
      std::mt19937_64 rng(item_seed ^ 0xa5a5a5a5a5a5a5a5ULL);
      std::uniform_real_distribution<double> uni(0.0, 1.0);
      double beta = 0.0;
      if (a.beta) {
        beta = *a.beta;
      } else {
        const double u = uni(rng);
        const double v = uni(rng);
        beta = u < 0.5 ? 2.0 * v : (2.0 * alpha - 1.0) - 2.0 * v;
      }
      const double gamma = a.gamma ? *a.gamma : -4.0 + 8.0 * uni(rng);
      const auto r = verify_two_parameter_inequality(psi, alpha, beta, gamma, opt);
      holds[i] = r.holds;
      j = lemma_json(r);
    } else {
      TorusReport r;
      if (th == "hardy") r = verify_weighted_hardy(psi, a.k, opt);
      if (th == "hr") r = verify_weighted_hardy_rellich(psi, a.k, opt);
      if (th == "rellich") r = verify_weighted_rellich(psi, a.k, opt);
      if (th == "higher") {
        r = verify_higher_order(psi, a.m, a.k,
                                a.form == "laplacian" ? HigherOrderForm::laplacian : HigherOrderForm::gradient, opt);
      }
      holds[i] = r.holds;
      j = torus_json(r);
    }
    j["index"] = i;
    j["seed"] = a.seed;
    j["item_seed"] = item_seed;
    j["radius"] = radius;
    reports[i] = std::move(j);
  });

  bool all = true;
  if (fmt == Format::csv) out << "index,seed,theorem,dim,lhs,rhs,holds\n";
  for (std::size_t i = 0; i < n; ++i) {
    all = all && holds[i];
    if (fmt == Format::json) {
      out << reports[i].dump() << '\n';
    } else {
      const json& j = reports[i];
      out << i << ',' << a.seed << ',' << th << ',' << a.dim << ',' << format_number(j["lhs"].get<double>()) << ','
          << format_number(j["rhs"].get<double>()) << ',' << (holds[i] ? "true" : "false") << '\n';
    }
  }
  return all ? kExitOk : kExitFalsified;
}

// ---------------------------------------------------------------------------
// verify-correspondence

struct CorrespondenceArgs {
  int dim = 3;
  int k = 0;
  std::string kind = "hardy";
  int batch = 1;
  std::uint64_t seed = 0;
  int radius = 2;
  std::string input;
  double threshold = 1e-10;
};

int cmd_verify_correspondence(const CorrespondenceArgs& a, int threads, std::ostream& out) {
  const CorrespondenceKind kind{parse_inequality_kind(a.kind), a.k};
  if (a.k < 0) throw DomainError("correspondence order k must be non-negative");
  std::vector<LatticeFunction> inputs;
  std::vector<std::uint64_t> seeds;
  if (!a.input.empty()) {
    inputs.push_back(load_lattice_function(a.input));
    seeds.push_back(a.seed);
  } else {
    check_dimension(a.dim);
    if (a.batch < 0) throw ArgumentError("--batch must be non-negative");
    for (int i = 0; i < a.batch; ++i) seeds.push_back(derive_seed(a.seed, static_cast<std::uint64_t>(i)));
  }
  const std::size_t n = a.input.empty() ? static_cast<std::size_t>(a.batch) : 1;
  std::vector<json> reports(n);
  std::vector<bool> ok(n, true);
  parallel_for(n, threads, [&](std::size_t i) {
    const LatticeFunction u = a.input.empty() ? random_lattice_function(a.dim, a.radius, seeds[i]) : inputs[i];
    const auto norm = verify_norm_identity(u, kind);
    const auto form = verify_form_identity(u, kind);
    const double symbol = symbol_identity_error(u);
    ok[i] = norm.rel_err < a.threshold && form.rel_err < a.threshold;
    reports[i] = {{"index", i},
                  {"seed", a.seed},
                  {"item_seed", seeds[i]},
                  {"dim", u.dim()},
                  {"k", a.k},
                  {"kind", a.kind},
                  {"norm", {{"lhs", number(norm.lhs)}, {"rhs", number(norm.rhs)}, {"rel_err", number(norm.rel_err)}}},
                  {"form", {{"lhs", number(form.lhs)}, {"rhs", number(form.rhs)}, {"rel_err", number(form.rel_err)}}},
                  {"symbol_error", number(symbol)},
                  {"holds", static_cast<bool>(ok[i])}};
  });
  bool all = true;
  for (std::size_t i = 0; i < n; ++i) {
    all = all && ok[i];
    out << reports[i].dump() << '\n';
  }
  return all ? kExitOk : kExitFalsified;
}

}  // namespace

std::vector<int> parse_dims(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw ArgumentError("invalid dimension list '" + std::string(text) + "'");
    }
    return v;
  };
  std::vector<int> dims;
  if (const auto pos = text.find(".."); pos != std::string_view::npos) {
    const int lo = parse_int(text.substr(0, pos));
    const int hi = parse_int(text.substr(pos + 2));
    if (lo > hi) throw ArgumentError("empty dimension range '" + std::string(text) + "'");
    for (int d = lo; d <= hi; ++d) dims.push_back(d);
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto comma = text.find(',', start);
      const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      dims.push_back(parse_int(piece));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  for (int d : dims) {
    if (d < 1) throw ArgumentError("dimensions must be positive (got " + std::to_string(d) + ")");
  }
  return dims;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void emit_plot_data(const SweepTable& table, bool with_fit, std::ostream& out) {
  if (table.rows.empty()) throw ArgumentError("cannot emit plot data for an empty sweep table");
  out << "# kind=" << to_string(table.kind) << " k=" << table.k << " radius=" << table.radius << '\n';
  for (int s = 0; s < 3; ++s) {
    out << "# series " << kSeriesNames[s] << '\n';
    for (const auto& [d, v] : series_points(table, s)) out << format_number(d) << ' ' << format_number(v) << '\n';
    out << '\n';
  }
  if (!with_fit) return;
  for (int s = 0; s < 3; ++s) {
    const auto pts = series_points(table, s);
    if (pts.size() < 3) continue;
    const SlopeFit f = fit_log_slope(pts);
    out << "# fit " << kSeriesNames[s] << " slope=" << format_number(f.slope)
        << " intercept=" << format_number(f.intercept) << " r2=" << format_number(f.r_squared) << '\n';
  }
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete Hardy and Rellich inequalities: constants, torus checks and sharp-constant estimates",
               "lattice-hardy"};
  app.require_subcommand(1);
  app.fallthrough();
  const unsigned hw = std::thread::hardware_concurrency();
  int threads = hw == 0 ? 1 : static_cast<int>(hw);
  app.add_option("--threads", threads, "Worker threads for batches and sweeps (1 = serial)")
      ->check(CLI::PositiveNumber);

  ConstantsArgs ca;
  auto* constants = app.add_subcommand("constants", "Tables of the explicit torus constants");
  constants->add_option("--table", ca.table, "hardy|hardy-rellich|rellich|higher|higher-gradient|beta")
      ->check(CLI::IsMember({"hardy", "hardy-rellich", "rellich", "higher", "higher-gradient", "beta"}));
  constants->add_option("--k", ca.k, "Non-positive weight exponent k");
  constants->add_option("--m", ca.m, "Order m of the higher tables");
  constants->add_option("--dims", ca.dims, "Dimensions: a..b, a,b,c or d")->required();
  constants->add_option("--format", ca.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Lower/upper brackets of the discrete sharp constants");
  bounds->add_option("--kind", ba.kind, "hardy|rellich")->check(CLI::IsMember({"hardy", "rellich"}));
  bounds->add_option("--k", ba.k, "Discrete order k >= 0");
  bounds->add_option("--dims", ba.dims, "Dimensions: a..b, a,b,c or d")->required();
  bounds->add_option("--format", ba.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  EstimateArgs ea;
  auto* estimate = app.add_subcommand("estimate", "Variational estimate of a discrete sharp constant");
  estimate->add_option("--dim", ea.dim, "Dimension d")->required();
  estimate->add_option("--order", ea.order, "Discrete order k >= 0");
  estimate->add_option("--radius", ea.radius, "l-infinity radius R of the trial box");
  estimate->add_option("--kind", ea.kind, "hardy|rellich")->check(CLI::IsMember({"hardy", "rellich"}));
  estimate->add_option("--tol", ea.tol, "Eigen-residual tolerance");
  estimate->add_option("--output", ea.output, "Write the minimising vector in lattice text format");
  estimate->add_option("--format", ea.format, "json|csv")->check(CLI::IsMember({"csv", "json"}));

  SweepArgs sa;
  auto* sweep_cmd = app.add_subcommand("sweep", "Estimates over a range of dimensions");
  sweep_cmd->add_option("--dims", sa.dims, "Dimensions: a..b, a,b,c or d")->required();
  sweep_cmd->add_option("--radius", sa.radius, "l-infinity radius R of the trial box");
  sweep_cmd->add_option("--order", sa.order, "Discrete order k >= 0");
  sweep_cmd->add_option("--kind", sa.kind, "hardy|rellich")->check(CLI::IsMember({"hardy", "rellich"}));
  sweep_cmd->add_option("--tol", sa.tol, "Eigen-residual tolerance");
  sweep_cmd->add_flag("--fit", sa.fit, "Fit log(value) against log(d)");
  sweep_cmd->add_option("--plot-data", sa.plot_data, "Write (d, value) series for plotting");
  sweep_cmd->add_option("--format", sa.format, "json|csv")->check(CLI::IsMember({"csv", "json"}));

  TorusArgs ta;
  auto* torus = app.add_subcommand("verify-torus", "Check the weighted torus inequalities on random polynomials");
  torus->add_option("--dim", ta.dim, "Dimension d")->required();
  torus->add_option("--k", ta.k, "Non-positive weight exponent k");
  torus->add_option("--m", ta.m, "Order m for --theorem higher");
  torus->add_option("--theorem", ta.theorem, "hardy|hr|rellich|lemma34|higher")
      ->check(CLI::IsMember({"hardy", "hr", "rellich", "lemma34", "higher"}));
  torus->add_option("--form", ta.form, "laplacian|gradient (for --theorem higher)")
      ->check(CLI::IsMember({"laplacian", "gradient"}));
  torus->add_option("--batch", ta.batch, "Number of random polynomials");
  torus->add_option("--seed", ta.seed, "Base seed");
  torus->add_option("--grid", ta.grid, "Grid nodes per axis for --method grid");
  torus->add_option("--radius", ta.radius, "Support radius of the polynomials (default 2 for d <= 5, else 1)");
  torus->add_option("--method", ta.method, "kernel|grid")->check(CLI::IsMember({"kernel", "grid"}));
  torus->add_option("--alpha", ta.alpha, "lemma34: alpha (default k/2)");
  torus->add_option("--beta", ta.beta, "lemma34: beta (default random admissible)");
  torus->add_option("--gamma", ta.gamma, "lemma34: gamma (default random)");
  torus->add_flag("--complex", ta.complex_coeffs, "Complex (non-Hermitian) coefficients");
  torus->add_option("--format", ta.format, "json|csv")->check(CLI::IsMember({"csv", "json"}));

  CorrespondenceArgs ra;
  auto* corr = app.add_subcommand("verify-correspondence", "Check the lattice/torus transfer identities");
  corr->add_option("--dim", ra.dim, "Dimension d");
  corr->add_option("--k", ra.k, "Order k >= 0");
  corr->add_option("--kind", ra.kind, "hardy|rellich")->check(CLI::IsMember({"hardy", "rellich"}));
  corr->add_option("--batch", ra.batch, "Number of random lattice functions");
  corr->add_option("--seed", ra.seed, "Base seed");
  corr->add_option("--radius", ra.radius, "Support radius of the random functions");
  corr->add_option("--input", ra.input, "Lattice function file instead of a random batch");

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*constants) return cmd_constants(ca, out);
    if (*bounds) return cmd_bounds(ba, out);
    if (*estimate) return cmd_estimate(ea, out);
    if (*sweep_cmd) return cmd_sweep(sa, threads, out);
    if (*torus) return cmd_verify_torus(ta, threads, out);
    if (*corr) return cmd_verify_correspondence(ra, threads, out);
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(int argc, char** argv) {
  return run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

}  // namespace lattice_hardy::cli

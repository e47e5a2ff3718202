#include "mrt/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "mrt/batch.hpp"
#include "mrt/field_io.hpp"
#include "mrt/johnop.hpp"
#include "mrt/lift.hpp"
#include "mrt/planar2d.hpp"
#include "mrt/reduction.hpp"
#include "mrt/sampling.hpp"
#include "mrt/symtensor.hpp"
#include "mrt/weyl.hpp"

namespace mrt::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite-difference residuals are compared against the same stencil applied to
// in-range data; anything within this factor of that floor counts as zero.
constexpr double kFdFloorFactor = 10.0;

struct Options {
  std::string field_path;
  bool random = false;
  int m = 1;
  int n = 3;
  std::uint64_t seed = 1;
  int points = 20;
  double tol = 1e-8;
  std::string out;
  std::string format = "json";
  // range-check
  std::string chains = "all";
  std::size_t max_chains = 100;
  double perturb = 0.0;
  double step = kDefaultStep;
  // moments2d
  int rmax = 3;
  std::string table;
  // identities
  int nmax = 3;
  int kmax = 3;
  int lmax = 4;
  int mmax = 3;
  int polys = 10;
  // negative-control
  double eps = 1e-2;
  double min_ratio = 1e3;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string tuple_label(const std::vector<int>& js) {
  std::string s = "(";
  for (std::size_t t = 0; t < js.size(); ++t) s += (t ? "," : "") + std::to_string(js[t] + 1);
  return s + ")";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

Check make_check(std::string id, std::string ref, double residual, double tol) {
  return Check{std::move(id), std::move(ref), residual, tol, residual <= tol, std::nullopt};
}

json complex_array(const std::vector<cplx>& v) {
  json a = json::array();
  for (const cplx& c : v) a.push_back({c.real(), c.imag()});
  return a;
}

json vec_json(std::span<const double> v) { return json(std::vector<double>(v.begin(), v.end())); }

GaussField input_field(const Options& o, Report& r) {
  if (!o.field_path.empty()) {
    r.params["field"] = o.field_path;
    return load_field(o.field_path);
  }
  if (!o.random) throw UsageError("one of --field or --random is required");
  r.params["random"] = true;
  r.params["m"] = o.m;
  r.params["n"] = o.n;
  r.params["seed"] = o.seed;
  return random_field(o.m, o.n, o.seed);
}

void record_common(const Options& o, Report& r) {
  r.params["points"] = o.points;
  r.params["tol"] = o.tol;
}

// Sample points are drawn from a stream separate from the field's.
std::uint64_t point_seed(const Options& o) { return o.seed + 1; }

std::vector<PhasePoint> phase_points(const Options& o, int n) {
  return random_phase_points(n, o.points, point_seed(o));
}

Report cmd_transform(const Options& o) {
  Report r;
  r.command = "transform";
  const GaussField f = input_field(o, r);
  record_common(o, r);
  const int m = f.rank(), n = f.dim();
  const auto pts = phase_points(o, n);
  const auto ts = random_ts_points(n, o.points, point_seed(o));
  const MomentumDataSet data = MomentumDataSet::from_field(f);

  r.data["values"] = json::array();
  for (int k = 0; k <= m; ++k) {
    const auto vals = parallel_map<cplx>(ts.size(), [&](std::size_t s) { return data.phi(k, ts[s]); });
    for (std::size_t s = 0; s < ts.size(); ++s) {
      r.data["values"].push_back(
          {{"k", k}, {"x", vec_json(ts[s].x())}, {"xi", vec_json(ts[s].xi())}, {"value", {vals[s].real(), vals[s].imag()}}});
    }
  }
  for (int k = 0; k <= m; ++k) {
    const std::string K = std::to_string(k);
    const TransformRep rep = TransformRep::transform(k, f);
    const auto par = evaluate_batch(rep, pts);
    const auto ser = evaluate_batch_serial(rep, pts);
    double diff = 0;
    for (std::size_t s = 0; s < pts.size(); ++s) diff = std::max(diff, std::abs(par[s] - ser[s]));
    r.checks.push_back(make_check("parallel k=" + K, "parallel kernel equals serial reference", diff, o.tol));
    r.checks.push_back(make_check("evenness k=" + K, "I^k(x,-xi) = (-1)^(m-k) I^k(x,xi)",
                                  check_evenness(data, k, ts), o.tol));
    r.checks.push_back(make_check("restriction k=" + K, "lift restricted to the sphere bundle is the data",
                                  check_restriction(data, k, ts), o.tol));
    r.checks.push_back(make_check("lift k=" + K, "homogeneous lift of I^k f equals J^k f",
                                  check_lift_against_transform(f, k, pts), o.tol));
  }
  return r;
}

std::vector<JohnChain> select_chains(const Options& o, int n, int length) {
  if (o.chains == "all") return enumerate_canonical_chains(n, length, o.max_chains);
  auto all = enumerate_canonical_chains(n, length, std::numeric_limits<std::size_t>::max());
  if (all.size() <= o.max_chains) return all;
  // Partial Fisher-Yates with the raw engine output, so the sample does not
  // depend on the standard library's distributions.
  std::mt19937_64 rng(o.seed);
  std::vector<std::size_t> order(all.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  for (std::size_t k = 0; k < o.max_chains; ++k) std::swap(order[k], order[k + rng() % (order.size() - k)]);
  order.resize(o.max_chains);
  std::sort(order.begin(), order.end());
  std::vector<JohnChain> out;
  for (std::size_t k : order) out.push_back(all[k]);
  return out;
}

Report cmd_range_check(const Options& o) {
  Report r;
  r.command = "range-check";
  const GaussField f = input_field(o, r);
  record_common(o, r);
  r.params["chains"] = o.chains;
  r.params["max_chains"] = o.max_chains;
  const int m = f.rank(), n = f.dim();
  if (n < 3) throw UsageError("range-check needs n >= 3; use moments2d for planar fields");
  const MomentumDataSet data = MomentumDataSet::from_field(f);
  const auto ts = random_ts_points(n, o.points, point_seed(o));
  for (int k = 0; k <= m; ++k) {
    r.checks.push_back(make_check("evenness k=" + std::to_string(k), "I^k(x,-xi) = (-1)^(m-k) I^k(x,xi)",
                                  check_evenness(data, k, ts), o.tol));
  }
  const auto chains = select_chains(o, n, m + 1);

  if (o.perturb == 0.0) {
    const TransformRep psi = TransformRep::transform(m, f);
    const auto pts = phase_points(o, n);
    for (const auto& c : chains) {
      r.checks.push_back(make_check("john " + c.to_string(), "John chain of length m+1 annihilates J^m f",
                                    john_residual_chain(psi, c, pts).relative, o.tol));
    }
    return r;
  }

  // Suspect data: phi^0 is perturbed by eps exp(-|x|^2) xi_1^2 and every chain
  // goes through finite differences on the lift.
  if (m + 1 > kMaxFdChain) throw UsageError("--perturb supports m <= " + std::to_string(kMaxFdChain - 1));
  r.params["perturb"] = o.perturb;
  r.params["step"] = o.step;
  std::vector<DataFn> phi;
  for (int k = 0; k <= m; ++k) phi.push_back(data.evaluator(k));
  phi[0] = [f, eps = o.perturb](const TSPoint& p) {
    return ray_transform_I(0, f, p) + eps * std::exp(-dot(p.x(), p.x())) * p.xi()[0] * p.xi()[0];
  };
  const MomentumDataSet suspect(m, n, std::move(phi));
  const PhaseFn valid_psi = lifted(data, m), suspect_psi = lifted(suspect, m);
  std::vector<PhasePoint> pts;
  for (const auto& p : random_ts_points(n, o.points, point_seed(o), 1.0)) pts.push_back(p.phase());
  for (const auto& c : chains) {
    const double floor = john_residual_chain_fd(valid_psi, c, pts, o.step).max_abs;
    const double got = john_residual_chain_fd(suspect_psi, c, pts, o.step).max_abs;
    Check chk = make_check("john-fd " + c.to_string(), "John chain of length m+1 annihilates the lifted data",
                           got, std::max(o.tol, kFdFloorFactor * floor));
    chk.ratio = got / floor;
    r.checks.push_back(chk);
  }
  return r;
}

Report cmd_reduce(const Options& o) {
  Report r;
  r.command = "reduce";
  const GaussField f = input_field(o, r);
  record_common(o, r);
  const int m = f.rank(), n = f.dim();
  const auto pts = phase_points(o, n);
  const ReductionComparison cmp = compare_reductions(f, pts);
  r.checks.push_back(make_check("equivalence", "transport and tuple reduction formulas agree", cmp.equivalence, o.tol));
  r.checks.push_back(make_check("symmetry", "reduced functions are symmetric in the target indices", cmp.symmetry, o.tol));

  const auto psi = transform_tuple(f);
  for (const auto& idx : enumerate_indices(m, n)) {
    const std::vector<int> target(idx.indices().begin(), idx.indices().end());
    const std::string I = tuple_label(target);
    const ReductionProperties p =
        check_reduction_properties(reduce_via_transport(psi.back(), target), psi.back(), target, pts);
    r.checks.push_back(make_check("homogeneity I=" + I, "reduced function is homogeneous of degree -1 in xi",
                                  p.homogeneity, o.tol));
    r.checks.push_back(make_check("transport I=" + I, "transport derivative of the reduced function vanishes",
                                  p.transport, o.tol));
    r.checks.push_back(make_check("transport-corollary I=" + I,
                                  "transport of the reduced function via the xi-derivative identity",
                                  p.transport_corollary, o.tol));
    if (n >= 3) {
      r.checks.push_back(make_check("john I=" + I, "John operators annihilate the reduced function", p.john, o.tol));
    }
  }

  const RecoveryReport rec = check_recovery(f, pts);
  r.checks.push_back(make_check("component-tuple", "tuple reduction recovers J^0 of the component",
                                rec.component_via_tuple, o.tol));
  r.checks.push_back(make_check("component-transport", "transport reduction recovers J^0 of the component",
                                rec.component_via_transport, o.tol));
  r.checks.push_back(make_check("coefficient-sum", "x-derivatives of J^k f from the a(m,k,p) expansion",
                                rec.coefficient_sum, o.tol));
  r.checks.push_back(make_check("transport-sum", "x-derivatives of J^k f from transport powers of xi-derivatives",
                                rec.transport_sum, o.tol));
  r.checks.push_back(make_check("contracted", "x-derivatives of J^k f from contracted reduced functions",
                                rec.contracted_reduction, o.tol));
  r.checks.push_back(make_check("lift", "homogeneous lift of the data equals J^k f", rec.lift, o.tol));
  return r;
}

std::string complex_list(const std::vector<cplx>& v) {
  std::string s;
  for (std::size_t t = 0; t < v.size(); ++t) s += (t ? ";" : "") + fmt(v[t].real()) + ":" + fmt(v[t].imag());
  return s;
}

Report cmd_moments2d(const Options& o) {
  Report r;
  r.command = "moments2d";
  const GaussField f = input_field(o, r);
  record_common(o, r);
  r.params["rmax"] = o.rmax;
  if (f.dim() != 2) throw UsageError("moments2d needs a planar field (n = 2)");
  const int m = f.rank();
  const auto ts = random_ts_points(2, o.points, point_seed(o));

  const auto rows = moment_fits(f, o.rmax);
  r.data["moments"] = json::array();
  for (const auto& row : rows) {
    const std::string rk = "r=" + std::to_string(row.r) + " k=" + std::to_string(row.k);
    r.checks.push_back(make_check("fit " + rk, "moment integral is a homogeneous polynomial of degree r+k+m",
                                  row.fit_residual, o.tol));
    r.checks.push_back(make_check("coefficients " + rk, "fitted coefficients match the complex-momenta prediction",
                                  row.coefficient_error, o.tol));
    r.data["moments"].push_back({{"r", row.r},
                                 {"k", row.k},
                                 {"degree", row.degree},
                                 {"fitted", complex_array(row.fitted)},
                                 {"predicted", complex_array(row.predicted)},
                                 {"fit_residual", row.fit_residual}});
  }

  const MomentTable mu(f), nu(f);
  r.checks.push_back(make_check("consistency g=f", "momenta of f and g agree in every consistency relation",
                                consistency_check(mu, nu, o.rmax).all, o.tol));
  r.checks.push_back(make_check("inner-derivative", "I^k(dv) = -k I^(k-1) v with v = f",
                                inner_derivative_residual(f, ts), o.tol));
  if (m >= 1) {
    // f = g + dv with a random v, then the recursion must return I^k v.
    const GaussField v = random_field(m - 1, 2, o.seed + 2);
    const GaussField g = f - inner_derivative(v);
    const MomentumDataSet chi = chi_recursion(MomentumDataSet::from_field(f), g);
    double worst = 0;
    for (int k = 0; k < m; ++k) {
      const auto d = parallel_map<double>(ts.size(), [&](std::size_t s) {
        return std::abs(chi.phi(k, ts[s]) - ray_transform_I(k, v, ts[s]));
      });
      worst = std::max(worst, *std::max_element(d.begin(), d.end()));
    }
    r.checks.push_back(make_check("chi-recursion", "recursion on f = g + dv returns I^k v", worst, o.tol));
  }

  if (!o.table.empty()) {
    r.params["table"] = o.table;
    std::ofstream t(o.table);
    if (!t) throw UsageError("cannot write " + o.table);
    t << "r,k,degree,fit_residual,coefficient_error,fitted,predicted\n";
    for (const auto& row : rows) {
      t << row.r << ',' << row.k << ',' << row.degree << ',' << fmt(row.fit_residual) << ','
        << fmt(row.coefficient_error) << ',' << complex_list(row.fitted) << ',' << complex_list(row.predicted) << '\n';
    }
  }
  return r;
}

void all_tuples(int n, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out, bool sorted) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = sorted && !cur.empty() ? cur.back() : 0; i < n; ++i) {
    cur.push_back(i);
    all_tuples(n, k, cur, out, sorted);
    cur.pop_back();
  }
}

Report cmd_identities(const Options& o) {
  Report r;
  r.command = "identities";
  r.params["nmax"] = o.nmax;
  r.params["kmax"] = o.kmax;
  r.params["lmax"] = o.lmax;
  r.params["mmax"] = o.mmax;
  r.params["polys"] = o.polys;

  auto exact = [](std::string id, std::string ref, bool ok) {
    return Check{std::move(id), std::move(ref), ok ? 0.0 : 1.0, 0.0, ok, std::nullopt};
  };
  for (int m = 0; m <= o.mmax; ++m)
    for (int k = 0; k <= m; ++k)
      for (int p = 0; p <= k; ++p) {
        const std::string id = "a(" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(p) + ")";
        r.checks.push_back(exact(id, "reduction coefficient equals its closed form",
                                 coefficient_a(m, k, p) == coefficient_a_closed(m, k, p)));
      }

  struct Instance {
    bool corollary;
    int n, l;
    std::vector<int> js;
  };
  std::vector<Instance> inst;
  for (int n = 1; n <= o.nmax; ++n)
    for (int k = 0; k <= o.kmax; ++k) {
      std::vector<std::vector<int>> tuples;
      std::vector<int> cur;
      all_tuples(n, k, cur, tuples, false);
      for (int l = 0; l <= o.lmax; ++l)
        for (auto& js : tuples) inst.push_back({false, n, l, js});
    }
  for (int n = 1; n <= o.nmax; ++n)
    for (int m = 0; m <= o.mmax; ++m) {
      std::vector<std::vector<int>> tuples;
      std::vector<int> cur;
      all_tuples(n, m, cur, tuples, true);
      for (auto& js : tuples) inst.push_back({true, n, 0, js});
    }
  const auto ok = parallel_map<char>(inst.size(), [&](std::size_t s) -> char {
    const Instance& in = inst[s];
    return (in.corollary ? verify_corollary(in.n, in.js, 1, o.polys)
                         : verify_commutator_lemma(in.n, in.l, in.js, 1, o.polys))
        .passed();
  });
  for (std::size_t s = 0; s < inst.size(); ++s) {
    const Instance& in = inst[s];
    const std::string where = "n=" + std::to_string(in.n) + " j=" + tuple_label(in.js);
    if (in.corollary) {
      r.checks.push_back(exact("corollary " + where, "symmetrized transport/derivative sum collapses", ok[s]));
    } else {
      r.checks.push_back(exact("commutator " + where + " l=" + std::to_string(in.l),
                               "transport power commuted past xi-derivatives", ok[s]));
    }
  }
  return r;
}

Report cmd_negative_control(const Options& o) {
  Report r;
  r.command = "negative-control";
  r.params["n"] = o.n;
  r.params["seed"] = o.seed;
  r.params["eps"] = o.eps;
  r.params["step"] = o.step;
  r.params["points"] = o.points;
  r.params["min_ratio"] = o.min_ratio;
  if (o.n < 2) throw UsageError("negative-control needs n >= 2");
  const NegativeControl nc = negative_control_experiment(o.n, o.seed, o.eps, o.step, o.points);
  Check c{"separation", "perturbed data is detected: FD John residual over the in-range floor",
          nc.valid_residual / nc.perturbed_residual, 1.0 / o.min_ratio, nc.ratio >= o.min_ratio, nc.ratio};
  r.checks.push_back(c);
  r.data = {{"valid_residual", nc.valid_residual}, {"perturbed_residual", nc.perturbed_residual}, {"ratio", nc.ratio}};
  return r;
}

void add_field_options(CLI::App* sub, Options& o) {
  auto* field = sub->add_option("--field", o.field_path, "field-spec JSON file");
  auto* random = sub->add_flag("--random", o.random, "use a random Gaussian field");
  field->excludes(random);
  sub->add_option("--m", o.m, "tensor rank for --random")->check(CLI::Range(0, 8));
  sub->add_option("--n", o.n, "dimension for --random")->check(CLI::Range(1, 8));
  sub->add_option("--seed", o.seed, "seed for the field and sample points");
  sub->add_option("--points", o.points, "number of sample points")->check(CLI::Range(1, 100000));
  sub->add_option("--tol", o.tol, "residual tolerance")->check(CLI::NonNegativeNumber);
}

void add_output_options(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out, "report path (default: stdout)");
  sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string status(const Check& c) {
  if (!c.pass) return "fail";
  return c.max_residual == 0.0 ? "exact" : "pass";
}

nlohmann::ordered_json to_json(const Report& r) {
  json j;
  j["command"] = r.command;
  j["params"] = r.params;
  j["checks"] = json::array();
  for (const auto& c : r.checks) {
    json e{{"id", c.id},        {"paper_ref", c.paper_ref}, {"max_residual", c.max_residual},
           {"tol", c.tol},      {"pass", c.pass},           {"status", status(c)}};
    if (c.ratio) e["ratio"] = *c.ratio;
    j["checks"].push_back(e);
  }
  j["passed"] = r.passed();
  if (!r.data.is_null()) j["data"] = r.data;
  return j;
}

std::string to_csv(const Report& r) {
  std::ostringstream s;
  s << "command,id,paper_ref,max_residual,tol,pass,status,ratio\n";
  for (const auto& c : r.checks) {
    s << r.command << ',' << csv_quote(c.id) << ',' << csv_quote(c.paper_ref) << ',' << fmt(c.max_residual) << ','
      << fmt(c.tol) << ',' << (c.pass ? "true" : "false") << ',' << status(c) << ',' << (c.ratio ? fmt(*c.ratio) : "")
      << '\n';
  }
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Momentum ray transform checks for symmetric tensor fields", "mrt"};
  app.require_subcommand(1);

  auto* transform = app.add_subcommand("transform", "evaluate I^k f on the sphere bundle and check the lift");
  auto* range = app.add_subcommand("range-check", "John range conditions (n >= 3)");
  auto* reduce = app.add_subcommand("reduce", "rank reduction and recovery");
  auto* moments = app.add_subcommand("moments2d", "planar moment conditions");
  auto* identities = app.add_subcommand("identities", "exact Weyl-algebra operator identities");
  auto* negative = app.add_subcommand("negative-control", "finite-difference John residual on perturbed data");

  for (auto* sub : {transform, range, reduce, moments}) {
    add_field_options(sub, o);
    add_output_options(sub, o);
  }
  range->add_option("--chains", o.chains, "all canonical chains or a seeded sample")
      ->check(CLI::IsMember({"all", "sample"}));
  range->add_option("--max-chains", o.max_chains, "chain limit")->check(CLI::PositiveNumber);
  range->add_option("--perturb", o.perturb, "add eps exp(-|x|^2) xi_1^2 to phi^0 and use finite differences")
      ->check(CLI::NonNegativeNumber);
  range->add_option("--step", o.step, "finite-difference step")->check(CLI::PositiveNumber);
  moments->add_option("--rmax", o.rmax, "largest moment order")->check(CLI::Range(0, 12));
  moments->add_option("--table", o.table, "also write the fitted/predicted coefficients as CSV");

  add_output_options(identities, o);
  identities->add_option("--nmax", o.nmax, "largest dimension")->check(CLI::Range(1, 4));
  identities->add_option("--kmax", o.kmax, "largest number of xi-derivatives")->check(CLI::Range(0, 5));
  identities->add_option("--lmax", o.lmax, "largest transport power")->check(CLI::Range(0, 6));
  identities->add_option("--mmax", o.mmax, "largest rank")->check(CLI::Range(0, 6));
  identities->add_option("--polys", o.polys, "random polynomials for the action oracle")->check(CLI::Range(0, 100));

  add_output_options(negative, o);
  negative->add_option("--n", o.n, "dimension")->check(CLI::Range(2, 8));
  negative->add_option("--seed", o.seed, "seed for field and points");
  negative->add_option("--eps", o.eps, "perturbation size")->check(CLI::PositiveNumber);
  negative->add_option("--step", o.step, "finite-difference step")->check(CLI::PositiveNumber);
  negative->add_option("--points", o.points, "number of points")->check(CLI::Range(1, 100000));
  negative->add_option("--min-ratio", o.min_ratio, "required separation")->check(CLI::PositiveNumber);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  if (negative->parsed() && negative->count("--seed") == 0) o.seed = 2024;

  Report report;
  try {
    if (transform->parsed()) report = cmd_transform(o);
    if (range->parsed()) report = cmd_range_check(o);
    if (reduce->parsed()) report = cmd_reduce(o);
    if (moments->parsed()) report = cmd_moments2d(o);
    if (identities->parsed()) report = cmd_identities(o);
    if (negative->parsed()) report = cmd_negative_control(o);
  } catch (const FieldSpecError& e) {
    err << "error: " << o.field_path;
    if (e.line() > 0) err << ':' << e.line() << ':' << e.column();
    err << ": " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const std::string text = o.format == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f || !(f << text)) {
      err << "error: cannot write " << o.out << '\n';
      return kUsageError;
    }
    const auto failed = std::count_if(report.checks.begin(), report.checks.end(), [](const Check& c) { return !c.pass; });
    out << report.command << ": " << report.checks.size() - static_cast<std::size_t>(failed) << " of "
        << report.checks.size() << " checks passed, report in " << o.out << '\n';
  }
  return report.passed() ? kSuccess : kCheckFailure;
}

}  // namespace mrt::cli

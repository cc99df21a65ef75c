#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "hhm/damek_ricci.hpp"
#include "hhm/errors.hpp"
#include "hhm/model.hpp"
#include "hhm/special.hpp"
#include "hhm/transform.hpp"
#include "hhm/verify.hpp"
#include "output.hpp"

namespace hhm::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string format = "table";
  std::string output;
  std::string config;
  std::optional<double> tol;

  int n = 3;
  double ell = 2.0;
  double q = 2.0;
  bool model_from_config = false;

  std::string quantity;
  std::string grid;
  std::optional<double> lambda;

  std::string dr_command;
  int max_m = 0;
  int max_j = 1;

  std::string profile = "bump:R=2";
  std::string profile_file;
  std::string lambdas;

  std::string filter;
  bool inject_failure = false;
};

// Values from --config act as defaults that command-line flags override.
void apply_config(const std::string& path, Options& o) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw DomainError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DomainError("config must be a JSON object");
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "format") o.format = value.get<std::string>();
      else if (key == "output") o.output = value.get<std::string>();
      else if (key == "tol") o.tol = value.get<double>();
      else if (key == "model") {
        o.n = value.at("n").get<int>();
        o.ell = value.at("ell").get<double>();
        o.q = value.at("q").get<double>();
        o.model_from_config = true;
      } else if (key == "grid") o.grid = value.get<std::string>();
      else if (key == "lambda") o.lambda = value.get<double>();
      else if (key == "lambdas") o.lambdas = value.get<std::string>();
      else if (key == "profile") o.profile = value.get<std::string>();
      else if (key == "profile_file") o.profile_file = value.get<std::string>();
      else if (key == "max_m") o.max_m = value.get<int>();
      else if (key == "max_j") o.max_j = value.get<int>();
      else if (key == "filter") o.filter = value.get<std::string>();
      else throw DomainError("unknown config key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad config value: ") + e.what());
  }
}

std::optional<std::string> find_config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

json model_json(const ModelParams& p) { return json{{"n", p.n()}, {"ell", p.ell()}, {"q", p.q()}}; }

class Emitter {
 public:
  Emitter(Format format, std::ostream& out) : format_(format), out_(out) {}

  Format format() const { return format_; }
  std::ostream& stream() { return out_; }

  void rows(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    if (format_ == Format::Csv) {
      write_csv(out_, header, rows);
    } else {
      write_table(out_, header, rows);
    }
  }
  void document(const json& doc) { out_ << doc.dump(2) << '\n'; }

 private:
  Format format_;
  std::ostream& out_;
};

int cmd_model_info(const Options& o, Emitter& emit) {
  const ModelParams p(o.n, o.ell, o.q);
  const double tol = o.tol.value_or(kDefaultBoundTolerance);
  const double kappa = einstein_constant(p).kappa;
  const BoundClassification bounds = classify_scaled_bounds(p, tol);
  std::optional<Normalization> norm;
  if (kappa < 0.0) norm = normalize_ricci(p);

  if (emit.format() == Format::Json) {
    json doc;
    doc["model"] = model_json(p);
    doc["kappa"] = kappa;
    doc["scale_factor"] = norm ? json(norm->scale.value()) : json(nullptr);
    doc["normalized"] = norm ? model_json(norm->model) : json(nullptr);
    doc["bounds"] = {{"lower", lower_entropy_bound(p.n())}, {"upper", upper_entropy_bound(p.n())}};
    doc["classification"] = {{"tag", std::string(to_string(bounds.tag))},
                             {"label", std::string(bounds.label())},
                             {"margin_low", bounds.margin_low},
                             {"margin_high", bounds.margin_high}};
    doc["meta"] = {{"tol", tol}};
    emit.document(doc);
    return kExitOk;
  }
  const std::string none = "none (kappa >= 0)";
  std::vector<std::vector<std::string>> rows = {
      {"n", std::to_string(p.n())},
      {"ell", format_number(p.ell())},
      {"q", format_number(p.q())},
      {"kappa", format_number(kappa)},
      {"scale_factor", norm ? format_number(norm->scale.value()) : none},
      {"normalized_ell", norm ? format_number(norm->model.ell()) : none},
      {"normalized_q", norm ? format_number(norm->model.q()) : none},
      {"lower_bound", format_number(lower_entropy_bound(p.n()))},
      {"upper_bound", format_number(upper_entropy_bound(p.n()))},
      {"classification", std::string(bounds.label())},
  };
  emit.rows({"key", "value"}, rows);
  return kExitOk;
}

int cmd_eval(const Options& o, Emitter& emit) {
  const ModelParams p(o.n, o.ell, o.q);
  if (o.grid.empty()) throw DomainError("eval requires --grid a:b:step");
  const std::vector<double> grid = parse_grid(o.grid);

  std::function<double(double)> f;
  if (o.quantity == "theta") {
    f = [&](double r) { return theta(p, r); };
  } else if (o.quantity == "sigma") {
    f = [&](double r) { return sigma(p, r); };
  } else if (o.quantity == "phi") {
    if (!o.lambda) throw DomainError("eval phi requires --lambda");
    SeriesOptions series;
    series.tol = o.tol.value_or(series.tol);
    f = [&, lambda = *o.lambda, series](double r) { return spherical_function(p, lambda, r, series); };
  } else {
    throw DomainError("eval quantity must be theta, sigma or phi");
  }

  std::vector<double> values;
  values.reserve(grid.size());
  for (const double r : grid) values.push_back(f(r));

  if (emit.format() == Format::Json) {
    json doc;
    doc["model"] = model_json(p);
    json series = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) series.push_back({{"r", grid[i]}, {"value", values[i]}});
    doc["series"] = std::move(series);
    doc["meta"] = {{"quantity", o.quantity}, {"grid", o.grid}};
    if (o.quantity == "phi") doc["meta"]["lambda"] = *o.lambda;
    emit.document(doc);
    return kExitOk;
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < grid.size(); ++i) rows.push_back({format_number(grid[i]), format_number(values[i])});
  emit.rows({"r", "value"}, rows);
  return kExitOk;
}

int cmd_dr(const Options& o, Emitter& emit) {
  if (o.max_m < 1) throw DomainError("dr requires --max-m >= 1");
  std::vector<EnumeratedSpace> spaces;
  if (o.dr_command == "lower-bound") {
    for (const LowerBoundCase& c : enumerate_lower_bound(o.max_m)) spaces.push_back(describe_space(dr_space(c.k, c.m)));
  } else if (o.dr_command == "enumerate") {
    spaces = enumerate_spaces(o.max_m, o.max_j);
  } else {
    throw DomainError("dr subcommand must be enumerate or lower-bound");
  }

  if (emit.format() == Format::Json) {
    json rows = json::array();
    for (const auto& e : spaces) {
      rows.push_back({{"m", e.space.m},
                      {"k", e.space.k},
                      {"n", e.space.n},
                      {"q", e.space.model.q()},
                      {"q_norm", e.normalized_entropy},
                      {"classification", std::string(e.bounds.label())}});
    }
    json meta = {{"command", o.dr_command}, {"max_m", o.max_m}};
    if (o.dr_command == "enumerate") meta["max_j"] = o.max_j;
    emit.document(json{{"rows", std::move(rows)}, {"meta", std::move(meta)}});
    return kExitOk;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : spaces) {
    rows.push_back({std::to_string(e.space.m), std::to_string(e.space.k), std::to_string(e.space.n),
                    format_number(e.space.model.q()), format_number(e.normalized_entropy),
                    std::string(e.bounds.label())});
  }
  emit.rows({"m", "k", "n", "Q", "Q_norm", "classification"}, rows);
  return kExitOk;
}

int cmd_transform(const Options& o, Emitter& emit) {
  const ModelParams p(o.n, o.ell, o.q);
  if (o.lambdas.empty()) throw DomainError("transform requires --lambdas a:b:step");
  const std::vector<double> lambdas = parse_grid(o.lambdas);
  RadialProfile profile = [&] {
    if (o.profile_file.empty()) return parse_profile_spec(o.profile);
    std::ifstream in(o.profile_file);
    if (!in) throw DomainError("cannot open profile file '" + o.profile_file + "'");
    return read_profile_csv(in);
  }();
  const double tol = o.tol.value_or(1e-10);

  std::vector<TransformResult> results;
  long evals_2f1 = 0;
  long evals_ode = 0;
  for (const double lambda : lambdas) {
    results.push_back(spherical_fourier(p, profile, lambda, tol));
    evals_2f1 += results.back().evals_2f1;
    evals_ode += results.back().evals_ode;
  }

  if (emit.format() == Format::Json) {
    json series = json::array();
    for (const auto& t : results) {
      series.push_back({{"lambda", t.lambda}, {"value", t.value}, {"quad_error", t.quad_error}});
    }
    json doc;
    doc["model"] = model_json(p);
    doc["series"] = std::move(series);
    doc["meta"] = {{"profile", o.profile_file.empty() ? o.profile : o.profile_file},
                   {"tol", tol},
                   {"evals_2f1", evals_2f1},
                   {"evals_ode", evals_ode}};
    emit.document(doc);
    return kExitOk;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& t : results) {
    rows.push_back({format_number(t.lambda), format_number(t.value), format_number(t.quad_error)});
  }
  emit.rows({"lambda", "value", "quad_error"}, rows);
  return kExitOk;
}

int cmd_verify(const Options& o, Emitter& emit, std::ostream& err) {
  VerifyConfig config;
  if (!o.filter.empty()) config.filter = o.filter;
  if (o.inject_failure) config.perturbation = 1e-3;
  const VerifyReport report = run_all(config);

  if (emit.format() == Format::Json) {
    json checks = json::array();
    for (const auto& c : report.results) {
      checks.push_back({{"name", c.name},
                        {"passed", c.passed},
                        {"measured", c.measured},
                        {"tolerance", c.tolerance},
                        {"detail", c.detail}});
    }
    json meta = {{"filter", o.filter.empty() ? json(nullptr) : json(o.filter)}, {"count", report.results.size()}};
    emit.document(json{{"checks", std::move(checks)}, {"passed", report.all_passed()}, {"meta", std::move(meta)}});
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : report.results) {
      rows.push_back({c.passed ? "PASS" : "FAIL", c.name, format_number(c.measured), format_number(c.tolerance),
                      c.detail});
    }
    emit.rows({"status", "name", "measured", "tolerance", "detail"}, rows);
  }
  const auto failed = std::count_if(report.results.begin(), report.results.end(),
                                    [](const CheckResult& c) { return !c.passed; });
  err << (report.results.size() - static_cast<std::size_t>(failed)) << "/" << report.results.size()
      << " checks passed\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

void add_model_options(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "Dimension n >= 3");
  sub->add_option("--ell", o.ell, "Scale parameter ell > 0");
  sub->add_option("--q", o.q, "Volume entropy Q > 0");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"hhm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  const std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);

  try {
    if (const auto path = find_config_path(args)) apply_config(*path, o);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  CLI::App app{"Numerics for harmonic manifolds of hypergeometric type", "hhm"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format: table, csv or json");
  app.add_option("-o,--output", o.output, "Write data to this file instead of stdout");
  app.add_option("--config", o.config, "JSON configuration document");
  app.add_option("--tol", o.tol, "Tolerance (meaning depends on the command)");

  auto* model_info = app.add_subcommand("model-info", "Curvature, normalization and entropy bounds of a model");
  add_model_options(model_info, o);

  auto* eval = app.add_subcommand("eval", "Sample theta, sigma or phi on a radial grid");
  eval->add_option("quantity", o.quantity, "theta | sigma | phi")->required();
  add_model_options(eval, o);
  eval->add_option("--grid", o.grid, "Radial grid a:b:step");
  eval->add_option("--lambda", o.lambda, "Spectral parameter (phi only)");

  auto* dr = app.add_subcommand("dr", "Damek-Ricci spaces");
  dr->add_option("command", o.dr_command, "enumerate | lower-bound")->required();
  dr->add_option("--max-m", o.max_m, "Largest center dimension m");
  dr->add_option("--max-j", o.max_j, "Largest multiplicity j (enumerate)");

  auto* transform = app.add_subcommand("transform", "Spherical Fourier transform of a radial profile");
  add_model_options(transform, o);
  transform->add_option("--profile", o.profile, "Profile spec, e.g. bump:R=2");
  transform->add_option("--profile-file", o.profile_file, "CSV of (r, F(r)) pairs with header row");
  transform->add_option("--lambdas", o.lambdas, "Spectral grid a:b:step");

  auto* verify = app.add_subcommand("verify", "Run the verification battery");
  verify->add_option("--filter", o.filter, "Run only this check family");
  verify->add_flag("--inject-failure", o.inject_failure, "Perturb the ODE side of ode_vs_2f1 (test hook)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  const auto format = parse_format(o.format);
  if (!format) {
    err << "error: unknown format '" << o.format << "'\n";
    return kExitInvalid;
  }
  if (model_info->parsed() && !o.model_from_config &&
      (model_info->count("--n") == 0 || model_info->count("--ell") == 0 || model_info->count("--q") == 0)) {
    err << "error: model-info requires --n, --ell and --q\n";
    return kExitInvalid;
  }

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) {
      err << "error: cannot open output file '" << o.output << "'\n";
      return kExitInvalid;
    }
  }
  // Buffer data so a failing command leaves no partial output behind.
  std::ostringstream buffer;
  Emitter emit(*format, buffer);

  int code = kExitOk;
  try {
    if (model_info->parsed()) code = cmd_model_info(o, emit);
    else if (eval->parsed()) code = cmd_eval(o, emit);
    else if (dr->parsed()) code = cmd_dr(o, emit);
    else if (transform->parsed()) code = cmd_transform(o, emit);
    else if (verify->parsed()) code = cmd_verify(o, emit, err);
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const MaxSubdivisions& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  (o.output.empty() ? out : file) << buffer.str();
  return code;
}

}  // namespace hhm::cli

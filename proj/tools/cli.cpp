#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "fhcopula/checker.hpp"
#include "fhcopula/copulas.hpp"
#include "fhcopula/errors.hpp"
#include "fhcopula/io.hpp"
#include "fhcopula/radius.hpp"
#include "fhcopula/sampler.hpp"
#include "fhcopula/validator.hpp"

namespace fhc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string copula;
  std::string radius;
  std::optional<double> u;
  std::optional<double> v;
  std::vector<double> w;
  int grid_n = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  bool gaussian = false;
  std::string out;
};

RadiusModel parse_radius(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  std::string json_text;
  if (first != std::string::npos && text[first] == '{') {
    json_text = text;
  } else {
    std::ifstream f(text);
    if (!f) throw UsageError("cannot read radius file '" + text + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    json_text = ss.str();
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("radius is not valid JSON: ") + e.what());
  }
  return RadiusModel::from_json(j);
}

CopulaSpec make_spec(const Options& o) {
  const bool smoothed = o.copula == "wbar" || o.copula == "mbar";
  if (smoothed && o.radius.empty()) throw UsageError("--copula " + o.copula + " requires --radius");
  if (!smoothed && !o.radius.empty()) throw UsageError("--copula " + o.copula + " takes no --radius");
  if (o.copula == "w") return CopulaSpec::fh_lower();
  if (o.copula == "m") return CopulaSpec::fh_upper();
  RadiusModel model = parse_radius(o.radius);
  return o.copula == "wbar" ? CopulaSpec::smoothed_lower(std::move(model))
                            : CopulaSpec::smoothed_upper(std::move(model));
}

SquarePoint point(const Options& o) {
  if (!o.u || !o.v) throw UsageError("--u and --v are required");
  return SquarePoint(*o.u, *o.v);
}

// Produces the command's output text and exit code.
std::pair<std::string, int> execute(const std::string& command, const Options& o) {
  std::ostringstream out;
  if (command == "band") {
    if (o.radius.empty()) throw UsageError("band requires --radius");
    const RadiusModel model = parse_radius(o.radius);
    std::vector<double> ws = o.w;
    if (ws.empty()) {
      const std::size_t count = o.n > 0 ? o.n : 11;
      for (std::size_t i = 0; i < count; ++i) {
        ws.push_back(kDiamondRadius * (-1.0 + 2.0 * (i + 1.0) / (count + 1.0)));
      }
    }
    nlohmann::json arr = nlohmann::json::array();
    for (double w : ws) {
      const SupportBand b = support_band(model, w);
      arr.push_back({{"w", b.w},
                     {"lower", b.lower},
                     {"upper", b.upper},
                     {"kappa", b.kappa},
                     {"kappa_unbounded", b.kappa_unbounded}});
    }
    out << io::dump_json(arr);
    return {out.str(), kSuccess};
  }

  const CopulaSpec spec = make_spec(o);
  if (command == "eval") {
    out << io::format_double(copula_value(spec, point(o))) << '\n';
    return {out.str(), kSuccess};
  }
  if (command == "density") {
    if (!spec.smoothed()) throw UsageError("density is undefined for the singular copulas w and m");
    out << io::format_double(smoothed_density(spec, point(o))) << '\n';
    return {out.str(), kSuccess};
  }
  if (command == "grid") {
    const int n = o.grid_n > 0 ? o.grid_n : 64;
    if (n < 2) throw UsageError("--grid-n must be >= 2");
    out << "u,v,value,density\n";
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const SquarePoint p(i == n - 1 ? 1.0 : static_cast<double>(i) / (n - 1),
                            j == n - 1 ? 1.0 : static_cast<double>(j) / (n - 1));
        double value;
        double density;
        if (spec.smoothed()) {
          const SmoothedEvaluation e = evaluate_smoothed(spec, p);
          value = e.value;
          density = e.density;
        } else {
          value = fh_value(spec.family(), p);
          density = std::numeric_limits<double>::quiet_NaN();
        }
        out << io::format_double(p.u()) << ',' << io::format_double(p.v()) << ','
            << io::format_double(value) << ',' << io::format_double(density) << '\n';
      }
    }
    return {out.str(), kSuccess};
  }
  if (command == "validate") {
    if (!spec.smoothed()) throw UsageError("validate needs --copula wbar or mbar");
    const int n = o.grid_n > 0 ? o.grid_n : 64;
    const ValidationReport r = validate_model(spec.model(), orientation_for(spec.family()), n);
    out << io::dump_json(to_json(r));
    return {out.str(), r.verdict() ? kSuccess : kFailed};
  }
  if (command == "check") {
    const int n = o.grid_n > 0 ? o.grid_n : 128;
    const CopulaCheckReport r = check_copula(spec, n);
    out << io::dump_json(to_json(r));
    return {out.str(), r.verdict ? kSuccess : kFailed};
  }
  if (command == "sample") {
    if (o.n < 1) throw UsageError("--n must be >= 1");
    const SampleBatch batch = sample_batch(spec, o.n, o.seed);
    if (o.gaussian) {
      io::write_csv(out, to_gaussian(batch));
    } else {
      io::write_csv(out, batch);
    }
    return {out.str(), kSuccess};
  }
  throw UsageError("unknown command " + command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smoothed Fréchet–Hoeffding copulas: evaluate, validate, check and sample."};
  app.name(args.empty() ? "fhcopula" : args.front());
  app.require_subcommand(1);
  Options o;

  auto add_copula = [&](CLI::App* sub) {
    sub->add_option("--copula", o.copula, "w, m, wbar or mbar")
        ->required()
        ->check(CLI::IsMember({"w", "m", "wbar", "mbar"}));
    sub->add_option("--radius", o.radius, "radius model JSON, inline or a file path");
    sub->add_option("--out", o.out, "write output to this file instead of stdout");
  };
  auto add_point = [&](CLI::App* sub) {
    sub->add_option("--u", o.u, "first coordinate in [0,1]")->required();
    sub->add_option("--v", o.v, "second coordinate in [0,1]")->required();
  };

  CLI::App* eval = app.add_subcommand("eval", "print C(u,v)");
  add_copula(eval);
  add_point(eval);
  CLI::App* density = app.add_subcommand("density", "print the density c(u,v)");
  add_copula(density);
  add_point(density);
  CLI::App* grid = app.add_subcommand("grid", "CSV u,v,value,density on a grid_n x grid_n lattice");
  add_copula(grid);
  grid->add_option("--grid-n", o.grid_n, "lattice size (default 64)");
  CLI::App* validate = app.add_subcommand("validate", "validate the radius model (JSON report)");
  add_copula(validate);
  validate->add_option("--grid-n", o.grid_n, "grid size (default 64)");
  CLI::App* check = app.add_subcommand("check", "check the copula axioms on a grid (JSON report)");
  add_copula(check);
  check->add_option("--grid-n", o.grid_n, "grid size (default 128)");
  CLI::App* sample = app.add_subcommand("sample", "draw pairs by conditional inversion (CSV)");
  add_copula(sample);
  sample->add_option("--n", o.n, "number of pairs")->required();
  sample->add_option("--seed", o.seed, "generator key (default 0)");
  sample->add_flag("--gaussian", o.gaussian, "emit x,y = Phi^-1(u), Phi^-1(v)");
  CLI::App* band = app.add_subcommand("band", "support band of the smoothed upper bound (JSON)");
  band->add_option("--radius", o.radius, "radius model JSON, inline or a file path")->required();
  band->add_option("--w", o.w, "abscissae; repeatable");
  band->add_option("--n", o.n, "number of evenly spaced abscissae when --w is absent (default 11)");
  band->add_option("--out", o.out, "write output to this file instead of stdout");

  try {
    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    auto [text, code] = execute(command, o);
    if (o.out.empty()) {
      out << text;
    } else {
      io::write_file_atomic(o.out, text);
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << app.get_subcommands().front()->help();
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
}

}  // namespace fhc::cli

#include "xkraw/cli_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "xkraw/classical_walk.hpp"
#include "xkraw/errors.hpp"
#include "xkraw/krawtchouk.hpp"

namespace xkraw::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Exact value of a decimal literal such as "0.375".
Rational parse_decimal(std::string_view s) {
  const auto dot = s.find('.');
  std::string digits(s.substr(0, dot));
  std::string frac(s.substr(dot + 1));
  if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("not a decimal literal: '" + std::string(s) + "'");
  }
  if (digits.empty() || digits == "-" || digits == "+") digits += "0";
  const Rational whole = Rational::parse(digits);
  Rational tail = Rational::parse(frac) / pow(Rational(10), static_cast<int>(frac.size()));
  return whole.sign() < 0 || s.front() == '-' ? whole - tail : whole + tail;
}

Rational parse_exact(std::string_view s) {
  s = trim(s);
  if (s.find('.') != std::string_view::npos) return parse_decimal(s);
  return Rational::parse(s);
}

std::string pi_text(const Rational& multiple) {
  if (multiple.is_zero()) return "0";
  return multiple.str() + " pi";
}

void write_row(std::ostringstream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << cells[i];
  }
  os << '\n';
}

std::string fmt_svg(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

Rational parse_probability(std::string_view text) {
  Rational p;
  try {
    p = parse_exact(text);
  } catch (const std::exception&) {
    throw InvalidConfig("p must be a rational 'a/b', got '" + std::string(text) + "'");
  }
  if (p <= Rational(0) || p >= Rational(1)) throw InvalidConfig("p must satisfy 0 < p < 1, got " + p.str());
  return p;
}

WalkTime parse_time(std::string_view text) {
  std::string_view s = trim(text);
  try {
    if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
      s.remove_suffix(2);
      s = trim(s);
      if (!s.empty() && s.back() == '*') s = trim(s.substr(0, s.size() - 1));
      return WalkTime::pi_multiple(s.empty() ? Rational(1) : parse_exact(s));
    }
    if (s.find('/') != std::string_view::npos) return WalkTime::real(parse_exact(s).to_double());
    std::size_t used = 0;
    const double v = std::stod(std::string(s), &used);
    if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument("trailing characters");
    return WalkTime::real(v);
  } catch (const std::exception&) {
    throw InvalidConfig("cannot parse time '" + std::string(text) + "'");
  }
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drops the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string render_svg(const BubblePlotSpec& spec) {
  constexpr double kSpacing = BubblePlotSpec::kSpacing;
  constexpr double kLeft = 130.0;
  constexpr double kTop = 20.0;
  constexpr double kBottom = 40.0;
  const std::size_t sites = spec.rows.empty() ? 0 : spec.rows.front().magnitudes.size();
  const double width = kLeft + static_cast<double>(sites) * kSpacing + 20.0;
  const double height = kTop + static_cast<double>(spec.rows.size()) * kSpacing + kBottom;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt_svg(width) << "\" height=\""
     << fmt_svg(height) << "\" viewBox=\"0 0 " << fmt_svg(width) << ' ' << fmt_svg(height) << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << fmt_svg(width) << "\" height=\"" << fmt_svg(height)
     << "\" fill=\"white\"/>\n";
  for (std::size_t r = 0; r < spec.rows.size(); ++r) {
    const BubbleRow& row = spec.rows[r];
    const double cy = kTop + (static_cast<double>(r) + 0.5) * kSpacing;
    os << "<text x=\"10\" y=\"" << fmt_svg(cy + 5) << "\" font-family=\"sans-serif\" font-size=\"14\">t = "
       << row.label << "</text>\n";
    os << "<line x1=\"" << fmt_svg(kLeft) << "\" y1=\"" << fmt_svg(cy) << "\" x2=\""
       << fmt_svg(kLeft + static_cast<double>(sites) * kSpacing) << "\" y2=\"" << fmt_svg(cy)
       << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    for (std::size_t j = 0; j < row.magnitudes.size(); ++j) {
      const double m = row.magnitudes[j];
      if (!(m > kZeroThreshold)) continue;
      const double scale = spec.area_mode ? std::sqrt(m) : m;
      const double radius = BubblePlotSpec::kMaxRadiusFraction * kSpacing * std::min(scale, 1.0);
      const double cx = kLeft + (static_cast<double>(j) + 0.5) * kSpacing;
      os << "<circle cx=\"" << fmt_svg(cx) << "\" cy=\"" << fmt_svg(cy) << "\" r=\"" << fmt_svg(radius)
         << "\" fill=\"#1f4e9e\" data-site=\"" << j << "\" data-magnitude=\"" << fmt_svg(m) << "\"/>\n";
    }
  }
  const double label_y = kTop + static_cast<double>(spec.rows.size()) * kSpacing + 25.0;
  for (std::size_t j = 0; j < sites; ++j) {
    os << "<text x=\"" << fmt_svg(kLeft + (static_cast<double>(j) + 0.5) * kSpacing) << "\" y=\""
       << fmt_svg(label_y) << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << j
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// poly

std::string poly_csv(const ModelConfig& cfg) {
  const XPolynomialTable table = build_table(cfg);
  std::ostringstream os;
  write_row(os, {"quantity", "n", "x", "value"});
  for (const int n : cfg.labels()) {
    for (const int x : cfg.grid()) {
      write_row(os, {"K", std::to_string(n), std::to_string(x), table.value(n, x).str()});
    }
  }
  for (const int x : cfg.grid()) write_row(os, {"w", "", std::to_string(x), table.weight(x).str()});
  for (const int n : cfg.labels()) write_row(os, {"h", std::to_string(n), "", table.norm(n).str()});
  return os.str();
}

std::string poly_json(const ModelConfig& cfg) {
  const XPolynomialTable table = build_table(cfg);
  nlohmann::ordered_json j;
  j["N"] = cfg.N();
  j["p"] = cfg.p().str();
  j["ell"] = cfg.ell();
  auto& values = j["values"] = nlohmann::ordered_json::array();
  for (const int n : cfg.labels()) {
    for (const int x : cfg.grid()) values.push_back({{"n", n}, {"x", x}, {"value", table.value(n, x).str()}});
  }
  auto& weights = j["weights"] = nlohmann::ordered_json::array();
  for (const int x : cfg.grid()) weights.push_back({{"x", x}, {"value", table.weight(x).str()}});
  auto& norms = j["norms"] = nlohmann::ordered_json::array();
  for (const int n : cfg.labels()) norms.push_back({{"n", n}, {"value", table.norm(n).str()}});
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// classical

namespace {

struct ClassicalRows {
  std::vector<std::vector<std::string>> rows;
};

void require_classical(const RunConfig& run) {
  if (run.times.empty() && !run.stationary) throw InvalidConfig("classical needs --t or --stationary");
  for (const WalkTime& t : run.times) {
    if (t.value() < 0.0) throw InvalidConfig("classical times must be non-negative");
  }
}

ClassicalRows classical_rows(const RunConfig& run) {
  require_classical(run);
  const ModelConfig cfg = run.model();
  const ClassicalWalk walk(cfg);
  const std::size_t size = cfg.size();
  ClassicalRows out;
  for (const WalkTime& t : run.times) {
    const TransitionMatrix p = walk.transition(t.value());
    TransitionMatrix oracle;
    if (run.oracle) oracle = matexp_oracle(walk.rates(), t.value());
    for (std::size_t i = 0; i < size; ++i) {
      std::vector<double> empirical;
      if (run.oracle) {
        empirical = gillespie_sample(cfg, cfg.label(i), t.value(), run.trajectories, run.seed).frequencies();
      }
      for (std::size_t j = 0; j < size; ++j) {
        std::vector<std::string> row{t.str(), std::to_string(cfg.label(i)), std::to_string(cfg.label(j)),
                                     format_double(p.entries(i, j))};
        if (run.oracle) {
          row.push_back(format_double(oracle.entries(i, j)));
          row.push_back(format_double(oracle.entries(i, j) - p.entries(i, j)));
          row.push_back(format_double(empirical[j]));
          row.push_back(format_double(empirical[j] - p.entries(i, j)));
        }
        out.rows.push_back(std::move(row));
      }
    }
  }
  if (run.stationary) {
    const std::vector<Rational> r = stationary(cfg);
    for (std::size_t j = 0; j < size; ++j) {
      std::vector<std::string> row{"inf", "*", std::to_string(cfg.label(j)), r[j].str()};
      if (run.oracle) row.insert(row.end(), 4, "");
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

std::vector<std::string> classical_header(const RunConfig& run) {
  std::vector<std::string> header{"t", "i", "j", "probability"};
  if (run.oracle) header.insert(header.end(), {"matexp", "matexp_delta", "gillespie", "gillespie_delta"});
  return header;
}

}  // namespace

std::string classical_csv(const RunConfig& run) {
  const ClassicalRows rows = classical_rows(run);
  std::ostringstream os;
  write_row(os, classical_header(run));
  for (const auto& row : rows.rows) write_row(os, row);
  return os.str();
}

std::string classical_json(const RunConfig& run) {
  const ClassicalRows rows = classical_rows(run);
  const std::vector<std::string> header = classical_header(run);
  nlohmann::ordered_json j;
  j["N"] = run.N;
  j["p"] = run.p.str();
  auto& arr = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t k = 0; k < header.size(); ++k) obj[header[k]] = row[k];
    arr.push_back(std::move(obj));
  }
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// quantum

namespace {

void require_site(const RunConfig& run) {
  if (run.start < 0 || run.start > run.N + 1) {
    throw IndexOutOfRange("start site " + std::to_string(run.start) + " outside 0.." + std::to_string(run.N + 1));
  }
}

std::vector<std::vector<double>> magnitude_rows(const RunConfig& run) {
  require_site(run);
  const QuantumWalk walk(run.model());
  std::vector<std::vector<double>> out;
  for (const WalkTime& t : run.times) {
    std::vector<double> mags;
    for (const auto& c : walk.row(run.start, t)) mags.push_back(std::abs(c));
    out.push_back(std::move(mags));
  }
  return out;
}

}  // namespace

std::string quantum_csv(const RunConfig& run) {
  const auto rows = magnitude_rows(run);
  std::ostringstream os;
  std::vector<std::string> header{"t"};
  for (int j = 0; j <= run.N + 1; ++j) header.push_back(std::to_string(j));
  write_row(os, header);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<std::string> row{run.times[r].str()};
    for (const double m : rows[r]) row.push_back(format_double(m));
    write_row(os, row);
  }
  return os.str();
}

std::string quantum_json(const RunConfig& run) {
  const auto rows = magnitude_rows(run);
  nlohmann::ordered_json j;
  j["N"] = run.N;
  j["p"] = run.p.str();
  j["start"] = run.start;
  auto& arr = j["rows"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    nlohmann::ordered_json mags = nlohmann::ordered_json::array();
    for (const double m : rows[r]) mags.push_back(format_double(m));
    arr.push_back({{"t", run.times[r].str()}, {"magnitudes", mags}});
  }
  return j.dump(2) + "\n";
}

BubblePlotSpec quantum_plot(const RunConfig& run) {
  const auto rows = magnitude_rows(run);
  BubblePlotSpec spec;
  spec.area_mode = run.area_mode;
  for (std::size_t r = 0; r < rows.size(); ++r) spec.rows.push_back({run.times[r].str(), rows[r]});
  return spec;
}

std::string detect_report(const RunConfig& run) {
  require_site(run);
  const RevivalReport report = revival_report(run.model(), run.start);
  std::ostringstream os;
  os << "t0 = " << pi_text(report.t0) << '\n';
  os << "start = " << report.start << '\n';
  os << "return_fidelity = " << format_double(report.return_fidelity) << '\n';
  os << "half_time_support = " << to_string(report.half_time_support) << '\n';
  if (report.theorem_prediction) {
    os << "theorem_t0 = " << pi_text(*report.theorem_t0) << '\n';
    os << "theorem_prediction = " << to_string(*report.theorem_prediction) << '\n';
    os << "theorem_half_time_support = " << to_string(*report.theorem_half_time_support) << '\n';
    os << "agreement = " << (report.agreement ? "true" : "false") << '\n';
  } else {
    os << "theorem_prediction = n/a\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// dispatch

namespace {

void add_common(CLI::App& app, RunConfig& run, std::string& p_text, std::vector<std::string>& time_text,
                std::string& format_text) {
  app.add_option("--N", run.N, "grid size N")->required();
  app.add_option("--p", p_text, "probability p as a/b")->required();
  app.add_option("--ell", run.ell, "exceptional level")->capture_default_str();
  app.add_option("--t", time_text, "time, e.g. 0.5, 7pi or 7/2pi (repeatable)");
  app.add_option("--start", run.start, "start site")->capture_default_str();
  app.add_option("--seed", run.seed, "random seed")->capture_default_str();
  app.add_option("--trajectories", run.trajectories, "Gillespie trajectories")->capture_default_str();
  app.add_flag("--oracle", run.oracle, "append matrix-exponential and Gillespie columns");
  app.add_flag("--stationary", run.stationary, "append the stationary distribution");
  app.add_flag("--detect", run.detect, "report perfect return and fractional revival");
  app.add_flag("--area-mode", run.area_mode, "circle area proportional to magnitude");
  app.add_option("--out", run.out, "output file (default: stdout)");
  app.add_option("--format", format_text, "csv | svg | json")->check(CLI::IsMember({"csv", "svg", "json"}));
}

std::string produce(const RunConfig& run, std::ostream& out) {
  const ModelConfig cfg = run.model();
  switch (run.command) {
    case Command::Poly:
      if (run.format == Format::Svg) throw InvalidConfig("poly has no svg output");
      return run.format == Format::Json ? poly_json(cfg) : poly_csv(cfg);
    case Command::Classical:
      cfg.require_walk();
      if (run.format == Format::Svg) throw InvalidConfig("classical has no svg output");
      return run.format == Format::Json ? classical_json(run) : classical_csv(run);
    case Command::Quantum:
      cfg.require_walk();
      if (run.detect) out << detect_report(run);
      if (run.times.empty()) {
        if (run.detect) return {};
        throw InvalidConfig("quantum needs --t or --detect");
      }
      if (run.format == Format::Svg) return render_svg(quantum_plot(run));
      return run.format == Format::Json ? quantum_json(run) : quantum_csv(run);
  }
  return {};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exceptional Krawtchouk polynomials, classical and quantum walks", "xkraw"};
  app.require_subcommand(1);
  RunConfig config;
  std::string p_text;
  std::vector<std::string> time_text;
  std::string format_text = "csv";
  bool svg = false;
  CLI::App* poly = app.add_subcommand("poly", "exact polynomial table, weights and norms");
  CLI::App* classical = app.add_subcommand("classical", "birth-and-death transition probabilities");
  CLI::App* quantum = app.add_subcommand("quantum", "quantum-walk amplitudes and revival detection");
  for (CLI::App* sub : {poly, classical, quantum}) add_common(*sub, config, p_text, time_text, format_text);
  quantum->add_flag("--svg", svg, "render a bubble plot");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    config.command = poly->parsed() ? Command::Poly : (classical->parsed() ? Command::Classical : Command::Quantum);
    config.p = parse_probability(p_text);
    for (const auto& t : time_text) config.times.push_back(parse_time(t));
    config.format = format_text == "json" ? Format::Json : (format_text == "svg" ? Format::Svg : Format::Csv);
    if (svg) config.format = Format::Svg;
    if (config.trajectories == 0) throw InvalidConfig("--trajectories must be positive");

    const std::string body = produce(config, out);
    if (config.out.empty()) {
      out << body;
    } else {
      std::ofstream file(config.out, std::ios::binary);
      if (!file) throw InvalidConfig("cannot open output file " + config.out);
      file << body;
    }
    return kExitOk;
  } catch (const InvalidConfig& e) {
    err << "error: " << e.what() << '\n';
  } catch (const IndexOutOfRange& e) {
    err << "error: " << e.what() << '\n';
  } catch (const NegativeRate& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace xkraw::cli

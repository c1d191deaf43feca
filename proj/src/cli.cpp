#include "takagi/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "takagi/differentials.hpp"
#include "takagi/digits.hpp"
#include "takagi/errors.hpp"
#include "takagi/evaluator.hpp"
#include "takagi/scan.hpp"
#include "takagi/sets.hpp"

namespace takagi::cli {

namespace {

using Json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t default_terms() {
  const char* env = std::getenv(kTermsEnvVar);
  if (env == nullptr || *env == '\0') return kDefaultTerms;
  const std::string text(env);
  if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      text.size() > 9) {
    throw ParseError(std::string(kTermsEnvVar) + ": bad token '" + text + "'");
  }
  const std::size_t n = std::stoul(text);
  if (n == 0) throw DomainError(std::string(kTermsEnvVar) + " must be positive");
  return n;
}

Json record(const std::string& input, const std::string& command, bool exact, Json payload) {
  Json j;
  j["input"] = input;
  j["command"] = command;
  j["exact"] = exact;
  j["payload"] = std::move(payload);
  return j;
}

Json optional_index(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json cmd_eval(const std::string& input, std::optional<std::size_t> terms, bool exact, int digits) {
  const Rational x = parse_point(input);
  Json payload;
  if (exact) {
    const Rational t = takagi_exact(x);
    payload["value"] = t.to_string();
    payload["decimal"] = t.to_decimal(digits);
    payload["digits"] = digits;
    return record(input, "eval", true, std::move(payload));
  }
  const CertifiedValue c = takagi_certified(x, terms ? *terms : default_terms());
  payload["value"] = c.value.to_string();
  payload["error_bound"] = c.error_bound.to_string();
  payload["lower"] = c.lower().to_string();
  payload["upper"] = c.upper().to_string();
  payload["terms"] = c.terms_used;
  payload["decimal"] = c.value.to_decimal(digits);
  payload["digits"] = digits;
  return record(input, "eval", false, std::move(payload));
}

Json cmd_classify(const std::string& input) {
  const Rational x = parse_point(input);
  const DigitExpansion e = rational_to_expansion(x);
  const Classification c = classify(e);
  Json payload;
  payload["expansion"] = e.to_string();
  payload["case"] = to_string(c.tag);
  payload["witness_m"] = optional_index(c.witness);
  payload["c_x"] = c.slope_offset ? Json(*c.slope_offset) : Json(nullptr);
  payload["superdiff"] = superdifferential(e).to_string();
  payload["subdiff"] = subdifferential(e) == Subdifferential::AllReals ? "R" : "empty";
  payload["local_max"] = is_local_max(e);
  if (e.is_dyadic()) {
    payload["slope_liminf"] = nullptr;
    payload["slope_limsup"] = nullptr;
  } else {
    const SlopeLimits s = slope_limits(e);
    payload["slope_liminf"] = s.liminf.to_string();
    payload["slope_limsup"] = s.limsup.to_string();
  }
  return record(input, "classify", true, std::move(payload));
}

Json cmd_dini(const std::string& input, std::size_t depth, std::size_t width, int digits,
              Exec exec) {
  const Rational x = parse_point(input);
  const DigitExpansion e = rational_to_expansion(x);
  DiniConfig config;
  config.depth = depth;
  config.width = width;
  const DiniEstimate est = dini_estimate(x, config, exec);
  Json payload;
  payload["depth"] = depth;
  payload["width"] = width;
  payload["digits"] = digits;
  payload["d_minus_est"] = est.lower_left.to_decimal(digits);
  payload["d_minus_exact"] = est.lower_left.to_string();
  payload["D_plus_est"] = est.upper_right.to_decimal(digits);
  payload["D_plus_exact"] = est.upper_right.to_string();
  payload["divergent_up"] = est.divergent_up;
  payload["divergent_down"] = est.divergent_down;
  if (e.is_dyadic()) {
    Json table = Json::array();
    for (std::size_t p = *dyadic_level(e) + 1; p <= depth; ++p) {
      const DyadicQuotient q = dyadic_quotient(e, p);
      table.push_back(Json{{"p", p}, {"quotient", q.quotient.to_string()},
                           {"predicted", q.predicted}});
    }
    payload["dyadic"] = std::move(table);
  } else {
    Json table = Json::array();
    for (std::size_t n = 3; n <= depth; ++n) {
      const MirrorQuotient q = mirror_quotient(e, n);
      table.push_back(Json{{"n", n},
                           {"mirror_point", q.mirror_point.to_string()},
                           {"quotient", q.quotient.to_string()},
                           {"predicted", q.predicted}});
    }
    payload["mirror"] = std::move(table);
  }
  return record(input, "dini", true, std::move(payload));
}

Json cmd_maxset(const std::string& input) {
  const Rational x = parse_point(input);
  const DigitExpansion e = rational_to_expansion(x);
  Json payload;
  payload["expansion"] = e.to_string();
  payload["in_M"] = in_M(e);
  payload["max_value"] = max_value_check(e);
  payload["in_A"] = optional_index(in_A(e));
  if (const auto pre = a_identity_preimage(e)) {
    payload["a_identity"] = Json{{"m", pre->first}, {"k", pre->second.get_str()}};
  } else {
    payload["a_identity"] = nullptr;
  }
  if (const auto w = in_script_A(e)) {
    payload["in_script_A"] = Json{{"m", w->m},
                                  {"dyadic_part", w->dyadic_part.to_string()},
                                  {"scaled_point", w->scaled_point.to_string()}};
  } else {
    payload["in_script_A"] = nullptr;
  }
  return record(input, "maxset", true, std::move(payload));
}

void cmd_scan(const std::string& from, const std::string& to, const std::string& step,
              const std::string& path, const std::string& format, int digits, Exec exec,
              std::ostream& out) {
  const std::vector<ScanRow> rows =
      scan(parse_point(from), parse_point(to), parse_point(step), exec);
  std::ofstream file;
  std::ostream* sink = &out;
  if (!path.empty()) {
    file.open(path, std::ios::out | std::ios::trunc);
    if (!file) throw IoError("cannot write '" + path + "'");
    sink = &file;
  }
  if (format == "jsonl") {
    write_jsonl(*sink, rows, digits);
  } else {
    write_csv(*sink, rows, digits);
  }
  sink->flush();
  if (!*sink) throw IoError("failed writing '" + path + "'");
}

}  // namespace

Rational parse_point(std::string_view text) {
  if (text.find('.') != std::string_view::npos) {
    return expansion_to_rational(DigitExpansion::parse(text));
  }
  return Rational::parse(text);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Takagi function evaluation and superdifferential classification", "takagi"};
  app.require_subcommand(1);

  std::string point;
  int digits = 20;

  auto* eval = app.add_subcommand("eval", "Evaluate T exactly or with a certified bracket");
  std::size_t terms = 0;
  bool exact = false;
  eval->add_option("point", point, "p/q or k.pre(per)")->required();
  auto* terms_opt = eval->add_option("--terms", terms, "Number of series terms")
                        ->check(CLI::PositiveNumber);
  eval->add_flag("--exact", exact, "Closed-form exact value");
  eval->add_option("--digits", digits, "Decimal digits")->check(CLI::NonNegativeNumber);

  auto* classify_cmd = app.add_subcommand("classify", "Superdifferential case analysis");
  classify_cmd->add_option("point", point, "p/q or k.pre(per)")->required();

  auto* dini = app.add_subcommand("dini", "Sampled Dini derivatives and exact quotient tables");
  std::size_t depth = 24;
  std::size_t width = 8;
  bool serial = false;
  dini->add_option("point", point, "p/q or k.pre(per)")->required();
  dini->add_option("--depth", depth, "Finest sampling depth (>= 4)");
  dini->add_option("--width", width, "Grid points per side and depth (>= 2)");
  dini->add_option("--digits", digits, "Decimal digits")->check(CLI::NonNegativeNumber);
  dini->add_flag("--serial", serial, "Use the serial reference kernel");

  auto* maxset = app.add_subcommand("maxset", "Membership in M, A and the superdifferentiable set");
  maxset->add_option("point", point, "p/q or k.pre(per)")->required();

  auto* scan_cmd = app.add_subcommand("scan", "Tabulate T and its case over a rational grid");
  std::string from;
  std::string to;
  std::string step;
  std::string path;
  std::string format = "csv";
  scan_cmd->add_option("--from", from, "First grid point")->required();
  scan_cmd->add_option("--to", to, "Last admissible grid point")->required();
  scan_cmd->add_option("--step", step, "Grid spacing")->required();
  scan_cmd->add_option("--out", path, "Output file (default: stdout)");
  scan_cmd->add_option("--format", format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  scan_cmd->add_option("--digits", digits, "Decimal digits")->check(CLI::NonNegativeNumber);
  scan_cmd->add_flag("--serial", serial, "Use the serial reference kernel");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  const Exec exec = serial ? Exec::Serial : Exec::Parallel;
  try {
    if (eval->parsed()) {
      std::optional<std::size_t> t;
      if (terms_opt->count() > 0) t = terms;
      out << cmd_eval(point, t, exact, digits).dump() << '\n';
    } else if (classify_cmd->parsed()) {
      out << cmd_classify(point).dump() << '\n';
    } else if (dini->parsed()) {
      out << cmd_dini(point, depth, width, digits, exec).dump() << '\n';
    } else if (maxset->parsed()) {
      out << cmd_maxset(point).dump() << '\n';
    } else if (scan_cmd->parsed()) {
      cmd_scan(from, to, step, path, format, digits, exec, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace takagi::cli

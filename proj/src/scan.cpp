#include "takagi/scan.hpp"

#include <json.hpp>
#include <ostream>

#include "takagi/digits.hpp"
#include "takagi/errors.hpp"
#include "takagi/evaluator.hpp"

namespace takagi {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::vector<Rational> scan_grid(const Rational& from, const Rational& to, const Rational& step) {
  if (step.sign() <= 0) throw DomainError("scan step must be positive, got " + step.to_string());
  if (!(from < to)) {
    throw DomainError("scan needs from < to, got " + from.to_string() + " >= " + to.to_string());
  }
  const Integer count = ((to - from) / step).floor() + 1;
  std::vector<Rational> grid;
  grid.reserve(count.get_ui());
  for (Integer i = 0; i < count; ++i) grid.push_back(from + Rational(i) * step);
  return grid;
}

ScanRow scan_point(const Rational& x) {
  const DigitExpansion e = rational_to_expansion(x);
  return ScanRow{x, takagi_exact(x), classify(e).tag, superdifferential(e)};
}

std::vector<ScanRow> scan(const Rational& from, const Rational& to, const Rational& step,
                          Exec exec) {
  const std::vector<Rational> grid = scan_grid(from, to, step);
  return map_indices<ScanRow>(grid.size(), [&](std::size_t i) { return scan_point(grid[i]); },
                              exec);
}

void write_csv(std::ostream& os, std::span<const ScanRow> rows, int digits) {
  os << kScanCsvHeader << '\n';
  for (const ScanRow& r : rows) {
    os << r.x.to_string() << ',' << r.value.to_string() << ',' << r.value.to_decimal(digits)
       << ',' << to_string(r.tag) << ',' << csv_field(r.superdiff.to_string()) << '\n';
  }
}

void write_jsonl(std::ostream& os, std::span<const ScanRow> rows, int digits) {
  for (const ScanRow& r : rows) {
    nlohmann::ordered_json j;
    j["x"] = r.x.to_string();
    j["t_exact"] = r.value.to_string();
    j["t_decimal"] = r.value.to_decimal(digits);
    j["case"] = to_string(r.tag);
    j["superdiff"] = r.superdiff.to_string();
    os << j.dump() << '\n';
  }
}

}  // namespace takagi

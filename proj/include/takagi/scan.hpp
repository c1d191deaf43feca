#pragma once

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "takagi/differentials.hpp"
#include "takagi/parallel.hpp"
#include "takagi/rational.hpp"

namespace takagi {

struct ScanRow {
  Rational x;
  Rational value;
  CaseTag tag = CaseTag::Dyadic;
  SuperdiffResult superdiff = SuperdiffResult::empty();
};

inline constexpr std::string_view kScanCsvHeader = "x,t_exact,t_decimal,case,superdiff";

/// from, from + step, ... up to the last point <= to. Throws DomainError
/// unless from < to and step > 0.
std::vector<Rational> scan_grid(const Rational& from, const Rational& to, const Rational& step);

/// One row per grid point, in grid order regardless of exec.
std::vector<ScanRow> scan(const Rational& from, const Rational& to, const Rational& step,
                          Exec exec = Exec::Parallel);

ScanRow scan_point(const Rational& x);

/// Header line then one line per row. Fields containing commas are quoted.
void write_csv(std::ostream& os, std::span<const ScanRow> rows, int digits);
void write_jsonl(std::ostream& os, std::span<const ScanRow> rows, int digits);

}  // namespace takagi

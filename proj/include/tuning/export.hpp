#pragma once

/**
 * @file export.hpp
 * @brief Interchange formats: tuning files (.scl) and CSV/JSON comparison tables.
 */

#include "tuning/interval.hpp"
#include "tuning/natural.hpp"
#include "tuning/pythagorean.hpp"
#include "tuning/rational.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace tuning {

/// One pitch line of a tuning file: an exact ratio or a cents value
/// (cents are kept exact as k*1200/n and rendered with five decimals).
struct ScaleEntry {
  std::optional<NoteName> name;
  std::string exact_form;
  enum class Kind { Ratio, Cents };
  Kind kind = Kind::Ratio;
  Rational value;

  static ScaleEntry ratio(std::optional<NoteName> name, std::string form, Rational r);
  static ScaleEntry cents(std::optional<NoteName> name, std::string form, Rational c);

  friend bool operator==(const ScaleEntry&, const ScaleEntry&) = default;
};

/// Scale ready for export. The leading 1/1 is implicit and never stored.
struct ScaleDocument {
  std::string description;
  double base_frequency_hz = 0.0;
  std::vector<ScaleEntry> entries;
};

ScaleDocument natural_document(double base_hz);
ScaleDocument pythagorean_chromatic_document(double base_hz);
/// Throws DomainError for n < 1.
ScaleDocument et_document(std::int64_t n, double base_hz);

/// Tuning-file text: "! <filename>", description, count, one pitch per line, LF.
std::string export_scl(const ScaleDocument& doc, const std::string& filename);

struct TableCell {
  std::string exact;
  std::string decimal;
};

struct ComparisonTable {
  struct Row {
    std::string degree;
    TableCell equal;
    TableCell pythagorean;
    TableCell natural;
  };
  std::vector<Row> rows;
};

/// Table from compare_three_scales() with `digits` truncated decimals.
ComparisonTable build_comparison_table(int digits = 5);

enum class TableFormat { Csv, Json };

/// CSV: header "degree,E,P,N" and decimal cells. JSON: exact forms and decimals.
std::string export_table(const ComparisonTable& table, TableFormat format);

/// Writes `text` to `path`; throws std::runtime_error when the file cannot be written.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace tuning

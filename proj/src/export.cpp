#include "tuning/export.hpp"

#include "tuning/errors.hpp"
#include "tuning/monzo.hpp"
#include "tuning/ratio_core.hpp"

#include <fmt/format.h>
#include "json.hpp"

#include <fstream>

namespace tuning {

namespace {

std::string form_of(const Rational& r) {
  const auto m = rational_to_monzo(r);
  return m ? exact_form(*m) : r.str();
}

}  // namespace

ScaleEntry ScaleEntry::ratio(std::optional<NoteName> name, std::string form, Rational r) {
  return {std::move(name), std::move(form), Kind::Ratio, std::move(r)};
}

ScaleEntry ScaleEntry::cents(std::optional<NoteName> name, std::string form, Rational c) {
  return {std::move(name), std::move(form), Kind::Cents, std::move(c)};
}

ScaleDocument natural_document(double base_hz) {
  ScaleDocument doc{fmt::format("Natural diatonic scale, 5-limit, base {:.6f} Hz", base_hz),
                    base_hz,
                    {}};
  const NaturalScale scale = assemble_diatonic();
  for (std::size_t i = 1; i < scale.degrees.size(); ++i) {
    const auto& d = scale.degrees[i];
    doc.entries.push_back(ScaleEntry::ratio(d.name, form_of(d.ratio), d.ratio));
  }
  return doc;
}

ScaleDocument pythagorean_chromatic_document(double base_hz) {
  ScaleDocument doc{
      fmt::format("Pythagorean chromatic selection, 18 sounds, base {:.6f} Hz", base_hz), base_hz, {}};
  const auto pitches = select_chromatic(generate_fifths(12, 12));
  for (std::size_t i = 1; i < pitches.size(); ++i) {
    const auto& p = pitches[i];
    doc.entries.push_back(ScaleEntry::ratio(p.name, form_of(p.ratio), p.ratio));
  }
  return doc;
}

ScaleDocument et_document(std::int64_t n, double base_hz) {
  const EtScale scale = generate_et(n, base_hz);
  ScaleDocument doc{fmt::format("{}-division equal temperament, base {:.6f} Hz", n, base_hz),
                    base_hz,
                    {}};
  for (std::size_t i = 1; i < scale.pitches.size(); ++i) {
    const EtPitch& p = scale.pitches[i];
    std::optional<NoteName> name;
    if (n == 12) name = note_name(p.k(), SpellingPreference::Sharp);
    doc.entries.push_back(ScaleEntry::cents(name, p.form(), Rational(1200 * p.k(), p.n())));
  }
  return doc;
}

std::string export_scl(const ScaleDocument& doc, const std::string& filename) {
  std::string out = "! " + filename + "\n";
  out += doc.description + "\n";
  out += std::to_string(doc.entries.size()) + "\n";
  for (const ScaleEntry& e : doc.entries) {
    out += e.kind == ScaleEntry::Kind::Ratio ? e.value.ratio_str() : to_fixed(e.value, 5);
    out += "\n";
  }
  return out;
}

ComparisonTable build_comparison_table(int digits) {
  ComparisonTable table;
  for (const ComparisonRow& row : compare_three_scales()) {
    table.rows.push_back({row.name.str(),
                          {row.equal.form(), et_value(row.equal, digits)},
                          {form_of(row.pythagorean), to_decimal(row.pythagorean, digits)},
                          {form_of(row.natural), to_decimal(row.natural, digits)}});
  }
  return table;
}

std::string export_table(const ComparisonTable& table, TableFormat format) {
  if (format == TableFormat::Csv) {
    std::string out = "degree,E,P,N\n";
    for (const auto& r : table.rows) {
      out += fmt::format("{},{},{},{}\n", r.degree, r.equal.decimal, r.pythagorean.decimal,
                         r.natural.decimal);
    }
    return out;
  }
  auto cell = [](const TableCell& c) {
    return nlohmann::ordered_json{{"exact", c.exact}, {"decimal", c.decimal}};
  };
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : table.rows) {
    rows.push_back({{"degree", r.degree},
                    {"E", cell(r.equal)},
                    {"P", cell(r.pythagorean)},
                    {"N", cell(r.natural)}});
  }
  nlohmann::ordered_json doc{{"columns", {"E", "P", "N"}}, {"rows", rows}};
  return doc.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace tuning

#include "tuning/export.hpp"
#include "tuning/natural.hpp"
#include "tuning/pythagorean.hpp"
#include "tuning/render.hpp"

#include "doctest.h"
#include "support/scl_reader.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tuning;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const char* name) { return read_file(std::filesystem::path(TUNING_GOLDEN_DIR) / name); }

}  // namespace

TEST_CASE("natural scale tuning file") {
  const std::string expected =
      "! natural.scl\n"
      "Natural diatonic scale, 5-limit, base 261.625565 Hz\n"
      "7\n"
      "9/8\n"
      "5/4\n"
      "4/3\n"
      "3/2\n"
      "5/3\n"
      "15/8\n"
      "2/1\n";
  CHECK(export_scl(natural_document(default_base_hz()), "natural.scl") == expected);
}

TEST_CASE("equal-tempered tuning file") {
  const std::string text = export_scl(et_document(12, default_base_hz()), "et12.scl");
  std::string expected = "! et12.scl\n12-division equal temperament, base 261.625565 Hz\n12\n";
  for (int k = 1; k <= 12; ++k) expected += std::to_string(k * 100) + ".00000\n";
  CHECK(text == expected);
  CHECK(export_scl(et_document(7, 440.0), "x").find("171.42857\n") != std::string::npos);
  CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("pythagorean tuning file") {
  const auto doc = pythagorean_chromatic_document(default_base_hz());
  CHECK(doc.entries.size() == 17);
  const std::string text = export_scl(doc, "pyth.scl");
  CHECK(text.find("\n2187/2048\n") != std::string::npos);
  CHECK(text.substr(text.size() - 5) == "\n2/1\n");
}

TEST_CASE("tuning file round trip") {
  const std::vector<ScaleDocument> docs{natural_document(440.0), pythagorean_chromatic_document(440.0),
                                        et_document(12, 440.0), et_document(19, 440.0),
                                        et_document(31, 440.0)};
  for (const auto& doc : docs) {
    const auto parsed = testing_support::parse_scl(export_scl(doc, "rt.scl"));
    CHECK(parsed.filename_comment == "rt.scl");
    CHECK(parsed.description == doc.description);
    REQUIRE(parsed.count == doc.entries.size());
    REQUIRE(parsed.entries.size() == doc.entries.size());
    for (std::size_t i = 0; i < doc.entries.size(); ++i) {
      CHECK(parsed.entries[i].kind == doc.entries[i].kind);
      if (doc.entries[i].kind == ScaleEntry::Kind::Ratio) {
        CHECK(parsed.entries[i].value == doc.entries[i].value);
      } else {
        // Cents are written with five decimals: re-read values are the truncations.
        const Rational scaled = doc.entries[i].value * Rational(100000);
        CHECK(parsed.entries[i].value == Rational(scaled.floor(), 100000));
      }
    }
  }
}

TEST_CASE("write_text_file") {
  const auto dir = std::filesystem::temp_directory_path() / "tuning_export_test";
  std::filesystem::create_directories(dir);
  write_text_file(dir / "a.txt", "abc\n");
  CHECK(read_file(dir / "a.txt") == "abc\n");
  CHECK_THROWS_AS(write_text_file(dir / "missing" / "b.txt", "x"), std::runtime_error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("comparison table csv") {
  const std::string csv = export_table(build_comparison_table(), TableFormat::Csv);
  CHECK(csv.rfind("degree,E,P,N\n", 0) == 0);
  CHECK(csv.find("\nRE,1.12246,1.125,1.125\n") != std::string::npos);
  CHECK(csv.find("\nSI,1.88774,1.89843,1.875\n") != std::string::npos);
  CHECK(export_table(ComparisonTable{}, TableFormat::Csv) == "degree,E,P,N\n");
}

TEST_CASE("comparison table json") {
  const auto j = nlohmann::json::parse(export_table(build_comparison_table(), TableFormat::Json));
  REQUIRE(j["rows"].size() == 8);
  const auto& si = j["rows"][6];
  CHECK(si["degree"] == "SI");
  CHECK(si["P"]["exact"] == "3^5/2^7");
  CHECK(si["P"]["decimal"] == "1.89843");
  CHECK(si["N"]["exact"] == "3*5/2^3");
  CHECK(si["E"]["exact"] == "2^(11/12)");
  CHECK(j["columns"] == nlohmann::json::array({"E", "P", "N"}));
  const auto empty = nlohmann::json::parse(export_table(ComparisonTable{}, TableFormat::Json));
  CHECK(empty["rows"].empty());
}

TEST_CASE("golden tables") {
  const auto t = generate_fifths(12, 12);
  CHECK(render_fifths(t, 5) == golden("fifths.txt"));
  CHECK(render_pairing(pairing_table(t), 12, 5) == golden("pairing.txt"));
  CHECK(render_chromatic(select_chromatic(t), 5) == golden("chromatic.txt"));
  CHECK(render_comparison(compare_three_scales(), 5) == golden("compare.txt"));
}

TEST_CASE("render series and chord") {
  const std::vector<double> xs{1, 2, 4, 8};
  CHECK(render_series(xs) == "1 2 4 8\n");
  const std::vector<double> ys{0.5, 1.25};
  CHECK(render_series(ys) == "0.5 1.25\n");
  const std::vector<std::int64_t> chord{0, 4, 7};
  CHECK(render_chord(classify_chord(chord)) == "DO major\n");
}

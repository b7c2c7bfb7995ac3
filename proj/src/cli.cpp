#include "tuning/cli.hpp"

#include "tuning/errors.hpp"
#include "tuning/export.hpp"
#include "tuning/render.hpp"
#include "tuning/weber.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <ostream>

namespace tuning::cli {

namespace {

std::vector<std::int64_t> parse_index_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token(text.data() + pos, comma - pos);
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      throw DomainError("bad chromatic index '" + std::string(token) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equal, Pythagorean and natural scales in exact arithmetic", "scales"};
  app.require_subcommand(1);
  app.fallthrough();

  double base_hz = default_base_hz();
  app.add_option("--base-hz", base_hz, "Frequency of the base DO (export metadata)")
      ->check(CLI::PositiveNumber);

  int digits = 5;
  auto add_digits = [&](CLI::App* sub) {
    sub->add_option("--digits", digits, "Truncated decimal digits")->check(CLI::Range(1, 60));
  };

  auto* et = app.add_subcommand("et", "Equal division of the octave");
  std::int64_t et_n = 12;
  et->add_option("--n", et_n, "Divisions per octave")->required();
  add_digits(et);

  auto* pyth = app.add_subcommand("pyth", "Pythagorean sounds generated by fifths");
  std::int64_t up = 12;
  std::int64_t down = 12;
  bool show_pairing = false;
  bool show_chromatic = false;
  pyth->add_option("--fifths-up", up, "Fifths stacked upward")->check(CLI::NonNegativeNumber);
  pyth->add_option("--fifths-down", down, "Fifths stacked downward")->check(CLI::NonNegativeNumber);
  pyth->add_flag("--pairing", show_pairing, "Pair the sounds with the twelve-division degrees");
  pyth->add_flag("--chromatic", show_chromatic, "Named eighteen-sound chromatic selection");
  add_digits(pyth);

  auto* natural = app.add_subcommand("natural", "Natural diatonic scale by harmonic division");
  bool trace = false;
  natural->add_flag("--trace", trace, "Print every harmonic division and search step");
  add_digits(natural);

  auto* compare = app.add_subcommand("compare", "Equal, Pythagorean and natural diatonic degrees");
  add_digits(compare);

  auto* weber = app.add_subcommand("weber", "Stimuli with uniform perceived increments");
  double s1 = 1.0;
  WeberParams params;
  int weber_n = 2;
  weber->add_option("--s1", s1, "First stimulus")->required();
  weber->add_option("--c", params.c, "Uniform perception increment C")->required();
  weber->add_option("--k", params.k, "Weber constant k")->required();
  weber->add_option("--n", weber_n, "Number of stimuli")->required();

  auto* chord = app.add_subcommand("chord", "Classify chromatic indices as a chord");
  std::string chord_indices;
  chord->add_option("indices", chord_indices, "Comma-separated chromatic indices, e.g. 0,4,7")
      ->required();

  auto* exp = app.add_subcommand("export", "Write a tuning file or the comparison table");
  std::string format;
  std::string out_path;
  std::string scale = "natural";
  std::int64_t export_n = 12;
  exp->add_option("--format", format, "scl, csv or json")
      ->required()
      ->check(CLI::IsMember({"scl", "csv", "json"}));
  exp->add_option("--out", out_path, "Output path")->required();
  exp->add_option("--scale", scale, "Scale for scl output: natural, pyth or et")
      ->check(CLI::IsMember({"natural", "pyth", "et"}));
  exp->add_option("--n", export_n, "Divisions for --scale et");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (et->parsed()) {
      out << render_et(generate_et(et_n, base_hz), digits);
    } else if (pyth->parsed()) {
      const PythTable table = generate_fifths(down, up);
      if (show_pairing) {
        out << render_pairing(pairing_table(table), 12, digits);
      } else if (show_chromatic) {
        out << render_chromatic(select_chromatic(table), digits);
      } else {
        out << render_fifths(table, digits);
      }
    } else if (natural->parsed()) {
      out << render_natural(assemble_diatonic(), digits);
      if (trace) {
        const CoreConstruction core = build_core();
        out << render_natural_trace(core, dead_end_scan(core.pitches), solve_fa_la(), find_si());
      }
    } else if (compare->parsed()) {
      out << render_comparison(compare_three_scales(), digits);
    } else if (weber->parsed()) {
      out << render_series(uniform_stimuli(s1, params, weber_n).values());
    } else if (chord->parsed()) {
      out << render_chord(classify_chord(parse_index_list(chord_indices)));
    } else if (exp->parsed()) {
      std::string text;
      if (format == "scl") {
        ScaleDocument doc = scale == "pyth" ? pythagorean_chromatic_document(base_hz)
                            : scale == "et" ? et_document(export_n, base_hz)
                                            : natural_document(base_hz);
        text = export_scl(doc, std::filesystem::path(out_path).filename().string());
      } else {
        text = export_table(build_comparison_table(),
                            format == "csv" ? TableFormat::Csv : TableFormat::Json);
      }
      write_text_file(out_path, text);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace tuning::cli

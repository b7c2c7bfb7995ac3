#include "tuning/render.hpp"

#include "tuning/monzo.hpp"
#include "tuning/ratio_core.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace tuning {

namespace {

std::string line(std::initializer_list<std::string> fields) {
  return fmt::format("{}\n", fmt::join(fields, " "));
}

std::string form_of(const Rational& r) {
  const auto m = rational_to_monzo(r);
  return m ? exact_form(*m) : r.str();
}

std::string describe(const FifthStep& s, int digits) {
  return fmt::format("{} {} {}", s.form(), s.ratio.ratio_str(), to_decimal(s.ratio, digits));
}

}  // namespace

std::string render_et(const EtScale& scale, int digits) {
  std::string out = "# k exact decimal cents\n";
  for (const EtPitch& p : scale.pitches) {
    out += line({std::to_string(p.k()), p.form(), et_value(p, digits),
                 to_fixed(Rational(1200 * p.k(), p.n()), 5)});
  }
  return out;
}

std::string render_fifths(const PythTable& table, int digits) {
  std::string out = "# direction k h form ratio decimal\n";
  for (const FifthStep& s : table.entries()) {
    out += line({to_string(s.direction), std::to_string(s.k), std::to_string(s.h), s.form(),
                 s.ratio.ratio_str(), to_decimal(s.ratio, digits)});
  }
  return out;
}

std::string render_pairing(const std::vector<PairingRow>& rows, std::int64_t n, int digits) {
  std::string out =
      "# degree mark equal decimal first_form first_ratio first_decimal "
      "second_form second_ratio second_decimal\n";
  for (const PairingRow& row : rows) {
    const EtPitch et(row.degree, n);
    const auto [first, second] = row.listing_order();
    out += line({std::to_string(row.degree), row.diatonic ? "*" : "-", et.form(),
                 et_value(et, digits), describe(*first, digits), describe(*second, digits)});
  }
  return out;
}

std::string render_chromatic(const std::vector<NamedPitch>& pitches, int digits) {
  std::string out = "# name form ratio decimal\n";
  for (const NamedPitch& p : pitches) {
    out += line({p.name.str(), exact_form(p.provenance.monzo()), p.ratio.ratio_str(),
                 to_decimal(p.ratio, digits)});
  }
  return out;
}

std::string render_natural(const NaturalScale& scale, int digits) {
  std::string out = "# name ratio decimal\n";
  for (const NaturalDegree& d : scale.degrees) {
    out += line({d.name.str(), d.ratio.ratio_str(), to_decimal(d.ratio, digits)});
  }
  std::vector<std::string> steps;
  for (const Rational& s : scale.steps) steps.push_back(s.str());
  out += fmt::format("# steps {}\n", fmt::join(steps, " "));
  return out;
}

std::string render_natural_trace(const CoreConstruction& core, const DeadEndScan& scan,
                                 const FaLa& fa_la, const SiSearch& si) {
  std::string out = "# harmonic divisions\n";
  auto mean_line = [](const Rational& a, const Rational& b, const Rational& r,
                      const std::string& note) {
    return fmt::format("mean({}, {}) = {} {}\n", a.str(), b.str(), r.str(), note);
  };
  for (const Derivation& d : core.steps) out += mean_line(d.low, d.high, d.result, d.name);
  const Derivation& c = core.continuation;
  out += mean_line(c.low, c.high, c.result, c.five_limit ? "5-limit" : "not 5-limit");

  out += "# further divisions of the five sounds\n";
  for (const auto* list : {&scan.rejected, &scan.admissible}) {
    for (const DivisionCandidate& d : *list) {
      if (d.b < d.a) continue;  // the mean is symmetric; print each pair once
      out += mean_line(d.a, d.b, d.result, to_string(d.status));
    }
  }

  out += "# FA and LA\n";
  out += fmt::format("FA {} = mean(1, {})\n", fa_la.fa.str(), fa_la.la.str());
  out += fmt::format("LA {} = mean({}, 2)\n", fa_la.la.str(), fa_la.fa.str());

  out += "# SI: 2*a - b strictly between 5/3 and 2, 5-limit\n";
  auto si_line = [](const SiCandidate& s, const std::string& verdict) {
    return fmt::format("2*{} - {} = {} {}\n", s.mean_pitch.str(), s.other_pitch.str(),
                       s.result.str(), verdict);
  };
  out += si_line(si.accepted, "accepted");
  for (const SiCandidate& s : si.rejected) out += si_line(s, "rejected: " + to_string(*s.rejection));
  return out;
}

std::string render_comparison(const std::vector<ComparisonRow>& rows, int digits) {
  std::string out = "# degree E E_decimal P P_decimal N N_decimal\n";
  for (const ComparisonRow& r : rows) {
    out += line({r.name.str(), r.equal.form(), et_value(r.equal, digits), form_of(r.pythagorean),
                 to_decimal(r.pythagorean, digits), form_of(r.natural),
                 to_decimal(r.natural, digits)});
  }
  return out;
}

std::string render_chord(const ChordClass& chord) { return chord.str() + "\n"; }

std::string render_series(std::span<const double> values) {
  return fmt::format("{}\n", fmt::join(values, " "));
}

}  // namespace tuning

#include "tuning/pythagorean.hpp"

#include "tuning/errors.hpp"
#include "tuning/et_scale.hpp"
#include "tuning/ratio_core.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace tuning {

std::string to_string(Direction d) {
  switch (d) {
    case Direction::Down: return "down";
    case Direction::Up: return "up";
    case Direction::Endpoint: return "endpoint";
  }
  return "endpoint";
}

std::int64_t FifthStep::signed_fifths() const noexcept {
  return direction == Direction::Down ? -k : k;
}

Monzo FifthStep::monzo() const {
  const std::int64_t e = signed_fifths();
  return {h - e, e, 0};
}

std::string FifthStep::form() const {
  if (direction == Direction::Endpoint) return h == 0 ? "1" : "2";
  std::string out;
  if (h == 1) out = "2";
  if (h != 0 && h != 1) out = "2^" + std::to_string(h);
  if (!out.empty()) out += "*";
  const std::int64_t e = signed_fifths();
  out += "(3/2)";
  if (e != 1) out += "^" + std::to_string(e);
  return out;
}

std::vector<FifthStep> PythTable::entries() const {
  std::vector<FifthStep> out;
  out.reserve(down.size() + up.size() + 2);
  out.push_back(base_endpoint());
  out.insert(out.end(), down.begin(), down.end());
  out.insert(out.end(), up.begin(), up.end());
  out.push_back(octave_endpoint());
  return out;
}

bool PythTable::contains(const Rational& r) const {
  const auto all = entries();
  return std::ranges::any_of(all, [&](const FifthStep& s) { return s.ratio == r; });
}

FifthStep base_endpoint() { return {Direction::Endpoint, 0, 0, Rational(1)}; }
FifthStep octave_endpoint() { return {Direction::Endpoint, 0, 1, Rational(2)}; }

FifthStep fifth_step(Direction direction, std::int64_t k) {
  if (direction == Direction::Endpoint || k < 1) {
    throw DomainError("a fifth step needs a direction and k >= 1");
  }
  const Rational fifth(3, 2);
  const Rational raw = fifth.pow(direction == Direction::Up ? k : -k);
  auto [value, shift] = reduce_to_octave_with_shift(raw);
  // 3^k is never a power of two, so the reduced value is strictly inside (1, 2).
  if (value == Rational(1)) throw std::logic_error("fifth cycle closed on the base");
  return {direction, k, shift, std::move(value)};
}

PythTable generate_fifths(std::int64_t fifths_down, std::int64_t fifths_up) {
  if (fifths_down < 0 || fifths_up < 0) throw DomainError("fifth counts must be non-negative");
  PythTable t{fifths_down, fifths_up, {}, {}};
  for (std::int64_t k = 1; k <= fifths_down; ++k) t.down.push_back(fifth_step(Direction::Down, k));
  for (std::int64_t k = 1; k <= fifths_up; ++k) t.up.push_back(fifth_step(Direction::Up, k));
  return t;
}

EtClassification classify_to_et(const Rational& r, std::int64_t n) {
  if (n < 1) throw DomainError("equal division needs n >= 1");
  if (r < Rational(1) || r > Rational(2)) {
    throw DomainError("classification needs 1 <= r <= 2, got " + r.str());
  }
  const double c = cents(r).value;
  const double step = 1200.0 / static_cast<double>(n);
  const auto degree = static_cast<std::int64_t>(std::floor(c / step + 0.5));
  return {degree, c - static_cast<double>(degree) * step};
}

std::strong_ordering compare_to_et(const Rational& r, std::int64_t degree, std::int64_t n) {
  return Pitch(r) <=> Pitch(EtPitch(degree, n));
}

const FifthStep& PairingRow::fewer_iterations() const {
  if (deficit.k == excess.k) {
    throw std::logic_error("degree " + std::to_string(degree) +
                           ": both approximants need the same number of fifths");
  }
  return deficit.k < excess.k ? deficit : excess;
}

std::pair<const FifthStep*, const FifthStep*> PairingRow::listing_order() const {
  if (diatonic) {
    const FifthStep& first = fewer_iterations();
    return {&first, &first == &deficit ? &excess : &deficit};
  }
  return {&deficit, &excess};
}

std::vector<PairingRow> pairing_table(const PythTable& table, std::int64_t n) {
  if (n < 1) throw DomainError("equal division needs n >= 1");
  const auto slots = static_cast<std::size_t>(n) + 1;
  std::vector<std::optional<FifthStep>> below(slots);
  std::vector<std::optional<FifthStep>> above(slots);
  std::vector<std::pair<std::int64_t, FifthStep>> on_degree;

  auto place = [&](std::vector<std::optional<FifthStep>>& side, std::int64_t degree,
                   const FifthStep& s, const char* where) {
    auto& slot = side[static_cast<std::size_t>(degree)];
    if (slot) {
      throw CoverageError(static_cast<int>(degree),
                          "degree " + std::to_string(degree) +
                              " receives more than one approximant " + where);
    }
    slot = s;
  };

  for (const FifthStep& s : table.entries()) {
    const std::int64_t degree = classify_to_et(s.ratio, n).degree;
    const auto ord = compare_to_et(s.ratio, degree, n);
    if (ord < 0) {
      place(below, degree, s, "below");
    } else if (ord > 0) {
      place(above, degree, s, "above");
    } else {
      on_degree.emplace_back(degree, s);
    }
  }
  // Entries equal to the tempered value (the endpoints) take the free side.
  for (const auto& [degree, s] : on_degree) {
    const auto d = static_cast<std::size_t>(degree);
    if (!below[d]) {
      below[d] = s;
    } else if (!above[d]) {
      above[d] = s;
    } else {
      throw CoverageError(static_cast<int>(degree),
                          "degree " + std::to_string(degree) + " receives more than two approximants");
    }
  }

  std::vector<PairingRow> rows;
  for (std::int64_t degree = 0; degree <= n; ++degree) {
    const auto d = static_cast<std::size_t>(degree);
    if (!below[d] || !above[d]) {
      throw CoverageError(static_cast<int>(degree),
                          "degree " + std::to_string(degree) + " has no approximant " +
                              (below[d] ? "above" : "below") +
                              " (generate at least 12 fifths each way)");
    }
    const bool diatonic = n == 12 && is_diatonic_index(static_cast<int>(degree));
    rows.push_back({degree, diatonic, *below[d], *above[d]});
  }
  return rows;
}

std::vector<NamedPitch> select_chromatic(const PythTable& table) {
  std::vector<NamedPitch> out;
  for (const PairingRow& row : pairing_table(table, 12)) {
    if (row.diatonic) {
      const FifthStep& chosen = row.fewer_iterations();
      out.push_back({note_name(row.degree, SpellingPreference::Sharp), chosen.ratio, chosen,
                     row.degree});
    } else {
      out.push_back({note_name(row.degree, SpellingPreference::Flat), row.deficit.ratio,
                     row.deficit, row.degree});
      out.push_back({note_name(row.degree, SpellingPreference::Sharp), row.excess.ratio,
                     row.excess, row.degree});
    }
  }
  std::ranges::sort(out, {}, &NamedPitch::ratio);
  return out;
}

ToneSplitReport tone_split_analysis() {
  ToneSplitReport r;
  r.limma = Rational(256, 243);
  r.apotome = Rational(2187, 2048);
  r.tone = Rational(9, 8);
  r.limma_times_apotome_is_tone = r.limma * r.apotome == r.tone;
  const Pitch et_semitone = EtPitch(1, 12);
  r.limma_below_et_semitone = Pitch(r.limma) < et_semitone;
  r.et_semitone_below_apotome = et_semitone < Pitch(r.apotome);
  r.tone_cents = cents(r.tone);
  r.et_tone_below_tone = EtPitch(2, 12).cents() < r.tone_cents;
  r.flat_to_re = r.tone / r.limma;
  r.sharp_to_re = r.tone / r.apotome;
  r.flat_to_re_is_apotome = r.flat_to_re == r.apotome;
  r.sharp_to_re_is_limma = r.sharp_to_re == r.limma;
  r.labeling_note =
      "RE♭–RE spans the apotome, the same interval as DO–DO♯; "
      "DO♯–RE spans the limma, the same interval as DO–RE♭";
  return r;
}

BaseDependenceDemo base_dependence_demo(const PythTable& table, const Monzo& new_base) {
  BaseDependenceDemo demo;
  demo.new_base = new_base;
  demo.transform = Monzo{-5, 0, 0} + Monzo{-9, 9, 0};  // 2^-5 (3/2)^9
  demo.product = new_base + demo.transform;
  demo.reduced = reduce_to_octave(monzo_to_rational(demo.product));
  demo.member = table.contains(demo.reduced);
  return demo;
}

}  // namespace tuning

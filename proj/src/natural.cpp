#include "tuning/natural.hpp"

#include "tuning/errors.hpp"
#include "tuning/et_scale.hpp"
#include "tuning/monzo.hpp"
#include "tuning/pythagorean.hpp"
#include "tuning/ratio_core.hpp"

#include <algorithm>
#include <cmath>

namespace tuning {

namespace {

void require_positive(const Rational& x, const char* what) {
  if (!x.is_positive()) throw DomainError(std::string(what) + " must be positive, got " + x.str());
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (!r.is_positive()) return std::nullopt;
  auto num = perfect_nth_root(r.num(), 2);
  auto den = perfect_nth_root(r.den(), 2);
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

const NoteName kDiatonicNames[8] = {
    {Letter::Do, Accidental::Natural}, {Letter::Re, Accidental::Natural},
    {Letter::Mi, Accidental::Natural}, {Letter::Fa, Accidental::Natural},
    {Letter::Sol, Accidental::Natural}, {Letter::La, Accidental::Natural},
    {Letter::Si, Accidental::Natural}, {Letter::Do, Accidental::Natural},
};

}  // namespace

double GeometricMean::to_double() const {
  return exact ? exact->to_double() : std::sqrt(radicand.to_double());
}

std::string GeometricMean::str() const {
  return exact ? exact->str() : "sqrt(" + radicand.str() + ")";
}

MeanTriple means(const Rational& a, const Rational& b) {
  require_positive(a, "first value");
  require_positive(b, "second value");
  const Rational product = a * b;
  return {(a + b) / Rational(2), {product, exact_sqrt(product)}, Rational(2) * product / (a + b)};
}

std::strong_ordering compare_geometric(const GeometricMean& g, const Rational& x) {
  if (x.sign() <= 0) return std::strong_ordering::greater;
  return g.radicand <=> x * x;
}

HarmonicDivision harmonic_divide(const Rational& ac, const Rational& ad) {
  require_positive(ac, "AC");
  require_positive(ad, "AD");
  if (ac >= ad) throw OrderingError("harmonic division needs AC < AD, got " + ac.str() + " >= " + ad.str());
  HarmonicDivision d{ac, ad, Rational(2) * ac * ad / (ac + ad)};
  if (!is_harmonic_proportion(d)) throw std::logic_error("harmonic proportion check failed");
  return d;
}

bool is_harmonic_proportion(const HarmonicDivision& d) {
  const Rational cb = d.ab - d.ac;
  const Rational bd = d.ad - d.ab;
  return d.ac * bd == d.ad * cb;
}

Rational frequency_of_division(const Rational& f_ac, const Rational& f_ad) {
  require_positive(f_ac, "frequency");
  require_positive(f_ad, "frequency");
  return (f_ac + f_ad) / Rational(2);
}

CoreConstruction build_core() {
  const Rational base(1);
  CoreConstruction core;
  Rational high(2);
  const char* names[] = {"SOL", "MI", "RE"};
  for (const char* name : names) {
    Rational result = frequency_of_division(base, high);
    core.steps.push_back({base, high, result, name, is_five_limit(result)});
    high = result;
  }
  const Rational next = frequency_of_division(base, high);
  core.continuation = {base, high, next, "", is_five_limit(next)};

  core.pitches = {base, Rational(2)};
  for (const auto& s : core.steps) core.pitches.push_back(s.result);
  std::ranges::sort(core.pitches);
  return core;
}

DeadEndScan dead_end_scan(const std::vector<Rational>& found) {
  DeadEndScan scan;
  for (const Rational& a : found) {
    for (const Rational& b : found) {
      if (a == b) continue;
      DivisionCandidate c{a, b, frequency_of_division(a, b), CandidateStatus::NotFiveLimit};
      if (is_five_limit(c.result)) {
        const bool present = std::ranges::find(found, c.result) != found.end();
        c.status = present ? CandidateStatus::AlreadyPresent : CandidateStatus::NewFiveLimit;
      }
      (c.status == CandidateStatus::NewFiveLimit ? scan.admissible : scan.rejected).push_back(c);
    }
  }
  return scan;
}

FaLa solve_fa_la() {
  // f1 = (f0 + f2)/2 and f2 = (f1 + 2 f0)/2 with f0 = 1:
  //    2 f1 -   f2 = 1
  //   -  f1 + 2 f2 = 2
  const Rational a11(2), a12(-1), a21(-1), a22(2);
  const Rational b1(1), b2(2);
  const Rational det = a11 * a22 - a12 * a21;
  FaLa out{(b1 * a22 - a12 * b2) / det, (a11 * b2 - b1 * a21) / det};

  const bool solves = out.fa == frequency_of_division(Rational(1), out.la) &&
                      out.la == frequency_of_division(out.fa, Rational(2));
  const bool fa_in_gap = Rational(5, 4) < out.fa && out.fa < Rational(3, 2);
  const bool la_in_gap = Rational(3, 2) < out.la && out.la < Rational(2);
  if (!solves || !fa_in_gap || !la_in_gap) throw std::logic_error("FA/LA system check failed");
  return out;
}

std::optional<RejectReason> si_rejection(const Rational& candidate) {
  const bool in_range = Rational(5, 3) < candidate && candidate < Rational(2);
  const bool five = is_five_limit(candidate);
  if (in_range && five) return std::nullopt;
  if (!in_range && !five) return RejectReason::OutOfRangeAndNotFiveLimit;
  return in_range ? RejectReason::NotFiveLimit : RejectReason::OutOfRange;
}

std::vector<Rational> si_search_set() {
  return {Rational(1),    Rational(9, 8), Rational(5, 4), Rational(4, 3),
          Rational(3, 2), Rational(5, 3), Rational(2)};
}

SiSearch find_si() {
  std::vector<SiCandidate> accepted;
  SiSearch search;
  const auto set = si_search_set();
  for (const Rational& n1 : set) {
    for (const Rational& n2 : set) {
      SiCandidate c{n1, n2, Rational(2) * n1 - n2, std::nullopt};
      c.rejection = si_rejection(c.result);
      (c.rejection ? search.rejected : accepted).push_back(std::move(c));
    }
  }
  if (accepted.size() != 1) {
    throw PropositionViolation("expected exactly one candidate for SI, found " +
                               std::to_string(accepted.size()));
  }
  search.accepted = accepted.front();
  return search;
}

NaturalScale assemble_diatonic() {
  const CoreConstruction core = build_core();
  const FaLa fa_la = solve_fa_la();
  const SiSearch si = find_si();

  std::vector<Rational> pitches = core.pitches;
  pitches.push_back(fa_la.fa);
  pitches.push_back(fa_la.la);
  pitches.push_back(si.accepted.result);
  std::ranges::sort(pitches);
  if (pitches.size() != 8) throw std::logic_error("natural diatonic scale needs eight degrees");

  NaturalScale scale;
  Rational product(1);
  for (std::size_t i = 0; i < pitches.size(); ++i) {
    scale.degrees.push_back({kDiatonicNames[i], pitches[i]});
    if (i > 0) {
      scale.steps.push_back(pitches[i] / pitches[i - 1]);
      product *= scale.steps.back();
    }
  }
  if (product != Rational(2)) throw std::logic_error("natural steps do not close the octave");
  return scale;
}

std::vector<ComparisonRow> compare_three_scales() {
  const auto chromatic = select_chromatic(generate_fifths(12, 12));
  const NaturalScale natural = assemble_diatonic();
  std::vector<ComparisonRow> rows;
  for (std::size_t i = 0; i < 8; ++i) {
    const int degree = kDiatonicIndices[i];
    auto p = std::ranges::find(chromatic, static_cast<std::int64_t>(degree), &NamedPitch::degree);
    if (p == chromatic.end()) throw std::logic_error("missing Pythagorean degree");
    rows.push_back({kDiatonicNames[i], degree, EtPitch(degree, 12), p->ratio,
                    natural.degrees[i].ratio});
  }
  return rows;
}

std::string to_string(RejectReason r) {
  switch (r) {
    case RejectReason::OutOfRange: return "out of range";
    case RejectReason::NotFiveLimit: return "not 5-limit";
    case RejectReason::OutOfRangeAndNotFiveLimit: return "out of range, not 5-limit";
  }
  return "";
}

std::string to_string(CandidateStatus s) {
  switch (s) {
    case CandidateStatus::NotFiveLimit: return "not 5-limit";
    case CandidateStatus::AlreadyPresent: return "already present";
    case CandidateStatus::NewFiveLimit: return "new 5-limit";
  }
  return "";
}

}  // namespace tuning

#pragma once

/**
 * @file natural.hpp
 * @brief 5-limit diatonic scale obtained only through harmonic division.
 *
 * If B divides a string AD so that AC/CB = AD/BD, AB is the harmonic mean
 * of AC and AD. Because frequency is inversely proportional to length, the
 * corresponding frequency is the arithmetic mean of the two frequencies.
 * Repeating that construction from the octave produces SOL, MI and RE; a
 * 2x2 linear system fixes FA and LA; an exhaustive search fixes SI.
 */

#include "tuning/interval.hpp"
#include "tuning/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tuning {

/// sqrt(radicand), exact when the radicand is a rational square.
struct GeometricMean {
  Rational radicand;
  std::optional<Rational> exact;

  double to_double() const;
  std::string str() const;
};

struct MeanTriple {
  Rational arithmetic;
  GeometricMean geometric;
  Rational harmonic;
};

/// Arithmetic, geometric and harmonic means. Throws DomainError unless a, b > 0.
MeanTriple means(const Rational& a, const Rational& b);

/// Sign of (geometric mean - x), decided exactly via squares.
std::strong_ordering compare_geometric(const GeometricMean& g, const Rational& x);

struct HarmonicDivision {
  Rational ac;
  Rational ad;
  Rational ab;  // harmonic mean of ac and ad
};

/// Throws DomainError for non-positive lengths and OrderingError unless AC < AD.
HarmonicDivision harmonic_divide(const Rational& ac, const Rational& ad);

/// True iff AC/CB = AD/BD with C, B, D measured from A.
bool is_harmonic_proportion(const HarmonicDivision& d);

/// Frequency produced by the harmonic division of two strings:
/// the arithmetic mean. Throws DomainError unless both are positive.
Rational frequency_of_division(const Rational& f_ac, const Rational& f_ad);

struct Derivation {
  Rational low;
  Rational high;
  Rational result;
  std::string name;  // "SOL", "MI", "RE"; empty when the result falls outside the lattice
  bool five_limit = false;
};

struct CoreConstruction {
  std::vector<Derivation> steps;  // DO,2DO -> SOL; DO,SOL -> MI; DO,MI -> RE
  Derivation continuation;        // DO,RE -> 17/16 (not 5-limit)
  std::vector<Rational> pitches;  // {1, 9/8, 5/4, 3/2, 2}
};

CoreConstruction build_core();

enum class CandidateStatus { NotFiveLimit, AlreadyPresent, NewFiveLimit };

struct DivisionCandidate {
  Rational a;
  Rational b;
  Rational result;
  CandidateStatus status = CandidateStatus::NotFiveLimit;
};

struct DeadEndScan {
  std::vector<DivisionCandidate> rejected;    // not 5-limit or already present
  std::vector<DivisionCandidate> admissible;  // new 5-limit sounds

  bool stalls() const noexcept { return admissible.empty(); }
};

/// Arithmetic mean of every ordered pair of distinct pitches in `found`.
DeadEndScan dead_end_scan(const std::vector<Rational>& found);

struct FaLa {
  Rational fa;  // f1 = (f0 + f2) / 2
  Rational la;  // f2 = (f1 + 2 f0) / 2
};

/// Solves the two simultaneous harmonic conditions exactly (Cramer's rule).
FaLa solve_fa_la();

enum class RejectReason { OutOfRange, NotFiveLimit, OutOfRangeAndNotFiveLimit };

struct SiCandidate {
  Rational mean_pitch;   // f_N1
  Rational other_pitch;  // f_N2
  Rational result;       // 2 f_N1 - f_N2
  std::optional<RejectReason> rejection;
};

struct SiSearch {
  SiCandidate accepted;
  std::vector<SiCandidate> rejected;
};

/// Why a candidate for the seventh degree fails (nullopt if it qualifies):
/// it must lie strictly between 5/3 and 2 and be 5-limit.
std::optional<RejectReason> si_rejection(const Rational& candidate);

/// The seven pitches {1, 9/8, 5/4, 4/3, 3/2, 5/3, 2} searched for SI.
std::vector<Rational> si_search_set();

/// Brute force over all ordered pairs of si_search_set(). Throws
/// PropositionViolation unless exactly one candidate is accepted.
SiSearch find_si();

struct NaturalDegree {
  NoteName name;
  Rational ratio;
};

struct NaturalScale {
  std::vector<NaturalDegree> degrees;  // DO RE MI FA SOL LA SI DO
  std::vector<Rational> steps;
};

NaturalScale assemble_diatonic();

struct ComparisonRow {
  NoteName name;
  std::int64_t degree = 0;
  EtPitch equal;
  Rational pythagorean;
  Rational natural;
};

/// Equal, Pythagorean and natural values of the eight diatonic degrees.
std::vector<ComparisonRow> compare_three_scales();

std::string to_string(RejectReason r);
std::string to_string(CandidateStatus s);

}  // namespace tuning

#pragma once

/**
 * @file pythagorean.hpp
 * @brief 3-limit scale built by stacking fifths and folding into one octave.
 *
 * Fifths are taken k times upward and k times downward from the base; each
 * result is multiplied by the unique power 2^h that brings it strictly
 * between 1 and 2. With twelve steps each way the 24 generated sounds plus
 * the two endpoints straddle the 13 twelve-division degrees in pairs, one
 * slightly flat and one slightly sharp.
 */

#include "tuning/interval.hpp"
#include "tuning/monzo.hpp"
#include "tuning/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tuning {

enum class Direction { Down, Up, Endpoint };

/// One generated sound 2^h * (3/2)^(+-k). Endpoints 1 and 2 use
/// Direction::Endpoint with k = 0 and h = 0 or 1.
struct FifthStep {
  Direction direction = Direction::Endpoint;
  std::int64_t k = 0;
  std::int64_t h = 0;
  Rational ratio;

  /// Signed fifth count: +k upward, -k downward.
  std::int64_t signed_fifths() const noexcept;
  Monzo monzo() const;
  /// "2^h*(3/2)^e".
  std::string form() const;
};

struct PythTable {
  std::int64_t fifths_down = 0;
  std::int64_t fifths_up = 0;
  std::vector<FifthStep> down;  // k = 1..fifths_down
  std::vector<FifthStep> up;    // k = 1..fifths_up

  /// Endpoint 1, downward steps, upward steps, endpoint 2.
  std::vector<FifthStep> entries() const;
  bool contains(const Rational& r) const;
};

FifthStep base_endpoint();
FifthStep octave_endpoint();

/// The unique h with 1 < 2^h * (3/2)^(+-k) < 2 for k >= 1.
FifthStep fifth_step(Direction direction, std::int64_t k);

/// Throws DomainError for negative counts.
PythTable generate_fifths(std::int64_t fifths_down, std::int64_t fifths_up);

struct EtClassification {
  std::int64_t degree = 0;
  double deviation_cents = 0.0;
};

/// Nearest n-division degree (half-up) and the deviation from it.
/// Throws DomainError unless 1 <= r <= 2.
EtClassification classify_to_et(const Rational& r, std::int64_t n = 12);

/// Exact three-way comparison of a rational against 2^(degree/n).
std::strong_ordering compare_to_et(const Rational& r, std::int64_t degree, std::int64_t n);

struct PairingRow {
  std::int64_t degree = 0;
  bool diatonic = false;
  FifthStep deficit;  // at or below 2^(degree/n)
  FifthStep excess;   // at or above 2^(degree/n)

  /// The approximant reached with fewer fifths. Throws std::logic_error on a tie.
  const FifthStep& fewer_iterations() const;
  /// Listing order of the classic table: diatonic rows lead with the
  /// approximant reached first, others go flat then sharp.
  std::pair<const FifthStep*, const FifthStep*> listing_order() const;
};

/// One deficit and one excess approximant per degree 0..n. Throws
/// CoverageError naming the first degree that does not receive exactly one
/// of each (e.g. when the table has fewer than twelve fifths each way).
std::vector<PairingRow> pairing_table(const PythTable& table, std::int64_t n = 12);

struct NamedPitch {
  NoteName name;
  Rational ratio;
  FifthStep provenance;
  std::int64_t degree = 0;
};

/// The eighteen-name chromatic selection, ascending by ratio: one
/// approximant per diatonic degree, both approximants on the five others
/// (flat of the upper neighbour below, sharp of the lower neighbour above).
std::vector<NamedPitch> select_chromatic(const PythTable& table);

struct ToneSplitReport {
  Rational limma;    // 256/243
  Rational apotome;  // 2187/2048
  Rational tone;     // 9/8
  bool limma_times_apotome_is_tone = false;
  bool limma_below_et_semitone = false;
  bool et_semitone_below_apotome = false;
  bool et_tone_below_tone = false;
  Cents tone_cents;
  Rational flat_to_re;   // I(RE♭, RE)
  Rational sharp_to_re;  // I(DO♯, RE)
  bool flat_to_re_is_apotome = false;
  bool sharp_to_re_is_limma = false;
  std::string labeling_note;
};

ToneSplitReport tone_split_analysis();

struct BaseDependenceDemo {
  Monzo new_base;   // MI = 2^-6 3^4 by default
  Monzo transform;  // 2^-5 (3/2)^9
  Monzo product;
  Rational reduced;
  bool member = false;
};

/// Applies 2^-5 (3/2)^9 to `new_base` and tests the octave-reduced result
/// for exact membership in `table`.
BaseDependenceDemo base_dependence_demo(const PythTable& table,
                                        const Monzo& new_base = Monzo{-6, 4, 0});

std::string to_string(Direction d);

}  // namespace tuning

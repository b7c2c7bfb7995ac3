#pragma once

/**
 * @file interval.hpp
 * @brief Intervals as frequency ratios, congruence of ordered sound sets,
 *        index transposition, and note and chord naming on the twelve-step
 *        chromatic scale.
 */

#include "tuning/pitch.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tuning {

/// Ratio between two pitches; always >= 1.
class Interval {
 public:
  /// Throws DomainError if ratio < 1.
  explicit Interval(Pitch ratio);

  static Interval unison() { return Interval(Pitch(1)); }
  static Interval octave() { return Interval(Pitch(2)); }

  const Pitch& ratio() const noexcept { return ratio_; }
  Cents cents() const { return ratio_.cents(); }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Pitch ratio_;
};

/// Higher pitch over lower pitch; argument order does not matter.
Interval interval_between(const Pitch& f1, const Pitch& f2);

/// Product of the ratios: stacking one interval on top of the other.
Interval compose(const Interval& a, const Interval& b);

/// Ordered, non-empty list of positive pitches.
class PitchSequence {
 public:
  /// Throws DomainError on an empty list.
  explicit PitchSequence(std::vector<Pitch> pitches);
  PitchSequence(std::initializer_list<Pitch> pitches)
      : PitchSequence(std::vector<Pitch>(pitches)) {}

  std::span<const Pitch> pitches() const noexcept { return pitches_; }
  std::size_t size() const noexcept { return pitches_.size(); }
  const Pitch& operator[](std::size_t i) const { return pitches_[i]; }

  /// Ratio of each pitch to its predecessor (may be < 1 for descending motion).
  std::vector<Pitch> steps() const;

 private:
  std::vector<Pitch> pitches_;
};

/// Same length and identical consecutive ratios. Exact for every pitch kind.
bool are_congruent(const PitchSequence& a, const PitchSequence& b);

std::vector<std::int64_t> transpose_indices(std::span<const std::int64_t> indices,
                                            std::int64_t k);

constexpr std::int64_t sharp(std::int64_t index) noexcept { return index + 1; }
constexpr std::int64_t flat(std::int64_t index) noexcept { return index - 1; }

// --- naming ---------------------------------------------------------------

enum class Letter { Do, Re, Mi, Fa, Sol, La, Si };
enum class Accidental { Natural, Sharp, Flat };
enum class SpellingPreference { Sharp, Flat };

struct NoteName {
  Letter letter = Letter::Do;
  Accidental accidental = Accidental::Natural;

  friend bool operator==(const NoteName&, const NoteName&) = default;

  /// "DO", "RE♭", "FA♯" (UTF-8 accidentals).
  std::string str() const;
};

/// Chromatic index (reduced mod 12) to note name, spelling black keys by preference.
NoteName note_name(std::int64_t chromatic_index, SpellingPreference preference);

enum class IntervalKind { Unison, Semitone, Tone, MajorThird, Fourth, Fifth, Octave, Unnamed };

struct EtIntervalClass {
  IntervalKind kind = IntervalKind::Unnamed;
  std::int64_t semitones = 0;

  std::string str() const;
};

/// Named size of an equal-tempered interval. Throws DomainError for negative counts.
EtIntervalClass classify_et_interval(std::int64_t semitones);

enum class ChordQuality { Major, Minor, MajorSeventh, Unknown };

struct ChordClass {
  ChordQuality quality = ChordQuality::Unknown;
  std::int64_t root_index = 0;
  NoteName root;

  std::string str() const;
};

/// Classifies a set of chromatic indices; the lowest index names the chord.
/// Duplicates are ignored. Throws DomainError with fewer than three distinct indices.
ChordClass classify_chord(std::span<const std::int64_t> indices);

std::string to_string(ChordQuality q);
std::string to_string(IntervalKind k);

}  // namespace tuning

#include "tuning/interval.hpp"

#include "tuning/errors.hpp"

#include <algorithm>
#include <array>

namespace tuning {

Interval::Interval(Pitch ratio) : ratio_(std::move(ratio)) {
  if (ratio_ < Pitch(1)) throw DomainError("interval ratio below 1: " + ratio_.str());
}

Interval interval_between(const Pitch& f1, const Pitch& f2) {
  return Interval(f2 >= f1 ? f2 / f1 : f1 / f2);
}

Interval compose(const Interval& a, const Interval& b) { return Interval(a.ratio() * b.ratio()); }

PitchSequence::PitchSequence(std::vector<Pitch> pitches) : pitches_(std::move(pitches)) {
  if (pitches_.empty()) throw DomainError("pitch sequence must not be empty");
}

std::vector<Pitch> PitchSequence::steps() const {
  std::vector<Pitch> out;
  out.reserve(pitches_.size() - 1);
  for (std::size_t i = 1; i < pitches_.size(); ++i) out.push_back(pitches_[i] / pitches_[i - 1]);
  return out;
}

bool are_congruent(const PitchSequence& a, const PitchSequence& b) {
  if (a.size() != b.size()) return false;
  return a.steps() == b.steps();
}

std::vector<std::int64_t> transpose_indices(std::span<const std::int64_t> indices,
                                            std::int64_t k) {
  std::vector<std::int64_t> out(indices.begin(), indices.end());
  for (auto& i : out) i += k;
  return out;
}

namespace {

struct ChromaticSlot {
  NoteName sharp_spelling;
  NoteName flat_spelling;
};

constexpr NoteName nat(Letter l) { return {l, Accidental::Natural}; }

const std::array<ChromaticSlot, 12> kChromatic = {{
    {nat(Letter::Do), nat(Letter::Do)},
    {{Letter::Do, Accidental::Sharp}, {Letter::Re, Accidental::Flat}},
    {nat(Letter::Re), nat(Letter::Re)},
    {{Letter::Re, Accidental::Sharp}, {Letter::Mi, Accidental::Flat}},
    {nat(Letter::Mi), nat(Letter::Mi)},
    {nat(Letter::Fa), nat(Letter::Fa)},
    {{Letter::Fa, Accidental::Sharp}, {Letter::Sol, Accidental::Flat}},
    {nat(Letter::Sol), nat(Letter::Sol)},
    {{Letter::Sol, Accidental::Sharp}, {Letter::La, Accidental::Flat}},
    {nat(Letter::La), nat(Letter::La)},
    {{Letter::La, Accidental::Sharp}, {Letter::Si, Accidental::Flat}},
    {nat(Letter::Si), nat(Letter::Si)},
}};

}  // namespace

std::string NoteName::str() const {
  static constexpr const char* kLetters[] = {"DO", "RE", "MI", "FA", "SOL", "LA", "SI"};
  std::string s = kLetters[static_cast<int>(letter)];
  if (accidental == Accidental::Sharp) s += "♯";
  if (accidental == Accidental::Flat) s += "♭";
  return s;
}

NoteName note_name(std::int64_t chromatic_index, SpellingPreference preference) {
  const auto slot = static_cast<std::size_t>(((chromatic_index % 12) + 12) % 12);
  return preference == SpellingPreference::Sharp ? kChromatic[slot].sharp_spelling
                                                 : kChromatic[slot].flat_spelling;
}

std::string to_string(IntervalKind k) {
  switch (k) {
    case IntervalKind::Unison: return "unison";
    case IntervalKind::Semitone: return "semitone";
    case IntervalKind::Tone: return "tone";
    case IntervalKind::MajorThird: return "major third";
    case IntervalKind::Fourth: return "fourth";
    case IntervalKind::Fifth: return "fifth";
    case IntervalKind::Octave: return "octave";
    case IntervalKind::Unnamed: return "unnamed";
  }
  return "unnamed";
}

std::string EtIntervalClass::str() const {
  if (kind == IntervalKind::Unnamed) return std::to_string(semitones) + " semitones";
  return to_string(kind);
}

EtIntervalClass classify_et_interval(std::int64_t semitones) {
  if (semitones < 0) {
    throw DomainError("semitone count must be non-negative, got " + std::to_string(semitones));
  }
  IntervalKind kind = IntervalKind::Unnamed;
  switch (semitones) {
    case 0: kind = IntervalKind::Unison; break;
    case 1: kind = IntervalKind::Semitone; break;
    case 2: kind = IntervalKind::Tone; break;
    case 4: kind = IntervalKind::MajorThird; break;
    case 5: kind = IntervalKind::Fourth; break;
    case 7: kind = IntervalKind::Fifth; break;
    case 12: kind = IntervalKind::Octave; break;
    default: break;
  }
  return {kind, semitones};
}

std::string to_string(ChordQuality q) {
  switch (q) {
    case ChordQuality::Major: return "major";
    case ChordQuality::Minor: return "minor";
    case ChordQuality::MajorSeventh: return "major seventh";
    case ChordQuality::Unknown: return "unknown";
  }
  return "unknown";
}

std::string ChordClass::str() const {
  if (quality == ChordQuality::Unknown) return "unknown";
  return root.str() + " " + to_string(quality);
}

ChordClass classify_chord(std::span<const std::int64_t> indices) {
  std::vector<std::int64_t> sorted(indices.begin(), indices.end());
  std::ranges::sort(sorted);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() < 3) throw DomainError("a chord needs at least three distinct sounds");

  const std::int64_t root = sorted.front();
  std::vector<std::int64_t> shape;
  for (auto i : sorted) shape.push_back(i - root);

  ChordQuality quality = ChordQuality::Unknown;
  if (shape == std::vector<std::int64_t>{0, 4, 7}) quality = ChordQuality::Major;
  if (shape == std::vector<std::int64_t>{0, 3, 7}) quality = ChordQuality::Minor;
  if (shape == std::vector<std::int64_t>{0, 4, 7, 11}) quality = ChordQuality::MajorSeventh;
  return {quality, root, note_name(root, SpellingPreference::Sharp)};
}

}  // namespace tuning

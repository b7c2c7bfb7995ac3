#pragma once

// Plain-text renderings of the tables printed by the CLI. Fields are
// separated by single spaces; lines starting with '#' are headers.

#include "tuning/et_scale.hpp"
#include "tuning/natural.hpp"
#include "tuning/pythagorean.hpp"

#include <string>
#include <vector>

namespace tuning {

std::string render_et(const EtScale& scale, int digits);
std::string render_fifths(const PythTable& table, int digits);
std::string render_pairing(const std::vector<PairingRow>& rows, std::int64_t n, int digits);
std::string render_chromatic(const std::vector<NamedPitch>& pitches, int digits);
std::string render_natural(const NaturalScale& scale, int digits);
std::string render_natural_trace(const CoreConstruction& core, const DeadEndScan& scan,
                                 const FaLa& fa_la, const SiSearch& si);
std::string render_comparison(const std::vector<ComparisonRow>& rows, int digits);
std::string render_chord(const ChordClass& chord);
std::string render_series(std::span<const double> values);

}  // namespace tuning

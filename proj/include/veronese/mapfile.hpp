#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "veronese/lift.hpp"

namespace veronese {

// Map file format ('#' starts a comment, blank lines ignored):
//
//   context=poly|poisson n=<int> d=<int> [bound=<int>]
//   gen <generator monomial> -> <expression>     (Veronese maps)
//   var <variable> -> <expression>               (ambient maps)
//   inverse                                      (then gen lines for the inverse)
//
// `bound` is required in the poisson context and ignored otherwise.

struct MapFileEntry {
    std::string keyword;  // "gen" or "var"
    std::string key;
    std::string value;
    std::size_t line = 0;
};

struct MapFile {
    ContextKind kind = ContextKind::Polynomial;
    int n = 0;
    int d = 0;
    int bound = 0;
    std::vector<MapFileEntry> entries;
    std::optional<std::vector<MapFileEntry>> inverse_entries;
};

MapFile parse_map_file(std::string_view text);

std::shared_ptr<const VeroneseGeneratorSet> build_generator_set(const MapFile& file);

/// Binds `gen` entries against the generator set: every generator must be
/// covered exactly once and every image must lie in the subalgebra.
VeroneseDerivation bind_derivation(const MapFile& file);
VeroneseAutomorphism bind_automorphism(const MapFile& file);

/// Binds `var` entries into an ambient map (all variables required).
AmbientMap bind_ambient_map(const MapFile& file);
std::optional<AmbientMap> bind_inverse_ambient_map(const MapFile& file);

/// Serializes a Veronese map back into the file format.
std::string write_derivation_file(const VeroneseDerivation& der);
std::string write_automorphism_file(const VeroneseAutomorphism& aut);

// Machine-readable reports. Every polynomial value is emitted both as a
// canonical expression string (round-trips through the parser) and as a
// term list [[exponent pairs], numerator, denominator].

nlohmann::json element_json(const PoissonElement& f);
nlohmann::json context_json(const VeroneseGeneratorSet& gens);
nlohmann::json input_json(const VeroneseDerivation& der);
nlohmann::json input_json(const VeroneseAutomorphism& aut);
nlohmann::json lift_report(const VeroneseGeneratorSet& gens, const LiftOutcome& outcome);
nlohmann::json lnd_report_json(const VeroneseGeneratorSet& gens, const LiftOutcome& lift, const LndReport& report);
nlohmann::json kernel_report_json(const VeroneseGeneratorSet& gens, const Rational& lambda);

}  // namespace veronese

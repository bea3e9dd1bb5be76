#pragma once

// JSON, CSV and text renderings of the verification results.

#include <string>
#include <string_view>

#include <json.hpp>

#include "gmv/decomposition.hpp"
#include "gmv/dirichlet.hpp"
#include "gmv/enumeration.hpp"
#include "gmv/gm.hpp"
#include "gmv/spectra.hpp"

namespace gmv {

enum class Format { json, csv, text };

/// Rounds to `digits` significant digits so JSON output is stable.
double round_sig(double x, int digits = 12);
nlohmann::json rounded_array(const std::vector<double>& values);

/// Reference count of decomposable six-vertex classes.
inline constexpr std::size_t kReferenceDecomposableSix = 146;

std::string render_spectrum(const Graph& g, const Spectrum& s, Format f);

nlohmann::json to_json(const GmReport& r);
std::string render_gm(const GmReport& r, Format f);

nlohmann::json to_json(const HypothesisReport& r);
std::string render_decomposition(const Graph& h, DecomposeMode mode,
                                 const std::optional<Decomposition>& d, Format f);

nlohmann::json to_json(const Certificate& c);
std::string render_certificate(const Certificate& c, bool verified, Format f);

nlohmann::json to_json(const ReductionChainReport& r);
std::string render_reduction(const ReductionChainReport& r, const GmReport& pair, Format f);

std::string mode_label(const CensusModeResult& m);
nlohmann::json to_json(const CensusResult& c);
std::string render_census(const CensusResult& c, Format f);

nlohmann::json summary_json(const SweepReport& r);
std::string render_sweep(const SweepReport& r, Format f);

}  // namespace gmv

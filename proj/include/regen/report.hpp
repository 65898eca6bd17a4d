#pragma once

#include <span>
#include <string>

#include "json.hpp"
#include "regen/boxdim.hpp"
#include "regen/gapset.hpp"
#include "regen/localtime.hpp"
#include "regen/products.hpp"
#include "regen/stable.hpp"
#include "regen/toyps.hpp"

namespace regen {

// Version string baked at configure time; "0.1.0-unknown" outside a git
// checkout.
std::string tool_version();

// Common wrapper for every emitted report:
// { schema, tool{name, version}, subcommand, config, results }.
// Reports are a pure function of (config, seed); timing stays out of them.
nlohmann::json report_envelope(const std::string& subcommand,
                               nlohmann::json config, nlohmann::json results);

// { "empty": bool, "hull": [a,b], "gaps": [[l,r],...], "resolution": delta }
nlohmann::json gapset_json(const GapSet& z);

// Slope, error, fit quality, and the full (eps, count) table.
nlohmann::json dim_estimate_json(const DimEstimate& est);

nlohmann::json window_profile_json(std::span<const WindowEstimate> windows);

nlohmann::json validation_json(std::span<const StableValidationRow> rows);

// Paired arrays (grid, values).
nlohmann::json local_time_json(const LocalTimeProfile& profile);

nlohmann::json dichotomy_json(const DichotomyReport& report);

nlohmann::json shiga_json(const ShigaWatanabeReport& report);

nlohmann::json recovery_json(const UnionRecoveryReport& report);

// Pattern index (decimal string) to probability map, plus cell count and the
// smoothing mass.
nlohmann::json law_json(const DiscreteLaw& law);

// Tabular projection of the per-rung rates: delta, rate, ci_lo, ci_hi.
std::string dichotomy_csv(const DichotomyReport& report);

// One row per (eps, count) pair of the fitted table.
std::string dim_scales_csv(const DimEstimate& est);

std::string validation_csv(std::span<const StableValidationRow> rows);

std::string shiga_csv(const ShigaWatanabeReport& report);

// Round-trip decimal formatting used by every CSV emitter.
std::string csv_number(double x);

}  // namespace regen

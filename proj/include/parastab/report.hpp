#pragma once

// JSON payloads for reports (schema_version "1"). Every integer is written as
// a decimal string; slopes are written unreduced as "degree/rank".

#include <json.hpp>

#include "parastab/stability.hpp"

namespace parastab::report {

inline constexpr const char* kSchemaVersion = "1";

nlohmann::json root(const RootSystem& rs, const Root& r);
nlohmann::json weight(const Weight& w);
nlohmann::json slope(const SlopeReport& s);
nlohmann::json candidate(const SubmoduleCandidate& c);

nlohmann::json root_system(const RootSystem& rs);
nlohmann::json submodules(const ParabolicData& pd, CharMode mode,
                          const std::vector<SubmoduleCandidate>& family);
nlohmann::json verdict(const StabilityVerdict& v);
nlohmann::json polarization_search(int max_coeff, const PolarizationSearch& s);
nlohmann::json vector_fields(const VectorFieldAlgebra& a, const ParabolicData& pd);

/// Human-readable rendering of any payload (the `--format text` output).
std::string render_text(const nlohmann::json& payload);

}  // namespace parastab::report

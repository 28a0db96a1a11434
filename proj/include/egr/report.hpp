#ifndef EGR_REPORT_HPP
#define EGR_REPORT_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "egr/harness.hpp"
#include "egr/solvers.hpp"

namespace egr {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

using ordered_json = nlohmann::ordered_json;

ordered_json ring_summary_json(const RingContext& ctx);
ordered_json graph_summary_json(const RingContext& ctx);
ordered_json invariants_json(const RingContext& ctx, const InvariantReport& rep);
ordered_json verification_json(const VerificationResult& r);
ordered_json lattice_json(const RingContext& ctx);
ordered_json graph_json(const RingContext& ctx);

/// Full report document for `egr invariants`. Timing is injected separately
/// so default output stays byte-identical across runs.
ordered_json report_document(const RingContext& ctx, const InvariantReport& rep);

std::string human_invariants(const RingContext& ctx, const InvariantReport& rep);
std::string human_verification_line(const VerificationResult& r);
std::string human_lattice(const RingContext& ctx);

} // namespace egr

#endif

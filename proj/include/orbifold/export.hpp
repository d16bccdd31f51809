#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "orbifold/completion.hpp"
#include "orbifold/table.hpp"
#include "orbifold/verify.hpp"

namespace orbifold {

inline constexpr const char* kToolName = "orbifold-fusion";
inline constexpr const char* kToolVersion = "1.0.0";

enum class ExportFormat { Text, Json, Csv };

const char* format_name(ExportFormat f);
std::optional<ExportFormat> parse_format(std::string_view s);

const char* sector_name(Sector s);

// Cell provenance rendered as "rule:<name>" or "completion:<name>".
std::string origin_text(const CellOrigin& o);

std::string export_enumerate(const RankParam& rk, ExportFormat f);
std::string export_qdim(const RankParam& rk, const Label& x, ExportFormat f);
std::string export_branch(const RankParam& rk, const Label& x, ExportFormat f);

// A single product together with where its value came from.
struct FuseResult {
  Label a;
  Label b;
  FusionVector terms;
  CellOrigin origin;
};
std::string export_fuse(const RankParam& rk, const RuleVariantConfig& cfg, const FuseResult& r,
                        ExportFormat f);

// Full table export; the completion report supplies provenance counters.
std::string export_table(const CompleteTable& t, const CompletionReport& rep, ExportFormat f);

std::string export_verify(const RankParam& rk, const RuleVariantConfig& cfg,
                          const AxiomReport& report, ExportFormat f);
std::string export_arbitration(const ArbitrationOutcome& out, ExportFormat f);
std::string export_completion(const CompletionReport& rep, ExportFormat f);

// Inverse of the JSON table export; returns nullopt and sets err on malformed
// or inconsistent input.
std::optional<CompleteTable> table_from_json(const std::string& text, std::string& err);

}  // namespace orbifold

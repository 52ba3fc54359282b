#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "percolab/analysis.hpp"
#include "percolab/estimator.hpp"

namespace percolab {

// CSV and report writers. Column layouts are documented in docs/formats.md;
// doubles are printed with enough digits to round-trip. Path overloads throw
// std::runtime_error when the file cannot be opened.

void write_estimates_csv(std::ostream& out, const ProbabilityEstimates& est);
void write_estimates_csv(const std::string& path, const ProbabilityEstimates& est);

// One ratio map; undefined sites carry value "nan" and defined 0.
void write_ratio_map_csv(std::ostream& out, const RatioMaps& maps, int ratio_index);
void write_ratio_map_csv(const std::string& path, const RatioMaps& maps, int ratio_index);

void write_profile_csv(std::ostream& out, const std::vector<ProfilePoint>& profile);
void write_profile_csv(const std::string& path, const std::vector<ProfilePoint>& profile);

// Human-readable verification report.
void write_report_text(std::ostream& out, const VerificationReport& report);
void write_report_text(const std::string& path, const VerificationReport& report);

// Same report as flat key=value lines for scripting.
void write_report_kv(std::ostream& out, const VerificationReport& report);
void write_report_kv(const std::string& path, const VerificationReport& report);

// Headline numbers of a finished run (sample count, pair estimate).
void write_summary_kv(std::ostream& out, const ProbabilityEstimates& est, uint64_t master_seed);
void write_summary_kv(const std::string& path, const ProbabilityEstimates& est,
                      uint64_t master_seed);

}  // namespace percolab

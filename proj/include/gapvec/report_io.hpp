#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gapvec/dims.hpp"
#include "gapvec/properties.hpp"

namespace gapvec {

// JSON report with stable key order — the byte-for-byte reproducibility
// contract lives here, so key insertion order is fixed and dump parameters
// never vary.
nlohmann::ordered_json report_to_json(const GapReport& rep,
                                      const std::vector<CheckResult>& checks);
std::string report_to_json_text(const GapReport& rep, const std::vector<CheckResult>& checks);

// CSV flattening: one row per j with the report-level fields repeated.
// Columns: variety,m,d,c,w,mode,prime,seed,trials,dim_R2,epsilon,
//          j,gap_j,dim_sigma,dim_P_formula,dim_B,secant_nondefective,eps_Y,dim_IY2
std::string report_to_csv(const GapReport& rep);

// Human-readable table for the verification battery.
std::string check_table(const GapReport& rep, const std::vector<CheckResult>& checks,
                        const std::string& classification);

struct SweepRow {
  int n = 0, d = 0;
  long long m = 0, c = 0, epsilon = 0;
  std::vector<long long> gap;
  long long conjecture_jbar = 0;
  bool conjecture_match = false;
  std::string status;  // "ok" or the failure class
};

// Columns: n,d,m,c,epsilon,gap,conjecture_jbar,conjecture_match,status
// (gap semicolon-joined). Failed rows keep their slot with empty value fields.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace gapvec

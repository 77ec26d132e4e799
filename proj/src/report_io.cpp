#include "gapvec/report_io.hpp"

#include <algorithm>
#include <sstream>

namespace gapvec {

namespace {

nlohmann::ordered_json value_to_json(const CheckValue& v) {
  if (std::holds_alternative<long long>(v)) return std::get<long long>(v);
  if (std::holds_alternative<std::vector<long long>>(v))
    return std::get<std::vector<long long>>(v);
  return nullptr;
}

std::string value_to_text(const CheckValue& v) {
  if (std::holds_alternative<long long>(v)) return std::to_string(std::get<long long>(v));
  if (std::holds_alternative<std::vector<long long>>(v)) {
    const auto& xs = std::get<std::vector<long long>>(v);
    std::string s = "(";
    for (size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ";";
      s += std::to_string(xs[i]);
    }
    return s + ")";
  }
  return "-";
}

std::string join_semicolons(const std::vector<long long>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ";";
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace

nlohmann::ordered_json report_to_json(const GapReport& rep,
                                      const std::vector<CheckResult>& checks) {
  nlohmann::ordered_json j;
  j["variety"] = rep.variety;
  j["m"] = rep.m;
  j["d"] = rep.d;
  j["c"] = rep.c;
  j["w"] = rep.w;
  j["mode"] = rep.ctx.is_rational() ? "qq" : "fp";
  if (rep.ctx.is_rational())
    j["prime"] = nullptr;
  else
    j["prime"] = rep.ctx.prime;
  j["seed"] = rep.seed;
  j["trials"] = rep.trials;
  j["dim_R2"] = rep.dim_R2;
  j["epsilon"] = rep.epsilon;
  j["gap"] = rep.gap;
  nlohmann::ordered_json faces = nlohmann::ordered_json::array();
  for (const auto& f : rep.faces) {
    nlohmann::ordered_json jf;
    jf["j"] = f.j;
    jf["dim_sigma"] = f.dim_sigma;
    jf["dim_P_formula"] = f.dim_P_formula;
    jf["dim_B"] = f.dim_B;
    jf["secant_nondefective"] = f.secant_nondefective;
    jf["eps_Y"] = f.eps_Y;
    jf["dim_IY2"] = f.dim_IY2;
    faces.push_back(std::move(jf));
  }
  j["faces"] = std::move(faces);
  nlohmann::ordered_json jchecks = nlohmann::ordered_json::array();
  for (const auto& ck : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = ck.name;
    jc["passed"] = ck.passed;
    jc["lhs"] = value_to_json(ck.lhs);
    jc["rhs"] = value_to_json(ck.rhs);
    jc["note"] = ck.note;
    jchecks.push_back(std::move(jc));
  }
  j["checks"] = std::move(jchecks);
  return j;
}

std::string report_to_json_text(const GapReport& rep, const std::vector<CheckResult>& checks) {
  return report_to_json(rep, checks).dump(2) + "\n";
}

// Variety labels contain commas ("veronese:n=2,d=3"), so the CSV must quote
// them or downstream tools mis-split the rows.
static std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string report_to_csv(const GapReport& rep) {
  std::ostringstream os;
  os << "variety,m,d,c,w,mode,prime,seed,trials,dim_R2,epsilon,"
        "j,gap_j,dim_sigma,dim_P_formula,dim_B,secant_nondefective,eps_Y,dim_IY2\n";
  const std::string mode = rep.ctx.is_rational() ? "qq" : "fp";
  const std::string prime = rep.ctx.is_rational() ? "" : std::to_string(rep.ctx.prime);
  for (const auto& f : rep.faces) {
    os << csv_quote(rep.variety) << ',' << rep.m << ',' << rep.d << ',' << rep.c << ',' << rep.w << ','
       << mode << ',' << prime << ',' << rep.seed << ',' << rep.trials << ',' << rep.dim_R2
       << ',' << rep.epsilon << ',' << f.j << ',' << rep.gap[f.j - 1] << ',' << f.dim_sigma
       << ',' << f.dim_P_formula << ',' << f.dim_B << ',' << (f.secant_nondefective ? 1 : 0)
       << ',' << f.eps_Y << ',' << f.dim_IY2 << '\n';
  }
  return os.str();
}

std::string check_table(const GapReport& rep, const std::vector<CheckResult>& checks,
                        const std::string& classification) {
  std::ostringstream os;
  os << rep.variety << ": m = " << rep.m << ", d = " << rep.d << ", c = " << rep.c
     << ", dim R2 = " << rep.dim_R2 << ", epsilon = " << rep.epsilon << "\n";
  os << "gap = (" << join_semicolons(rep.gap) << ")\n";
  size_t width = 4;
  for (const auto& ck : checks) width = std::max(width, ck.name.size());
  for (const auto& ck : checks) {
    os << (ck.passed ? "[PASS] " : "[FAIL] ") << ck.name
       << std::string(width - ck.name.size() + 2, ' ');
    if (std::holds_alternative<long long>(ck.lhs) || std::holds_alternative<long long>(ck.rhs))
      os << value_to_text(ck.lhs) << " vs " << value_to_text(ck.rhs);
    if (!ck.note.empty()) os << "  [" << ck.note << "]";
    os << "\n";
  }
  os << "class: " << classification << "\n";
  return os.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "n,d,m,c,epsilon,gap,conjecture_jbar,conjecture_match,status\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.d << ',';
    if (r.status == "ok")
      os << r.m << ',' << r.c << ',' << r.epsilon << ',' << join_semicolons(r.gap) << ','
         << r.conjecture_jbar << ',' << (r.conjecture_match ? 1 : 0);
    else
      os << ",,,,,";
    os << ',' << r.status << '\n';
  }
  return os.str();
}

}  // namespace gapvec

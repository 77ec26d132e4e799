#include "gapvec/variety_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace gapvec {

namespace {

// Non-degeneracy policy for files: fixed field, seed, and margin, so the
// accept/reject decision for a given file never depends on run flags.
constexpr uint64_t kFileCheckSeed = 0xF17E5EEDuLL;
constexpr int kFileCheckMargin = 25;

struct NumberedLine {
  int no;
  std::string text;
};

// Strip comments and blanks, keep 1-based line numbers for diagnostics.
std::vector<NumberedLine> content_lines(std::istream& in) {
  std::vector<NumberedLine> out;
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    size_t a = raw.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = raw.find_last_not_of(" \t\r");
    out.push_back({no, raw.substr(a, b - a + 1)});
  }
  return out;
}

long long parse_ll(const std::string& tok, const std::string& where) {
  try {
    size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(where + ": expected an integer, got '" + tok + "'");
  }
}

long long header_value(const NumberedLine& ln, const std::string& key,
                       const std::string& path) {
  const std::string where = path + ":" + std::to_string(ln.no);
  std::istringstream is(ln.text);
  std::string word, val, extra;
  is >> word >> val;
  if (word != key || val.empty() || (is >> extra))
    throw ParseError(where + ": expected '" + key + " <count>'");
  return parse_ll(val, where);
}

Poly parse_poly_line(const std::string& line, int nvars, const std::string& where) {
  auto fail = [&](const std::string& msg) -> void { throw ParseError(where + ": " + msg); };
  Poly p = Poly::zero(nvars);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  };
  auto parse_digits = [&](const char* what) -> std::string {
    size_t j = i;
    while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
    if (j == i) fail(std::string("expected ") + what);
    std::string s = line.substr(i, j - i);
    i = j;
    return s;
  };
  bool first = true;
  for (;;) {
    skip_ws();
    if (i == line.size()) break;
    int sign = 1;
    if (line[i] == '+' || line[i] == '-') {
      sign = line[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      fail(std::string("expected '+' or '-' before '") + line[i] + "'");
    }
    mpq_class coeff(1);
    bool have_num = false;
    if (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
      mpz_class num(parse_digits("a coefficient"));
      mpz_class den(1);
      if (i < line.size() && line[i] == '/') {
        ++i;
        den = mpz_class(parse_digits("a denominator"));
        if (den == 0) fail("zero denominator");
      }
      coeff = mpq_class(num, den);
      coeff.canonicalize();
      have_num = true;
    }
    if (sign < 0) coeff = -coeff;
    Exps e(nvars, 0);
    bool have_var = false;
    for (;;) {
      skip_ws();
      if (i < line.size() && line[i] == '*') {
        ++i;
        skip_ws();
      }
      if (i >= line.size() || line[i] != 't') break;
      ++i;
      long long idx = parse_ll(parse_digits("a variable index after 't'"), where);
      if (idx >= nvars)
        fail("variable t" + std::to_string(idx) + " out of range (params = " +
             std::to_string(nvars) + ")");
      int ex = 1;
      if (i < line.size() && line[i] == '^') {
        ++i;
        ex = static_cast<int>(parse_ll(parse_digits("an exponent"), where));
      }
      e[static_cast<size_t>(idx)] += ex;
      have_var = true;
    }
    if (!have_num && !have_var) fail("expected a term");
    p.add_term(coeff, e);
    first = false;
  }
  if (p.terms.empty() && first) fail("empty polynomial");
  p.normalize();
  return p;
}

}  // namespace

Parametrization from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  const std::string label = "file:" + path;
  auto lines = content_lines(in);
  if (lines.size() < 3)
    throw ParseError(path + ": need a params line, a degree line, and at least one polynomial");
  long long nparams = header_value(lines[0], "params", path);
  if (nparams < 2 || nparams > 64)
    throw ParseError(path + ":" + std::to_string(lines[0].no) + ": params must be in 2..64");
  long long w = header_value(lines[1], "degree", path);
  if (w < 1)
    throw ParseError(path + ":" + std::to_string(lines[1].no) + ": degree must be >= 1");
  std::vector<Poly> maps;
  for (size_t k = 2; k < lines.size(); ++k) {
    const std::string where = path + ":" + std::to_string(lines[k].no);
    Poly p = parse_poly_line(lines[k].text, static_cast<int>(nparams), where);
    if (p.is_zero()) throw ParseError(where + ": polynomial vanishes after cancellation");
    if (p.homogeneous_degree() != static_cast<int>(w))
      throw ParseError(where + ": polynomial is not homogeneous of degree " + std::to_string(w));
    maps.push_back(std::move(p));
  }
  Parametrization X = make_parametrization(std::move(maps), label);
  if (!nondegeneracy_check(X, FieldContext::modp_index(0), kFileCheckSeed, kFileCheckMargin))
    throw InvalidVariety(label +
                         ": coordinates are linearly dependent on the image — "
                         "the parametrized variety is degenerate");
  return X;
}

Parametrization toric_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  auto lines = content_lines(in);
  std::vector<Exps> cols;
  size_t width = 0;
  for (const auto& ln : lines) {
    const std::string where = path + ":" + std::to_string(ln.no);
    std::istringstream is(ln.text);
    Exps col;
    std::string tok;
    while (is >> tok) col.push_back(static_cast<int>(parse_ll(tok, where)));
    if (cols.empty())
      width = col.size();
    else if (col.size() != width)
      throw ParseError(where + ": expected " + std::to_string(width) +
                       " exponents like the first column");
    cols.push_back(std::move(col));
  }
  return toric(cols, "toric:file=" + path);
}

Parametrization build_from_spec(const std::string& spec, uint64_t seed) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size())
    throw ParseError("variety spec '" + spec +
                     "': expected family:args (veronese, segre, delpezzo, toric, file)");
  const std::string family = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (family == "file") return from_file(rest);
  if (family == "toric") {
    if (rest.rfind("file=", 0) != 0)
      throw ParseError("variety spec '" + spec + "': expected toric:file=PATH");
    return toric_from_file(rest.substr(5));
  }
  std::map<std::string, long long> kv;
  std::istringstream is(rest);
  std::string item;
  while (std::getline(is, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ParseError("variety spec '" + spec + "': bad argument '" + item + "'");
    const std::string key = item.substr(0, eq);
    if (!kv.emplace(key, parse_ll(item.substr(eq + 1), "variety spec '" + spec + "'")).second)
      throw ParseError("variety spec '" + spec + "': duplicate argument '" + key + "'");
  }
  auto want = [&](std::initializer_list<const char*> keys) {
    if (kv.size() != keys.size())
      throw ParseError("variety spec '" + spec + "': wrong argument set");
    for (const char* k : keys)
      if (!kv.count(k))
        throw ParseError("variety spec '" + spec + "': missing argument '" + std::string(k) +
                         "'");
  };
  if (family == "veronese") {
    want({"n", "d"});
    return veronese(static_cast<int>(kv["n"]), static_cast<int>(kv["d"]));
  }
  if (family == "segre") {
    want({"a", "b"});
    return segre(static_cast<int>(kv["a"]), static_cast<int>(kv["b"]));
  }
  if (family == "delpezzo") {
    want({"k"});
    return delpezzo(static_cast<int>(kv["k"]), SeededSampler(seed, stream_id("delpezzo-base")));
  }
  throw ParseError("variety spec '" + spec + "': unknown family '" + family +
                   "' (expected veronese, segre, delpezzo, toric, file)");
}

}  // namespace gapvec

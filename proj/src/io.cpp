#include "veronese/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vrn {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::string> split_ws(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

std::string fe_hex(fe v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

fe parse_fe_hex(const Gf2e& F, const std::string& s) {
  if (s.empty()) throw parse_error("empty field element");
  std::uint64_t v = 0;
  for (char c : s) {
    int d;
    if (c >= '0' && c <= '9')
      d = c - '0';
    else if (c >= 'a' && c <= 'f')
      d = 10 + c - 'a';
    else if (c >= 'A' && c <= 'F')
      d = 10 + c - 'A';
    else
      throw parse_error("bad hex digit in field element: " + s);
    v = v * 16 + static_cast<std::uint64_t>(d);
    if (v > 0xFFFF) throw parse_error("field element " + s + " out of range");
  }
  if (v >= F.q()) throw parse_error("field element " + s + " out of range for q");
  return static_cast<fe>(v);
}

std::string modulus_bits(const Gf2e& F) {
  std::string out;
  for (int i = static_cast<int>(F.h()); i >= 0; --i)
    out.push_back(((F.modulus() >> i) & 1) ? '1' : '0');
  return out;
}

std::uint32_t parse_modulus_bits(const std::string& s, unsigned* h_out) {
  if (s.size() < 2 || s.size() > 17) throw parse_error("modulus bit string length");
  std::uint32_t m = 0;
  for (char c : s) {
    if (c != '0' && c != '1') throw parse_error("modulus must be a bit string");
    m = (m << 1) | static_cast<std::uint32_t>(c - '0');
  }
  if ((m >> (s.size() - 1)) != 1) throw parse_error("modulus must have its leading bit set");
  if (h_out) *h_out = static_cast<unsigned>(s.size() - 1);
  return m;
}

Plane5 parse_plane_matrix(const Gf2e& F, const std::string& text) {
  auto toks = split_ws(text);
  if (toks.size() != 18) throw parse_error("expected 18 field elements");
  std::array<std::array<fe, 6>, 3> rows{};
  for (int r = 0; r < 3; ++r)
    for (int i = 0; i < 6; ++i) rows[r][i] = parse_fe_hex(F, toks[r * 6 + i]);
  try {
    return plane_from_rows(F, rows);
  } catch (const dependence_error& e) {
    throw parse_error(std::string("generators are dependent: ") + e.what());
  }
}

Plane5 parse_plane_points(const Gf2e& F, const std::string& text) {
  return parse_plane_matrix(F, text);
}

namespace {

// One entry of the pencil: a linear form in x, y, z with field coefficients.
std::array<fe, 3> parse_linear_entry(const Gf2e& F, std::string s) {
  std::array<fe, 3> out{};
  std::string cur;
  // strip blanks
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty() || t == "." || t == "0") return out;
  std::vector<std::string> terms;
  std::string term;
  for (char c : t) {
    if (c == '+') {
      if (term.empty()) throw parse_error("empty term in pencil entry: " + s);
      terms.push_back(term);
      term.clear();
    } else {
      term.push_back(c);
    }
  }
  if (term.empty()) throw parse_error("trailing '+' in pencil entry: " + s);
  terms.push_back(term);
  for (const std::string& tm : terms) {
    char var = tm.back();
    int idx;
    if (var == 'x')
      idx = 0;
    else if (var == 'y')
      idx = 1;
    else if (var == 'z')
      idx = 2;
    else
      throw parse_error("pencil term must end in x, y or z: " + tm);
    std::string coef = tm.substr(0, tm.size() - 1);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    fe c = coef.empty() ? static_cast<fe>(1) : parse_fe_hex(F, coef);
    out[idx] = F.add(out[idx], c);
  }
  return out;
}

}  // namespace

Plane5 parse_pencil(const Gf2e& F, const std::string& text) {
  std::vector<std::string> rows;
  std::string row;
  for (char c : text) {
    if (c == ';' || c == '\n') {
      rows.push_back(row);
      row.clear();
    } else {
      row.push_back(c);
    }
  }
  if (!row.empty()) rows.push_back(row);
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const std::string& r) {
                              return r.find_first_not_of(" \t") == std::string::npos;
                            }),
             rows.end());
  if (rows.size() != 3) throw parse_error("pencil must have three rows");
  std::array<std::array<std::array<fe, 3>, 3>, 3> entry{};
  for (int r = 0; r < 3; ++r) {
    std::vector<std::string> cells;
    std::string cell;
    for (char c : rows[r]) {
      if (c == ',') {
        cells.push_back(cell);
        cell.clear();
      } else {
        cell.push_back(c);
      }
    }
    cells.push_back(cell);
    if (cells.size() != 3) throw parse_error("pencil rows must have three entries");
    for (int cix = 0; cix < 3; ++cix) entry[r][cix] = parse_linear_entry(F, cells[cix]);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (entry[i][j] != entry[j][i]) throw parse_error("pencil is not symmetric");
  // generator t: 6-vector (m00, m01, m02, m11, m12, m22) coefficient of t
  std::array<std::array<fe, 6>, 3> rows6{};
  const int pos[6][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
  for (int t = 0; t < 3; ++t)
    for (int e = 0; e < 6; ++e) rows6[t][e] = entry[pos[e][0]][pos[e][1]][t];
  try {
    return plane_from_rows(F, rows6);
  } catch (const dependence_error& e) {
    throw parse_error(std::string("pencil generators are dependent: ") + e.what());
  }
}

nlohmann::json plane_json(const Plane5& pl) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < 3; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int i = 0; i < 6; ++i) row.push_back(fe_hex(pl.m[r][i]));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json classification_json(const PlaneClassifier& C, const Plane5& pl) {
  const Gf2e& F = C.field();
  PlaneInvariants inv = C.invariants(pl);
  PlaneOrbit label = C.classify(pl);
  nlohmann::json j;
  j["q"] = F.q();
  j["modulus"] = modulus_bits(F);
  j["label"] = plane_orbit_name(label);
  j["label_display"] = plane_orbit_display(label);
  j["point_od"] = {inv.od.r1, inv.od.r2n, inv.od.r2s, inv.od.r3};
  j["nucleus_meet_dim"] = inv.nucleus_meet_dim;
  // the ten cubic coefficients in the order
  // a000 a011 a022 a100 a111 a122 a200 a211 a222 a012
  nlohmann::json coeffs = nlohmann::json::array();
  for (int i = 0; i < 3; ++i)
    for (int jj = 0; jj < 3; ++jj) coeffs.push_back(fe_hex(inv.cubic.A[i][jj]));
  coeffs.push_back(fe_hex(inv.cubic.a012));
  j["cubic"] = coeffs;
  j["cubic_type"] = cubic_type_name(inv.cubic_type);
  j["rank_le2_collinear"] = inv.rank_le2_collinear;
  if (inv.inflexion_count) j["inflexion_count"] = *inv.inflexion_count;
  j["plane"] = plane_json(pl);
  return j;
}

nlohmann::json census_body_json(const CensusResult& r) {
  nlohmann::json j;
  j["format"] = "veronese-census/1";
  j["q"] = r.q;
  std::string mod;
  {
    unsigned h = 0;
    std::uint32_t m = r.modulus;
    while ((m >> h) > 1) ++h;
    for (int i = static_cast<int>(h); i >= 0; --i)
      mod.push_back(((r.modulus >> i) & 1) ? '1' : '0');
  }
  j["modulus"] = mod;
  j["group"] = r.group == CensusGroup::Sym7 ? "sym7" : "pgl3";
  j["mode"] = r.sampled ? "sampled" : "full";
  nlohmann::json labels;
  for (const auto& [name, lc] : r.labels) {
    nlohmann::json e;
    e["count"] = lc.count;
    if (lc.has_rep) e["representative"] = plane_json(lc.representative);
    labels[name] = e;
  }
  j["labels"] = labels;
  j["total_planes"] = r.total;
  j["forbidden_rank_distributions"] = {r.forbidden_rank_dist_1, r.forbidden_rank_dist_2};
  j["config_checksum"] = fnv1a("veronese-census/1|" + std::to_string(r.q) + "|" + mod + "|" +
                               (r.group == CensusGroup::Sym7 ? "sym7" : "pgl3"));
  return j;
}

nlohmann::json census_json(const CensusResult& r) {
  nlohmann::json j = census_body_json(r);
  j["runtime_seconds"] = r.seconds;
  return j;
}

nlohmann::json checks_json(const std::vector<CheckResult>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    all = all && c.pass;
  }
  return {{"checks", arr}, {"all_pass", all}};
}

}  // namespace vrn

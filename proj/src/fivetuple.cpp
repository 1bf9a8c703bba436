#include "fibforge/fivetuple.hpp"

#include <algorithm>
#include <random>

#include <json.hpp>

namespace fibforge {

std::vector<ExpTriple> exponent_triples(int total) {
  std::vector<ExpTriple> out;
  for (int i0 = 0; i0 <= total; ++i0)
    for (int i1 = 0; i1 + i0 <= total; ++i1) out.push_back({i0, i1, total - i0 - i1});
  std::sort(out.begin(), out.end());
  return out;
}

std::string triple_key(const ExpTriple& t) {
  return std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
}

int FiveTuple::alpha_degree(const ExpTriple& i) const {
  return i[0] * d[0] + i[1] * d[1] + i[2] * d[2] - e0;
}

int FiveTuple::beta_degree(const ExpTriple& j) const {
  return j[0] * d[0] + j[1] * d[1] + j[2] * d[2] -
         2 * (static_cast<int>(sum_d()) - e0);
}

Section FiveTuple::alpha_at(const ExpTriple& i) const {
  auto it = alpha.find(i);
  if (it != alpha.end()) return it->second;
  int deg = alpha_degree(i);
  return Section(deg < 0 ? -1 : deg, UniPoly());
}

Section FiveTuple::beta_at(const ExpTriple& j) const {
  auto it = beta.find(j);
  if (it != beta.end()) return it->second;
  int deg = beta_degree(j);
  return Section(deg < 0 ? -1 : deg, UniPoly());
}

std::vector<Violation> validate(const FiveTuple& t) {
  std::vector<Violation> out;
  if (!(0 <= t.d[0] && t.d[0] <= t.d[1] && t.d[1] <= t.d[2]))
    out.push_back({"degree", "degrees must satisfy 0 <= d0 <= d1 <= d2"});
  if (t.sum_d() <= 0) out.push_back({"sum_d", "sum of degrees must be positive"});
  for (const auto& [key, sec] : t.alpha) {
    int want = t.alpha_degree(key);
    if (want < 0 && !sec.is_zero())
      out.push_back({"degree", "alpha." + triple_key(key) + ": negative-degree section must vanish"});
    else if (!sec.is_zero() && sec.bundle_degree() != want)
      out.push_back({"degree", "alpha." + triple_key(key) + ": bundle degree mismatch"});
  }
  for (const auto& [key, sec] : t.beta) {
    int want = t.beta_degree(key);
    if (want < 0 && !sec.is_zero())
      out.push_back({"degree", "beta." + triple_key(key) + ": negative-degree section must vanish"});
    else if (!sec.is_zero() && sec.bundle_degree() != want)
      out.push_back({"degree", "beta." + triple_key(key) + ": bundle degree mismatch"});
  }
  int cap = std::min(t.d[0] + t.d[2], 2 * t.d[1]);
  if (t.e0 > cap)
    out.push_back({"necessary_bound",
                   "e0 > min(d0+d2, 2 d1): cannot be admissible"});
  // common zero of all alpha sections, on either chart
  bool any_alpha = false;
  UniPoly g0, g1;
  for (const auto& triple : exponent_triples(2)) {
    Section s = t.alpha_at(triple);
    if (s.is_zero()) continue;
    any_alpha = true;
    g0 = gcd(g0, s.chart0());
    g1 = gcd(g1, s.chart1());
    if (g0.degree() == 0 && g1.degree() == 0) break;
  }
  if (!any_alpha)
    out.push_back({"common_zero", "all alpha sections vanish identically"});
  else if (g0.degree() > 0)
    out.push_back({"common_zero", "alpha sections share a zero on chart 0: " + g0.str()});
  else if (g1.degree() > 0)
    out.push_back({"common_zero", "alpha sections share a zero over u = infinity"});
  return out;
}

namespace {

UniPoly draw_poly(std::mt19937_64& rng, int deg) {
  std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = draw_small_int(rng);
  return UniPoly(std::move(c));
}

bool phi_key_allowed(PhiFamily f, const ExpTriple& i) {
  if (f == PhiFamily::General) return true;
  // 101, 020, 011, 002
  return i == ExpTriple{1, 0, 1} || i == ExpTriple{0, 2, 0} || i == ExpTriple{0, 1, 1} ||
         i == ExpTriple{0, 0, 2};
}

bool psi_key_allowed(PsiFamily f, const ExpTriple& j) {
  if (f == PsiFamily::General) return true;
  // 103 and (0, j1, j2) with j2 >= 1
  return j == ExpTriple{1, 0, 3} || (j[0] == 0 && j[2] >= 1);
}

}  // namespace

FiveTuple draw_tuple(const std::array<int, 3>& d, int e0, PhiFamily phi, PsiFamily psi,
                     std::uint64_t seed) {
  FiveTuple t;
  t.d = d;
  t.e0 = e0;
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  for (const auto& key : exponent_triples(2)) {
    if (!phi_key_allowed(phi, key)) continue;
    int deg = t.alpha_degree(key);
    if (deg < 0) continue;
    Section s(deg, draw_poly(rng, deg));
    if (!s.is_zero()) t.alpha[key] = s;
  }
  for (const auto& key : exponent_triples(4)) {
    if (!psi_key_allowed(psi, key)) continue;
    int deg = t.beta_degree(key);
    if (deg < 0) continue;
    Section s(deg, draw_poly(rng, deg));
    if (!s.is_zero()) t.beta[key] = s;
  }
  return t;
}

FiveTuple make_m0(std::uint64_t seed) {
  return draw_tuple({1, 3, 3}, 2, PhiFamily::General, PsiFamily::General, seed);
}

FiveTuple make_slope36(std::uint64_t seed, int d) {
  if (d < 1) throw std::invalid_argument("slope36: d must be positive");
  return draw_tuple({d, 4 * d, 5 * d}, 2 * d, PhiFamily::General, PsiFamily::General, seed);
}

FiveTuple make_slope4813(std::uint64_t seed, int d) {
  if (d < 1) throw std::invalid_argument("slope4813: d must be positive");
  return draw_tuple({d, 5 * d, 7 * d}, 2 * d, PhiFamily::General, PsiFamily::Tilde, seed);
}

FiveTuple make_lowslope(std::uint64_t seed, int d, int m) {
  if (d < 1 || m < 0 || m > d) throw std::invalid_argument("lowslope: need d >= 1, 0 <= m <= d");
  if (2 * m > d)
    throw std::invalid_argument("lowslope: 2m <= d required for the construction");
  return draw_tuple({d - m, d, d + m}, 2 * d, PhiFamily::Tilde, PsiFamily::General, seed);
}

FiveTuple make_slope_family(std::uint64_t seed, const Rat& s, int d) {
  if (d < 1) throw std::invalid_argument("slope_family: d must be positive");
  if (s < Rat(8, 3) || s > Rat(10, 3))
    throw std::invalid_argument("slope_family: slope must lie in [8/3, 10/3]");
  Rat e0_rat = (Rat(4) - s) * 3 * d / 2;
  if (denom(e0_rat) != 1)
    throw std::invalid_argument("slope_family: (4-s)*3d/2 must be an integer");
  int e0 = static_cast<int>(numer(e0_rat).convert_to<long long>());
  return draw_tuple({d, d, d}, e0, PhiFamily::Tilde, PsiFamily::General, seed);
}

FiveTuple make_example(const std::string& name, std::uint64_t seed,
                       const std::map<std::string, std::string>& params) {
  auto get_int = [&](const std::string& k, int def) {
    auto it = params.find(k);
    if (it == params.end()) return def;
    return std::stoi(it->second);
  };
  if (name == "m0") return make_m0(seed);
  if (name == "slope36") return make_slope36(seed, get_int("d", 1));
  if (name == "slope4813") return make_slope4813(seed, get_int("d", 1));
  if (name == "lowslope") return make_lowslope(seed, get_int("d", 1), get_int("m", 0));
  if (name == "slope_family") {
    auto it = params.find("s");
    if (it == params.end()) throw std::invalid_argument("slope_family: missing parameter s");
    auto s = parse_rat(it->second);
    if (!s) throw std::invalid_argument("slope_family: bad rational s");
    return make_slope_family(seed, *s, get_int("d", 1));
  }
  throw std::invalid_argument("unknown example family: " + name);
}

FiveTuple perturb_beta_by_conic(const FiveTuple& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dULL + 17);
  FiveTuple out = t;
  int base = -2 * static_cast<int>(t.sum_d()) + 3 * t.e0;
  for (const auto& hkey : exponent_triples(2)) {
    int hdeg = hkey[0] * t.d[0] + hkey[1] * t.d[1] + hkey[2] * t.d[2] + base;
    if (hdeg < 0) continue;
    Section h(hdeg, draw_poly(rng, hdeg));
    if (h.is_zero()) continue;
    for (const auto& akey : exponent_triples(2)) {
      Section a = t.alpha_at(akey);
      if (a.is_zero()) continue;
      ExpTriple bkey{akey[0] + hkey[0], akey[1] + hkey[1], akey[2] + hkey[2]};
      Section add = a * h;
      Section cur = out.beta_at(bkey);
      Section sum = cur + add;
      if (sum.is_zero()) out.beta.erase(bkey);
      else
        out.beta[bkey] = sum;
    }
  }
  return out;
}

// ============================================================
// JSON serialization
// ============================================================

namespace {

nlohmann::json section_to_json(const Section& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i <= s.chart0().degree(); ++i) arr.push_back(rat_str(s.chart0().coeff(i)));
  return arr;
}

Section section_from_json(const nlohmann::json& arr, int degree, const std::string& path) {
  if (!arr.is_array()) throw TupleParseError(path, "expected an array of coefficient strings");
  std::vector<Rat> coeffs;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& el = arr[i];
    Rat v;
    if (el.is_string()) {
      auto parsed = parse_rat(el.get<std::string>());
      if (!parsed)
        throw TupleParseError(path + "[" + std::to_string(i) + "]",
                              "bad rational literal '" + el.get<std::string>() + "'");
      v = *parsed;
    } else if (el.is_number_integer()) {
      v = Rat(el.get<long long>());
    } else {
      throw TupleParseError(path + "[" + std::to_string(i) + "]",
                            "expected a string or integer");
    }
    coeffs.push_back(v);
  }
  UniPoly p(std::move(coeffs));
  if (p.degree() > degree)
    throw TupleParseError(path, "degree mismatch: coefficient count exceeds section degree " +
                                    std::to_string(degree));
  if (degree < 0 && !p.is_zero())
    throw TupleParseError(path, "degree mismatch: section of negative degree must be zero");
  return Section(degree < 0 ? -1 : degree, std::move(p));
}

ExpTriple key_from_string(const std::string& k, int total, const std::string& path) {
  if (k.size() != 3 || !std::isdigit(static_cast<unsigned char>(k[0])) ||
      !std::isdigit(static_cast<unsigned char>(k[1])) ||
      !std::isdigit(static_cast<unsigned char>(k[2])))
    throw TupleParseError(path + "." + k, "keys must be three digits i0 i1 i2");
  ExpTriple t{k[0] - '0', k[1] - '0', k[2] - '0'};
  if (t[0] + t[1] + t[2] != total)
    throw TupleParseError(path + "." + k,
                          "exponents must sum to " + std::to_string(total));
  return t;
}

}  // namespace

std::string to_json(const FiveTuple& t) {
  nlohmann::json j;
  j["base_genus"] = 0;
  j["d"] = {t.d[0], t.d[1], t.d[2]};
  j["e0"] = t.e0;
  nlohmann::json alpha = nlohmann::json::object(), beta = nlohmann::json::object();
  for (const auto& [key, sec] : t.alpha)
    if (!sec.is_zero()) alpha[triple_key(key)] = section_to_json(sec);
  for (const auto& [key, sec] : t.beta)
    if (!sec.is_zero()) beta[triple_key(key)] = section_to_json(sec);
  j["alpha"] = alpha;
  j["beta"] = beta;
  return j.dump(2);
}

FiveTuple from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw TupleParseError("<root>", std::string("malformed JSON: ") + e.what());
  }
  FiveTuple t;
  if (j.contains("base_genus") && j["base_genus"].get<int>() != 0)
    throw TupleParseError("base_genus", "only base genus 0 tuples are supported");
  if (!j.contains("d")) throw TupleParseError("d", "missing key");
  if (!j["d"].is_array() || j["d"].size() != 3) throw TupleParseError("d", "expected [d0,d1,d2]");
  for (int i = 0; i < 3; ++i) t.d[static_cast<std::size_t>(i)] = j["d"][static_cast<std::size_t>(i)].get<int>();
  if (!j.contains("e0")) throw TupleParseError("e0", "missing key");
  t.e0 = j["e0"].get<int>();
  if (!j.contains("alpha")) throw TupleParseError("alpha", "missing key");
  if (!j.contains("beta")) throw TupleParseError("beta", "missing key");
  for (const auto& [k, v] : j["alpha"].items()) {
    ExpTriple key = key_from_string(k, 2, "alpha");
    Section s = section_from_json(v, t.alpha_degree(key), "alpha." + k);
    if (!s.is_zero()) t.alpha[key] = s;
  }
  for (const auto& [k, v] : j["beta"].items()) {
    ExpTriple key = key_from_string(k, 4, "beta");
    Section s = section_from_json(v, t.beta_degree(key), "beta." + k);
    if (!s.is_zero()) t.beta[key] = s;
  }
  return t;
}

}  // namespace fibforge

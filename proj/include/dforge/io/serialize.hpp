#ifndef DFORGE_IO_SERIALIZE_HPP
#define DFORGE_IO_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "dforge/cover/cover.hpp"
#include "dforge/drinfeld/drinfeld.hpp"
#include "dforge/galois/chebotarev.hpp"

namespace dforge::io {

using json = nlohmann::json;

inline json field_to_json(const GaloisField& f) {
  return {{"p", f.characteristic()}, {"m", f.degree()}, {"modulus", f.modulus()}};
}

inline const GaloisField& field_from_json(const json& j) {
  try {
    const auto p = j.at("p").get<std::uint32_t>();
    if (j.contains("modulus")) return GaloisField::get(p, j.at("modulus").get<std::vector<std::uint32_t>>());
    return GaloisField::get(p, j.value("m", 1U));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field description: ") + e.what(), 0);
  }
}

/// Integer for prime fields, digit array (coefficients of 1, a, a^2, ...) otherwise.
inline json to_json(const Gf& a) {
  if (a.field().degree() == 1) return a.code();
  return a.field().digits(a.code());
}

inline Gf gf_from_json(const json& j, const GaloisField& f) {
  try {
    if (j.is_string()) return gf_from_json(json::parse(j.get<std::string>()), f);
    if (j.is_number_integer()) return Gf::from_int(&f, j.get<long long>());
    const auto d = j.get<std::vector<std::uint32_t>>();
    if (d.size() != f.degree()) throw ParseError("digit array length differs from the field degree", 0);
    for (auto x : d)
      if (x >= f.characteristic()) throw ParseError("digit out of range", 0);
    return Gf(&f, f.from_digits(d));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field element: ") + e.what(), 0);
  }
}

/// Array of coefficient strings, ascending in degree.
inline json to_json(const UPoly& a) {
  json out = json::array();
  for (int i = 0; i <= a.degree(); ++i) out.push_back(a.coeff(static_cast<std::size_t>(i)).to_string());
  return out;
}

inline UPoly upoly_from_json(const json& j, const GaloisField& f) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array", 0);
  std::vector<Gf> c;
  for (const auto& e : j) c.push_back(gf_from_json(e, f));
  return UPoly(&f, std::move(c));
}

inline json to_json(const RatFn& a) { return {{"num", to_json(a.num())}, {"den", to_json(a.den())}}; }

inline RatFn ratfn_from_json(const json& j, const GaloisField& f) {
  if (j.is_array()) return RatFn(upoly_from_json(j, f));
  if (!j.is_object() || !j.contains("num")) throw ParseError("rational function must be an array or {num, den}", 0);
  const UPoly den = j.contains("den") ? upoly_from_json(j.at("den"), f) : UPoly::one(&f);
  if (den.is_zero()) throw ParseError("zero denominator", 0);
  return RatFn(upoly_from_json(j.at("num"), f), den);
}

template <class F>
json to_json(const OrePoly<F>& a) {
  json out = json::array();
  for (const auto& c : a.coeffs()) out.push_back(to_json(c));
  return out;
}

template <class F>
json to_json(const DrinfeldModule<F>& dm) {
  const OrePoly<F> phi_t = dm.phi_T();
  json coeffs = json::array();
  for (const auto& c : phi_t.coeffs()) coeffs.push_back(to_json(c));
  return {{"rank", dm.rank()}, {"coeffs", coeffs}};
}

template <class F>
json to_json(const FlagPoint<F>& pt) {
  json coords = json::array();
  for (const auto& c : pt.coords) coords.push_back(to_json(c));
  return {{"coords", coords}};
}

inline FlagPoint<RatFn> flag_from_json(const json& j, const GaloisField& f) {
  if (!j.is_object() || !j.contains("coords") || !j.at("coords").is_array())
    throw ParseError("flag point must be {coords: [...]}", 0);
  FlagPoint<RatFn> pt;
  for (const auto& c : j.at("coords")) pt.coords.push_back(ratfn_from_json(c, f));
  return pt;
}

template <class R>
json to_json(const BivarPoly<R>& p) {
  json out = json::object();
  for (const auto& [k, c] : p.terms()) out[std::to_string(k.first) + "," + std::to_string(k.second)] = to_json(c);
  return out;
}

inline KBivar kbivar_from_json(const json& j, const GaloisField& f) {
  if (!j.is_object()) throw ParseError("bivariate polynomial must be a JSON object", 0);
  KBivar p = KBivar::zero(&f);
  for (const auto& [key, c] : j.items()) {
    const auto comma = key.find(',');
    std::size_t used_i = 0;
    std::size_t used_j = 0;
    int i = -1;
    int jj = -1;
    try {
      if (comma == std::string::npos) throw ParseError("", 0);
      i = std::stoi(key.substr(0, comma), &used_i);
      jj = std::stoi(key.substr(comma + 1), &used_j);
    } catch (const std::exception&) {
      throw ParseError("bad monomial key '" + key + "'", 0);
    }
    if (used_i != comma || used_j != key.size() - comma - 1 || i < 0 || jj < 0)
      throw ParseError("bad monomial key '" + key + "'", 0);
    p.add_term(i, jj, ratfn_from_json(c, f));
  }
  return p;
}

inline json to_json(const CoverPoly& cp, bool expand_n = false) {
  const GaloisField& f = *cp.n.context();
  return {{"field", field_to_json(f)},
          {"N", to_json(cp.n)},
          {"terms", to_json(cp.poly)},
          {"text", cover_to_text(cp, expand_n)}};
}

inline CoverPoly cover_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("cover file must hold a JSON object", 0);
  for (const char* k : {"field", "N", "terms"})
    if (!j.contains(k)) throw ParseError(std::string("cover file lacks '") + k + "'", 0);
  const GaloisField& f = field_from_json(j.at("field"));
  CoverPoly cp{kbivar_from_json(j.at("terms"), f), upoly_from_json(j.at("N"), f)};
  if (cp.poly.is_zero()) throw ParseError("cover polynomial is zero", 0);
  if (cp.n.degree() < 1) throw ParseError("N must have positive degree", 0);
  return cp;
}

inline json to_json(const std::map<CycleType, std::uint64_t>& m) {
  json out = json::object();
  for (const auto& [ct, n] : m) out[ct.label()] = n;
  return out;
}

inline json to_json(const ChebotarevReport& r) {
  json outside = json::array();
  for (const auto& ct : r.outside) outside.push_back(ct.label());
  json missing = json::array();
  for (const auto& ct : r.missing) missing.push_back(ct.label());
  return {{"group", r.oracle.label},
          {"observed", to_json(r.observed)},
          {"oracle", to_json(r.oracle.classes)},
          {"containment", r.containment},
          {"coverage", r.coverage},
          {"distance", r.distance},
          {"max_deviation", r.max_deviation},
          {"discarded", r.discarded},
          {"samples", r.samples},
          {"outside", outside},
          {"missing", missing}};
}

}  // namespace dforge::io

#endif

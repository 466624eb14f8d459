#include "instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace toricmld::harness {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& source, const std::string& pointer, const std::string& what) {
  throw Error(ErrorCode::kParse, source + ": field " + pointer + ": " + what);
}

struct Reader {
  std::string source;

  Integer integer(const json& j, const std::string& at) const {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
      try {
        return Integer(j.get<std::string>());
      } catch (const std::invalid_argument&) {
      }
    }
    field_error(source, at, "expected an integer");
  }

  std::size_t index(const json& j, const std::string& at) const {
    if (!j.is_number_unsigned()) field_error(source, at, "expected a non-negative index");
    return j.get<std::size_t>();
  }

  Rational rational(const json& j, const std::string& at) const {
    if (j.is_number_integer()) return Rational(integer(j, at));
    if (!j.is_string()) field_error(source, at, "expected a rational string \"p/q\"");
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      field_error(source, at, e.what());
    }
  }

  const json& array(const json& j, const std::string& at) const {
    if (!j.is_array()) field_error(source, at, "expected an array");
    return j;
  }

  IntVector int_vec(const json& j, const std::string& at) const {
    IntVector v;
    std::size_t i = 0;
    for (const auto& x : array(j, at)) v.push_back(integer(x, at + "/" + std::to_string(i++)));
    return v;
  }

  RatVector rat_vec(const json& j, const std::string& at) const {
    RatVector v;
    std::size_t i = 0;
    for (const auto& x : array(j, at)) v.push_back(rational(x, at + "/" + std::to_string(i++)));
    return v;
  }

  std::vector<IntVector> int_vecs(const json& j, const std::string& at, std::size_t len) const {
    std::vector<IntVector> out;
    std::size_t i = 0;
    for (const auto& x : array(j, at)) {
      const std::string here = at + "/" + std::to_string(i++);
      out.push_back(int_vec(x, here));
      if (out.back().size() != len) field_error(source, here, "expected length " + std::to_string(len));
    }
    return out;
  }
};

std::string compact(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + "]";
}

std::string compact(const std::vector<IntVector>& vs) {
  std::string s = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + compact(vs[i]);
  return s + "]";
}

std::string quoted(const Rational& q) { return json(to_string(q)).dump(); }

std::string compact(const RatVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + quoted(v[i]);
  return s + "]";
}

json int_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p()) {
      out.push_back(x.get_si());
    } else {
      out.push_back(x.get_str());
    }
  }
  return out;
}

}  // namespace

ToricContraction Instance::contraction() const {
  IntMatrix m = IntMatrix::from_rows(rank_n, pi);
  return ToricContraction(Fan(rank_n, rays, max_cones), LatticeHom(std::move(m)), sigma_bar);
}

GPair Instance::pair() const {
  GPair p;
  p.b_inv = b;
  p.bdiv_a = SupportSet(bdiv_a);
  for (const auto& g : general) {
    std::vector<RatVector> pts;
    for (const auto& a : g.a) pts.push_back(to_rational(a));
    p.general.push_back({g.b, SupportSet(pts)});
  }
  return p;
}

Instance parse_instance(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, source + ": " + e.what());
  }
  const Reader r{source};
  if (!j.is_object()) field_error(source, "/", "expected an object");
  static const std::vector<std::string> known = {"comment", "rank_N", "rays", "max_cones", "pi",
                                                 "sigma_bar", "B", "bdiv_A", "general"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) field_error(source, "/" + key, "unknown field");
  }
  for (const char* key : {"rank_N", "rays", "max_cones", "pi"}) {
    if (!j.contains(key)) field_error(source, std::string("/") + key, "missing");
  }

  Instance inst;
  if (j.contains("comment")) {
    if (!j["comment"].is_string()) field_error(source, "/comment", "expected a string");
    inst.comment = j["comment"].get<std::string>();
  }
  if (!j["rank_N"].is_number_unsigned() || j["rank_N"].get<std::size_t>() == 0) {
    field_error(source, "/rank_N", "expected a positive integer");
  }
  inst.rank_n = j["rank_N"].get<std::size_t>();
  inst.rays = r.int_vecs(j["rays"], "/rays", inst.rank_n);
  std::size_t c = 0;
  for (const auto& cone : r.array(j["max_cones"], "/max_cones")) {
    const std::string at = "/max_cones/" + std::to_string(c++);
    std::vector<std::size_t> idx;
    std::size_t i = 0;
    for (const auto& x : r.array(cone, at)) {
      const std::string here = at + "/" + std::to_string(i++);
      idx.push_back(r.index(x, here));
      if (idx.back() >= inst.rays.size()) field_error(source, here, "ray index out of range");
    }
    inst.max_cones.push_back(std::move(idx));
  }
  inst.pi = r.int_vecs(j["pi"], "/pi", inst.rank_n);
  const std::size_t k = inst.pi.size();
  if (j.contains("sigma_bar") && !j["sigma_bar"].is_null()) {
    inst.sigma_bar = r.int_vecs(j["sigma_bar"], "/sigma_bar", k);
  }
  if (j.contains("B")) {
    if (!j["B"].is_object()) field_error(source, "/B", "expected an object");
    for (const auto& [key, value] : j["B"].items()) {
      const std::string at = "/B/" + key;
      std::size_t idx = 0;
      try {
        std::size_t used = 0;
        idx = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        field_error(source, at, "key must be a ray index");
      }
      if (idx >= inst.rays.size()) field_error(source, at, "ray index out of range");
      const Rational b = r.rational(value, at);
      if (b < 0 || b > 1) field_error(source, at, "coefficient " + to_string(b) + " is outside [0,1]");
      if (b != 0) inst.b[idx] = b;
    }
  }
  if (j.contains("bdiv_A")) {
    std::size_t i = 0;
    for (const auto& p : r.array(j["bdiv_A"], "/bdiv_A")) {
      const std::string at = "/bdiv_A/" + std::to_string(i++);
      inst.bdiv_a.push_back(r.rat_vec(p, at));
      if (inst.bdiv_a.back().size() != inst.rank_n) field_error(source, at, "expected length " + std::to_string(inst.rank_n));
    }
    if (inst.bdiv_a.empty()) field_error(source, "/bdiv_A", "must be nonempty");
  } else {
    inst.bdiv_a.push_back(RatVector(inst.rank_n, Rational(0)));
  }
  if (j.contains("general")) {
    std::size_t i = 0;
    for (const auto& g : r.array(j["general"], "/general")) {
      const std::string at = "/general/" + std::to_string(i++);
      if (!g.is_object() || !g.contains("b") || !g.contains("A")) field_error(source, at, "expected {b, A}");
      GeneralEntry e{r.rational(g["b"], at + "/b"), r.int_vecs(g["A"], at + "/A", inst.rank_n)};
      if (e.b < 0) field_error(source, at + "/b", "coefficient must be non-negative");
      if (e.a.empty()) field_error(source, at + "/A", "must be nonempty");
      inst.general.push_back(std::move(e));
    }
  }
  return inst;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path), path); }

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"comment\": " << json(inst.comment).dump() << ",\n";
  out << "  \"rank_N\": " << inst.rank_n << ",\n";
  out << "  \"rays\": " << compact(inst.rays) << ",\n";
  out << "  \"max_cones\": [";
  for (std::size_t c = 0; c < inst.max_cones.size(); ++c) {
    out << (c ? "," : "") << "[";
    for (std::size_t i = 0; i < inst.max_cones[c].size(); ++i) out << (i ? "," : "") << inst.max_cones[c][i];
    out << "]";
  }
  out << "],\n";
  out << "  \"pi\": " << compact(inst.pi) << ",\n";
  if (inst.sigma_bar) out << "  \"sigma_bar\": " << compact(*inst.sigma_bar) << ",\n";
  out << "  \"B\": {";
  bool first = true;
  for (const auto& [idx, b] : inst.b) {
    out << (first ? "" : ",") << "\"" << idx << "\":" << quoted(b);
    first = false;
  }
  out << "},\n";
  out << "  \"bdiv_A\": [";
  for (std::size_t i = 0; i < inst.bdiv_a.size(); ++i) out << (i ? "," : "") << compact(inst.bdiv_a[i]);
  out << "],\n";
  out << "  \"general\": [";
  for (std::size_t i = 0; i < inst.general.size(); ++i) {
    out << (i ? "," : "") << "{\"b\":" << quoted(inst.general[i].b) << ",\"A\":" << compact(inst.general[i].a) << "}";
  }
  out << "]\n}\n";
  return out.str();
}

std::string serialize_certificate(const HyperplaneCertificate& cert) {
  json j;
  j["phi_bar"] = int_json(cert.phi_bar);
  j["gamma"] = to_string(cert.gamma);
  j["mld"] = to_string(cert.mld);
  j["d"] = cert.d;
  j["l"] = cert.l;
  json levels = json::array();
  for (const auto& r : cert.transcript) {
    json lv;
    lv["level"] = r.level;
    lv["rank"] = r.rank;
    lv["l"] = r.l;
    lv["kind"] = r.kind;
    lv["t"] = to_string(r.t);
    lv["phi"] = int_json(r.phi);
    lv["w"] = to_string(r.w);
    lv["gamma"] = to_string(r.gamma);
    lv["phi_bar"] = int_json(r.phi_bar);
    if (r.kind == "case 2") {
      lv["w_minus"] = to_string(r.w_minus);
      lv["w_plus"] = to_string(r.w_plus);
      lv["lambda"] = to_string(r.lambda);
      lv["q"] = r.q.get_str();
      lv["c"] = to_string(r.c);
      lv["branch"] = r.minus_branch ? "minus" : "plus";
      lv["new_rays"] = r.new_rays;
      lv["max_subdivision_discrepancy"] = to_string(r.max_subdivision_discrepancy);
      lv["slice_mld"] = to_string(r.slice_mld);
      lv["primitive_divisor"] = r.primitive_divisor.get_str();
    }
    levels.push_back(std::move(lv));
  }
  j["transcript"] = std::move(levels);
  return j.dump(2) + "\n";
}

HyperplaneCertificate parse_certificate(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, source + ": " + e.what());
  }
  const Reader r{source};
  if (!j.is_object()) field_error(source, "/", "expected an object");
  for (const char* key : {"phi_bar", "gamma", "mld", "d"}) {
    if (!j.contains(key)) field_error(source, std::string("/") + key, "missing");
  }
  HyperplaneCertificate cert;
  cert.phi_bar = r.int_vec(j["phi_bar"], "/phi_bar");
  cert.gamma = r.rational(j["gamma"], "/gamma");
  cert.mld = r.rational(j["mld"], "/mld");
  if (!j["d"].is_number_unsigned()) field_error(source, "/d", "expected a non-negative integer");
  cert.d = j["d"].get<std::size_t>();
  if (j.contains("l") && j["l"].is_number_unsigned()) cert.l = j["l"].get<std::size_t>();
  return cert;
}

}  // namespace toricmld::harness

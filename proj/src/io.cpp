#include "mwgap/io.hpp"

#include <openssl/sha.h>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace mwgap {

namespace {

GridPoint point_from_json(const Json& j) { return GridPoint(j.get<std::vector<int>>()); }

Json point_to_json(const GridPoint& p) { return Json(std::vector<int>(p.coords().begin(), p.coords().end())); }

Rational rational_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw std::invalid_argument(std::string("expected rational string field '") + key + "'");
  }
  return parse_rational(j.at(key).get<std::string>());
}

}  // namespace

Json instance_to_json(const WeightFunction& w) {
  Json weights = Json::array();
  for (const auto& [e, value] : w.entries()) {
    weights.push_back({{"u", point_to_json(e.u())}, {"v", point_to_json(e.v())}, {"w", to_string(value)}});
  }
  return {{"k", w.k()}, {"n", w.n()}, {"weights", std::move(weights)}};
}

WeightFunction instance_from_json(const Json& j) {
  const int k = j.at("k").get<int>();
  const int n = j.at("n").get<int>();
  WeightFunction w(k, n);
  for (const auto& entry : j.at("weights")) {
    const Edge e(point_from_json(entry.at("u")), point_from_json(entry.at("v")));
    if (e.k() != k || e.n() != n) throw std::invalid_argument("edge does not belong to the instance grid");
    if (sgn(w.at(e)) != 0) throw std::invalid_argument("duplicate edge in instance");
    w.set(e, rational_field(entry, "w"));
  }
  return w;
}

std::string cut_family_name(CutFamily f) {
  switch (f) {
    case CutFamily::kway:
      return "kway";
    case CutFamily::nonopposite:
      return "nonopposite";
    case CutFamily::extended:
      return "extended";
  }
  throw std::logic_error("unknown cut family");
}

CutFamily parse_cut_family(const std::string& name) {
  if (name == "kway") return CutFamily::kway;
  if (name == "nonopposite") return CutFamily::nonopposite;
  if (name == "extended") return CutFamily::extended;
  throw std::invalid_argument("unknown cut family '" + name + "'");
}

Json cut_to_json(const Cut& cut) {
  Json labels = Json::array();
  const auto points = enumerate_points(cut.k(), cut.n());
  for (std::size_t r = 0; r < points.size(); ++r) {
    labels.push_back({{"x", point_to_json(points[r])}, {"c", cut.label_at(r)}});
  }
  return {{"k", cut.k()}, {"n", cut.n()}, {"family", cut_family_name(cut.family())}, {"labels", std::move(labels)}};
}

Cut cut_from_json(const Json& j) {
  const int k = j.at("k").get<int>();
  const int n = j.at("n").get<int>();
  const std::size_t count = composition_count(k, n);
  std::vector<int> labels(count, 0);
  std::vector<bool> given(count, false);
  bool extra = false;
  for (const auto& entry : j.at("labels")) {
    const GridPoint p = point_from_json(entry.at("x"));
    if (p.k() != k || p.n() != n) throw std::invalid_argument("cut point does not belong to the grid");
    const std::size_t r = lex_rank(p);
    if (given[r]) throw std::invalid_argument("point labeled twice");
    given[r] = true;
    labels[r] = entry.at("c").get<int>();
    extra = extra || labels[r] == k + 1;
  }
  for (bool g : given) {
    if (!g) throw std::invalid_argument("cut leaves a point unlabeled");
  }
  const CutFamily family = j.contains("family") ? parse_cut_family(j.at("family").get<std::string>())
                                                : (extra ? CutFamily::nonopposite : CutFamily::kway);
  return Cut(k, n, family, std::move(labels));
}

Json certificate_to_json(const Certificate& cert) {
  Json face = Json::array();
  for (const auto& v : cert.witness_vertices) face.push_back(v);
  return {{"family", family_name(cert.family)},
          {"target", to_string(cert.target)},
          {"pairwise",
           {{"12", to_string(cert.pairwise[0])}, {"13", to_string(cert.pairwise[1])}, {"23", to_string(cert.pairwise[2])}}},
          {"ball", to_string(cert.ball)},
          {"corner", to_string(cert.corner)},
          {"two_corner", to_string(cert.two_corner)},
          {"overall", to_string(cert.overall)},
          {"pass", cert.pass},
          {"witness_face", std::move(face)},
          {"witness_face_index", cert.witness_face}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  cert.family = parse_family(j.at("family").get<std::string>());
  cert.target = rational_field(j, "target");
  const auto& pw = j.at("pairwise");
  cert.pairwise = {rational_field(pw, "12"), rational_field(pw, "13"), rational_field(pw, "23")};
  cert.ball = rational_field(j, "ball");
  cert.corner = rational_field(j, "corner");
  cert.two_corner = rational_field(j, "two_corner");
  cert.overall = rational_field(j, "overall");
  cert.pass = j.at("pass").get<bool>();
  cert.witness_face = j.at("witness_face_index").get<int>();
  const auto& face = j.at("witness_face");
  if (!face.is_array() || face.size() != 3) throw std::invalid_argument("witness_face needs three vertices");
  for (std::size_t v = 0; v < 3; ++v) cert.witness_vertices[v] = face[v].get<std::array<int, 3>>();
  return cert;
}

std::string instance_digest(const WeightFunction& w) {
  const std::string text = instance_to_json(w).dump();
  unsigned char hash[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(text.data()), text.size(), hash);
  std::ostringstream out;
  for (unsigned char b : hash) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(b);
  return out.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace mwgap

#include "surfcat/json_io.hpp"

namespace surfcat {

std::string rational_text(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Json to_json_value(const Triangulation& t) { return Json::parse(to_json(t)); }

Json to_json_value(const SurfaceInvariants& inv) {
  Json j;
  j["genus"] = inv.genus;
  j["boundary_components"] = inv.boundary_components;
  j["marked_counts"] = inv.marked_counts;
  j["marked_points"] = inv.marked_points;
  j["internal_arcs"] = inv.internal_arcs;
  return j;
}

Json to_json_value(const QuiverWithPotential& qp) {
  Json j;
  j["vertices"] = qp.quiver.vertices;
  j["arrows"] = Json::array();
  for (const auto& a : qp.quiver.arrows) j["arrows"].push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}});
  j["potential_cycles"] = Json::array();
  for (const auto& c : qp.potential.cycles) j["potential_cycles"].push_back(c);
  j["relations"] = Json::array();
  for (const auto& [a, b] : qp.relations.forbidden_pairs) j["relations"].push_back({a, b});
  return j;
}

Json to_json_value(const Band& b) { return format(b); }

Json to_json_value(const ObjectC& x) {
  Json j;
  j["spec"] = format(x);
  switch (x.kind) {
    case ObjectC::Kind::Zero:
      j["kind"] = "zero";
      break;
    case ObjectC::Kind::Arc:
      j["kind"] = "arc";
      j["arc"] = x.arc();
      j["start"] = x.start_point();
      j["end"] = x.end_point();
      break;
    case ObjectC::Kind::String: {
      j["kind"] = "string";
      j["word"] = format(x.word());
      j["start"] = x.start_point();
      j["end"] = x.end_point();
      j["dims"] = module_of(x).dims;
      break;
    }
    case ObjectC::Kind::Band:
      j["kind"] = "band";
      j["band"] = format(x.band);
      j["n"] = x.n;
      j["lambda"] = rational_text(x.lambda);
      break;
  }
  return j;
}

Json to_json_value(const ARTriangle& tr) {
  Json j;
  j["source"] = to_json_value(tr.source);
  j["middle"] = Json::array();
  for (const auto& m : tr.middle) j["middle"].push_back(to_json_value(m));
  j["target"] = to_json_value(tr.target);
  return j;
}

Json to_json_value(const Component& c) {
  Json j;
  switch (c.kind) {
    case Component::Kind::BoundaryTube:
      j["kind"] = "boundary_tube";
      j["boundary"] = c.boundary;
      j["rank"] = c.rank;
      j["segment"] = c.segment;
      j["level"] = c.level;
      break;
    case Component::Kind::HomogeneousTube:
      j["kind"] = "homogeneous_tube";
      break;
    case Component::Kind::TwoMiddleTerm:
      j["kind"] = "two_middle_terms";
      break;
  }
  return j;
}

Json to_json_value(const ExtWitness& w) {
  Json j;
  j["flips_used"] = w.flips_used;
  j["triangulation"] = to_json_value(w.model->tri);
  j["left"] = to_json_value(w.left);
  j["middle"] = Json::array();
  for (const auto& m : w.middle) j["middle"].push_back(to_json_value(m));
  j["right"] = to_json_value(w.right);
  j["certified"] = w.report.certified;
  j["reason"] = w.report.reason;
  return j;
}

Json to_json_value(const ExchangeTriangles& ex) {
  Json j;
  j["replacement"] = to_json_value(ex.replacement);
  j["middle_left"] = Json::array();
  for (const auto& m : ex.middle_left) j["middle_left"].push_back(to_json_value(m));
  j["middle_right"] = Json::array();
  for (const auto& m : ex.middle_right) j["middle_right"].push_back(to_json_value(m));
  j["ext"] = ex.ext;
  return j;
}

Json to_json_value(const CTCheck& ck) {
  Json j;
  j["ok"] = ck.ok;
  if (!ck.ok) j["reason"] = ck.reason;
  if (ck.triangulation) {
    j["triangulation"] = to_json_value(*ck.triangulation);
    j["arc_ids"] = ck.arc_ids;
  }
  return j;
}

Json error_json(const Error& e) {
  Json j;
  j["error"] = std::string(error_name(e.code()));
  j["detail"] = e.what();
  return j;
}

}  // namespace surfcat

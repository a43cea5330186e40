#include "gelfand/report.hpp"

namespace gelfand {

Json to_json(const GroupParams& params) { return Json::array({params.r, params.p, params.q, params.n}); }

Json to_json(const Cyclotomic& value) {
  Json j;
  j["order"] = value.order();
  j["coeffs"] = value.coeffs();
  return j;
}

Json to_json(const Character& chi) {
  Json j;
  j["group"] = to_json(chi.group);
  j["classes"] = Json::array();
  for (const auto& cls : chi.classes) {
    Json c;
    c["rep"] = to_window(cls.representative);
    c["size"] = cls.size;
    c["value"] = to_json(cls.value);
    j["classes"].push_back(std::move(c));
  }
  return j;
}

Json to_json(const FerrersMulti& mu) {
  Json j = Json::array();
  for (const auto& p : mu.parts) j.push_back(p);
  return j;
}

Json to_json(const MultiTableau& t) {
  Json j = Json::array();
  for (const auto& d : t.slots) j.push_back(d);
  return j;
}

Json to_json(const TableauPair& pq) {
  Json j;
  j["shape"] = to_json(pq.P.shape());
  j["P"] = to_json(pq.P);
  j["Q"] = to_json(pq.Q);
  return j;
}

Json to_json(const RsReport& report) {
  Json j;
  j["group"] = to_json(report.params);
  j["passed"] = report.passed();
  j["properties"] = Json::array();
  for (const auto& p : report.properties) {
    Json c;
    c["name"] = p.name;
    c["passed"] = p.passed;
    c["checked"] = p.checked;
    if (!p.detail.empty()) c["detail"] = p.detail;
    if (!p.witness.empty()) c["witness"] = p.witness;
    j["properties"].push_back(std::move(c));
  }
  return j;
}

Json to_json(const VerificationReport& report) {
  Json j;
  j["group"] = to_json(report.group);
  j["kind"] = report.kind;
  j["passed"] = report.passed();
  j["checks"] = Json::array();
  for (const auto& c : report.checks) {
    Json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["detail"] = c.detail;
    if (!c.witness.empty()) e["witness"] = c.witness;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

}  // namespace gelfand

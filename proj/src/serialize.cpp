#include "esf/serialize.hpp"

#include <algorithm>
#include <cstdio>

namespace esf {

Json to_json(const StandardBitableau& t) {
  Json left = Json::array();
  for (auto row : t.left) {
    std::reverse(row.begin(), row.end());
    left.push_back(row);
  }
  Json right = Json::array();
  for (const auto& row : t.right) right.push_back(row);
  return Json::array({left, right});
}

Json to_json(const RatMatrix& m) { return Json(to_strings(m)); }

Json to_json(const RatVector& v) { return Json(to_strings(v)); }

Json to_json(const ExoticPoint& p) {
  Json j;
  j["n"] = p.space.n;
  j["bipartition"] = p.space.shape ? Json(p.space.shape->to_string()) : Json(nullptr);
  Json labels = Json::array();
  for (const auto& l : p.space.labels) labels.push_back(l.to_string());
  j["basis_labels"] = labels;
  j["v"] = to_json(p.v);
  j["x"] = to_json(p.x);
  return j;
}

std::string format_fraction(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

Json to_json(const RSRow& row) {
  Json j;
  j["mu"] = row.bp.mu.to_string();
  j["nu"] = row.bp.nu.to_string();
  j["T"] = to_json(row.T);
  j["Tprime"] = to_json(row.Tprime);
  j["w"] = row.w.to_string();
  j["length"] = length(row.w);
  j["consensus"] = format_fraction(row.consensus);
  return j;
}

Json to_json(const NaiveDisagreement& d) {
  Json j;
  j["w"] = d.w.to_string();
  j["geometric"] = Json::array({to_json(d.T), to_json(d.Tprime)});
  j["naive"] = Json::array({to_json(d.P), to_json(d.Q)});
  return j;
}

std::string tsv_header() { return "mu\tnu\tT\tTprime\tw\tlength\tconsensus"; }

std::string to_tsv(const RSRow& row) {
  return row.bp.mu.to_string() + "\t" + row.bp.nu.to_string() + "\t" + row.T.display() + "\t" +
         row.Tprime.display() + "\t" + row.w.to_string() + "\t" + std::to_string(length(row.w)) + "\t" +
         format_fraction(row.consensus);
}

}  // namespace esf

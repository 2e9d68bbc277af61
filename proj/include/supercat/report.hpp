#pragma once

// JSON forms of verification reports and bijection traces. Keys are emitted in
// sorted order (nlohmann::json's default object map), so parsing and
// re-serializing a document reproduces it byte for byte.

#include <json.hpp>

#include <string>
#include <vector>

#include "supercat/bijection.hpp"
#include "supercat/errors.hpp"
#include "supercat/identities.hpp"

namespace supercat {

using json = nlohmann::json;

inline json to_json(const VerificationReport& r) {
  json j;
  j["identity"] = r.identity_id;
  j["order"] = r.order;
  j["passed"] = r.passed;
  if (r.first_mismatch) {
    j["first_mismatch"] = {{"check", r.first_mismatch->check},
                           {"power", r.first_mismatch->power},
                           {"lhs", r.first_mismatch->lhs},
                           {"rhs", r.first_mismatch->rhs}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  j["elapsed_ms"] = r.elapsed.count();
  j["notes"] = r.notes;
  return j;
}

inline VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.identity_id = j.at("identity").get<std::string>();
  r.order = j.at("order").get<int>();
  r.passed = j.at("passed").get<bool>();
  if (!j.at("first_mismatch").is_null()) {
    const auto& m = j.at("first_mismatch");
    r.first_mismatch = Mismatch{m.at("check").get<std::string>(), m.at("power").get<std::string>(),
                                m.at("lhs").get<std::string>(), m.at("rhs").get<std::string>()};
  }
  r.elapsed = std::chrono::duration<double, std::milli>(j.at("elapsed_ms").get<double>());
  if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

inline json to_json(const std::vector<VerificationReport>& reports) {
  json list = json::array();
  bool all = true;
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    all = all && r.passed;
  }
  return {{"passed", all}, {"reports", list}};
}

namespace detail {

inline json point_json(const char* host, const MarkedPoint& p) {
  return {{"path", host}, {"index", p.index}, {"level", p.level}};
}

inline MarkedPoint point_from_json(const json& j) {
  return {j.at("index").get<std::size_t>(), j.at("level").get<int>()};
}

}  // namespace detail

/**
 * {"p", "q", "f", "boundary", "output", "points": {u, v, v_prime, x, y, y_prime}},
 * each point {"path": "F"|"P"|"D", "index", "level"}.
 */
inline json to_json(const BijectionTrace& t) {
  return {{"p", t.p.str()},
          {"q", t.q.str()},
          {"f", t.intermediate.f.str()},
          {"boundary", t.intermediate.boundary},
          {"output", t.output.str()},
          {"points",
           {{"u", detail::point_json("F", t.u)},
            {"v", detail::point_json("P", t.v)},
            {"v_prime", detail::point_json("F", t.v_prime)},
            {"x", detail::point_json("F", t.x)},
            {"y", detail::point_json("F", t.y)},
            {"y_prime", detail::point_json("D", t.y_prime)}}}};
}

inline BijectionTrace trace_from_json(const json& j) {
  BijectionTrace t;
  try {
    t.p = Path::parse(j.at("p").get<std::string>());
    t.q = Path::parse(j.at("q").get<std::string>());
    t.intermediate.f = Path::parse(j.at("f").get<std::string>());
    t.intermediate.boundary = j.at("boundary").get<std::size_t>();
    t.output = Path::parse(j.at("output").get<std::string>());
    const auto& pts = j.at("points");
    t.u = detail::point_from_json(pts.at("u"));
    t.v = detail::point_from_json(pts.at("v"));
    t.v_prime = detail::point_from_json(pts.at("v_prime"));
    t.x = detail::point_from_json(pts.at("x"));
    t.y = detail::point_from_json(pts.at("y"));
    t.y_prime = detail::point_from_json(pts.at("y_prime"));
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed bijection trace: ") + e.what());
  }
  if (t.intermediate.boundary > t.intermediate.f.length() || t.y.index > t.intermediate.f.length() ||
      t.y_prime.index > t.output.length() || t.v.index > t.p.length()) {
    throw DomainError("malformed bijection trace: point index out of range");
  }
  return t;
}

}  // namespace supercat

#pragma once

#include <string>

#include <json.hpp>

#include "chainops/census.hpp"
#include "chainops/nary.hpp"
#include "chainops/path.hpp"
#include "chainops/predicates.hpp"
#include "chainops/table.hpp"

namespace chainops {

// JSON mirrors of the text formats. ordered_json keeps field order stable so
// reports and tables are byte-reproducible.
using Json = nlohmann::ordered_json;

inline Json table_to_json(const BinaryOpTable& t) {
  Json rows = Json::array();
  for (Elem x = 1; x <= t.chain_size(); ++x) {
    Json row = Json::array();
    for (Elem y = 1; y <= t.chain_size(); ++y) row.push_back(t.at(x, y));
    rows.push_back(std::move(row));
  }
  return Json{{"k", t.chain_size()}, {"values", std::move(rows)}};
}

inline BinaryOpTable table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("values"))
    fail(errc::syntax_error, "table JSON needs fields 'k' and 'values'");
  int k = j.at("k").get<int>();
  std::vector<std::vector<Elem>> values;
  for (const auto& row : j.at("values")) values.push_back(row.get<std::vector<Elem>>());
  return BinaryOpTable(k, values);
}

inline Json witness_to_json(const Witness& w) {
  Json j;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NotIdempotent>) {
          j = Json{{"kind", "not_idempotent"}, {"x", v.x}};
        } else if constexpr (std::is_same_v<T, NotQuasitrivial>) {
          j = Json{{"kind", "not_quasitrivial"}, {"x", v.x}, {"y", v.y}};
        } else if constexpr (std::is_same_v<T, NotNondecreasing>) {
          j = Json{{"kind", "not_nondecreasing"},
                   {"x1", v.x1},
                   {"y1", v.y1},
                   {"x2", v.x2},
                   {"y2", v.y2}};
        } else if constexpr (std::is_same_v<T, NotMonotone>) {
          j = Json{{"kind", "not_monotone"},     {"section", v.along_y ? "row" : "column"},
                   {"fixed", v.fixed},           {"inc_lo", v.inc_lo},
                   {"inc_hi", v.inc_hi},         {"dec_lo", v.dec_lo},
                   {"dec_hi", v.dec_hi}};
        } else if constexpr (std::is_same_v<T, NotSymmetric>) {
          j = Json{{"kind", "not_symmetric"}, {"x", v.x}, {"y", v.y}};
        } else if constexpr (std::is_same_v<T, NotAssociative>) {
          j = Json{{"kind", "not_associative"}, {"x", v.x}, {"y", v.y}, {"z", v.z}};
        } else if constexpr (std::is_same_v<T, NotBisymmetric>) {
          j = Json{{"kind", "not_bisymmetric"}, {"u", v.u}, {"v", v.v}, {"w", v.w}, {"z", v.z}};
        } else if constexpr (std::is_same_v<T, PictureCase>) {
          j = Json{{"kind", "picture_case"},
                   {"x", v.x},
                   {"y", v.y},
                   {"z", v.z},
                   {"tag", std::string(1, v.tag)}};
        }
      },
      w);
  return j;
}

inline Json report_to_json(const PropertyReport& r) {
  Json j;
  j["k"] = r.k;
  j["idempotent"] = r.idempotent;
  j["quasitrivial"] = r.quasitrivial;
  j["nondecreasing"] = r.nondecreasing;
  j["monotone"] = r.monotone;
  j["symmetric"] = r.symmetric;
  j["associative"] = r.associative;
  j["bisymmetric"] = r.bisymmetric;
  j["neutral"] = r.neutral ? Json(*r.neutral) : Json(nullptr);
  j["upper_half_neutral"] = r.upper_half_neutral ? Json(*r.upper_half_neutral) : Json(nullptr);
  j["lower_half_neutral"] = r.lower_half_neutral ? Json(*r.lower_half_neutral) : Json(nullptr);
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_to_json(w));
  j["witnesses"] = std::move(ws);
  return j;
}

inline const char* projection_name(TerminalProjection p) {
  switch (p) {
    case TerminalProjection::None: return "none";
    case TerminalProjection::ProjX: return "x";
    case TerminalProjection::ProjY: return "y";
  }
  return "?";
}

inline Json decomposition_to_json(const PathDecomposition& d) {
  Json steps = Json::array();
  for (PathStep s : d.steps()) steps.push_back(step_token(s));
  return Json{{"k", d.chain_size()}, {"steps", std::move(steps)},
              {"proj", projection_name(d.projection())}};
}

inline PathDecomposition decomposition_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("steps") || !j.contains("proj"))
    fail(errc::syntax_error, "decomposition JSON needs fields 'k', 'steps' and 'proj'");
  std::vector<PathStep> steps;
  for (const auto& s : j.at("steps")) {
    std::string tok = s.get<std::string>();
    if (tok == "R")
      steps.push_back(PathStep::Right);
    else if (tok == "D")
      steps.push_back(PathStep::Down);
    else if (tok == "Gx")
      steps.push_back(PathStep::DiagFirst);
    else if (tok == "Gy")
      steps.push_back(PathStep::DiagSecond);
    else
      fail(errc::syntax_error, "unknown step token '" + tok + "'");
  }
  std::string proj = j.at("proj").get<std::string>();
  TerminalProjection p = proj == "none"  ? TerminalProjection::None
                         : proj == "x"   ? TerminalProjection::ProjX
                         : proj == "y"   ? TerminalProjection::ProjY
                                         : (fail(errc::syntax_error, "unknown proj '" + proj + "'"),
                                            TerminalProjection::None);
  return PathDecomposition(j.at("k").get<int>(), std::move(steps), p);
}

// Counts are decimal strings: they outgrow JSON numbers near k = 43.
inline Json count_table_to_json(const CountTable& t) {
  Json entries = Json::array();
  for (int k = 1; k <= t.k_max; ++k) {
    std::size_t i = static_cast<std::size_t>(k - 1);
    entries.push_back(Json{{"k", k},
                           {"A", t.A[i].str()},
                           {"B", t.B[i].str()},
                           {"C", t.C[i].str()},
                           {"D", t.D[i].str()},
                           {"provenance", provenance_name(t.provenance[i])}});
  }
  return Json{{"k_max", t.k_max}, {"entries", std::move(entries)}};
}

inline Json nary_table_to_json(const NAryOpTable& f) {
  return Json{{"n", f.arity()}, {"k", f.chain_size()}, {"values", f.values()}};
}

inline NAryOpTable nary_table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("values"))
    fail(errc::syntax_error, "n-ary table JSON needs fields 'n', 'k' and 'values'");
  return NAryOpTable(j.at("n").get<int>(), j.at("k").get<int>(),
                     j.at("values").get<std::vector<Elem>>());
}

}  // namespace chainops

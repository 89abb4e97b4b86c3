#include "invsum/report.hpp"

#include <sstream>

namespace invsum {

void to_json(json& j, const IntSet& a) { j = render(a); }

void from_json(const json& j, IntSet& a) { a = parse_set(j.get<std::string>()); }

void to_json(json& j, const NormalForm& nf) {
  j = json{{"set", nf.set}, {"shift", nf.shift}, {"scale", nf.scale}, {"reflected", nf.reflected}};
}

void to_json(json& j, const SumsetStats& s) {
  j = json{{"k", s.k},   {"doubling", s.doubling}, {"b3", s.deficiency_b},
           {"b2", s.b2}, {"span", s.span}};
}

void from_json(const json& j, SumsetStats& s) {
  s = make_stats(j.at("k").get<std::int64_t>(), j.at("doubling").get<std::int64_t>(),
                 j.at("span").get<Value>());
}

void to_json(json& j, const ApWindow& w) {
  j = json{{"start", w.start}, {"diff", w.diff}, {"length", w.length}};
}

void from_json(const json& j, ApWindow& w) {
  w.start = j.at("start").get<Value>();
  w.diff = j.at("diff").get<Value>();
  w.length = j.at("length").get<Value>();
}

void to_json(json& j, const BpCover& c) {
  j = json{{"I", c.i},
           {"J", c.j},
           {"total_length", c.total_length()},
           {"singleton_part", c.has_singleton_part()}};
}

void from_json(const json& j, BpCover& c) {
  c.i = j.at("I").get<ApWindow>();
  c.j = j.at("J").get<ApWindow>();
}

void to_json(json& j, const Verdict& v) {
  j = json{{"claim", std::string(to_string(v.claim))}, {"applicable", v.applicable}};
  j["holds"] = v.holds ? json(*v.holds) : json(nullptr);
  j["ap_witness"] = v.ap_witness ? json(*v.ap_witness) : json(nullptr);
  j["bp_witness"] = v.bp_witness ? json(*v.bp_witness) : json(nullptr);
  if (v.claim == ClaimId::three_k_three) j["exact_bp"] = v.exact_bp;
}

void to_json(json& j, const ResidueDecomposition& r) {
  json classes = json::array();
  for (const auto& c : r.classes) {
    classes.push_back(json{{"residue", c.residue},
                           {"members", c.members},
                           {"lo", c.lo},
                           {"hi", c.hi},
                           {"fullness", c.fullness(r.modulus)}});
  }
  j = json{{"modulus", r.modulus}, {"classes", std::move(classes)}};
}

void to_json(json& j, const TriangleVerdict& t) {
  j = json{{"kind", std::string(to_string(t.kind))},
           {"window", json::array({t.lo, t.hi})},
           {"theta", t.theta}};
}

void to_json(json& j, const StructureReport& r) {
  json verdicts = json::object();
  for (const auto& [id, v] : r.verdicts) verdicts[std::string(to_string(id))] = v;
  j = json{{"input", r.input},
           {"normal_form", r.normal_form},
           {"stats", r.stats},
           {"ap", r.ap},
           {"bp", r.bp ? json(*r.bp) : json(nullptr)},
           {"verdicts", std::move(verdicts)},
           {"residues", r.residues},
           {"triangle", r.triangle},
           {"theta", r.theta},
           {"alpha", r.alpha}};
}

void to_json(json& j, const Violation& v) {
  j = json{{"set", v.set}, {"k", v.k}, {"b", v.b}, {"ap_len", v.ap_len}};
  j["bp_len"] = v.bp_len ? json(*v.bp_len) : json(nullptr);
}

void from_json(const json& j, Violation& v) {
  v.set = j.at("set").get<IntSet>();
  v.k = j.at("k").get<std::int64_t>();
  v.b = j.at("b").get<std::int64_t>();
  v.ap_len = j.at("ap_len").get<Value>();
  v.bp_len.reset();
  if (!j.at("bp_len").is_null()) v.bp_len = j.at("bp_len").get<Value>();
}

void to_json(json& j, const ClaimSummary& c) {
  j = json{{"claim", std::string(to_string(c.claim))},
           {"applicable", c.applicable},
           {"holds", c.holds}};
  if (c.claim == ClaimId::three_k_three) j["exact_bp"] = c.exact_bp;
  j["violations"] = c.violations;
}

void from_json(const json& j, ClaimSummary& c) {
  c.claim = parse_claim(j.at("claim").get<std::string>());
  c.applicable = j.at("applicable").get<std::size_t>();
  c.holds = j.at("holds").get<std::size_t>();
  c.exact_bp = j.value("exact_bp", std::size_t{0});
  c.violations = j.at("violations").get<std::vector<Violation>>();
}

// One object per claim, each carrying max_span, as published in the schema.
void to_json(json& j, const SweepSummary& s) {
  json claims = json::array();
  for (const auto& c : s.claims) {
    json o = json{{"max_span", s.max_span}};
    o.update(json(c));
    claims.push_back(std::move(o));
  }
  j = json{{"max_span", s.max_span}, {"sets", s.sets}, {"summaries", std::move(claims)}};
}

void from_json(const json& j, SweepSummary& s) {
  s.max_span = j.at("max_span").get<Value>();
  s.sets = j.at("sets").get<std::size_t>();
  s.claims = j.at("summaries").get<std::vector<ClaimSummary>>();
}

void to_json(json& j, const SearchRecord& r) {
  j = json{{"set", r.set},
           {"k", r.k},
           {"b", r.b},
           {"doubling", r.doubling},
           {"ap_len", r.ap_len},
           {"bp_len", r.bp_len ? json(*r.bp_len) : json(nullptr)},
           {"ratio", json::array({r.ratio_num, r.ratio_den})},
           {"frontier", r.frontier},
           {"applicable", r.applicable}};
}

void from_json(const json& j, SearchRecord& r) {
  r.set = j.at("set").get<IntSet>();
  r.k = j.at("k").get<std::int64_t>();
  r.b = j.at("b").get<std::int64_t>();
  r.doubling = j.at("doubling").get<std::int64_t>();
  r.ap_len = j.at("ap_len").get<Value>();
  r.bp_len.reset();
  if (!j.at("bp_len").is_null()) r.bp_len = j.at("bp_len").get<Value>();
  r.ratio_num = j.at("ratio").at(0).get<std::int64_t>();
  r.ratio_den = j.at("ratio").at(1).get<std::int64_t>();
  r.frontier = j.at("frontier").get<bool>();
  r.applicable = j.at("applicable").get<bool>();
}

void to_json(json& j, const SearchResult& r) {
  j = json{{"mode", std::string(to_string(r.mode))},
           {"complete", r.complete},
           {"budget_exhausted", r.budget_exhausted},
           {"work", r.work},
           {"min_failing_b", r.min_failing_b ? json(*r.min_failing_b) : json(nullptr)},
           {"records", r.records}};
}

void to_json(json& j, const RatioHistogram& h) {
  json buckets = json::array();
  for (const auto& b : h.buckets) {
    buckets.push_back(json{{"lo", h.lower(b)},
                           {"hi", h.upper(b)},
                           {"count", b.count},
                           {"structured", b.structured},
                           {"unstructured", b.unstructured}});
  }
  j = json{{"max_span", h.max_span},
           {"buckets_per_unit", h.buckets_per_unit},
           {"sets", h.sets},
           {"buckets", std::move(buckets)}};
}

void to_json(json& j, const FamilyRow& r) {
  j = json{{"family", std::string(to_string(r.family))}};
  if (r.family == Family::ex12) {
    j["a"] = r.a;
    j["c"] = r.c;
  }
  j["k"] = r.k;
  j["doubling"] = r.stats.doubling;
  j["b"] = r.stats.deficiency_b;
  j["expected_b"] = r.expected_b;
  j["b_matches"] = r.stats.deficiency_b == r.expected_b;
  j["ap_len"] = r.ap_len;
  j["bp_len"] = r.bp_len ? json(*r.bp_len) : json(nullptr);
}

void to_json(json& j, const TwoLinesEmbedding& e) {
  json pairs = json::array();
  for (const auto& p : e.image) pairs.push_back(json::array({p[0], p[1]}));
  j = json{{"l1", e.l1}, {"l2", e.l2}, {"points", render(e.points)}, {"image", std::move(pairs)}};
}

json envelope(const std::string& command, json input, json result, double wall_time_ms) {
  return json{{"schema_version", kSchemaVersion},
              {"tool", "invsum"},
              {"tool_version", kToolVersion},
              {"command", command},
              {"input", std::move(input)},
              {"result", std::move(result)},
              {"wall_time_ms", wall_time_ms}};
}

namespace {

bool is_scalar(const json& j) { return !j.is_object() && !j.is_array(); }

bool scalar_array(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (!is_scalar(e)) return false;
  }
  return true;
}

void pretty_into(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value) || scalar_array(value)) {
        out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
            << '\n';
      } else if (value.empty()) {
        out << pad << key << ": " << value.dump() << '\n';
      } else {
        out << pad << key << ":\n";
        pretty_into(out, value, indent + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_scalar(e) || scalar_array(e)) {
        out << pad << "- " << (e.is_string() ? e.get<std::string>() : e.dump()) << '\n';
      } else {
        out << pad << "-\n";
        pretty_into(out, e, indent + 1);
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

std::string pretty(const json& j) {
  std::ostringstream out;
  pretty_into(out, j, 0);
  return out.str();
}

std::string histogram_csv(const RatioHistogram& h) {
  std::ostringstream out;
  out << "lo,hi,count,structured,unstructured\n";
  for (const auto& b : h.buckets) {
    out << h.lower(b) << ',' << h.upper(b) << ',' << b.count << ',' << b.structured << ','
        << b.unstructured << '\n';
  }
  return out.str();
}

}  // namespace invsum

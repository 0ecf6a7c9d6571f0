#include "vmvt/serialize.hpp"

#include <sstream>

#include "vmvt/errors.hpp"

namespace vmvt::io {

json to_json(const BigInt& v) { return v.get_str(); }

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  BigInt out;
  if (!j.is_string() || out.set_str(j.get<std::string>(), 10) != 0) throw InvalidParams("not a decimal integer");
  return out;
}

json to_json(const Rational& r) { return json{{"num", r.num().get_str()}, {"den", r.den().get_str()}}; }

Rational rational_from_json(const json& j) { return Rational(big_from_json(j.at("num")), big_from_json(j.at("den"))); }

json value_record(const std::string& op, const json& params, const Rational& value, const std::string& provenance) {
  return json{{"op", op}, {"params", params}, {"value", to_json(value)}, {"provenance", provenance}};
}

json to_json(const CountRecord& rec, bool timing) {
  json j{{"op", rec.op}, {"params", rec.params}, {"count", rec.count.get_str()}};
  if (timing) j["elapsed_ms"] = rec.elapsed_ms;
  return j;
}

CountRecord count_record_from_json(const json& j) {
  CountRecord rec;
  rec.op = j.at("op").get<std::string>();
  rec.params = j.at("params");
  rec.count = big_from_json(j.at("count"));
  rec.elapsed_ms = j.value("elapsed_ms", 0.0);
  return rec;
}

json to_json(const EtaBound& eta) {
  json params{{"s", eta.s}, {"k", eta.k}};
  json j = value_record("eta", params, eta.value, to_string(eta.provenance));
  if (eta.m >= 0) j["m"] = eta.m;
  return j;
}

json to_json(const S1Result& res) {
  return json{{"op", "s1"},
              {"params", {{"k", res.k}}},
              {"value", to_json(res.value)},
              {"m", res.m},
              {"w", res.w},
              {"v", res.v},
              {"family", to_string(res.family)},
              {"gtilde", res.gtilde.get_str()}};
}

std::string gtilde_csv(const std::vector<S1Result>& rows) {
  std::ostringstream os;
  os << "k,s1_num,s1_den,m,w,v,family,gtilde\n";
  for (const auto& r : rows) {
    os << r.k << ',' << r.value.num() << ',' << r.value.den() << ',' << r.m << ',' << r.w << ',' << r.v << ','
       << to_string(r.family) << ',' << r.gtilde << '\n';
  }
  return os.str();
}

json to_json(const CongruenceInstance& inst) {
  return json{{"k", inst.k},   {"r", inst.r},     {"t", inst.t},     {"p", inst.p}, {"a", inst.a},
              {"b", inst.b},   {"xi", inst.xi},   {"eta", inst.eta}, {"m", inst.m}};
}

json to_json(const EquivalenceClassCensus& c, bool witnesses) {
  json j{{"op", "enum-b"},
         {"params", to_json(c.instance)},
         {"solutions", c.solution_count},
         {"class_count", c.class_count},
         {"class_sizes", c.class_sizes},
         {"bound", c.bound.get_str()},
         {"hypotheses_hold", c.hypotheses_hold},
         {"bound_respected", BigInt((unsigned long)c.class_count) <= c.bound}};
  if (witnesses) j["witnesses"] = c.witnesses;
  return j;
}

json to_json(const MaxClassCensus& c) {
  json j{{"op", "max-b"},
         {"params", {{"k", c.k}, {"r", c.r}, {"t", c.t}, {"p", c.p}, {"a", c.a}, {"b", c.b}}},
         {"observed_max", c.observed_max},
         {"bound", c.bound.get_str()},
         {"hypotheses_hold", c.hypotheses_hold},
         {"bound_asserted", c.hypotheses_hold},
         {"bound_respected", c.bound_respected},
         {"strongly_diagonal", c.strongly_diagonal},
         {"instances_swept", c.instances_swept},
         {"witness", {{"xi", c.witness_xi}, {"eta", c.witness_eta}, {"m", c.witness_m}}}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

json to_json(const HenselResult& r) {
  return json{{"op", "hensel"},
              {"count", r.count.get_str()},
              {"count_mod_prime", r.count_mod_prime.get_str()},
              {"degree_bound", r.degree_bound.get_str()},
              {"bound_respected", r.bound_respected}};
}

json to_json(const PolyIdentity& id) {
  json c = json::array(), d = json::array();
  for (const auto& v : id.c) c.push_back(v.get_str());
  for (const auto& v : id.d) d.push_back(v.get_str());
  return json{{"op", "lemma32"}, {"params", {{"alpha", id.alpha}, {"beta", id.beta}}}, {"c", c}, {"d", d},
              {"verified", verify_identity(id)}};
}

json summary_json(const IterationTrace& trace) {
  const auto& cfg = trace.config;
  json h = json::array();
  for (const auto& v : cfg.h) h.push_back(v.get_str());
  json checks = json::array();
  for (const auto& c : trace.checks) {
    json cj{{"name", c.name}, {"ok", c.ok}};
    if (!c.ok) cj["first_failure"] = c.first_failure;
    checks.push_back(cj);
  }
  const auto& last = trace.states.back();
  return json{{"op", "iterate"},
              {"params", {{"k", cfg.k}, {"r", cfg.r}, {"t", cfg.t}, {"s", cfg.s()}, {"N", cfg.N},
                          {"h_minus1", cfg.h_minus1}, {"h", h}}},
              {"final", {{"b", last.b.get_str()}, {"c", last.c.get_str()}, {"gamma", to_json(last.gamma)},
                         {"psi", to_json(last.psi)}}},
              {"checks", checks},
              {"all_ok", trace.all_ok()}};
}

std::string trace_csv(const IterationTrace& trace) {
  std::ostringstream os;
  os << "n,a,b,h,c,gamma_num,gamma_den,psi_num,psi_den\n";
  for (const auto& s : trace.states) {
    os << s.n << ',' << s.a << ',' << s.b << ',' << s.h << ',' << s.c << ',' << s.gamma.num() << ','
       << s.gamma.den() << ',' << s.psi.num() << ',' << s.psi.den() << '\n';
  }
  return os.str();
}

json to_json(const ThetaDelta& td) {
  return json{{"theta", to_json(td.theta)},
              {"delta", to_json(td.delta)},
              {"b_window", to_json(td.b_window)},
              {"c_window", to_json(td.c_window)},
              {"b_final_cap", td.b_final_cap.get_str()},
              {"b_final_window", to_json(td.b_final_window)},
              {"c_final_cap", td.c_final_cap.get_str()},
              {"ok", td.ok}};
}

json to_json(const LambdaCap& cap) {
  return json{{"exact", to_json(cap.exact)}, {"simple", to_json(cap.simple)}, {"ok", cap.ok}};
}

json to_json(const RepCount& rep) {
  return json{{"op", "waring-count"}, {"params", {{"s", rep.s}, {"k", rep.k}, {"n", rep.n}}},
              {"count", rep.count.get_str()}};
}

json to_json(const SingularSeriesValue& v) {
  return json{{"op", "singular-series"},
              {"params", {{"s", v.s}, {"k", v.k}, {"n", v.n}, {"Q", v.Q}}},
              {"value", v.value},
              {"imag", v.imag},
              {"tail_estimate", v.tail_estimate}};
}

std::string compare_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream os;
  os.precision(12);
  os << "n,R,main_term,ratio\n";
  for (const auto& r : rows) os << r.n << ',' << r.R << ',' << r.main << ',' << r.ratio << '\n';
  return os.str();
}

}  // namespace vmvt::io

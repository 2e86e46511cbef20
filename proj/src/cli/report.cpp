#include "commnil/report.hpp"

#include <cstdio>

namespace commnil {

using Json = nlohmann::json;

Json to_json(const Permutation &p) { return p.to_string(); }

Json to_json(const CriterionReport &r) {
  Json j;
  j["k"] = r.k;
  j["kind"] = to_string(r.kind);
  j["holds"] = r.holds;
  j["pairs_checked"] = r.pairs_checked;
  j["classes_reduced"] = r.classes_reduced;
  j["value_count"] = r.value_count;
  if (r.witness) {
    const auto &w = *r.witness;
    j["witness"] = {{"a", to_json(w.a)},
                    {"b", to_json(w.b)},
                    {"order_a", w.order_a},
                    {"order_b", w.order_b},
                    {"order_ab", w.order_ab}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const TheoremCheck &r) {
  Json j;
  j["criterion"] = to_json(r.report);
  j["verbal_order"] = r.verbal_order;
  j["nilpotent"] = r.nilpotent;
  j["consistent"] = r.consistent;
  return j;
}

Json to_json(const ProbeReport &r) {
  Json j;
  j["criterion"] = to_json(r.report);
  j["soluble"] = r.soluble;
  j["verbal_order"] = r.verbal_order;
  j["verbal_nilpotent"] = r.verbal_nilpotent;
  j["is_candidate_counterexample"] = r.is_candidate_counterexample;
  return j;
}

Json to_json(const SeriesReport &r) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["orders"] = r.orders;
  j["stabilized"] = r.stabilized;
  j["reaches_trivial"] = r.reaches_trivial;
  if (r.fitting_height)
    j["fitting_height"] = *r.fitting_height;
  else
    j["fitting_height"] = nullptr;
  return j;
}

Json to_json(const XcloTrace &t) {
  Json j;
  j["seed"] = t.seed;
  j["height"] = t.height;
  j["chain_orders"] = t.chain_orders();
  j["normalizer_orders"] = t.normalizer_orders();
  std::vector<std::size_t> level_sizes;
  for (const auto &x : t.level_sets)
    level_sizes.push_back(x.size());
  j["level_set_sizes"] = level_sizes;
  j["x_size"] = t.x.size();
  Json depths = Json::array();
  for (const auto &d : t.per_depth) {
    Json e;
    e["depth"] = d.depth;
    e["size"] = d.values.size();
    Json per_prime = Json::object();
    for (const auto &[p, s] : d.p_values)
      per_prime[std::to_string(p)] = s.size();
    e["p_sizes"] = per_prime;
    depths.push_back(e);
  }
  j["per_depth"] = depths;
  j["invariants"] = {{"generates", t.generates},
                     {"commutator_closed", t.commutator_closed},
                     {"prime_power_orders", t.prime_power_orders},
                     {"product_covers", t.product_covers},
                     {"normalizers_nested", t.normalizers_nested}};
  return j;
}

Json to_json(const LemmaReport &r, bool with_timing) {
  Json j;
  j["lemma"] = to_string(r.lemma);
  j["group_id"] = r.group_id;
  j["parameters"] = r.parameters;
  j["outcome"] = to_string(r.outcome);
  j["holds"] = r.holds();
  j["details"] = r.details;
  j["instances_checked"] = r.instances_checked;
  j["note"] = r.note;
  if (r.witness) {
    Json w;
    w["description"] = r.witness->description;
    Json elements = Json::object();
    for (const auto &[k, v] : r.witness->elements)
      elements[k] = to_json(v);
    w["elements"] = elements;
    Json groups = Json::object();
    for (const auto &[k, gens] : r.witness->groups) {
      Json list = Json::array();
      for (const auto &g : gens)
        list.push_back(to_json(g));
      groups[k] = list;
    }
    w["groups"] = groups;
    Json sets = Json::object();
    for (const auto &[k, elems] : r.witness->sets) {
      Json list = Json::array();
      for (const auto &g : elems)
        list.push_back(to_json(g));
      sets[k] = list;
    }
    w["sets"] = sets;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  if (with_timing)
    j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string corpus_hash(const std::vector<GroupDescriptor> &groups) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto &d : groups)
    for (unsigned char c : write_descriptor(d)) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

} // namespace commnil

#include "commnil/criterion.hpp"

#include "commnil/errors.hpp"

namespace commnil {

namespace {

struct Entry {
  const Permutation *element;
  std::uint64_t order;
};

// Returns true and fills `w` when (a, b) violates the condition.
bool violates(const Entry &a, const Entry &b, CriterionReport &r) {
  if (gcd_u64(a.order, b.order) != 1)
    return false;
  ++r.pairs_checked;
  std::uint64_t prod = (*a.element * *b.element).order();
  if (prod == a.order * b.order)
    return false;
  r.holds = false;
  r.witness = CriterionWitness{*a.element, *b.element, a.order, b.order, prod};
  return true;
}

} // namespace

CriterionReport coprime_product_criterion(const PermGroup &g, const DeltaValueSet &values,
                                          const CriterionOptions &options) {
  CriterionReport r;
  r.k = values.k;
  r.kind = values.kind;
  r.classes_reduced = options.reduce_by_conjugacy;

  std::vector<Entry> entries;
  for (const auto &x : values.values)
    if (!x.is_identity())
      entries.push_back({&x, x.order()});
  r.value_count = entries.size();

  if (!options.reduce_by_conjugacy) {
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (std::size_t j = i + 1; j < entries.size(); ++j)
        if (violates(entries[i], entries[j], r))
          return r;
    return r;
  }

  // Class representatives: the canonical-first member of each G-class met
  // inside the value set.
  std::vector<bool> covered(values.values.size(), false);
  std::vector<Entry> reps;
  for (const auto &e : entries) {
    std::size_t idx = values.values.index_of(*e.element);
    if (covered[idx])
      continue;
    reps.push_back(e);
    for (const auto &y : conjugacy_class(g, *e.element)) {
      std::size_t j = values.values.index_of(y);
      if (j == values.values.size())
        throw GroupError("value set is not conjugation-closed");
      covered[j] = true;
    }
  }
  for (const auto &a : reps)
    for (const auto &b : entries)
      if (violates(a, b, r))
        return r;
  return r;
}

CriterionReport coprime_product_criterion(const PermGroup &g, std::size_t k, WordKind kind,
                                          const CriterionOptions &options) {
  DeltaValueSet values =
      kind == WordKind::delta ? delta_values(g, k, options.cap) : gamma_values(g, k, options.cap);
  return coprime_product_criterion(g, values, options);
}

bool witness_replays(const CriterionWitness &w) {
  std::uint64_t oa = w.a.order();
  std::uint64_t ob = w.b.order();
  std::uint64_t oab = (w.a * w.b).order();
  return oa == w.order_a && ob == w.order_b && oab == w.order_ab && gcd_u64(oa, ob) == 1 &&
         oab != oa * ob;
}

namespace {

TheoremCheck check_with(const PermGroup &g, const DeltaValueSet &values,
                        const CriterionOptions &options) {
  TheoremCheck out;
  out.report = coprime_product_criterion(g, values, options);
  PermGroup verbal = verbal_subgroup(values);
  out.verbal_order = verbal.order();
  out.nilpotent = is_nilpotent(verbal);
  out.consistent = out.report.holds == out.nilpotent;
  return out;
}

} // namespace

TheoremCheck theorem_check(const PermGroup &g, std::size_t k, const CriterionOptions &options) {
  if (!is_soluble(g))
    throw NotSoluble();
  return check_with(g, delta_values(g, k, options.cap), options);
}

TheoremCheck gamma_theorem_check(const PermGroup &g, std::size_t k,
                                 const CriterionOptions &options) {
  return check_with(g, gamma_values(g, k, options.cap), options);
}

ProbeReport probe_insoluble(const PermGroup &g, std::size_t k, const CriterionOptions &options) {
  ProbeReport out;
  out.soluble = is_soluble(g);
  TheoremCheck check = check_with(g, delta_values(g, k, options.cap), options);
  out.report = check.report;
  out.verbal_order = check.verbal_order;
  out.verbal_nilpotent = check.nilpotent;
  out.is_candidate_counterexample = !out.soluble && out.report.holds;
  return out;
}

} // namespace commnil

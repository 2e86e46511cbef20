#include "commnil/verification.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "commnil/errors.hpp"

namespace commnil {

std::string to_string(LemmaId id) {
  switch (id) {
  case LemmaId::intersection:
    return "intersection";
  case LemmaId::from:
    return "from";
  case LemmaId::foca:
    return "foca";
  case LemmaId::meta:
    return "meta";
  case LemmaId::bbb:
    return "bbb";
  }
  return "unknown";
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
  case Outcome::holds:
    return "holds";
  case Outcome::fails:
    return "fails";
  case Outcome::hypothesis_not_satisfied:
    return "hypothesis_not_satisfied";
  }
  return "unknown";
}

namespace {

constexpr const char *kDefectNote =
    "a proven statement failed on admissible input; this is an implementation defect";

class Stopwatch {
public:
  double elapsed_ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void mark_failed(LemmaReport &r) {
  r.outcome = Outcome::fails;
  r.note = kDefectNote;
}

const Permutation *first_difference(const ElementSet &a, const ElementSet &b) {
  for (const auto &x : a)
    if (!b.contains(x))
      return &x;
  for (const auto &x : b)
    if (!a.contains(x))
      return &x;
  return nullptr;
}

// First element of one group missing from the other, when they differ.
std::optional<Permutation> group_difference(const PermGroup &a, const PermGroup &b,
                                            std::uint64_t cap) {
  if (same_group(a, b))
    return std::nullopt;
  for (const auto &x : a.elements(cap))
    if (!b.contains(x))
      return x;
  for (const auto &x : b.elements(cap))
    if (!a.contains(x))
      return x;
  return std::nullopt;
}

void require_normal(const PermGroup &g, const PermGroup &n, const char *name) {
  if (!is_normal(g, n))
    throw NotNormal(std::string(name) + " is not a normal subgroup");
}

void require_p_elements(const ElementSet &x, std::uint64_t p) {
  for (const auto &y : x)
    if (!is_power_of(y.order(), p))
      throw NotPElementSet("element " + y.to_string() + " is not a " + std::to_string(p) +
                           "-element");
}

void require_prime_divisor(const PermGroup &g, std::uint64_t p) {
  if (!is_prime(p) || g.order() % p != 0)
    throw NotPrimeDivisor(p, g.order());
}

ElementSet coset_product(const ElementSet &x, const PermGroup &n, std::uint64_t cap) {
  if (x.empty())
    return ElementSet();
  return product_set(x, n.elements(cap));
}

PermGroup generated_by(std::size_t degree, const ElementSet &a, const ElementSet &b) {
  std::vector<Permutation> gens(a.begin(), a.end());
  gens.insert(gens.end(), b.begin(), b.end());
  return subgroup_generated(degree, gens);
}

} // namespace

LemmaReport evaluate_intersection(const PermGroup &n, const PermGroup &p, const ElementSet &x,
                                  std::uint64_t cap) {
  Stopwatch clock;
  LemmaReport r;
  r.lemma = LemmaId::intersection;
  r.instances_checked = 1;

  const ElementSet &p_elems = p.elements(cap);
  ElementSet lhs = coset_product(x, n, cap).set_intersection(coset_product(p_elems, n, cap));
  ElementSet rhs = coset_product(x.set_intersection(p_elems), n, cap);
  if (const Permutation *z = first_difference(lhs, rhs)) {
    mark_failed(r);
    LemmaWitness w;
    w.description = "element lies in exactly one of XN n PN and (X n P)N";
    w.elements.emplace("z", *z);
    w.groups.emplace("N", n.generators());
    w.groups.emplace("P", p.generators());
    w.sets.emplace("X", x.elements());
    r.witness = std::move(w);
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

LemmaReport evaluate_from(const PermGroup &l, const PermGroup &n, const PermGroup &p,
                          const ElementSet &x, std::uint64_t cap) {
  Stopwatch clock;
  LemmaReport r;
  r.lemma = LemmaId::from;
  r.instances_checked = 1;

  PermGroup lhs = intersection(p, l, cap);
  ElementSet p_x = x.filter([&](const Permutation &y) { return p.contains(y); });
  PermGroup rhs = generated_by(p.degree(), p_x, intersection(p, n, cap).elements(cap));
  if (auto z = group_difference(lhs, rhs, cap)) {
    mark_failed(r);
    LemmaWitness w;
    w.description = "element lies in exactly one of P n L and <P n X, P n N>";
    w.elements.emplace("z", *z);
    w.groups.emplace("L", l.generators());
    w.groups.emplace("N", n.generators());
    w.groups.emplace("P", p.generators());
    w.sets.emplace("X", x.elements());
    r.witness = std::move(w);
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

LemmaReport check_intersection_lemma(const PermGroup &g, const PermGroup &n, std::uint64_t p,
                                     const ElementSet &x, std::uint64_t cap) {
  require_normal(g, n, "N");
  require_prime_divisor(g, p);
  require_p_elements(x, p);
  LemmaReport r;
  if (!is_conjugation_closed(x, g.generators())) {
    r.lemma = LemmaId::intersection;
    r.outcome = Outcome::hypothesis_not_satisfied;
    r.note = "X is not a normal subset";
  } else {
    r = evaluate_intersection(n, sylow_subgroup(g, p, cap), x, cap);
  }
  r.parameters["p"] = std::to_string(p);
  r.parameters["N_order"] = std::to_string(n.order());
  r.parameters["X_size"] = std::to_string(x.size());
  return r;
}

LemmaReport check_from_lemma(const PermGroup &g, const PermGroup &n, const PermGroup &l,
                             std::uint64_t p, const ElementSet &x, std::uint64_t cap) {
  require_normal(g, n, "N");
  require_normal(g, l, "L");
  if (!is_subgroup(n, l))
    throw NotNormal("N is not contained in L");
  require_prime_divisor(g, p);
  require_p_elements(x, p);

  Stopwatch clock;
  LemmaReport r;
  r.lemma = LemmaId::from;
  r.parameters["p"] = std::to_string(p);
  r.parameters["N_order"] = std::to_string(n.order());
  r.parameters["L_order"] = std::to_string(l.order());
  r.parameters["X_size"] = std::to_string(x.size());

  if (!is_conjugation_closed(x, g.generators())) {
    r.outcome = Outcome::hypothesis_not_satisfied;
    r.note = "X is not a normal subset";
    return r;
  }

  PermGroup sylow = sylow_subgroup(g, p, cap);
  Quotient q = quotient(g, n, cap);
  PermGroup p_bar = q.image(sylow);
  PermGroup l_bar = q.image(l);
  ElementSet x_bar = q.image(x);
  ElementSet px_bar = x_bar.filter([&](const Permutation &y) { return p_bar.contains(y); });
  if (!same_group(intersection(p_bar, l_bar, cap), subgroup_generated(q.index(), px_bar))) {
    r.outcome = Outcome::hypothesis_not_satisfied;
    r.note = "quotient hypothesis fails modulo N";
    r.elapsed_ms = clock.elapsed_ms();
    return r;
  }

  LemmaReport conclusion = evaluate_from(l, n, sylow, x, cap);
  r.outcome = conclusion.outcome;
  r.witness = std::move(conclusion.witness);
  r.note = conclusion.note;
  r.instances_checked = 1;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

LemmaReport check_foca(const PermGroup &g, std::size_t i, std::uint64_t p, std::uint64_t cap,
                       const XcloTrace *trace) {
  if (!is_soluble(g))
    throw NotSoluble();
  require_prime_divisor(g, p);

  Stopwatch clock;
  LemmaReport r;
  r.lemma = LemmaId::foca;
  r.parameters["i"] = std::to_string(i);
  r.parameters["p"] = std::to_string(p);
  r.instances_checked = 1;

  PermGroup sylow = sylow_subgroup(g, p, cap);
  PermGroup derived = derived_series(g).term(i);
  DeltaValueSet d = delta_values(g, i, cap);
  ElementSet in_p = d.values.filter([&](const Permutation &y) { return sylow.contains(y); });
  PermGroup lhs = subgroup_generated(g.degree(), in_p);
  PermGroup rhs = intersection(sylow, derived, cap);
  r.parameters["P_cap_Gi_order"] = std::to_string(rhs.order());

  if (auto z = group_difference(lhs, rhs, cap)) {
    mark_failed(r);
    LemmaWitness w;
    w.description = "element lies in exactly one of <D n P> and P n G^(i)";
    w.elements.emplace("z", *z);
    w.groups.emplace("P", sylow.generators());
    w.groups.emplace("Gi", derived.generators());
    w.sets.emplace("D", d.values.elements());
    r.witness = std::move(w);
  }

  if (trace != nullptr) {
    const XcloDepth &depth =
        trace->per_depth[std::min(i, trace->per_depth.size() - 1)];
    PermGroup from_x = subgroup_generated(g.degree(), depth.values);
    r.details["derived_generated_by_X_i"] = same_group(from_x, derived);

    auto it = depth.p_values.find(p);
    ElementSet y_i = it == depth.p_values.end() || it->second.empty()
                         ? ElementSet({g.identity()})
                         : conjugation_closure(g, it->second);
    ElementSet p_y = y_i.filter([&](const Permutation &y) { return sylow.contains(y); });
    r.details["generated_by_P_cap_Y_i"] =
        same_group(subgroup_generated(g.degree(), p_y), rhs);
    for (const auto &[name, ok] : r.details)
      if (!ok)
        mark_failed(r);
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

LemmaReport check_meta(const PermGroup &g, std::uint64_t p, std::uint64_t cap) {
  if (!is_metanilpotent(g))
    throw NotMetanilpotent();
  require_prime_divisor(g, p);

  Stopwatch clock;
  LemmaReport r;
  r.lemma = LemmaId::meta;
  r.parameters["p"] = std::to_string(p);

  PermGroup fitting = fitting_subgroup(g, cap);
  PermGroup core = p_prime_core(fitting, p, cap);
  r.parameters["F_order"] = std::to_string(fitting.order());
  r.parameters["Opprime_F_order"] = std::to_string(core.order());

  for (const auto &x : p_elements(g, p, cap)) {
    bool centralizes = std::all_of(core.generators().begin(), core.generators().end(),
                                   [&](const Permutation &y) { return x * y == y * x; });
    if (!centralizes)
      continue;
    ++r.instances_checked;
    if (!fitting.contains(x)) {
      mark_failed(r);
      LemmaWitness w;
      w.description = "p-element centralizing O_p'(F(G)) outside F(G)";
      w.elements.emplace("x", x);
      w.groups.emplace("F", fitting.generators());
      w.groups.emplace("O", core.generators());
      r.witness = std::move(w);
      break;
    }
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

std::vector<PermGroup> bbb_subgroup_family(const PermGroup &g, std::uint64_t cap) {
  std::set<std::vector<Permutation>> seen;
  std::vector<PermGroup> family;
  auto add = [&](const PermGroup &h) {
    if (seen.insert(h.elements(cap).elements()).second)
      family.push_back(h);
  };

  for (const auto &y : g.elements(cap))
    add(subgroup_generated(g.degree(), std::vector<Permutation>{y}));

  for (const auto &m : normal_subgroups(g, cap)) {
    for (std::uint64_t q : prime_divisors(m.order())) {
      PermGroup sylow = sylow_subgroup(m, q, cap);
      for (const auto &c : m.elements(cap))
        add(conjugate_subgroup(sylow, c));
    }
  }

  PermGroup fitting = fitting_subgroup(g, cap);
  for (std::uint64_t p : prime_divisors(g.order()))
    add(p_prime_core(fitting, p, cap));
  return family;
}

LemmaReport check_bbb(const PermGroup &g, std::size_t k, std::uint64_t cap) {
  Stopwatch clock;
  LemmaReport r;
  r.lemma = LemmaId::bbb;
  r.parameters["k"] = std::to_string(k);

  DeltaValueSet d = delta_values(g, k, cap);
  CriterionOptions options;
  options.cap = cap;
  if (!coprime_product_criterion(g, d, options).holds) {
    r.outcome = Outcome::hypothesis_not_satisfied;
    r.note = "delta_k-values violate the coprime product condition";
    r.elapsed_ms = clock.elapsed_ms();
    return r;
  }

  const ElementSet &all = g.elements(cap);
  bool values_ok = true;
  bool triple_trivial = true;
  bool conjugate_found = true;

  std::vector<PermGroup> family = bbb_subgroup_family(g, cap);
  r.parameters["family_size"] = std::to_string(family.size());

  for (const auto &n : family) {
    std::uint64_t order_n = n.order();
    for (const auto &x : d.values) {
      if (x.is_identity() || gcd_u64(order_n, x.order()) != 1 || !normalizes(x, n))
        continue;
      ++r.instances_checked;
      Permutation x_inv = x.inverse();
      for (const auto &y : n.elements(cap)) {
        Permutation yx = commutator(y, x);
        Permutation triple = commutator(yx, x);
        // [y, x, x] = [x^{-y}, x]^x is again a delta_k-value.
        if (!d.values.contains(triple))
          values_ok = false;
        if (!triple.is_identity())
          triple_trivial = false;
        // [y, x, x] x^{-1} is conjugate to x^{-1}; [y, x] is the expected
        // conjugator, the scan covers the general case.
        Permutation target = triple * x_inv;
        bool found = conjugate(x_inv, yx) == target;
        for (std::size_t c = 0; !found && c < all.size(); ++c)
          found = conjugate(x_inv, all[c]) == target;
        if (!found)
          conjugate_found = false;

        if (!yx.is_identity() && r.outcome == Outcome::holds) {
          mark_failed(r);
          LemmaWitness w;
          w.description = "x normalizes N, gcd(|N|, |x|) = 1, yet [y, x] != 1";
          w.elements.emplace("x", x);
          w.elements.emplace("y", y);
          w.groups.emplace("N", n.generators());
          r.witness = std::move(w);
        }
      }
    }
  }
  r.details["triple_commutator_is_value"] = values_ok;
  r.details["triple_commutator_trivial"] = triple_trivial;
  r.details["conjugate_of_x_inverse"] = conjugate_found;
  if (!values_ok || !triple_trivial || !conjugate_found)
    mark_failed(r);
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

ElementSet p_power_delta_values(const PermGroup &g, std::size_t i, std::uint64_t p,
                                std::uint64_t cap) {
  ElementSet out = delta_values(g, i, cap).values.filter(
      [p](const Permutation &y) { return is_power_of(y.order(), p); });
  out.conj_closed = true;
  return out;
}

std::vector<LemmaReport> check_normal_subset_lemmas(const PermGroup &g, std::size_t max_depth,
                                                    std::uint64_t cap) {
  Stopwatch clock;
  LemmaReport inter;
  inter.lemma = LemmaId::intersection;
  LemmaReport from;
  from.lemma = LemmaId::from;
  std::uint64_t inadmissible = 0;

  std::vector<PermGroup> normals = normal_subgroups(g, cap);
  for (std::uint64_t p : prime_divisors(g.order())) {
    for (std::size_t i = 0; i <= max_depth; ++i) {
      ElementSet x = p_power_delta_values(g, i, p, cap);
      for (const auto &n : normals) {
        LemmaReport one = check_intersection_lemma(g, n, p, x, cap);
        inter.instances_checked += one.instances_checked;
        if (!one.holds() && inter.holds()) {
          inter.outcome = one.outcome;
          inter.witness = one.witness;
          inter.note = one.note;
          inter.parameters = one.parameters;
          inter.parameters["i"] = std::to_string(i);
        }
        for (const auto &l : normals) {
          if (!is_subgroup(n, l))
            continue;
          LemmaReport two = check_from_lemma(g, n, l, p, x, cap);
          if (two.outcome == Outcome::hypothesis_not_satisfied) {
            ++inadmissible;
            continue;
          }
          from.instances_checked += two.instances_checked;
          if (!two.holds() && from.holds()) {
            from.outcome = two.outcome;
            from.witness = two.witness;
            from.note = two.note;
            from.parameters = two.parameters;
            from.parameters["i"] = std::to_string(i);
          }
        }
      }
    }
  }
  from.details["has_admissible_instances"] = from.instances_checked > 0;
  from.parameters["inadmissible_instances"] = std::to_string(inadmissible);
  inter.elapsed_ms = from.elapsed_ms = clock.elapsed_ms();
  return {inter, from};
}

// ---------------------------------------------------------------------------
// Witness replay from raw permutations.

namespace {

PermGroup fresh_group(const std::vector<Permutation> &gens) {
  return PermGroup(gens.front().degree(), gens);
}

bool in_coset_product(const Permutation &z, const std::vector<Permutation> &x,
                      const PermGroup &n) {
  return std::any_of(x.begin(), x.end(),
                     [&](const Permutation &y) { return n.contains(y.inverse() * z); });
}

} // namespace

bool replay_witness(const LemmaReport &report) {
  if (report.outcome != Outcome::fails || !report.witness)
    return false;
  const LemmaWitness &w = *report.witness;
  try {
    switch (report.lemma) {
    case LemmaId::intersection: {
      const Permutation &z = w.elements.at("z");
      PermGroup n = fresh_group(w.groups.at("N"));
      PermGroup p = fresh_group(w.groups.at("P"));
      const auto &x = w.sets.at("X");
      const ElementSet &n_elems = n.elements();
      bool in_pn = std::any_of(n_elems.begin(), n_elems.end(),
                               [&](const Permutation &m) { return p.contains(z * m.inverse()); });
      bool lhs = in_coset_product(z, x, n) && in_pn;
      std::vector<Permutation> x_in_p;
      std::copy_if(x.begin(), x.end(), std::back_inserter(x_in_p),
                   [&](const Permutation &y) { return p.contains(y); });
      bool rhs = in_coset_product(z, x_in_p, n);
      return lhs != rhs;
    }
    case LemmaId::from: {
      const Permutation &z = w.elements.at("z");
      PermGroup l = fresh_group(w.groups.at("L"));
      PermGroup n = fresh_group(w.groups.at("N"));
      PermGroup p = fresh_group(w.groups.at("P"));
      std::vector<Permutation> gens;
      for (const auto &y : w.sets.at("X"))
        if (p.contains(y))
          gens.push_back(y);
      for (const auto &y : n.elements())
        if (p.contains(y))
          gens.push_back(y);
      PermGroup rhs = subgroup_generated(z.degree(), gens);
      bool lhs = p.contains(z) && l.contains(z);
      return lhs != rhs.contains(z);
    }
    case LemmaId::foca: {
      const Permutation &z = w.elements.at("z");
      PermGroup p = fresh_group(w.groups.at("P"));
      PermGroup gi = fresh_group(w.groups.at("Gi"));
      std::vector<Permutation> gens;
      for (const auto &y : w.sets.at("D"))
        if (p.contains(y))
          gens.push_back(y);
      PermGroup lhs = subgroup_generated(z.degree(), gens);
      return lhs.contains(z) != (p.contains(z) && gi.contains(z));
    }
    case LemmaId::meta: {
      const Permutation &x = w.elements.at("x");
      PermGroup f = fresh_group(w.groups.at("F"));
      const auto &o = w.groups.at("O");
      std::uint64_t p = std::stoull(report.parameters.at("p"));
      bool centralizes = std::all_of(o.begin(), o.end(),
                                     [&](const Permutation &y) { return x * y == y * x; });
      return is_power_of(x.order(), p) && centralizes && !f.contains(x);
    }
    case LemmaId::bbb: {
      const Permutation &x = w.elements.at("x");
      const Permutation &y = w.elements.at("y");
      PermGroup n = fresh_group(w.groups.at("N"));
      return normalizes(x, n) && gcd_u64(n.order(), x.order()) == 1 && n.contains(y) &&
             !commutator(y, x).is_identity();
    }
    }
  } catch (const std::out_of_range &) {
    return false;
  }
  return false;
}

} // namespace commnil

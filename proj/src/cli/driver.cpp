#include "commnil/driver.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "commnil/corpus.hpp"
#include "commnil/criterion.hpp"
#include "commnil/errors.hpp"
#include "commnil/report.hpp"
#include "commnil/structure.hpp"
#include "commnil/verification.hpp"
#include "commnil/words.hpp"

namespace commnil {

using Json = nlohmann::json;

namespace {

struct GroupOutcome {
  Json results = Json::array();
  Json extra = Json::object();
  bool failed = false;
  std::string summary;
  std::vector<std::string> alerts;
};

using GroupJob = std::function<void(const LoadedGroup &, GroupOutcome &)>;

std::vector<LoadedGroup> resolve_groups(const RunOptions &options) {
  std::vector<LoadedGroup> out;
  if (!options.groups.empty()) {
    for (const auto &name : options.groups)
      out.push_back(load_group(name));
  } else {
    for (const auto &d : select_builtins(options.filter))
      out.push_back(load_group(d));
  }
  return out;
}

RunResult run_batch(const std::string &command, const RunOptions &options, const GroupJob &job) {
  std::vector<LoadedGroup> groups = resolve_groups(options);
  std::vector<GroupOutcome> outcomes(groups.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < groups.size(); i = next++) {
      try {
        job(groups[i], outcomes[i]);
      } catch (const std::exception &e) {
        outcomes[i].failed = true;
        outcomes[i].extra["error"] = e.what();
        outcomes[i].alerts.push_back(groups[i].descriptor.id + ": error: " + e.what());
      }
    }
  };
  std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(1, groups.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();

  RunResult run;
  std::vector<GroupDescriptor> descriptors;
  Json entries = Json::array();
  std::size_t failures = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto &g = groups[i];
    descriptors.push_back(g.descriptor);
    Json entry = outcomes[i].extra;
    entry["id"] = g.descriptor.id;
    entry["source"] = g.descriptor.source;
    entry["degree"] = g.descriptor.degree;
    entry["order"] = g.group.order();
    entry["results"] = outcomes[i].results;
    entry["ok"] = !outcomes[i].failed;
    entries.push_back(entry);
    if (outcomes[i].failed)
      ++failures;
    run.summary.push_back(g.descriptor.id + ": " +
                          (outcomes[i].summary.empty() ? (outcomes[i].failed ? "FAILED" : "ok")
                                                       : outcomes[i].summary));
    run.alerts.insert(run.alerts.end(), outcomes[i].alerts.begin(), outcomes[i].alerts.end());
  }

  Json flags;
  flags["k"] = options.ks;
  flags["kind"] = to_string(options.kind);
  flags["cap"] = options.cap;
  flags["seed"] = options.seed;
  flags["filter"] = options.filter;
  flags["groups"] = options.groups;
  flags["strict"] = options.strict;
  flags["samples"] = options.samples;

  run.report["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  run.report["command"] = command;
  run.report["corpus_hash"] = corpus_hash(descriptors);
  run.report["flags"] = flags;
  run.report["seeds"] = Json::array({options.seed});
  run.report["groups"] = entries;
  run.report["aggregate"] = {{"groups", groups.size()},
                             {"failures", failures},
                             {"consistent", failures == 0}};
  run.exit_code = failures == 0 ? kExitOk : kExitInconsistent;
  return run;
}

CriterionOptions criterion_options(const RunOptions &options) {
  CriterionOptions c;
  c.cap = options.cap;
  return c;
}

bool strict_failure(const RunOptions &options, const LemmaReport &r) {
  return options.strict && r.outcome == Outcome::hypothesis_not_satisfied;
}

} // namespace

RunResult cmd_theorem(const RunOptions &options) {
  RunResult run = run_batch("theorem", options, [&](const LoadedGroup &lg, GroupOutcome &out) {
    const PermGroup &g = lg.group;
    bool soluble = is_soluble(g);
    out.extra["soluble"] = soluble;
    std::string verdicts;
    for (std::size_t k : options.ks) {
      Json entry;
      entry["k"] = k;
      if (options.kind == WordKind::gamma) {
        if (k == 0)
          throw GroupError("gamma_k needs k >= 1");
        TheoremCheck check = gamma_theorem_check(g, k, criterion_options(options));
        entry["mode"] = "gamma";
        entry["check"] = to_json(check);
        if (!check.consistent) {
          out.failed = true;
          out.alerts.push_back(lg.descriptor.id + ": gamma criterion inconsistent at k=" +
                               std::to_string(k));
        }
        verdicts += check.report.holds ? "H" : "F";
      } else if (soluble) {
        TheoremCheck check = theorem_check(g, k, criterion_options(options));
        entry["mode"] = "theorem";
        entry["check"] = to_json(check);
        if (!check.consistent) {
          out.failed = true;
          out.alerts.push_back(lg.descriptor.id + ": criterion inconsistent with nilpotency at k=" +
                               std::to_string(k));
        }
        verdicts += check.report.holds ? "H" : "F";
      } else {
        ProbeReport probe = probe_insoluble(g, k, criterion_options(options));
        entry["mode"] = "probe";
        entry["probe"] = to_json(probe);
        if (probe.verbal_nilpotent && !probe.report.holds) {
          out.failed = true;
          out.alerts.push_back(lg.descriptor.id + ": necessity violated at k=" + std::to_string(k));
        }
        if (probe.is_candidate_counterexample)
          out.alerts.push_back(lg.descriptor.id + ": CANDIDATE COUNTEREXAMPLE at k=" +
                               std::to_string(k));
        verdicts += probe.report.holds ? "h" : "f";
      }
      out.results.push_back(entry);
    }
    out.summary = std::string(out.failed ? "INCONSISTENT" : "consistent") + " [" + verdicts + "]";
  });
  return run;
}

RunResult cmd_focal(const RunOptions &options) {
  return run_batch("focal", options, [&](const LoadedGroup &lg, GroupOutcome &out) {
    const PermGroup &g = lg.group;
    if (!is_soluble(g)) {
      out.extra["skipped"] = "insoluble";
      out.summary = "skipped (insoluble)";
      return;
    }
    XcloTrace trace = construct_xclo(g, options.cap, options.seed);
    std::size_t checked = 0;
    for (std::uint64_t p : prime_divisors(g.order())) {
      for (std::size_t i : options.ks) {
        LemmaReport r = check_foca(g, i, p, options.cap, &trace);
        r.group_id = lg.descriptor.id;
        out.results.push_back(to_json(r, options.timing));
        ++checked;
        if (!r.holds()) {
          out.failed = true;
          out.alerts.push_back(lg.descriptor.id + ": focal generation fails for p=" +
                               std::to_string(p) + " i=" + std::to_string(i));
        }
      }
    }
    out.summary = (out.failed ? "FAILED " : "holds ") + std::to_string(checked) + " checks";
  });
}

RunResult cmd_lemmas(const RunOptions &options) {
  return run_batch("lemmas", options, [&](const LoadedGroup &lg, GroupOutcome &out) {
    const PermGroup &g = lg.group;
    std::vector<LemmaReport> reports;
    std::size_t max_depth = options.ks.empty() ? 0 : *std::max_element(options.ks.begin(), options.ks.end());
    for (auto &r : check_normal_subset_lemmas(g, max_depth, options.cap))
      reports.push_back(std::move(r));

    if (is_metanilpotent(g)) {
      for (std::uint64_t p : prime_divisors(g.order()))
        reports.push_back(check_meta(g, p, options.cap));
    } else {
      LemmaReport r;
      r.lemma = LemmaId::meta;
      r.outcome = Outcome::hypothesis_not_satisfied;
      r.note = "group is not metanilpotent";
      reports.push_back(r);
    }
    for (std::size_t k : options.ks)
      reports.push_back(check_bbb(g, k, options.cap));

    std::size_t held = 0;
    std::size_t skipped = 0;
    for (auto &r : reports) {
      r.group_id = lg.descriptor.id;
      out.results.push_back(to_json(r, options.timing));
      if (r.outcome == Outcome::holds)
        ++held;
      else if (r.outcome == Outcome::hypothesis_not_satisfied)
        ++skipped;
      if (r.outcome == Outcome::fails || strict_failure(options, r)) {
        out.failed = true;
        out.alerts.push_back(lg.descriptor.id + ": lemma " + to_string(r.lemma) + " " +
                             to_string(r.outcome));
      }
    }
    out.summary = std::to_string(held) + " hold, " + std::to_string(skipped) +
                  " inadmissible" + (out.failed ? ", FAILED" : "");
  });
}

RunResult cmd_xclo(const RunOptions &options) {
  return run_batch("xclo", options, [&](const LoadedGroup &lg, GroupOutcome &out) {
    const PermGroup &g = lg.group;
    std::string head;
    if (is_soluble(g)) {
      XcloTrace trace = construct_xclo(g, options.cap, options.seed);
      out.extra["xclo"] = to_json(trace);
      derived_from_closed_set(g, trace.x);
      std::string orders;
      for (auto o : trace.normalizer_orders())
        orders += (orders.empty() ? "" : ",") + std::to_string(o);
      head = "h=" + std::to_string(trace.height) + " |T_i|=(" + orders + ") |X|=" +
             std::to_string(trace.x.size());
    } else {
      out.extra["xclo"] = nullptr;
      head = "insoluble, no xclo";
    }

    // Commutators of closed generating sets give G' in every finite group.
    std::size_t failures = 0;
    Rng rng(options.seed);
    for (std::size_t s = 0; s < options.samples; ++s) {
      ElementSet x = random_commutator_closed_generating_set(g, rng, options.cap);
      try {
        derived_from_closed_set(g, x);
      } catch (const GroupError &) {
        ++failures;
      }
    }
    out.extra["glav"] = {{"samples", options.samples},
                         {"failures", failures},
                         {"derived_order", derived_subgroup(g).order()}};
    if (failures > 0) {
      out.failed = true;
      out.alerts.push_back(lg.descriptor.id + ": commutators of a closed generating set miss G'");
    }
    out.summary = head + " glav " + std::to_string(options.samples - failures) + "/" +
                  std::to_string(options.samples) + (out.failed ? " FAILED" : "");
  });
}

RunResult cmd_probe(const RunOptions &options) {
  return run_batch("probe", options, [&](const LoadedGroup &lg, GroupOutcome &out) {
    const PermGroup &g = lg.group;
    std::size_t candidates = 0;
    for (std::size_t k : options.ks) {
      ProbeReport probe = probe_insoluble(g, k, criterion_options(options));
      Json entry = to_json(probe);
      entry["k"] = k;
      out.results.push_back(entry);
      if (probe.verbal_nilpotent && !probe.report.holds) {
        out.failed = true;
        out.alerts.push_back(lg.descriptor.id + ": necessity violated at k=" + std::to_string(k));
      }
      if (probe.is_candidate_counterexample) {
        ++candidates;
        out.alerts.push_back(lg.descriptor.id + ": CANDIDATE COUNTEREXAMPLE at k=" +
                             std::to_string(k) + " (criterion holds on an insoluble group)");
      }
    }
    out.extra["candidates"] = candidates;
    out.summary = std::to_string(candidates) + " candidate(s)";
  });
}

RunResult cmd_series(const RunOptions &options) {
  return run_batch("series", options, [&](const LoadedGroup &lg, GroupOutcome &out) {
    const PermGroup &g = lg.group;
    SeriesReport derived = derived_series(g);
    SeriesReport lower = lower_central_series(g);
    SeriesReport fitting = lower_fitting_series(g);
    out.results.push_back(to_json(derived));
    out.results.push_back(to_json(lower));
    out.results.push_back(to_json(fitting));

    Json info;
    info["nilpotent"] = lower.reaches_trivial;
    info["soluble"] = derived.reaches_trivial;
    info["metanilpotent"] = is_nilpotent(lower.last());
    info["gamma_infinity_order"] = lower.last().order();
    info["fitting_order"] = fitting_subgroup(g, options.cap).order();
    Json primes = Json::object();
    for (std::uint64_t p : prime_divisors(g.order())) {
      primes[std::to_string(p)] = {{"sylow_order", sylow_subgroup(g, p, options.cap).order()},
                                   {"p_core_order", p_core(g, p, options.cap).order()},
                                   {"p_prime_core_order", p_prime_core(g, p, options.cap).order()}};
    }
    info["primes"] = primes;
    if (derived.reaches_trivial) {
      SylowBasisOptions b;
      b.seed = options.seed;
      b.cap = options.cap;
      info["basis_normalizer_order"] = sylow_basis(g, b).normalizer.order();
    }
    out.extra["structure"] = info;

    std::string orders;
    for (auto o : derived.orders)
      orders += (orders.empty() ? "" : ",") + std::to_string(o);
    out.summary = "derived (" + orders + ")";
  });
}

RunResult run_command(const std::string &name, const RunOptions &options) {
  if (name == "theorem")
    return cmd_theorem(options);
  if (name == "focal")
    return cmd_focal(options);
  if (name == "lemmas")
    return cmd_lemmas(options);
  if (name == "xclo")
    return cmd_xclo(options);
  if (name == "probe")
    return cmd_probe(options);
  if (name == "series")
    return cmd_series(options);
  throw GroupError("unknown command \"" + name + "\"");
}

} // namespace commnil

// commnil: batch checks of commutator-word criteria over small permutation groups.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commnil/corpus.hpp"
#include "commnil/driver.hpp"
#include "commnil/errors.hpp"
#include "commnil/report.hpp"

using namespace commnil;

namespace {

// "3", "1..4" or "1,2,4".
std::vector<std::size_t> parse_k_range(const std::string &text) {
  std::vector<std::size_t> out;
  auto number = [&](const std::string &s) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &pos);
    } catch (const std::exception &) {
      pos = 0;
    }
    if (pos == 0 || pos != s.size())
      throw CLI::ValidationError("--k", "bad value \"" + text + "\"");
    return static_cast<std::size_t>(v);
  };
  if (auto dots = text.find(".."); dots != std::string::npos) {
    std::size_t lo = number(text.substr(0, dots));
    std::size_t hi = number(text.substr(dots + 2));
    if (lo > hi)
      throw CLI::ValidationError("--k", "empty range \"" + text + "\"");
    for (std::size_t k = lo; k <= hi; ++k)
      out.push_back(k);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos)
      comma = text.size();
    out.push_back(number(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

struct Flags {
  RunOptions options;
  std::string k_text = "1..3";
  std::string kind = "delta";
  std::string json_path;
  bool quiet = false;
};

void add_run_flags(CLI::App *sub, Flags &f, const std::string &default_filter) {
  f.options.filter = default_filter;
  sub->add_option("--k", f.k_text, "word depths: N, A..B or A,B,C")->capture_default_str();
  sub->add_option("--kind", f.kind, "value set family")
      ->check(CLI::IsMember({"delta", "gamma"}))
      ->capture_default_str();
  sub->add_option("--cap", f.options.cap, "element enumeration cap")->capture_default_str();
  sub->add_option("--seed", f.options.seed, "seed for basis search and sampling")
      ->capture_default_str();
  sub->add_option("--filter", f.options.filter,
                  "builtin selection: all, soluble, insoluble, nilpotent or id,id,...")
      ->capture_default_str();
  sub->add_option("--group,-g", f.options.groups, "builtin id or descriptor file (repeatable)");
  sub->add_option("--json", f.json_path, "write the JSON report here ('-' for stdout)");
  sub->add_flag("--strict", f.options.strict, "inadmissible lemma instances count as failures");
  sub->add_flag("--timing", f.options.timing, "record elapsed time per check");
  sub->add_option("--jobs,-j", f.options.jobs, "worker threads")->capture_default_str();
  sub->add_option("--samples", f.options.samples, "random closed sets per group (xclo)")
      ->capture_default_str();
  sub->add_flag("--quiet,-q", f.quiet, "only print alerts");
}

int run(const std::string &command, Flags &f) {
  f.options.ks = parse_k_range(f.k_text);
  f.options.kind = f.kind == "gamma" ? WordKind::gamma : WordKind::delta;
  RunResult result = run_command(command, f.options);

  if (!f.quiet)
    for (const auto &line : result.summary)
      std::cout << line << '\n';
  for (const auto &line : result.alerts)
    std::cerr << "!! " << line << '\n';

  if (!f.json_path.empty()) {
    std::string text = result.report.dump(2) + "\n";
    if (f.json_path == "-") {
      std::cout << text;
    } else {
      std::ofstream out(f.json_path, std::ios::binary);
      if (!out)
        throw std::runtime_error("cannot write " + f.json_path);
      out << text;
    }
  }
  const auto &agg = result.report["aggregate"];
  if (!f.quiet)
    std::cout << command << ": " << agg["groups"].get<std::size_t>() << " group(s), "
              << agg["failures"].get<std::size_t>() << " failure(s)\n";
  return result.exit_code;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Commutator-word criteria on finite permutation groups"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  struct Sub {
    const char *name;
    const char *help;
    const char *filter;
  };
  const Sub subs[] = {
      {"theorem", "criterion vs nilpotency of G^(k)", "soluble"},
      {"focal", "focal generation of P cap G^(i) by delta-values", "soluble"},
      {"lemmas", "normal-subset, metanilpotent and bbb lemmas", "soluble"},
      {"xclo", "commutator-closed generating sets and their commutators", "soluble"},
      {"probe", "criterion on insoluble groups", "insoluble"},
      {"series", "derived, lower central and lower Fitting series", "all"},
  };
  std::vector<Flags> flags(std::size(subs));
  for (std::size_t i = 0; i < std::size(subs); ++i)
    add_run_flags(app.add_subcommand(subs[i].name, subs[i].help), flags[i], subs[i].filter);

  auto *list = app.add_subcommand("list", "list builtin groups");
  std::string list_filter = "all";
  list->add_option("--filter", list_filter)->capture_default_str();

  auto *exp = app.add_subcommand("export", "print a group as a descriptor");
  std::string export_name;
  exp->add_option("group", export_name, "builtin id or descriptor file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (std::size_t i = 0; i < std::size(subs); ++i)
      if (app.got_subcommand(subs[i].name))
        return run(subs[i].name, flags[i]);

    if (app.got_subcommand(list)) {
      for (const auto &d : select_builtins(list_filter)) {
        std::string tags;
        for (const auto &t : d.tags)
          tags += (tags.empty() ? "" : ",") + t;
        std::printf("%-10s degree %-4u order %-6llu %s\n", d.id.c_str(),
                    static_cast<unsigned>(d.degree),
                    static_cast<unsigned long long>(d.expected_order.value_or(0)), tags.c_str());
      }
      return kExitOk;
    }
    if (app.got_subcommand(exp)) {
      LoadedGroup g = load_group(export_name);
      std::cout << write_descriptor(g.descriptor) << '\n';
      return kExitOk;
    }
  } catch (const CLI::ValidationError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidPermutation &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OrderMismatch &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInconsistent;
  }
  return kExitUsage;
}

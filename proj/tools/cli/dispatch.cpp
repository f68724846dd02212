#include "dispatch.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include "commands/commands.hpp"
#include "padicmech/errors.hpp"
#include "padicmech/norm.hpp"
#include "padicmech/text.hpp"

namespace padicmech::cli {

Json text(const PadicNumber& x) { return format(x); }
Json text(const Rational& r) { return to_string(r); }
Json text(const Norm& n) { return n.to_string(); }

namespace {

void add_globals(CLI::App& app, GlobalFlags& g) {
  app.option_defaults()->always_capture_default(false);
  app.add_option("--prime", g.prime, "Prime p");
  app.add_option("--precision", g.precision, "Digits K carried by every value");
  app.add_option("--degree", g.degree, "Series truncation degree D");
  app.add_option("--preset", g.preset, "Flat key = value config file");
  app.add_option("--format", g.format, "csv or json");
  app.add_option("--out", g.out, "Write the table to this path instead of stdout");
  app.add_option("--seed", g.seed, "Seed for every sampled quantity");
}

// Every nested subcommand accepts the global flags after its own name.
void enable_fallthrough(CLI::App& app) {
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    enable_fallthrough(*sub);
  }
}

// The first bare token must name a subcommand. CLI11 would report only that
// a subcommand is missing.
std::optional<std::string> unknown_subcommand(const CLI::App& app, const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    if (a.rfind("--", 0) == 0) {
      if (a.find('=') == std::string::npos && a != "--help") ++i;  // every global flag takes a value
      continue;
    }
    if (a.rfind('-', 0) == 0) continue;
    for (const auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
      if (sub->get_name() == a) return std::nullopt;
    }
    return a;
  }
  return std::nullopt;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("p-adic numbers, analysis, mechanics, probability and quantum models", "padicmech");
  app.require_subcommand(1);
  GlobalFlags globals;
  add_globals(app, globals);
  Registry registry;
  add_core_commands(app, registry);
  add_analysis_commands(app, registry);
  add_mechanics_commands(app, registry);
  add_prob_commands(app, registry);
  add_quantum_commands(app, registry);
  enable_fallthrough(app);

  if (const auto bad = unknown_subcommand(app, args)) {
    err << "error: unknown subcommand '" << *bad << "'; expected one of arith, series, simulate, restrict, audit, prob, quantum, embed\n";
    return kUsageError;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  const auto chosen = std::find_if(registry.begin(), registry.end(), [](const Registered& r) { return r.app->parsed(); });
  if (chosen == registry.end()) {
    err << "error: a subcommand group needs one of its commands; see --help\n";
    return kUsageError;
  }

  try {
    const RunConfig cfg = resolve(globals);
    const Table table = chosen->action(cfg);
    const Format format = cfg.format.value_or(table.record ? Format::Json : Format::Csv);
    if (cfg.out) {
      std::ofstream file(*cfg.out, std::ios::binary);
      if (!file) throw InvalidArgument("cannot write '" + *cfg.out + "'");
      emit(table, format, file);
      if (!file) throw InvalidArgument("failed writing '" + *cfg.out + "'");
    } else {
      emit(table, format, out);
    }
    return kSuccess;
  } catch (const DomainViolation& e) {
    err << "domain violation: " << e.condition() << '\n' << e.what() << '\n';
    return kDomainViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace padicmech::cli

#pragma once

#include <functional>
#include <vector>

#include <CLI11.hpp>

#include "config.hpp"
#include "output.hpp"

namespace padicmech::cli {

using Action = std::function<Table(const RunConfig&)>;

/// A leaf subcommand and the action to run when it is the one selected.
/// Option storage lives in the action's captures.
struct Registered {
  CLI::App* app;
  Action action;
};

using Registry = std::vector<Registered>;

void add_core_commands(CLI::App& root, Registry& registry);       // arith, embed
void add_analysis_commands(CLI::App& root, Registry& registry);   // series
void add_mechanics_commands(CLI::App& root, Registry& registry);  // simulate, restrict, audit
void add_prob_commands(CLI::App& root, Registry& registry);       // prob detect|synth|volume
void add_quantum_commands(CLI::App& root, Registry& registry);    // quantum born|wave|...

/// Shorthand for the text forms used in every table.
Json text(const PadicNumber& x);
Json text(const Rational& r);
Json text(const Norm& n);

}  // namespace padicmech::cli

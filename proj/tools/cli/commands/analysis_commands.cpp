#include <memory>

#include "commands.hpp"
#include "padicmech/analysis/elementary.hpp"
#include "padicmech/analysis/integral.hpp"
#include "padicmech/analysis/pathology.hpp"
#include "padicmech/analysis/series_text.hpp"
#include "padicmech/errors.hpp"
#include "padicmech/quantum/wave.hpp"
#include "padicmech/text.hpp"

namespace padicmech::cli {

namespace {

using analysis::Series;

struct SeriesOptions {
  std::optional<std::string> fn, poly, at, from, to, probe, pathological;
};

// Either the full "p:D:[...]" form or a bare coefficient list over --prime.
Series parse_poly(const RunConfig& cfg, const std::string& spec) {
  if (spec.find('[') != std::string::npos) {
    auto f = analysis::parse_series(spec, cfg.precision);
    if (f.prime() != cfg.prime) throw PrimeMismatch("polynomial is over Q_" + std::to_string(f.prime()));
    return f;
  }
  return Series::polynomial(cfg.prime, cfg.precision, cfg.values(spec));
}

Series build(const RunConfig& cfg, const SeriesOptions& o) {
  if (const auto poly = cfg.pick_optional(o.poly, "poly")) return parse_poly(cfg, *poly);
  const auto fn = cfg.pick(o.fn, "fn", "exp");
  if (fn == "interference") return quantum::interference_term(cfg.prime, cfg.degree, cfg.precision);
  return analysis::elementary(analysis::parse_elementary(fn), cfg.prime, cfg.degree, cfg.precision);
}

Json optional_text(const std::optional<Rational>& r) { return r ? text(*r) : Json(); }

Table run_series(const RunConfig& cfg, const SeriesOptions& o) {
  if (const auto v = cfg.pick_optional(o.pathological, "pathological")) {
    const auto x = cfg.value(*v);
    if (!x.is_integral()) throw InvalidArgument("the pathological map is defined on Z_p");
    const auto xi = x.to_padic_int(cfg.precision);
    return record({{"x", format(xi)}, {"f", format(analysis::pathological_eval(xi))}});
  }
  const Series f = build(cfg, o);
  if (const auto v = cfg.pick_optional(o.at, "at")) {
    const auto e = f.evaluate(cfg.value(*v));
    return record({{"x", *v}, {"value", text(e.value)}, {"certified", e.certified}, {"tail_order", optional_text(e.tail_order)}});
  }
  const auto from = cfg.pick_optional(o.from, "from");
  const auto to = cfg.pick_optional(o.to, "to");
  if (from || to) {
    if (!from || !to) throw InvalidArgument("integration needs both --from and --to");
    const auto r = analysis::definite_integral(f, cfg.value(*from), cfg.value(*to), cfg.precision);
    return record({{"from", *from}, {"to", *to}, {"value", text(r.value)}, {"precision_loss", r.precision_loss},
                   {"certified", r.certified}});
  }
  if (const auto d = cfg.pick_optional(o.probe, "probe")) {
    const auto r = analysis::sup_norm_probe(f, parse_int(*d, "probe"));
    return record({{"lower", text(r.lower)}, {"upper", optional_text(r.upper)}, {"exact", r.exact},
                   {"points", r.points}});
  }
  Table t{{"n", "coeff"}, {}, false};
  for (int n = 0; n <= f.degree(); ++n) t.add({n, text(f.coeff(n))});
  return t;
}

}  // namespace

void add_analysis_commands(CLI::App& root, Registry& registry) {
  auto o = std::make_shared<SeriesOptions>();
  auto* cmd = root.add_subcommand("series", "Power series: coefficients, evaluation, integrals, probes");
  cmd->add_option("--fn", o->fn, "exp, sin, cos or interference (default exp)");
  cmd->add_option("--poly", o->poly, "Polynomial: p:D:[c_0,...] or c_0,c_1,...");
  cmd->add_option("--at", o->at, "Evaluate at this point");
  cmd->add_option("--from", o->from, "Lower integration limit");
  cmd->add_option("--to", o->to, "Upper integration limit");
  cmd->add_option("--probe", o->probe, "Sup-norm probe over residues mod p^depth");
  cmd->add_option("--pathological", o->pathological, "Evaluate the digit-doubling map at a point of Z_p");
  registry.push_back({cmd, [o](const RunConfig& cfg) { return run_series(cfg, *o); }});
}

}  // namespace padicmech::cli

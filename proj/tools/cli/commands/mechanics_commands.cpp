#include <memory>

#include "commands.hpp"
#include "padicmech/analysis/series_text.hpp"
#include "padicmech/errors.hpp"
#include "padicmech/mechanics/audit.hpp"
#include "padicmech/mechanics/constraints.hpp"
#include "padicmech/mechanics/flow.hpp"
#include "padicmech/mechanics/potential.hpp"
#include "padicmech/mechanics/restriction.hpp"
#include "padicmech/text.hpp"

namespace padicmech::cli {

namespace {

using namespace mechanics;

// A system described by preset keys:
//   kind = free | hooke_exp | hooke_trig     solver = closed | taylor
//   masses, q0, p0 (lists), beta, t0
//   potential = democratic | hierarchical, phi, weights, background (taylor only)
struct System {
  HamiltonianSpec h;
  TrajectorySeries traj;
};

std::string require(const RunConfig& cfg, const std::string& key) {
  const auto it = cfg.preset.find(key);
  if (it == cfg.preset.end()) throw InvalidArgument("system description needs '" + key + "' (set it in --preset)");
  return it->second;
}

std::string key_or(const RunConfig& cfg, const std::string& key, const std::string& fallback) {
  return cfg.pick(std::nullopt, key, fallback);
}

analysis::Series parse_phi(const RunConfig& cfg, const std::string& spec) {
  if (spec.find('[') != std::string::npos) return analysis::parse_series(spec, cfg.precision);
  return analysis::Series::polynomial(cfg.prime, cfg.precision, cfg.values(spec));
}

// The closed flow shares one mass, so each coordinate is solved on its own
// and the results are stacked.
TrajectorySeries closed_stack(FlowKind kind, const std::vector<PadicNumber>& masses, const PadicNumber& beta,
                              const PhaseState& z0, int degree) {
  auto out = closed_flow_series({kind, masses.front(), beta}, PhaseState{{z0.q[0]}, {z0.p[0]}, z0.t}, degree);
  for (std::size_t j = 1; j < masses.size(); ++j) {
    const auto part = closed_flow_series({kind, masses[j], beta}, PhaseState{{z0.q[j]}, {z0.p[j]}, z0.t}, degree);
    out.q.push_back(part.q.front());
    out.p.push_back(part.p.front());
  }
  return out;
}

System build_system(const RunConfig& cfg) {
  const auto masses = cfg.values(require(cfg, "masses"));
  const auto q0 = cfg.values(require(cfg, "q0"));
  const auto p0 = cfg.values(require(cfg, "p0"));
  if (masses.size() != q0.size() || masses.size() != p0.size()) {
    throw DimensionMismatch("masses, q0 and p0 must have the same length");
  }
  const PhaseState z0{q0, p0, cfg.value(key_or(cfg, "t0", "0"))};
  const auto kind = parse_flow_kind(key_or(cfg, "kind", "free"));
  const auto beta = cfg.value(key_or(cfg, "beta", "0"));
  const auto solver = key_or(cfg, "solver", "closed");

  if (const auto it = cfg.preset.find("potential"); it != cfg.preset.end()) {
    if (solver != "taylor") throw InvalidArgument("a custom potential needs solver = taylor");
    const auto phi = parse_phi(cfg, require(cfg, "phi"));
    const auto weights = cfg.values(key_or(cfg, "weights", ""));
    const auto background_text = cfg.pick_optional(std::nullopt, "background");
    const auto background = background_text ? std::optional(cfg.value(*background_text)) : std::nullopt;
    const auto built = potential_build(parse_potential_kind(it->second), phi, static_cast<int>(masses.size()), weights,
                                       background ? &*background : nullptr);
    auto h = HamiltonianSpec::with_masses(masses, built.potential);
    return {h, taylor_integrate(h, z0, cfg.degree)};
  }

  auto h = HamiltonianSpec::standard(kind, masses, beta);
  if (solver == "taylor") return {h, taylor_integrate(h, z0, cfg.degree)};
  if (solver != "closed") throw InvalidArgument("unknown solver '" + solver + "' (expected closed or taylor)");
  return {h, closed_stack(kind, masses, beta, z0, cfg.degree)};
}

// constraint = sphere | leader | rigid with constraint_center, constraint_radius,
// constraint_leader, constraint_radii (followers in order, or pairs i < j).
std::optional<std::vector<ConstraintResidual>> constraint_check(const RunConfig& cfg, const PhaseState& z) {
  const auto it = cfg.preset.find("constraint");
  if (it == cfg.preset.end()) return std::nullopt;
  const auto radii = [&] {
    std::vector<Rational> r;
    for (const auto& s : split_list(key_or(cfg, "constraint_radii", ""))) r.push_back(parse_rational(s));
    return r;
  };
  switch (parse_constraint_kind(it->second)) {
    case ConstraintKind::Sphere:
      return check_sphere(z.q, cfg.value(key_or(cfg, "constraint_center", "0")),
                          parse_rational(require(cfg, "constraint_radius")));
    case ConstraintKind::Leader:
      return check_leader(z.q, static_cast<std::size_t>(parse_int(key_or(cfg, "constraint_leader", "0"), "leader")),
                          radii());
    case ConstraintKind::Rigid: {
      const auto flat = radii();
      const std::size_t n = z.q.size();
      if (flat.size() != n * (n - 1) / 2) throw DimensionMismatch("rigid constraint needs one radius per pair i < j");
      std::vector<std::vector<Rational>> r(n, std::vector<Rational>(n));
      std::size_t k = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) r[i][j] = flat[k++];
      }
      return check_rigid(z.q, r);
    }
  }
  return std::nullopt;
}

struct SimulateOptions {
  std::optional<std::string> times;
};

Table simulate(const RunConfig& cfg, const SimulateOptions& o) {
  const System sys = build_system(cfg);
  const std::size_t n = sys.traj.dimension();
  Table t;
  t.columns.push_back("t");
  for (std::size_t j = 1; j <= n; ++j) t.columns.push_back("q_" + std::to_string(j));
  for (std::size_t j = 1; j <= n; ++j) t.columns.push_back("p_" + std::to_string(j));
  t.columns.insert(t.columns.end(), {"H", "P", "certified"});
  const bool constrained = cfg.preset.contains("constraint");
  if (constrained) t.columns.insert(t.columns.end(), {"constraint_ok", "constraint_residual"});

  const auto times = cfg.pick(o.times, "times", "0");
  for (const auto& ts : split_list(times)) {
    const auto point = sys.traj.evaluate(cfg.value(ts));
    const auto& z = point.state;
    std::vector<Json> row{ts};
    for (const auto& q : z.q) row.push_back(text(q));
    for (const auto& p : z.p) row.push_back(text(p));
    PadicNumber total = PadicNumber::zero(cfg.prime);
    for (const auto& p : z.p) total += p;
    row.push_back(text(sys.h.energy(z)));
    row.push_back(text(total));
    row.push_back(point.certified);
    if (constrained) {
      const auto res = *constraint_check(cfg, z);
      bool ok = true;
      Rational worst = 0;
      for (const auto& r : res) {
        ok &= r.satisfied();
        worst = std::max(worst, r.residual);
      }
      row.push_back(ok);
      row.push_back(text(worst));
    }
    t.add(std::move(row));
  }
  return t;
}

struct RestrictOptions {
  std::optional<std::string> q, p, m, beta;
};

Table restrict_cmd(const RunConfig& cfg, const RestrictOptions& o) {
  const auto get = [&](const std::optional<std::string>& flag, const char* key) {
    const auto v = cfg.pick_optional(flag, key);
    if (!v) throw InvalidArgument(std::string("restrict needs --") + key);
    return cfg.value(*v);
  };
  // A preset describing a system supplies m through its first mass.
  std::optional<std::string> m = cfg.pick_optional(o.m, "m");
  if (!m) {
    if (const auto masses = cfg.pick_optional(std::nullopt, "masses"); masses && !split_list(*masses).empty()) {
      m = split_list(*masses).front();
    }
  }
  const auto r = restriction_check(get(o.q, "q"), get(o.p, "p"), get(m, "m"), get(o.beta, "beta"));
  return record({{"satisfied", r.satisfied}, {"margin", text(r.margin)}, {"lhs", text(r.lhs)}, {"rhs", text(r.rhs)}});
}

struct AuditOptions {
  std::optional<std::string> t0, t1;
};

Table audit(const RunConfig& cfg, const AuditOptions& o) {
  const System sys = build_system(cfg);
  const auto a = cfg.value(cfg.pick(o.t0, "audit_t0", "0"));
  const auto b = cfg.value(cfg.pick(o.t1, "audit_t1", "1"));
  const auto r = work_energy_audit(sys.h, sys.traj, a, b);
  return record({{"work", text(r.work)},
                 {"kinetic_change", text(r.kinetic_change)},
                 {"potential_change", text(r.potential_change)},
                 {"work_vs_kinetic", text(r.work_vs_kinetic)},
                 {"work_vs_potential", text(r.work_vs_potential)},
                 {"precision_loss", r.precision_loss},
                 {"certified", r.certified}});
}

}  // namespace

void add_mechanics_commands(CLI::App& root, Registry& registry) {
  auto so = std::make_shared<SimulateOptions>();
  auto* sim = root.add_subcommand("simulate", "Trajectory of a free or Hooke system at given I-times");
  sim->add_option("--t", so->times, "Comma-separated I-times (overrides the preset 'times')");
  registry.push_back({sim, [so](const RunConfig& cfg) { return simulate(cfg, *so); }});

  auto ro = std::make_shared<RestrictOptions>();
  auto* res = root.add_subcommand("restrict", "Check |q|_p |p|_p <= |m beta|_p r_p");
  res->add_option("--q", ro->q, "Position");
  res->add_option("--p", ro->p, "Momentum");
  res->add_option("--m", ro->m, "I-mass");
  res->add_option("--beta", ro->beta, "Hooke constant beta");
  registry.push_back({res, [ro](const RunConfig& cfg) { return restrict_cmd(cfg, *ro); }});

  auto ao = std::make_shared<AuditOptions>();
  auto* aud = root.add_subcommand("audit", "Work-energy audit between two I-times");
  aud->add_option("--t0", ao->t0, "Start of the path (default 0)");
  aud->add_option("--t1", ao->t1, "End of the path (default 1)");
  registry.push_back({aud, [ao](const RunConfig& cfg) { return audit(cfg, *ao); }});
}

}  // namespace padicmech::cli

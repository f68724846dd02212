#include <fstream>
#include <memory>
#include <random>

#include "commands.hpp"
#include "padicmech/errors.hpp"
#include "padicmech/quantum/hilbert.hpp"
#include "padicmech/quantum/probabilities.hpp"
#include "padicmech/quantum/spectrum.hpp"
#include "padicmech/quantum/wave.hpp"
#include "padicmech/text.hpp"

namespace padicmech::cli {

namespace {

using namespace quantum;

std::vector<GaussianRational> gaussians(const std::string& list) {
  std::vector<GaussianRational> out;
  for (const auto& s : split_list(list)) out.push_back(parse_gaussian(s));
  return out;
}

Json gaussian_array(const std::vector<GaussianRational>& zs) {
  Json a = Json::array();
  for (const auto& z : zs) a.push_back(to_string(z));
  return a;
}

Rational planck_of(const RunConfig& cfg, const std::optional<std::string>& flag) {
  const auto h = cfg.pick_optional(flag, "planck");
  return h ? parse_rational(*h) : default_planck(cfg.prime);
}

struct BornOptions {
  std::optional<std::string> coeffs, weighting;
};

Table born(const RunConfig& cfg, const BornOptions& o) {
  const auto c = cfg.pick_optional(o.coeffs, "coeffs");
  if (!c) throw InvalidArgument("quantum born needs --coeffs");
  const auto w = cfg.pick(o.weighting, "weighting", "conjugate");
  if (w != "bilinear" && w != "conjugate") throw InvalidArgument("--weighting must be bilinear or conjugate");
  const auto s = mixed_state_probabilities(gaussians(*c), w == "bilinear" ? Weighting::Bilinear : Weighting::Conjugate);
  return record({{"weights", gaussian_array(s.weights)},
                 {"normalized", s.normalized},
                 {"real_interpretable", s.real_interpretable}});
}

struct WaveOptions {
  std::optional<std::string> pp, energy, t, x, planck;
};

Table wave(const RunConfig& cfg, const WaveOptions& o) {
  const auto get = [&](const std::optional<std::string>& flag, const char* key, const char* fallback) {
    return cfg.value(cfg.pick(flag, key, fallback));
  };
  const auto w = plane_wave(get(o.pp, "pp", "1"), get(o.energy, "energy", "0"), get(o.t, "t", "0"), get(o.x, "x", "0"),
                            planck_of(cfg, o.planck), cfg.degree);
  return record({{"value", format(w.value)},
                 {"phase", text(w.phase)},
                 {"modulus_sq", text(w.value.modulus_sq())},
                 {"certified", w.certified}});
}

Table interference(const RunConfig& cfg) {
  const auto T = interference_term(cfg.prime, cfg.degree, cfg.precision);
  Table t{{"n", "coeff"}, {}, false};
  for (int n = 0; n <= T.degree(); ++n) t.add({n, text(T.coeff(n))});
  return t;
}

struct OscillatorOptions {
  std::optional<std::string> n, omega, planck, depth;
};

Table oscillator(const RunConfig& cfg, const OscillatorOptions& o) {
  const auto n = parse_integer(cfg.pick(o.n, "n", "0"));
  const auto omega = cfg.value(cfg.pick(o.omega, "omega", "1"));
  const int depth = parse_int(cfg.pick(o.depth, "depth", "6"), "depth");
  const auto s = oscillator_spectrum(n, omega, planck_of(cfg, o.planck), depth);
  Table t{{"k", "level", "energy", "distance"}, {}, false};
  t.add({0, to_string(n), text(s.energy), text(Norm::zero(cfg.prime))});
  for (std::size_t k = 0; k < s.witnesses.size(); ++k) {
    const auto& w = s.witnesses[k];
    t.add({static_cast<int>(k + 1), to_string(w.index), text(w.energy), text(w.distance)});
  }
  return t;
}

struct RebasisOptions {
  std::optional<std::string> phi, basis;
};

Table rebasis(const RunConfig& cfg, const RebasisOptions& o) {
  const auto phi = cfg.pick_optional(o.phi, "phi");
  const auto basis_text = cfg.pick_optional(o.basis, "basis");
  if (!phi || !basis_text) throw InvalidArgument("quantum rebasis needs --phi and --basis");
  std::vector<std::vector<GaussianRational>> basis;
  for (const auto& v : split_list(*basis_text, ';')) basis.push_back(gaussians(v));
  const auto r = rebasis_probabilities(gaussians(*phi), basis);
  Json weights = Json::array();
  for (const auto& w : r.weights) weights.push_back(text(w));
  return record({{"amplitudes", gaussian_array(r.amplitudes)},
                 {"weights", weights},
                 {"total", text(r.total)},
                 {"canonical_total", text(r.canonical_total)}});
}

// {"prime": p, "dim": n, "coeffs": [[re, im], ...]} with parts in the core
// text form or as rational literals.
HilbertVector read_state(const RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("prime") || !doc.contains("coeffs")) {
    throw ParseError(path + ": expected an object with prime and coeffs");
  }
  if (doc["prime"].get<std::uint64_t>() != cfg.prime) throw PrimeMismatch(path + ": state is over another prime");
  std::vector<PadicComplex> coeffs;
  for (const auto& pair : doc["coeffs"]) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError(path + ": each coefficient is [re, im]");
    const auto part = [&](const Json& v) { return cfg.value(v.is_string() ? v.get<std::string>() : v.dump()); };
    coeffs.emplace_back(part(pair[0]), part(pair[1]));
  }
  if (doc.contains("dim") && doc["dim"].get<std::size_t>() != coeffs.size()) {
    throw DimensionMismatch(path + ": dim does not match the coefficient count");
  }
  if (coeffs.empty()) throw DimensionMismatch(path + ": empty state");
  return HilbertVector(std::move(coeffs));
}

PadicNumber random_component(std::mt19937_64& rng, std::uint32_t p, int precision) {
  const int v = static_cast<int>(rng() % 4);
  std::vector<PadicInt::Digit> digits(static_cast<std::size_t>(precision));
  for (auto& d : digits) d = static_cast<PadicInt::Digit>(rng() % p);
  digits.front() = 1 + static_cast<PadicInt::Digit>(rng() % (p - 1));
  return PadicNumber::from_unit(v, PadicInt::from_digits(p, std::move(digits)));
}

struct SchwarzOptions {
  std::optional<std::string> x, y, samples, dim;
};

Table schwarz(const RunConfig& cfg, const SchwarzOptions& o) {
  require_extension(cfg.prime);
  Table t{{"index", "product", "norm_x", "norm_y", "schwarz_ok"}, {}, false};
  const auto row = [&](int i, const SchwarzReport& r) {
    t.add({i, format(r.product), text(r.norm_x), text(r.norm_y), r.schwarz_ok});
  };
  if (const auto n = cfg.pick_optional(o.samples, "samples")) {
    const int count = parse_int(*n, "samples");
    const int dim = parse_int(cfg.pick(o.dim, "dim", "3"), "dim");
    if (count < 1 || dim < 1) throw InvalidArgument("--samples and --dim must be positive");
    std::mt19937_64 rng(cfg.require_seed());
    const auto vec = [&] {
      std::vector<PadicComplex> cs;
      for (int j = 0; j < dim; ++j) {
        auto re = random_component(rng, cfg.prime, cfg.precision);
        cs.emplace_back(re, random_component(rng, cfg.prime, cfg.precision));
      }
      return HilbertVector(std::move(cs));
    };
    for (int i = 0; i < count; ++i) {
      const auto x = vec();
      row(i, inner_and_schwarz(x, vec()));
    }
    return t;
  }
  const auto xs = cfg.pick_optional(o.x, "x");
  const auto ys = cfg.pick_optional(o.y, "y");
  if (!xs || !ys) throw InvalidArgument("quantum schwarz needs --x and --y state files, or --samples");
  row(0, inner_and_schwarz(read_state(cfg, *xs), read_state(cfg, *ys)));
  return t;
}

}  // namespace

void add_quantum_commands(CLI::App& root, Registry& registry) {
  auto* group = root.add_subcommand("quantum", "p-adic Hilbert spaces, plane waves and spectra");
  group->require_subcommand(1);

  auto b = std::make_shared<BornOptions>();
  auto* born_cmd = group->add_subcommand("born", "Probabilities of a mixed state");
  born_cmd->add_option("--coeffs", b->coeffs, "Comma-separated Gaussian rationals (a, a+bi, bi)");
  born_cmd->add_option("--weighting", b->weighting, "conjugate (c conj c) or bilinear (c^2); default conjugate");
  registry.push_back({born_cmd, [b](const RunConfig& cfg) { return born(cfg, *b); }});

  auto w = std::make_shared<WaveOptions>();
  auto* wave_cmd = group->add_subcommand("wave", "Plane wave e^{i (p x - E t)/h} at one point");
  wave_cmd->add_option("--pp", w->pp, "Momentum");
  wave_cmd->add_option("--energy", w->energy, "Energy E");
  wave_cmd->add_option("--t", w->t, "I-time");
  wave_cmd->add_option("--x", w->x, "Position");
  wave_cmd->add_option("--planck", w->planck, "h_p (default 1/p)");
  registry.push_back({wave_cmd, [w](const RunConfig& cfg) { return wave(cfg, *w); }});

  auto* inter = group->add_subcommand("interference", "Coefficients of T(a) = a sin a / (1 - cos a)");
  registry.push_back({inter, [](const RunConfig& cfg) { return interference(cfg); }});

  auto osc = std::make_shared<OscillatorOptions>();
  auto* osc_cmd = group->add_subcommand("oscillator", "Level E_n and the levels n + p^k accumulating at it");
  osc_cmd->add_option("--n", osc->n, "Level index");
  osc_cmd->add_option("--omega", osc->omega, "Frequency");
  osc_cmd->add_option("--planck", osc->planck, "h_p (default 1/p)");
  osc_cmd->add_option("--depth", osc->depth, "Largest k (default 6)");
  registry.push_back({osc_cmd, [osc](const RunConfig& cfg) { return oscillator(cfg, *osc); }});

  auto r = std::make_shared<RebasisOptions>();
  auto* reb = group->add_subcommand("rebasis", "Probabilities of a state in another orthonormal basis");
  reb->add_option("--phi", r->phi, "State coefficients");
  reb->add_option("--basis", r->basis, "Basis vectors separated by ';'");
  registry.push_back({reb, [r](const RunConfig& cfg) { return rebasis(cfg, *r); }});

  auto s = std::make_shared<SchwarzOptions>();
  auto* sch = group->add_subcommand("schwarz", "Inner product and the Schwarz inequality");
  sch->add_option("--x", s->x, "State file");
  sch->add_option("--y", s->y, "State file");
  sch->add_option("--samples", s->samples, "Random pairs instead of files (needs --seed)");
  sch->add_option("--dim", s->dim, "Dimension of random states (default 3)");
  registry.push_back({sch, [s](const RunConfig& cfg) { return schwarz(cfg, *s); }});
}

}  // namespace padicmech::cli

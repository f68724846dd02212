#include <memory>
#include <random>

#include "commands.hpp"
#include "padicmech/ball.hpp"
#include "padicmech/errors.hpp"
#include "padicmech/expansion.hpp"
#include "padicmech/text.hpp"
#include "padicmech/valuation.hpp"

namespace padicmech::cli {

namespace {

struct ArithOptions {
  std::string op;
  std::optional<std::string> x, y, samples;
};

ArithOp parse_op(const std::string& op) {
  if (op == "add") return ArithOp::Add;
  if (op == "sub") return ArithOp::Sub;
  if (op == "mul") return ArithOp::Mul;
  if (op == "div") return ArithOp::Div;
  throw InvalidArgument("unknown operation '" + op + "' (expected add, sub, mul, div, metric or valuation)");
}

// Valuation in [-3, 3], K random unit digits; one draw in 16 is the exact zero.
PadicNumber random_value(std::mt19937_64& rng, std::uint32_t p, int precision) {
  if (rng() % 16 == 0) return PadicNumber::zero(p);
  const int v = static_cast<int>(rng() % 7) - 3;
  std::vector<PadicInt::Digit> digits(static_cast<std::size_t>(precision));
  for (auto& d : digits) d = static_cast<PadicInt::Digit>(rng() % p);
  digits.front() = 1 + static_cast<PadicInt::Digit>(rng() % (p - 1));
  return PadicNumber::from_unit(v, PadicInt::from_digits(p, std::move(digits)));
}

Table arith_samples(const RunConfig& cfg, int count) {
  if (count < 1) throw InvalidArgument("--samples must be positive");
  std::mt19937_64 rng(cfg.require_seed());
  Table t{{"index", "value", "round_trip"}, {}, false};
  for (int i = 0; i < count; ++i) {
    const auto x = random_value(rng, cfg.prime, cfg.precision);
    const auto s = format(x);
    t.add({i, s, parse_padic_number(s) == x});
  }
  return t;
}

Table arith(const RunConfig& cfg, const ArithOptions& o) {
  if (const auto n = cfg.pick_optional(o.samples, "samples")) return arith_samples(cfg, parse_int(*n, "samples"));
  const auto xs = cfg.pick_optional(o.x, "x");
  if (!xs) throw InvalidArgument("arith needs --x (or --samples)");
  const auto x = cfg.value(*xs);
  if (o.op == "valuation") {
    return record({{"op", o.op}, {"x", text(x)}, {"valuation", x.is_zero() ? Json("inf") : Json(x.valuation())},
                   {"norm", text(x.norm())}});
  }
  const auto ys = cfg.pick_optional(o.y, "y");
  if (!ys) throw InvalidArgument("arith --op " + o.op + " needs --y");
  const auto y = cfg.value(*ys);
  if (o.op == "metric") {
    return record({{"op", o.op}, {"x", text(x)}, {"y", text(y)}, {"result", text(metric(x, y))}});
  }
  const auto r = padicmech::arith(parse_op(o.op), x, y);
  return record({{"op", o.op},
                 {"x", text(x)},
                 {"y", text(y)},
                 {"result", text(r)},
                 {"residue", r.is_integral() && !r.is_exact_zero() ? Json(to_string(r.residue(cfg.precision))) : Json()}});
}

struct EmbedOptions {
  std::optional<std::string> ball, k, depth, archimedean, steps, m;
};

// "center:radius" with radius a power p^-e, e >= 0.
Ball parse_ball(const RunConfig& cfg, const std::string& spec) {
  const auto colon = spec.rfind(':');
  if (colon == std::string::npos) throw ParseError("--ball expects center:radius");
  const auto radius = parse_rational(spec.substr(colon + 1));
  const auto v = valuation(radius, cfg.prime);
  const int e = v.valuation ? -*v.valuation : -1;
  if (e < 0 || radius != rpow(Rational(cfg.prime), -e)) {
    throw InvalidArgument("ball radius must be p^-e with e >= 0, got " + to_string(radius));
  }
  const auto center = cfg.value(spec.substr(0, colon));
  if (!center.is_integral()) throw InvalidArgument("ball center must lie in Z_p");
  return Ball(center.to_padic_int(cfg.precision), e);
}

Table embed_ball(const RunConfig& cfg, const EmbedOptions& o, const std::string& spec) {
  const Ball ball = parse_ball(cfg, spec);
  const int e = ball.radius_exponent();
  const int depth = parse_int(cfg.pick(o.depth, "depth", std::to_string(e + 2)), "depth");
  const auto k = static_cast<std::uint32_t>(parse_u64(cfg.pick(o.k, "k", std::to_string(cfg.prime)), "k"));
  if (depth < e || depth > cfg.precision) throw InvalidArgument("--depth must lie between the radius exponent and K");
  const BigInt count = ipow(BigInt(cfg.prime), static_cast<unsigned>(depth - e));
  if (count > 1'000'000) throw InvalidArgument("ball enumeration exceeds 10^6 points; lower --depth");

  Table t{{"x", "monna", "value", "error_bound"}, {}, false};
  const auto n = count.convert_to<long long>();
  const auto prefix = ball.center().digits().subspan(0, static_cast<std::size_t>(e));
  for (long long i = 0; i < n; ++i) {
    std::vector<PadicInt::Digit> digits(prefix.begin(), prefix.end());
    for (long long r = i, j = e; j < depth; ++j, r /= cfg.prime) digits.push_back(static_cast<PadicInt::Digit>(r % cfg.prime));
    const auto img = monna_embed(digits, cfg.prime, k);
    t.add({format(PadicInt::from_digits(cfg.prime, digits)), text(img.exact), img.value, text(img.error_bound)});
  }
  return t;
}

Table embed_archimedean(const RunConfig& cfg, const EmbedOptions& o, const std::string& x) {
  const int steps = parse_int(cfg.pick(o.steps, "steps", "10"), "steps");
  const auto m = static_cast<std::uint32_t>(parse_u64(cfg.pick(o.m, "m", "10"), "m"));
  const auto ex = archimedean_expand(parse_rational(x), m, steps);
  Table t{{"step", "digit", "partial_sum"}, {}, false};
  t.add({0, to_string(ex.integer_part), text(Rational(ex.integer_part))});
  ArchimedeanExpansion prefix{ex.integer_part, {}};
  for (std::size_t i = 0; i < ex.digits.size(); ++i) {
    prefix.digits.push_back(ex.digits[i]);
    t.add({static_cast<int>(i + 1), ex.digits[i], text(prefix.partial_sum(m))});
  }
  return t;
}

}  // namespace

void add_core_commands(CLI::App& root, Registry& registry) {
  auto ao = std::make_shared<ArithOptions>();
  auto* arith_cmd = root.add_subcommand("arith", "Field operations, metric and valuation in Q_p");
  arith_cmd->add_option("--op", ao->op, "add, sub, mul, div, metric or valuation")->default_val("add");
  arith_cmd->add_option("--x", ao->x, "First operand (rational literal or canonical text)");
  arith_cmd->add_option("--y", ao->y, "Second operand");
  arith_cmd->add_option("--samples", ao->samples, "Print/parse round-trip over N random values (needs --seed)");
  registry.push_back({arith_cmd, [ao](const RunConfig& cfg) { return arith(cfg, *ao); }});

  auto eo = std::make_shared<EmbedOptions>();
  auto* embed_cmd = root.add_subcommand("embed", "Monna images of a ball, or a real base-m expansion");
  embed_cmd->add_option("--ball", eo->ball, "center:radius, radius a power of 1/p");
  embed_cmd->add_option("--k", eo->k, "Target base of the Monna map (default p)");
  embed_cmd->add_option("--depth", eo->depth, "Digits enumerated (default radius exponent + 2)");
  embed_cmd->add_option("--archimedean", eo->archimedean, "Positive rational to expand in base m");
  embed_cmd->add_option("--steps", eo->steps, "Digits of the base-m expansion");
  embed_cmd->add_option("--m", eo->m, "Base of the real expansion (default 10)");
  registry.push_back({embed_cmd, [eo](const RunConfig& cfg) {
                        if (const auto b = cfg.pick_optional(eo->ball, "ball")) return embed_ball(cfg, *eo, *b);
                        if (const auto x = cfg.pick_optional(eo->archimedean, "archimedean")) {
                          return embed_archimedean(cfg, *eo, *x);
                        }
                        throw InvalidArgument("embed needs --ball or --archimedean");
                      }});
}

}  // namespace padicmech::cli

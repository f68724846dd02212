#include <fstream>
#include <memory>
#include <sstream>

#include "commands.hpp"
#include "padicmech/errors.hpp"
#include "padicmech/prob/frequency.hpp"
#include "padicmech/text.hpp"

namespace padicmech::cli {

namespace {

using namespace prob;

// CSV rows "N,n"; a first line that does not start with a digit is a header.
FrequencyRecord read_record(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open record '" + path + "'");
  FrequencyRecord rec;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto cells = split_list(line);
    if (cells.empty()) continue;
    if (number == 1 && !std::isdigit(static_cast<unsigned char>(cells.front().front()))) continue;
    if (cells.size() != 2) throw ParseError(path + ":" + std::to_string(number) + ": expected N,n");
    rec.trials.push_back(parse_integer(cells[0]));
    rec.successes.push_back(parse_integer(cells[1]));
  }
  rec.validate();
  return rec;
}

Json report_row_candidate(const StabilizationReport& r) {
  if (r.padic_candidate) return text(*r.padic_candidate);
  if (r.candidate) return text(*r.candidate);
  return Json();
}

struct DetectOptions {
  std::optional<std::string> input, mode, epsilon, strength, window;
};

Table detect(const RunConfig& cfg, const DetectOptions& o) {
  const auto input = cfg.pick_optional(o.input, "input");
  if (!input) throw InvalidArgument("prob detect needs --input");
  const auto rec = read_record(*input);
  const auto mode = cfg.pick(o.mode, "mode", "both");
  if (mode != "real" && mode != "padic" && mode != "both") throw InvalidArgument("--mode must be real, padic or both");
  const int window = parse_int(cfg.pick(o.window, "window", "5"), "window");

  std::vector<StabilizationReport> reports;
  if (mode != "padic") {
    reports.push_back(stabilization_detect(rec, RealTopology{parse_rational(cfg.pick(o.epsilon, "epsilon", "1/1000")), window}));
  }
  if (mode != "real") {
    reports.push_back(stabilization_detect(rec, PadicTopology{cfg.prime, parse_int(cfg.pick(o.strength, "strength", "4"), "strength"), window}));
  }
  Table t{{"mode", "verdict", "candidate", "evidence"}, {}, false};
  for (const auto& r : reports) {
    Json evidence = Json::array();
    for (const auto& e : r.evidence) evidence.push_back(text(e));
    t.add({r.mode, to_string(r.verdict), report_row_candidate(r), evidence});
  }
  return t;
}

struct SynthOptions {
  std::optional<std::string> alpha, length;
};

Table synth(const RunConfig& cfg, const SynthOptions& o) {
  const auto d = dual_limit_synthesize(cfg.prime, parse_rational(cfg.pick(o.alpha, "alpha", "1")),
                                       parse_int(cfg.pick(o.length, "length", "20"), "length"));
  Table t{{"N", "n"}, {}, false};
  for (std::size_t j = 0; j < d.record.size(); ++j) {
    t.add({to_string(d.record.trials[j]), to_string(d.record.successes[j])});
  }
  return t;
}

struct VolumeOptions {
  std::optional<std::string> k;
};

Table volume(const RunConfig& cfg, const VolumeOptions& o) {
  const int k = parse_int(cfg.pick(o.k, "k", "0"), "k");
  return record({{"prime", cfg.prime}, {"k", k}, {"volume", text(ball_volume(cfg.prime, k))}});
}

}  // namespace

void add_prob_commands(CLI::App& root, Registry& registry) {
  auto* group = root.add_subcommand("prob", "Frequency records under the real and p-adic topologies");
  group->require_subcommand(1);

  auto d = std::make_shared<DetectOptions>();
  auto* det = group->add_subcommand("detect", "Classify the limit behaviour of a frequency record");
  det->add_option("--input", d->input, "CSV with columns N,n");
  det->add_option("--mode", d->mode, "real, padic or both (default both)");
  det->add_option("--epsilon", d->epsilon, "Real tolerance (default 1/1000)");
  det->add_option("--strength", d->strength, "p-adic agreement modulo p^s (default 4)");
  det->add_option("--window", d->window, "Trailing window length (default 5)");
  registry.push_back({det, [d](const RunConfig& cfg) { return detect(cfg, *d); }});

  auto s = std::make_shared<SynthOptions>();
  auto* syn = group->add_subcommand("synth", "Record whose frequencies tend to 0 in R and to alpha in Q_p");
  syn->add_option("--alpha", s->alpha, "p-adic limit, |alpha|_p <= 1 (default 1)");
  syn->add_option("--length", s->length, "Number of checkpoints J (default 20)");
  registry.push_back({syn, [s](const RunConfig& cfg) { return synth(cfg, *s); }});

  auto v = std::make_shared<VolumeOptions>();
  auto* vol = group->add_subcommand("volume", "Uniform measure of a ball of radius p^-k");
  vol->add_option("--k", v->k, "Radius exponent");
  registry.push_back({vol, [v](const RunConfig& cfg) { return volume(cfg, *v); }});
}

}  // namespace padicmech::cli

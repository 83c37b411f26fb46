#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "nesto/nesto_c.h"

namespace {

struct Job {
  std::string command;
  std::string kind;
  std::string input;
  std::string output;
  int max_n = 0;
  std::uint64_t seed = 7;
  std::string format = "json";
  std::string word;
  int entry = 0;
  std::string cost;
  bool nested = false;
};

struct BsDeleter {
  void operator()(nesto_building_set* b) const { nesto_bs_free(b); }
};
using BsHandle = std::unique_ptr<nesto_building_set, BsDeleter>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& spec) {
  if (spec.empty()) throw UsageError("--input is required for this command");
  if (spec.front() == '{' || spec.front() == '[') return spec;
  if (spec == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(spec);
  if (!in) throw UsageError("cannot read " + spec);
  return {std::istreambuf_iterator<char>(in), {}};
}

nesto_format format_of(const std::string& f) {
  if (f == "dot") return NESTO_FORMAT_DOT;
  if (f == "csv") return NESTO_FORMAT_CSV;
  return NESTO_FORMAT_JSON;
}

std::string failure_report(const Job& job, int status) {
  nlohmann::json j{{"tool", "nesto"},
                   {"version", nesto_version()},
                   {"seed", job.seed},
                   {"command", job.command},
                   {"error", {{"code", nesto_status_name(status)}, {"message", nesto_last_error()}}}};
  if (!job.kind.empty()) j["kind"] = job.kind;
  return j.dump(2) + "\n";
}

int emit(const Job& job, const std::string& text) {
  if (job.output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(job.output);
  if (!out) {
    std::cerr << "cannot write " << job.output << "\n";
    return 2;
  }
  out << text;
  return 0;
}

BsHandle load(const Job& job, int& status) {
  nesto_building_set* raw = nullptr;
  status = nesto_bs_from_json(read_input(job.input).c_str(), &raw);
  return BsHandle(raw);
}

int run(const Job& job) {
  nesto_options opt;
  nesto_options_default(&opt);
  opt.max_n = job.max_n;
  opt.seed = job.seed;
  opt.format = format_of(job.format);

  char* out = nullptr;
  int status = NESTO_OK;
  const char* kind = job.kind.empty() ? nullptr : job.kind.c_str();
  nlohmann::json extra = nlohmann::json::object();
  if (!job.word.empty()) {
    extra["word"] = job.word;
    extra["entry"] = job.entry;
  }
  if (!job.cost.empty()) {
    std::vector<std::int64_t> c;
    std::stringstream ss(job.cost);
    for (std::string tok; std::getline(ss, tok, ',');) c.push_back(std::stoll(tok));
    extra["cost"] = c;
  }
  if (job.nested) extra["extended"] = false;
  const std::string extra_text = extra.dump();

  const std::string& c = job.command;
  if (c == "validate") {
    status = nesto_validate(read_input(job.input).c_str(), &opt, &out);
  } else if (c == "from-graph") {
    status = nesto_from_graph(read_input(job.input).c_str(), &opt, &out);
  } else if (c == "order") {
    std::string input = job.input.empty() ? std::string() : read_input(job.input);
    status = nesto_order(input.empty() ? nullptr : input.c_str(), kind, &opt, &out);
  } else if (c == "iso") {
    status = nesto_iso(read_input(job.input).c_str(), kind, &opt, &out);
  } else if (c == "verify-all") {
    status = nesto_verify_all(&opt, &out);
  } else {
    BsHandle b = load(job, status);
    if (status == NESTO_OK) {
      if (c == "complex") status = nesto_complex(b.get(), kind, &opt, &out);
      else if (c == "counts") status = nesto_counts(b.get(), kind, &opt, &out);
      else if (c == "perms") status = nesto_perms(b.get(), kind, extra_text.c_str(), &opt, &out);
      else if (c == "geom") status = nesto_geom(b.get(), kind, extra_text.c_str(), &opt, &out);
    }
  }

  std::unique_ptr<char, decltype(&nesto_string_free)> guard(out, nesto_string_free);
  if (status == NESTO_OK || status == NESTO_E_CHECK_FAILED) {
    if (int e = emit(job, out ? out : "")) return e;
    return status == NESTO_OK ? 0 : 1;
  }
  if (status == NESTO_E_INVALID_ARGUMENT && std::string(nesto_last_error()).find("rendering") != std::string::npos) {
    std::cerr << nesto_last_error() << "\n";
    return 2;
  }
  if (int e = emit(job, failure_report(job, status))) return e;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nested set complexes, nestohedra and their extended versions"};
  app.set_version_flag("--version", std::string(nesto_version()));
  app.require_subcommand(1);

  Job job;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", job.input, "Input JSON file, '-' for stdin, or inline JSON");
    sub->add_option("--output,-o", job.output, "Output file (default stdout)");
    sub->add_option("--max-n", job.max_n, "Size cap; for verify-all the instance size")->check(CLI::Range(1, 32));
    sub->add_option("--seed", job.seed, "RNG seed recorded in the report");
    sub->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"json", "dot", "csv"}));
  };
  auto add_kind = [&](CLI::App* sub, std::vector<std::string> kinds, const std::string& fallback) {
    sub->add_option("kind", job.kind, "Variant")->check(CLI::IsMember(kinds))->default_str(fallback);
    sub->callback([&job, fallback] {
      if (job.kind.empty()) job.kind = fallback;
    });
  };

  auto* validate = app.add_subcommand("validate", "Validate a building set and report its properties");
  auto* from_graph = app.add_subcommand("from-graph", "Building set of a graph");
  auto* complex = app.add_subcommand("complex", "Nested or extended nested complex");
  auto* counts = app.add_subcommand("counts", "f-, h-, gamma-polynomials and a/b numbers");
  auto* perms = app.add_subcommand("perms", "Partial permutations, hops, chordal gamma");
  auto* order = app.add_subcommand("order", "Partial weak order, flip posets, shellings");
  auto* iso = app.add_subcommand("iso", "Isomorphism constructions and map checks");
  auto* geom = app.add_subcommand("geom", "Stellar realization, vertex coordinates, orientations");
  auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");
  for (auto* s : {validate, from_graph, complex, counts, perms, order, iso, geom, verify}) add_common(s);

  add_kind(complex, {"nested", "extended"}, "nested");
  add_kind(perms, {"list", "hops", "gamma-chordal"}, "list");
  add_kind(order, {"partial-weak", "flip", "shell"}, "partial-weak");
  add_kind(iso, {"interval", "rotate", "rotate-extended", "flip", "spider2octopus", "check"}, "check");
  add_kind(geom, {"stellar", "coords", "orient"}, "coords");

  counts->set_help_flag("--help", "Print this help message and exit");
  counts->add_option("kind", job.kind, "f, h, gamma or ab")->check(CLI::IsMember({"f", "h", "gamma", "ab"}));
  bool f = false, h = false, gamma = false, ab = false;
  auto* kinds = counts->add_option_group("kind flags");
  kinds->add_flag("--f", f);
  kinds->add_flag("--h", h);
  kinds->add_flag("--gamma", gamma);
  kinds->add_flag("--ab", ab);
  kinds->require_option(0, 1);

  perms->add_option("--word", job.word, "Extended permutation for a single hop, e.g. 2,4,1,3,5");
  perms->add_option("--entry", job.entry, "Entry to hop");
  geom->add_option("--cost", job.cost, "Cost vector for orient, comma separated");
  geom->add_flag("--nested", job.nested, "Orient the nestohedron instead of the extended one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (auto* s : app.get_subcommands()) job.command = s->get_name();
  if (job.command == "counts") {
    if (f) job.kind = "f";
    if (h) job.kind = "h";
    if (gamma) job.kind = "gamma";
    if (ab) job.kind = "ab";
    if (job.kind.empty()) job.kind = "f";
  }
  try {
    return run(job);
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }
}

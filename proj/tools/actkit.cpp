// actkit command-line front end.
//
//   actkit analyze <file | fixture:NAME>
//   actkit verify <id|all|list> [--max-s k] [--max-a m] [--up-to-iso] ...
//   actkit enumerate semigroups|acts ...
//   actkit construct two-zero|amalgam|power ...

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "actkit/analyze.hpp"
#include "actkit/classifiers.hpp"
#include "actkit/enumeration.hpp"
#include "actkit/error.hpp"
#include "actkit/fixtures.hpp"
#include "actkit/io.hpp"
#include "actkit/verify.hpp"

namespace {

using namespace actkit;

constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

constexpr std::string_view kFixturePrefix = "fixture:";

Document load(const std::string& source) {
  if (source.rfind(kFixturePrefix, 0) == 0) {
    const std::string name = source.substr(kFixturePrefix.size());
    if (auto s = fixtures::semigroup_named(name)) return **s;
    if (auto a = fixtures::act_named(name)) return *a;
    throw PreconditionError("unknown fixture '" + name + "'");
  }
  return read_document(source);
}

SemigroupPtr load_semigroup(const std::string& source) {
  Document d = load(source);
  if (auto* s = std::get_if<Semigroup>(&d))
    return std::make_shared<const Semigroup>(std::move(*s));
  throw PreconditionError(source + " is an act, expected a semigroup");
}

Act load_act(const std::string& source) {
  Document d = load(source);
  if (auto* a = std::get_if<Act>(&d)) return std::move(*a);
  throw PreconditionError(source + " is a semigroup, expected an act");
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

// FNV-1a over the emitted stream, recorded in manifests.
class ContentHash {
 public:
  void add(std::string_view bytes) {
    for (unsigned char c : bytes) {
      h_ ^= c;
      h_ *= 1099511628211ULL;
    }
  }
  std::string hex() const {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h_;
    return out.str();
  }

 private:
  std::uint64_t h_ = 14695981039346656037ULL;
};

// --- analyze ----------------------------------------------------------------

int run_analyze(const std::string& source) {
  Document d = load(source);
  if (auto* s = std::get_if<Semigroup>(&d)) {
    Json j = analyze_semigroup(std::make_shared<const Semigroup>(std::move(*s)));
    j["kind"] = "semigroup";
    print_json(j);
  } else {
    Json j = analyze_act(std::get<Act>(d));
    j["kind"] = "act";
    print_json(j);
  }
  return 0;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string target;
  std::optional<std::size_t> max_s;
  std::optional<std::size_t> max_a;
  bool up_to_iso = false;
  unsigned jobs = 0;
  std::optional<std::uint64_t> budget;
  std::string json_out;
  bool timing = false;
  bool strict_pr8 = false;
  bool expert = false;
};

int run_verify(const VerifyArgs& args) {
  if (args.target == "list") {
    for (const TheoremInfo& t : theorem_catalog())
      std::cout << std::left << std::setw(9) << t.id << ' ' << t.statement << '\n';
    return 0;
  }
  std::vector<std::string> ids;
  if (args.target == "all") {
    for (const TheoremInfo& t : theorem_catalog()) ids.push_back(t.id);
  } else {
    std::stringstream list(args.target);
    for (std::string id; std::getline(list, id, ',');)
      if (!id.empty()) ids.push_back(id);
  }
  for (const std::string& id : ids)
    if (!find_theorem(id)) throw PreconditionError("unknown theorem id '" + id + "'");

  VerifyOptions options;
  options.override.max_semigroup_order = args.max_s;
  options.override.max_act_order = args.max_a;
  if (args.up_to_iso) options.override.up_to_iso = true;
  options.override.budget = args.budget;
  options.override.jobs = args.jobs;
  options.override.allow_order_five = args.expert;
  options.strict_pr8 = args.strict_pr8;
  options.timing = args.timing;

  const std::vector<VerificationReport> reports = verify(ids, options);
  Json all = Json::array();
  for (const VerificationReport& r : reports) {
    std::cout << std::left << std::setw(9) << r.theorem_id << ' ' << std::setw(9)
              << to_string(r.verdict) << " checked=" << r.instances_checked
              << " enumerated=" << r.instances_enumerated
              << " counterexamples=" << r.counterexample_count;
    if (r.mismatch_count > 0) std::cout << " mismatches=" << r.mismatch_count;
    if (r.elapsed_seconds)
      std::cout << " time=" << std::fixed << std::setprecision(2)
                << *r.elapsed_seconds << "s";
    if (!r.reason.empty()) std::cout << " (" << r.reason << ')';
    std::cout << '\n';
    all.push_back(to_json(r));
  }
  if (!args.json_out.empty()) {
    std::ofstream out(args.json_out);
    if (!out) throw Error("cannot write " + args.json_out);
    out << all.dump(2) << '\n';
  }
  return exit_code(reports);
}

// --- enumerate ----------------------------------------------------------------

struct EnumerateArgs {
  std::size_t order = 2;
  bool up_to_iso = false;
  std::string filter;
  std::string format = "text";
  std::string manifest;
  std::string semigroup;
  std::optional<std::uint64_t> budget;
  unsigned jobs = 0;
  bool expert = false;
};

std::string semigroup_line(const Semigroup& s, const std::string& format) {
  if (format == "jsonl")
    return Json{{"kind", "semigroup"}, {"table", table_json(s.table(), s.size())}}.dump() + '\n';
  return format_semigroup(s);
}

std::string act_line(const Act& a, const std::string& format) {
  if (format == "jsonl")
    return Json{{"kind", "act"}, {"table", table_json(a.action(), a.semigroup().size())}}.dump() + '\n';
  std::ostringstream out;
  out << "act " << a.size() << '\n';
  const std::size_t n = a.semigroup().size();
  for (Index x = 0; x < a.size(); ++x) {
    for (Index s = 0; s < n; ++s) out << (s ? " " : "") << a(x, s);
    out << '\n';
  }
  return out.str();
}

void write_manifest(const std::string& path, Json scope, std::size_t count,
                    const ContentHash& hash) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << Json{{"scope", std::move(scope)}, {"count", count}, {"content_hash", hash.hex()}}
             .dump(2)
      << '\n';
}

void check_format(const std::string& format) {
  if (format != "text" && format != "jsonl")
    throw PreconditionError("format must be text or jsonl");
}

int run_enumerate_semigroups(const EnumerateArgs& args) {
  check_format(args.format);
  EnumerationScope scope;
  scope.min_semigroup_order = scope.max_semigroup_order = args.order;
  scope.up_to_iso = args.up_to_iso;
  scope.jobs = args.jobs;
  scope.allow_order_five = args.expert;
  if (args.budget) scope.budget = *args.budget;
  if (!args.filter.empty()) {
    scope.filter = parse_filter(args.filter);
    if (!scope.filter) throw PreconditionError("unknown filter '" + args.filter + "'");
  }
  ContentHash hash;
  std::size_t count = 0;
  for (const SemigroupPtr& s : enumerate_semigroups(scope)) {
    const std::string line = semigroup_line(*s, args.format);
    hash.add(line);
    std::cout << line;
    ++count;
  }
  Json sj{{"kind", "semigroups"}, {"order", args.order}, {"up_to_iso", args.up_to_iso}};
  sj["filter"] = args.filter.empty() ? Json(nullptr) : Json(args.filter);
  write_manifest(args.manifest, sj, count, hash);
  std::cerr << count << " semigroups\n";
  return 0;
}

int run_enumerate_acts(const EnumerateArgs& args) {
  check_format(args.format);
  if (args.semigroup.empty()) throw PreconditionError("--semigroup is required");
  if (args.order > 6 && !args.expert)
    throw BudgetExceeded("act order above 6 needs --expert");
  const SemigroupPtr s = load_semigroup(args.semigroup);
  ContentHash hash;
  std::size_t count = 0;
  for_each_act(s, args.order, args.up_to_iso, [&](const Act& a) {
    const std::string line = act_line(a, args.format);
    hash.add(line);
    std::cout << line;
    ++count;
  }, args.budget.value_or(default_node_budget()));
  Json sj{{"kind", "acts"}, {"order", args.order}, {"up_to_iso", args.up_to_iso},
          {"semigroup", to_json(*s)["semigroup"]}};
  write_manifest(args.manifest, sj, count, hash);
  std::cerr << count << " acts\n";
  return 0;
}

// --- construct ----------------------------------------------------------------

int run_two_zero(const std::string& source) {
  const SemigroupPtr s = load_semigroup(source);
  const TwoZeroConstruction c = construct_two_zero_uniform(s);
  if (!c.applicable) {
    std::cout << "not applicable: the monoid is left reversible\n";
    return 0;
  }
  if (!c.act) throw std::logic_error("construction returned no act");
  std::cout << format_act(*c.act);
  std::cerr << "generators " << c.generators->first << ' ' << c.generators->second
            << ", zeros " << c.zeros->first << ' ' << c.zeros->second
            << ", verified " << (c.verified ? "yes" : "no") << '\n';
  return c.verified ? 0 : kExitFalsified;
}

int run_amalgam(const std::string& source, std::optional<Index> s_element) {
  const SemigroupPtr s = load_semigroup(source);
  const Act regular = regular_act(s);
  std::optional<Amalgam> q;
  if (s_element) {
    if (*s_element >= s->size()) throw PreconditionError("--s out of range");
    const Restriction u =
        restrict_to(regular, right_ideal(*s, *s_element, false));
    q = amalgam(regular, regular, u.act, u.inclusion, u.inclusion);
  } else {
    const Act one = regular_act_with_identity(s);
    ActHom inclusion;
    for (Index x = 0; x < s->size(); ++x) inclusion.image.push_back(x);
    q = amalgam(one, one, regular, inclusion, inclusion);
  }
  std::cout << format_act(q->act);
  const Json verdict = analyze_act(q->act);
  std::cerr << "uniform " << verdict["uniform"].dump() << ", components "
            << verdict["profile"]["components"].size() << '\n';
  return 0;
}

int run_power(const std::string& source, const std::string& embed) {
  const SemigroupPtr s = load_semigroup(source);
  if (embed.empty()) {
    std::cout << format_act(power01(s));
    return 0;
  }
  const Act a = load_act(embed);
  if (!same_semigroup(a, Act(s, 1, std::vector<Index>(s->size(), 0))))
    throw PreconditionError("the act is over a different semigroup");
  const PowerEmbedding e = embed_in_power_act(a);
  if (!e.embedding) {
    std::cout << "no embedding: " << e.reason << '\n';
    return 0;
  }
  for (std::size_t i = 0; i < e.embedding->image.size(); ++i)
    std::cout << (i ? " " : "") << e.embedding->image[i];
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semigroups and right acts: classifiers and theorem checks"};
  app.require_subcommand(1);
  int status = 0;

  std::string analyze_source;
  auto* analyze = app.add_subcommand("analyze", "Classify a semigroup or act file");
  analyze->add_option("file", analyze_source, "path, or fixture:NAME")->required();
  analyze->callback([&] { status = run_analyze(analyze_source); });

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Check theorems over an enumeration scope");
  verify_cmd->add_option("theorem", va.target, "theorem id, comma list, 'all' or 'list'")->required();
  verify_cmd->add_option("--max-s", va.max_s, "largest semigroup order");
  verify_cmd->add_option("--max-a", va.max_a, "largest act order");
  verify_cmd->add_flag("--up-to-iso", va.up_to_iso, "one representative per isomorphism class");
  verify_cmd->add_option("--jobs", va.jobs, "worker threads (0 = all cores)");
  verify_cmd->add_option("--budget", va.budget, "search-node budget");
  verify_cmd->add_option("--json", va.json_out, "write the reports as JSON");
  verify_cmd->add_flag("--timing", va.timing, "include elapsed time");
  verify_cmd->add_flag("--strict-pr8", va.strict_pr8, "count pr8 mismatches as failures");
  verify_cmd->add_flag("--expert", va.expert, "allow semigroups of order 5");
  verify_cmd->callback([&] { status = run_verify(va); });

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "Stream semigroups or acts");
  enumerate->require_subcommand(1);
  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--order", ea.order, "order of the generated objects")->required();
    cmd->add_flag("--up-to-iso", ea.up_to_iso, "one representative per isomorphism class");
    cmd->add_option("--format", ea.format, "text or jsonl");
    cmd->add_option("--manifest", ea.manifest, "write scope, count and content hash");
    cmd->add_option("--budget", ea.budget, "search-node budget");
    cmd->add_flag("--expert", ea.expert, "lift the size guards");
  };
  auto* enum_sg = enumerate->add_subcommand("semigroups", "All semigroups of one order");
  common(enum_sg);
  enum_sg->add_option("--filter", ea.filter, "right_zero, left_zero, regular, group, monoid, ...");
  enum_sg->add_option("--jobs", ea.jobs, "worker threads (0 = all cores)");
  enum_sg->callback([&] { status = run_enumerate_semigroups(ea); });
  auto* enum_acts = enumerate->add_subcommand("acts", "All acts of one order over a semigroup");
  common(enum_acts);
  enum_acts->add_option("--semigroup", ea.semigroup, "path, or fixture:NAME")->required();
  enum_acts->callback([&] { status = run_enumerate_acts(ea); });

  auto* construct = app.add_subcommand("construct", "Build acts from the constructions");
  construct->require_subcommand(1);
  std::string cons_source, embed_source;
  std::optional<Index> s_element;
  auto* two_zero = construct->add_subcommand("two-zero", "Uniform act with two zeros over a monoid");
  two_zero->add_option("semigroup", cons_source, "path, or fixture:NAME")->required();
  two_zero->callback([&] { status = run_two_zero(cons_source); });
  auto* amalgam_cmd = construct->add_subcommand(
      "amalgam", "S amalgamated over sS (with --s), else S1 amalgamated over S");
  amalgam_cmd->add_option("semigroup", cons_source, "path, or fixture:NAME")->required();
  amalgam_cmd->add_option("--s", s_element, "element s");
  amalgam_cmd->callback([&] { status = run_amalgam(cons_source, s_element); });
  auto* power = construct->add_subcommand("power", "The act {0,1}^S, or an embedding into it");
  power->add_option("semigroup", cons_source, "path, or fixture:NAME")->required();
  power->add_option("--embed", embed_source, "act to embed");
  power->callback([&] { status = run_power(cons_source, embed_source); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return status;
}

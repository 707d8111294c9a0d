#include "gyro/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "gyro/class_functions.hpp"
#include "gyro/counting.hpp"
#include "gyro/equivariant.hpp"
#include "gyro/errors.hpp"
#include "gyro/gen_product.hpp"
#include "gyro/group_registry.hpp"
#include "gyro/isomorphism.hpp"
#include "gyro/json_io.hpp"
#include "gyro/loop.hpp"
#include "gyro/verify.hpp"

namespace gyro::cli {

namespace {

struct RunConfig {
  std::string group;
  std::string k;
  std::string out;
  std::string input;
  bool exhaustive = false;
  bool brute = false;
  bool verbose = false;
  std::uint64_t seed = ProductVerifyOptions{}.seed;
  unsigned n = 0;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string describe(const GroupSummary& s) {
  std::ostringstream os;
  os << "order " << s.order << ", " << (s.abelian ? "abelian" : "non-abelian") << ", exponent " << s.exponent;
  if (s.name)
    os << ", isomorphic to " << *s.name;
  return os.str();
}

void print_report(std::ostream& out, const GyroReport& r) {
  out << "right gyrogroup: " << yes_no(r.is_right_gyrogroup()) << '\n';
  const std::pair<const char*, bool> flags[] = {
      {"right_identity", r.right_identity},
      {"right_inverses", r.right_inverses},
      {"gyrations_exist_unique", r.gyrations_exist_unique},
      {"gyrations_automorphisms", r.gyrations_automorphisms},
      {"gyration_of_inverse_trivial", r.gyration_of_inverse_trivial},
      {"associative", r.associative},
  };
  for (auto [name, value] : flags) {
    out << "  " << std::left << std::setw(30) << name << yes_no(value);
    if (auto it = r.witnesses.find(name); it != r.witnesses.end()) {
      out << "  witness [";
      for (std::size_t i = 0; i < it->second.elements.size(); ++i)
        out << (i ? " " : "") << it->second.elements[i];
      out << "] " << it->second.detail;
    }
    out << '\n';
  }
  if (r.gyrations_automorphisms)
    out << "  gyration group order " << r.gyration_group_order << ", "
        << (r.gyration_group_abelian ? "abelian" : "non-abelian") << '\n';
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f)
    throw Error("cannot write " + path.string());
  f << j.dump(2) << '\n';
}

int cmd_classes(const RunConfig& cfg, std::ostream& out) {
  const auto g = parse_group_spec(cfg.group);
  const RClassPartition p(g);
  const auto conj = conjugacy_classes(g);
  out << "group " << cfg.group << ": order " << g.order() << ", " << p.size() << " R-classes, "
      << conj.size() << " conjugacy classes\n";
  std::size_t rep_width = std::string("representative").size();
  for (std::size_t c = 0; c < p.size(); ++c)
    rep_width = std::max(rep_width, g.element(p.representative(c)).to_cycle_string().size());
  rep_width += 2;
  out << std::left << std::setw(7) << "class" << std::setw(6) << "size" << std::setw(7) << "order"
      << std::setw(13) << "conj.merged" << std::setw(static_cast<int>(rep_width)) << "representative"
      << "members\n";
  for (std::size_t c = 0; c < p.size(); ++c) {
    const auto merged = std::count_if(conj.begin(), conj.end(),
                                      [&](const auto& cl) { return p.class_of(cl.front()) == c; });
    out << std::setw(7) << c << std::setw(6) << p.members(c).size() << std::setw(7) << p.class_order(c)
        << std::setw(13) << merged << std::setw(static_cast<int>(rep_width)) << g.element(p.representative(c)).to_cycle_string();
    for (std::size_t i = 0; i < p.members(c).size(); ++i)
      out << (i ? " " : "") << g.element(p.members(c)[i]);
    out << '\n';
  }
  return kSuccess;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const auto g = parse_group_spec(cfg.group);
  auto partition = std::make_shared<const RClassPartition>(g);
  const auto k = parse_kspec(cfg.k, g, partition);
  const auto loop = deformed_loop(g, k);

  out << "group " << cfg.group << " (order " << g.order() << ")\n";
  out << "k: " << k.to_spec(g) << "\n";
  out << "canonical k: " << k.canonical().to_spec(g) << "\n";
  bool two_sided = true;
  for (Index y = 0; y < g.order(); ++y)
    two_sided = two_sided && loop(loop.identity(), y) == y;
  out << "loop: order " << loop.order() << ", two-sided identity " << yes_no(two_sided)
      << ", equals group table " << yes_no(loop.table() == g.table()) << '\n';

  try {
    ProductVerifyOptions opts;
    opts.exhaustive = cfg.exhaustive;
    opts.seed = cfg.seed;
    const auto product = GenProduct::build(g, kDefaultProductCap, Bracket::kUVInverse, opts);
    const auto t = embed_transversal(product, transversal_map(g, k));
    out << "generalized product: order " << product.order() << ", associativity "
        << (product.summary().associativity_exhaustive ? "exhaustive" : "sampled") << " ("
        << product.summary().triples_checked << " triples)\n";
    out << "S_g gyrotransversal: " << yes_no(static_cast<bool>(is_gyrotransversal(t))) << '\n';
  } catch (const CapExceeded& e) {
    out << "generalized product: skipped (" << e.what() << ")\n";
  }

  GyroVerifyOptions vopts;
  vopts.uniqueness_sweep = cfg.exhaustive;
  const auto report = verify_right_gyrogroup(loop.table(), vopts);
  print_report(out, report);
  if (report.gyrations_automorphisms)
    out << "gyration group: " << describe(summarize(gyration_group(loop.table()))) << '\n';

  if (!cfg.out.empty()) {
    const std::filesystem::path dir(cfg.out);
    write_json(dir / "loop.json", to_json(loop_document(g, loop)));
    write_json(dir / "report.json", to_json(report));
    out << "wrote " << (dir / "loop.json").string() << " and " << (dir / "report.json").string() << '\n';
  }
  return report.is_right_gyrogroup() ? kSuccess : kVerificationFailure;
}

struct LoopEntry {
  ClassAssignedFunction k;
  RightLoopTable loop;
  GyroReport report;
};

std::vector<LoopEntry> build_all_loops(const FiniteGroup& g) {
  auto partition = std::make_shared<const RClassPartition>(g);
  CafEnumerator it(partition);
  std::vector<LoopEntry> entries;
  while (auto k = it.next()) {
    auto loop = deformed_loop(g, *k);
    auto report = verify_right_gyrogroup(loop.table());
    entries.push_back({std::move(*k), std::move(loop), std::move(report)});
  }
  return entries;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const auto g = parse_group_spec(cfg.group);
  const auto entries = build_all_loops(g);
  out << "group " << cfg.group << ": " << entries.size() << " canonical class assigned functions\n";
  out << std::left << std::setw(6) << "#" << std::setw(40) << "k" << std::setw(13) << "associative"
      << std::setw(16) << "gyration group" << "right gyrogroup\n";
  bool all_ok = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    all_ok = all_ok && e.report.is_right_gyrogroup();
    out << std::setw(6) << i << std::setw(40) << e.k.to_spec(g) << std::setw(13) << yes_no(e.report.associative)
        << std::setw(16) << e.report.gyration_group_order << yes_no(e.report.is_right_gyrogroup()) << '\n';
  }
  return all_ok ? kSuccess : kVerificationFailure;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const auto g = parse_group_spec(cfg.group);
  const auto entries = build_all_loops(g);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes)
      if (tables_isomorphic(entries[cls.front()].loop.table(), entries[i].loop.table())) {
        cls.push_back(i);
        placed = true;
        break;
      }
    if (!placed)
      classes.push_back({i});
  }
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    bool seen = false;
    for (std::size_t j = 0; j < i && !seen; ++j)
      seen = entries[j].loop == entries[i].loop;
    distinct += !seen;
  }
  out << "group " << cfg.group << ": " << entries.size() << " loops, " << distinct << " distinct tables, "
      << classes.size() << " isomorphism classes\n";
  bool all_ok = true;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& rep = entries[classes[c].front()];
    out << "class " << c << ": " << classes[c].size() << " loop(s), representative k = " << rep.k.to_spec(g)
        << "\n  order " << rep.loop.order() << ", associative " << yes_no(rep.report.associative)
        << ", gyration group order " << rep.report.gyration_group_order << " ("
        << (rep.report.gyration_group_abelian ? "abelian" : "non-abelian") << ")\n  members:";
    for (std::size_t i : classes[c]) {
      out << ' ' << '[' << entries[i].k.to_spec(g) << ']';
      all_ok = all_ok && entries[i].report.is_right_gyrogroup();
    }
    out << '\n';
  }
  out << "all loops right gyrogroups: " << yes_no(all_ok) << '\n';
  return all_ok ? kSuccess : kVerificationFailure;
}

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n == 0) {
    err << "count: n must be at least 1\n";
    return kUsageError;
  }
  if (cfg.brute && cfg.n > 6) {
    err << "count: --brute is limited to n <= 6\n";
    return kUsageError;
  }
  if (cfg.n > kMaxFormulaDegree) {
    err << "count: n is limited to " << kMaxFormulaDegree << '\n';
    return kUsageError;
  }
  const BigInt formula = count_gyrotransversals(cfg.n);
  out << "gyrotransversals for S" << cfg.n << ": " << formula << '\n';
  if (cfg.verbose) {
    out << std::left << std::setw(24) << "cycle type" << "lcm\n";
    for (const auto& t : cycle_types(cfg.n))
      out << std::setw(24) << t.to_string() << t.lcm() << '\n';
  }
  if (cfg.brute) {
    const BigInt brute = brute_count(named_group("S" + std::to_string(cfg.n), kBruteCountCap));
    out << "brute-force count: " << brute << (brute == formula ? " (match)" : " (MISMATCH)") << '\n';
    if (brute != formula)
      return kVerificationFailure;
  }
  return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::ifstream f(cfg.input);
  if (!f)
    throw ParseError("cannot read " + cfg.input);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  const auto doc = table_from_json(j);
  GyroVerifyOptions vopts;
  vopts.uniqueness_sweep = cfg.exhaustive;
  const auto report = verify_right_gyrogroup(doc.table, vopts);
  out << cfg.input << ": " << doc.kind << " of order " << doc.table.order() << '\n';
  print_report(out, report);
  if (!cfg.out.empty()) {
    write_json(cfg.out, to_json(report));
    out << "wrote " << cfg.out << '\n';
  }
  return report.is_right_gyrogroup() ? kSuccess : kVerificationFailure;
}

int cmd_explore(const RunConfig& cfg, std::ostream& out) {
  const auto g = parse_group_spec(cfg.group);
  auto partition = std::make_shared<const RClassPartition>(g);
  EquivariantMapEnumerator it(g);
  std::vector<EquivariantMap> surplus;
  std::uint64_t total = 0, class_assigned = 0;
  while (auto m = it.next()) {
    ++total;
    if (is_class_assigned(g, *m))
      ++class_assigned;
    else
      surplus.push_back(std::move(*m));
  }
  out << "group " << cfg.group << " (order " << g.order() << "): " << total << " equivariant maps, "
      << class_assigned << " of class assigned form, " << surplus.size() << " not\n";

  std::optional<GenProduct> product;
  try {
    product.emplace(GenProduct::build(g));
  } catch (const CapExceeded&) {
  }

  bool all_ok = true;
  for (std::size_t i = 0; i < surplus.size(); ++i) {
    const auto& m = surplus[i];
    out << "map " << i << ":";
    for (std::size_t c = 1; c < partition->size(); ++c) {
      const Index w = partition->representative(c);
      out << ' ' << g.element(w) << "->" << g.element(m(w));
    }
    out << '\n';
    if (product)
      out << "  gyrotransversal: " << yes_no(static_cast<bool>(is_gyrotransversal(embed_transversal(*product, m.values))))
          << '\n';
    const auto loop = deformed_loop_general(g, m.values);
    const auto report = verify_right_gyrogroup(loop.table());
    all_ok = all_ok && report.is_right_gyrogroup();
    std::ostringstream rs;
    print_report(rs, report);
    std::istringstream lines(rs.str());
    for (std::string line; std::getline(lines, line);)
      out << "  " << line << '\n';
  }
  return all_ok ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Right gyrogroups from class assigned functions on finite groups", "gyro"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* classes = app.add_subcommand("classes", "List the R-classes of a group");
  classes->add_option("--group", cfg.group, "Group name (S4, A4, D4, C4, Q8) or gens:(0 1),(0 1 2)")->required();

  auto* construct = app.add_subcommand("construct", "Build the loop o_k, verify it, optionally export JSON");
  construct->add_option("--group", cfg.group, "Group spec")->required();
  construct->add_option("--k", cfg.k, "Class exponents, e.g. \"(0 1):1,(0 1 2):2\"")->default_val("0");
  construct->add_option("--out", cfg.out, "Directory for loop.json and report.json");
  construct->add_flag("--exhaustive", cfg.exhaustive, "Exhaustive checks instead of sampled ones");
  construct->add_option("--seed", cfg.seed, "Seed for sampled associativity checks");

  auto* enumerate = app.add_subcommand("enumerate", "Build and verify the loop of every canonical k");
  enumerate->add_option("--group", cfg.group, "Group spec")->required();

  auto* classify = app.add_subcommand("classify", "Partition all loops o_k into isomorphism classes");
  classify->add_option("--group", cfg.group, "Group spec")->required();

  auto* count = app.add_subcommand("count", "Count gyrotransversals for S_n by the closed formula");
  count->add_option("n,--n", cfg.n, "Degree n")->required();
  count->add_flag("--brute", cfg.brute, "Cross-check by enumeration (n <= 6)");
  count->add_flag("-v,--verbose", cfg.verbose, "Print the per-cycle-type factors");

  auto* verify = app.add_subcommand("verify", "Re-check a loop or group table from JSON");
  verify->add_option("file", cfg.input, "Table JSON")->required();
  verify->add_option("--out", cfg.out, "Write the report JSON here");
  verify->add_flag("--exhaustive", cfg.exhaustive, "Also run the direct uniqueness sweep");

  auto* explore = app.add_subcommand("explore-equivariant", "Compare all equivariant maps with class assigned ones");
  explore->add_option("--group", cfg.group, "Group spec")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*classes)
      return cmd_classes(cfg, out);
    if (*construct)
      return cmd_construct(cfg, out);
    if (*enumerate)
      return cmd_enumerate(cfg, out);
    if (*classify)
      return cmd_classify(cfg, out);
    if (*count)
      return cmd_count(cfg, out, err);
    if (*verify)
      return cmd_verify(cfg, out);
    if (*explore)
      return cmd_explore(cfg, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace gyro::cli

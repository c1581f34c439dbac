#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "orthoclose/orthoclose.hpp"

namespace orthoclose::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitCheckFailed = 2;

struct Input {
  std::string file;
  std::string fixture;
};

struct NamedPoset {
  PosetDocument doc;
  Poset poset;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kSyntaxError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<NamedPoset> load_all(const Input& in) {
  if (in.file.empty() && in.fixture.empty()) throw Error(ErrorCode::kSyntaxError, "one of --file or --fixture is required");
  std::vector<PosetDocument> docs;
  if (!in.fixture.empty())
    docs.push_back(fixture(in.fixture));
  else
    docs = parse_poset_documents(read_file(in.file));
  std::vector<NamedPoset> out;
  for (auto& d : docs) {
    Poset p = to_poset(d);
    out.push_back({std::move(d), std::move(p)});
  }
  return out;
}

inline NamedPoset load_one(const Input& in) {
  auto all = load_all(in);
  if (all.size() != 1)
    throw Error(ErrorCode::kSyntaxError, "expected one poset, found " + std::to_string(all.size()));
  return std::move(all.front());
}

inline void add_input_options(CLI::App& cmd, Input& in) {
  auto* f = cmd.add_option("--file", in.file, "poset text file");
  auto* x = cmd.add_option("--fixture", in.fixture, "named fixture: L1 L2 L3 P8 P10 M(n) B(n) C(n)");
  f->excludes(x);
}

inline int cmd_analyze(const Input& in, bool json, std::ostream& out) {
  const NamedPoset np = load_one(in);
  const AnalysisReport r = analyze(np.poset);
  out << (json ? report_json_text(r, np.doc) : report_text(r, np.doc));
  return r.any_failure() ? kExitCheckFailed : kExitOk;
}

inline int cmd_closure(const Input& in, std::ostream& out) {
  const NamedPoset np = load_one(in);
  const ClosedSetLattice bcl{OrthoSpace{np.poset}};
  for (std::size_t i = 0; i < bcl.size(); ++i) out << bcl.label(i) << "\n";
  return kExitOk;
}

inline int cmd_pseudo(const Input& in, std::ostream& out) {
  const NamedPoset np = load_one(in);
  const Poset& p = np.poset;
  const auto ps = pseudo_structure(p);
  if (!ps) {
    out << "not pseudocomplemented: witness " << p.name(*first_without_pseudocomplement(p)) << "\n";
    return kExitOk;
  }
  for (Element x = 0; x < p.size(); ++x) out << p.name(x) << " -> " << p.name(ps->star(x)) << "\n";
  out << "skeleton: " << set_label(p, ps->skeleton()) << "\n";
  return kExitOk;
}

struct GenOptions {
  std::string n;
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;
  std::size_t count = 1;
  bool bounded = false;
};

inline std::size_t parse_gen_size(const std::string& text) {
  std::string v = text.rfind("n=", 0) == 0 ? text.substr(2) : text;
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Error(ErrorCode::kSyntaxError, "bad size '" + text + "'");
  return std::stoul(v);
}

inline std::vector<NamedPoset> generated(const GenOptions& g) {
  const std::size_t n = parse_gen_size(g.n);
  GenerateMode mode;
  if (g.mode == "exhaustive")
    mode = Exhaustive{};
  else if (g.mode == "random")
    mode = RandomMode{g.seed, g.count, g.bounded};
  else
    throw Error(ErrorCode::kSyntaxError, "unknown mode '" + g.mode + "'");
  std::vector<NamedPoset> out;
  std::size_t i = 0;
  for (Poset& p : generate_posets(n, mode)) {
    PosetDocument doc = document_from_poset(p, "g" + std::to_string(n) + "_" + std::to_string(i++));
    out.push_back({std::move(doc), std::move(p)});
  }
  return out;
}

inline int cmd_gen(const GenOptions& g, std::ostream& out) {
  bool first = true;
  for (const auto& np : generated(g)) {
    if (!first) out << "\n";
    out << render(np.doc);
    first = false;
  }
  return kExitOk;
}

inline std::string file_stem(const std::string& name) {
  std::string s;
  for (char c : name) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return s;
}

inline int cmd_dot(const Input& in, const std::string& out_dir, std::ostream& out) {
  const NamedPoset np = load_one(in);
  std::filesystem::create_directories(out_dir);
  auto write = [&](const std::string& stem, const std::string& text) {
    const auto path = std::filesystem::path(out_dir) / (stem + ".dot");
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::kSyntaxError, "cannot write '" + path.string() + "'");
    f << text;
    out << path.string() << "\n";
  };
  const std::string stem = file_stem(np.doc.name);
  write(stem, to_dot(np.poset, np.doc.name));
  if (bottom(np.poset)) {
    const ClosedSetLattice bcl{OrthoSpace{np.poset}};
    write(stem + "_bcl", to_dot(bcl.to_poset(), "BCl(" + np.doc.name + ")"));
  }
  return kExitOk;
}

struct Tally {
  std::size_t pass = 0, fail = 0, skipped = 0;
  std::vector<std::string> failures;
};

inline const std::vector<std::string>& checkable_theorems() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v(kTheoremIds.begin(), kTheoremIds.end());
    v.push_back("product");
    return v;
  }();
  return ids;
}

/// Runs the named theorem suite (or "all") over the inputs and prints
/// pass/fail counts. Product pairs each input with B(1) and with itself.
inline int cmd_check(const std::vector<NamedPoset>& inputs, const std::string& theorem, std::ostream& out) {
  const auto& ids = checkable_theorems();
  if (theorem != "all" && std::find(ids.begin(), ids.end(), theorem) == ids.end())
    throw Error(ErrorCode::kSyntaxError, "unknown theorem '" + theorem + "'");
  std::map<std::string, Tally> tallies;
  auto wanted = [&](const std::string& id) { return theorem == "all" || theorem == id; };
  const bool need_analysis = theorem != "product";
  for (const auto& np : inputs) {
    if (need_analysis) {
      const AnalysisReport r = analyze(np.poset);
      for (const auto& t : r.theorems) {
        if (!wanted(t.id)) continue;
        Tally& tl = tallies[t.id];
        switch (t.verdict) {
          case Verdict::kPass: ++tl.pass; break;
          case Verdict::kFail:
            ++tl.fail;
            tl.failures.push_back(np.doc.name + ": " + t.detail);
            break;
          case Verdict::kHypothesisNotMet: ++tl.skipped; break;
        }
      }
    }
    if (wanted("product")) {
      Tally& tl = tallies["product"];
      if (!bottom(np.poset)) {
        ++tl.skipped;
        continue;
      }
      const Poset two = to_poset(fixture("B(1)"));
      for (const Poset* other : {&two, &np.poset}) {
        if (np.poset.size() * other->size() > default_carrier_cap()) {
          ++tl.skipped;
          continue;
        }
        const CheckReport rep = product_closure_check(np.poset, *other);
        if (rep.passed()) {
          ++tl.pass;
        } else {
          ++tl.fail;
          tl.failures.push_back(np.doc.name + ": " + rep.summary());
        }
      }
    }
  }
  bool failed = false;
  for (const auto& id : ids) {
    if (!wanted(id)) continue;
    const Tally& tl = tallies[id];
    out << "theorem " << id << ": pass " << tl.pass << ", fail " << tl.fail << ", hypothesis-not-met " << tl.skipped
        << "\n";
    for (const auto& f : tl.failures) out << "  FAIL " << f << "\n";
    failed = failed || tl.fail > 0;
  }
  return failed ? kExitCheckFailed : kExitOk;
}

/// Entry point shared by the executable and the tests. `args` excludes
/// the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthogonality closures, pseudocomplements and skeletons of finite posets"};
  app.require_subcommand(1);

  Input in;
  bool json = false;
  std::string out_dir = ".";
  std::string theorem = "all";
  GenOptions gen;

  auto* analyze_cmd = app.add_subcommand("analyze", "run every applicable check and report");
  add_input_options(*analyze_cmd, in);
  analyze_cmd->add_flag("--json", json, "emit the JSON report");

  auto* closure_cmd = app.add_subcommand("closure", "list closed subsets in canonical order");
  add_input_options(*closure_cmd, in);

  auto* pseudo_cmd = app.add_subcommand("pseudo", "print the pseudocomplement table");
  add_input_options(*pseudo_cmd, in);

  auto* dot_cmd = app.add_subcommand("dot", "write Hasse diagrams of the poset and its closed-set lattice");
  add_input_options(*dot_cmd, in);
  dot_cmd->add_option("--out-dir", out_dir, "output directory");

  auto* gen_cmd = app.add_subcommand("gen", "generate posets");
  gen_cmd->add_option("--n", gen.n, "element count")->required();
  gen_cmd->add_option("--mode", gen.mode, "exhaustive | random");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--count", gen.count, "number of random posets");
  gen_cmd->add_flag("--bounded", gen.bounded, "adjoin 0 and 1 to random posets");

  auto* check_cmd = app.add_subcommand("check", "run a theorem suite over a file, fixture or generated corpus");
  check_cmd->add_option("--theorem", theorem, "t1|t2|glivenko|product|forbidden|all or another check id");
  auto* cf = check_cmd->add_option("--file", in.file, "poset text file (may hold several posets)");
  auto* cx = check_cmd->add_option("--fixture", in.fixture, "named fixture");
  auto* cg = check_cmd->add_option("--gen", gen.n, "generated corpus size, e.g. n=6");
  cf->excludes(cx)->excludes(cg);
  cx->excludes(cg);
  check_cmd->add_option("--mode", gen.mode, "exhaustive | random");
  check_cmd->add_option("--seed", gen.seed, "random seed");
  check_cmd->add_option("--count", gen.count, "number of random posets");
  check_cmd->add_flag("--bounded", gen.bounded, "adjoin 0 and 1 to random posets");

  app.add_subcommand("fixtures", "list the standard fixtures");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(in, json, out);
    if (closure_cmd->parsed()) return cmd_closure(in, out);
    if (pseudo_cmd->parsed()) return cmd_pseudo(in, out);
    if (dot_cmd->parsed()) return cmd_dot(in, out_dir, out);
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (check_cmd->parsed()) {
      if (in.file.empty() && in.fixture.empty() && gen.n.empty()) {
        err << "check needs --file, --fixture or --gen\n";
        return kExitInputError;
      }
      return cmd_check(gen.n.empty() ? load_all(in) : generated(gen), theorem, out);
    }
    for (const auto& name : standard_fixture_names()) out << name << "\n";
    return kExitOk;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace orthoclose::cli

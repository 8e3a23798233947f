// santool: command-line front end for the sanlib group and algebra checks.
//
// Exit codes: 0 the property holds, 1 a property fails, 2 bad input.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sanlib/algebra.hpp"
#include "sanlib/classify.hpp"
#include "sanlib/construct.hpp"
#include "sanlib/io.hpp"
#include "sanlib/series.hpp"
#include "sanlib/sweep.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sanlib;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Options {
  std::string report_path;
  bool timing = false;
  Limits limits;
};

struct Outcome {
  int code = kPass;
  std::string command;
  std::string digest;
  json results;
};

int emit(const Options& opt, Outcome out, double seconds) {
  json rep = make_report(out.command, out.digest, std::move(out.results));
  if (opt.timing) rep["wall_time_s"] = seconds;
  const std::string text = rep.dump(2) + "\n";
  if (opt.report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.report_path, std::ios::binary);
    if (!f) {
      std::cerr << "santool: cannot write report " << opt.report_path << "\n";
      return kInputError;
    }
    f << text;
    std::cout << out.command << ": " << (out.code == kPass ? "pass" : "fail") << "\n";
  }
  return out.code;
}

// Groups ---------------------------------------------------------------------------

struct GroupInput {
  LoadedGroup loaded;
  std::string digest;
};

GroupInput load_group(const std::string& path, const Limits& limits) {
  const std::string bytes = read_text_file(path);
  const auto doc = parse_json_text(bytes, path);
  try {
    return {group_from_json(doc, limits), input_digest(bytes)};
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Outcome cmd_analyze(const std::string& path, const Options& opt) {
  const auto in = load_group(path, opt.limits);
  const auto rep = classify(in.loaded.group, opt.limits);
  return {kPass, "analyze", in.digest, classification_to_json(rep, &in.loaded)};
}

Outcome cmd_check(const std::string& kind, const std::string& path, const Options& opt) {
  const auto in = load_group(path, opt.limits);
  const auto& g = in.loaded.group;
  json res{{"predicate", kind}, {"group_name", g.name()}, {"order", g.order()}};
  bool holds = false;
  if (kind == "san") {
    const auto r = g.order() <= opt.limits.max_subgroup_lattice
                       ? is_san(g, SanMode::brute, opt.limits)
                       : is_san(g, SanMode::fast, opt.limits);
    holds = r.holds;
    if (r.witness) res["witness"] = subgroup_to_json(*r.witness, &in.loaded);
  } else if (kind == "tgroup") {
    const auto r = is_t_group(g, opt.limits);
    holds = r.holds;
    if (r.witness) res["witness"] = subgroup_to_json(*r.witness, &in.loaded);
  } else if (kind == "dedekind") {
    const auto d = dedekind_structure(g, opt.limits);
    holds = d.kind != DedekindStructure::Kind::not_dedekind;
    res["structure"] = d.kind == DedekindStructure::Kind::abelian       ? "abelian"
                       : d.kind == DedekindStructure::Kind::hamiltonian ? "hamiltonian"
                                                                        : "not-dedekind";
    if (d.parts) {
      res["Q"] = subgroup_to_json(d.parts->q, &in.loaded);
      res["E"] = subgroup_to_json(d.parts->e, &in.loaded);
      res["B"] = subgroup_to_json(d.parts->b, &in.loaded);
    }
  } else {
    holds = is_supersolvable(g);
  }
  res["verdict"] = holds ? "pass" : "fail";
  return {holds ? kPass : kFail, "check " + kind, in.digest, std::move(res)};
}

Outcome cmd_theorem_a(const std::string& path, const Options& opt) {
  const auto in = load_group(path, opt.limits);
  const auto rep = theorem_a_report(in.loaded.group, opt.limits);
  json res = condition_report_to_json(rep, &in.loaded);
  res["group_name"] = in.loaded.group.name();
  return {rep.any_fail() ? kFail : kPass, "theorem-a", in.digest, std::move(res)};
}

Outcome cmd_corollary(const std::string& which, const std::string& path, const Options& opt) {
  const auto in = load_group(path, opt.limits);
  ConditionReport rep;
  try {
    rep = which == "a2" ? corollary_a2_report(in.loaded.group, opt.limits)
                        : corollary_a3_report(in.loaded.group, opt.limits);
  } catch (const PreconditionError& e) {
    rep.name = "corollary-" + which;
    rep.applicable = false;
    rep.gate_reason = e.what();
  }
  json res = condition_report_to_json(rep, &in.loaded);
  res["group_name"] = in.loaded.group.name();
  return {rep.any_fail() ? kFail : kPass, "corollary " + which, in.digest, std::move(res)};
}

std::string file_stem_for(std::size_t index, const std::string& name) {
  std::string safe;
  for (char c : name) safe += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  char prefix[16];
  std::snprintf(prefix, sizeof prefix, "%05zu", index);
  return std::string(prefix) + "_" + safe;
}

Outcome cmd_generate(std::size_t max_order, const std::string& out_dir, const Options& opt) {
  const auto groups = catalog(max_order, opt.limits);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw InputError(out_dir + ": cannot create directory");
  json files = json::array();
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto file = file_stem_for(i + 1, groups[i].name()) + ".json";
    std::ofstream f(fs::path(out_dir) / file, std::ios::binary);
    if (!f) throw InputError(out_dir + "/" + file + ": cannot write");
    f << group_to_json(groups[i]).dump() << "\n";
    files.push_back({{"file", file}, {"group_name", groups[i].name()}, {"order", groups[i].order()}});
  }
  json res{{"max_order", max_order}, {"groups", groups.size()}, {"files", std::move(files)}};
  return {kPass, "catalog generate", input_digest("catalog:" + std::to_string(max_order)),
          std::move(res)};
}

Outcome cmd_sweep(const std::string& dir, const std::string& check_name, std::size_t jobs,
                  const Options& opt) {
  const auto check = parse_sweep_check(check_name);
  if (!check) throw InputError("unknown sweep check \"" + check_name + "\"");
  if (!fs::is_directory(dir)) throw InputError(dir + ": not a directory");
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());

  std::vector<FiniteGroup> groups;
  std::string all_bytes;
  for (const auto& p : paths) {
    const std::string bytes = read_text_file(p);
    all_bytes += p.filename().string() + "\n" + bytes;
    const auto doc = parse_json_text(bytes, p.string());
    try {
      groups.push_back(group_from_json(doc, opt.limits).group);
    } catch (const InputError& e) {
      throw InputError(p.string() + ": " + e.what());
    }
  }
  const auto outcomes = sweep(groups, *check, jobs, opt.limits);

  json items = json::array();
  std::size_t violating = 0;
  json san_not_t = json::array();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    if (!o.ok) ++violating;
    for (const auto& n : o.notes)
      if (n == "SAN but not T") san_not_t.push_back(o.group);
    items.push_back({{"file", paths[i].filename().string()},
                     {"group_name", o.group},
                     {"order", o.order},
                     {"verdict", o.ok ? "pass" : "fail"},
                     {"violations", o.violations},
                     {"notes", o.notes}});
  }
  json res{{"check", check_name},
           {"groups", outcomes.size()},
           {"violating_groups", violating},
           {"items", std::move(items)}};
  if (outcomes.empty()) res["note"] = "no group files found";
  if (*check == SweepCheck::implications) res["san_but_not_t"] = std::move(san_not_t);
  return {violating ? kFail : kPass, "catalog sweep " + check_name, input_digest(all_bytes),
          std::move(res)};
}

// Algebras -----------------------------------------------------------------------

struct AlgebraInput {
  StructureAlgebra algebra;
  std::string digest;
};

AlgebraInput load_algebra(const std::string& path, const Limits& limits) {
  const std::string bytes = read_text_file(path);
  const auto doc = parse_json_text(bytes, path);
  try {
    return {algebra_from_json(doc, limits), input_digest(bytes)};
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

json subspace_to_json(const Subspace& s) {
  json rows = json::array();
  for (const auto& v : s.basis()) rows.push_back(vector_to_json(v));
  return json{{"dimension", s.dimension()}, {"basis", std::move(rows)}};
}

json identity_json(const StructureAlgebra& a, bool& ok) {
  const auto v = check_identities(a);
  ok = !v;
  json out{{"kind", to_string(a.kind())}, {"verdict", ok ? "pass" : "fail"}};
  if (v)
    out["violation"] = {{"law", v->law}, {"triple", {v->i + 1, v->j + 1, v->k + 1}},
                        {"description", v->describe()}};
  return out;
}

Outcome cmd_lie_check(const std::string& path, const Options& opt) {
  const auto in = load_algebra(path, opt.limits);
  bool ok = false;
  json res{{"algebra", in.algebra.name()}, {"identities", identity_json(in.algebra, ok)}};
  return {ok ? kPass : kFail, "lie check", in.digest, std::move(res)};
}

Outcome cmd_lie_theorem_b(const std::string& path, const Options& opt) {
  const auto in = load_algebra(path, opt.limits);
  const auto& a = in.algebra;
  bool ok = false;
  json res{{"algebra", a.name()}, {"identities", identity_json(a, ok)}};
  if (!ok) return {kFail, "lie theorem-b", in.digest, std::move(res)};
  const auto dec = theorem_b_decompose(a);
  using Kind = TheoremBDecomposition::Kind;
  res["outcome"] = dec.kind == Kind::abelian ? "abelian" : dec.kind == Kind::decomposed ? "decomposed"
                                                                                       : "no-decomposition";
  int code = kPass;
  if (dec.kind == Kind::decomposed) {
    const auto act = scalar_action_check(a, *dec.ideal);
    json sigma = json::object();
    for (std::size_t i = 0; i < act.sigma.size(); ++i) sigma[a.labels()[i]] = format_scalar(act.sigma[i]);
    const bool round_trip = theorem_b_round_trip(a, dec);
    res["A"] = subspace_to_json(*dec.ideal);
    res["d"] = vector_to_json(dec.d);
    res["b"] = a.labels()[dec.pivot];
    res["beta"] = format_scalar(dec.beta);
    res["sigma"] = std::move(sigma);
    res["annihilator_codimension"] = act.annihilator_codimension;
    res["round_trip"] = round_trip ? "pass" : "fail";
    if (!round_trip || act.annihilator_codimension != 1) code = kFail;
  } else if (dec.kind == Kind::none) {
    res["reason"] = dec.reason;
  }
  return {code, "lie theorem-b", in.digest, std::move(res)};
}

Outcome cmd_example23(std::size_t n, const Options& opt) {
  const auto a = example_2_3_build(n, opt.limits);
  const auto cert = unique_abelian_certificate(a);
  json minors = json::array();
  for (const auto& m : cert.minors) minors.push_back(format_scalar(m));
  json res{{"n", n},
           {"algebra", algebra_to_json(a)},
           {"identities", cert.identities ? "pass" : "fail"},
           {"nilpotency_class_two", cert.class_two ? "pass" : "fail"},
           {"positive_definite", cert.positive_definite ? "pass" : "fail"},
           {"leading_minors", std::move(minors)},
           {"certificate", cert.ok() ? "pass" : "fail"}};
  return {cert.ok() ? kPass : kFail, "leibniz example23", input_digest("example23:" + std::to_string(n)),
          std::move(res)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subnormal-abelian-normal group checks and Lie/Leibniz algebra tools"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--report", opt.report_path, "Write the JSON report to this file instead of stdout");
  app.add_flag("--timing", opt.timing, "Record wall time in the report");
  app.add_option("--max-order", opt.limits.max_order, "Largest group order accepted")->capture_default_str();
  app.add_option("--max-order-bruteforce", opt.limits.max_subgroup_lattice,
                 "Largest order for subgroup-lattice enumeration")->capture_default_str();
  app.add_option("--max-aut-order", opt.limits.max_morphism_order,
                 "Largest order for automorphism and isomorphism search")->capture_default_str();
  app.add_option("--max-dim", opt.limits.max_dimension, "Largest algebra dimension")->capture_default_str();

  std::function<Outcome()> action;
  std::string path, kind, which, dir, check_name = "san-equivalence", out_dir;
  std::size_t max_order = 24, jobs = 1, n = 4;

  auto* analyze = app.add_subcommand("analyze", "Classify a group");
  analyze->add_option("path", path, "Group file")->required();
  analyze->callback([&] { action = [&] { return cmd_analyze(path, opt); }; });

  auto* check = app.add_subcommand("check", "Decide one predicate (exit 0 holds, 1 fails)");
  check->add_option("kind", kind, "san | tgroup | dedekind | supersolvable")
      ->required()
      ->check(CLI::IsMember({"san", "tgroup", "dedekind", "supersolvable"}));
  check->add_option("path", path, "Group file")->required();
  check->callback([&] { action = [&] { return cmd_check(kind, path, opt); }; });

  auto* thm = app.add_subcommand("theorem-a", "Structure-theorem conditions for a group");
  thm->add_option("path", path, "Group file")->required();
  thm->callback([&] { action = [&] { return cmd_theorem_a(path, opt); }; });

  auto* cor = app.add_subcommand("corollary", "Corollary condition reports");
  cor->add_option("which", which, "a2 | a3")->required()->check(CLI::IsMember({"a2", "a3"}));
  cor->add_option("path", path, "Group file")->required();
  cor->callback([&] { action = [&] { return cmd_corollary(which, path, opt); }; });

  auto* cat = app.add_subcommand("catalog", "Generate or sweep the group catalog");
  cat->require_subcommand(1);
  auto* gen = cat->add_subcommand("generate", "Write the catalog as group files");
  gen->add_option("--out", out_dir, "Output directory")->required();
  gen->add_option("--max-order", max_order, "Largest order in the catalog")->capture_default_str();
  gen->callback([&] { action = [&] { return cmd_generate(max_order, out_dir, opt); }; });
  auto* sw = cat->add_subcommand("sweep", "Run an invariant suite over a directory of group files");
  sw->add_option("dir", dir, "Directory of group files")->required();
  sw->add_option("--check", check_name, "san-equivalence | implications | theorem-a | oracles")
      ->capture_default_str();
  sw->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  sw->callback([&] { action = [&] { return cmd_sweep(dir, check_name, jobs, opt); }; });

  auto* lie = app.add_subcommand("lie", "Lie algebra checks");
  lie->require_subcommand(1);
  auto* lie_check = lie->add_subcommand("check", "Verify the defining identities");
  lie_check->add_option("path", path, "Algebra file")->required();
  lie_check->callback([&] { action = [&] { return cmd_lie_check(path, opt); }; });
  auto* lie_b = lie->add_subcommand("theorem-b", "Find L = A + Qd with [d, a] = a");
  lie_b->add_option("path", path, "Algebra file")->required();
  lie_b->callback([&] { action = [&] { return cmd_lie_theorem_b(path, opt); }; });

  auto* leib = app.add_subcommand("leibniz", "Leibniz algebra examples");
  leib->require_subcommand(1);
  auto* ex = leib->add_subcommand("example23", "Build the class-two example and certify it");
  ex->add_option("--n", n, "Number of v basis vectors")->capture_default_str();
  ex->callback([&] { action = [&] { return cmd_example23(n, opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome out = action();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit(opt, std::move(out), seconds);
  } catch (const InputError& e) {
    std::cerr << "santool: " << e.what() << "\n";
  } catch (const CapExceeded& e) {
    std::cerr << "santool: cap exceeded: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    std::cerr << "santool: " << e.what() << "\n";
  } catch (const json::exception& e) {
    std::cerr << "santool: " << e.what() << "\n";
  }
  return kInputError;
}

#include "sanlib/io.hpp"

#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace sanlib {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw InputError("field " + field + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path.empty() ? "<root>" : path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::size_t as_count(const json& v, const std::string& path, std::size_t lo, std::size_t hi) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  const auto x = v.get<long long>();
  if (x < static_cast<long long>(lo) || x > static_cast<long long>(hi))
    fail(path, "value " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " +
                   std::to_string(hi) + "]");
  return static_cast<std::size_t>(x);
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  return v;
}

std::string idx(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

}  // namespace

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(source + ": line " + std::to_string(line) + ", column " + std::to_string(col) +
                     ": invalid JSON");
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec))
    throw InputError(path.string() + ": is a directory, expected a file");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Groups -----------------------------------------------------------------------------

LoadedGroup group_from_json(const json& doc, const Limits& limits) {
  if (!doc.is_object()) fail("<root>", "expected an object");
  std::string name = "G";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail("name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  const auto& enc = member(doc, "encoding", "");
  if (!enc.is_string()) fail("encoding", "expected a string");
  const auto encoding = enc.get<std::string>();
  if (encoding != "cayley" && encoding != "permutation")
    fail("encoding", "expected \"cayley\" or \"permutation\"");
  const bool has_cayley = doc.contains("cayley"), has_perm = doc.contains("permutation");
  if (has_cayley && has_perm) fail("<root>", "both cayley and permutation bodies present");

  if (encoding == "cayley") {
    if (!has_cayley) fail("cayley", "missing");
    const auto& body = doc["cayley"];
    const std::size_t order = as_count(member(body, "order", "cayley"), "cayley.order", 1, limits.max_order);
    const auto& rows = as_array(member(body, "table", "cayley"), "cayley.table");
    if (rows.size() != order) fail("cayley.table", "expected " + std::to_string(order) + " rows");
    std::vector<Element> table;
    table.reserve(order * order);
    for (std::size_t i = 0; i < order; ++i) {
      const auto path = idx("cayley.table", i);
      const auto& row = as_array(rows[i], path);
      if (row.size() != order) fail(path, "expected " + std::to_string(order) + " entries");
      for (std::size_t j = 0; j < order; ++j)
        table.push_back(static_cast<Element>(as_count(row[j], idx(path, j), 0, order - 1)));
    }
    if (auto v = validate_table(order, table)) fail("cayley.table", v->describe());
    return LoadedGroup{FiniteGroup(name, order, std::move(table), limits), 0, {}};
  }

  if (!has_perm) fail("permutation", "missing");
  const auto& body = doc["permutation"];
  const std::size_t degree = as_count(member(body, "degree", "permutation"), "permutation.degree", 1, 64);
  const auto& gens = as_array(member(body, "generators", "permutation"), "permutation.generators");
  std::vector<Permutation> perms;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto gpath = idx("permutation.generators", g);
    Permutation p(degree);
    std::iota(p.begin(), p.end(), 0u);
    std::set<std::size_t> used;
    const auto& cycles = as_array(gens[g], gpath);
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      const auto cpath = idx(gpath, c);
      const auto& cycle = as_array(cycles[c], cpath);
      std::vector<std::size_t> pts;
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        const std::size_t pt = as_count(cycle[k], idx(cpath, k), 1, degree) - 1;
        if (!used.insert(pt).second) fail(idx(cpath, k), "point repeated within generator");
        pts.push_back(pt);
      }
      for (std::size_t k = 0; k < pts.size(); ++k)
        p[pts[k]] = static_cast<std::uint32_t>(pts[(k + 1) % pts.size()]);
    }
    perms.push_back(std::move(p));
  }
  try {
    auto pg = from_permutations(name, degree, perms, limits);
    return LoadedGroup{std::move(pg.group), degree, std::move(pg.elements)};
  } catch (const PreconditionError& e) {
    fail("permutation.generators", e.what());
  }
}

LoadedGroup read_group_file(const std::filesystem::path& path, const Limits& limits) {
  const auto doc = parse_json_text(read_text_file(path), path.string());
  try {
    return group_from_json(doc, limits);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

json group_to_json(const FiniteGroup& g) {
  json rows = json::array();
  for (Element i = 0; i < g.order(); ++i) {
    json row = json::array();
    for (Element j = 0; j < g.order(); ++j) row.push_back(g.mul(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"name", g.name()},
              {"encoding", "cayley"},
              {"cayley", {{"order", g.order()}, {"table", std::move(rows)}}}};
}

// Algebras ------------------------------------------------------------------------------

StructureAlgebra algebra_from_json(const json& doc, const Limits& limits) {
  if (!doc.is_object()) fail("<root>", "expected an object");
  std::string name = "L";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail("name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  const auto& kind_v = member(doc, "kind", "");
  if (!kind_v.is_string()) fail("kind", "expected a string");
  const auto kind_s = kind_v.get<std::string>();
  if (kind_s != "lie" && kind_s != "leibniz") fail("kind", "expected \"lie\" or \"leibniz\"");
  const AlgebraKind kind = kind_s == "lie" ? AlgebraKind::lie : AlgebraKind::leibniz;
  const std::size_t dim = as_count(member(doc, "dimension", ""), "dimension", 1, limits.max_dimension);

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const auto& ls = as_array(doc["labels"], "labels");
    if (ls.size() != dim) fail("labels", "expected " + std::to_string(dim) + " labels");
    for (std::size_t i = 0; i < dim; ++i) {
      if (!ls[i].is_string()) fail(idx("labels", i), "expected a string");
      labels.push_back(ls[i].get<std::string>());
    }
  }

  std::vector<BracketEntry> entries;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  const auto& brs = as_array(member(doc, "brackets", ""), "brackets");
  for (std::size_t b = 0; b < brs.size(); ++b) {
    const auto path = idx("brackets", b);
    const std::size_t i = as_count(member(brs[b], "i", path), path + ".i", 1, dim) - 1;
    const std::size_t j = as_count(member(brs[b], "j", path), path + ".j", 1, dim) - 1;
    if (!seen.insert({i, j}).second) fail(path, "pair listed twice");
    Vector result(dim, Scalar(0));
    const auto& terms = as_array(member(brs[b], "result", path), path + ".result");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const auto tpath = idx(path + ".result", t);
      const std::size_t k = as_count(member(terms[t], "k", tpath), tpath + ".k", 1, dim) - 1;
      const auto& c = member(terms[t], "coeff", tpath);
      std::string text;
      if (c.is_string()) text = c.get<std::string>();
      else if (c.is_number_integer()) text = std::to_string(c.get<long long>());
      else fail(tpath + ".coeff", "expected a rational as text");
      try {
        result[k] += parse_scalar(text);
      } catch (const std::invalid_argument& e) {
        fail(tpath + ".coeff", e.what());
      }
    }
    entries.push_back({i, j, std::move(result)});
  }
  return StructureAlgebra(name, kind, dim, entries, std::move(labels), limits);
}

StructureAlgebra read_algebra_file(const std::filesystem::path& path, const Limits& limits) {
  const auto doc = parse_json_text(read_text_file(path), path.string());
  try {
    return algebra_from_json(doc, limits);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

json algebra_to_json(const StructureAlgebra& a) {
  const std::size_t n = a.dimension();
  json brackets = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      json result = json::array();
      for (std::size_t k = 0; k < n; ++k)
        if (a.constant(i, j, k) != 0)
          result.push_back({{"k", k + 1}, {"coeff", format_scalar(a.constant(i, j, k))}});
      if (!result.empty()) brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"result", std::move(result)}});
    }
  return json{{"name", a.name()},
              {"kind", to_string(a.kind())},
              {"dimension", n},
              {"labels", a.labels()},
              {"brackets", std::move(brackets)}};
}

// Reports ---------------------------------------------------------------------------------

std::string input_digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (done[s] || p[s] == s) continue;
    out += "(";
    for (std::size_t x = s; !done[x]; x = p[x]) {
      done[x] = 1;
      if (x != s) out += " ";
      out += std::to_string(x + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

json subgroup_to_json(const Subgroup& s, const LoadedGroup* source) {
  json out{{"order", s.order()}, {"elements", s.elements()}};
  if (source && !source->permutations.empty()) {
    json pts = json::array();
    for (Element e : s.elements()) pts.push_back(cycle_notation(source->permutations[e]));
    out["points"] = std::move(pts);
  }
  return out;
}

json check_item_to_json(const CheckItem& item, const LoadedGroup* source) {
  json w = json::array();
  for (const auto& n : item.witnesses) {
    json s = subgroup_to_json(n.subgroup, source);
    s["role"] = n.role;
    w.push_back(std::move(s));
  }
  return json{{"check", item.id},
              {"statement", item.statement},
              {"verdict", std::string(to_string(item.verdict))},
              {"detail", item.detail},
              {"witnesses", std::move(w)}};
}

json condition_report_to_json(const ConditionReport& rep, const LoadedGroup* source) {
  json items = json::array();
  for (const auto& c : rep.items) items.push_back(check_item_to_json(c, source));
  json out{{"report", rep.name}, {"applicable", rep.applicable}, {"items", std::move(items)}};
  if (!rep.applicable) out["gate_reason"] = rep.gate_reason;
  return out;
}

json classification_to_json(const ClassificationReport& r, const LoadedGroup* source) {
  json out{{"group_name", r.group_name},
           {"order", r.order},
           {"prime_spectrum", r.prime_spectrum},
           {"is_abelian", r.is_abelian},
           {"is_dedekind", r.is_dedekind},
           {"is_t_group", r.is_t_group},
           {"is_san", r.is_san},
           {"is_supersolvable", r.is_supersolvable},
           {"is_nilpotent", r.is_nilpotent},
           {"is_solvable", r.is_solvable},
           {"baer_radical_order", r.baer_radical_order},
           {"fitting_order", r.fitting_order},
           {"nilpotent_residual_order", r.nilpotent_residual_order}};
  out["t_witness"] = r.t_witness ? subgroup_to_json(*r.t_witness, source) : json(nullptr);
  out["san_witness"] = r.san_witness ? subgroup_to_json(*r.san_witness, source) : json(nullptr);
  return out;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(format_scalar(x));
  return out;
}

json make_report(const std::string& command, const std::string& digest, json results) {
  return json{{"tool", kToolName},
              {"version", kToolVersion},
              {"command", command},
              {"input_digest", digest},
              {"results", std::move(results)}};
}

}  // namespace sanlib

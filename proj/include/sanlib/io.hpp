#pragma once

// JSON documents read and written by the command-line tool: group files,
// algebra files and reports.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "sanlib/algebra.hpp"
#include "sanlib/classify.hpp"
#include "sanlib/construct.hpp"
#include "sanlib/group.hpp"

namespace sanlib {

/// Malformed input; the message names the line or field at fault.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A group read from a file, with the permutation images of its elements
/// when the file used the permutation encoding.
struct LoadedGroup {
  FiniteGroup group;
  std::size_t degree = 0;
  std::vector<Permutation> permutations;  // empty for cayley input
};

/// Parses JSON text, turning syntax errors into "line L, column C" messages.
nlohmann::json parse_json_text(const std::string& text, const std::string& source);
std::string read_text_file(const std::filesystem::path& path);

LoadedGroup group_from_json(const nlohmann::json& doc, const Limits& limits = {});
LoadedGroup read_group_file(const std::filesystem::path& path, const Limits& limits = {});
/// Cayley encoding.
nlohmann::json group_to_json(const FiniteGroup& g);

StructureAlgebra algebra_from_json(const nlohmann::json& doc, const Limits& limits = {});
StructureAlgebra read_algebra_file(const std::filesystem::path& path, const Limits& limits = {});
nlohmann::json algebra_to_json(const StructureAlgebra& a);

/// 64-bit FNV-1a of the bytes, as "fnv1a64:<16 hex digits>".
std::string input_digest(const std::string& bytes);

/// Cycle notation with 1-based points, "()" for the identity.
std::string cycle_notation(const Permutation& p);

// Report pieces ----------------------------------------------------------------

inline constexpr const char* kToolName = "santool";
inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json subgroup_to_json(const Subgroup& s, const LoadedGroup* source = nullptr);
nlohmann::json check_item_to_json(const CheckItem& item, const LoadedGroup* source = nullptr);
nlohmann::json condition_report_to_json(const ConditionReport& rep,
                                        const LoadedGroup* source = nullptr);
nlohmann::json classification_to_json(const ClassificationReport& rep,
                                      const LoadedGroup* source = nullptr);
nlohmann::json vector_to_json(const Vector& v);

/// {"tool", "version", "command", "input_digest", "results"}.
nlohmann::json make_report(const std::string& command, const std::string& digest,
                           nlohmann::json results);

}  // namespace sanlib

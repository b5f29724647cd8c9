#pragma once

#include "pascal/groups.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

// Group-spec documents: a JSON object with "group", "generators" and an
// optional "close_under_inversion" flag. See docs/FORMATS.md for the grammar.

namespace pascal {

/// Optional automaton parameters a document may suggest.
struct AutomatonHints {
  std::optional<std::size_t> train_radius;
  std::optional<std::size_t> cone_radius;
};

struct SpecDocument {
  std::string name;  // "name" key, else the origin
  GroupSpec spec;
  GenSet gens;
  AutomatonHints hints;
};

/// Throws ParseError naming the origin and a JSON pointer (or byte offset for
/// syntax errors). Generating-set invariant failures are ParseErrors too.
SpecDocument parse_spec(const std::string& text, const std::string& origin = "<input>");
SpecDocument load_spec_file(const std::filesystem::path& path);

/// Presets are `<name>.json` files in `dir`.
SpecDocument load_preset(const std::string& name, const std::filesystem::path& dir);
std::vector<std::string> preset_names(const std::filesystem::path& dir);

/// A value in the document encoding, e.g. "[1,-2]" for Z^2 or "\"xxY\"" for a free group.
GroupValue parse_value(const GroupSpec& spec, const std::string& json_text);
/// The document encoding of `v`, compact.
std::string value_json(const GroupSpec& spec, const GroupValue& v);

}  // namespace pascal

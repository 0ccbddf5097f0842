#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "compactum/geometry.hpp"
#include "compactum/group.hpp"
#include "compactum/presentation.hpp"

namespace compactum {

/// Parses a group spec document. Syntax errors throw ParseError with the
/// line and column; structural problems throw ValidationError. Table specs
/// are also run through make_group, whose error (NoIdentity, ...) is rethrown.
GroupSpec parse_group_spec(std::string_view json_text);
GroupSpec load_group_file(const std::filesystem::path& path);

/// Compact JSON with a fixed key order; parse_group_spec inverts it.
std::string group_spec_json(const GroupSpec& spec);

/// `gen <n> = <label>` lines, then `rel <n>: g<i> ...` lines.
std::string presentation_text(const TrianglePresentation& p, const GroupOracle& g);

/// Inverse of presentation_text. Generator values are recomputed from the
/// sequence and must match the listed labels. The text does not record how
/// many rounds produced it, so rounds_completed is left at 0.
TrianglePresentation parse_presentation(std::string_view text, const GroupOracle& g);

/// Scene file: meta object, then one primitive per line, sorted by label.
std::string scene_json(const Scene4& s);
Scene4 parse_scene(std::string_view json_text);
Scene4 load_scene_file(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
/// Writes bytes verbatim (no newline translation).
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace compactum

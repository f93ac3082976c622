#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyunion/constructions.hpp"
#include "polyunion/disjunction.hpp"
#include "polyunion/polytope.hpp"

namespace polyunion {

// Text format:
//
//   H <d> <m>            or   V <d> <n>
//   #<directive> ...     zero or more, kept verbatim and in order
//   r_1 ... r_k [#note]  m (or n) data rows of canonical rationals
//
// H rows are a_1 ... a_d b meaning a x <= b. The directive `#equations k`
// marks the last k rows as equations a x = b. Text after '#' on a data row
// is a per-row annotation (used for `#color j`).
struct PolyFile {
  char kind = 'H';
  std::size_t dim = 0;
  std::vector<std::string> directives;   // without the leading '#'
  std::vector<QVec> rows;
  std::vector<std::string> annotations;  // one per row, empty for none

  friend bool operator==(const PolyFile&, const PolyFile&) = default;
};

/// Throws InputError naming the offending line.
PolyFile parse_polyfile(std::string_view text);
std::string format_polyfile(const PolyFile& file);

nlohmann::json polyfile_to_json(const PolyFile& file);
PolyFile polyfile_from_json(const nlohmann::json& j);

/// First directive starting with `key` followed by a space or end of line;
/// returns the remainder (trimmed). Empty optional when absent.
std::optional<std::string> find_directive(const PolyFile& file, std::string_view key);
std::vector<std::string> find_directives(const PolyFile& file, std::string_view key);

PolyFile to_polyfile(const HRep& h);
PolyFile to_polyfile(const VRep& v);
HRep hrep_from(const PolyFile& file);
VRep vrep_from(const PolyFile& file);

PolyFile to_polyfile(const ColoredHRep& c);
ColoredHRep colored_from(const PolyFile& file);

/// `#vars x:d x1:d lambda:1` header.
PolyFile to_polyfile(const DisjunctiveEF& ef);
/// `#vars x:d lambda:1`, `#integral lambda`, `#bigm1 ...`, `#bigm2 ...`.
PolyFile to_polyfile(const MipRep& rep);

/// Appends `#basis`, `#u` (one line per vector), `#nu` and
/// `#scale_exponent` directives.
void attach_perturbation(PolyFile& file, const PerturbationData& pert);
PerturbationData perturbation_from(const PolyFile& file);

std::string read_file(const std::filesystem::path& path);
/// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace polyunion

#ifndef SGRP_JSON_IO_HPP
#define SGRP_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "sgrp/kr.hpp"
#include "sgrp/semigroup.hpp"

namespace sgrp {

/// Interchange format:
///   {"order": n, "table": [[...]], "names": [...], "generators": {"a": 0}}
/// "names" and "generators" are optional; "adjoined_identity" is an optional
/// extension recording the index flagged by adjoin_identity.
struct LoadedSemigroup {
  SemigroupPtr semigroup;
  std::optional<GeneratingMap> gens;
};

LoadedSemigroup semigroup_from_json(nlohmann::json const& j);
LoadedSemigroup semigroup_from_file(std::string const& path);

nlohmann::json semigroup_to_json(FiniteSemigroup const& s,
                                 GeneratingMap const* gens = nullptr);

/// Sidecar for a serialized expansion: projection to the base, class of each
/// letter and the representative word of each class.
nlohmann::json expansion_sidecar_json(KrExpansion const& exp);

/// "fnv1a64:<hex>" over raw bytes.
std::string content_hash(std::string const& data);

/// Whole file as a string; throws Error when unreadable.
std::string read_file(std::string const& path);

void write_file(std::string const& path, std::string const& data);

}  // namespace sgrp

#endif  // SGRP_JSON_IO_HPP

#pragma once

#include <utility>

#include <json.hpp>

#include "ptw/cpair.hpp"
#include "ptw/fc_matrix.hpp"
#include "ptw/nat_cong.hpp"
#include "ptw/oracle.hpp"
#include "ptw/partition.hpp"
#include "ptw/twisted.hpp"

// JSON forms used by the command line tool and the test corpus:
//   partition    [[1,-1],[2,-2]]           signed labels, lower row negated
//   element      {"i": 3, "p": [...]}      or the string "zero"
//   nat cong     {"min": 2, "per": 3}      or the string "trivial"
//   row spec     {"prefix": ["D","mu"], "tail": "R"}
//   C-pair       {"n", "theta", "rows", "exceptional"}
//   matrix       {"n", "d", "rows"}        rows[q] lists the rank-q tokens
//   relation     {"classes": [[0,4],[1],...]}, least members ascending
//   lattice      {"n", "d", "nodes", "hasse", "rees"}
// Parsers throw std::invalid_argument on malformed input.

namespace ptw::io {

nlohmann::json partition_to_json(const Partition& a);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const TwistedElement& x);
TwistedElement element_from_json(const nlohmann::json& j);

nlohmann::json natcong_to_json(const NatCong& c);
NatCong natcong_from_json(const nlohmann::json& j);

nlohmann::json rowspec_to_json(const RowSpec& r);
RowSpec rowspec_from_json(const nlohmann::json& j);

nlohmann::json cpair_to_json(const CPair& P, bool exceptional);
std::pair<CPair, bool> cpair_from_json(const nlohmann::json& j);

nlohmann::json fc_to_json(const FCMatrix& M);
FCMatrix fc_from_json(const nlohmann::json& j);

nlohmann::json relation_to_json(const CongRelation& r);
CongRelation relation_from_json(const nlohmann::json& j, int size);

nlohmann::json lattice_to_json(const Lattice& L);

}  // namespace ptw::io

#ifndef SRK_JSON_IO_HPP_
#define SRK_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "srk/srcode.hpp"

namespace srk::json_io {

using srcode::FieldPtr;
using srcode::SumRankCode;

nlohmann::json field_to_json(const gf::Field& f);
FieldPtr field_from_json(const nlohmann::json& j);

// {"field": ..., "profile": [...], "k": ..., "G": [[...]]}
nlohmann::json code_to_json(const SumRankCode& c);
SumRankCode code_from_json(const nlohmann::json& j);

// full metric report: d, msrd, one-weight, rank-profile, nondegeneracy,
// dual distance flag, weight distribution (codeword and projective counts)
nlohmann::json analyze_report(const SumRankCode& c, unsigned workers,
                              std::uint64_t budget);

// "weight,count\n" rows sorted by weight (codeword counts)
std::string weight_csv(const SumRankCode& c, unsigned workers,
                       std::uint64_t budget);

// stable dump used by every artifact writer: sorted keys, 2-space indent,
// trailing newline
std::string dump(const nlohmann::json& j);

extern const char* const kVersion;

}  // namespace srk::json_io

#endif  // SRK_JSON_IO_HPP_

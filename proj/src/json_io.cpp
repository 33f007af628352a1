#include "srk/json_io.hpp"

#include <sstream>

#include "srk/error.hpp"

namespace srk::json_io {

using nlohmann::json;

const char* const kVersion = "1.0.0";

json field_to_json(const gf::Field& f) {
  return json{{"p", f.p()},
              {"e", f.e()},
              {"m", f.m()},
              {"modulus", f.modulus()}};
}

FieldPtr field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("e") || !j.contains("m"))
    throw Error("BadSchema", "field object needs p, e, m");
  std::vector<unsigned> mod;
  if (j.contains("modulus")) mod = j.at("modulus").get<std::vector<unsigned>>();
  return gf::make_field(j.at("p").get<unsigned>(), j.at("e").get<unsigned>(),
                        j.at("m").get<unsigned>(), std::move(mod));
}

json code_to_json(const SumRankCode& c) {
  json rows = json::array();
  for (unsigned r = 0; r < c.k; ++r) rows.push_back(c.G.row(r));
  return json{{"field", field_to_json(*c.field)},
              {"profile", c.profile.lengths},
              {"k", c.k},
              {"G", rows}};
}

SumRankCode code_from_json(const json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("profile") ||
      !j.contains("k") || !j.contains("G"))
    throw Error("BadSchema", "code object needs field, profile, k, G");
  auto f = field_from_json(j.at("field"));
  srcode::BlockProfile prof(j.at("profile").get<std::vector<unsigned>>());
  unsigned k = j.at("k").get<unsigned>();
  const auto& rows = j.at("G");
  if (!rows.is_array() || rows.size() != k)
    throw Error("BadSchema", "G must have k rows");
  fqlin::FqmMatrix G(f, k, prof.N());
  for (unsigned r = 0; r < k; ++r) {
    auto row = rows.at(r).get<std::vector<std::uint64_t>>();
    if (row.size() != prof.N()) throw Error("BadSchema", "row length != N");
    for (unsigned c2 = 0; c2 < prof.N(); ++c2) {
      if (row[c2] >= f->size()) throw Error("BadSchema", "entry out of range");
      G.at(r, c2) = gf::Fel(row[c2]);
    }
  }
  return SumRankCode(f, prof, G);
}

json analyze_report(const SumRankCode& c, unsigned workers,
                    std::uint64_t budget) {
  auto wd = srcode::weight_distribution(c, workers, budget);
  std::uint64_t scale = c.field->size() - 1;
  json dist = json::object(), proj = json::object();
  for (const auto& [w, cnt] : wd) {
    dist[std::to_string(w)] = cnt;
    proj[std::to_string(w)] = cnt / scale;
  }
  unsigned d = wd.begin()->first;
  auto ow = srcode::is_one_weight(c, workers, budget);
  auto rp = srcode::constant_rank_profile(c, budget);
  // d(dual) > 1 is equivalent to nondegeneracy, so no dual sweep is needed
  bool nondeg = srcode::is_nondegenerate(c);
  json r{{"field", field_to_json(*c.field)},
         {"k", c.k},
         {"profile", c.profile.lengths},
         {"N", c.N()},
         {"d", d},
         {"msrd", d == c.N() - c.k + 1},
         {"one_weight", ow ? json(*ow) : json(nullptr)},
         {"constant_rank_profile", rp ? json(*rp) : json(nullptr)},
         {"nondegenerate", nondeg},
         {"dual_distance_gt1", nondeg},
         {"weight_distribution", dist},
         {"weight_distribution_projective", proj},
         {"version", kVersion}};
  return r;
}

std::string weight_csv(const SumRankCode& c, unsigned workers,
                       std::uint64_t budget) {
  auto wd = srcode::weight_distribution(c, workers, budget);
  std::ostringstream out;
  out << "weight,count\n";
  for (const auto& [w, cnt] : wd) out << w << ',' << cnt << '\n';
  return out.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace srk::json_io

#include "sumrank.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include <json.hpp>

#include "srk/constructions.hpp"
#include "srk/hamming_ext.hpp"
#include "srk/json_io.hpp"

using nlohmann::json;
using namespace srk;

struct srk_code {
  srcode::SumRankCode code;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& kind, const std::string& msg) {
  if (err) *err = dup_string(json_io::dump(json{{"kind", kind}, {"message", msg}}));
}

int status_for(const Error& e) {
  std::string k = e.kind();
  if (k.size() >= 8 && k.compare(k.size() - 8, 8, "TooLarge") == 0)
    return SRK_BUDGET;
  return SRK_INVALID;
}

template <typename Fn>
int wrap(char** err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    set_err(err, e.kind(), e.what());
    return status_for(e);
  } catch (const json::exception& e) {
    set_err(err, "BadSchema", e.what());
    return SRK_INVALID;
  } catch (const std::exception& e) {
    set_err(err, "Internal", e.what());
    return SRK_INVALID;
  }
}

gf::FieldPtr field_from_params(const json& p) {
  if (p.contains("field")) return json_io::field_from_json(p.at("field"));
  unsigned m = p.at("m").get<unsigned>();
  std::vector<unsigned> mod;
  if (p.contains("modulus")) mod = p.at("modulus").get<std::vector<unsigned>>();
  if (p.contains("p")) {
    unsigned pp = p.at("p").get<unsigned>();
    unsigned e = p.value("e", 1u);
    return gf::make_field(pp, e, m, std::move(mod));
  }
  // q given as the subfield size: factor q = p^e
  std::uint64_t q = p.at("q").get<std::uint64_t>();
  if (q < 2) throw Error("BadParameter", "q must be at least 2");
  unsigned prime = 2;
  while (q % prime != 0) ++prime;
  unsigned e = 0;
  std::uint64_t r = q;
  while (r > 1) {
    if (r % prime != 0) throw Error("BadParameter", "q is not a prime power");
    r /= prime;
    ++e;
  }
  if (p.contains("e") && p.at("e").get<unsigned>() != e)
    throw Error("BadParameter", "e does not match q");
  return gf::make_field(prime, e, m, std::move(mod));
}

srcode::SumRankCode construct(const json& p) {
  std::string family = p.at("family").get<std::string>();
  auto f = field_from_params(p);
  unsigned s = p.value("sigma_power", 1u);
  unsigned k = p.value("k", 2u);
  if (family == "lrs" || family == "doubly_extended_lrs") {
    unsigned t = p.value("t", unsigned(f->q() - 1));
    unsigned n = p.value("n", f->m());
    auto pair = constructions::default_pair(f, s, t, n);
    if (family == "lrs") return constructions::lrs(k, pair);
    gf::Fel gamma = gf::Fel(p.value("gamma", 1u));
    gf::Fel delta = gf::Fel(p.value("delta", 1u));
    return constructions::doubly_extended_lrs(k, pair, gamma, delta);
  }
  if (family == "two_fold_lrs") {
    std::vector<gf::Fel> H;
    if (p.contains("H_basis")) {
      for (auto x : p.at("H_basis").get<std::vector<std::uint64_t>>())
        H.push_back(gf::Fel(x));
    } else {
      for (unsigned i = 0; i + 1 < f->m(); ++i) H.push_back(f->pow(f->z(), i));
    }
    gf::Fel delta = p.contains("delta") ? gf::Fel(p.at("delta").get<unsigned>())
                                        : f->pow(f->z(), f->m() - 1);
    return constructions::two_fold_lrs(f, H, delta);
  }
  if (family == "twisted_lrs" || family == "complete_twisted") {
    unsigned t = p.value("t", 1u);
    auto C = constructions::twisted_lrs_default(f, s, t);
    if (family == "twisted_lrs") return C;
    return geometry::phi(constructions::complete_twisted(geometry::psi(C)));
  }
  if (family == "simplex") {
    std::vector<gf::Fel> pp;
    if (p.contains("p_poly"))
      for (auto x : p.at("p_poly").get<std::vector<std::uint64_t>>())
        pp.push_back(gf::Fel(x));
    auto G = constructions::singer(f, k, pp);
    if (!p.contains("U_basis"))
      throw Error("BadParameter", "simplex needs U_basis");
    std::vector<fqlin::Vec> rows;
    for (const auto& rj : p.at("U_basis")) {
      auto row = rj.get<std::vector<std::uint64_t>>();
      if (row.size() != k) throw Error("BadParameter", "U_basis row length != k");
      fqlin::Vec v;
      for (auto x : row) {
        if (x >= f->size()) throw Error("BadParameter", "element out of range");
        v.push_back(gf::Fel(x));
      }
      rows.push_back(v);
    }
    fqlin::FqSubspace U(f, k, rows);
    if (U.dim() == 0) throw Error("BadParameter", "U_basis spans nothing");
    return constructions::simplex(G, U);
  }
  throw Error("BadParameter", "unknown family: " + family);
}

std::string vec_str(const fqlin::Vec& v) {
  std::ostringstream o;
  for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
  return o.str();
}

json run_check(const std::string& name, const srcode::SumRankCode& C,
               unsigned workers, std::uint64_t budget) {
  json r{{"pass", true}};
  const auto& F = C.field;
  if (name == "duality") {
    auto U = geometry::psi(C);
    for (const auto& v : fqlin::enum_projective(F, C.k)) {
      auto rd = srcode::sum_rank_weight(*F, C.profile, fqlin::mat_vec(v, C.G));
      unsigned sections = 0;
      for (unsigned d : geometry::dimension_list(U, v)) sections += d;
      if (!geometry::verify_duality(C, v) ||
          rd.weight + sections != C.N()) {
        r["pass"] = false;
        r["counterexample"] = vec_str(v);
        break;
      }
    }
  } else if (name == "geometry-msrd") {
    bool a = geometry::geometric_msrd(geometry::psi(C), budget);
    bool b = srcode::is_msrd(C, workers, budget);
    r["geometric"] = a;
    r["metric"] = b;
    r["pass"] = (a == b);
  } else if (name == "ext-formula") {
    auto GE = hamming_ext::g_ext(C);
    for (const auto& v : fqlin::enum_projective(F, C.k)) {
      auto rd = srcode::sum_rank_weight(*F, C.profile, fqlin::mat_vec(v, C.G));
      auto direct = hamming_ext::hamming_weight(fqlin::mat_vec(v, GE));
      if (hamming_ext::hamming_weight_formula(rd.rank_list, C.profile, F->q()) !=
          direct) {
        r["pass"] = false;
        r["counterexample"] = vec_str(v);
        break;
      }
    }
  } else if (name == "bonisoli") {
    auto rp = srcode::constant_rank_profile(C, budget);
    unsigned n0 = C.profile.lengths[0];
    bool equal = true;
    for (unsigned ni : C.profile.lengths) equal = equal && ni == n0;
    if (!rp || !equal) {
      r["pass"] = false;
      r["counterexample"] = "code lacks a constant rank-profile on equal-length blocks";
    } else {
      auto d = hamming_ext::bonisoli_constraints(F->q(), F->m(), C.k, n0,
                                                 C.profile.t(), *rp);
      r["ell"] = {{"num", d.ell_num}, {"den", d.ell_den}};
      r["pass"] = d.ok();
      if (!d.ok()) r["counterexample"] = "arithmetic constraints violated";
    }
  } else if (name == "line-cover") {
    if (C.k != 2) {
      r["pass"] = false;
      r["counterexample"] = "line cover is defined for k = 2";
    } else {
      r["pass"] = geometry::covers_line(geometry::multi_weight(geometry::psi(C)));
      if (!r["pass"].get<bool>())
        r["counterexample"] = "some point of PG(1,q^m) is uncovered";
    }
  } else {
    throw Error("BadParameter", "unknown check: " + name);
  }
  return r;
}

}  // namespace

extern "C" {

const char* srk_version(void) { return json_io::kVersion; }

void srk_string_free(char* s) { std::free(s); }

void srk_code_free(srk_code* c) { delete c; }

int srk_construct(const char* params_json, srk_code** out, char** err) {
  return wrap(err, [&] {
    if (!params_json || !out) throw Error("BadParameter", "null argument");
    auto p = json::parse(params_json);
    *out = new srk_code{construct(p)};
    return SRK_OK;
  });
}

int srk_code_parse(const char* code_json, srk_code** out, char** err) {
  return wrap(err, [&] {
    if (!code_json || !out) throw Error("BadParameter", "null argument");
    *out = new srk_code{json_io::code_from_json(json::parse(code_json))};
    return SRK_OK;
  });
}

int srk_code_serialize(const srk_code* c, char** out_json, char** err) {
  return wrap(err, [&] {
    if (!c || !out_json) throw Error("BadParameter", "null argument");
    *out_json = dup_string(json_io::dump(json_io::code_to_json(c->code)));
    return SRK_OK;
  });
}

int srk_analyze(const srk_code* c, unsigned workers, uint64_t budget,
                char** report_json, char** err) {
  return wrap(err, [&] {
    if (!c || !report_json) throw Error("BadParameter", "null argument");
    *report_json =
        dup_string(json_io::dump(json_io::analyze_report(c->code, workers, budget)));
    return SRK_OK;
  });
}

int srk_weight_csv(const srk_code* c, unsigned workers, uint64_t budget,
                   char** out_csv, char** err) {
  return wrap(err, [&] {
    if (!c || !out_csv) throw Error("BadParameter", "null argument");
    *out_csv = dup_string(json_io::weight_csv(c->code, workers, budget));
    return SRK_OK;
  });
}

int srk_verify(const srk_code* c, const char* checks, unsigned workers,
               uint64_t budget, char** report_json, char** err) {
  return wrap(err, [&] {
    if (!c || !checks || !report_json)
      throw Error("BadParameter", "null argument");
    json report{{"checks", json::object()}, {"pass", true}};
    std::stringstream ss(checks);
    std::string name;
    bool any = false;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) continue;
      any = true;
      json r = run_check(name, c->code, workers, budget);
      if (!r.at("pass").get<bool>()) report["pass"] = false;
      report["checks"][name] = std::move(r);
    }
    if (!any) throw Error("BadParameter", "no checks requested");
    *report_json = dup_string(json_io::dump(report));
    return report.at("pass").get<bool>() ? SRK_OK : SRK_VERIFY_FAILED;
  });
}

int srk_search(const char* params_json, char** out_csv, char** err) {
  return wrap(err, [&] {
    if (!params_json || !out_csv) throw Error("BadParameter", "null argument");
    auto p = json::parse(params_json);
    std::uint64_t q = p.at("q").get<std::uint64_t>();
    unsigned m = p.at("m").get<unsigned>();
    unsigned t = p.at("t").get<unsigned>();
    if (q < 2 || m < 1 || m > 6 || t < 1 || t > 64)
      throw Error("BadParameter", "search space out of range");
    std::ostringstream out;
    out << "q,m,t,profile,status,detail\n";
    std::uint64_t qm = 1;
    for (unsigned i = 0; i < m; ++i) qm *= q;
    auto emit = [&](const std::string& prof, const std::string& status,
                    const std::string& detail) {
      out << q << ',' << m << ',' << t << ',' << prof << ',' << status << ','
          << detail << '\n';
    };
    if (t % q != 1) {
      emit("", "rejected", "t != 1 (mod q)");
    } else if (t < q + 1) {
      emit("", "rejected", "t < q+1");
    } else if (t > qm + 1) {
      emit("", "rejected", "t > q^m+1");
    } else {
      std::vector<unsigned> cur;
      std::vector<std::vector<unsigned>> shapes;
      auto rec = [&](auto&& self, unsigned left, unsigned maxlen) -> void {
        if (cur.size() == t) {
          std::uint64_t pts = 0;
          for (unsigned ni : cur) {
            std::uint64_t qn = 1;
            for (unsigned i = 0; i < ni; ++i) qn *= q;
            pts += (qn - 1) / (q - 1);
          }
          if (pts == qm + 1) shapes.push_back(cur);
          return;
        }
        (void)left;
        for (unsigned ni = std::min(maxlen, m); ni >= 1; --ni) {
          cur.push_back(ni);
          self(self, 0, ni);
          cur.pop_back();
        }
      };
      rec(rec, 0, m);
      for (const auto& sh : shapes) {
        auto diag = geometry::msrd_block_bounds(srcode::BlockProfile(sh), q, m);
        if (!diag.all()) continue;
        std::ostringstream prof;
        for (std::size_t i = 0; i < sh.size(); ++i)
          prof << (i ? "|" : "") << sh[i];
        // shapes realized by library families
        std::string witness = "";
        std::vector<unsigned> de(t - 2, m);
        de.push_back(1);
        de.push_back(1);
        if (sh == de) witness = "doubly_extended_lrs";
        if (q == 2 && m >= 3 &&
            sh == std::vector<unsigned>{m - 1, m - 1, 2})
          witness = "two_fold_lrs";
        emit(prof.str(), "admissible", witness);
      }
      if (shapes.empty()) emit("", "none", "no profile meets the point identity");
    }
    *out_csv = dup_string(out.str());
    return SRK_OK;
  });
}

}  // extern "C"

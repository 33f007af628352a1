#ifndef SRK_GF_HPP_
#define SRK_GF_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "srk/error.hpp"

namespace srk::gf {

// A field element of F_{q^m} = F_p[z]/(modulus), encoded as the integer
// sum_i c_i p^i where (c_0,...,c_{em-1}) are the coordinates in the power
// basis 1, z, ..., z^{em-1}. The encoding is owned by a Field; mixing
// elements of different Field instances is undefined.
using Fel = std::uint32_t;

// The tower F_p c F_q c F_{q^m} with q = p^e. Exact table-backed arithmetic,
// capped at q^m <= 2^20 elements. Immutable after construction and safe to
// share across threads.
class Field {
 public:
  // If modulus is empty, the lexicographically smallest monic irreducible of
  // degree e*m over F_p is selected (coefficients compared low-degree-first).
  // A given modulus must be monic of degree e*m, coefficients low-degree-first.
  // Throws NotPrime, ReducibleModulus, FieldTooLarge, BadParameter.
  Field(unsigned p, unsigned e, unsigned m, std::vector<unsigned> modulus = {});

  unsigned p() const { return p_; }
  unsigned e() const { return e_; }
  unsigned m() const { return m_; }
  unsigned ext_deg() const { return em_; }          // e*m
  std::uint64_t q() const { return q_; }            // p^e
  std::uint64_t size() const { return size_; }      // q^m
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Fel zero() const { return 0; }
  Fel one() const { return 1; }
  Fel z() const { return z_; }  // residue class of the modulus variable
  Fel primitive() const { return primitive_; }

  Fel add(Fel a, Fel b) const;
  Fel neg(Fel a) const;
  Fel sub(Fel a, Fel b) const { return add(a, neg(b)); }
  Fel mul(Fel a, Fel b) const {
    if (a == 0 || b == 0) return 0;
    return expt_[mod_ord(std::uint64_t(logt_[a]) + logt_[b])];
  }
  Fel inv(Fel a) const;
  Fel div(Fel a, Fel b) const { return mul(a, inv(b)); }
  Fel pow(Fel a, std::uint64_t n) const;

  // Discrete log/exp with respect to the primitive element. log(0) is an error.
  Fel exp(std::uint64_t i) const { return expt_[i % (size_ - 1)]; }
  std::uint64_t log(Fel a) const;

  // sigma^s with sigma: y -> y^q. frobenius(x, m) == x.
  Fel frobenius(Fel x, unsigned s) const;

  // Relative norm and trace onto F_q. Both outputs lie in the subfield.
  Fel norm(Fel x) const;
  Fel trace(Fel x) const;

  // The copy of F_q inside F_{q^m}: the fixed points of frobenius(.,1),
  // listed as 0 followed by the powers of primitive^((q^m-1)/(q-1)).
  const std::vector<Fel>& subfield() const { return subfield_; }
  bool in_subfield(Fel x) const { return frobenius(x, 1) == x; }

  // Coordinates over the canonical F_q-basis {1, z, ..., z^(m-1)}; entries
  // are subfield elements. from_fq_coords inverts.
  std::vector<Fel> fq_coords(Fel x) const;
  Fel from_fq_coords(const std::vector<Fel>& u) const;

  // F_p coordinates in the power basis, length e*m, low-degree-first.
  std::vector<unsigned> coeffs(Fel x) const;
  Fel from_coeffs(const std::vector<unsigned>& c) const;

  // Canonical element order: coefficient vectors compared low-degree-first
  // lexicographic. elements() lists all q^m elements in this order.
  bool elem_less(Fel a, Fel b) const;
  const std::vector<Fel>& elements() const { return ordered_; }

  bool same_as(const Field& other) const { return this == &other; }

 private:
  std::uint64_t mod_ord(std::uint64_t i) const { return i % (size_ - 1); }
  void build_tables();
  void build_fq_basis();

  unsigned p_, e_, m_, em_;
  std::uint64_t q_, size_;
  std::vector<unsigned> modulus_;   // length em+1, monic
  Fel primitive_ = 0;
  Fel z_ = 0;
  std::vector<std::int32_t> logt_;  // size Q, logt_[0] = -1
  std::vector<Fel> expt_;           // size Q-1
  std::vector<Fel> ordered_;        // all elements in canonical order
  std::vector<Fel> subfield_;      // q elements
  std::vector<Fel> zeta_pows_;     // F_p-basis of F_q: zeta^0..zeta^(e-1)
  // Inverse change of basis from the F_p power basis to {z^j * zeta^l},
  // stored row-major as an em x em matrix over F_p.
  std::vector<unsigned> basis_inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Validated construction; see Field's constructor for the defaulting rules.
FieldPtr make_field(unsigned p, unsigned e, unsigned m,
                    std::vector<unsigned> modulus = {});

}  // namespace srk::gf

#endif  // SRK_GF_HPP_

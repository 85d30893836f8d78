#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "intval/rational.hpp"

namespace intval {

// Element of Z[zeta_p] for an odd prime p, stored in the power basis
// 1, zeta, ..., zeta^(p-2). Every operation reduces modulo
// Phi_p = 1 + X + ... + X^(p-1), so the representation is canonical.
class CycloElement {
 public:
  // Zero. Throws DomainError unless p is an odd prime.
  explicit CycloElement(std::uint64_t p);
  // sum_i c[i] zeta^i for a coefficient list of any length.
  CycloElement(std::uint64_t p, const std::vector<BigInt>& c);

  static CycloElement one(std::uint64_t p);
  // zeta^t for any integer t.
  static CycloElement zeta_power(std::uint64_t p, std::int64_t t);

  std::uint64_t p() const noexcept { return p_; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const;

  CycloElement& operator+=(const CycloElement& other);
  CycloElement& operator-=(const CycloElement& other);
  CycloElement& operator*=(const CycloElement& other);
  CycloElement& operator*=(const BigInt& factor);

  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
  friend CycloElement operator*(CycloElement a, const CycloElement& b) { return a *= b; }
  friend CycloElement operator*(CycloElement a, const BigInt& b) { return a *= b; }
  friend bool operator==(const CycloElement& a, const CycloElement& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

  CycloElement pow(std::uint64_t exponent) const;
  // Coefficient-wise exact division; throws DomainError if d does not divide
  // every coefficient.
  CycloElement divide_exact(const BigInt& d) const;

  // "c0 + c1*z + ...", zero terms omitted.
  std::string to_string() const;

 private:
  void check_same_field(const CycloElement& other) const;

  std::uint64_t p_;
  std::vector<BigInt> coeffs_;
};

// Trace down to Q: (p-1) c0 - sum_{i>=1} c_i, the sum over the p-1 embeddings.
BigInt cyclo_trace(const CycloElement& e);

// Both sides of the root-of-unity trace identity for zeta^t (1-zeta)^M.
struct TraceIdentity {
  // Sum over the p-1 embeddings (the field trace).
  BigInt field_trace;
  // Sum over all p roots of unity, including zeta^0 = 1: the field trace plus
  // 0^M, so it differs from field_trace only at M = 0.
  BigInt orbit_sum;
  // The same full sum computed in Z[X]/(X^p - 1) as p times the constant
  // coefficient, independent of the Phi_p reduction.
  BigInt group_ring_sum;
  // p * sum_j (-1)^(jp-t) C(M, jp-t).
  BigInt rhs;
};

// Throws DomainError unless p is an odd prime and t > -p.
TraceIdentity trace_identity(std::uint64_t p, std::uint64_t M, std::int64_t t);

// True iff both full-sum routes equal the binomial side. The field trace
// alone falls short by exactly 1 at M = 0, so the identity is checked in the
// form that holds for every M.
bool trace_identity_check(std::uint64_t p, std::uint64_t M, std::int64_t t);

// y with (1 - zeta_p)^(p-1) = p y.
CycloElement pp_witness(std::uint64_t p);

}  // namespace intval

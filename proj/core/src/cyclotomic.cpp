#include "intval/cyclotomic.hpp"

#include "intval/errors.hpp"
#include "intval/primes.hpp"

namespace intval {
namespace {

std::uint64_t residue(std::int64_t t, std::uint64_t p) {
  const auto m = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((t % m) + m) % m);
}

void require_odd_prime(std::uint64_t p) {
  if (p == 2 || !is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not an odd prime");
}

// Folds a length-p vector indexed by exponent mod p into the power basis:
// zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
std::vector<BigInt> reduce(std::vector<BigInt> r) {
  const BigInt top = r.back();
  r.pop_back();
  if (top != 0) {
    for (auto& c : r) c -= top;
  }
  return r;
}

}  // namespace

CycloElement::CycloElement(std::uint64_t p) : p_(p) {
  require_odd_prime(p);
  coeffs_.assign(p - 1, BigInt(0));
}

CycloElement::CycloElement(std::uint64_t p, const std::vector<BigInt>& c) : CycloElement(p) {
  std::vector<BigInt> r(p, BigInt(0));
  for (std::size_t i = 0; i < c.size(); ++i) r[i % p] += c[i];
  coeffs_ = reduce(std::move(r));
}

CycloElement CycloElement::one(std::uint64_t p) {
  CycloElement e(p);
  e.coeffs_[0] = 1;
  return e;
}

CycloElement CycloElement::zeta_power(std::uint64_t p, std::int64_t t) {
  require_odd_prime(p);
  std::vector<BigInt> c(p, BigInt(0));
  c[residue(t, p)] = 1;
  return CycloElement(p, c);
}

bool CycloElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

void CycloElement::check_same_field(const CycloElement& other) const {
  if (p_ != other.p_) throw DomainError("cyclotomic elements over different primes");
}

CycloElement& CycloElement::operator+=(const CycloElement& other) {
  check_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& other) {
  check_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycloElement& CycloElement::operator*=(const CycloElement& other) {
  check_same_field(other);
  std::vector<BigInt> r(p_, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      r[(i + j) % p_] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = reduce(std::move(r));
  return *this;
}

CycloElement& CycloElement::operator*=(const BigInt& factor) {
  for (auto& c : coeffs_) c *= factor;
  return *this;
}

CycloElement CycloElement::pow(std::uint64_t exponent) const {
  CycloElement result = one(p_);
  CycloElement base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

CycloElement CycloElement::divide_exact(const BigInt& d) const {
  if (d == 0) throw DomainError("division by zero");
  CycloElement out(p_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), d.get_mpz_t())) {
      throw DomainError(intval::to_string(d) + " does not divide coefficient " + std::to_string(i));
    }
    mpz_divexact(out.coeffs_[i].get_mpz_t(), coeffs_[i].get_mpz_t(), d.get_mpz_t());
  }
  return out;
}

std::string CycloElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += coeffs_[i] < 0 ? " - " : " + ";
    else if (coeffs_[i] < 0) out += "-";
    const BigInt magnitude = abs(coeffs_[i]);
    if (i == 0) {
      out += intval::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += intval::to_string(magnitude) + "*";
    out += i == 1 ? "z" : "z^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

BigInt cyclo_trace(const CycloElement& e) {
  const auto& c = e.coefficients();
  BigInt trace = c[0] * static_cast<unsigned long>(e.p() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) trace -= c[i];
  return trace;
}

TraceIdentity trace_identity(std::uint64_t p, std::uint64_t M, std::int64_t t) {
  require_odd_prime(p);
  const auto sp = static_cast<std::int64_t>(p);
  if (t <= -sp) throw DomainError("trace identity needs t > -p");

  TraceIdentity out;
  const CycloElement one_minus_zeta = CycloElement::one(p) - CycloElement::zeta_power(p, 1);
  out.field_trace = cyclo_trace(CycloElement::zeta_power(p, t) * one_minus_zeta.pow(M));
  out.orbit_sum = out.field_trace + (M == 0 ? 1 : 0);

  // Group ring Z[X]/(X^p - 1): the sum over all p-th roots of unity of an
  // element g is p times its constant coefficient.
  std::vector<BigInt> g(p, BigInt(0));
  g[residue(t, p)] = 1;
  for (std::uint64_t step = 0; step < M; ++step) {
    std::vector<BigInt> next = g;
    for (std::uint64_t i = 0; i < p; ++i) next[(i + 1) % p] -= g[i];
    g = std::move(next);
  }
  out.group_ring_sum = g[0] * static_cast<unsigned long>(p);

  const auto sM = static_cast<std::int64_t>(M);
  const std::int64_t j_lo = t > 0 ? (t + sp - 1) / sp : 0;
  const std::int64_t j_hi = (sM + t) / sp;
  BigInt sum = 0;
  for (std::int64_t j = j_lo; j <= j_hi; ++j) {
    const std::int64_t m = j * sp - t;
    const BigInt term = binomial(M, static_cast<std::uint64_t>(m));
    if (m % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  out.rhs = sum * static_cast<unsigned long>(p);
  return out;
}

bool trace_identity_check(std::uint64_t p, std::uint64_t M, std::int64_t t) {
  const auto id = trace_identity(p, M, t);
  return id.orbit_sum == id.rhs && id.group_ring_sum == id.rhs;
}

CycloElement pp_witness(std::uint64_t p) {
  const CycloElement one_minus_zeta = CycloElement::one(p) - CycloElement::zeta_power(p, 1);
  return one_minus_zeta.pow(p - 1).divide_exact(BigInt(static_cast<unsigned long>(p)));
}

}  // namespace intval

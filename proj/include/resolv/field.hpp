#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace resolv {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Elements of GF(p^e) are encoded as integers in [0, q): the base-p digits
/// are the polynomial-basis coordinates, constant term least significant.
/// 0 and 1 are the additive and multiplicative identities.
using FieldElement = std::uint32_t;

namespace detail {
struct FieldTables;
}

/// GF(p^e) with a verified-irreducible monic modulus. A FiniteField is a
/// cheap immutable handle; copies share the arithmetic tables.
class FiniteField {
 public:
  /// Builds GF(p^e). The modulus, if given, lists e+1 coefficients constant
  /// term first and must be monic; otherwise the smallest irreducible monic
  /// polynomial is chosen, ordering candidates by the integer whose base-p
  /// digits are the non-leading coefficients.
  static FiniteField make(unsigned p, unsigned e,
                          std::optional<std::vector<unsigned>> modulus = std::nullopt);
  /// GF(q) for a prime power q with the default modulus.
  static FiniteField of_order(std::uint64_t q);

  unsigned characteristic() const;
  unsigned degree() const;
  std::uint32_t order() const;
  const std::vector<unsigned>& modulus() const;
  /// True when the class of x generates the multiplicative group, i.e. the
  /// log/antilog path is available.
  bool has_log_tables() const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t exponent) const;

  /// Product by schoolbook polynomial multiplication and reduction.
  FieldElement mul_polynomial(FieldElement a, FieldElement b) const;
  /// Product through the log/antilog tables; requires has_log_tables().
  FieldElement mul_log(FieldElement a, FieldElement b) const;

  /// Frobenius-fixed test: a lies in the subfield of order p^d (d | e).
  bool in_subfield(FieldElement a, unsigned d) const;

  bool contains(FieldElement a) const { return a < order(); }

  friend bool operator==(const FiniteField& a, const FiniteField& b);

 private:
  explicit FiniteField(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}
  std::shared_ptr<const detail::FieldTables> t_;
};

bool is_prime(std::uint64_t n);
/// Returns (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q);
/// Exhaustive trial division by all monic polynomials of degree <= e/2.
bool is_irreducible(unsigned p, const std::vector<unsigned>& coefficients);

/// Exact q-binomial coefficient [k choose i]_q.
BigInt gaussian_binomial(std::uint64_t k, std::uint64_t i, std::uint64_t q);

namespace testing {
/// Fault injection for the verification harness: while enabled, newly built
/// fields of order >= 4 carry one corrupted multiplication-table entry.
void set_field_fault_injection(bool enabled);
}  // namespace testing

}  // namespace resolv

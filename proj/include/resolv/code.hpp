#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "resolv/budget.hpp"
#include "resolv/matrix.hpp"

namespace resolv {

/// An [n,k]_q linear code held as a row space: canonical RREF generator G
/// (k x n) and a parity-check matrix H ((n-k) x n) with G H^T = 0.
class LinearCode {
 public:
  /// k = rank(rows); G = nonzero rows of rref(rows); H = kernel_basis(G).
  /// Throws ZeroCode when rows has rank 0.
  static LinearCode make(const Matrix& rows);

  const FiniteField& field() const { return generator_.field(); }
  std::size_t length() const { return generator_.cols(); }
  std::size_t dimension() const { return generator_.rows(); }
  std::uint32_t q() const { return field().order(); }
  const Matrix& generator() const { return generator_; }
  const Matrix& parity_check() const { return parity_check_; }
  /// No coordinate is identically zero on the code.
  bool nondegenerate() const { return nondegenerate_; }

  /// Equality of row spaces (the generators are canonical).
  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.generator_ == b.generator_;
  }

 private:
  LinearCode(Matrix g, Matrix h, bool nondegenerate)
      : generator_(std::move(g)), parity_check_(std::move(h)), nondegenerate_(nondegenerate) {}

  Matrix generator_;
  Matrix parity_check_;
  bool nondegenerate_;
};

/// The [n, n-k] code generated by H. Throws ZeroCode when k = n.
LinearCode dual(const LinearCode& code);

using WeightDistribution = std::map<std::size_t, std::uint64_t>;

/// Visits all q^k codewords (message order: base-q odometer over the rows of
/// G, first row most significant). Throws BudgetExceeded when q^k is larger
/// than budget.codewords.
void for_each_codeword(const LinearCode& code, const Budget& budget,
                       const std::function<void(std::span<const FieldElement>)>& visit);
WeightDistribution weight_distribution(const LinearCode& code, const Budget& budget = {});

/// An i-dimensional subcode: canonical RREF basis inside the ambient space
/// and the union of the row supports.
struct Subcode {
  std::size_t dim = 0;
  Matrix basis;
  Support support = 0;

  std::size_t weight() const;
};

/// Streams each i-dimensional subcode once, in the order of the RREF
/// coefficient matrices relative to G (see for_each_subspace). Requires
/// n <= 64; throws BudgetExceeded when [k choose i]_q > budget.subcodes.
void for_each_subcode(const LinearCode& code, std::size_t i, const Budget& budget,
                      const std::function<void(const Subcode&)>& visit);
std::vector<Subcode> subcodes(const LinearCode& code, std::size_t i, const Budget& budget = {});

/// Dimension of the subcode of codewords vanishing outside sigma, computed
/// as k - rank(G restricted to the complement of sigma).
std::size_t s_hat_dimension(const LinearCode& code, Support sigma);
/// The subcode of all codewords supported inside sigma (possibly zero).
Subcode s_hat(const LinearCode& code, Support sigma);

/// i-dimensional subcodes D whose support is inclusion-minimal among all
/// i-dimensional supports with no other i-subcode sharing it; equivalently
/// dim s_hat(supp D) = i. Sorted by support as an integer.
std::vector<Subcode> minimal_subcodes(const LinearCode& code, std::size_t i, const Budget& budget = {});

/// Generalized Hamming weight d_i: least support weight over all
/// i-dimensional subcodes.
std::size_t ghw(const LinearCode& code, std::size_t i, const Budget& budget = {});
/// (d_1, ..., d_k).
std::vector<std::size_t> ghw_hierarchy(const LinearCode& code, const Budget& budget = {});
/// d_h = n - k + h.
bool is_h_mds(const LinearCode& code, std::size_t h, const Budget& budget = {});

/// Number of codewords q^k, or nullopt when it overflows 64 bits.
std::optional<std::uint64_t> code_size(const LinearCode& code);

}  // namespace resolv

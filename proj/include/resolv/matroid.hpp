#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "resolv/budget.hpp"
#include "resolv/code.hpp"
#include "resolv/matrix.hpp"

namespace resolv {

struct RankNullity {
  std::size_t rank = 0;
  std::size_t nullity = 0;
};

/// Inclusion-minimal members of N_i = {sigma : nullity(sigma) = i}, sorted
/// by their bit-packed value.
struct NullityStratum {
  std::size_t nullity = 0;
  std::vector<Support> minimal_sets;
};

/// Rank table over all 2^n column subsets of a parity-check matrix, plus the
/// subset-sum transform that yields reduced Euler characteristics of every
/// restricted independence complex.
class NullityScan {
 public:
  static NullityScan compute(const Matrix& parity_check, const Budget& budget);

  std::size_t ground_size() const { return n_; }
  std::size_t rank(Support sigma) const { return rank_[sigma]; }
  std::size_t nullity(Support sigma) const;
  /// sigma has nullity i and every one-element deletion drops it to i-1;
  /// by unit increase this is minimality within N_i.
  bool is_minimal(Support sigma) const;
  /// Reduced Euler characteristic of Delta|sigma.
  std::int64_t reduced_euler_char(Support sigma) const { return -signed_faces_[sigma]; }
  /// minimal_sets()[i] lists the minimal elements of N_i, i = 0..max nullity.
  const std::vector<std::vector<Support>>& minimal_sets() const { return minimal_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> rank_;
  std::vector<std::int32_t> signed_faces_;  // sum over independent tau <= sigma of (-1)^|tau|
  std::vector<std::vector<Support>> minimal_;
};

/// The vector matroid on the columns of a parity-check matrix, with a
/// memoized rank oracle. Safe to share across threads.
class MatroidView {
 public:
  explicit MatroidView(Matrix parity_check);
  explicit MatroidView(const LinearCode& code);

  const Matrix& parity_check() const { return h_; }
  std::size_t ground_size() const { return h_.cols(); }
  std::size_t full_rank() const { return full_rank_; }
  std::size_t code_dimension() const { return h_.cols() - full_rank_; }

  RankNullity rank_nullity(Support sigma) const;
  /// Lazily computed full subset scan; BudgetExceeded above budget.scan_limit.
  std::shared_ptr<const NullityScan> scan(const Budget& budget) const;

 private:
  Matrix h_;
  std::size_t full_rank_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Support, std::uint8_t> memo_;
  mutable std::shared_ptr<const NullityScan> scan_;
};

enum class NullityMethod { Scan, Subcode };

NullityStratum minimal_nullity_sets(const MatroidView& matroid, std::size_t i, const Budget& budget = {});
/// Scan enumerates 2^n subsets; Subcode returns the supports of the
/// i-minimal subcodes. Both give the same sets whenever both are feasible.
NullityStratum minimal_nullity_sets(const LinearCode& code, std::size_t i, NullityMethod method,
                                    const Budget& budget = {});

/// Direct enumeration over subsets of sigma using the rank oracle.
std::int64_t reduced_euler_char(const MatroidView& matroid, Support sigma, const Budget& budget = {});

/// beta_{i,sigma} for i = nullity(sigma); sigma must be minimal in N_i
/// (NotMinimal otherwise). Equals |reduced Euler characteristic| because the
/// restricted complex is shellable and its homology sits in degree r(sigma)-1.
std::uint64_t betti_value(const MatroidView& matroid, Support sigma, const Budget& budget = {});

/// Reduced simplicial homology of Delta|sigma over the prime field GF(p),
/// computed from explicit boundary matrices. Entry j+1 is dim H~_j for
/// j = -1 .. |sigma|-1.
std::vector<std::size_t> homology_dims(const MatroidView& matroid, Support sigma, const Budget& budget = {});

}  // namespace resolv

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "resolv/budget.hpp"
#include "resolv/code.hpp"
#include "resolv/field.hpp"

namespace resolv {

enum class BettiMethod { Hochster, ShiftsBsSolve, ClosedForm };
const char* to_string(BettiMethod method);
std::optional<BettiMethod> betti_method_from_string(std::string_view name);

/// (homological step i, shift j)
using Cell = std::pair<std::size_t, std::size_t>;
/// step i -> the set of shifts j with beta_{i,j} != 0
using ShiftSets = std::map<std::size_t, std::set<std::size_t>>;

/// Graded Betti numbers of the Stanley-Reisner ring of a code. Absent cells
/// are zero; present cells are positive.
struct BettiTable {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t q = 0;  // 0 when the table is not tied to a field
  BettiMethod method = BettiMethod::Hochster;
  std::map<Cell, BigInt> entries;

  BigInt at(std::size_t i, std::size_t j) const;
  std::set<std::size_t> shifts(std::size_t i) const;
  ShiftSets shift_sets() const;
  /// Least shift at each step 1..k; these are the generalized Hamming weights.
  std::vector<std::size_t> ghw() const;
  bool pure() const;
  /// (d_0, d_1, ..., d_k) when pure.
  std::optional<std::vector<std::size_t>> pure_type() const;
};

/// Compares parameters and entries, ignoring how the table was produced.
bool same_values(const BettiTable& a, const BettiTable& b);

/// Scan pipeline: sums |reduced Euler characteristic| over the minimal
/// elements of each nullity stratum, grouped by size. Needs n <= scan limit.
BettiTable betti_table_hochster(const LinearCode& code, const Budget& budget = {});

/// Distinct support weights of the i-minimal subcodes, for every step.
ShiftSets betti_shifts(const LinearCode& code, const Budget& budget = {});

/// beta_{1,j}: number of 1-minimal subcodes of support weight j.
std::map<std::size_t, BigInt> first_step_betti(const LinearCode& code, const Budget& budget = {});

struct PurityWitness {
  std::size_t step = 0;
  Subcode lighter;
  Subcode heavier;
};

struct PurityReport {
  bool pure = false;
  std::optional<std::vector<std::size_t>> pure_type;
  /// Least h with steps h..k single-weight; empty when a step below the
  /// pure tail could not be enumerated within budget.
  std::optional<std::size_t> left_pure_from;
  /// step_weights[i-1]: support weights of the i-minimal subcodes, or empty
  /// when the Grassmannian exceeded the budget.
  std::vector<std::optional<std::set<std::size_t>>> step_weights;
  std::vector<PurityWitness> witnesses;
};

/// Decides purity from the support weights of i-minimal subcodes. Steps whose
/// Grassmannian exceeds the budget are left unresolved; if the verdict then
/// depends on them, BudgetExceeded is thrown.
PurityReport purity(const LinearCode& code, const Budget& budget = {});

/// beta_i = |prod_{j != i} d_j / (d_j - d_i)| for i = 1..k with beta_0 = 1.
/// shifts = (d_0 = 0, d_1, ..., d_k), strictly increasing.
std::vector<BigInt> herzog_kuhl(std::span<const std::size_t> shifts);

struct BsCheck {
  bool ok = true;
  /// residuals[l] = sum_{i,j} (-1)^i j^l beta_{i,j}, l = 0..k-1
  std::vector<BigInt> residuals;
};
BsCheck bs_check(const BettiTable& table);

/// Solves the alternating power-sum equations for every cell listed in
/// `shifts` that is not in `known`. beta_{0,0} = 1 is always known.
BettiTable bs_solve(std::size_t n, std::size_t k, std::uint64_t q, const ShiftSets& shifts,
                    const std::map<Cell, BigInt>& known);

struct MdsForm {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t q = 0;
};
struct ConstantWeightForm {
  std::uint64_t q = 0;
  std::size_t k = 0;
  std::size_t d = 0;
};
struct FirstOrderReedMullerForm {
  std::uint64_t q = 0;
  std::size_t m = 0;
};
using ClosedFormKind = std::variant<MdsForm, ConstantWeightForm, FirstOrderReedMullerForm>;

/// Pure tables from the closed-form Betti numbers of MDS, constant-weight and
/// first-order Reed-Muller codes.
BettiTable closed_form(const ClosedFormKind& kind);

}  // namespace resolv

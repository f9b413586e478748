#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "resolv/code.hpp"
#include "resolv/error.hpp"
#include "resolv/families.hpp"
#include "resolv/verify.hpp"

using namespace resolv;

namespace {

std::size_t wt(std::span<const FieldElement> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](FieldElement x) { return x != 0; }));
}

LinearCode hamming74() {
  FiniteField f = FiniteField::of_order(2);
  return LinearCode::make(Matrix::from_rows(f, {{1, 0, 0, 0, 0, 1, 1},
                                                {0, 1, 0, 0, 1, 0, 1},
                                                {0, 0, 1, 0, 1, 1, 0},
                                                {0, 0, 0, 1, 1, 1, 1}}));
}

// All codewords from message vectors in reverse lexicographic order.
std::vector<std::vector<FieldElement>> all_codewords(const LinearCode& c) {
  const auto& g = c.generator();
  const FiniteField& f = c.field();
  std::vector<std::vector<FieldElement>> out;
  std::vector<FieldElement> msg(c.dimension(), 0);
  for (;;) {
    out.push_back(left_multiply(msg, g));
    std::size_t i = 0;
    while (i < msg.size() && ++msg[i] == f.order()) msg[i++] = 0;
    if (i == msg.size()) break;
  }
  return out;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("construction") {
  FiniteField f2 = FiniteField::of_order(2);
  LinearCode rep = LinearCode::make(Matrix::from_rows(f2, {{1, 1, 1}}));
  CHECK(rep.dimension() == 1);
  CHECK(rank(rep.parity_check()) == 2);
  CHECK(LinearCode::make(Matrix::from_rows(f2, {{1, 0}, {1, 0}})).dimension() == 1);
  CHECK_FALSE(LinearCode::make(Matrix::from_rows(f2, {{1, 0}, {1, 0}})).nondegenerate());
  LinearCode s = LinearCode::make(
      Matrix::from_rows(f2, {{1, 0, 1, 0, 1, 0, 1}, {0, 1, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}}));
  CHECK(s.length() == 7);
  CHECK(s.dimension() == 3);
  CHECK(kind_of([&] { LinearCode::make(Matrix::from_rows(f2, {{0, 0, 0}})); }) == ErrorKind::ZeroCode);
  for (const LinearCode& c : random_projective_codes(10, 5)) {
    Matrix prod = c.generator() * c.parity_check().transpose();
    bool zero = true;
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (FieldElement x : prod.row(r)) zero &= x == 0;
    CHECK(zero);
    CHECK(rank(c.parity_check()) == c.length() - c.dimension());
  }
}

TEST_CASE("duality") {
  CHECK(dual(hamming74()) == simplex(2, 3));
  for (const LinearCode& c : random_projective_codes(10, 9)) CHECK(dual(dual(c)) == c);
  LinearCode rm = reed_muller(2, 1, 3);
  CHECK(dual(rm) == rm);
  FiniteField f2 = FiniteField::of_order(2);
  CHECK(kind_of([&] { dual(LinearCode::make(Matrix::identity(f2, 3))); }) == ErrorKind::ZeroCode);
}

TEST_CASE("weight distributions") {
  FiniteField f2 = FiniteField::of_order(2);
  CHECK(weight_distribution(LinearCode::make(Matrix::from_rows(f2, {{1, 1, 1}}))) ==
        WeightDistribution{{0, 1}, {3, 1}});
  CHECK(weight_distribution(simplex(2, 3)) == WeightDistribution{{0, 1}, {4, 7}});
  CHECK(weight_distribution(projective_system_code(hyperoval(4))) == WeightDistribution{{0, 1}, {4, 45}, {6, 18}});

  std::mt19937_64 rng(1);
  for (const LinearCode& c : random_projective_codes(15, 2)) {
    auto words = all_codewords(c);
    std::shuffle(words.begin(), words.end(), rng);
    WeightDistribution oracle;
    for (const auto& w : words) ++oracle[wt(w)];
    auto computed = weight_distribution(c);
    CHECK(computed == oracle);
    std::uint64_t total = 0;
    for (const auto& [w, n] : computed) total += n;
    CHECK(total == words.size());
  }

  Budget tiny;
  tiny.codewords = 100;
  CHECK(kind_of([&] { weight_distribution(simplex(2, 8), tiny); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("subcode enumeration") {
  CHECK(subcodes(simplex(2, 3), 1).size() == 7);
  LinearCode c = projective_system_code(hyperoval(4));
  auto top = subcodes(c, 3);
  REQUIRE(top.size() == 1);
  CHECK(top[0].support == (Support{1} << 6) - 1);
  LinearCode surface = projective_system_code(hermitian(2, 4));
  std::size_t count = 0;
  for_each_subcode(surface, 2, Budget{}, [&](const Subcode&) { ++count; });
  CHECK(count == 357);
  for (const auto& d : subcodes(c, 2)) {
    Support s = 0;
    for (std::size_t r = 0; r < d.basis.rows(); ++r) s |= support_of(d.basis.row(r));
    CHECK(s == d.support);
    CHECK(LinearCode::make(d.basis.stacked(c.generator())).dimension() == 3);
  }
  Budget tiny;
  tiny.subcodes = 10;
  CHECK(kind_of([&] { subcodes(c, 1, tiny); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("s_hat and the rank identity") {
  LinearCode s = simplex(2, 3);
  const Support full = (Support{1} << 7) - 1;
  CHECK(s_hat(s, full).dim == 3);
  CHECK(s_hat(s, 0).dim == 0);
  CHECK(s_hat(s, 0).support == 0);
  for (const auto& w : all_codewords(s)) {
    Support sup = support_of(w);
    if (sup == 0) continue;
    Subcode d = s_hat(s, sup);
    CHECK(d.dim == 1);
    CHECK(d.support == sup);
  }

  std::mt19937_64 rng(17);
  for (const LinearCode& c : random_projective_codes(12, 13)) {
    const std::size_t n = c.length();
    auto words = all_codewords(c);
    for (int trial = 0; trial < 200; ++trial) {
      const Support sigma = rng() & ((Support{1} << n) - 1);
      const std::size_t dim = s_hat_dimension(c, sigma);
      std::size_t inside = 0;
      for (const auto& w : words) inside += (support_of(w) & ~sigma) == 0;
      std::uint64_t qd = 1;
      for (std::size_t i = 0; i < dim; ++i) qd *= c.q();
      CHECK(inside == qd);
      CHECK(column_rank(c.parity_check(), sigma) == static_cast<std::size_t>(std::popcount(sigma)) - dim);
      CHECK(s_hat(c, sigma).dim == dim);
    }
  }
}

TEST_CASE("i-minimal subcodes against the pairwise definition") {
  auto check_code = [](const LinearCode& c) {
    for (std::size_t i = 1; i <= c.dimension(); ++i) {
      auto all = subcodes(c, i);
      std::vector<Support> expected;
      for (std::size_t a = 0; a < all.size(); ++a) {
        bool minimal = true;
        for (std::size_t b = 0; b < all.size() && minimal; ++b)
          if (b != a && (all[b].support & ~all[a].support) == 0) minimal = false;
        if (minimal) expected.push_back(all[a].support);
      }
      std::sort(expected.begin(), expected.end());
      std::vector<Support> computed;
      for (const auto& d : minimal_subcodes(c, i)) computed.push_back(d.support);
      CAPTURE(i);
      CHECK(computed == expected);
    }
  };
  check_code(simplex(2, 3));
  check_code(projective_system_code(hyperoval(4)));
  check_code(reed_muller(2, 1, 3));
  for (const LinearCode& c : random_projective_codes(15, 21)) check_code(c);

  CHECK(minimal_subcodes(simplex(2, 3), 1).size() == 7);
  auto hyper = minimal_subcodes(projective_system_code(hyperoval(4)), 1);
  CHECK(hyper.size() == 15);
  CHECK(std::all_of(hyper.begin(), hyper.end(), [](const Subcode& d) { return d.weight() == 4; }));
}

TEST_CASE("binary codewords lighter than 2 d_1 are minimal") {
  for (const LinearCode& c : {simplex(2, 3), reed_muller(2, 1, 3), reed_muller(2, 2, 4), hamming74()}) {
    const std::size_t d1 = ghw(c, 1);
    std::vector<Support> minimal;
    for (const auto& d : minimal_subcodes(c, 1)) minimal.push_back(d.support);
    for (const auto& w : all_codewords(c)) {
      const std::size_t weight = wt(w);
      if (weight == 0 || weight >= 2 * d1) continue;
      CHECK(std::binary_search(minimal.begin(), minimal.end(), support_of(w)));
    }
  }
}

TEST_CASE("generalized Hamming weights") {
  CHECK(ghw_hierarchy(simplex(2, 3)) == std::vector<std::size_t>{4, 6, 7});
  CHECK(ghw_hierarchy(projective_system_code(hyperoval(4))) == std::vector<std::size_t>{4, 5, 6});
  for (const LinearCode& c : random_projective_codes(20, 4)) {
    auto h = ghw_hierarchy(c);
    CHECK(h.back() == c.length());
    CHECK(std::adjacent_find(h.begin(), h.end(), std::greater_equal<>()) == h.end());
  }
  CHECK(is_h_mds(mds_rs(5, 4, 2), 1));
  CHECK_FALSE(is_h_mds(simplex(2, 3), 1));
  CHECK(is_h_mds(projective_system_code(hermitian(2, 4)), 3));
  CHECK_FALSE(is_h_mds(projective_system_code(hermitian(2, 4)), 2));
}

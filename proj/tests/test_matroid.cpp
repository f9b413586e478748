#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "resolv/error.hpp"
#include "resolv/families.hpp"
#include "resolv/matroid.hpp"
#include "resolv/verify.hpp"

using namespace resolv;

namespace {

// tau is independent in the parity-check matroid iff no nonzero codeword lives on tau.
std::int64_t euler_from_code(const LinearCode& c, Support sigma) {
  std::int64_t sum = 0;
  for (Support tau = sigma;; tau = (tau - 1) & sigma) {
    if (s_hat_dimension(c, tau) == 0) sum += (std::popcount(tau) % 2 == 0) ? 1 : -1;
    if (tau == 0) break;
  }
  return -sum;
}

Support full(std::size_t n) { return (Support{1} << n) - 1; }

}  // namespace

TEST_CASE("circuits of the simplex matroid") {
  LinearCode s = simplex(2, 3);
  for (auto method : {NullityMethod::Scan, NullityMethod::Subcode}) {
    auto stratum = minimal_nullity_sets(s, 1, method);
    CHECK(stratum.minimal_sets.size() == 7);
    for (Support sigma : stratum.minimal_sets) CHECK(std::popcount(sigma) == 4);
  }
  auto hyper = minimal_nullity_sets(projective_system_code(hyperoval(4)), 1, NullityMethod::Scan);
  CHECK(hyper.minimal_sets.size() == 15);
  CHECK(minimal_nullity_sets(s, 0, NullityMethod::Scan).minimal_sets == std::vector<Support>{0});
}

TEST_CASE("Euler characteristics: scan, direct and code-side oracle") {
  std::vector<LinearCode> codes{simplex(2, 3), projective_system_code(hyperoval(4)), reed_muller(2, 1, 3)};
  for (const auto& c : random_projective_codes(6, 31)) codes.push_back(c);
  for (const LinearCode& c : codes) {
    const MatroidView m(c);
    auto scan = m.scan(Budget{});
    const std::size_t n = c.length();
    bool ok = true;
    for (Support sigma = 0; sigma <= full(n); ++sigma) {
      const std::int64_t oracle = euler_from_code(c, sigma);
      ok &= scan->reduced_euler_char(sigma) == oracle;
      ok &= scan->nullity(sigma) == s_hat_dimension(c, sigma);
      if (sigma % 7 == 0) ok &= reduced_euler_char(m, sigma) == oracle;
    }
    CHECK(ok);
  }
}

TEST_CASE("Betti values and minimality") {
  LinearCode s = simplex(2, 3);
  const MatroidView ms(s);
  const Support circuit = minimal_nullity_sets(s, 1, NullityMethod::Scan).minimal_sets.front();
  CHECK(reduced_euler_char(ms, circuit) == 1);
  CHECK(betti_value(ms, circuit) == 1);
  auto dims = homology_dims(ms, circuit);
  CHECK(dims == std::vector<std::size_t>{0, 0, 0, 1, 0});

  LinearCode h = projective_system_code(hyperoval(4));
  const MatroidView mh(h);
  CHECK(betti_value(mh, full(6)) == 10);
  // Uniform matroid: every dependent set is minimal in its stratum.
  for (Support sigma = 0; sigma <= full(6); ++sigma)
    if (std::popcount(sigma) > 3) CHECK(mh.scan(Budget{})->is_minimal(sigma));
  auto scan = ms.scan(Budget{});
  Support loose = 0;
  for (Support sigma = 1; sigma <= full(7) && loose == 0; ++sigma)
    if (scan->nullity(sigma) > 0 && !scan->is_minimal(sigma)) loose = sigma;
  REQUIRE(loose != 0);
  try {
    betti_value(ms, loose);
    FAIL("expected NotMinimal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMinimal);
  }
}

TEST_CASE("homology concentrates in top degree") {
  for (const LinearCode& c : random_projective_codes(8, 41)) {
    const MatroidView m(c);
    auto scan = m.scan(Budget{});
    for (std::size_t i = 1; i < scan->minimal_sets().size(); ++i)
      for (Support sigma : scan->minimal_sets()[i]) {
        if (std::popcount(sigma) > 8) continue;
        auto dims = homology_dims(m, sigma);
        const std::size_t top = scan->rank(sigma);  // H~_{r-1} sits at index r
        std::size_t elsewhere = 0;
        for (std::size_t j = 0; j < dims.size(); ++j)
          if (j != top) elsewhere += dims[j];
        CHECK(elsewhere == 0);
        CHECK(static_cast<std::int64_t>(dims[top]) == std::abs(scan->reduced_euler_char(sigma)));
      }
  }
}

TEST_CASE("scan and subcode methods agree") {
  for (const LinearCode& c : random_projective_codes(15, 51))
    for (std::size_t i = 1; i <= c.dimension(); ++i)
      CHECK(minimal_nullity_sets(c, i, NullityMethod::Scan).minimal_sets ==
            minimal_nullity_sets(c, i, NullityMethod::Subcode).minimal_sets);
}

TEST_CASE("thread count does not change the scan") {
  LinearCode c = projective_system_code(dual_hyperoval(4));
  Budget one, four;
  four.threads = 4;
  auto a = NullityScan::compute(c.parity_check(), one);
  auto b = NullityScan::compute(c.parity_check(), four);
  CHECK(a.minimal_sets() == b.minimal_sets());
  bool same = true;
  for (Support s = 0; s < (Support{1} << 15); s += 3) same &= a.reduced_euler_char(s) == b.reduced_euler_char(s);
  CHECK(same);
}

TEST_CASE("scan budget") {
  Budget small;
  small.scan_limit = 10;
  const MatroidView m(projective_system_code(dual_hyperoval(4)));
  try {
    m.scan(small);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

#include "resolv/families.hpp"

#include <algorithm>
#include <string>

#include "resolv/error.hpp"

namespace resolv {

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

BigInt binom(long a, long b) {
  if (b < 0 || a < b) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

FiniteField field_of(std::uint64_t q) { return FiniteField::of_order(q); }

void require_even(std::uint64_t q) {
  auto pp = prime_power(q);
  if (!pp) throw Error(ErrorKind::InvalidParameters, "q = " + std::to_string(q) + " is not a prime power");
  if (pp->first != 2) throw Error(ErrorKind::OddCharacteristic, "q = " + std::to_string(q) + " is odd");
}

FieldElement dot(const FiniteField& f, std::span<const FieldElement> a, std::span<const FieldElement> b) {
  FieldElement s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

// Every vector of F^len in encoding order, first coordinate most significant.
template <class Visit>
void for_each_vector(std::uint32_t q, std::size_t len, Visit&& visit) {
  std::vector<FieldElement> v(len, 0);
  for (;;) {
    visit(static_cast<const std::vector<FieldElement>&>(v));
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (++v[i] < q) break;
      v[i] = 0;
      if (i == 0) return;
    }
    if (len == 0) return;
  }
}

bool is_canonical(std::span<const FieldElement> v) {
  for (FieldElement x : v)
    if (x != 0) return x == 1;
  return false;
}

// Points on the zero set of the functionals spanning the rows of a.
std::size_t section_size(const ProjectiveSystem& s, const Matrix& a) {
  std::size_t count = 0;
  for (const auto& p : s.points) {
    bool on = true;
    for (std::size_t r = 0; r < a.rows() && on; ++r) on = dot(s.field, a.row(r), p) == 0;
    if (on) ++count;
  }
  return count;
}

void check(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ConstructionFailed, what);
}

void check_spectrum(const std::map<std::size_t, std::uint64_t>& spectrum, std::initializer_list<std::size_t> allowed,
                    const std::string& what) {
  for (const auto& [size, count] : spectrum)
    check(std::find(allowed.begin(), allowed.end(), size) != allowed.end(),
          what + ": section of size " + std::to_string(size));
}

}  // namespace

RMParameters rm_parameters(std::uint64_t q, std::size_t r, std::size_t m) {
  auto pp = prime_power(q);
  if (!pp) throw Error(ErrorKind::InvalidParameters, "q = " + std::to_string(q) + " is not a prime power");
  if (m < 1 || r > m * (q - 1))
    throw Error(ErrorKind::OutOfRange, "need m >= 1 and 0 <= r <= m(q-1)");
  RMParameters p;
  p.q = q;
  p.r = r;
  p.m = m;
  p.n = ipow(q, m);
  BigInt k = 0;
  for (std::size_t i = 0; i <= m; ++i) {
    BigInt term = binom(static_cast<long>(m), static_cast<long>(i)) *
                  binom(static_cast<long>(m + r) - static_cast<long>(i * q), static_cast<long>(m));
    if (i % 2 == 0)
      k += term;
    else
      k -= term;
  }
  p.k = k.get_ui();
  p.t = r / (q - 1);
  p.s = r % (q - 1);
  p.d = p.t >= m ? 1 : (q - p.s) * ipow(q, m - p.t - 1);
  return p;
}

std::vector<std::vector<FieldElement>> affine_points(const FiniteField& field, std::size_t m) {
  std::vector<std::vector<FieldElement>> pts;
  for_each_vector(field.order(), m, [&](const auto& v) { pts.push_back(v); });
  return pts;
}

LinearCode reed_muller(std::uint64_t q, std::size_t r, std::size_t m, const Budget& budget) {
  RMParameters params = rm_parameters(q, r, m);
  if (params.n > budget.codewords)
    throw Error(ErrorKind::BudgetExceeded, "q^m = " + std::to_string(params.n) + " points");
  FiniteField f = field_of(q);
  auto pts = affine_points(f, m);
  std::vector<std::vector<FieldElement>> rows;
  std::vector<unsigned> e(m, 0);
  for (;;) {
    std::size_t deg = 0;
    for (unsigned x : e) deg += x;
    if (deg <= r) {
      std::vector<FieldElement> row(pts.size());
      for (std::size_t j = 0; j < pts.size(); ++j) {
        FieldElement v = 1;
        for (std::size_t i = 0; i < m; ++i) v = f.mul(v, f.pow(pts[j][i], e[i]));
        row[j] = v;
      }
      rows.push_back(std::move(row));
    }
    std::size_t i = m;
    bool done = true;
    while (i > 0) {
      --i;
      if (++e[i] < q) {
        done = false;
        break;
      }
      e[i] = 0;
    }
    if (done) break;
  }
  LinearCode code = LinearCode::make(Matrix::from_rows(f, rows));
  check(code.dimension() == params.k, "reed_muller dimension mismatch");
  return code;
}

Polynomial::Polynomial(FiniteField field, std::size_t variables) : field_(std::move(field)), variables_(variables) {}

Polynomial Polynomial::constant(FiniteField field, std::size_t variables, FieldElement c) {
  Polynomial p(std::move(field), variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

Polynomial Polynomial::variable(FiniteField field, std::size_t variables, std::size_t index) {
  if (index >= variables) throw Error(ErrorKind::OutOfRange, "variable index " + std::to_string(index));
  Polynomial p(std::move(field), variables);
  Exponents e(variables, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

void Polynomial::add_term(const Exponents& e, FieldElement c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned Polynomial::max_variable_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_)
    for (unsigned x : e) d = std::max(d, x);
  return d;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  FieldElement sum = 0;
  for (const auto& [e, c] : terms_) {
    FieldElement v = c;
    for (std::size_t i = 0; i < variables_; ++i) v = field_.mul(v, field_.pow(point[i], e[i]));
    sum = field_.add(sum, v);
  }
  return sum;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial r = *this;
  for (const auto& [e, c] : other.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial r = *this;
  for (const auto& [e, c] : other.terms_) r.add_term(e, field_.neg(c));
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial r(field_, variables_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : other.terms_) {
      Exponents e(variables_);
      for (std::size_t i = 0; i < variables_; ++i) e[i] = a[i] + b[i];
      r.add_term(e, field_.mul(ca, cb));
    }
  return r;
}

Polynomial Polynomial::operator-(FieldElement c) const { return *this - constant(field_, variables_, c); }

std::vector<FieldElement> poly_codeword(const Polynomial& f) {
  if (f.max_variable_degree() >= f.field().order())
    throw Error(ErrorKind::DegreeTooHigh, "variable degree " + std::to_string(f.max_variable_degree()) +
                                              " >= q = " + std::to_string(f.field().order()));
  auto pts = affine_points(f.field(), f.variables());
  std::vector<FieldElement> out(pts.size());
  for (std::size_t j = 0; j < pts.size(); ++j) out[j] = f.evaluate(pts[j]);
  return out;
}

std::vector<std::vector<FieldElement>> projective_points(const FiniteField& field, std::size_t k) {
  std::vector<std::vector<FieldElement>> pts;
  for_each_vector(field.order(), k, [&](const auto& v) {
    if (is_canonical(v)) pts.push_back(v);
  });
  return pts;
}

LinearCode simplex(std::uint64_t q, std::size_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidParameters, "simplex needs k >= 1");
  FiniteField f = field_of(q);
  return projective_system_code(make_projective_system(f, k, projective_points(f, k)));
}

LinearCode mds_rs(std::uint64_t q, std::size_t n, std::size_t k) {
  FiniteField f = field_of(q);
  if (n > q + 1) throw Error(ErrorKind::LengthTooLong, "n = " + std::to_string(n) + " > q + 1");
  if (k < 1 || k > n) throw Error(ErrorKind::InvalidParameters, "need 1 <= k <= n");
  Matrix g(f, k, n);
  std::size_t affine = std::min<std::size_t>(n, q);
  for (std::size_t j = 0; j < affine; ++j)
    for (std::size_t i = 0; i < k; ++i) g(i, j) = f.pow(static_cast<FieldElement>(j), i);
  if (n == q + 1) g(k - 1, n - 1) = 1;
  LinearCode code = LinearCode::make(g);
  check(code.dimension() == k, "mds_rs dimension mismatch");
  if (auto size = code_size(code); size && *size <= Budget{}.codewords) {
    std::size_t d = n;
    for_each_codeword(code, Budget{}, [&](std::span<const FieldElement> w) {
      std::size_t wt = std::count_if(w.begin(), w.end(), [](FieldElement x) { return x != 0; });
      if (wt > 0) d = std::min(d, wt);
    });
    check(d == n - k + 1, "mds_rs is not MDS");
  }
  return code;
}

bool ProjectiveSystem::nondegenerate() const {
  if (points.empty()) return false;
  Matrix m = Matrix::from_rows(field, points);
  return rank(m) == k;
}

std::vector<FieldElement> canonical_point(const FiniteField& field, std::vector<FieldElement> v) {
  auto it = std::find_if(v.begin(), v.end(), [](FieldElement x) { return x != 0; });
  if (it == v.end()) throw Error(ErrorKind::InvalidParameters, "zero vector is not a projective point");
  FieldElement s = field.inv(*it);
  for (auto& x : v) x = field.mul(x, s);
  return v;
}

ProjectiveSystem make_projective_system(FiniteField field, std::size_t k,
                                        std::vector<std::vector<FieldElement>> points) {
  ProjectiveSystem s{std::move(field), k, {}};
  s.points.reserve(points.size());
  for (auto& p : points) {
    if (p.size() != k) throw Error(ErrorKind::InvalidParameters, "point of wrong length");
    for (FieldElement x : p)
      if (!s.field.contains(x)) throw Error(ErrorKind::InvalidParameters, "coordinate outside the field");
    s.points.push_back(canonical_point(s.field, std::move(p)));
  }
  return s;
}

LinearCode projective_system_code(const ProjectiveSystem& system) {
  if (!system.nondegenerate()) throw Error(ErrorKind::Degenerate, "points lie on a hyperplane");
  Matrix g(system.field, system.k, system.size());
  for (std::size_t j = 0; j < system.size(); ++j)
    for (std::size_t i = 0; i < system.k; ++i) g(i, j) = system.points[j][i];
  return LinearCode::make(g);
}

std::map<std::size_t, std::uint64_t> section_spectrum(const ProjectiveSystem& system, std::size_t codim,
                                                      const Budget& budget) {
  if (codim > system.k) throw Error(ErrorKind::OutOfRange, "codimension exceeds k");
  BigInt count = gaussian_binomial(system.k, codim, system.field.order());
  if (count > BigInt(static_cast<unsigned long>(budget.subcodes)))
    throw Error(ErrorKind::BudgetExceeded, "subspace enumeration of size " + count.get_str());
  std::map<std::size_t, std::uint64_t> hist;
  for_each_subspace(system.field, system.k, codim, [&](const Matrix& a) { ++hist[section_size(system, a)]; });
  return hist;
}

std::size_t ps_higher_weights(const ProjectiveSystem& system, std::size_t r, const Budget& budget) {
  if (r < 1 || r > system.k) throw Error(ErrorKind::OutOfRange, "r outside [1,k]");
  auto hist = section_spectrum(system, r, budget);
  return system.size() - hist.rbegin()->first;
}

ProjectiveSystem lines_meeting(const ProjectiveSystem& plane_system, std::size_t meeting) {
  if (plane_system.k != 3) throw Error(ErrorKind::InvalidParameters, "dualization needs a plane system");
  std::vector<std::vector<FieldElement>> lines;
  for (const auto& a : projective_points(plane_system.field, 3)) {
    Matrix m = Matrix::from_rows(plane_system.field, {a});
    if (section_size(plane_system, m) == meeting) lines.push_back(a);
  }
  return make_projective_system(plane_system.field, 3, std::move(lines));
}

ProjectiveSystem hyperoval(std::uint64_t q) {
  require_even(q);
  FiniteField f = field_of(q);
  std::vector<std::vector<FieldElement>> pts;
  for (FieldElement t = 0; t < q; ++t) pts.push_back({1, t, f.mul(t, t)});
  pts.push_back({0, 1, 0});
  pts.push_back({0, 0, 1});
  ProjectiveSystem s = make_projective_system(f, 3, std::move(pts));
  Budget unlimited;
  unlimited.subcodes = ~std::uint64_t{0};
  check_spectrum(section_spectrum(s, 1, unlimited), {0, 2}, "hyperoval");
  return s;
}

ProjectiveSystem dual_hyperoval(std::uint64_t q) {
  ProjectiveSystem s = lines_meeting(hyperoval(q), 2);
  check(s.size() == (q + 2) * (q + 1) / 2, "dual hyperoval size");
  Budget unlimited;
  unlimited.subcodes = ~std::uint64_t{0};
  check_spectrum(section_spectrum(s, 1, unlimited), {q + 1, (q + 2) / 2}, "dual hyperoval");
  return s;
}

ProjectiveSystem denniston_arc(std::uint64_t q, std::uint64_t h) {
  require_even(q);
  auto hp = prime_power(h);
  std::size_t e = prime_power(q)->second;
  if (!hp || hp->first != 2 || hp->second < 1 || hp->second >= e)
    throw Error(ErrorKind::InvalidDivisor, "h = " + std::to_string(h) + " is not 2^f with 0 < f < e");
  FiniteField f = field_of(q);
  FieldElement c = 0;
  for (;; ++c) {
    check(c < q, "no anisotropic quadratic");
    bool root = false;
    for (FieldElement x = 0; x < q && !root; ++x) root = f.add(f.add(f.mul(x, x), x), c) == 0;
    if (!root) break;
  }
  std::vector<std::vector<FieldElement>> pts;
  for (FieldElement x = 0; x < q; ++x)
    for (FieldElement y = 0; y < q; ++y) {
      FieldElement v = f.add(f.add(f.mul(x, x), f.mul(x, y)), f.mul(c, f.mul(y, y)));
      if (v < h) pts.push_back({x, y, 1});
    }
  ProjectiveSystem s = make_projective_system(f, 3, std::move(pts));
  check(s.size() == 1 + (q + 1) * (h - 1), "denniston arc size");
  Budget unlimited;
  unlimited.subcodes = ~std::uint64_t{0};
  check_spectrum(section_spectrum(s, 1, unlimited), {0, h}, "denniston arc");
  return s;
}

ProjectiveSystem ovoid(std::uint64_t q) {
  FiniteField f = field_of(q);
  if (q == 2) throw Error(ErrorKind::UnsupportedQ, "ovoid needs q > 2");
  FieldElement b = 0, c = 0;
  bool found = false;
  for (b = 0; b < q && !found; ++b)
    for (c = 0; c < q && !found; ++c) {
      bool root = false;
      for (FieldElement t = 0; t < q && !root; ++t) root = f.add(f.add(f.mul(t, t), f.mul(b, t)), c) == 0;
      if (!root) found = true;
    }
  check(found, "no irreducible binary form");
  --b;
  --c;
  std::vector<std::vector<FieldElement>> pts;
  for (const auto& x : projective_points(f, 4)) {
    FieldElement g = f.add(f.add(f.mul(x[2], x[2]), f.mul(b, f.mul(x[2], x[3]))), f.mul(c, f.mul(x[3], x[3])));
    if (f.mul(x[0], x[1]) == g) pts.push_back(x);
  }
  ProjectiveSystem s = make_projective_system(f, 4, std::move(pts));
  check(s.size() == q * q + 1, "ovoid size");
  Budget unlimited;
  unlimited.subcodes = ~std::uint64_t{0};
  check_spectrum(section_spectrum(s, 1, unlimited), {1, q + 1}, "ovoid");
  return s;
}

std::uint64_t projective_count(std::uint64_t q, long j) {
  if (j < 0) return 0;
  std::uint64_t r = 0;
  for (long i = 0; i <= j; ++i) r = r * q + 1;
  return r;
}

std::uint64_t hermitian_point_count(std::uint64_t q, long k) {
  BigInt qq = q;
  BigInt a, b, sq;
  mpz_pow_ui(a.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(b.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(k - 1));
  a -= (k % 2 == 0) ? 1 : -1;
  b -= ((k - 1) % 2 == 0) ? 1 : -1;
  BigInt n = a * b / (qq * qq - 1);
  return n.get_ui();
}

ProjectiveSystem hermitian(std::uint64_t q, std::size_t k, const Budget& budget) {
  if (k < 3) throw Error(ErrorKind::InvalidParameters, "hermitian needs k >= 3");
  FiniteField f = field_of(q * q);
  BigInt scan;
  mpz_ui_pow_ui(scan.get_mpz_t(), q * q, k);
  if (scan > BigInt(static_cast<unsigned long>(budget.codewords)))
    throw Error(ErrorKind::BudgetExceeded, "point scan of size " + scan.get_str());
  std::vector<std::vector<FieldElement>> pts;
  for (const auto& x : projective_points(f, k)) {
    FieldElement s = 0;
    for (FieldElement v : x) s = f.add(s, f.pow(v, q + 1));
    if (s == 0) pts.push_back(x);
  }
  ProjectiveSystem sys = make_projective_system(f, k, std::move(pts));
  check(sys.size() == hermitian_point_count(q, static_cast<long>(k)), "hermitian point count");
  Budget unlimited;
  unlimited.subcodes = ~std::uint64_t{0};
  std::size_t tangent = hermitian_point_count(q, static_cast<long>(k) - 1);
  std::size_t secant = 1 + q * q * hermitian_point_count(q, static_cast<long>(k) - 2);
  auto spectrum = section_spectrum(sys, 1, unlimited);
  check_spectrum(spectrum, {tangent, secant}, "hermitian");
  return sys;
}

ProjectiveSystem subfield_system(std::uint64_t q, std::size_t k) {
  if (k < 2) throw Error(ErrorKind::InvalidParameters, "subfield system needs k >= 2");
  FiniteField f = field_of(q * q);
  std::vector<std::vector<FieldElement>> pts;
  for (const auto& x : projective_points(f, k)) {
    bool inside = std::all_of(x.begin(), x.end(), [&](FieldElement v) { return f.pow(v, q) == v; });
    if (inside) pts.push_back(x);
  }
  ProjectiveSystem s = make_projective_system(f, k, std::move(pts));
  check(s.size() == projective_count(q, static_cast<long>(k) - 1), "subfield system size");
  Budget unlimited;
  unlimited.subcodes = ~std::uint64_t{0};
  check_spectrum(section_spectrum(s, 1, unlimited),
                 {projective_count(q, static_cast<long>(k) - 2), projective_count(q, static_cast<long>(k) - 3)},
                 "subfield system");
  return s;
}

}  // namespace resolv

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "resolv/budget.hpp"
#include "resolv/code.hpp"
#include "resolv/field.hpp"

namespace resolv {

// ---------------------------------------------------------------------------
// Reed-Muller codes

/// r = t(q-1) + s with 0 <= s <= q-2; n = q^m; d = (q-s) q^(m-t-1).
struct RMParameters {
  std::uint64_t q = 0;
  std::size_t r = 0;
  std::size_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  std::size_t t = 0;
  std::size_t s = 0;
};

RMParameters rm_parameters(std::uint64_t q, std::size_t r, std::size_t m);

/// Points of F_q^m as vectors of encodings, lexicographic with the first
/// coordinate most significant. This is the coordinate order of reed_muller.
std::vector<std::vector<FieldElement>> affine_points(const FiniteField& field, std::size_t m);

/// Evaluations of the monomials with per-variable exponent < q and total
/// degree <= r at affine_points(F_q, m).
LinearCode reed_muller(std::uint64_t q, std::size_t r, std::size_t m, const Budget& budget = {});

/// Sparse multivariate polynomial over a finite field; exponents are not
/// reduced modulo x^q - x.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  Polynomial(FiniteField field, std::size_t variables);
  static Polynomial constant(FiniteField field, std::size_t variables, FieldElement c);
  /// X_{index}, with index counted from 0.
  static Polynomial variable(FiniteField field, std::size_t variables, std::size_t index);

  const FiniteField& field() const { return field_; }
  std::size_t variables() const { return variables_; }
  const std::map<Exponents, FieldElement>& terms() const { return terms_; }
  unsigned max_variable_degree() const;
  unsigned total_degree() const;

  FieldElement evaluate(std::span<const FieldElement> point) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-(FieldElement c) const;

 private:
  void add_term(const Exponents& e, FieldElement c);

  FiniteField field_;
  std::size_t variables_;
  std::map<Exponents, FieldElement> terms_;
};

/// Evaluation vector of f in the reed_muller point order. DegreeTooHigh if
/// some variable has degree >= q.
std::vector<FieldElement> poly_codeword(const Polynomial& f);

// ---------------------------------------------------------------------------
// Simplex and Reed-Solomon codes

/// Canonical representatives of P^(k-1)(F_q): first nonzero coordinate 1,
/// lexicographic in the encodings.
std::vector<std::vector<FieldElement>> projective_points(const FiniteField& field, std::size_t k);

LinearCode simplex(std::uint64_t q, std::size_t k);

/// Polynomials of degree < k evaluated at n distinct field elements (in
/// encoding order); n = q + 1 adds the point at infinity.
LinearCode mds_rs(std::uint64_t q, std::size_t n, std::size_t k);

// ---------------------------------------------------------------------------
// Projective systems

/// A multiset of points of P^(k-1)(F_q), each stored as its canonical
/// representative; repeated entries carry multiplicity.
struct ProjectiveSystem {
  FiniteField field;
  std::size_t k = 0;
  std::vector<std::vector<FieldElement>> points;

  std::size_t size() const { return points.size(); }
  bool nondegenerate() const;
};

/// Scales v so its first nonzero coordinate is 1. Throws on the zero vector.
std::vector<FieldElement> canonical_point(const FiniteField& field, std::vector<FieldElement> v);
ProjectiveSystem make_projective_system(FiniteField field, std::size_t k,
                                        std::vector<std::vector<FieldElement>> points);

/// Generator matrix with the point vectors as columns. Degenerate if the
/// points lie on a hyperplane.
LinearCode projective_system_code(const ProjectiveSystem& system);

/// Histogram |P cap Pi| -> number of codimension-r subspaces Pi.
std::map<std::size_t, std::uint64_t> section_spectrum(const ProjectiveSystem& system, std::size_t codim,
                                                      const Budget& budget = {});
/// d_r(P) = n - max |P cap Pi| over codimension-r subspaces Pi.
std::size_t ps_higher_weights(const ProjectiveSystem& system, std::size_t r, const Budget& budget = {});

/// Plane systems only: the lines meeting P in exactly `meeting` points, as
/// points of the dual plane.
ProjectiveSystem lines_meeting(const ProjectiveSystem& plane_system, std::size_t meeting);

/// Conic {(1,t,t^2)} plus (0,1,0) and (0,0,1); q even.
ProjectiveSystem hyperoval(std::uint64_t q);
/// The C(q+2,2) secant lines of hyperoval(q) in the dual plane.
ProjectiveSystem dual_hyperoval(std::uint64_t q);
/// {(x:y:1) : x^2 + xy + c y^2 in H} with H the F_2-span of the first f
/// polynomial-basis elements (h = 2^f) and c the least element making the
/// form anisotropic.
ProjectiveSystem denniston_arc(std::uint64_t q, std::uint64_t h);
/// Elliptic quadric x0 x1 = x2^2 + b x2 x3 + c x3^2 in P^3(F_q), q > 2, with
/// (b, c) the least pair making the binary form irreducible.
ProjectiveSystem ovoid(std::uint64_t q);
/// Zeros of X_1^(q+1) + ... + X_k^(q+1) in P^(k-1)(F_{q^2}).
ProjectiveSystem hermitian(std::uint64_t q, std::size_t k, const Budget& budget = {});
/// P^(k-1)(F_q) inside P^(k-1)(F_{q^2}).
ProjectiveSystem subfield_system(std::uint64_t q, std::size_t k);

/// |P^j(F_q)|, zero for j < 0.
std::uint64_t projective_count(std::uint64_t q, long j);
/// Number of points of the Hermitian variety in P^(k-1)(F_{q^2}).
std::uint64_t hermitian_point_count(std::uint64_t q, long k);

}  // namespace resolv

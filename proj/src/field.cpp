#include "resolv/field.hpp"

#include <atomic>
#include <string>

#include "resolv/error.hpp"

namespace resolv {

namespace {

std::atomic<bool> g_fault_injection{false};

constexpr std::uint32_t kFullTableLimit = 256;

using Poly = std::vector<unsigned>;  // coefficients mod p, constant term first

// Remainder of a modulo monic b, both over GF(p).
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const unsigned lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t j = 0; j <= db; ++j) {
        a[shift + j] = (a[shift + j] + p - (lead * b[j]) % p) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

bool poly_is_zero(const Poly& a) {
  for (unsigned c : a)
    if (c != 0) return false;
  return true;
}

}  // namespace

namespace detail {

struct FieldTables {
  unsigned p = 0;
  unsigned e = 0;
  std::uint32_t q = 0;
  std::vector<unsigned> modulus;
  bool primitive = false;
  std::vector<std::uint32_t> exp;  // size 2(q-1) when primitive
  std::vector<std::uint32_t> log;  // size q when primitive
  std::vector<std::uint32_t> inv;  // size q when populated
  std::vector<std::uint32_t> neg;
  std::vector<std::uint16_t> add;  // q*q when q <= 256
  std::vector<std::uint16_t> mul;  // q*q when q <= 256

  Poly digits(FieldElement a) const {
    Poly d(e, 0);
    for (unsigned i = 0; i < e; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }

  FieldElement encode(const Poly& d) const {
    FieldElement v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
  }

  FieldElement add_digits(FieldElement a, FieldElement b) const {
    if (p == 2) return a ^ b;
    FieldElement v = 0, scale = 1;
    for (unsigned i = 0; i < e; ++i) {
      v += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return v;
  }

  FieldElement neg_digits(FieldElement a) const {
    FieldElement v = 0, scale = 1;
    for (unsigned i = 0; i < e; ++i) {
      v += ((p - a % p) % p) * scale;
      a /= p;
      scale *= p;
    }
    return v;
  }

  FieldElement mul_poly(FieldElement a, FieldElement b) const {
    if (e == 1) {
      return static_cast<FieldElement>((std::uint64_t{a} * b) % p);
    }
    const Poly da = digits(a), db = digits(b);
    Poly prod(2 * e - 1, 0);
    for (unsigned i = 0; i < e; ++i) {
      if (da[i] == 0) continue;
      for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    return encode(poly_mod(prod, modulus, p));
  }
};

}  // namespace detail

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<unsigned>(p), e);
}

bool is_irreducible(unsigned p, const std::vector<unsigned>& coefficients) {
  const std::size_t e = coefficients.size() - 1;
  if (e == 0) return false;
  if (e == 1) return true;
  for (std::size_t d = 1; d <= e / 2; ++d) {
    // All monic divisors of degree d: p^d choices of the lower coefficients.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly divisor(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      divisor[d] = 1;
      if (poly_is_zero(poly_mod(coefficients, divisor, p))) return false;
    }
  }
  return true;
}

FiniteField FiniteField::make(unsigned p, unsigned e, std::optional<std::vector<unsigned>> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (e == 0) throw Error(ErrorKind::InvalidParameters, "extension degree must be >= 1");
  std::uint64_t q64 = 1;
  for (unsigned i = 0; i < e; ++i) q64 *= p;
  if (q64 > (std::uint64_t{1} << 16))
    throw Error(ErrorKind::InvalidParameters, "field order above 2^16 is unsupported");

  auto t = std::make_shared<detail::FieldTables>();
  t->p = p;
  t->e = e;
  t->q = static_cast<std::uint32_t>(q64);

  if (modulus) {
    if (modulus->size() != e + 1 || modulus->back() != 1)
      throw Error(ErrorKind::InvalidParameters, "modulus must be monic of degree e");
    for (unsigned c : *modulus)
      if (c >= p) throw Error(ErrorKind::InvalidParameters, "modulus coefficient out of range");
    if (!is_irreducible(p, *modulus))
      throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over GF(p)");
    t->modulus = *modulus;
  } else {
    for (std::uint32_t code = 0; code < t->q; ++code) {
      Poly cand(e + 1, 0);
      std::uint32_t c = code;
      for (unsigned i = 0; i < e; ++i) {
        cand[i] = c % p;
        c /= p;
      }
      cand[e] = 1;
      if (is_irreducible(p, cand)) {
        t->modulus = cand;
        break;
      }
    }
  }

  const std::uint32_t q = t->q;
  t->neg.resize(q);
  for (FieldElement a = 0; a < q; ++a) t->neg[a] = t->neg_digits(a);

  // Class of x: the root of the modulus.
  FieldElement x = (e == 1) ? (p - t->modulus[0]) % p : p;
  if (x != 0 && q > 2) {
    std::vector<std::uint32_t> powers;
    powers.reserve(q - 1);
    FieldElement cur = 1;
    do {
      powers.push_back(cur);
      cur = t->mul_poly(cur, x);
    } while (cur != 1 && powers.size() < q);
    if (powers.size() == q - 1) {
      t->primitive = true;
      t->exp.resize(2 * (q - 1));
      t->log.assign(q, 0);
      for (std::uint32_t i = 0; i < q - 1; ++i) {
        t->exp[i] = t->exp[i + q - 1] = powers[i];
        t->log[powers[i]] = i;
      }
    }
  } else if (q == 2) {
    t->primitive = true;  // GF(2)* is trivial; x = 0 in GF(2) but 1 generates.
    t->exp = {1, 1};
    t->log = {0, 0};
  }

  if (q <= kFullTableLimit) {
    t->add.resize(std::size_t{q} * q);
    t->mul.resize(std::size_t{q} * q);
    t->inv.assign(q, 0);
    for (FieldElement a = 0; a < q; ++a) {
      for (FieldElement b = 0; b < q; ++b) {
        t->add[a * q + b] = static_cast<std::uint16_t>(t->add_digits(a, b));
        FieldElement m;
        if (t->primitive && q > 2) {
          m = (a == 0 || b == 0) ? 0 : t->exp[t->log[a] + t->log[b]];
        } else {
          m = t->mul_poly(a, b);
        }
        t->mul[a * q + b] = static_cast<std::uint16_t>(m);
        if (m == 1) t->inv[a] = b;
      }
    }
    if (g_fault_injection.load() && q >= 4) {
      t->mul[2 * q + 3] = static_cast<std::uint16_t>((t->mul[2 * q + 3] + 1) % q);
      t->mul[3 * q + 2] = t->mul[2 * q + 3];
    }
  } else if (t->primitive) {
    t->inv.assign(q, 0);
    for (FieldElement a = 1; a < q; ++a) t->inv[a] = t->exp[(q - 1 - t->log[a]) % (q - 1)];
  }
  return FiniteField(std::move(t));
}

FiniteField FiniteField::of_order(std::uint64_t q) {
  auto pe = prime_power(q);
  if (!pe) throw Error(ErrorKind::InvalidParameters, std::to_string(q) + " is not a prime power");
  return make(pe->first, pe->second);
}

unsigned FiniteField::characteristic() const { return t_->p; }
unsigned FiniteField::degree() const { return t_->e; }
std::uint32_t FiniteField::order() const { return t_->q; }
const std::vector<unsigned>& FiniteField::modulus() const { return t_->modulus; }
bool FiniteField::has_log_tables() const { return t_->primitive; }

FieldElement FiniteField::add(FieldElement a, FieldElement b) const {
  if (!t_->add.empty()) return t_->add[a * t_->q + b];
  return t_->add_digits(a, b);
}

FieldElement FiniteField::neg(FieldElement a) const { return t_->neg[a]; }

FieldElement FiniteField::sub(FieldElement a, FieldElement b) const { return add(a, t_->neg[b]); }

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const {
  if (!t_->mul.empty()) return t_->mul[a * t_->q + b];
  if (t_->primitive) return mul_log(a, b);
  return t_->mul_poly(a, b);
}

FieldElement FiniteField::mul_polynomial(FieldElement a, FieldElement b) const { return t_->mul_poly(a, b); }

FieldElement FiniteField::mul_log(FieldElement a, FieldElement b) const {
  if (!t_->primitive) throw Error(ErrorKind::InvalidParameters, "no log tables for this modulus");
  if (a == 0 || b == 0) return 0;
  return t_->exp[t_->log[a] + t_->log[b]];
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (!t_->inv.empty()) return t_->inv[a];
  return pow(a, t_->q - 2);
}

FieldElement FiniteField::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement FiniteField::pow(FieldElement a, std::uint64_t exponent) const {
  FieldElement result = 1, base = a;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

bool FiniteField::in_subfield(FieldElement a, unsigned d) const {
  std::uint64_t pd = 1;
  for (unsigned i = 0; i < d; ++i) pd *= t_->p;
  return pow(a, pd) == a;
}

bool operator==(const FiniteField& a, const FiniteField& b) {
  return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->modulus == b.t_->modulus);
}

BigInt gaussian_binomial(std::uint64_t k, std::uint64_t i, std::uint64_t q) {
  if (i > k) return 0;
  BigInt num = 1, den = 1, qq = static_cast<unsigned long>(q);
  for (std::uint64_t j = 0; j < i; ++j) {
    BigInt a, b;
    mpz_pow_ui(a.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(k - j));
    mpz_pow_ui(b.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(j + 1));
    num *= a - 1;
    den *= b - 1;
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

namespace testing {
void set_field_fault_injection(bool enabled) { g_fault_injection.store(enabled); }
}  // namespace testing

}  // namespace resolv

#include "mcgorbit/cyclo.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcgorbit {

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_phi requires n >= 1");
  std::int64_t result = n;
  std::int64_t m = n;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact division of integer polynomials, divisor monic. Little-endian.
std::vector<mpz_class> divide_exact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  const auto dn = static_cast<std::ptrdiff_t>(num.size()) - 1;
  const auto dd = static_cast<std::ptrdiff_t>(den.size()) - 1;
  if (dn < dd) throw std::logic_error("polynomial division underflow");
  std::vector<mpz_class> quot(static_cast<std::size_t>(dn - dd + 1));
  for (std::ptrdiff_t i = dn - dd; i >= 0; --i) {
    mpz_class c = num[static_cast<std::size_t>(i + dd)];
    quot[static_cast<std::size_t>(i)] = c;
    if (c == 0) continue;
    for (std::ptrdiff_t j = 0; j <= dd; ++j) {
      num[static_cast<std::size_t>(i + j)] -= c * den[static_cast<std::size_t>(j)];
    }
  }
  for (const mpz_class& c : num) {
    if (c != 0) throw std::logic_error("polynomial division not exact");
  }
  return quot;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic polynomial requires n >= 1");
  // x^n - 1
  std::vector<mpz_class> poly(static_cast<std::size_t>(n + 1));
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  }
  return poly;
}

Field::Field(std::int64_t n) : n_(n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  modulus_ = cyclotomic_polynomial(n);
  phi_ = static_cast<std::int64_t>(modulus_.size()) - 1;
  // x^phi = -(low-order part of Phi_N); extend by multiplying with x.
  if (phi_ >= 2) {
    high_power_.reserve(static_cast<std::size_t>(phi_ - 1));
    std::vector<mpq_class> cur(static_cast<std::size_t>(phi_));
    for (std::int64_t j = 0; j < phi_; ++j) {
      cur[static_cast<std::size_t>(j)] = mpq_class(-modulus_[static_cast<std::size_t>(j)]);
    }
    high_power_.push_back(cur);
    for (std::int64_t k = 1; k <= phi_ - 2; ++k) {
      std::vector<mpq_class> next(static_cast<std::size_t>(phi_));
      const mpq_class top = cur[static_cast<std::size_t>(phi_ - 1)];
      for (std::int64_t j = phi_ - 1; j >= 1; --j) {
        next[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)];
      }
      next[0] = 0;
      if (top != 0) {
        const auto& xphi = high_power_[0];
        for (std::int64_t j = 0; j < phi_; ++j) {
          next[static_cast<std::size_t>(j)] += top * xphi[static_cast<std::size_t>(j)];
        }
      }
      high_power_.push_back(next);
      cur = std::move(next);
    }
  }
}

FieldPtr make_field(std::int64_t n) { return std::make_shared<const Field>(n); }

void CycloElt::check_same_field(const CycloElt& a, const CycloElt& b) {
  if (!a.field_ || !b.field_) throw std::logic_error("operation on detached cyclotomic element");
  if (a.field_->order() != b.field_->order()) {
    throw std::invalid_argument("mixed cyclotomic orders: N=" + std::to_string(a.field_->order()) +
                                " vs N=" + std::to_string(b.field_->order()));
  }
}

CycloElt CycloElt::zero(const FieldPtr& field) {
  return CycloElt(field, std::vector<mpq_class>(static_cast<std::size_t>(field->degree())));
}

CycloElt CycloElt::one(const FieldPtr& field) { return from_int(field, 1); }

CycloElt CycloElt::from_rational(const FieldPtr& field, const mpq_class& q) {
  CycloElt e = zero(field);
  e.coeffs_[0] = q;
  e.coeffs_[0].canonicalize();  // two-argument mpq_class constructors skip this
  return e;
}

CycloElt CycloElt::from_int(const FieldPtr& field, long v) {
  return from_rational(field, mpq_class(v));
}

CycloElt CycloElt::zeta_pow(const FieldPtr& field, std::int64_t k) {
  const std::int64_t n = field->order();
  k %= n;
  if (k < 0) k += n;
  CycloElt e = one(field);
  if (k == 0) return e;
  if (k < field->degree()) {
    e.coeffs_[0] = 0;
    e.coeffs_[static_cast<std::size_t>(k)] = 1;
    return e;
  }
  // Multiply by x one step at a time; k < N stays small.
  for (std::int64_t step = 0; step < k; ++step) {
    std::vector<mpq_class> next(e.coeffs_.size());
    const mpq_class top = e.coeffs_.back();
    for (std::size_t j = e.coeffs_.size() - 1; j >= 1; --j) next[j] = e.coeffs_[j - 1];
    next[0] = 0;
    if (top != 0) {
      if (field->degree() == 1) {
        // x == modulus root: x = -Phi[0]
        next[0] += top * mpq_class(-field->modulus()[0]);
      } else {
        const auto& xphi = field->high_power(0);
        for (std::size_t j = 0; j < next.size(); ++j) next[j] += top * xphi[j];
      }
    }
    e.coeffs_ = std::move(next);
  }
  return e;
}

bool CycloElt::is_zero() const {
  for (const mpq_class& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloElt::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

CycloElt operator+(const CycloElt& a, const CycloElt& b) {
  CycloElt::check_same_field(a, b);
  CycloElt out = a;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
  return out;
}

CycloElt operator-(const CycloElt& a, const CycloElt& b) {
  CycloElt::check_same_field(a, b);
  CycloElt out = a;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
  return out;
}

CycloElt CycloElt::operator-() const {
  CycloElt out = *this;
  for (mpq_class& c : out.coeffs_) c = -c;
  return out;
}

CycloElt operator*(const CycloElt& a, const CycloElt& b) {
  CycloElt::check_same_field(a, b);
  const std::size_t phi = a.coeffs_.size();
  std::vector<mpq_class> prod(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  CycloElt out = CycloElt::zero(a.field_);
  for (std::size_t i = 0; i < phi; ++i) out.coeffs_[i] = std::move(prod[i]);
  for (std::size_t k = phi; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const auto& hp = a.field_->high_power(static_cast<std::int64_t>(k - phi));
    for (std::size_t j = 0; j < phi; ++j) out.coeffs_[j] += prod[k] * hp[j];
  }
  return out;
}

namespace {

using QPoly = std::vector<mpq_class>;  // little-endian, may carry leading zeros

std::ptrdiff_t degree_of(const QPoly& p) {
  for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(p.size()) - 1; i >= 0; --i) {
    if (p[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

// p - q*scale*x^shift in place
void submul(QPoly& p, const QPoly& q, const mpq_class& scale, std::size_t shift) {
  if (p.size() < q.size() + shift) p.resize(q.size() + shift);
  for (std::size_t i = 0; i < q.size(); ++i) p[i + shift] -= scale * q[i];
}

}  // namespace

CycloElt CycloElt::inverse() const {
  if (!field_) throw std::logic_error("inverse of detached cyclotomic element");
  if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta_N)");
  // Extended Euclid in Q[x] for gcd(a, Phi_N) = 1: maintain r = s*a mod Phi.
  QPoly r0(field_->modulus().size());
  for (std::size_t i = 0; i < r0.size(); ++i) r0[i] = mpq_class(field_->modulus()[i]);
  QPoly r1 = coeffs_;
  QPoly s0 = {mpq_class(0)};
  QPoly s1 = {mpq_class(1)};
  while (true) {
    const std::ptrdiff_t d1 = degree_of(r1);
    if (d1 < 0) throw std::logic_error("nonzero element shares a factor with the modulus");
    if (d1 == 0) {
      // r1 is a nonzero constant: inverse = s1 / r1.
      const mpq_class c = r1[0];
      CycloElt out = zero(field_);
      const std::ptrdiff_t ds = degree_of(s1);
      for (std::ptrdiff_t i = 0; i <= ds; ++i) {
        out.coeffs_[static_cast<std::size_t>(i)] = s1[static_cast<std::size_t>(i)] / c;
      }
      return out;
    }
    // r0 = q*r1 + r; one long-division pass
    std::ptrdiff_t d0 = degree_of(r0);
    while (d0 >= d1) {
      const mpq_class scale =
          r0[static_cast<std::size_t>(d0)] / r1[static_cast<std::size_t>(d1)];
      submul(r0, r1, scale, static_cast<std::size_t>(d0 - d1));
      submul(s0, s1, scale, static_cast<std::size_t>(d0 - d1));
      d0 = degree_of(r0);
    }
    std::swap(r0, r1);
    std::swap(s0, s1);
  }
}

CycloElt CycloElt::pow(std::int64_t e) const {
  if (!field_) throw std::logic_error("pow of detached cyclotomic element");
  CycloElt base = *this;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  CycloElt acc = one(field_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const CycloElt& a, const CycloElt& b) {
  if (!a.field_ || !b.field_) return !a.field_ && !b.field_;
  if (a.field_->order() != b.field_->order()) return false;
  return a.coeffs_ == b.coeffs_;
}

int CycloElt::compare(const CycloElt& a, const CycloElt& b) {
  check_same_field(a, b);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::optional<std::int64_t> CycloElt::as_root_of_unity() const {
  if (!field_ || is_zero()) return std::nullopt;
  // The torsion of Q(zeta_N)^* is generated by -zeta_N, of order lcm(2, N).
  const std::int64_t bound = 2 * field_->order();
  CycloElt acc = *this;
  for (std::int64_t m = 1; m <= bound; ++m) {
    if (acc.is_one()) return m;
    acc = acc * *this;
  }
  return std::nullopt;
}

std::vector<std::string> CycloElt::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const mpq_class& c : coeffs_) out.push_back(c.get_str());
  return out;
}

CycloElt CycloElt::from_strings(const FieldPtr& field, const std::vector<std::string>& coeffs) {
  if (static_cast<std::int64_t>(coeffs.size()) != field->degree()) {
    throw std::invalid_argument("expected " + std::to_string(field->degree()) +
                                " coefficients for Q(zeta_" + std::to_string(field->order()) +
                                "), got " + std::to_string(coeffs.size()));
  }
  CycloElt e = zero(field);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    mpq_class q;
    try {
      q = mpq_class(coeffs[i]);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad rational literal '" + coeffs[i] + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + coeffs[i] + "'");
    q.canonicalize();
    e.coeffs_[i] = q;
  }
  return e;
}

std::string CycloElt::serialize() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) s += ',';
    s += coeffs_[i].get_str();
  }
  return s;
}

}  // namespace mcgorbit

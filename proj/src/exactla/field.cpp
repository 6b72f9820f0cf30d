#include "exactla/field.hpp"

#include <cctype>

namespace stratakit::la {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw FieldError("element not invertible mod " + std::to_string(p));
  return t < 0 ? t + p : t;
}

Field Field::gf(std::int64_t p) {
  // products of residues must fit in int64
  if (!la::is_prime(p) || p >= (std::int64_t{1} << 31))
    throw FieldError("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
  return Field(Kind::Prime, p);
}

std::string Field::name() const {
  return is_prime() ? "GF(" + std::to_string(p_) + ")" : "Q";
}

Scalar::Scalar(const Field& f, std::int64_t v) : field_(f) {
  if (f.is_prime()) {
    std::int64_t p = f.characteristic();
    g_ = ((v % p) + p) % p;
  } else {
    q_ = mpq_class(static_cast<long>(v));
  }
}

Scalar::Scalar(const Field& f, const mpq_class& v) : field_(f) {
  if (f.is_prime()) {
    std::int64_t p = f.characteristic();
    mpz_class num = v.get_num() % p;
    mpz_class den = v.get_den() % p;
    std::int64_t n = num.get_si();
    std::int64_t d = den.get_si();
    g_ = (((n % p) + p) % p) * mod_inverse(d, p) % p;
  } else {
    q_ = v;
    q_.canonicalize();
  }
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw FieldError("empty coefficient");
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  bool slash = false;
  if (i == t.size()) throw FieldError("malformed coefficient '" + text + "'");
  for (std::size_t k = i; k < t.size(); ++k) {
    if (t[k] == '/') {
      if (slash || k == i || k + 1 == t.size()) throw FieldError("malformed coefficient '" + text + "'");
      slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(t[k]))) {
      throw FieldError("malformed coefficient '" + text + "'");
    }
  }
  if (t[0] == '+') t.erase(0, 1);
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw FieldError("malformed coefficient '" + text + "'");
  if (q.get_den() == 0) throw FieldError("zero denominator in '" + text + "'");
  q.canonicalize();
  if (f.is_prime() && q.get_den() % f.characteristic() == 0)
    throw FieldError("denominator not invertible in " + f.name() + ": '" + text + "'");
  return Scalar(f, q);
}

bool Scalar::is_zero() const { return field_.is_prime() ? g_ == 0 : q_ == 0; }
bool Scalar::is_one() const { return field_.is_prime() ? g_ == 1 : q_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
  if (field_.is_prime()) return Scalar(field_, (g_ + o.g_) % field_.characteristic());
  return Scalar(field_, mpq_class(q_ + o.q_));
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (field_.is_prime()) return Scalar(field_, g_ - o.g_);
  return Scalar(field_, mpq_class(q_ - o.q_));
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (field_.is_prime()) return Scalar(field_, (g_ * o.g_) % field_.characteristic());
  return Scalar(field_, mpq_class(q_ * o.q_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  if (field_.is_prime()) return Scalar(field_, mod_inverse(g_, field_.characteristic()));
  return Scalar(field_, mpq_class(1 / q_));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const { return Scalar::zero(field_) - *this; }

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_prime() ? g_ == o.g_ : q_ == o.q_;
}

std::string Scalar::to_string() const {
  return field_.is_prime() ? std::to_string(g_) : q_.get_str();
}

}  // namespace stratakit::la

#include "galecubic/field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace galecubic {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct FieldRegistry {
  std::mutex mu;
  std::map<std::string, std::unique_ptr<Field>> fields;

  static FieldRegistry& get() {
    static FieldRegistry r;
    return r;
  }

  const Field& intern(const std::string& key, Field::Base base, std::int64_t p, bool ext) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = fields.find(key);
    if (it != fields.end()) return *it->second;
    auto f = std::unique_ptr<Field>(new Field());
    f->base_ = base;
    f->p_ = p;
    f->extension_ = ext;
    f->descriptor_ = key;
    if (ext) {
      f->has_xi_ = true;
    } else if (base == Field::Base::Prime && p % 3 == 1) {
      for (std::int64_t x = 0; x < p; ++x)
        if ((x * x + x + 1) % p == 0) f->xi_roots_.push_back(x);
      f->has_xi_ = true;
    }
    const Field& ref = *f;
    fields.emplace(key, std::move(f));
    return ref;
  }
};

const Field& Field::rationals() {
  static const Field& q = FieldRegistry::get().intern("rational", Base::Rational, 0, false);
  return q;
}

const Field& Field::prime(std::int64_t p) {
  if (!is_prime(p)) throw InvalidInput("prime field requires a prime, got " + std::to_string(p));
  if (p > (std::int64_t{1} << 31)) throw InvalidInput("prime too large for word-size arithmetic");
  return FieldRegistry::get().intern("prime:" + std::to_string(p), Base::Prime, p, false);
}

const Field& Field::cyclotomic3(const Field& base) {
  if (base.is_extension()) return base;
  if (base.is_rational_base())
    return FieldRegistry::get().intern("cyclo3:rational", Base::Rational, 0, true);
  const std::int64_t p = base.characteristic();
  if (p == 3) throw InvalidInput("no primitive cube root of unity in characteristic 3");
  if (p % 3 == 1) return base;
  return FieldRegistry::get().intern("cyclo3:prime:" + std::to_string(p), Base::Prime, p, true);
}

const Field& Field::parse(const std::string& d) {
  if (d == "rational" || d == "rationals" || d == "Q") return rationals();
  if (d.rfind("prime:", 0) == 0) {
    try {
      return prime(std::stoll(d.substr(6)));
    } catch (const std::logic_error&) {
      throw InvalidInput("bad field descriptor: " + d);
    }
  }
  if (d.rfind("cyclo3:", 0) == 0) return cyclotomic3(parse(d.substr(7)));
  throw InvalidInput("bad field descriptor: " + d);
}

std::optional<std::int64_t> Field::order() const {
  if (base_ == Base::Rational) return std::nullopt;
  return extension_ ? p_ * p_ : p_;
}

namespace {

using Coord = Scalar::Coord;

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = mod(a, p);
  if (nr == 0) throw std::domain_error("division by zero in prime field");
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return mod(t, p);
}

Coord c_zero(const Field& f) {
  if (f.is_rational_base()) return mpq_class(0);
  return std::int64_t{0};
}

bool c_is_zero(const Coord& c) {
  if (auto* i = std::get_if<std::int64_t>(&c)) return *i == 0;
  return sgn(std::get<mpq_class>(c)) == 0;
}

Coord c_add(const Field& f, const Coord& x, const Coord& y) {
  if (f.is_rational_base()) return mpq_class(std::get<mpq_class>(x) + std::get<mpq_class>(y));
  return mod(std::get<std::int64_t>(x) + std::get<std::int64_t>(y), f.characteristic());
}

Coord c_sub(const Field& f, const Coord& x, const Coord& y) {
  if (f.is_rational_base()) return mpq_class(std::get<mpq_class>(x) - std::get<mpq_class>(y));
  return mod(std::get<std::int64_t>(x) - std::get<std::int64_t>(y), f.characteristic());
}

Coord c_mul(const Field& f, const Coord& x, const Coord& y) {
  if (f.is_rational_base()) return mpq_class(std::get<mpq_class>(x) * std::get<mpq_class>(y));
  return mod(std::get<std::int64_t>(x) * std::get<std::int64_t>(y), f.characteristic());
}

Coord c_neg(const Field& f, const Coord& x) {
  if (f.is_rational_base()) return mpq_class(-std::get<mpq_class>(x));
  return mod(-std::get<std::int64_t>(x), f.characteristic());
}

Coord c_inv(const Field& f, const Coord& x) {
  if (c_is_zero(x)) throw std::domain_error("division by zero");
  if (f.is_rational_base()) return mpq_class(1 / std::get<mpq_class>(x));
  return inv_mod(std::get<std::int64_t>(x), f.characteristic());
}

Coord c_normalize(const Field& f, Coord c) {
  if (f.is_rational_base()) {
    if (auto* i = std::get_if<std::int64_t>(&c)) return mpq_class(static_cast<long>(*i));
    std::get<mpq_class>(c).canonicalize();
    return c;
  }
  if (auto* q = std::get_if<mpq_class>(&c)) {
    mpz_class num = q->get_num() % f.characteristic();
    mpz_class den = q->get_den() % f.characteristic();
    std::int64_t n = mod(num.get_si(), f.characteristic());
    std::int64_t d = mod(den.get_si(), f.characteristic());
    return mod(n * inv_mod(d, f.characteristic()), f.characteristic());
  }
  return mod(std::get<std::int64_t>(c), f.characteristic());
}

std::string c_str(const Coord& c) {
  if (auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return std::get<mpq_class>(c).get_str();
}

bool c_less(const Coord& x, const Coord& y) {
  if (auto* i = std::get_if<std::int64_t>(&x)) return *i < std::get<std::int64_t>(y);
  return std::get<mpq_class>(x) < std::get<mpq_class>(y);
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return mpq_class(n, d);
}

// Tonelli-Shanks in a finite field of order q.
std::optional<Scalar> finite_sqrt(const Scalar& x) {
  const Field& f = x.field();
  if (x.is_zero()) return x;
  const std::uint64_t q = static_cast<std::uint64_t>(*f.order());
  if (f.characteristic() == 2) return x.pow(q / 2);
  if (!x.pow((q - 1) / 2).is_one()) return std::nullopt;
  std::uint64_t s = 0, odd = q - 1;
  while (odd % 2 == 0) {
    odd /= 2;
    ++s;
  }
  // Find a non-residue by enumerating elements.
  Scalar z = f.zero();
  const std::int64_t p = f.characteristic();
  for (std::int64_t k = 2; k < static_cast<std::int64_t>(q); ++k) {
    Scalar cand = f.is_extension() ? Scalar(f, mod(k, p), k / p) : f.from_int(k);
    if (!cand.pow((q - 1) / 2).is_one()) {
      z = cand;
      break;
    }
  }
  std::uint64_t m = s;
  Scalar c = z.pow(odd);
  Scalar t = x.pow(odd);
  Scalar r = x.pow((odd + 1) / 2);
  while (!t.is_one()) {
    std::uint64_t i = 0;
    Scalar tt = t;
    while (!tt.is_one()) {
      tt = tt * tt;
      ++i;
    }
    Scalar b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = b * b;
    m = i;
    c = b * b;
    t = t * c;
    r = r * b;
  }
  return r;
}

}  // namespace

Scalar Field::zero() const { return Scalar(*this, c_zero(*this), c_zero(*this)); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const {
  if (is_rational_base()) return Scalar(*this, mpq_class(v), c_zero(*this));
  return Scalar(*this, std::int64_t{v}, c_zero(*this));
}

Scalar Field::from_rational(const mpq_class& q) const { return Scalar(*this, q, c_zero(*this)); }

Scalar Field::xi() const {
  if (extension_) return Scalar(*this, c_zero(*this), is_rational_base() ? Coord(mpq_class(1)) : Coord(std::int64_t{1}));
  if (!xi_roots_.empty()) return from_int(static_cast<long>(xi_roots_.front()));
  throw InvalidInput("field " + descriptor_ + " has no primitive cube root of unity");
}

Scalar::Scalar() : field_(&Field::rationals()), a_(mpq_class(0)), b_(mpq_class(0)) {}

Scalar::Scalar(const Field& f, Coord a, Coord b)
    : field_(&f), a_(c_normalize(f, std::move(a))), b_(c_normalize(f, std::move(b))) {
  if (!f.is_extension() && !c_is_zero(b_))
    throw InvalidInput("xi-component given for a field without xi as a separate generator");
}

const Field& common_field(const Scalar& x, const Scalar& y) {
  if (x.field() != y.field())
    throw InvalidInput("field mismatch: " + x.field().descriptor() + " vs " + y.field().descriptor());
  return x.field();
}

bool Scalar::is_zero() const { return c_is_zero(a_) && c_is_zero(b_); }

bool Scalar::is_one() const { return *this == field_->one(); }

Scalar Scalar::operator+(const Scalar& o) const {
  const Field& f = common_field(*this, o);
  Scalar r = raw(f);
  r.a_ = c_add(f, a_, o.a_);
  r.b_ = c_add(f, b_, o.b_);
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  const Field& f = common_field(*this, o);
  Scalar r = raw(f);
  r.a_ = c_sub(f, a_, o.a_);
  r.b_ = c_sub(f, b_, o.b_);
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = raw(*field_);
  r.a_ = c_neg(*field_, a_);
  r.b_ = c_neg(*field_, b_);
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  const Field& f = common_field(*this, o);
  Scalar r = raw(f);
  if (!f.is_extension()) {
    r.a_ = c_mul(f, a_, o.a_);
    r.b_ = c_zero(f);
    return r;
  }
  // (a + b xi)(c + d xi) = (ac - bd) + (ad + bc - bd) xi
  Coord ac = c_mul(f, a_, o.a_);
  Coord bd = c_mul(f, b_, o.b_);
  Coord ad = c_mul(f, a_, o.b_);
  Coord bc = c_mul(f, b_, o.a_);
  r.a_ = c_sub(f, ac, bd);
  r.b_ = c_sub(f, c_add(f, ad, bc), bd);
  return r;
}

Scalar Scalar::inverse() const {
  const Field& f = *field_;
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r = raw(f);
  if (!f.is_extension()) {
    r.a_ = c_inv(f, a_);
    r.b_ = c_zero(f);
    return r;
  }
  // N(a + b xi) = a^2 - ab + b^2, conjugate = (a - b) - b xi
  Coord norm = c_add(f, c_sub(f, c_mul(f, a_, a_), c_mul(f, a_, b_)), c_mul(f, b_, b_));
  Coord ninv = c_inv(f, norm);
  r.a_ = c_mul(f, c_sub(f, a_, b_), ninv);
  r.b_ = c_mul(f, c_neg(f, b_), ninv);
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return c_is_zero(c_sub(*field_, a_, o.a_)) && c_is_zero(c_sub(*field_, b_, o.b_));
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar base = *this, acc = field_->one();
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::optional<Scalar> Scalar::sqrt() const {
  const Field& f = *field_;
  if (!f.is_rational_base()) return finite_sqrt(*this);
  if (!f.is_extension()) {
    auto r = rational_sqrt(std::get<mpq_class>(a_));
    if (!r) return std::nullopt;
    return f.from_rational(*r);
  }
  // Q(xi) = Q(s) with s = 1 + 2 xi, s^2 = -3. Write x = u + v s and solve
  // (X + Y s)^2 = u + v s: X^2 - 3Y^2 = u, 2XY = v.
  const mpq_class a = std::get<mpq_class>(a_), b = std::get<mpq_class>(b_);
  const mpq_class v = b / 2, u = a - b / 2;
  auto make = [&](const mpq_class& X, const mpq_class& Y) {
    // X + Y(1 + 2xi) = (X + Y) + 2Y xi
    return Scalar(f, mpq_class(X + Y), mpq_class(2 * Y));
  };
  if (sgn(v) == 0) {
    if (auto r = rational_sqrt(u)) return make(*r, 0);
    if (auto r = rational_sqrt(mpq_class(-u / 3))) return make(0, *r);
    return std::nullopt;
  }
  auto n = rational_sqrt(mpq_class(u * u + 3 * v * v));
  if (!n) return std::nullopt;
  for (const mpq_class& cand : {mpq_class((u + *n) / 2), mpq_class((u - *n) / 2)}) {
    if (sgn(cand) <= 0) continue;
    if (auto X = rational_sqrt(cand)) {
      mpq_class Y = v / (2 * *X);
      return make(*X, Y);
    }
  }
  return std::nullopt;
}

mpq_class Scalar::to_rational() const {
  if (!field_->is_rational_base() || !c_is_zero(b_))
    throw InvalidInput("scalar is not a rational number");
  return std::get<mpq_class>(a_);
}

std::int64_t Scalar::to_residue() const {
  if (field_->is_rational_base() || !c_is_zero(b_))
    throw InvalidInput("scalar is not a prime-field residue");
  return std::get<std::int64_t>(a_);
}

std::string Scalar::str() const {
  if (!field_->is_extension()) return c_str(a_);
  return c_str(a_) + "+" + c_str(b_) + "*xi";
}

bool Scalar::canonical_less(const Scalar& o) const {
  if (c_less(a_, o.a_)) return true;
  if (c_less(o.a_, a_)) return false;
  return c_less(b_, o.b_);
}

}  // namespace galecubic

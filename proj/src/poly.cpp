#include "galecubic/poly.hpp"

#include <algorithm>
#include <sstream>

namespace galecubic {

std::vector<std::string> default_names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<Exponent> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Exponent> out;
  Exponent e(nvars, 0);
  // Recursive fill: x0 gets as much as possible first.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (nvars == 0) return;
    if (i + 1 == nvars) {
      e[i] = static_cast<std::uint16_t>(left);
      out.push_back(e);
      return;
    }
    for (int k = static_cast<int>(left); k >= 0; --k) {
      e[i] = static_cast<std::uint16_t>(k);
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

// ---- MultiPoly ------------------------------------------------------------

MultiPoly::MultiPoly() : MultiPoly(Field::rationals(), 0) {}

MultiPoly::MultiPoly(const Field& f, std::size_t nvars)
    : field_(&f), nvars_(nvars), names_(std::make_shared<std::vector<std::string>>(default_names("X", nvars))) {}

MultiPoly::MultiPoly(const Field& f, std::vector<std::string> names)
    : field_(&f), nvars_(names.size()), names_(std::make_shared<std::vector<std::string>>(std::move(names))) {}

MultiPoly MultiPoly::with_names(std::vector<std::string> names) const {
  if (names.size() != nvars_) throw InvalidInput("with_names: wrong number of names");
  MultiPoly out = *this;
  out.names_ = std::make_shared<std::vector<std::string>>(std::move(names));
  return out;
}

MultiPoly MultiPoly::zero_like() const {
  MultiPoly out = *this;
  out.terms_.clear();
  return out;
}

MultiPoly MultiPoly::constant(const Field& f, std::size_t nvars, const Scalar& c) {
  MultiPoly p(f, nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const Field& f, std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw InvalidInput("variable index out of range");
  MultiPoly p(f, nvars);
  Exponent e(nvars, 0);
  e[i] = 1;
  p.add_term(e, f.one());
  return p;
}

MultiPoly MultiPoly::linear_form(const Field& f, const std::vector<Scalar>& coeffs) {
  MultiPoly p(f, coeffs.size());
  Exponent e(coeffs.size(), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    e[i] = 1;
    p.add_term(e, coeffs[i]);
    e[i] = 0;
  }
  return p;
}

MultiPoly MultiPoly::monomial(const Field& f, const Exponent& e, const Scalar& c) {
  MultiPoly p(f, e.size());
  p.add_term(e, c);
  return p;
}

Scalar MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_->zero() : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != nvars_) throw InvalidInput("exponent vector has wrong length");
  if (c.field() != *field_) throw InvalidInput("coefficient field mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

bool MultiPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto v : e) s += v;
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

std::vector<Scalar> MultiPoly::linear_coeffs() const {
  std::vector<Scalar> out(nvars_, field_->zero());
  Exponent e(nvars_, 0);
  for (std::size_t i = 0; i < nvars_; ++i) {
    e[i] = 1;
    out[i] = coefficient(e);
    e[i] = 0;
  }
  return out;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (field_ != o.field_) throw InvalidInput("polynomial field mismatch");
  if (nvars_ != o.nvars_) throw InvalidInput("polynomial variable count mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator*(const Scalar& s) const {
  MultiPoly r = zero_like();
  if (s.is_zero()) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * s);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r = zero_like();
  Exponent e(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly acc = constant(*field_, nvars_, field_->one()).with_names(*names_);
  for (unsigned i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= nvars_) throw InvalidInput("derivative: variable index out of range");
  MultiPoly r = zero_like();
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    r.add_term(d, c * field_->from_int(e[var]));
  }
  return r;
}

Scalar MultiPoly::evaluate(const std::vector<Scalar>& pt) const {
  if (pt.size() != nvars_) throw InvalidInput("evaluate: point has wrong dimension");
  Scalar acc = field_->zero();
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i]) t *= pt[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
  if (images.size() != nvars_) throw InvalidInput("compose: wrong number of images");
  if (images.empty()) return *this;
  const MultiPoly& proto = images.front();
  for (const auto& im : images) proto.check_compatible(im);
  // powers[i][k] = images[i]^k, filled lazily.
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  auto power = [&](std::size_t i, unsigned k) -> const MultiPoly& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(constant(*proto.field_, proto.nvars_, proto.field_->one()).with_names(*proto.names_));
    while (v.size() <= k) v.push_back(v.back() * images[i]);
    return v[k];
  };
  MultiPoly out = proto.zero_like();
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(*proto.field_, proto.nvars_, c).with_names(*proto.names_);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i]) t = t * power(i, e[i]);
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::substitute_linear(const FMatrix& t) const {
  if (t.rows() != nvars_) throw InvalidInput("substitute_linear: matrix has wrong row count");
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < nvars_; ++i) images.push_back(linear_form(*field_, t.row(i)));
  if (images.empty()) return *this;
  return compose(images);
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
  check_compatible(d);
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  MultiPoly q = zero_like(), r = *this;
  const auto& [de, dc] = *d.terms_.rbegin();
  const Scalar dinv = dc.inverse();
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms_.rbegin();
    Exponent qe(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (re[i] < de[i]) return std::nullopt;
      qe[i] = re[i] - de[i];
    }
    const Scalar qc = rc * dinv;
    q.add_term(qe, qc);
    r -= monomial(*field_, qe, qc) * d;
  }
  return q;
}

MultiPoly MultiPoly::normalized() const {
  if (is_zero()) return *this;
  return *this * terms_.rbegin()->second.inverse();
}

bool MultiPoly::proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.normalized() == b.normalized();
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!it->first[i]) continue;
      os << "*" << (*names_)[i];
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

// ---- UniPoly --------------------------------------------------------------

UniPoly::UniPoly(const Field& f, std::vector<Scalar> coeffs) : field_(&f), c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly r(*field_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), field_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  UniPoly r(*field_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, field_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  UniPoly q(*field_), r = *this;
  if (degree() < d.degree()) return {q, r};
  q.c_.assign(c_.size() - d.c_.size() + 1, field_->zero());
  const Scalar inv = d.lead().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const std::size_t shift = r.degree() - d.degree();
    const Scalar k = r.lead() * inv;
    q.c_[shift] = k;
    for (std::size_t j = 0; j < d.c_.size(); ++j) r.c_[shift + j] -= k * d.c_[j];
    r.trim();
  }
  q.trim();
  return {q, r};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly r = *this;
  const Scalar inv = lead().inverse();
  for (auto& c : r.c_) c *= inv;
  return r;
}

Scalar UniPoly::evaluate(const Scalar& t) const {
  Scalar acc = field_->zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<Scalar> UniPoly::roots_by_scan() const {
  auto order = field_->order();
  if (!order) throw InvalidInput("root scan requires a finite field");
  if (field_->is_extension()) throw InvalidInput("root scan over extension fields is not supported");
  std::vector<Scalar> out;
  for (std::int64_t k = 0; k < *order; ++k) {
    Scalar t = field_->from_int(static_cast<long>(k));
    if (evaluate(t).is_zero()) out.push_back(t);
  }
  return out;
}

std::string UniPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].str() << ")";
    if (i > 0) os << "*" << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---- determinants ----------------------------------------------------------

UniPoly det(const Matrix<UniPoly>& m) {
  if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
  if (m.rows() == 0) return UniPoly(Field::rationals(), {Field::rationals().one()});
  const Field& f = m(0, 0).field();
  const UniPoly one(f, {f.one()});
  return bareiss_det(
      m, one,
      [](const UniPoly& a, const UniPoly& b) {
        auto [q, r] = a.divmod(b);
        if (!r.is_zero()) throw std::logic_error("Bareiss step: inexact division");
        return q;
      },
      [](const UniPoly& a) { return a.is_zero(); });
}

MultiPoly det(const Matrix<MultiPoly>& m) {
  if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
  if (m.rows() == 0) return MultiPoly::constant(Field::rationals(), 0, Field::rationals().one());
  const MultiPoly& p = m(0, 0);
  const MultiPoly one = MultiPoly::constant(p.field(), p.nvars(), p.field().one()).with_names(p.names());
  if (m.rows() <= 4) return cofactor_det(m, one);
  return bareiss_det(
      m, one,
      [](const MultiPoly& a, const MultiPoly& b) {
        auto q = a.divide_exact(b);
        if (!q) throw std::logic_error("Bareiss step: inexact division");
        return *q;
      },
      [](const MultiPoly& a) { return a.is_zero(); });
}

namespace {
template <class T, class IsZero>
void check_skew4(const Matrix<T>& m, IsZero is_zero) {
  if (m.rows() != 4 || m.cols() != 4) throw InvalidInput("pfaffian4 needs a 4x4 matrix");
  for (std::size_t i = 0; i < 4; ++i) {
    if (!is_zero(m(i, i))) throw InvalidInput("pfaffian4: nonzero diagonal");
    for (std::size_t j = i + 1; j < 4; ++j)
      if (!is_zero(m(i, j) + m(j, i))) throw InvalidInput("pfaffian4: matrix is not skew-symmetric");
  }
}
}  // namespace

MultiPoly pfaffian4(const Matrix<MultiPoly>& m) {
  check_skew4(m, [](const MultiPoly& x) { return x.is_zero(); });
  return m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2);
}

Scalar pfaffian4(const FMatrix& m) {
  check_skew4(m, [](const Scalar& x) { return x.is_zero(); });
  return m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2);
}

}  // namespace galecubic

namespace galecubic {

std::optional<std::vector<MultiPoly>> express_in_ideal(const MultiPoly& target, const std::vector<MultiPoly>& gens,
                                                       const std::vector<unsigned>& mult_degrees) {
  if (gens.size() != mult_degrees.size()) throw InvalidInput("express_in_ideal: one degree per generator");
  if (!target.is_homogeneous()) throw InvalidInput("express_in_ideal: target must be homogeneous");
  const Field& f = target.field();
  const std::size_t n = target.nvars();
  const int d = target.total_degree();
  if (d < 0) {
    std::vector<MultiPoly> zero;
    for (std::size_t k = 0; k < gens.size(); ++k) zero.push_back(target.zero_like());
    return zero;
  }
  std::vector<Exponent> rows = monomials_of_degree(n, static_cast<unsigned>(d));
  std::map<Exponent, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;

  std::vector<std::vector<Exponent>> unknowns;
  std::size_t ncols = 0;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].nvars() != n || gens[k].field() != f) throw InvalidInput("express_in_ideal: ring mismatch");
    if (!gens[k].is_homogeneous()) throw InvalidInput("express_in_ideal: generators must be homogeneous");
    const int gd = gens[k].total_degree();
    if (gd >= 0 && gd + static_cast<int>(mult_degrees[k]) != d) {
      unknowns.emplace_back();  // degree mismatch: multiplier forced to zero
      continue;
    }
    unknowns.push_back(monomials_of_degree(n, mult_degrees[k]));
    ncols += unknowns.back().size();
  }
  FMatrix a = zeros(f, rows.size(), ncols);
  std::vector<Scalar> rhs(rows.size(), f.zero());
  for (const auto& [e, c] : target.terms()) rhs[row_of.at(e)] = c;
  std::size_t col = 0;
  Exponent prod(n);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (const Exponent& m : unknowns[k]) {
      for (const auto& [e, c] : gens[k].terms()) {
        for (std::size_t i = 0; i < n; ++i) prod[i] = e[i] + m[i];
        a(row_of.at(prod), col) = c;
      }
      ++col;
    }
  }
  auto sol = solve(a, rhs);
  if (!sol) return std::nullopt;
  std::vector<MultiPoly> out;
  col = 0;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    MultiPoly c = target.zero_like();
    for (const Exponent& m : unknowns[k]) c.add_term(m, (*sol)[col++]);
    out.push_back(c);
  }
  return out;
}

}  // namespace galecubic

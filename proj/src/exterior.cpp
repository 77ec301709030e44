#include "galecubic/exterior.hpp"

#include <array>
#include <bit>
#include <map>
#include <sstream>

namespace galecubic {

namespace {

struct Tables {
  std::array<std::vector<Mask>, kDim + 1> bases;
  std::array<std::size_t, 64> index{};
  Tables() {
    // Lex order of increasing tuples: generate tuples recursively.
    for (int p = 0; p <= kDim; ++p) {
      std::vector<int> tup;
      auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(tup.size()) == p) {
          Mask m = 0;
          for (int i : tup) m |= Mask(1u << i);
          index[m] = bases[p].size();
          bases[p].push_back(m);
          return;
        }
        for (int i = start; i < kDim; ++i) {
          tup.push_back(i);
          self(self, i + 1);
          tup.pop_back();
        }
      };
      rec(rec, 0);
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

const std::vector<Mask>& grade_basis(int p) {
  if (p < 0 || p > kDim) throw InvalidInput("grade out of range");
  return tables().bases[p];
}

std::size_t basis_index(Mask mask) { return tables().index[mask & 63]; }

std::size_t grade_dim(int p) { return grade_basis(p).size(); }

std::string mask_label(Mask mask) {
  static const char* names[kDim] = {"e1", "e2", "e3", "f1", "f2", "f3"};
  if (mask == 0) return "1";
  std::string out;
  for (int i = 0; i < kDim; ++i)
    if (mask & (1u << i)) out += (out.empty() ? "" : "^") + std::string(names[i]);
  return out;
}

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Count pairs i in a, j in b with i > j.
  int inversions = 0;
  for (int i = 0; i < kDim; ++i)
    if (a & (1u << i)) inversions += std::popcount(static_cast<unsigned>(b & ((1u << i) - 1)));
  return inversions % 2 ? -1 : 1;
}

ExteriorElement::ExteriorElement(const Field& f, int grade)
    : field_(&f), grade_(grade), c_(grade_dim(grade), f.zero()) {}

ExteriorElement::ExteriorElement(int grade, std::vector<Scalar> coeffs)
    : field_(coeffs.empty() ? &Field::rationals() : &coeffs.front().field()), grade_(grade), c_(std::move(coeffs)) {
  if (c_.size() != grade_dim(grade)) throw InvalidInput("exterior element: wrong coefficient count");
}

ExteriorElement ExteriorElement::basis(const Field& f, Mask mask) {
  ExteriorElement x(f, std::popcount(static_cast<unsigned>(mask)));
  x.c_[basis_index(mask)] = f.one();
  return x;
}

ExteriorElement ExteriorElement::vector(const std::vector<Scalar>& v) {
  if (v.size() != kDim) throw InvalidInput("vector in V6 needs 6 coordinates");
  return ExteriorElement(1, v);
}

ExteriorElement ExteriorElement::scalar(const Scalar& s) { return ExteriorElement(0, {s}); }

bool ExteriorElement::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

ExteriorElement ExteriorElement::operator+(const ExteriorElement& o) const {
  if (grade_ != o.grade_) throw InvalidInput("adding exterior elements of different grades");
  ExteriorElement r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

ExteriorElement ExteriorElement::operator-(const ExteriorElement& o) const { return *this + (-o); }

ExteriorElement ExteriorElement::operator*(const Scalar& s) const {
  ExteriorElement r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

std::string ExteriorElement::str() const {
  std::ostringstream os;
  bool first = true;
  const auto& b = grade_basis(grade_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].str() << ")" << mask_label(b[i]);
  }
  return first ? "0" : os.str();
}

ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y) {
  const int g = x.grade() + y.grade();
  if (g > kDim) throw InvalidInput("wedge: grade exceeds 6");
  const Field& f = common_field(x.field().zero(), y.field().zero());
  std::vector<Scalar> c(grade_dim(g), f.zero());
  const auto& bx = grade_basis(x.grade());
  const auto& by = grade_basis(y.grade());
  for (std::size_t i = 0; i < bx.size(); ++i) {
    if (x.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < by.size(); ++j) {
      if (y.coeffs()[j].is_zero()) continue;
      const int s = wedge_sign(bx[i], by[j]);
      if (s == 0) continue;
      const Scalar term = x.coeffs()[i] * y.coeffs()[j];
      Scalar& slot = c[basis_index(bx[i] | by[j])];
      if (s > 0) slot += term;
      else slot -= term;
    }
  }
  return ExteriorElement(g, std::move(c));
}

ExteriorElement contract(const std::vector<Scalar>& lambda, const ExteriorElement& x) {
  if (x.grade() < 1) throw InvalidInput("contraction of a grade-0 element");
  if (lambda.size() != kDim) throw InvalidInput("covector needs 6 coordinates");
  const Field& f = x.field();
  std::vector<Scalar> c(grade_dim(x.grade() - 1), f.zero());
  const auto& bx = grade_basis(x.grade());
  for (std::size_t i = 0; i < bx.size(); ++i) {
    if (x.coeffs()[i].is_zero()) continue;
    int pos = 0;
    for (int k = 0; k < kDim; ++k) {
      if (!(bx[i] & (1u << k))) continue;
      if (!lambda[k].is_zero()) {
        const Scalar term = lambda[k] * x.coeffs()[i];
        Scalar& slot = c[basis_index(bx[i] & ~Mask(1u << k))];
        if (pos % 2 == 0) slot += term;
        else slot -= term;
      }
      ++pos;
    }
  }
  return ExteriorElement(x.grade() - 1, std::move(c));
}

Scalar orientation_pair(const ExteriorElement& x, const ExteriorElement& y) {
  if (x.grade() != 3 || y.grade() != 3) throw InvalidInput("orientation_pair needs two grade-3 elements");
  return wedge(x, y).coeffs()[0];
}

FMatrix orientation_gram(const Field& f) {
  thread_local std::map<const Field*, FMatrix> cache;
  if (auto it = cache.find(&f); it != cache.end()) return it->second;
  const auto& b = grade_basis(3);
  FMatrix g = zeros(f, b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const int s = wedge_sign(b[i], b[j]);
      if (s) g(i, j) = f.from_int(s);
    }
  cache.emplace(&f, g);
  return g;
}

FMatrix induced_action(const FMatrix& g, int p) {
  if (g.rows() != kDim || g.cols() != kDim) throw InvalidInput("induced_action needs a 6x6 matrix");
  const Field& f = g(0, 0).field();
  const auto& b = grade_basis(p);
  FMatrix out = zeros(f, b.size(), b.size());
  std::vector<ExteriorElement> images;
  for (int k = 0; k < kDim; ++k) images.push_back(ExteriorElement::vector(g.col(k)));
  for (std::size_t j = 0; j < b.size(); ++j) {
    ExteriorElement acc = ExteriorElement::scalar(f.one());
    for (int k = 0; k < kDim; ++k)
      if (b[j] & (1u << k)) acc = wedge(acc, images[k]);
    out.set_col(j, acc.coeffs());
  }
  return out;
}

FMatrix contraction_matrix(const std::vector<Scalar>& lambda, int p) {
  const Field& f = lambda.at(0).field();
  const auto& b = grade_basis(p);
  FMatrix out = zeros(f, grade_dim(p - 1), b.size());
  for (std::size_t j = 0; j < b.size(); ++j)
    out.set_col(j, contract(lambda, ExteriorElement::basis(f, b[j])).coeffs());
  return out;
}

}  // namespace galecubic

#include "galecubic/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "galecubic/field.hpp"

namespace galecubic {

namespace {

using QMatrix = std::vector<std::vector<mpq_class>>;

QMatrix to_rational(const IntMatrix& a) {
  QMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (long v : a[i]) out[i].push_back(mpq_class(v));
  return out;
}

void check_square(const IntMatrix& g) {
  if (g.empty()) throw InvalidInput("empty Gram matrix");
  for (const auto& row : g)
    if (row.size() != g.size()) throw InvalidInput("Gram matrix must be square");
}

QMatrix rational_inverse(const IntMatrix& g) {
  const std::size_t n = g.size();
  QMatrix a = to_rational(g);
  QMatrix inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw InvalidInput("degenerate Gram matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const mpq_class s = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] /= s;
      inv[c][k] /= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class t = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= t * a[c][k];
        inv[r][k] -= t * inv[c][k];
      }
    }
  }
  return inv;
}

long mod_pos(long v, long m) { return ((v % m) + m) % m; }

long mod_inverse(long a, long m) {
  a = mod_pos(a, m);
  for (long x = 1; x < m; ++x)
    if ((a * x) % m == 1) return x;
  if (m == 1) return 0;
  throw InvalidInput("not invertible");
}

// U * a * V = diag(d) with d_i | d_{i+1}; only U and its inverse are kept.
struct Smith {
  IntMatrix u, uinv;
  std::vector<long> diag;
};

Smith smith(IntMatrix a) {
  const std::size_t n = a.size();
  IntMatrix u(n, std::vector<long>(n, 0)), uinv = u;
  for (std::size_t i = 0; i < n; ++i) u[i][i] = uinv[i][i] = 1;
  auto row_add = [&](std::size_t i, std::size_t j, long c) {
    for (std::size_t k = 0; k < n; ++k) {
      a[i][k] += c * a[j][k];
      u[i][k] += c * u[j][k];
    }
    for (std::size_t k = 0; k < n; ++k) uinv[k][j] -= c * uinv[k][i];
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
    for (std::size_t k = 0; k < n; ++k) std::swap(uinv[k][i], uinv[k][j]);
  };
  auto col_add = [&](std::size_t i, std::size_t j, long c) {
    for (std::size_t k = 0; k < n; ++k) a[k][i] += c * a[k][j];
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) std::swap(a[k][i], a[k][j]);
  };
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pi == n || std::labs(a[i][j]) < std::labs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == n) throw InvalidInput("degenerate Gram matrix");
      row_swap(t, pi);
      col_swap(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        row_add(i, t, -(a[i][t] / a[t][t]));
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        col_add(j, t, -(a[t][j] / a[t][t]));
        clean = clean && a[t][j] == 0;
      }
      if (!clean) continue;
      bool divisible = true;
      for (std::size_t i = t + 1; i < n && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            row_add(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a[t][t] < 0) {
      for (std::size_t k = 0; k < n; ++k) {
        a[t][k] = -a[t][k];
        u[t][k] = -u[t][k];
        uinv[k][t] = -uinv[k][t];
      }
    }
  }
  Smith s{u, uinv, {}};
  for (std::size_t t = 0; t < n; ++t) s.diag.push_back(a[t][t]);
  return s;
}

std::vector<std::pair<long, long>> prime_powers(long d) {
  std::vector<std::pair<long, long>> out;  // (p, p^k)
  for (long p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    long pk = 1;
    while (d % p == 0) {
      d /= p;
      pk *= p;
    }
    out.emplace_back(p, pk);
  }
  if (d > 1) out.emplace_back(d, d);
  return out;
}

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool is_identity(const IntMatrix& g, long sign) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g[i][j] != (i == j ? sign : 0)) return false;
  return true;
}

// Every assignment of generator images y_i with n_i y_i = 0 drawn from `pool`.
template <class F>
void for_each_hom(const FiniteQuadraticModule& a, const FiniteQuadraticModule& b, const std::vector<Element>& pool,
                  F&& visit) {
  std::vector<std::vector<Element>> choices(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (const auto& y : pool)
      if (b.is_zero(b.scale(a.orders()[i], y))) choices[i].push_back(y);
  std::vector<std::size_t> pos(a.rank(), 0);
  for (const auto& c : choices)
    if (c.empty()) return;
  for (;;) {
    ModuleMap m;
    for (std::size_t i = 0; i < a.rank(); ++i) m.images.push_back(choices[i][pos[i]]);
    if (!visit(m)) return;
    std::size_t k = 0;
    while (k < pos.size() && ++pos[k] == choices[k].size()) pos[k++] = 0;
    if (k == pos.size()) return;
  }
}

Element concat(const Element& x, const Element& y) {
  Element out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

GlueGroup glue_from_gens(const DSDT& d, const std::vector<Element>& gens) {
  const FiniteQuadraticModule s = direct_sum(d.ds, d.dt);
  return GlueGroup{gens, subgroup_closure(s, gens)};
}

// Generators lying over the generators of D(S).
GlueGroup glue_from_elements(const DSDT& d, const FiniteQuadraticModule& s, const std::vector<std::size_t>& elems) {
  GlueGroup g{{}, elems};
  for (std::size_t i = 0; i < d.ds.rank(); ++i) {
    const Element want = d.ds.generator(i);
    for (std::size_t idx : elems) {
      const Element x = s.element(idx);
      if (Element(x.begin(), x.begin() + static_cast<long>(d.ds.rank())) == want) {
        g.generators.push_back(x);
        break;
      }
    }
  }
  return g;
}

}  // namespace

mpq_class reduce_mod(const mpq_class& v, long m) {
  mpz_class fl;
  mpz_class den = v.get_den() * m;
  mpz_fdiv_q(fl.get_mpz_t(), v.get_num().get_mpz_t(), den.get_mpz_t());
  mpq_class out = v - mpq_class(fl * m);
  out.canonicalize();
  return out;
}

std::string fraction_str(const mpq_class& v) { return v.get_str(); }

FiniteQuadraticModule::FiniteQuadraticModule(std::vector<int> orders, QMatrix form)
    : orders_(std::move(orders)), form_(std::move(form)) {
  const std::size_t n = orders_.size();
  if (form_.size() != n) throw InvalidInput("form size does not match the number of factors");
  for (std::size_t i = 0; i < n; ++i) {
    if (orders_[i] < 1) throw InvalidInput("cyclic orders must be positive");
    if (form_[i].size() != n) throw InvalidInput("form must be square");
    size_ *= static_cast<std::size_t>(orders_[i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (form_[i][j] != form_[j][i]) throw InvalidInput("form must be symmetric");
      // q(x + n_i e_i) = q(x) and b well defined.
      if (mpq_class(form_[i][j] * orders_[i]).get_den() != 1)
        throw InvalidInput("bilinear form not well defined on the cyclic factors");
    }
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class v = form_[i][i] * orders_[i] * orders_[i];
    if (v.get_den() != 1 || v.get_num() % 2 != 0) throw InvalidInput("quadratic form not well defined modulo 2Z");
  }
}

FiniteQuadraticModule FiniteQuadraticModule::cyclic(int n, const mpq_class& q) {
  return FiniteQuadraticModule({n}, {{q}});
}

Element FiniteQuadraticModule::add(const Element& x, const Element& y) const {
  Element out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = (x[i] + y[i]) % orders_[i];
  return out;
}

Element FiniteQuadraticModule::neg(const Element& x) const { return scale(-1, x); }

Element FiniteQuadraticModule::scale(long n, const Element& x) const {
  Element out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = static_cast<int>(mod_pos(n * x[i], orders_[i]));
  return out;
}

bool FiniteQuadraticModule::is_zero(const Element& x) const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (x[i] % orders_[i] != 0) return false;
  return true;
}

int FiniteQuadraticModule::order_of(const Element& x) const {
  int o = 1;
  for (std::size_t i = 0; i < rank(); ++i) o = std::lcm(o, orders_[i] / std::gcd(x[i], orders_[i]));
  return o;
}

mpq_class FiniteQuadraticModule::q(const Element& x) const {
  mpq_class v = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) v += form_[i][j] * x[i] * x[j];
  return reduce_mod(v, 2);
}

mpq_class FiniteQuadraticModule::b(const Element& x, const Element& y) const {
  mpq_class v = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) v += form_[i][j] * x[i] * y[j];
  return reduce_mod(v, 1);
}

std::size_t FiniteQuadraticModule::index(const Element& x) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) idx = idx * orders_[i] + static_cast<std::size_t>(mod_pos(x[i], orders_[i]));
  return idx;
}

Element FiniteQuadraticModule::element(std::size_t idx) const {
  Element x(rank());
  for (std::size_t i = rank(); i-- > 0;) {
    x[i] = static_cast<int>(idx % orders_[i]);
    idx /= orders_[i];
  }
  return x;
}

std::vector<Element> FiniteQuadraticModule::elements() const {
  std::vector<Element> out;
  for (std::size_t k = 0; k < size_; ++k) out.push_back(element(k));
  return out;
}

Element FiniteQuadraticModule::generator(std::size_t i) const {
  Element x = zero();
  x[i] = 1 % orders_[i];
  return x;
}

FiniteQuadraticModule FiniteQuadraticModule::negated() const {
  QMatrix f = form_;
  for (auto& row : f)
    for (auto& v : row) v = -v;
  FiniteQuadraticModule out(orders_, f);
  out.dual_map_ = dual_map_;
  out.dual_gens_ = dual_gens_;
  return out;
}

Element FiniteQuadraticModule::from_dual(const std::vector<long>& x) const {
  if (dual_map_.empty()) throw InvalidInput("module has no underlying lattice");
  Element out(rank());
  for (std::size_t j = 0; j < rank(); ++j) {
    long v = 0;
    for (std::size_t k = 0; k < x.size(); ++k) v += dual_map_[j][k] * x[k];
    out[j] = static_cast<int>(mod_pos(v, orders_[j]));
  }
  return out;
}

FiniteQuadraticModule direct_sum(const FiniteQuadraticModule& a, const FiniteQuadraticModule& b) {
  std::vector<int> orders = a.orders();
  orders.insert(orders.end(), b.orders().begin(), b.orders().end());
  const std::size_t n = orders.size();
  QMatrix f(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) f[i][j] = a.form()[i][j];
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) f[a.rank() + i][a.rank() + j] = b.form()[i][j];
  return FiniteQuadraticModule(orders, f);
}

mpz_class gram_determinant(const IntMatrix& gram) {
  check_square(gram);
  const std::size_t n = gram.size();
  QMatrix a = to_rational(gram);
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const mpq_class t = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= t * a[c][k];
    }
  }
  return det.get_num();
}

FiniteQuadraticModule discriminant_form(const IntMatrix& gram) {
  check_square(gram);
  const std::size_t n = gram.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i][i] % 2 != 0) throw InvalidInput("Gram matrix must have even diagonal");
    for (std::size_t j = 0; j < n; ++j)
      if (gram[i][j] != gram[j][i]) throw InvalidInput("Gram matrix must be symmetric");
  }
  if (gram_determinant(gram) == 0) throw InvalidInput("degenerate Gram matrix");
  const QMatrix ginv = rational_inverse(gram);
  const Smith s = smith(gram);

  struct Part {
    long p, pk;
    std::size_t t;
  };
  std::vector<Part> parts;
  for (std::size_t t = 0; t < n; ++t)
    for (auto [p, pk] : prime_powers(s.diag[t])) parts.push_back({p, pk, t});
  std::stable_sort(parts.begin(), parts.end(), [](const Part& x, const Part& y) { return x.p < y.p; });

  std::vector<int> orders;
  IntMatrix dual_map, gens(n);
  for (const Part& part : parts) {
    const long m = s.diag[part.t] / part.pk;
    orders.push_back(static_cast<int>(part.pk));
    const long inv = mod_inverse(m, part.pk);
    std::vector<long> row;
    for (std::size_t k = 0; k < n; ++k) row.push_back(mod_pos(inv * s.u[part.t][k], part.pk));
    dual_map.push_back(row);
    for (std::size_t k = 0; k < n; ++k) gens[k].push_back(m * s.uinv[k][part.t]);
  }
  const std::size_t r = orders.size();
  QMatrix form(r, std::vector<mpq_class>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) form[i][j] += gens[a][i] * ginv[a][b] * gens[b][j];
  FiniteQuadraticModule out(orders, form);
  out.dual_map_ = dual_map;
  out.dual_gens_ = gens;
  return out;
}

IntMatrix a2_gram(long k) { return {{2 * k, -k}, {-k, 2 * k}}; }

IntMatrix nonsyzygetic_intersection_matrix() { return {{3, 3, 3}, {3, 7, 1}, {3, 1, 7}}; }

std::vector<IntMatrix> lattice_isometries(const IntMatrix& gram, long bound) {
  check_square(gram);
  const std::size_t n = gram.size();
  if (n > 3) throw InvalidInput("brute-force isometry search limited to rank 3");
  const std::size_t cells = n * n;
  std::vector<long> v(cells, -bound);
  std::vector<IntMatrix> out;
  for (;;) {
    IntMatrix g(n, std::vector<long>(n));
    for (std::size_t k = 0; k < cells; ++k) g[k / n][k % n] = v[k];
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        long s = 0;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) s += g[a][i] * gram[a][b] * g[b][j];
        ok = s == gram[i][j];
      }
    if (ok) out.push_back(g);
    std::size_t k = 0;
    while (k < cells && ++v[k] > bound) v[k++] = -bound;
    if (k == cells) break;
  }
  return out;
}

Element ModuleMap::apply(const FiniteQuadraticModule& target, const Element& x) const {
  Element out = target.zero();
  for (std::size_t i = 0; i < images.size(); ++i) out = target.add(out, target.scale(x[i], images[i]));
  return out;
}

ModuleMap induced_map(const IntMatrix& gram, const FiniteQuadraticModule& d, const IntMatrix& g) {
  const std::size_t n = gram.size();
  const QMatrix ginv = rational_inverse(gram);
  // h = G g G^-1 = g^-T.
  IntMatrix h(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class v = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) v += gram[i][a] * g[a][b] * ginv[b][j];
      if (v.get_den() != 1) throw InvalidInput("not an isometry of the lattice");
      h[i][j] = v.get_num().get_si();
    }
  ModuleMap m;
  for (std::size_t c = 0; c < d.rank(); ++c) {
    std::vector<long> y(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) y[i] += h[i][k] * d.dual_generators()[k][c];
    m.images.push_back(d.from_dual(y));
  }
  return m;
}

std::vector<ModuleMap> isometries(const FiniteQuadraticModule& m) {
  const std::vector<Element> all = m.elements();
  std::vector<ModuleMap> out;
  for_each_hom(m, m, all, [&](const ModuleMap& phi) {
    std::vector<char> hit(m.size(), 0);
    for (const auto& x : all) {
      const Element y = phi.apply(m, x);
      if (hit[m.index(y)] || m.q(y) != m.q(x)) return true;
      hit[m.index(y)] = 1;
    }
    out.push_back(phi);
    return true;
  });
  return out;
}

std::vector<ModuleMap> anti_isometries(const FiniteQuadraticModule& a, const FiniteQuadraticModule& b,
                                       const std::vector<std::size_t>& target, std::size_t limit) {
  if (target.size() != a.size()) return {};
  std::vector<Element> pool;
  for (std::size_t idx : target) pool.push_back(b.element(idx));
  const std::vector<Element> all = a.elements();
  std::vector<ModuleMap> out;
  for_each_hom(a, b, pool, [&](const ModuleMap& phi) {
    std::vector<std::size_t> image;
    for (const auto& x : all) {
      const Element y = phi.apply(b, x);
      if (b.q(y) != reduce_mod(-a.q(x), 2)) return true;
      image.push_back(b.index(y));
    }
    if (sorted_unique(image) != target) return true;
    out.push_back(phi);
    return limit == 0 || out.size() < limit;
  });
  return out;
}

std::vector<std::size_t> subgroup_closure(const FiniteQuadraticModule& m, const std::vector<Element>& gens) {
  std::vector<char> seen(m.size(), 0);
  std::vector<Element> queue{m.zero()};
  seen[m.index(m.zero())] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& g : gens) {
      const Element y = m.add(queue[k], g);
      if (seen[m.index(y)]) continue;
      seen[m.index(y)] = 1;
      queue.push_back(y);
    }
  std::vector<std::size_t> out;
  for (const auto& x : queue) out.push_back(m.index(x));
  return sorted_unique(out);
}

std::vector<std::vector<std::size_t>> enumerate_subgroups(const FiniteQuadraticModule& m, std::size_t max_order,
                                                          const std::function<bool(const Element&)>& keep) {
  std::vector<Element> candidates;
  for (const auto& x : m.elements())
    if (keep(x) && !m.is_zero(x)) candidates.push_back(x);
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> queue{{m.index(m.zero())}};
  seen.insert(queue[0]);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const std::vector<std::size_t> h = queue[k];
    for (const auto& c : candidates) {
      if (std::binary_search(h.begin(), h.end(), m.index(c))) continue;
      const int ord = m.order_of(c);
      if (h.size() * 2 > max_order) break;
      std::vector<std::size_t> bigger;
      bool ok = true;
      for (std::size_t idx : h) {
        Element y = m.element(idx);
        for (int j = 0; j < ord && ok; ++j) {
          ok = keep(y);
          bigger.push_back(m.index(y));
          y = m.add(y, c);
        }
      }
      if (!ok) continue;
      bigger = sorted_unique(bigger);
      if (bigger.size() > max_order || !seen.insert(bigger).second) continue;
      queue.push_back(bigger);
    }
  }
  return queue;
}

DSDT build_DS_DT() {
  return {discriminant_form(a2_gram(-2)),
          direct_sum(discriminant_form(a2_gram(2)), FiniteQuadraticModule::cyclic(3, mpq_class(4, 3)))};
}

FiniteQuadraticModule transcendental_form() {
  return direct_sum(discriminant_form(a2_gram(2)).negated(), FiniteQuadraticModule::cyclic(3, mpq_class(2, 3)));
}

bool is_glue_group(const DSDT& d, const GlueGroup& h) {
  const FiniteQuadraticModule s = direct_sum(d.ds, d.dt);
  if (h.elements.size() != d.ds.size()) return false;
  if (subgroup_closure(s, h.generators) != h.elements) return false;
  std::vector<std::size_t> ps, pt;
  for (std::size_t idx : h.elements) {
    const Element x = s.element(idx);
    if (s.q(x) != 0) return false;
    const auto mid = x.begin() + static_cast<long>(d.ds.rank());
    ps.push_back(d.ds.index(Element(x.begin(), mid)));
    pt.push_back(d.dt.index(Element(mid, x.end())));
  }
  return sorted_unique(ps).size() == d.ds.size() && sorted_unique(pt).size() == h.elements.size();
}

GlueEnumeration enumerate_glue_groups(const DSDT& d) {
  GlueEnumeration out;
  const std::vector<ModuleMap> iso = isometries(d.ds);
  out.isometry_count = iso.size();
  for (const auto& h : enumerate_subgroups(d.dt, d.ds.size(), [](const Element&) { return true; })) {
    if (h.size() != d.ds.size()) continue;
    const std::vector<ModuleMap> gamma0 = anti_isometries(d.ds, d.dt, h, 1);
    if (gamma0.empty()) continue;
    out.targets.push_back(h);
    for (const auto& gamma : iso) {
      std::vector<Element> gens;
      for (std::size_t i = 0; i < d.ds.rank(); ++i)
        gens.push_back(concat(d.ds.generator(i), gamma0[0].apply(d.dt, gamma.images[i])));
      out.groups.push_back(glue_from_gens(d, gens));
    }
  }
  return out;
}

std::vector<GlueGroup> brute_force_glue_groups(const DSDT& d) {
  const FiniteQuadraticModule s = direct_sum(d.ds, d.dt);
  std::vector<GlueGroup> out;
  for (const auto& h : enumerate_subgroups(s, d.ds.size(), [&](const Element& x) { return s.q(x) == 0; })) {
    if (h.size() != d.ds.size()) continue;
    GlueGroup g = glue_from_elements(d, s, h);
    if (g.generators.size() == d.ds.rank() && is_glue_group(d, g)) out.push_back(g);
  }
  return out;
}

std::vector<GlueGroup> parametrized_glue_groups(const DSDT& d) {
  if (d.ds.orders() != std::vector<int>{2, 2, 3} || d.dt.orders() != std::vector<int>{2, 2, 3, 3})
    throw InvalidInput("expected D(S) = (Z/2)^2 x Z/3 and D(T) = (Z/2)^2 x (Z/3)^2");
  std::vector<GlueGroup> out;
  for (int code = 0; code < 16; ++code) {
    const int a00 = code & 1, a01 = (code >> 1) & 1, a10 = (code >> 2) & 1, a11 = (code >> 3) & 1;
    if (((a00 * a11 + a01 * a10) & 1) == 0) continue;  // alpha in GL2(Z/2)
    for (int beta : {1, 2})
      for (bool primed : {false, true}) {
        const int b1 = primed ? 0 : beta, b2 = primed ? beta : 0;
        out.push_back(glue_from_gens(d, {{1, 0, 0, a00, a10, 0, 0}, {0, 1, 0, a01, a11, 0, 0}, {0, 0, 1, 0, 0, b1, b2}}));
      }
  }
  return out;
}

bool GroupElement::is_plus_minus_identity() const {
  return (psi == 1 && is_identity(phi, 1)) || (psi == -1 && is_identity(phi, -1));
}

GlueGroup act(const DSDT& d, const GroupElement& g, const GlueGroup& h) {
  const FiniteQuadraticModule s = direct_sum(d.ds, d.dt);
  const ModuleMap phi = induced_map(a2_gram(-2), d.ds, g.phi);
  auto move = [&](const Element& x) {
    const auto mid = x.begin() + static_cast<long>(d.ds.rank());
    return concat(phi.apply(d.ds, Element(x.begin(), mid)), d.dt.scale(g.psi, Element(mid, x.end())));
  };
  GlueGroup out;
  for (const auto& x : h.generators) out.generators.push_back(move(x));
  for (std::size_t idx : h.elements) out.elements.push_back(s.index(move(s.element(idx))));
  out.elements = sorted_unique(out.elements);
  return out;
}

OrbitDecomposition group_action_orbits(const DSDT& d, const std::vector<GlueGroup>& groups) {
  std::vector<GroupElement> g;
  for (const auto& phi : lattice_isometries(a2_gram(-2)))
    for (int psi : {1, -1}) g.push_back({phi, psi});
  std::map<std::vector<std::size_t>, std::size_t> where;
  for (std::size_t k = 0; k < groups.size(); ++k) where[groups[k].elements] = k;

  OrbitDecomposition out;
  out.group_order = g.size();
  std::vector<char> done(groups.size(), 0);
  for (std::size_t k = 0; k < groups.size(); ++k) {
    if (done[k]) continue;
    Orbit orbit;
    std::vector<std::size_t> members;
    for (const auto& x : g) {
      const GlueGroup y = act(d, x, groups[k]);
      auto it = where.find(y.elements);
      if (it == where.end()) throw InvalidInput("group action leaves the glue group list");
      members.push_back(it->second);
      if (it->second == k) orbit.stabilizer.push_back(x);
    }
    orbit.members = sorted_unique(members);
    for (std::size_t m : orbit.members) done[m] = 1;
    out.orbits.push_back(orbit);
  }
  return out;
}

std::size_t OrbitDecomposition::fm_partner_count() const {
  std::size_t total = 0;
  for (const auto& o : orbits) total += o.members.size() * o.stabilizer.size();
  return total / group_order;
}

}  // namespace galecubic

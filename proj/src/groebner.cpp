#include "galecubic/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace galecubic {

namespace {

using Coef = std::uint64_t;

struct DegRevLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const { return degrevlex_greater(a, b); }
};

// Terms in decreasing degrevlex order, coefficients in [1, p).
struct IPoly {
  std::vector<std::pair<Exponent, Coef>> terms;
  unsigned sugar = 0;
  bool is_zero() const { return terms.empty(); }
  const Exponent& lm() const { return terms.front().first; }
  Coef lc() const { return terms.front().second; }
};

unsigned degree(const Exponent& e) {
  unsigned d = 0;
  for (auto v : e) d += v;
  return d;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponent quotient(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return out;
}

Exponent product(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return out;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

class Engine {
 public:
  explicit Engine(Coef p) : p_(p) {}

  Coef inv(Coef a) const {
    Coef r = 1, b = a, e = p_ - 2;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return r;
  }

  void make_monic(IPoly& f) const {
    if (f.is_zero()) return;
    const Coef c = inv(f.lc());
    for (auto& t : f.terms) t.second = t.second * c % p_;
  }

  IPoly from(const MultiPoly& f) const {
    IPoly out;
    for (const auto& [e, c] : f.terms()) out.terms.emplace_back(e, static_cast<Coef>(c.to_residue()));
    std::sort(out.terms.begin(), out.terms.end(),
              [](const auto& a, const auto& b) { return degrevlex_greater(a.first, b.first); });
    out.sugar = f.is_zero() ? 0 : static_cast<unsigned>(f.total_degree());
    return out;
  }

  MultiPoly to(const IPoly& f, const MultiPoly& like) const {
    MultiPoly out = like.zero_like();
    const Field& fld = like.field();
    for (const auto& [e, c] : f.terms) out.add_term(e, fld.from_int(static_cast<long>(c)));
    return out;
  }

  // m * f scaled by c, subtracted from acc.
  void submul(std::map<Exponent, Coef, DegRevLexGreater>& acc, const IPoly& f, const Exponent& m, Coef c) const {
    for (const auto& [e, a] : f.terms) {
      const Exponent x = product(e, m);
      const Coef v = (p_ - a * c % p_) % p_;
      auto it = acc.find(x);
      if (it == acc.end()) {
        acc.emplace(x, v);
      } else {
        it->second = (it->second + v) % p_;
        if (it->second == 0) acc.erase(it);
      }
    }
  }

  // Full reduction; basis elements must be monic.
  IPoly reduce(const IPoly& f, const std::vector<IPoly>& basis) const {
    std::map<Exponent, Coef, DegRevLexGreater> acc(f.terms.begin(), f.terms.end());
    IPoly out;
    out.sugar = f.sugar;
    while (!acc.empty()) {
      auto it = acc.begin();
      const Exponent m = it->first;
      const Coef c = it->second;
      const IPoly* g = nullptr;
      for (const auto& b : basis)
        if (divides(b.lm(), m)) {
          g = &b;
          break;
        }
      if (!g) {
        out.terms.emplace_back(m, c);
        acc.erase(it);
        continue;
      }
      const Exponent q = quotient(m, g->lm());
      out.sugar = std::max(out.sugar, g->sugar + degree(q));
      submul(acc, *g, q, c);
    }
    return out;
  }

  IPoly spoly(const IPoly& f, const IPoly& g) const {
    const Exponent l = lcm(f.lm(), g.lm());
    std::map<Exponent, Coef, DegRevLexGreater> acc;
    const Exponent qf = quotient(l, f.lm()), qg = quotient(l, g.lm());
    submul(acc, f, qf, p_ - inv(f.lc()));
    submul(acc, g, qg, inv(g.lc()));
    IPoly out;
    out.terms.assign(acc.begin(), acc.end());
    out.sugar = std::max(f.sugar + degree(qf), g.sugar + degree(qg));
    return out;
  }

 private:
  Coef p_;
};

Coef check_prime_field(const Field& f) {
  if (f.is_rational_base()) throw InvalidInput("Groebner bases are computed over prime fields only");
  if (f.is_extension()) throw InvalidInput("Groebner bases need a prime field, not an extension");
  return static_cast<Coef>(f.characteristic());
}

}  // namespace

bool degrevlex_greater(const Exponent& a, const Exponent& b) {
  const unsigned da = degree(a), db = degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Exponent leading_monomial(const MultiPoly& f) {
  if (f.is_zero()) throw InvalidInput("zero polynomial has no leading monomial");
  const Exponent* best = nullptr;
  for (const auto& t : f.terms())
    if (!best || degrevlex_greater(t.first, *best)) best = &t.first;
  return *best;
}

std::vector<Exponent> GroebnerBasis::leading_monomials() const {
  std::vector<Exponent> out;
  for (const auto& g : polys) out.push_back(leading_monomial(g));
  return out;
}

bool GroebnerBasis::contains_one() const {
  return polys.size() == 1 && polys[0].total_degree() == 0;
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, GroebnerStats* stats) {
  if (gens.empty()) throw InvalidInput("no generators");
  const Field& fld = gens[0].field();
  const Engine eng(check_prime_field(fld));
  for (const auto& g : gens)
    if (g.field() != fld || g.nvars() != gens[0].nvars()) throw InvalidInput("generators must share one ring");
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;

  std::vector<IPoly> basis;
  for (const auto& g : gens) {
    IPoly f = eng.from(g);
    if (f.is_zero()) continue;
    eng.make_monic(f);
    basis.push_back(f);
  }

  struct Pair {
    std::size_t i, j;
    unsigned sugar;
    Exponent lcm;
  };
  auto worse = [](const Pair& a, const Pair& b) {
    if (a.sugar != b.sugar) return a.sugar > b.sugar;
    if (a.lcm != b.lcm) return degrevlex_greater(a.lcm, b.lcm);
    return std::make_pair(a.i, a.j) > std::make_pair(b.i, b.j);
  };
  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Exponent l = lcm(basis[i].lm(), basis[j].lm());
      const unsigned s = std::max(basis[i].sugar + degree(quotient(l, basis[i].lm())),
                                  basis[j].sugar + degree(quotient(l, basis[j].lm())));
      queue.push_back({i, j, s, l});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs(j);

  while (!queue.empty()) {
    auto best = std::min_element(queue.begin(), queue.end(), [&](const Pair& a, const Pair& b) { return worse(b, a); });
    const Pair pr = *best;
    queue.erase(best);
    pending.erase({pr.i, pr.j});
    ++st.pairs;
    if (coprime(basis[pr.i].lm(), basis[pr.j].lm())) {
      ++st.criterion1;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || !divides(basis[k].lm(), pr.lcm)) continue;
      const auto ik = std::minmax(pr.i, k), jk = std::minmax(pr.j, k);
      chain = !pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second});
    }
    if (chain) {
      ++st.criterion2;
      continue;
    }
    IPoly h = eng.reduce(eng.spoly(basis[pr.i], basis[pr.j]), basis);
    if (h.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    eng.make_monic(h);
    basis.push_back(h);
    add_pairs(basis.size() - 1);
  }

  // Minimal, then reduced.
  std::vector<IPoly> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < basis.size() && !redundant; ++l) {
      if (l == k || !divides(basis[l].lm(), basis[k].lm())) continue;
      redundant = basis[l].lm() != basis[k].lm() || l < k;
    }
    if (!redundant) minimal.push_back(basis[k]);
  }
  std::vector<IPoly> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<IPoly> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(minimal[l]);
    IPoly tail;
    tail.terms.assign(minimal[k].terms.begin() + 1, minimal[k].terms.end());
    IPoly r = eng.reduce(tail, others);
    r.terms.insert(r.terms.begin(), minimal[k].terms.front());
    reduced.push_back(r);
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const IPoly& a, const IPoly& b) { return degrevlex_greater(b.lm(), a.lm()); });

  GroebnerBasis out;
  out.field = fld.descriptor();
  for (const auto& r : reduced) out.polys.push_back(eng.to(r, gens[0]));
  if (out.polys.empty()) throw InvalidInput("all generators are zero");
  return out;
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb) {
  const Engine eng(check_prime_field(f.field()));
  std::vector<IPoly> basis;
  for (const auto& g : gb.polys) {
    basis.push_back(eng.from(g));
    eng.make_monic(basis.back());
  }
  return eng.to(eng.reduce(eng.from(f), basis), f);
}

bool passes_s_pair_test(const GroebnerBasis& gb) {
  if (gb.polys.empty()) return false;
  const Engine eng(check_prime_field(gb.polys[0].field()));
  std::vector<IPoly> basis;
  for (const auto& g : gb.polys) {
    basis.push_back(eng.from(g));
    eng.make_monic(basis.back());
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!eng.reduce(eng.spoly(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

bool is_zero_dim_cone(const GroebnerBasis& gb) {
  if (gb.polys.empty()) return false;
  const std::size_t n = gb.polys[0].nvars();
  std::vector<char> seen(n, 0);
  for (const auto& e : gb.leading_monomials()) {
    std::size_t nonzero = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i]) {
        ++nonzero;
        var = i;
      }
    if (nonzero == 0) return true;  // the unit ideal
    if (nonzero == 1) seen[var] = 1;
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::optional<std::size_t> standard_monomial_count(const GroebnerBasis& gb) {
  if (!is_zero_dim_cone(gb)) return std::nullopt;
  if (gb.contains_one()) return 0;
  const std::vector<Exponent> lms = gb.leading_monomials();
  const std::size_t n = gb.polys[0].nvars();
  Exponent bound(n, 0);
  for (const auto& e : lms) {
    std::size_t nonzero = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i]) {
        ++nonzero;
        var = i;
      }
    if (nonzero == 1) bound[var] = bound[var] ? std::min(bound[var], e[var]) : e[var];
  }
  std::size_t count = 0;
  Exponent e(n, 0);
  for (;;) {
    bool standard = true;
    for (const auto& l : lms)
      if (divides(l, e)) {
        standard = false;
        break;
      }
    count += standard;
    std::size_t k = 0;
    while (k < n && ++e[k] == bound[k]) e[k++] = 0;
    if (k == n) break;
  }
  return count;
}

bool smooth_check(const MultiPoly& cubic) {
  check_prime_field(cubic.field());
  if (cubic.field().characteristic() == 3) throw InvalidInput("characteristic 3 is not allowed");
  if (cubic.is_zero() || !cubic.is_homogeneous() || cubic.total_degree() != 3)
    throw InvalidInput("expected a homogeneous cubic");
  std::vector<MultiPoly> jac;
  for (std::size_t i = 0; i < cubic.nvars(); ++i) jac.push_back(cubic.derivative(i));
  bool any = false;
  for (const auto& d : jac) any = any || !d.is_zero();
  if (!any) return false;
  return is_zero_dim_cone(buchberger(jac));
}

std::vector<MultiPoly> field_equations(const Field& f, std::size_t nvars) {
  const auto p = static_cast<std::uint16_t>(check_prime_field(f));
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < nvars; ++i) {
    Exponent e(nvars, 0);
    e[i] = p;
    out.push_back(MultiPoly::monomial(f, e, f.one()) - MultiPoly::variable(f, nvars, i));
  }
  return out;
}

}  // namespace galecubic

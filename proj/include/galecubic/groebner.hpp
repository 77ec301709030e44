#pragma once

// Buchberger's algorithm over prime fields in degree reverse lexicographic
// order, used to decide whether a Jacobian ideal defines only the origin.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "galecubic/poly.hpp"

namespace galecubic {

/// True when a > b in degrevlex (total degree, then the last differing
/// exponent decides: smaller exponent wins).
bool degrevlex_greater(const Exponent& a, const Exponent& b);
/// Degrevlex leading monomial; throws on the zero polynomial.
Exponent leading_monomial(const MultiPoly& f);

struct GroebnerBasis {
  std::vector<MultiPoly> polys;  // monic, increasing leading monomials
  std::string order = "degrevlex";
  std::string field;              // descriptor
  std::vector<Exponent> leading_monomials() const;
  bool contains_one() const;
};

struct GroebnerStats {
  std::size_t pairs = 0, criterion1 = 0, criterion2 = 0, zero_reductions = 0;
};

/// Reduced Groebner basis of the ideal generated by `gens`. Normal selection
/// with sugar degree; coprime-leading-term and chain criteria. Prime fields only.
GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, GroebnerStats* stats = nullptr);

/// Fully reduced remainder of f modulo the basis.
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb);

/// Every S-polynomial of every pair reduces to zero (no criteria used).
bool passes_s_pair_test(const GroebnerBasis& gb);

/// Some pure power of every variable is a leading monomial.
bool is_zero_dim_cone(const GroebnerBasis& gb);

/// Number of monomials outside the leading-term ideal; nullopt when infinite.
std::optional<std::size_t> standard_monomial_count(const GroebnerBasis& gb);

/// The partial derivatives of a homogeneous cubic generate an ideal whose only
/// zero is the origin. Smoothness over Q follows from smoothness at a prime of
/// good reduction. Requires a prime field of characteristic other than 3.
bool smooth_check(const MultiPoly& cubic);

/// x_i^p - x_i for every variable; adjoined to an ideal, the quotient has one
/// standard monomial per F_p-rational zero.
std::vector<MultiPoly> field_equations(const Field& f, std::size_t nvars);

/// `terms` random monomials of degree <= max_degree (exactly max_degree when
/// homogeneous) with random coefficients.
template <class Rng>
MultiPoly random_polynomial(const Field& f, std::size_t nvars, unsigned max_degree, std::size_t terms, Rng& rng,
                            bool homogeneous = false) {
  MultiPoly out(f, nvars);
  for (std::size_t k = 0; k < terms; ++k) {
    const unsigned d = homogeneous ? max_degree : static_cast<unsigned>(rng() % (max_degree + 1));
    Exponent e(nvars, 0);
    for (unsigned m = 0; m < d; ++m) ++e[rng() % nvars];
    out.add_term(e, f.from_int(static_cast<long>(rng() % 1000)));
  }
  return out;
}

}  // namespace galecubic

#include "galecubic/gale.hpp"

#include <algorithm>
#include <array>

namespace galecubic {

NonSyzygeticEquation::NonSyzygeticEquation(const Field& f, std::vector<std::vector<Scalar>> fs, int s,
                                           std::vector<std::string> vars)
    : field(&f), forms(std::move(fs)), sign(s), variables(std::move(vars)) {
  if (forms.size() != kSlots) throw InvalidInput("an equation needs 12 linear forms");
  for (const auto& row : forms) {
    if (row.size() != 6) throw InvalidInput("linear forms need 6 coefficients");
    for (const auto& c : row)
      if (c.field() != f) throw InvalidInput("coefficient field mismatch in equation");
  }
  if (sign != 1 && sign != -1) throw InvalidInput("sign must be +1 or -1");
  if (variables.size() != 6) throw InvalidInput("an equation needs 6 variable names");
}

bool NonSyzygeticEquation::l_forms_valid() const {
  FMatrix l = zeros(*field, 3, 6);
  for (std::size_t i = 0; i < 3; ++i) l.set_row(i, L(i));
  return rank(l) >= 2;
}

bool NonSyzygeticEquation::operator==(const NonSyzygeticEquation& o) const {
  return field == o.field && sign == o.sign && forms == o.forms;
}

FMatrix coefficient_map(const NonSyzygeticEquation& eq) {
  FMatrix c = zeros(*eq.field, 6, 12);
  for (std::size_t j = 0; j < 12; ++j) c.set_col(j, eq.forms[j]);
  return c;
}

NonSyzygeticEquation from_coefficient_map(const FMatrix& c, int sign, std::vector<std::string> vars) {
  if (c.rows() != 6 || c.cols() != 12) throw InvalidInput("coefficient map must be 6 x 12");
  std::vector<std::vector<Scalar>> forms;
  for (std::size_t j = 0; j < 12; ++j) forms.push_back(c.col(j));
  return NonSyzygeticEquation(c(0, 0).field(), forms, sign, std::move(vars));
}

NonSyzygeticEquation gale_dual(const NonSyzygeticEquation& eq) {
  const FMatrix c = coefficient_map(eq);
  if (rank(c) < 6) throw InvalidInput("degenerate tuple: kernel dimension exceeds 6");
  const FMatrix k = kernel_basis(c);  // 12 x 6, row r = coefficients of dual form r
  std::vector<std::string> vars;
  for (const auto& v : eq.variables) vars.push_back(v.size() > 1 && v.back() == '\'' ? v.substr(0, v.size() - 1) : v + "'");
  return from_coefficient_map(k.transpose(), -eq.sign, vars);
}

MultiPoly cubic_polynomial(const NonSyzygeticEquation& eq) {
  const Field& f = *eq.field;
  Matrix<MultiPoly> m(3, 3, MultiPoly(f, eq.variables));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = MultiPoly::linear_form(f, eq.M(i, j)).with_names(eq.variables);
  MultiPoly l = MultiPoly::linear_form(f, eq.L(0)).with_names(eq.variables);
  l *= MultiPoly::linear_form(f, eq.L(1));
  l *= MultiPoly::linear_form(f, eq.L(2));
  return det(m) + l * f.from_int(eq.sign);
}

bool composition_zero(const NonSyzygeticEquation& a, const NonSyzygeticEquation& b) {
  if (a.field != b.field) return false;
  return is_zero(coefficient_map(a) * coefficient_map(b).transpose());
}

namespace {

NonSyzygeticEquation permute_l(const NonSyzygeticEquation& eq, const std::array<int, 3>& perm) {
  // new L_k = old L_{perm[k]}
  NonSyzygeticEquation out = eq;
  for (int k = 0; k < 3; ++k) out.forms[NonSyzygeticEquation::l_slot(k)] = eq.L(perm[k]);
  return out;
}

std::vector<std::array<int, 3>> all_perms() {
  std::vector<std::array<int, 3>> out;
  std::array<int, 3> p{0, 1, 2};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

bool is_gale_pair(const NonSyzygeticEquation& a, const NonSyzygeticEquation& b) {
  if (a.field != b.field || a.sign == b.sign) return false;
  if (rank(coefficient_map(a)) != 6 || rank(coefficient_map(b)) != 6) return false;
  for (const auto& p : all_perms())
    if (composition_zero(a, permute_l(b, p))) return true;
  return false;
}

Equivalence equivalent_equations(const NonSyzygeticEquation& a, const NonSyzygeticEquation& b) {
  Equivalence out;
  if (a.field != b.field) return out;
  const MultiPoly ca = cubic_polynomial(a);
  const MultiPoly cb = cubic_polynomial(b);
  for (const auto& p : all_perms()) {
    // b.L_k corresponds to a.L_{p[k]}: compare b with a's L-forms reordered.
    const NonSyzygeticEquation ap = permute_l(a, p);
    const FMatrix c1 = coefficient_map(ap), c2 = coefficient_map(b);
    // c2 = g c1  <=>  c1^t g^t = c2^t
    auto gt = solve(c1.transpose(), c2.transpose());
    if (!gt || rank(*gt) != 6) continue;
    if (!is_zero(c1.transpose() * *gt - c2.transpose())) continue;
    // b's form j at x equals a's form j at g^t x.
    const MultiPoly pulled = ca.substitute_linear(*gt);
    if (!MultiPoly::proportional(pulled.with_names(cb.names()), cb)) continue;
    out.equivalent = true;
    out.l_permutation = {p[0], p[1], p[2]};
    out.change = *gt;
    return out;
  }
  return out;
}

std::optional<ScrollCertificate> scroll_membership(const NonSyzygeticEquation& eq, std::size_t i,
                                                   const FMatrix& rows) {
  return scroll_membership(cubic_polynomial(eq), eq, i, rows);
}

std::optional<ScrollCertificate> scroll_membership(const MultiPoly& cubic, const NonSyzygeticEquation& eq,
                                                   std::size_t i, const FMatrix& rows) {
  if (i > 2) throw InvalidInput("L-index must be 1, 2 or 3");
  if (rows.rows() != 2 || rows.cols() != 3) throw InvalidInput("row selection must be a 2 x 3 matrix");
  if (rank(rows) != 2) throw InvalidInput("the two generalized rows are linearly dependent");
  const Field& f = *eq.field;
  auto form = [&](const std::vector<Scalar>& c) { return MultiPoly::linear_form(f, c).with_names(eq.variables); };
  // r[a][c] = sum_k rows(a, k) * M(k, c)
  std::vector<std::vector<MultiPoly>> r(2, std::vector<MultiPoly>(3, MultiPoly(f, eq.variables)));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t c = 0; c < 3; ++c)
      for (std::size_t k = 0; k < 3; ++k) r[a][c] += form(eq.M(k, c)) * rows(a, k);
  ScrollCertificate cert;
  for (auto [c1, c2] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
    cert.minors.push_back(r[0][c1] * r[1][c2] - r[0][c2] * r[1][c1]);
  std::vector<MultiPoly> gens = cert.minors;
  gens.push_back(form(eq.L(i)));
  auto sol = express_in_ideal(cubic.with_names(eq.variables), gens, {1, 1, 1, 2});
  if (!sol) return std::nullopt;
  cert.linear = {(*sol)[0], (*sol)[1], (*sol)[2]};
  cert.quadric = (*sol)[3];
  return cert;
}

}  // namespace galecubic

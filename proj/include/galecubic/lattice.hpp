#pragma once

// Discriminant forms of even lattices and the overlattice count for the
// A2(-2) / transcendental pair.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace galecubic {

using IntMatrix = std::vector<std::vector<long>>;
/// Coordinates with respect to the cyclic factors of a finite module.
using Element = std::vector<int>;

/// A finite abelian group Z/n1 x ... x Z/nk with a quadratic form to Q/2Z.
/// The form is stored as a symmetric rational matrix Q:
/// q(x) = sum_ij Q_ij x_i x_j mod 2, b(x, y) = x^T Q y mod 1.
class FiniteQuadraticModule {
 public:
  FiniteQuadraticModule(std::vector<int> orders, std::vector<std::vector<mpq_class>> form);
  static FiniteQuadraticModule cyclic(int n, const mpq_class& q);

  const std::vector<int>& orders() const { return orders_; }
  const std::vector<std::vector<mpq_class>>& form() const { return form_; }
  std::size_t rank() const { return orders_.size(); }
  std::size_t size() const { return size_; }

  Element zero() const { return Element(orders_.size(), 0); }
  Element add(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element scale(long n, const Element& x) const;
  bool is_zero(const Element& x) const;
  int order_of(const Element& x) const;
  /// In [0, 2).
  mpq_class q(const Element& x) const;
  /// In [0, 1).
  mpq_class b(const Element& x, const Element& y) const;

  /// Mixed-radix index, first coordinate most significant.
  std::size_t index(const Element& x) const;
  Element element(std::size_t index) const;
  std::vector<Element> elements() const;
  Element generator(std::size_t i) const;

  FiniteQuadraticModule negated() const;

  /// Set when the module was built from a Gram matrix: coordinate row j maps a
  /// dual vector x (L* = G^-1 Z^n) to the j-th cyclic coordinate.
  const IntMatrix& dual_map() const { return dual_map_; }
  /// Representatives in Z^n (dual coordinates) of the generators, as columns.
  const IntMatrix& dual_generators() const { return dual_gens_; }
  Element from_dual(const std::vector<long>& x) const;

 private:
  std::vector<int> orders_;
  std::vector<std::vector<mpq_class>> form_;
  std::size_t size_ = 1;
  IntMatrix dual_map_, dual_gens_;
  friend FiniteQuadraticModule discriminant_form(const IntMatrix& gram);
};

FiniteQuadraticModule direct_sum(const FiniteQuadraticModule& a, const FiniteQuadraticModule& b);
/// Reduces into [0, m).
mpq_class reduce_mod(const mpq_class& v, long m);

mpz_class gram_determinant(const IntMatrix& gram);
/// Smith normal form quotient Z^n / G Z^n split into primary cyclic factors
/// (ordered by prime), with q(x) = x^T G^-1 x on dual representatives.
/// Requires a symmetric nondegenerate Gram matrix with even diagonal.
FiniteQuadraticModule discriminant_form(const IntMatrix& gram);

/// k * [[2, -1], [-1, 2]].
IntMatrix a2_gram(long k);
/// Intersection matrix of (h^2, T1, T2) on a non-syzygetic cubic fourfold.
IntMatrix nonsyzygetic_intersection_matrix();

/// Integer matrices g with entries in [-bound, bound] and g^T G g = G.
std::vector<IntMatrix> lattice_isometries(const IntMatrix& gram, long bound = 2);

/// An endomorphism of a finite module, given by the images of its generators.
struct ModuleMap {
  std::vector<Element> images;
  Element apply(const FiniteQuadraticModule& target, const Element& x) const;
};
/// The map induced on D(L) by an isometry g of L (x -> g^-T x on duals).
ModuleMap induced_map(const IntMatrix& gram, const FiniteQuadraticModule& d, const IntMatrix& g);
/// All automorphisms of the group preserving q.
std::vector<ModuleMap> isometries(const FiniteQuadraticModule& m);
/// Injective homomorphisms phi: a -> b with image `target` (sorted indices in
/// b) and q_b(phi(x)) = -q_a(x). Stops after `limit` maps when limit > 0.
std::vector<ModuleMap> anti_isometries(const FiniteQuadraticModule& a, const FiniteQuadraticModule& b,
                                       const std::vector<std::size_t>& target, std::size_t limit = 0);

/// The subgroup generated by `gens`, as sorted element indices.
std::vector<std::size_t> subgroup_closure(const FiniteQuadraticModule& m, const std::vector<Element>& gens);
/// Every subgroup of order <= max_order all of whose elements satisfy `keep`.
std::vector<std::vector<std::size_t>> enumerate_subgroups(const FiniteQuadraticModule& m, std::size_t max_order,
                                                          const std::function<bool(const Element&)>& keep);

/// D(S) = discriminant form of A2(-2); D(T) = q_{A2(2)} + (Z/3, q = 4/3), the
/// form of T = T(X)(-1).
struct DSDT {
  FiniteQuadraticModule ds, dt;
};
DSDT build_DS_DT();
/// q_{T(X)} = -q_{A2(2)} + (Z/3, q(alpha) = 2/3); b(alpha, alpha) = -1/3 mod 1.
FiniteQuadraticModule transcendental_form();

/// A subgroup of D(S) + D(T) (coordinates of D(S) first).
struct GlueGroup {
  std::vector<Element> generators;
  std::vector<std::size_t> elements;  // sorted indices in direct_sum(ds, dt)
  bool operator==(const GlueGroup& o) const { return elements == o.elements; }
  bool operator<(const GlueGroup& o) const { return elements < o.elements; }
};
/// Order |D(S)|, q vanishes, projection to D(S) bijective and to D(T) injective.
bool is_glue_group(const DSDT& d, const GlueGroup& h);

struct GlueEnumeration {
  std::vector<std::vector<std::size_t>> targets;  // subgroups H' of D(T) anti-isometric to D(S)
  std::size_t isometry_count = 0;                 // |O(D(S))|
  std::vector<GlueGroup> groups;
};
/// Choose H' then compose one anti-isometry with every isometry of D(S).
GlueEnumeration enumerate_glue_groups(const DSDT& d);
/// All isotropic subgroups of order |D(S)| with the projection conditions.
std::vector<GlueGroup> brute_force_glue_groups(const DSDT& d);
/// H_{a,b} = {((a, b), (alpha(a), beta(b), 0))} and H'_{a,b} with the last
/// two coordinates exchanged.
std::vector<GlueGroup> parametrized_glue_groups(const DSDT& d);

/// (phi, psi) in O(S) x {+1, -1}.
struct GroupElement {
  IntMatrix phi;
  int psi = 1;
  bool is_plus_minus_identity() const;
};
struct Orbit {
  std::vector<std::size_t> members;  // indices into the glue group list
  std::vector<GroupElement> stabilizer;
};
struct OrbitDecomposition {
  std::size_t group_order = 0;
  std::vector<Orbit> orbits;
  /// |M_{S,T}| * |stabilizer| / |G|.
  std::size_t fm_partner_count() const;
};
GlueGroup act(const DSDT& d, const GroupElement& g, const GlueGroup& h);
OrbitDecomposition group_action_orbits(const DSDT& d, const std::vector<GlueGroup>& groups);

std::string fraction_str(const mpq_class& v);

}  // namespace galecubic

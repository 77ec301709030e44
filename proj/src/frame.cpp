#include "galecubic/frame.hpp"

#include <map>

namespace galecubic {

namespace {
ExteriorElement basis_vector(const Field& f, int i) { return ExteriorElement::basis(f, Mask(1u << i)); }

ExteriorElement hat(const Field& f, int offset, int i) {
  auto v = [&](int k) { return basis_vector(f, offset + k); };
  switch (i) {
    case 0: return wedge(v(1), v(2));
    case 1: return -wedge(v(0), v(2));
    case 2: return wedge(v(0), v(1));
    default: throw InvalidInput("hat index out of range");
  }
}
}  // namespace

ExteriorElement e_hat(const Field& f, int i) { return hat(f, 0, i); }
ExteriorElement f_hat(const Field& f, int i) { return hat(f, 3, i); }

ExteriorElement orientation_EF(const Field& f) {
  const ExteriorElement le = ExteriorElement::basis(f, 0b000111);
  const ExteriorElement lf = -ExteriorElement::basis(f, 0b111000);
  return wedge(le, lf);
}

namespace {

CoordinateFrame make_frame(const Field& f) {
  CoordinateFrame fr;
  fr.field = &f;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) fr.u.push_back(wedge(e_hat(f, i), basis_vector(f, F1 + j)));
  fr.u.push_back(ExteriorElement::basis(f, 0b000111));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) fr.uhat.push_back(wedge(basis_vector(f, E1 + i), f_hat(f, j)));
  fr.uhat.push_back(-ExteriorElement::basis(f, 0b111000));
  fr.U = zeros(f, 10, 20);
  fr.Uhat = zeros(f, 10, 20);
  for (std::size_t r = 0; r < 10; ++r) {
    fr.U.set_row(r, fr.u[r].coeffs());
    fr.Uhat.set_row(r, fr.uhat[r].coeffs());
  }
  fr.basis_u = fr.U.transpose();
  fr.basis_uhat = fr.Uhat.transpose();
  return fr;
}

}  // namespace

CoordinateFrame build_frame(const Field& f) {
  thread_local std::map<const Field*, CoordinateFrame> cache;
  auto it = cache.find(&f);
  if (it == cache.end()) it = cache.emplace(&f, make_frame(f)).first;
  return it->second;
}

FMatrix CoordinateFrame::evaluation() const { return FMatrix::vcat(U, Uhat); }

std::vector<std::string> lambda3_names() {
  std::vector<std::string> out;
  for (Mask m : grade_basis(3)) {
    std::string s = "p";
    for (int i = 0; i < kDim; ++i)
      if (m & (1u << i)) s += std::to_string(i + 1);
    out.push_back(s);
  }
  return out;
}

MultiPoly functional_poly(const Field& f, const std::vector<Scalar>& row) {
  return MultiPoly::linear_form(f, row).with_names(lambda3_names());
}

FMatrix U_E(const Field& f) { return build_frame(f).basis_u; }
FMatrix U_F(const Field& f) { return build_frame(f).basis_uhat; }

}  // namespace galecubic

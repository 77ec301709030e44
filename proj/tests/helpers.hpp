#pragma once

#include <random>
#include <vector>

#include "galecubic/field.hpp"
#include "galecubic/matrix.hpp"

namespace testutil {

using galecubic::Field;
using galecubic::FMatrix;
using galecubic::Scalar;

inline Scalar random_scalar(const Field& f, std::mt19937_64& rng, int span = 9) {
  std::uniform_int_distribution<long> d(-span, span);
  if (!f.is_extension()) return f.from_int(d(rng));
  if (f.is_rational_base())
    return Scalar(f, mpq_class(d(rng)), mpq_class(d(rng)));
  return Scalar(f, std::int64_t{d(rng)}, std::int64_t{d(rng)});
}

inline Scalar random_nonzero(const Field& f, std::mt19937_64& rng, int span = 9) {
  for (;;) {
    Scalar s = random_scalar(f, rng, span);
    if (!s.is_zero()) return s;
  }
}

inline FMatrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int span = 9) {
  FMatrix m = galecubic::zeros(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(f, rng, span);
  return m;
}

inline std::vector<const Field*> field_kinds() {
  return {&Field::rationals(), &Field::prime(101), &Field::prime(97),
          &Field::cyclotomic3(Field::rationals()), &Field::cyclotomic3(Field::prime(5))};
}

}  // namespace testutil

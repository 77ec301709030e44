#pragma once

// JSON interchange. Scalars: rationals as "num/den" strings, prime-field
// elements as integers in [0, p), elements a + b*xi of a quadratic extension
// as [a, b]. Polynomials are lists of [coefficient, exponent-vector].

#include <optional>
#include <string>
#include <vector>

#include "galecubic/equivariant.hpp"
#include "galecubic/gale.hpp"
#include "json.hpp"

namespace galecubic {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Field& f, const Json& j);

Json vector_to_json(const std::vector<Scalar>& v);
std::vector<Scalar> vector_from_json(const Field& f, const Json& j, std::size_t expected_size);

/// Row-major list of rows.
Json matrix_to_json(const FMatrix& m);
FMatrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols);

Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Field& f, const Json& j, std::size_t nvars);

/// {"sign", "variables", "M": 9 rows, "L": 3 rows}.
Json equation_to_json(const NonSyzygeticEquation& eq);
NonSyzygeticEquation equation_from_json(const Field& f, const Json& j);

struct InstanceFile {
  const Field* field = &Field::rationals();
  std::vector<NonSyzygeticEquation> equations;
  /// 20 x 10; serialized as a list of 10 columns of length 20.
  std::optional<FMatrix> lagrangian;
  std::vector<FMatrix> generators;  // 6 x 6
  std::optional<A4FamilyParams> params;

  bool operator==(const InstanceFile& o) const;
};

Json instance_to_json(const InstanceFile& inst);
/// Throws InvalidInput on malformed content (wrong arity, lengths, field).
InstanceFile instance_from_json(const Json& j);

/// Comma-separated scalars in the textual form accepted by the field
/// ("1/2", "5", "2+3*xi" is not accepted: use "2:3" for a + b*xi).
std::vector<Scalar> parse_scalar_list(const Field& f, const std::string& text);

}  // namespace galecubic

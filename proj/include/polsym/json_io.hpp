#ifndef POLSYM_JSON_IO_HPP
#define POLSYM_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "polsym/norms.hpp"

namespace polsym {

using Json = nlohmann::ordered_json;

// Polynomials, forms and multipliers share one term-list format:
//   {"n": int, "m": int, "terms": [{"index": [int,...], "re": f, "im": f}, ...]}
// with 1-based index arrays. Polynomial indices must be non-decreasing;
// duplicate indices are rejected everywhere. Zero coefficients are omitted
// when writing.

Json to_json(const HomogeneousPolynomial& P);
Json to_json(const MultilinearForm& L);
Json to_json(const SchurMultiplier& A);
Json to_json(const NormEstimate& est);

HomogeneousPolynomial poly_from_json(const Json& j);
MultilinearForm form_from_json(const Json& j);
SchurMultiplier multiplier_from_json(const Json& j);

HomogeneousPolynomial load_poly_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace polsym

#endif

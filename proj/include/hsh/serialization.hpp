#ifndef HSH_SERIALIZATION_HPP
#define HSH_SERIALIZATION_HPP

#include "hsh/harmonics.hpp"
#include "hsh/numerics.hpp"

#include <json.hpp>

#include <string_view>

/// JSON wire formats (schemas under schemas/):
///
///   multi-index:  {"N": 3, "l": [1, 2, 2], "branch": "+"}
///   report:       {"index": <multi-index>, "lambda": 8.0, "eigen_residual_max": ...,
///                  "norm_relerr": ..., "ortho_max": ..., "passed": true}

namespace hsh {

nlohmann::ordered_json to_json(const MultiIndex& idx);

/// Throws InvalidMultiIndex for missing or mistyped fields, N != |l|, an
/// unknown branch string, or an invalid chain.
MultiIndex multi_index_from_json(const nlohmann::ordered_json& j);

/// Parses text first; malformed JSON is reported as InvalidMultiIndex too.
MultiIndex parse_multi_index(std::string_view text);

nlohmann::ordered_json to_json(const VerificationReport& report);

}  // namespace hsh

#endif  // HSH_SERIALIZATION_HPP

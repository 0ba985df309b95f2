#pragma once

#include <json.hpp>

#include "bruhat/charts.hpp"
#include "bruhat/gelfand_tsetlin.hpp"
#include "bruhat/invariants.hpp"
#include "bruhat/lenard.hpp"

namespace bruhat::io {

using nlohmann::json;

// {n, x: [...], phi: [...]}
json point_to_json(const charts::MomentumAnglePoint& p);
// Throws ParseError on malformed input, InvalidSimplexPoint on invariant violation.
charts::MomentumAnglePoint point_from_json(const json& j);

// {n, constants, max_bracket_s, max_bracket_b, spread}
json invariants_to_json(const invariants::ElementaryReport& e, const invariants::InvolutionReport& inv);

// Triangular array [[mu^1...], [mu^2...], ...]
json pattern_to_json(const gt::GTPattern& p);

// {seed, K, residuals, ratios, rank, involution_max}
json chain_to_json(const lenard::ChainReport& r);

}  // namespace bruhat::io

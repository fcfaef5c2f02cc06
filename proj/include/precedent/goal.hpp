#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "precedent/dimension_models.hpp"
#include "precedent/factor_models.hpp"
#include "precedent/hierarchy.hpp"

namespace precedent {

// Goal syntax shared by the command line and traces:
//   literals     pi, delta, Q, !Q (also ¬Q)
//   bound claims v<=d (lower bound on d), d<=v (upper bound on d)
// `pi` and `delta` name the outcome unless a factor is literally called so.

std::optional<Side> parse_side(std::string_view text);

// Throws UnknownNameError.
Literal parse_literal(const FactorHierarchy& h, std::string_view text);
std::string format_literal(const FactorHierarchy& h, Literal l);

// Throws UnknownNameError or ValueError.
BoundClaim parse_bound(const DimensionHierarchy& h, std::string_view text);
std::string format_bound(const DimensionHierarchy& h, const BoundClaim& claim);

}  // namespace precedent

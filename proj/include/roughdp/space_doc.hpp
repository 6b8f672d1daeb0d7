#ifndef ROUGHDP_SPACE_DOC_HPP
#define ROUGHDP_SPACE_DOC_HPP

#include <string>
#include <vector>

#include "roughdp/approx.hpp"
#include "roughdp/sets.hpp"
#include "roughdp/topology.hpp"

// JSON space documents:
//   { "name": "example", "universe": ["u1", ...],
//     "relation": [["u1","u2"], ...] }
// and the brace set-expression syntax used on the command line.

namespace roughdp {

struct SpaceDocument {
    std::string name;
    std::vector<std::string> universe;
    std::vector<std::pair<std::string, std::string>> relation;
    // Duplicate relation pairs are accepted, deduplicated, and noted here.
    int duplicate_pairs = 0;
};

/// Throws ParseError on malformed documents and UnknownLabel when a
/// relation endpoint is not in the universe.
SpaceDocument parse_space(const std::string& text);

Universe universe_of(const SpaceDocument& doc);
BinaryRelation relation_of(const SpaceDocument& doc);
ApproximationSpace build_space(const SpaceDocument& doc, int enum_cap = kDefaultEnumCap);

/// "{u1,u3}", "{}", "empty", or "all".
ElementSet parse_set_expression(const Universe& universe, const std::string& expr);

}  // namespace roughdp

#endif

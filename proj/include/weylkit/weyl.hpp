#ifndef WEYLKIT_WEYL_HPP
#define WEYLKIT_WEYL_HPP

#include "weylkit/character.hpp"

namespace weylkit {

// dim V(lambda) by the product formula over positive coroots; exact.
Int weyl_dimension(const RootSystem& rs, const Weight& lambda);

// Full weight-multiplicity character of V(lambda) via Freudenthal's recursion.
// Results are memoized per (root system, lambda); safe under concurrent use.
FormalCharacter weyl_character(const RootSystemPtr& rs, const Weight& lambda);

// Dominant mu <= lambda in the dominance order, sorted by increasing height
// of lambda - mu, ties broken lexicographically (lambda itself first).
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda);

// Expansion of a character in the basis of Weyl characters.  Terms appear in
// greedy extraction order (leading weights first); `residual` collects what
// is left once no dominant weight remains in the support, so it is nonempty
// exactly when the input was not Weyl-invariant.
struct WeylDecomposition {
    std::vector<std::pair<Weight, Int>> terms;
    FormalCharacter residual;
};

WeylDecomposition decompose_weyl_basis(const FormalCharacter& c);

}  // namespace weylkit

#endif

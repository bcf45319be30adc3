#ifndef WEYLKIT_FILTRATION_HPP
#define WEYLKIT_FILTRATION_HPP

#include "weylkit/modular.hpp"
#include "weylkit/weyl.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace weylkit {

// Evidence gathered about one candidate filtration factor during a head
// obstruction check: the factor's highest weight, the registered head of the
// corresponding costandard module, and whether the sought simple occurs in it.
struct HeadEvidence {
    Weight candidate;
    std::vector<std::string> head;
    bool contains_target = false;
};

// Outcome of a filtration test.
//
//   Decomposed            the character is a nonnegative integral combination
//                         of the basis characters; `witness` lists the unique
//                         candidate multiset of factor highest weights.
//   CharacterObstruction  the greedy expansion forced a negative coefficient;
//                         `obstruction_weight` is the first weight where this
//                         happened, `obstruction_coefficient` its coefficient,
//                         and `remainder` the character still to be expanded
//                         at that point.
//   HeadObstruction       no candidate factor can supply the required head
//                         layer; `candidates` holds the full evidence.
//   Inconclusive          some candidate could supply it, so nothing is ruled
//                         out.  No verdict ever affirms that a module-level
//                         filtration exists.
struct FiltrationVerdict {
    enum class Status { Decomposed, CharacterObstruction, HeadObstruction, Inconclusive };

    Status status = Status::Inconclusive;
    std::vector<std::pair<Weight, Int>> witness;
    std::optional<Weight> obstruction_weight;
    Int obstruction_coefficient = 0;
    std::optional<FormalCharacter> remainder;
    std::vector<HeadEvidence> candidates;
};

// Greedy expansion of c in the basis of Weyl characters chi(lambda).  All
// coefficients nonnegative -> Decomposed; a negative one -> the verdict is
// CharacterObstruction.  This is a necessary condition for the underlying
// module to be filtered by costandard modules, never a sufficient one: it
// certifies only the character identity.
FiltrationVerdict good_filtration_decompose(const FormalCharacter& c);

// Same greedy expansion in the basis ch L(lambda0) * twist(chi(lambda1), p^r)
// indexed by lambda = lambda0 + p^r * lambda1.  A Decomposed verdict is again
// only the character-level necessary condition for a filtration by these
// twisted-costandard tensor factors.
FiltrationVerdict good_pr_filtration_decompose(const FormalCharacter& c, std::int64_t p, int r,
                                               const DecompositionTable& table);

// Suppose a module with highest weight nu carried a filtration whose factors
// are L(mu0) * Nabla(mu1)^[r]; any copy of L(sigma)^[r] sitting directly
// under the head of the module would have to appear in the head of one of
// the twisted costandard factors Nabla(mu)^[r].  The candidates are exactly
// the dominant mu with p^r * mu <= nu in the dominance order.  If the
// registered head of Nabla(mu) omits L(sigma) for every candidate, the
// filtration is impossible: HeadObstruction.  Otherwise Inconclusive.  Both
// verdicts carry the complete candidate evidence.  A candidate whose head is
// not registered raises MissingData naming it.  This check reads the
// registry only; it does no character arithmetic beyond enumerating the
// candidates.
FiltrationVerdict head_obstruction_check(const Weight& nu, const Weight& sigma, std::int64_t p,
                                         int r, const DecompositionTable& table,
                                         const FactRegistry& registry);

// Filters a multiset of simple modules given as (highest weight, twist) pairs
// meaning L(weight)^[twist], keeping exactly those whose full highest weight
// weight * p^twist has restricted digit (p^r - 1) * rho, i.e. those of the
// form St_r tensor a twisted simple.  Order and multiplicity are preserved.
std::vector<std::pair<Weight, int>> steinberg_block_factors(
    const std::vector<std::pair<Weight, int>>& factors, const RootSystem& rs, std::int64_t p,
    int r);

}  // namespace weylkit

#endif

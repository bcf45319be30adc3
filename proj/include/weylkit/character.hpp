#ifndef WEYLKIT_CHARACTER_HPP
#define WEYLKIT_CHARACTER_HPP

#include "weylkit/root_system.hpp"

#include <map>

namespace weylkit {

// A formal Z-linear combination of weights, i.e. an element of Z[X(T)]^W or,
// for intermediate results, of Z[X(T)].  Sparse: absent weight means zero.
class FormalCharacter {
public:
    explicit FormalCharacter(RootSystemPtr rs);
    static FormalCharacter monomial(RootSystemPtr rs, const Weight& w, Int mult = 1);

    const RootSystemPtr& root_system() const { return rs_; }
    const std::map<Weight, Int>& terms() const { return terms_; }

    // Builder: accumulates and drops zero entries.
    void add(const Weight& w, const Int& mult);

    Int multiplicity(const Weight& w) const;
    bool empty() const { return terms_.empty(); }
    // Sum of all multiplicities; negative entries count with sign.
    Int dimension() const;
    bool is_effective() const;  // no negative multiplicities
    bool is_weyl_invariant() const;

    // Dimension of the p^r-divisible part, i.e. the number of basis weights
    // fixed by the scheme-theoretic torus kernel of the r-th Frobenius.
    Int torus_fixed_dimension(std::int64_t p, int r) const;
    // Same weights, divided by p^r: the character whose twist is the divisible part.
    FormalCharacter torus_fixed_part(std::int64_t p, int r) const;

    // Dominant support weights that are dominance-maximal; lexicographically
    // least such weight, if any (support may be entirely non-dominant).
    std::optional<Weight> leading_dominant_weight() const;
    // All dominance-maximal dominant support weights with their multiplicities,
    // largest first in lexicographic order.
    std::vector<std::pair<Weight, Int>> dominant_leading_weights() const;

    bool operator==(const FormalCharacter& o) const;

    FormalCharacter operator+(const FormalCharacter& o) const;
    FormalCharacter operator-(const FormalCharacter& o) const;
    FormalCharacter operator*(const FormalCharacter& o) const;  // tensor product
    FormalCharacter scaled(const Int& n) const;

    // Serialized as [[coords..., multiplicity], ...] in lexicographic weight order.
    nlohmann::ordered_json to_json() const;

private:
    void require_same_system(const FormalCharacter& o) const;

    RootSystemPtr rs_;
    std::map<Weight, Int> terms_;
};

// Weight-wise dilation by q = p^r (a prime power >= 2).
FormalCharacter frobenius_twist(const FormalCharacter& c, std::int64_t q);

// Character of the dual module: negates every weight.
FormalCharacter dual_character(const FormalCharacter& c);

}  // namespace weylkit

#endif

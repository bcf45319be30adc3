#ifndef WEYLKIT_ROOT_SYSTEM_HPP
#define WEYLKIT_ROOT_SYSTEM_HPP

#include "weylkit/numeric.hpp"

#include <json.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace weylkit {

// A weight in fundamental-weight coordinates: w = sum w_i * varpi_i.
// Ordered lexicographically so weight-keyed maps serialize deterministically.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
    Weight(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

    std::size_t size() const { return coords_.size(); }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<std::int64_t>& coords() const { return coords_; }

    auto operator<=>(const Weight&) const = default;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight scaled(std::int64_t n) const;
    bool is_zero() const;

    std::string to_string() const;  // "(a, b)"

private:
    std::vector<std::int64_t> coords_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

// An element of the root lattice in simple-root coordinates: v = sum v_i * alpha_i.
// Kept as a separate type from Weight so the two coordinate systems cannot be mixed.
class RootVector {
public:
    RootVector() = default;
    explicit RootVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
    RootVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

    std::size_t size() const { return coords_.size(); }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<std::int64_t>& coords() const { return coords_; }

    auto operator<=>(const RootVector&) const = default;

    RootVector operator+(const RootVector& o) const;
    RootVector operator-() const;
    std::int64_t height() const;  // sum of coordinates

    std::string to_string() const;

private:
    std::vector<std::int64_t> coords_;
};

std::ostream& operator<<(std::ostream& os, const RootVector& v);

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

// Immutable data for an irreducible root system, built either from a series
// label ("A3", "B2", "C4", "D5", "G2") or from an explicit Cartan matrix.
// Convention: cartan()[i][j] = <alpha_j, alpha_i^vee>, i.e. column j holds the
// fundamental coordinates of the simple root alpha_j.
class RootSystem {
public:
    static RootSystemPtr named(std::string_view label);
    // Best-effort generic construction; the Weyl group is enumerated explicitly,
    // so very large ranks are rejected rather than ground through.
    static RootSystemPtr from_cartan(std::vector<std::vector<std::int64_t>> cartan, std::string label);

    const std::string& label() const { return label_; }
    int rank() const { return rank_; }
    const std::vector<std::vector<std::int64_t>>& cartan() const { return cartan_; }
    // Unique key identifying the system's content (used by memo caches).
    const std::string& cache_key() const { return cache_key_; }

    const std::vector<RootVector>& positive_roots() const { return positive_roots_; }
    bool is_root(const RootVector& v) const;
    // (beta, beta) normalized so that short simple roots have squared length 2.
    std::int64_t root_norm(const RootVector& beta) const;
    const RootVector& highest_short_root() const { return highest_short_root_; }

    const Weight& rho() const { return rho_; }
    const Int& weyl_order() const { return weyl_order_; }

    // Fundamental coordinates of an element of the root lattice.
    Weight weight_of(const RootVector& v) const;
    // Simple-root coordinates of a weight, if it lies in the root lattice.
    std::optional<RootVector> root_coordinates(const Weight& w) const;
    // Exact simple-root coordinates in Q (defined for every weight).
    std::vector<Rational> rational_root_coordinates(const Weight& w) const;

    bool is_dominant(const Weight& w) const;
    Weight simple_reflection(int i, const Weight& w) const;
    // Reflection in an arbitrary root; throws NotARoot if beta is not a root.
    Weight reflect(const RootVector& beta, const Weight& w) const;
    Weight dominant_representative(const Weight& w) const;
    Weight w0_action(const Weight& w) const;
    std::set<Weight> weyl_orbit(const Weight& w) const;

    // <w, beta^vee> = 2(w, beta)/(beta, beta); beta must be a root.
    Int coroot_pairing(const Weight& w, const RootVector& beta) const;
    // (w, v) for v in the root lattice, with the normalization above.
    Int form_with_root(const Weight& w, const RootVector& v) const;

    // mu <= lambda iff lambda - mu is a non-negative integer combination of simple roots.
    bool dominance_leq(const Weight& mu, const Weight& lambda) const;

    // All weights with coordinates in [0, p^r), in ascending lexicographic order.
    std::vector<Weight> restricted_weights(std::int64_t p, int r) const;

    // 2(p^r - 1)rho + w0(lam); the highest weight pairing with lam under the
    // contravariant duality on the r-th Frobenius kernel. lam must itself have
    // coordinates in [0, p^r), otherwise NotRestricted.
    Weight hat_weight(const Weight& lam, std::int64_t p, int r) const;

    nlohmann::ordered_json to_json() const;

private:
    RootSystem() = default;
    static RootSystemPtr build(std::vector<std::vector<std::int64_t>> cartan, std::string label,
                               std::optional<Int> known_weyl_order);
    void check_rank(std::size_t n, const char* what) const;

    std::string label_;
    int rank_ = 0;
    std::vector<std::vector<std::int64_t>> cartan_;
    std::vector<std::vector<Rational>> cartan_inverse_;  // columns: fundamental weights in root coords
    std::vector<std::int64_t> sym_;                      // d_i with (alpha_i, alpha_i) = 2 d_i
    std::vector<RootVector> positive_roots_;
    std::set<RootVector> root_set_;                      // positive and negative
    RootVector highest_short_root_;
    Weight rho_;
    Int weyl_order_;
    std::vector<std::vector<std::int64_t>> w0_;  // matrix of the longest element on fundamental coords
    std::string cache_key_;
};

}  // namespace weylkit

#endif

#include "weylkit/character.hpp"

namespace weylkit {

FormalCharacter::FormalCharacter(RootSystemPtr rs) : rs_(std::move(rs)) {
    if (!rs_) throw Error(ErrorKind::UnsupportedType, "character needs a root system");
}

FormalCharacter FormalCharacter::monomial(RootSystemPtr rs, const Weight& w, Int mult) {
    FormalCharacter c(std::move(rs));
    c.add(w, mult);
    return c;
}

void FormalCharacter::add(const Weight& w, const Int& mult) {
    if (mult == 0) return;
    rs_->rational_root_coordinates(w);  // rank check
    auto [it, inserted] = terms_.try_emplace(w, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

Int FormalCharacter::multiplicity(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Int(0) : it->second;
}

Int FormalCharacter::dimension() const {
    Int total = 0;
    for (const auto& [w, m] : terms_) total += m;
    return total;
}

bool FormalCharacter::is_effective() const {
    for (const auto& [w, m] : terms_)
        if (m < 0) return false;
    return true;
}

bool FormalCharacter::is_weyl_invariant() const {
    for (const auto& [w, m] : terms_)
        for (int i = 0; i < rs_->rank(); ++i)
            if (multiplicity(rs_->simple_reflection(i, w)) != m) return false;
    return true;
}

Int FormalCharacter::torus_fixed_dimension(std::int64_t p, int r) const {
    return torus_fixed_part(p, r).dimension();
}

FormalCharacter FormalCharacter::torus_fixed_part(std::int64_t p, int r) const {
    if (p < 2 || r < 1) throw Error(ErrorKind::BadTwist, "need p >= 2 and r >= 1");
    std::int64_t q = 1;
    for (int k = 0; k < r; ++k) {
        q *= p;
        if (q > (std::int64_t{1} << 40)) throw Error(ErrorKind::BadTwist, "p^r too large");
    }
    FormalCharacter out(rs_);
    for (const auto& [w, m] : terms_) {
        bool divisible = true;
        std::vector<std::int64_t> reduced(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] % q != 0) {
                divisible = false;
                break;
            }
            reduced[i] = w[i] / q;
        }
        if (divisible) out.add(Weight(std::move(reduced)), m);
    }
    return out;
}

std::optional<Weight> FormalCharacter::leading_dominant_weight() const {
    std::vector<Weight> dominant;
    for (const auto& [w, m] : terms_)
        if (rs_->is_dominant(w)) dominant.push_back(w);
    for (const auto& w : dominant) {  // map order => candidates scanned lex-ascending
        bool maximal = true;
        for (const auto& v : dominant)
            if (v != w && rs_->dominance_leq(w, v)) {
                maximal = false;
                break;
            }
        if (maximal) return w;
    }
    return std::nullopt;
}

std::vector<std::pair<Weight, Int>> FormalCharacter::dominant_leading_weights() const {
    std::vector<Weight> dominant;
    for (const auto& [w, m] : terms_)
        if (rs_->is_dominant(w)) dominant.push_back(w);
    std::vector<std::pair<Weight, Int>> out;
    for (auto it = dominant.rbegin(); it != dominant.rend(); ++it) {  // lex-descending
        bool maximal = true;
        for (const auto& v : dominant)
            if (v != *it && rs_->dominance_leq(*it, v)) {
                maximal = false;
                break;
            }
        if (maximal) out.emplace_back(*it, terms_.at(*it));
    }
    return out;
}

bool FormalCharacter::operator==(const FormalCharacter& o) const {
    return rs_->cache_key() == o.rs_->cache_key() && terms_ == o.terms_;
}

void FormalCharacter::require_same_system(const FormalCharacter& o) const {
    if (rs_->cache_key() != o.rs_->cache_key())
        throw Error(ErrorKind::MixedRootSystem,
                    "cannot combine characters over " + rs_->label() + " and " + o.rs_->label());
}

FormalCharacter FormalCharacter::operator+(const FormalCharacter& o) const {
    require_same_system(o);
    FormalCharacter out = *this;
    for (const auto& [w, m] : o.terms_) out.add(w, m);
    return out;
}

FormalCharacter FormalCharacter::operator-(const FormalCharacter& o) const {
    require_same_system(o);
    FormalCharacter out = *this;
    for (const auto& [w, m] : o.terms_) out.add(w, -m);
    return out;
}

FormalCharacter FormalCharacter::operator*(const FormalCharacter& o) const {
    require_same_system(o);
    FormalCharacter out(rs_);
    for (const auto& [w1, m1] : terms_)
        for (const auto& [w2, m2] : o.terms_) out.add(w1 + w2, m1 * m2);
    return out;
}

FormalCharacter FormalCharacter::scaled(const Int& n) const {
    FormalCharacter out(rs_);
    if (n == 0) return out;
    for (const auto& [w, m] : terms_) out.add(w, m * n);
    return out;
}

nlohmann::ordered_json FormalCharacter::to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [w, m] : terms_) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (auto c : w.coords()) row.push_back(c);
        if (const auto v = int_to_i64(m); v && *v <= (std::int64_t{1} << 53) && *v >= -(std::int64_t{1} << 53))
            row.push_back(*v);
        else
            row.push_back(m.str());
        arr.push_back(std::move(row));
    }
    return arr;
}

FormalCharacter frobenius_twist(const FormalCharacter& c, std::int64_t q) {
    if (q < 2 || !is_prime_power(q))
        throw Error(ErrorKind::BadTwist, "twist factor must be a prime power >= 2, got " + std::to_string(q));
    FormalCharacter out(c.root_system());
    for (const auto& [w, m] : c.terms()) {
        std::vector<std::int64_t> scaled(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            scaled[i] = w[i] * q;
            if (w[i] != 0 && scaled[i] / w[i] != q) throw Error(ErrorKind::BadTwist, "twisted weight overflows");
        }
        out.add(Weight(std::move(scaled)), m);
    }
    return out;
}

FormalCharacter dual_character(const FormalCharacter& c) {
    FormalCharacter out(c.root_system());
    for (const auto& [w, m] : c.terms()) out.add(-w, m);
    return out;
}

}  // namespace weylkit

#include "weylkit/weyl.hpp"

#include <algorithm>
#include <mutex>

namespace weylkit {

namespace {

void require_dominant(const RootSystem& rs, const Weight& lambda) {
    if (!rs.is_dominant(lambda))
        throw Error(ErrorKind::NotDominant, lambda.to_string() + " is not dominant");
}

std::int64_t rational_floor(const Rational& q) {
    const Int num = boost::multiprecision::numerator(q);
    const Int den = boost::multiprecision::denominator(q);
    Int fl = num / den;
    if (num < 0 && num % den != 0) fl -= 1;
    const auto v = int_to_i64(fl);
    if (!v) throw Error(ErrorKind::UnsupportedType, "weight coordinates overflow");
    return *v;
}

}  // namespace

Int weyl_dimension(const RootSystem& rs, const Weight& lambda) {
    require_dominant(rs, lambda);
    const Weight shifted = lambda + rs.rho();
    Int num = 1, den = 1;
    for (const auto& beta : rs.positive_roots()) {
        num *= rs.coroot_pairing(shifted, beta);
        den *= rs.coroot_pairing(rs.rho(), beta);
    }
    if (num % den != 0) throw Error(ErrorKind::UnsupportedType, "Weyl dimension was not integral");
    return num / den;
}

std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda) {
    require_dominant(rs, lambda);
    const int n = rs.rank();
    const auto lambda_rc = rs.rational_root_coordinates(lambda);
    std::vector<std::int64_t> bound(n);
    for (int i = 0; i < n; ++i) {
        bound[i] = rational_floor(lambda_rc[i]);
        if (bound[i] < 0) bound[i] = 0;  // cannot happen for dominant lambda, kept as guard
    }

    struct Entry {
        std::int64_t depth;
        Weight w;
    };
    std::vector<Entry> found;
    std::vector<std::int64_t> t(n, 0);
    while (true) {
        // mu = lambda - sum t_i alpha_i, with alpha_j's fundamental coords in Cartan column j.
        std::vector<std::int64_t> mu(lambda.coords());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) mu[i] -= rs.cartan()[i][j] * t[j];
        Weight m(std::move(mu));
        if (rs.is_dominant(m)) {
            std::int64_t depth = 0;
            for (int i = 0; i < n; ++i) depth += t[i];
            found.push_back({depth, std::move(m)});
        }
        int i = n - 1;
        while (i >= 0 && t[i] == bound[i]) {
            t[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++t[i];
    }
    std::sort(found.begin(), found.end(), [](const Entry& a, const Entry& b) {
        if (a.depth != b.depth) return a.depth < b.depth;
        return a.w < b.w;
    });
    std::vector<Weight> out;
    out.reserve(found.size());
    for (auto& e : found) out.push_back(std::move(e.w));
    return out;
}

FormalCharacter weyl_character(const RootSystemPtr& rs, const Weight& lambda) {
    require_dominant(*rs, lambda);

    static std::mutex cache_mutex;
    static std::map<std::pair<std::string, Weight>, FormalCharacter> cache;
    const std::pair<std::string, Weight> key{rs->cache_key(), lambda};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    // Freudenthal: multiplicities of dominant weights top-down, then spread
    // over Weyl orbits.  All arithmetic stays in Z with exact divisions.
    const auto dominant = dominant_weights_below(*rs, lambda);
    std::map<Weight, Int> mult;
    mult[lambda] = 1;
    const Weight two_rho = rs->rho() + rs->rho();

    auto mult_of = [&](const Weight& w) -> Int {
        auto it = mult.find(rs->dominant_representative(w));
        return it == mult.end() ? Int(0) : it->second;
    };

    for (const auto& mu : dominant) {
        if (mu == lambda) continue;
        const auto diff_rc = rs->root_coordinates(lambda - mu);
        if (!diff_rc) throw Error(ErrorKind::NotInRootLattice, "internal: mu not below lambda");
        const std::int64_t depth = diff_rc->height();
        Int numerator = 0;
        for (const auto& beta : rs->positive_roots()) {
            const Weight beta_wt = rs->weight_of(beta);
            const std::int64_t step = beta.height();
            for (std::int64_t k = 1; k * step <= depth; ++k) {
                const Weight shifted = mu + beta_wt.scaled(k);
                const Int m = mult_of(shifted);
                if (m == 0) continue;
                numerator += m * rs->form_with_root(shifted, beta);
            }
        }
        const Int denom = rs->form_with_root(lambda + mu + two_rho, *diff_rc);
        if (denom <= 0) throw Error(ErrorKind::UnsupportedType, "internal: Freudenthal denominator");
        const Int twice = 2 * numerator;
        if (twice % denom != 0) throw Error(ErrorKind::UnsupportedType, "internal: Freudenthal division");
        const Int m = twice / denom;
        if (m != 0) mult[mu] = m;
    }

    FormalCharacter out(rs);
    for (const auto& [mu, m] : mult)
        for (const auto& w : rs->weyl_orbit(mu)) out.add(w, m);

    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(key, out);
    }
    return out;
}

WeylDecomposition decompose_weyl_basis(const FormalCharacter& c) {
    const auto& rs = c.root_system();
    WeylDecomposition out{{}, FormalCharacter(rs)};
    FormalCharacter cur = c;
    while (auto lead = cur.leading_dominant_weight()) {
        const Int m = cur.multiplicity(*lead);
        out.terms.emplace_back(*lead, m);
        cur = cur - weyl_character(rs, *lead).scaled(m);
    }
    out.residual = std::move(cur);
    return out;
}

}  // namespace weylkit

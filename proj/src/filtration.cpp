#include "weylkit/filtration.hpp"

#include <functional>

namespace weylkit {

namespace {

FiltrationVerdict greedy_decompose(const FormalCharacter& c,
                                   const std::function<FormalCharacter(const Weight&)>& base) {
    if (!c.is_weyl_invariant())
        throw Error(ErrorKind::NotInvariant, "character is not Weyl-invariant");
    FiltrationVerdict out;
    FormalCharacter cur = c;
    while (auto lead = cur.leading_dominant_weight()) {
        const Int m = cur.multiplicity(*lead);
        if (m < 0) {
            out.status = FiltrationVerdict::Status::CharacterObstruction;
            out.obstruction_weight = *lead;
            out.obstruction_coefficient = m;
            out.remainder = std::move(cur);
            return out;
        }
        out.witness.emplace_back(*lead, m);
        cur = cur - base(*lead).scaled(m);
    }
    if (!cur.terms().empty())
        throw Error(ErrorKind::NotInvariant, "internal: invariant character left a remainder");
    out.status = FiltrationVerdict::Status::Decomposed;
    return out;
}

}  // namespace

FiltrationVerdict good_filtration_decompose(const FormalCharacter& c) {
    const auto rs = c.root_system();
    return greedy_decompose(c, [&rs](const Weight& lam) { return weyl_character(rs, lam); });
}

FiltrationVerdict good_pr_filtration_decompose(const FormalCharacter& c, std::int64_t p, int r,
                                               const DecompositionTable& table) {
    if (c.root_system()->cache_key() != table.root_system()->cache_key())
        throw Error(ErrorKind::MixedRootSystem,
                    "character and decomposition table use different root systems");
    return greedy_decompose(
        c, [&](const Weight& lam) { return pr_standard_character(lam, p, r, table); });
}

FiltrationVerdict head_obstruction_check(const Weight& nu, const Weight& sigma, std::int64_t p,
                                         int r, const DecompositionTable& table,
                                         const FactRegistry& registry) {
    const auto& rs = table.root_system();
    if (!rs->is_dominant(nu))
        throw Error(ErrorKind::NotDominant, nu.to_string() + " is not dominant");
    if (!rs->is_dominant(sigma))
        throw Error(ErrorKind::NotDominant, sigma.to_string() + " is not dominant");
    if (p != table.p())
        throw Error(ErrorKind::InvalidTable,
                    "decomposition table is for p = " + std::to_string(table.p()));
    const std::int64_t q = checked_prime_power(p, r);

    FiltrationVerdict out;
    const RootVector& alpha0 = rs->highest_short_root();
    const Int pairing_bound = rs->coroot_pairing(nu, alpha0);
    bool some_candidate_matches = false;

    for (const auto& kappa : dominant_weights_below(*rs, nu)) {
        std::vector<std::int64_t> coords;
        coords.reserve(kappa.size());
        bool divisible = true;
        for (std::size_t i = 0; i < kappa.size(); ++i) {
            if (kappa[i] % q != 0) {
                divisible = false;
                break;
            }
            coords.push_back(kappa[i] / q);
        }
        if (!divisible) continue;
        const Weight mu(std::move(coords));
        if (q * rs->coroot_pairing(mu, alpha0) > pairing_bound)
            throw Error(ErrorKind::InconsistentFacts,
                        "internal: candidate " + mu.to_string() +
                            " violates the short-coroot bound");

        const auto subject = ModuleExpr::atom(ModuleExpr::Kind::Costandard, mu);
        const Fact* fact = registry.find(FactKind::Head, *subject);
        if (fact == nullptr)
            throw Error(ErrorKind::MissingData,
                        "the head of Nabla" + mu.to_string() + " is not registered");

        HeadEvidence evidence;
        evidence.candidate = mu;
        for (const auto& summand : fact->summands) {
            evidence.head.push_back(summand.text);
            const auto hw = simple_module_weight(*summand.expr, *rs, p);
            if (hw.has_value() && *hw == sigma) evidence.contains_target = true;
        }
        if (evidence.contains_target) some_candidate_matches = true;
        out.candidates.push_back(std::move(evidence));
    }

    out.status = some_candidate_matches ? FiltrationVerdict::Status::Inconclusive
                                        : FiltrationVerdict::Status::HeadObstruction;
    return out;
}

std::vector<std::pair<Weight, int>> steinberg_block_factors(
    const std::vector<std::pair<Weight, int>>& factors, const RootSystem& rs, std::int64_t p,
    int r) {
    const std::int64_t q = checked_prime_power(p, r);
    const Weight st_weight = rs.rho().scaled(q - 1);
    std::vector<std::pair<Weight, int>> kept;
    for (const auto& [w, twist] : factors) {
        if (twist < 0) throw Error(ErrorKind::BadTwist, "twist degree must be nonnegative");
        const std::int64_t scale = twist == 0 ? 1 : checked_prime_power(p, twist);
        const Weight full = w.scaled(scale);
        const auto [restricted, rest] = steinberg_factorize(rs, full, p, r);
        (void)rest;
        if (restricted == st_weight) kept.emplace_back(w, twist);
    }
    return kept;
}

}  // namespace weylkit

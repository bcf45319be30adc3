#include "weylkit/modular.hpp"

#include "weylkit/weyl.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

namespace weylkit {

namespace {

using nlohmann::json;

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

std::string weight_args(const Weight& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out + ")";
}

void append_entry_dump(std::string& dump, const Weight& lam, const TableEntry& e) {
    dump += '|';
    dump += weight_args(lam);
    dump += "=>";
    for (const auto& [mu, m] : e.factors) {
        dump += weight_args(mu);
        dump += 'x';
        dump += m.str();
        dump += ',';
    }
    dump += ';';
    dump += e.provenance;
}

// Shared row validation: diagonal multiplicity 1, every other weight dominant
// and strictly below lambda.
void validate_row(const RootSystem& rs, const Weight& lam, const TableEntry& e, const char* what) {
    if (lam.size() != static_cast<std::size_t>(rs.rank()))
        throw Error(ErrorKind::InvalidTable, std::string(what) + " row " + lam.to_string() + ": wrong rank");
    if (!rs.is_dominant(lam))
        throw Error(ErrorKind::InvalidTable, std::string(what) + " row " + lam.to_string() + ": weight not dominant");
    bool saw_diagonal = false;
    std::set<Weight> seen;
    for (const auto& [mu, m] : e.factors) {
        if (mu.size() != static_cast<std::size_t>(rs.rank()))
            throw Error(ErrorKind::InvalidTable, std::string(what) + " row " + lam.to_string() + ": wrong rank");
        if (!seen.insert(mu).second)
            throw Error(ErrorKind::InvalidTable,
                        std::string(what) + " row " + lam.to_string() + ": duplicate weight " + mu.to_string());
        if (m < 1)
            throw Error(ErrorKind::InvalidTable,
                        std::string(what) + " row " + lam.to_string() + ": multiplicity of " + mu.to_string() +
                            " must be positive");
        if (mu == lam) {
            if (m != 1)
                throw Error(ErrorKind::InvalidTable, std::string(what) + " row " + lam.to_string() +
                                                         ": diagonal multiplicity must be 1, got " + m.str());
            saw_diagonal = true;
            continue;
        }
        if (!rs.is_dominant(mu))
            throw Error(ErrorKind::InvalidTable,
                        std::string(what) + " row " + lam.to_string() + ": factor " + mu.to_string() + " not dominant");
        if (!rs.dominance_leq(mu, lam))
            throw Error(ErrorKind::InvalidTable, std::string(what) + " row " + lam.to_string() + ": factor " +
                                                     mu.to_string() + " is not below " + lam.to_string());
    }
    if (!saw_diagonal)
        throw Error(ErrorKind::InvalidTable,
                    std::string(what) + " row " + lam.to_string() + ": missing diagonal entry");
}

}  // namespace

DecompositionTable::DecompositionTable(RootSystemPtr rs, std::int64_t p,
                                       std::vector<std::pair<Weight, TableEntry>> rows)
    : rs_(std::move(rs)), p_(p) {
    if (!is_prime(p_))
        throw Error(ErrorKind::InvalidTable, "p = " + std::to_string(p_) + " is not prime");
    for (auto& [lam, entry] : rows) {
        validate_row(*rs_, lam, entry, "decomposition");
        if (!entries_.emplace(lam, std::move(entry)).second)
            throw Error(ErrorKind::InvalidTable, "duplicate decomposition row " + lam.to_string());
    }
    for (const auto& [lam, entry] : entries_)
        for (const auto& [mu, m] : entry.factors)
            if (entries_.count(mu) == 0)
                throw Error(ErrorKind::InvalidTable, "row " + lam.to_string() + " references " + mu.to_string() +
                                                         " which has no row of its own");
    std::string dump = rs_->cache_key() + "#p=" + std::to_string(p_);
    for (const auto& [lam, entry] : entries_) append_entry_dump(dump, lam, entry);
    fingerprint_ = fnv1a(dump);
}

const TableEntry& DecompositionTable::entry(const Weight& lam) const {
    auto it = entries_.find(lam);
    if (it == entries_.end())
        throw Error(ErrorKind::MissingData, "no decomposition row for " + lam.to_string());
    return it->second;
}

TiltingTable::TiltingTable(RootSystemPtr rs, std::vector<std::pair<Weight, TableEntry>> rows)
    : rs_(std::move(rs)) {
    for (auto& [lam, entry] : rows) {
        validate_row(*rs_, lam, entry, "tilting");
        if (!entries_.emplace(lam, std::move(entry)).second)
            throw Error(ErrorKind::InvalidTable, "duplicate tilting row " + lam.to_string());
    }
    std::string dump = rs_->cache_key() + "#tilting";
    for (const auto& [lam, entry] : entries_) append_entry_dump(dump, lam, entry);
    fingerprint_ = fnv1a(dump);
}

const TableEntry& TiltingTable::entry(const Weight& lam) const {
    auto it = entries_.find(lam);
    if (it == entries_.end())
        throw Error(ErrorKind::MissingData, "no tilting data for " + lam.to_string());
    return it->second;
}

const char* fact_kind_name(FactKind kind) {
    switch (kind) {
        case FactKind::Head: return "head";
        case FactKind::Socle: return "socle";
        case FactKind::RadicalLayer: return "radical_layer";
        case FactKind::Ext1Dim: return "ext1_dim";
        case FactKind::HomDim: return "hom_dim";
        case FactKind::Iso: return "iso";
        case FactKind::SocleSeriesG1: return "socle_series_G1";
    }
    return "unknown";
}

FactRegistry::FactRegistry(std::vector<Fact> facts) : facts_(std::move(facts)) {
    std::string dump;
    for (const auto& f : facts_) {
        if (f.citation.empty())
            throw Error(ErrorKind::InvalidRegistry,
                        std::string(fact_kind_name(f.kind)) + " fact for " + f.subject_text + " has no citation");
        dump += fact_kind_name(f.kind);
        dump += '|';
        dump += f.subject_text;
        dump += '|';
        dump += std::to_string(f.layer);
        dump += '|';
        dump += f.other_text;
        dump += '|';
        dump += f.dim.str();
        dump += '|';
        dump += f.g_structure;
        dump += '|';
        for (const auto& s : f.summands) {
            dump += s.text;
            dump += 'x';
            dump += s.mult.str();
            dump += ',';
        }
        dump += '|';
        for (const auto& [w, m] : f.pims) {
            dump += weight_args(w);
            dump += 'x';
            dump += m.str();
            dump += ',';
        }
        dump += '|';
        dump += f.citation;
        dump += '\n';
    }
    fingerprint_ = fnv1a(dump);
}

std::vector<const Fact*> FactRegistry::all_of(FactKind kind) const {
    std::vector<const Fact*> out;
    for (const auto& f : facts_)
        if (f.kind == kind) out.push_back(&f);
    return out;
}

const Fact* FactRegistry::find(FactKind kind, const ModuleExpr& subject) const {
    const std::string text = to_string(subject);
    for (const auto& f : facts_)
        if (f.kind == kind && f.subject_text == text) return &f;
    return nullptr;
}

const Fact* FactRegistry::find_pair(FactKind kind, const ModuleExpr& subject, const ModuleExpr& other) const {
    const std::string subject_text = to_string(subject);
    const std::string other_text = to_string(other);
    for (const auto& f : facts_)
        if (f.kind == kind && f.subject_text == subject_text && f.other_text == other_text) return &f;
    return nullptr;
}

std::pair<Weight, Weight> steinberg_factorize(const RootSystem& rs, const Weight& lam,
                                              std::int64_t p, int r) {
    if (lam.size() != static_cast<std::size_t>(rs.rank()))
        throw Error(ErrorKind::MixedRootSystem, "weight has rank " + std::to_string(lam.size()));
    if (!rs.is_dominant(lam))
        throw Error(ErrorKind::NotDominant, lam.to_string() + " is not dominant");
    const std::int64_t q = checked_prime_power(p, r);
    std::vector<std::int64_t> low(lam.size()), high(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i) {
        low[i] = lam[i] % q;
        high[i] = lam[i] / q;
    }
    return {Weight(std::move(low)), Weight(std::move(high))};
}

namespace {

Weight steinberg_weight(const RootSystem& rs, std::int64_t p) {
    return rs.rho().scaled(p - 1);
}

}  // namespace

FormalCharacter simple_character(const Weight& lam, std::int64_t p, const DecompositionTable& table) {
    if (p != table.p())
        throw Error(ErrorKind::InvalidTable,
                    "table holds p = " + std::to_string(table.p()) + ", not " + std::to_string(p));
    const RootSystemPtr& rs = table.root_system();
    if (lam.size() != static_cast<std::size_t>(rs->rank()))
        throw Error(ErrorKind::MixedRootSystem, "weight has rank " + std::to_string(lam.size()));
    if (!rs->is_dominant(lam))
        throw Error(ErrorKind::NotDominant, lam.to_string() + " is not dominant");

    static std::mutex cache_mutex;
    static std::map<std::pair<std::uint64_t, Weight>, FormalCharacter> cache;
    const std::pair<std::uint64_t, Weight> key{table.fingerprint(), lam};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    bool restricted = true;
    for (std::size_t i = 0; i < lam.size(); ++i)
        if (lam[i] >= p) restricted = false;

    FormalCharacter ch(rs);
    if (restricted) {
        const TableEntry& entry = table.entry(lam);
        ch = weyl_character(rs, lam);
        for (const auto& [mu, m] : entry.factors)
            if (mu != lam) ch = ch - simple_character(mu, p, table).scaled(m);
    } else {
        const auto [low, high] = steinberg_factorize(*rs, lam, p, 1);
        ch = simple_character(low, p, table) * frobenius_twist(simple_character(high, p, table), p);
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(ch)).first->second;
}

FormalCharacter pr_standard_character(const Weight& lam, std::int64_t p, int r,
                                      const DecompositionTable& table) {
    const RootSystemPtr& rs = table.root_system();
    const auto [low, high] = steinberg_factorize(*rs, lam, p, r);
    const std::int64_t q = checked_prime_power(p, r);
    return simple_character(low, p, table) * frobenius_twist(weyl_character(rs, high), q);
}

FormalCharacter tilting_character(const Weight& lam, const TiltingTable& table) {
    const TableEntry& entry = table.entry(lam);
    const RootSystemPtr& rs = table.root_system();
    FormalCharacter ch(rs);
    for (const auto& [mu, m] : entry.factors) ch = ch + weyl_character(rs, mu).scaled(m);
    return ch;
}

namespace {

// Character evaluation against explicit data sources; null tilting/pims make
// the corresponding atoms unavailable (used while a dataset is being built).
FormalCharacter eval_expr(const RootSystemPtr& rs, std::int64_t p, const DecompositionTable& table,
                          const TiltingTable* tilting, const PimSolution* pims, const ModuleExpr& e) {
    using Kind = ModuleExpr::Kind;
    switch (e.kind) {
        case Kind::Trivial:
            return FormalCharacter::monomial(rs, Weight(std::vector<std::int64_t>(rs->rank(), 0)));
        case Kind::Steinberg:
            return simple_character(steinberg_weight(*rs, p), p, table);
        case Kind::Simple:
            return simple_character(e.weight, p, table);
        case Kind::Costandard:
        case Kind::Standard:
        case Kind::WeylChar:
            return weyl_character(rs, e.weight);
        case Kind::Tilting:
            if (!tilting) throw Error(ErrorKind::MissingData, "no tilting data in this context");
            return tilting_character(e.weight, *tilting);
        case Kind::Pim: {
            if (!pims) throw Error(ErrorKind::MissingData, "no projective data in this context");
            auto it = pims->characters.find(e.weight);
            if (it == pims->characters.end()) {
                if (pims->status == LinearSolution::Status::Inconsistent)
                    throw Error(ErrorKind::InconsistentFacts, pims->detail);
                throw Error(ErrorKind::MissingData, "Q1" + weight_args(e.weight) +
                                                        " is not determined by the registered identities");
            }
            return it->second;
        }
        case Kind::Tensor:
            return eval_expr(rs, p, table, tilting, pims, *e.lhs) *
                   eval_expr(rs, p, table, tilting, pims, *e.rhs);
        case Kind::Twist: {
            std::int64_t q = 1;
            for (int k = 0; k < e.twist_power; ++k) {
                q *= p;
                if (q > (1 << 30)) throw Error(ErrorKind::BadTwist, "twist exceeds supported range");
            }
            return frobenius_twist(eval_expr(rs, p, table, tilting, pims, *e.lhs), q);
        }
        case Kind::Sum:
            return eval_expr(rs, p, table, tilting, pims, *e.lhs) +
                   eval_expr(rs, p, table, tilting, pims, *e.rhs);
        case Kind::Scalar:
            return eval_expr(rs, p, table, tilting, pims, *e.lhs).scaled(e.scalar);
        case Kind::Dual:
            return dual_character(eval_expr(rs, p, table, tilting, pims, *e.lhs));
    }
    throw Error(ErrorKind::UnsupportedType, "unhandled expression node");
}

}  // namespace

PimSolution solve_pim_characters(const DecompositionTable& table, const FactRegistry& registry) {
    const RootSystemPtr& rs = table.root_system();
    const std::int64_t p = table.p();
    const std::vector<Weight> unknowns = rs->restricted_weights(p, 1);
    std::map<Weight, std::size_t> column;
    for (std::size_t i = 0; i < unknowns.size(); ++i) column[unknowns[i]] = i;

    // Equations: iso facts with tensor subjects; tilting subjects are
    // identifications consumed after the solve, not constraints on it.
    std::vector<std::vector<Rational>> m;
    std::vector<FormalCharacter> rhs;
    for (const Fact* f : registry.all_of(FactKind::Iso)) {
        if (f->subject->kind == ModuleExpr::Kind::Tilting) continue;
        std::vector<Rational> row(unknowns.size(), Rational(0));
        for (const auto& [w, mult] : f->pims) {
            auto it = column.find(w);
            if (it == column.end())
                throw Error(ErrorKind::InvalidRegistry,
                            "iso fact for " + f->subject_text + " names the non-restricted projective Q1" +
                                weight_args(w));
            row[it->second] += Rational(mult);
        }
        m.push_back(std::move(row));
        rhs.push_back(eval_expr(rs, p, table, nullptr, nullptr, *f->subject));
    }

    const std::size_t rows = m.size();
    const std::size_t cols = unknowns.size();

    // Row-reduce while tracking the operations, so each pivot row ends up
    // expressed as an explicit rational combination of the input identities.
    std::vector<std::vector<Rational>> ops(rows, std::vector<Rational>(rows, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i) ops[i][i] = 1;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        std::swap(ops[pivot], ops[rank]);
        const Rational inv = m[rank][col];
        for (auto& x : m[rank]) x /= inv;
        for (auto& x : ops[rank]) x /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            const Rational factor = m[i][col];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= factor * m[rank][j];
            for (std::size_t j = 0; j < rows; ++j) ops[i][j] -= factor * ops[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    auto combine = [&](const std::vector<Rational>& coeffs) {
        std::map<Weight, Rational> acc;
        for (std::size_t j = 0; j < rows; ++j) {
            if (coeffs[j] == 0) continue;
            for (const auto& [w, mult] : rhs[j].terms()) {
                auto& slot = acc[w];
                slot += coeffs[j] * Rational(mult);
                if (slot == 0) acc.erase(w);
            }
        }
        return acc;
    };

    PimSolution out;
    for (std::size_t i = rank; i < rows; ++i) {
        if (!combine(ops[i]).empty()) {
            out.status = LinearSolution::Status::Inconsistent;
            out.detail = "the registered projective identities contradict each other";
            return out;
        }
    }

    for (std::size_t i = 0; i < rank; ++i) {
        bool determined = true;
        for (std::size_t j = 0; j < cols; ++j)
            if (j != pivot_col[i] && m[i][j] != 0) determined = false;
        if (!determined) continue;
        const auto acc = combine(ops[i]);
        FormalCharacter ch(rs);
        for (const auto& [w, x] : acc) {
            if (!is_integral(x)) {
                out.status = LinearSolution::Status::Inconsistent;
                out.detail = "projective identities force a fractional character";
                out.characters.clear();
                return out;
            }
            ch.add(w, rational_to_int(x));
        }
        out.characters.emplace(unknowns[pivot_col[i]], std::move(ch));
    }

    if (out.characters.size() == cols) {
        out.status = LinearSolution::Status::Unique;
    } else {
        out.status = LinearSolution::Status::Underdetermined;
        std::string missing;
        for (const auto& w : unknowns)
            if (out.characters.count(w) == 0) missing += " Q1" + weight_args(w);
        out.detail = "the registered identities do not determine" + missing;
    }
    return out;
}

std::map<Weight, Int> pim_dimensions(std::int64_t p, const DecompositionTable& table,
                                     const FactRegistry& registry) {
    if (p != table.p())
        throw Error(ErrorKind::InvalidTable,
                    "table holds p = " + std::to_string(table.p()) + ", not " + std::to_string(p));
    const PimSolution sol = solve_pim_characters(table, registry);
    if (sol.status != LinearSolution::Status::Unique)
        throw Error(ErrorKind::InconsistentFacts, sol.detail);
    std::map<Weight, Int> out;
    for (const auto& [w, ch] : sol.characters) out.emplace(w, ch.dimension());
    return out;
}

FormalCharacter evaluate_character(const Dataset& data, const ModuleExpr& expr) {
    return eval_expr(data.rs, data.p, data.decomposition, &data.tilting, &data.pims, expr);
}

FormalCharacter evaluate_character(const Dataset& data, std::string_view text) {
    return evaluate_character(data, *parse_module_expression(text));
}

std::optional<Weight> simple_module_weight(const ModuleExpr& expr, const RootSystem& rs, std::int64_t p) {
    using Kind = ModuleExpr::Kind;
    const auto rank_ok = [&](const Weight& w) { return w.size() == static_cast<std::size_t>(rs.rank()); };
    switch (expr.kind) {
        case Kind::Trivial:
            return Weight(std::vector<std::int64_t>(rs.rank(), 0));
        case Kind::Steinberg:
            return steinberg_weight(rs, p);
        case Kind::Simple:
            if (!rank_ok(expr.weight) || !rs.is_dominant(expr.weight)) return std::nullopt;
            return expr.weight;
        case Kind::Twist: {
            auto inner = simple_module_weight(*expr.lhs, rs, p);
            if (!inner) return std::nullopt;
            std::int64_t q = 1;
            for (int k = 0; k < expr.twist_power; ++k) {
                q *= p;
                if (q > (1 << 30)) return std::nullopt;
            }
            return inner->scaled(q);
        }
        case Kind::Tensor: {
            auto a = simple_module_weight(*expr.lhs, rs, p);
            auto b = simple_module_weight(*expr.rhs, rs, p);
            if (!a || !b) return std::nullopt;
            return *a + *b;
        }
        case Kind::Dual: {
            auto inner = simple_module_weight(*expr.lhs, rs, p);
            if (!inner) return std::nullopt;
            return -rs.w0_action(*inner);
        }
        default:
            return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// Dataset loading
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void bad_data(const std::string& message) {
    throw Error(ErrorKind::DataFormat, message);
}

void require_keys(const json& j, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional, const char* where) {
    if (!j.is_object()) bad_data(std::string(where) + ": expected an object");
    for (const char* key : required)
        if (!j.contains(key)) bad_data(std::string(where) + ": missing key '" + key + "'");
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* k : required)
            if (key == k) known = true;
        for (const char* k : optional)
            if (key == k) known = true;
        if (!known) bad_data(std::string(where) + ": unknown key '" + key + "'");
    }
}

std::int64_t get_int(const json& j, const char* where) {
    if (!j.is_number_integer()) bad_data(std::string(where) + ": expected an integer");
    return j.get<std::int64_t>();
}

std::string get_string(const json& j, const char* where) {
    if (!j.is_string()) bad_data(std::string(where) + ": expected a string");
    return j.get<std::string>();
}

Weight get_weight(const json& j, int rank, const char* where) {
    if (!j.is_array() || j.size() != static_cast<std::size_t>(rank))
        bad_data(std::string(where) + ": expected a weight with " + std::to_string(rank) + " coordinates");
    std::vector<std::int64_t> coords;
    coords.reserve(j.size());
    for (const auto& x : j) coords.push_back(get_int(x, where));
    return Weight(std::move(coords));
}

std::vector<std::pair<Weight, Int>> get_factor_list(const json& j, int rank, const char* where) {
    if (!j.is_array()) bad_data(std::string(where) + ": expected an array of [weight, multiplicity] pairs");
    std::vector<std::pair<Weight, Int>> out;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2)
            bad_data(std::string(where) + ": expected [weight, multiplicity]");
        Weight w = get_weight(item[0], rank, where);
        const std::int64_t m = get_int(item[1], where);
        if (m < 1) bad_data(std::string(where) + ": multiplicity must be positive");
        out.emplace_back(std::move(w), Int(m));
    }
    return out;
}

ModuleExprPtr parse_expr_checked(const std::string& text, const char* where) {
    try {
        return parse_module_expression(text);
    } catch (const Error& e) {
        bad_data(std::string(where) + ": '" + text + "': " + e.what());
    }
}

std::pair<Weight, TableEntry> parse_table_row(const json& j, int rank, const char* where) {
    require_keys(j, {"lambda", "factors", "provenance"}, {}, where);
    Weight lam = get_weight(j.at("lambda"), rank, where);
    TableEntry entry;
    entry.factors = get_factor_list(j.at("factors"), rank, where);
    entry.provenance = get_string(j.at("provenance"), where);
    return {std::move(lam), std::move(entry)};
}

FactSummand parse_summand(const std::string& text, const Int& mult, const char* where) {
    FactSummand s;
    s.expr = parse_expr_checked(text, where);
    s.text = to_string(*s.expr);
    s.mult = mult;
    return s;
}

Fact parse_fact(const json& j, int rank) {
    require_keys(j, {"kind", "subject", "payload"}, {"citation"}, "fact");
    Fact fact;
    const std::string kind = get_string(j.at("kind"), "fact kind");
    if (kind == "head") fact.kind = FactKind::Head;
    else if (kind == "socle") fact.kind = FactKind::Socle;
    else if (kind == "radical_layer") fact.kind = FactKind::RadicalLayer;
    else if (kind == "ext1_dim") fact.kind = FactKind::Ext1Dim;
    else if (kind == "hom_dim") fact.kind = FactKind::HomDim;
    else if (kind == "iso") fact.kind = FactKind::Iso;
    else if (kind == "socle_series_G1") fact.kind = FactKind::SocleSeriesG1;
    else bad_data("fact: unknown kind '" + kind + "'");

    fact.subject = parse_expr_checked(get_string(j.at("subject"), "fact subject"), "fact subject");
    fact.subject_text = to_string(*fact.subject);
    if (j.contains("citation")) fact.citation = get_string(j.at("citation"), "fact citation");

    const json& payload = j.at("payload");
    switch (fact.kind) {
        case FactKind::Head:
        case FactKind::Socle: {
            if (!payload.is_array()) bad_data("fact payload: expected an array of module expressions");
            for (const auto& item : payload)
                fact.summands.push_back(parse_summand(get_string(item, "fact payload"), 1, "fact payload"));
            break;
        }
        case FactKind::RadicalLayer: {
            require_keys(payload, {"layer", "factors"}, {}, "radical_layer payload");
            const std::int64_t layer = get_int(payload.at("layer"), "radical_layer layer");
            if (layer < 1) bad_data("radical_layer layer must be >= 1");
            fact.layer = static_cast<int>(layer);
            if (!payload.at("factors").is_array()) bad_data("radical_layer factors: expected an array");
            for (const auto& item : payload.at("factors"))
                fact.summands.push_back(
                    parse_summand(get_string(item, "radical_layer factors"), 1, "radical_layer factors"));
            break;
        }
        case FactKind::Ext1Dim:
        case FactKind::HomDim: {
            require_keys(payload, {"other", "dim"}, {"g_structure"}, "hom payload");
            fact.other = parse_expr_checked(get_string(payload.at("other"), "hom payload"), "hom payload");
            fact.other_text = to_string(*fact.other);
            const std::int64_t dim = get_int(payload.at("dim"), "hom payload dim");
            if (dim < 0) bad_data("hom payload dim must be >= 0");
            fact.dim = dim;
            if (payload.contains("g_structure"))
                fact.g_structure = get_string(payload.at("g_structure"), "hom payload g_structure");
            break;
        }
        case FactKind::Iso: {
            require_keys(payload, {"pims"}, {}, "iso payload");
            fact.pims = get_factor_list(payload.at("pims"), rank, "iso payload pims");
            break;
        }
        case FactKind::SocleSeriesG1: {
            require_keys(payload, {"summands"}, {}, "socle payload");
            if (!payload.at("summands").is_array()) bad_data("socle payload summands: expected an array");
            for (const auto& item : payload.at("summands")) {
                if (!item.is_array() || item.size() != 2)
                    bad_data("socle payload summands: expected [expression, multiplicity]");
                const std::int64_t m = get_int(item[1], "socle payload multiplicity");
                if (m < 1) bad_data("socle payload multiplicity must be positive");
                fact.summands.push_back(
                    parse_summand(get_string(item[0], "socle payload"), Int(m), "socle payload"));
            }
            break;
        }
    }
    return fact;
}

// Inserts a derived tilting row; an existing row must agree exactly.
void add_tilting_row(std::vector<std::pair<Weight, TableEntry>>& rows, const Weight& lam,
                     TableEntry entry) {
    for (const auto& [existing, e] : rows) {
        if (existing != lam) continue;
        auto a = e.factors;
        auto b = entry.factors;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            throw Error(ErrorKind::InconsistentFacts,
                        "conflicting filtrations for T" + weight_args(lam));
        return;
    }
    rows.emplace_back(lam, std::move(entry));
}

}  // namespace

Dataset load_dataset(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::DataFormat, e.what(), static_cast<std::int64_t>(e.byte));
    }
    require_keys(j, {"type", "p", "decomposition", "tilting", "facts"}, {}, "dataset");

    RootSystemPtr rs = RootSystem::named(get_string(j.at("type"), "dataset type"));
    const std::int64_t p = get_int(j.at("p"), "dataset p");
    const int rank = rs->rank();

    if (!j.at("decomposition").is_array()) bad_data("dataset decomposition: expected an array");
    std::vector<std::pair<Weight, TableEntry>> decomposition_rows;
    for (const auto& row : j.at("decomposition"))
        decomposition_rows.push_back(parse_table_row(row, rank, "decomposition"));
    DecompositionTable table(rs, p, std::move(decomposition_rows));

    if (!j.at("tilting").is_array()) bad_data("dataset tilting: expected an array");
    std::vector<std::pair<Weight, TableEntry>> tilting_rows;
    for (const auto& row : j.at("tilting")) tilting_rows.push_back(parse_table_row(row, rank, "tilting"));
    const TiltingTable registered(rs, tilting_rows);

    if (!j.at("facts").is_array()) bad_data("dataset facts: expected an array");
    std::vector<Fact> facts;
    for (const auto& f : j.at("facts")) facts.push_back(parse_fact(f, rank));
    FactRegistry registry(std::move(facts));

    PimSolution pims = solve_pim_characters(table, registry);

    // Derived tilting rows.  First: iso facts identifying a tilting module
    // with a single projective; its character is the solved one.
    std::vector<std::pair<Weight, TableEntry>> all_rows = std::move(tilting_rows);
    for (const Fact* f : registry.all_of(FactKind::Iso)) {
        if (f->subject->kind != ModuleExpr::Kind::Tilting) continue;
        if (f->pims.size() != 1 || f->pims.front().second != 1)
            throw Error(ErrorKind::InconsistentFacts,
                        "iso fact for " + f->subject_text + " must name a single projective with multiplicity 1");
        const Weight& mu = f->pims.front().first;
        const Weight lam = f->subject->weight;
        if (lam != rs->hat_weight(mu, p, 1))
            throw Error(ErrorKind::InconsistentFacts,
                        f->subject_text + " cannot restrict to Q1" + weight_args(mu) +
                            ": highest weights disagree");
        auto it = pims.characters.find(mu);
        if (it == pims.characters.end()) continue;  // solve too weak; row stays absent
        auto dec = decompose_weyl_basis(it->second);
        if (!dec.residual.empty())
            throw Error(ErrorKind::InconsistentFacts,
                        "character of Q1" + weight_args(mu) + " is not Weyl-invariant");
        add_tilting_row(all_rows, lam, TableEntry{std::move(dec.terms), f->citation});
    }

    // Second: every registered row propagates one Steinberg layer up, since
    // tensoring the Steinberg module with a twisted tilting module is again
    // an indecomposable tilting module.
    const Weight st = steinberg_weight(*rs, p);
    for (const auto& [mu, entry] : registered.entries()) {
        const Weight lam = st + mu.scaled(p);
        FormalCharacter ch =
            simple_character(st, p, table) * frobenius_twist(tilting_character(mu, registered), p);
        auto dec = decompose_weyl_basis(ch);
        const std::string provenance =
            to_string(*ModuleExpr::atom(ModuleExpr::Kind::Tilting, lam)) + " = " +
            to_string(*ModuleExpr::tensor(ModuleExpr::steinberg(),
                                          ModuleExpr::twist(ModuleExpr::atom(ModuleExpr::Kind::Tilting, mu), 1)));
        add_tilting_row(all_rows, lam, TableEntry{std::move(dec.terms), provenance});
    }

    TiltingTable tilting(rs, std::move(all_rows));

    std::ostringstream fp;
    fp << std::hex << table.fingerprint() << ':' << tilting.fingerprint() << ':' << registry.fingerprint();
    Dataset data{rs, p, std::move(table), std::move(tilting), std::move(registry), std::move(pims),
                 fnv1a(fp.str())};

    // Every module expression referenced inside a fact payload must have a
    // computable character, so dimension cross-checks are always possible.
    for (const auto& fact : data.registry.facts()) {
        try {
            for (const auto& s : fact.summands) evaluate_character(data, *s.expr);
            if (fact.other) evaluate_character(data, *fact.other);
        } catch (const Error& e) {
            throw Error(ErrorKind::InvalidRegistry, std::string(fact_kind_name(fact.kind)) + " fact for " +
                                                        fact.subject_text + ": " + e.what());
        }
    }
    return data;
}

Dataset load_dataset_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_dataset(buffer.str());
}

Dataset load_builtin_dataset() {
    return load_dataset(builtin_dataset_text());
}

}  // namespace weylkit

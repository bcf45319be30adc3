#ifndef WEYLKIT_MODULAR_HPP
#define WEYLKIT_MODULAR_HPP

#include "weylkit/character.hpp"
#include "weylkit/expression.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace weylkit {

// One table row: (mu, multiplicity) pairs, diagonal entry included, plus the
// citation that backs the row.  Decomposition numbers and structural facts are
// data with provenance, never computed here.
struct TableEntry {
    std::vector<std::pair<Weight, Int>> factors;
    std::string provenance;
};

// Composition multiplicities [Nabla(lambda) : L(mu)] at a fixed prime.
// Validated on construction: every row is unitriangular (diagonal multiplicity
// exactly 1, every other mu strictly below lambda in dominance) and closed
// (every mu has a row of its own), so the inversion producing simple
// characters is well-founded.
class DecompositionTable {
public:
    DecompositionTable(RootSystemPtr rs, std::int64_t p,
                       std::vector<std::pair<Weight, TableEntry>> rows);

    const RootSystemPtr& root_system() const { return rs_; }
    std::int64_t p() const { return p_; }
    bool contains(const Weight& lam) const { return entries_.count(lam) != 0; }
    const TableEntry& entry(const Weight& lam) const;  // MissingData if absent
    const std::map<Weight, TableEntry>& entries() const { return entries_; }
    // Hash of the table content; keys the simple-character memo cache.
    std::uint64_t fingerprint() const { return fingerprint_; }

private:
    RootSystemPtr rs_;
    std::int64_t p_ = 0;
    std::map<Weight, TableEntry> entries_;
    std::uint64_t fingerprint_ = 0;
};

// Delta-filtration multiplicities of registered indecomposable tilting
// modules: row lambda holds the multiset {(mu, [T(lambda) : Delta(mu)])}.
// Same diagonal/dominance validation as the decomposition table.
class TiltingTable {
public:
    TiltingTable(RootSystemPtr rs, std::vector<std::pair<Weight, TableEntry>> rows);

    const RootSystemPtr& root_system() const { return rs_; }
    bool contains(const Weight& lam) const { return entries_.count(lam) != 0; }
    const TableEntry& entry(const Weight& lam) const;  // MissingData if absent
    const std::map<Weight, TableEntry>& entries() const { return entries_; }
    std::uint64_t fingerprint() const { return fingerprint_; }

private:
    RootSystemPtr rs_;
    std::map<Weight, TableEntry> entries_;
    std::uint64_t fingerprint_ = 0;
};

enum class FactKind {
    Head,          // head(subject) = multiset of simples
    Socle,         // soc(subject) = multiset of simples
    RadicalLayer,  // rad^{i-1}(subject)/rad^i(subject) = multiset of simples
    Ext1Dim,       // dim Ext^1 over the first Frobenius kernel
    HomDim,        // dim Hom over the ambient group
    Iso,           // subject decomposes into the listed projectives
    SocleSeriesG1, // socle of subject over the first Frobenius kernel
};

const char* fact_kind_name(FactKind kind);

// One module expression appearing in a fact payload, with multiplicity.
struct FactSummand {
    std::string text;  // canonical form
    ModuleExprPtr expr;
    Int mult;
};

// A single structural fact.  Which payload fields are meaningful depends on
// the kind; unused fields stay empty.
struct Fact {
    FactKind kind;
    std::string subject_text;  // canonical form
    ModuleExprPtr subject;
    std::string citation;

    std::vector<FactSummand> summands;          // Head/Socle/RadicalLayer/SocleSeriesG1
    int layer = 0;                              // RadicalLayer: 1 = head
    std::string other_text;                     // Ext1Dim/HomDim second argument
    ModuleExprPtr other;
    Int dim;                                    // Ext1Dim/HomDim value
    std::string g_structure;                    // opaque label, not interpreted
    std::vector<std::pair<Weight, Int>> pims;   // Iso right-hand side
};

// The list of structural facts consumed by the verifier.  Construction
// enforces that every fact carries a nonempty citation.
class FactRegistry {
public:
    explicit FactRegistry(std::vector<Fact> facts);

    const std::vector<Fact>& facts() const { return facts_; }
    std::vector<const Fact*> all_of(FactKind kind) const;
    // First fact with this kind and subject, or null.
    const Fact* find(FactKind kind, const ModuleExpr& subject) const;
    // For the two-argument kinds: also match the second argument.
    const Fact* find_pair(FactKind kind, const ModuleExpr& subject, const ModuleExpr& other) const;
    std::uint64_t fingerprint() const { return fingerprint_; }

private:
    std::vector<Fact> facts_;
    std::uint64_t fingerprint_ = 0;
};

// Result of solving the projective-decomposition identities for the
// characters of the projective indecomposables over the first Frobenius
// kernel.  `characters` holds every pim the system pins down even when the
// full system is underdetermined.
struct PimSolution {
    LinearSolution::Status status = LinearSolution::Status::Underdetermined;
    std::map<Weight, FormalCharacter> characters;
    std::string detail;  // reason when status != Unique
};

// Everything loaded from one dataset: tables, facts, and the derived values
// that only depend on them.  Immutable after load.
struct Dataset {
    RootSystemPtr rs;
    std::int64_t p = 0;
    DecompositionTable decomposition;
    TiltingTable tilting;  // registered rows plus derived rows (see load_dataset)
    FactRegistry registry;
    PimSolution pims;
    std::uint64_t fingerprint = 0;
};

// lam = lam0 + p^r * lam1 with lam0 coordinate-wise in [0, p^r) and lam1
// dominant; the unique splitting realizing the tensor-product factorization
// of simples.
std::pair<Weight, Weight> steinberg_factorize(const RootSystem& rs, const Weight& lam,
                                              std::int64_t p, int r);

// ch L(lam).  Restricted weights invert the decomposition table
// (ch L = chi(lam) - sum of lower simples); general dominant weights multiply
// the twisted characters of their p-adic digits.  Memoized per table.
FormalCharacter simple_character(const Weight& lam, std::int64_t p, const DecompositionTable& table);

// ch of the (p,r)-standard module: ch L(lam0) * twist(chi(lam1), p^r).
FormalCharacter pr_standard_character(const Weight& lam, std::int64_t p, int r,
                                      const DecompositionTable& table);

// Sum of Weyl characters per the registered Delta-filtration of T(lam).
FormalCharacter tilting_character(const Weight& lam, const TiltingTable& table);

// Solves the projective-decomposition identities registered as Iso facts with
// tensor subjects for the pim characters.  Never throws on rank defects; the
// status reports them.
PimSolution solve_pim_characters(const DecompositionTable& table, const FactRegistry& registry);

// Dimensions of all projective indecomposables, from a uniquely solvable
// system; otherwise InconsistentFacts.
std::map<Weight, Int> pim_dimensions(std::int64_t p, const DecompositionTable& table,
                                     const FactRegistry& registry);

// Character of an arbitrary module expression against a dataset.
FormalCharacter evaluate_character(const Dataset& data, const ModuleExpr& expr);
FormalCharacter evaluate_character(const Dataset& data, std::string_view text);

// Highest weight of an expression built from simple atoms, twists, duals and
// tensor products (read through the tensor-product factorization of simples),
// or nullopt if the expression contains anything else.  This is how fact
// payloads listing simple factors are compared.
std::optional<Weight> simple_module_weight(const ModuleExpr& expr, const RootSystem& rs, std::int64_t p);

// The dataset compiled into the library, serialized in the same JSON format
// accepted from files.
const char* builtin_dataset_text();

Dataset load_dataset(const std::string& json_text);
Dataset load_dataset_file(const std::string& path);
Dataset load_builtin_dataset();

}  // namespace weylkit

#endif

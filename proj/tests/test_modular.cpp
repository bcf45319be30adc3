#include "weylkit/modular.hpp"

#include "weylkit/weyl.hpp"

#include "helpers.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <random>

using namespace weylkit;
using nlohmann::json;

namespace {

std::map<Weight, Int> as_map(const std::vector<std::pair<Weight, Int>>& terms) {
    return std::map<Weight, Int>(terms.begin(), terms.end());
}

json builtin_json() {
    return json::parse(builtin_dataset_text());
}

// Index of the first fact with this kind and subject, or -1.
int find_fact(const json& j, const std::string& kind, const std::string& subject) {
    const auto& facts = j.at("facts");
    for (std::size_t i = 0; i < facts.size(); ++i)
        if (facts[i].at("kind") == kind && facts[i].at("subject") == subject) return static_cast<int>(i);
    return -1;
}

}  // namespace

TEST_CASE("steinberg factorization") {
    auto g2 = RootSystem::named("G2");
    using P = std::pair<Weight, Weight>;
    CHECK(steinberg_factorize(*g2, Weight{3, 1}, 2, 1) == P{Weight{1, 1}, Weight{1, 0}});
    CHECK(steinberg_factorize(*g2, Weight{1, 1}, 2, 1) == P{Weight{1, 1}, Weight{0, 0}});
    CHECK(steinberg_factorize(*g2, Weight{2, 0}, 2, 1) == P{Weight{0, 0}, Weight{1, 0}});
    CHECK(steinberg_factorize(*g2, Weight{5, 3}, 2, 2) == P{Weight{1, 3}, Weight{1, 0}});
    CHECK(steinberg_factorize(*g2, Weight{7, 2}, 3, 1) == P{Weight{1, 2}, Weight{2, 0}});

    // Recombination is the identity on a grid.
    for (std::int64_t a = 0; a <= 8; ++a)
        for (std::int64_t b = 0; b <= 8; ++b) {
            const Weight lam{a, b};
            const auto [low, high] = steinberg_factorize(*g2, lam, 2, 1);
            CHECK(low + high.scaled(2) == lam);
            CHECK(g2->is_dominant(low));
            CHECK(g2->is_dominant(high));
        }

    CHECK_ERROR_KIND(steinberg_factorize(*g2, Weight{-1, 0}, 2, 1), ErrorKind::NotDominant);
    CHECK_ERROR_KIND(steinberg_factorize(*g2, Weight{1, 0}, 6, 1), ErrorKind::NotRestricted);
}

TEST_CASE("builtin dataset tables") {
    const Dataset data = load_builtin_dataset();
    CHECK(data.p == 2);
    CHECK(data.rs->label() == "G2");

    const auto& table = data.decomposition;
    CHECK(table.entries().size() == 4);
    CHECK(as_map(table.entry(Weight{1, 0}).factors) ==
          std::map<Weight, Int>{{Weight{1, 0}, 1}, {Weight{0, 0}, 1}});
    CHECK(as_map(table.entry(Weight{0, 1}).factors) == std::map<Weight, Int>{{Weight{0, 1}, 1}});
    CHECK(as_map(table.entry(Weight{1, 1}).factors) == std::map<Weight, Int>{{Weight{1, 1}, 1}});
    CHECK_ERROR_KIND(table.entry(Weight{2, 0}), ErrorKind::MissingData);

    // Identical bytes, identical dataset.
    const Dataset again = load_dataset(builtin_dataset_text());
    CHECK(again.fingerprint == data.fingerprint);
    CHECK(again.decomposition.fingerprint() == table.fingerprint());
}

TEST_CASE("simple characters") {
    const Dataset data = load_builtin_dataset();
    auto g2 = data.rs;
    const auto& table = data.decomposition;

    CHECK(simple_character(Weight{0, 0}, 2, table).dimension() == 1);
    CHECK(simple_character(Weight{1, 0}, 2, table).dimension() == 6);
    CHECK(simple_character(Weight{0, 1}, 2, table).dimension() == 14);
    CHECK(simple_character(Weight{1, 1}, 2, table).dimension() == 64);
    CHECK(simple_character(Weight{1, 1}, 2, table) == weyl_character(g2, Weight{1, 1}));

    // The 6-dimensional simple is the 7-dimensional Weyl character minus the
    // trivial one: six short-root weights, no zero weight.
    const auto l10 = simple_character(Weight{1, 0}, 2, table);
    CHECK(l10 == weyl_character(g2, Weight{1, 0}) - weyl_character(g2, Weight{0, 0}));
    CHECK(l10.multiplicity(Weight{0, 0}) == 0);
    CHECK(l10.multiplicity(Weight{1, 0}) == 1);

    // Tensor-product factorization handles non-restricted weights.
    CHECK(simple_character(Weight{2, 0}, 2, table).dimension() == 6);
    CHECK(simple_character(Weight{3, 1}, 2, table).dimension() == 384);
    CHECK(simple_character(Weight{3, 1}, 2, table) ==
          simple_character(Weight{1, 1}, 2, table) * frobenius_twist(l10, 2));

    // Output contract on a grid: effective, Weyl-invariant, highest weight 1.
    for (std::int64_t a = 0; a <= 3; ++a)
        for (std::int64_t b = 0; b <= 3; ++b) {
            const Weight lam{a, b};
            const auto ch = simple_character(lam, 2, table);
            CHECK(ch.is_effective());
            CHECK(ch.is_weyl_invariant());
            CHECK(ch.multiplicity(lam) == 1);
            CHECK(ch.leading_dominant_weight() == lam);
        }

    CHECK_ERROR_KIND(simple_character(Weight{-1, 0}, 2, table), ErrorKind::NotDominant);
    CHECK_ERROR_KIND(simple_character(Weight{0, 0}, 3, table), ErrorKind::InvalidTable);
}

TEST_CASE("steinberg coherence on random weights") {
    const Dataset data = load_builtin_dataset();
    const auto& table = data.decomposition;
    std::mt19937 rng(20240818);
    std::uniform_int_distribution<std::int64_t> coord(0, 6);
    for (int trial = 0; trial < 20; ++trial) {
        const Weight lam{coord(rng), coord(rng)};
        const auto [low, high] = steinberg_factorize(*data.rs, lam, 2, 1);
        CHECK(simple_character(lam, 2, table) ==
              simple_character(low, 2, table) * frobenius_twist(simple_character(high, 2, table), 2));
    }
}

TEST_CASE("missing decomposition rows") {
    auto g2 = RootSystem::named("G2");
    const DecompositionTable partial(
        g2, 2,
        {{Weight{0, 0}, TableEntry{{{Weight{0, 0}, 1}}, "row"}},
         {Weight{1, 0}, TableEntry{{{Weight{1, 0}, 1}, {Weight{0, 0}, 1}}, "row"}}});
    CHECK(simple_character(Weight{1, 0}, 2, partial).dimension() == 6);
    CHECK(simple_character(Weight{2, 0}, 2, partial).dimension() == 6);
    CHECK_ERROR_KIND(simple_character(Weight{0, 1}, 2, partial), ErrorKind::MissingData);
    CHECK_ERROR_KIND(simple_character(Weight{3, 1}, 2, partial), ErrorKind::MissingData);
    try {
        simple_character(Weight{0, 1}, 2, partial);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("(0, 1)") != std::string::npos);
    }
}

TEST_CASE("pr-standard characters") {
    const Dataset data = load_builtin_dataset();
    auto g2 = data.rs;
    const auto& table = data.decomposition;

    CHECK(pr_standard_character(Weight{2, 0}, 2, 1, table) ==
          frobenius_twist(weyl_character(g2, Weight{1, 0}), 2));
    CHECK(pr_standard_character(Weight{2, 0}, 2, 1, table).dimension() == 7);
    CHECK(pr_standard_character(Weight{0, 1}, 2, 1, table) == simple_character(Weight{0, 1}, 2, table));
    CHECK(pr_standard_character(Weight{1, 1}, 2, 1, table) == simple_character(Weight{1, 1}, 2, table));

    // Unitriangularity: highest weight lam with multiplicity exactly 1.
    for (std::int64_t a = 0; a <= 4; ++a)
        for (std::int64_t b = 0; b <= 4; ++b) {
            const Weight lam{a, b};
            const auto ch = pr_standard_character(lam, 2, 1, table);
            CHECK(ch.multiplicity(lam) == 1);
            CHECK(ch.leading_dominant_weight() == lam);
            for (const auto& [w, m] : ch.terms())
                CHECK(g2->dominance_leq(g2->dominant_representative(w), lam));
        }

    // r = 2 splits off two digits at once.
    CHECK(pr_standard_character(Weight{5, 1}, 2, 2, table) ==
          simple_character(Weight{1, 1}, 2, table) * frobenius_twist(weyl_character(g2, Weight{1, 0}), 4));
}

TEST_CASE("tilting characters, registered and derived") {
    const Dataset data = load_builtin_dataset();
    auto g2 = data.rs;

    const auto t10 = tilting_character(Weight{1, 0}, data.tilting);
    CHECK(t10 == weyl_character(g2, Weight{1, 0}) + weyl_character(g2, Weight{0, 0}));
    CHECK(t10.dimension() == 8);
    CHECK(tilting_character(Weight{1, 1}, data.tilting) == weyl_character(g2, Weight{1, 1}));

    // Derived from the projective identities.
    CHECK(as_map(data.tilting.entry(Weight{2, 1}).factors) ==
          std::map<Weight, Int>{{Weight{2, 1}, 1},
                                {Weight{0, 2}, 1},
                                {Weight{3, 0}, 1},
                                {Weight{2, 0}, 1},
                                {Weight{0, 1}, 1}});
    CHECK(tilting_character(Weight{2, 1}, data.tilting).dimension() == 384);
    CHECK(tilting_character(Weight{2, 1}, data.tilting) ==
          simple_character(Weight{1, 1}, 2, data.decomposition) *
              simple_character(Weight{1, 0}, 2, data.decomposition));

    CHECK(as_map(data.tilting.entry(Weight{1, 2}).factors) ==
          std::map<Weight, Int>{{Weight{1, 2}, 1},
                                {Weight{4, 0}, 1},
                                {Weight{2, 1}, 1},
                                {Weight{3, 0}, 1},
                                {Weight{2, 0}, 1},
                                {Weight{1, 0}, 1}});
    CHECK(tilting_character(Weight{1, 2}, data.tilting).dimension() == 768);

    // Derived by tensoring the Steinberg module onto twisted registered rows.
    CHECK(as_map(data.tilting.entry(Weight{3, 1}).factors) ==
          std::map<Weight, Int>{{Weight{3, 1}, 1}, {Weight{1, 1}, 1}});
    CHECK(tilting_character(Weight{3, 1}, data.tilting).dimension() == 512);
    CHECK(tilting_character(Weight{3, 3}, data.tilting).dimension() == 4096);
    CHECK(data.tilting.entries().size() == 6);

    CHECK_ERROR_KIND(tilting_character(Weight{9, 9}, data.tilting), ErrorKind::MissingData);
}

TEST_CASE("projective dimensions from the registered identities") {
    const Dataset data = load_builtin_dataset();
    CHECK(data.pims.status == LinearSolution::Status::Unique);

    const auto dims = pim_dimensions(2, data.decomposition, data.registry);
    CHECK(dims == std::map<Weight, Int>{{Weight{0, 0}, 2304},
                                        {Weight{0, 1}, 384},
                                        {Weight{1, 0}, 768},
                                        {Weight{1, 1}, 64}});

    // The four identities recompute exactly.
    CHECK(64 * 1 == dims.at(Weight{1, 1}));
    CHECK(64 * 6 == dims.at(Weight{0, 1}));
    CHECK(64 * 14 == dims.at(Weight{1, 0}) + 2 * dims.at(Weight{1, 1}));
    CHECK(64 * 64 == dims.at(Weight{0, 0}) + 2 * dims.at(Weight{0, 1}) + 16 * dims.at(Weight{1, 1}));

    // Solved characters, not just dimensions.
    const auto st = simple_character(Weight{1, 1}, 2, data.decomposition);
    const auto l10 = simple_character(Weight{1, 0}, 2, data.decomposition);
    CHECK(data.pims.characters.at(Weight{0, 1}) == st * l10);
    CHECK(data.pims.characters.at(Weight{0, 0}).dimension() == 2304);
    CHECK(data.pims.characters.at(Weight{0, 0}).is_effective());
}

TEST_CASE("dropping an identity leaves the system underdetermined") {
    json j = builtin_json();
    const int idx = find_fact(j, "iso", "St * St");
    REQUIRE(idx >= 0);
    j.at("facts").erase(idx);
    const Dataset data = load_dataset(j.dump());

    CHECK(data.pims.status == LinearSolution::Status::Underdetermined);
    CHECK(data.pims.characters.count(Weight{0, 0}) == 0);
    CHECK(data.pims.characters.at(Weight{0, 1}).dimension() == 384);
    CHECK(data.pims.characters.at(Weight{1, 0}).dimension() == 768);
    CHECK_ERROR_KIND(pim_dimensions(2, data.decomposition, data.registry), ErrorKind::InconsistentFacts);
    CHECK_ERROR_KIND(evaluate_character(data, "Q1(0,0)"), ErrorKind::MissingData);
    // The tilting rows pinned by the surviving identities are still derived.
    CHECK(tilting_character(Weight{2, 1}, data.tilting).dimension() == 384);
}

TEST_CASE("perturbing an identity shifts the solved dimensions") {
    json perturbed = builtin_json();
    const int idx = find_fact(perturbed, "iso", "St * L(0,1)");
    REQUIRE(idx >= 0);
    perturbed.at("facts")[idx].at("payload").at("pims") = json::parse("[[[1,0],1],[[1,1],3]]");

    // With the tilting identification left in place the derived filtration
    // would need a negative multiplicity, which the loader refuses.
    CHECK_ERROR_KIND(load_dataset(perturbed.dump()), ErrorKind::InvalidTable);

    json j = perturbed;
    j.at("facts").erase(find_fact(j, "iso", "T(1,2)"));
    const Dataset data = load_dataset(j.dump());
    const auto dims = pim_dimensions(2, data.decomposition, data.registry);
    CHECK(dims.at(Weight{1, 0}) == 704);  // 896 - 3 * 64; the mismatch against 768 is visible
    CHECK(dims.at(Weight{0, 1}) == 384);
}

TEST_CASE("loader validation") {
    // Diagonal multiplicity must be 1.
    {
        json j = builtin_json();
        j.at("decomposition")[0].at("factors") = json::parse("[[[0,0],2]]");
        CHECK_ERROR_KIND(load_dataset(j.dump()), ErrorKind::InvalidTable);
    }
    // Closure: factors need rows of their own.
    {
        json j = builtin_json();
        j.at("decomposition").erase(0);  // removes the (0,0) row referenced by (1,0)
        CHECK_ERROR_KIND(load_dataset(j.dump()), ErrorKind::InvalidTable);
    }
    // Factors must sit strictly below the diagonal weight.
    {
        json j = builtin_json();
        j.at("decomposition")[1].at("factors") = json::parse("[[[0,1],1],[[1,1],1]]");
        CHECK_ERROR_KIND(load_dataset(j.dump()), ErrorKind::InvalidTable);
    }
    // The prime must be prime.
    {
        json j = builtin_json();
        j["p"] = 4;
        CHECK_ERROR_KIND(load_dataset(j.dump()), ErrorKind::InvalidTable);
    }
    // Unknown keys are rejected at every level.
    {
        json j = builtin_json();
        j["comment"] = "hello";
        CHECK_ERROR_KIND(load_dataset(j.dump()), ErrorKind::DataFormat);
    }
    {
        json j = builtin_json();
        j.at("decomposition")[0]["note"] = "x";
        CHECK_ERROR_KIND(load_dataset(j.dump()), ErrorKind::DataFormat);
    }
    {
        json j = builtin_json();
        j.at("facts")[0]["extra"] = 1;
        CHECK_ERROR_KIND(load_dataset(j.dump()), ErrorKind::DataFormat);
    }
    // Unknown fact kinds and malformed expressions are format errors.
    {
        json j = builtin_json();
        j.at("facts")[0].at("kind") = "cohomology";
        CHECK_ERROR_KIND(load_dataset(j.dump()), ErrorKind::DataFormat);
    }
    {
        json j = builtin_json();
        j.at("facts")[0].at("subject") = "St **";
        CHECK_ERROR_KIND(load_dataset(j.dump()), ErrorKind::DataFormat);
    }
    // Uncited facts are rejected.
    {
        json j = builtin_json();
        j.at("facts")[0].at("citation") = "";
        CHECK_ERROR_KIND(load_dataset(j.dump()), ErrorKind::InvalidRegistry);
    }
    {
        json j = builtin_json();
        j.at("facts")[0].erase("citation");
        CHECK_ERROR_KIND(load_dataset(j.dump()), ErrorKind::InvalidRegistry);
    }
    // Projectives outside the restricted range cannot be named.
    {
        json j = builtin_json();
        j.at("facts")[0].at("payload").at("pims") = json::parse("[[[2,0],1]]");
        CHECK_ERROR_KIND(load_dataset(j.dump()), ErrorKind::InvalidRegistry);
    }
    // Payload expressions must have computable characters.
    {
        json j = builtin_json();
        j.at("facts")[find_fact(j, "head", "Nabla(2,1)")].at("payload") = json::parse(R"j(["T(7,7)"])j");
        CHECK_ERROR_KIND(load_dataset(j.dump()), ErrorKind::InvalidRegistry);
    }
    // Radical layers are 1-based.
    {
        json j = builtin_json();
        j.at("facts")[find_fact(j, "radical_layer", "Nabla(2,1)")].at("payload").at("layer") = 0;
        CHECK_ERROR_KIND(load_dataset(j.dump()), ErrorKind::DataFormat);
    }
    // Garbage input reports a byte offset.
    try {
        load_dataset("{\"type\": \"G2\",, }");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DataFormat);
        CHECK(e.offset() >= 0);
    }
    CHECK_ERROR_KIND(load_dataset("{}"), ErrorKind::DataFormat);
}

TEST_CASE("tilting rows from files collide with derivations coherently") {
    // A file may pre-register a derived row if it agrees...
    {
        json j = builtin_json();
        j.at("tilting").push_back(json::parse(
            R"({"lambda": [2,1],
                "factors": [[[2,1],1],[[0,2],1],[[3,0],1],[[2,0],1],[[0,1],1]],
                "provenance": "registered copy"})"));
        const Dataset data = load_dataset(j.dump());
        CHECK(data.tilting.entry(Weight{2, 1}).provenance == "registered copy");
    }
    // ...but not if it contradicts the derivation.
    {
        json j = builtin_json();
        j.at("tilting").push_back(json::parse(
            R"({"lambda": [2,1], "factors": [[[2,1],1]], "provenance": "wrong"})"));
        CHECK_ERROR_KIND(load_dataset(j.dump()), ErrorKind::InconsistentFacts);
    }
}

TEST_CASE("registry lookups") {
    const Dataset data = load_builtin_dataset();
    const auto& reg = data.registry;

    const auto nabla21 = ModuleExpr::atom(ModuleExpr::Kind::Costandard, Weight{2, 1});
    const Fact* head = reg.find(FactKind::Head, *nabla21);
    REQUIRE(head != nullptr);
    REQUIRE(head->summands.size() == 1);
    CHECK(head->summands.front().text == "L(0,1)");

    const Fact* layer = reg.find(FactKind::RadicalLayer, *nabla21);
    REQUIRE(layer != nullptr);
    CHECK(layer->layer == 2);
    CHECK(layer->summands.front().text == "L(1,0)^[1]");

    const auto trivial = ModuleExpr::trivial();
    const auto adjoint = ModuleExpr::atom(ModuleExpr::Kind::Simple, Weight{0, 1});
    const Fact* ext = reg.find_pair(FactKind::Ext1Dim, *trivial, *adjoint);
    REQUIRE(ext != nullptr);
    CHECK(ext->dim == 7);
    CHECK(ext->g_structure == "Nabla(1,0)^[1]");
    CHECK(ext->dim == weyl_dimension(*data.rs, Weight{1, 0}));

    const Fact* ext_adj = reg.find_pair(FactKind::Ext1Dim, *adjoint, *adjoint);
    REQUIRE(ext_adj != nullptr);
    CHECK(ext_adj->dim == 0);
    const auto l10 = ModuleExpr::atom(ModuleExpr::Kind::Simple, Weight{1, 0});
    const Fact* ext_l10 = reg.find_pair(FactKind::Ext1Dim, *l10, *adjoint);
    REQUIRE(ext_l10 != nullptr);
    CHECK(ext_l10->dim == 0);
    CHECK(reg.find_pair(FactKind::Ext1Dim, *adjoint, *trivial) == nullptr);

    CHECK(reg.find(FactKind::Socle, *parse_module_expression("Delta(2,2)")) != nullptr);
    CHECK(reg.all_of(FactKind::Iso).size() == 6);
}

TEST_CASE("expression evaluation against the dataset") {
    const Dataset data = load_builtin_dataset();

    CHECK(evaluate_character(data, "k").dimension() == 1);
    CHECK(evaluate_character(data, "St").dimension() == 64);
    CHECK(evaluate_character(data, "L(0,1) + L(1,0)^[1]").dimension() == 20);
    CHECK(evaluate_character(data, "St * L(0,1)").dimension() == 896);
    CHECK(evaluate_character(data, "chi(2,2)").dimension() == 729);
    CHECK(evaluate_character(data, "Delta(2,1)") == evaluate_character(data, "Nabla(2,1)"));
    CHECK(evaluate_character(data, "Q1(0,0)").dimension() == 2304);
    CHECK(evaluate_character(data, "T(1,0)").dimension() == 8);
    CHECK(evaluate_character(data, "2 * k").dimension() == 2);
    CHECK(evaluate_character(data, "dual(St)") == evaluate_character(data, "St"));
    CHECK(evaluate_character(data, "St * L(1,0)^[1]") ==
          simple_character(Weight{3, 1}, 2, data.decomposition));

    const auto m = evaluate_character(data, "L(0,1) + L(1,0)^[1]");
    CHECK(m.torus_fixed_dimension(2, 1) == 8);

    CHECK_ERROR_KIND(evaluate_character(data, "T(9,9)"), ErrorKind::MissingData);
    CHECK_ERROR_KIND(evaluate_character(data, "k^[40]"), ErrorKind::BadTwist);
    CHECK_ERROR_KIND(evaluate_character(data, "L(-1,0)"), ErrorKind::NotDominant);
}

TEST_CASE("twisted tensors count torus fixed points multiplicatively") {
    const Dataset data = load_builtin_dataset();
    const auto c = weyl_character(data.rs, Weight{1, 0});
    for (const auto& lam : data.rs->restricted_weights(2, 1)) {
        const auto d = simple_character(lam, 2, data.decomposition);
        CHECK((frobenius_twist(c, 2) * d).torus_fixed_dimension(2, 1) ==
              c.dimension() * d.torus_fixed_dimension(2, 1));
    }
}

TEST_CASE("simple module weights of payload expressions") {
    const Dataset data = load_builtin_dataset();
    auto weight_of = [&](const char* text) {
        return simple_module_weight(*parse_module_expression(text), *data.rs, data.p);
    };
    CHECK(weight_of("k") == Weight{0, 0});
    CHECK(weight_of("St") == Weight{1, 1});
    CHECK(weight_of("L(1,0)^[1]") == Weight{2, 0});
    CHECK(weight_of("St * L(1,0)^[1]") == Weight{3, 1});
    CHECK(weight_of("dual(L(0,1))") == Weight{0, 1});
    CHECK(weight_of("T(1,0)") == std::nullopt);
    CHECK(weight_of("L(1,0) + k") == std::nullopt);
    CHECK(weight_of("2 * St") == std::nullopt);
}

TEST_CASE("dataset files round-trip") {
    const std::string path = "weylkit_test_dataset.json";
    {
        std::ofstream out(path, std::ios::binary);
        out << builtin_dataset_text();
    }
    const Dataset from_file = load_dataset_file(path);
    CHECK(from_file.fingerprint == load_builtin_dataset().fingerprint);
    std::remove(path.c_str());

    CHECK_ERROR_KIND(load_dataset_file("no_such_file.json"), ErrorKind::Io);
}

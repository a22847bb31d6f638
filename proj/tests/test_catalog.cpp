#include <doctest.h>

#include <map>
#include <set>

#include "test_support.hpp"
#include "twostep/catalog.hpp"
#include "twostep/decompose.hpp"
#include "twostep/error.hpp"
#include "twostep/hypergraph.hpp"

using namespace twostep;

TEST_CASE("catalog shape") {
    const auto& entries = catalog();
    CHECK(entries.size() == 26);
    std::map<std::pair<int, int>, int> by_signature;
    for (const CatalogEntry& e : entries) ++by_signature[{e.algebra.n(), e.algebra.p()}];
    CHECK(by_signature[{8, 2}] == 5);
    CHECK(by_signature[{8, 3}] == 11);
    CHECK(by_signature[{8, 4}] == 3);
    CHECK(by_signature[{9, 2}] == 5);
    CHECK(by_signature[{9, 5}] == 2);
}

TEST_CASE("catalog lookup accepts braced and plain ids") {
    CHECK(catalog_entry("N^{8,3}_11").id == "N^{8,3}_11");
    CHECK(catalog_entry("N^{8,3}_{11}").id == "N^{8,3}_11");
    CHECK_THROWS_AS(catalog_entry("N^{7,2}_1"), UnknownId);
}

TEST_CASE("published metadata spot checks") {
    const CatalogEntry& n11 = catalog_entry("N^{8,3}_{11}");
    CHECK(n11.rank_r == 2);
    CHECK(n11.t_name == "T^{8,3}_2");
    const CatalogEntry& n825 = catalog_entry("N^{8,2}_5");
    CHECK(n825.t_name == "T^{8,2}_3");
    CHECK(n825.rank_r == 3);
    const CatalogEntry& n951 = catalog_entry("N^{9,5}_1");
    CHECK(n951.hmsg_related_sequence == std::vector<int>{2, 2, 3, 3});
    CHECK(n951.t_name == "T^{9,5}_{4,1}");
    // The repaired rank of N^{8,3}_7.
    CHECK(catalog_entry("N^{8,3}_7").rank_r == 3);
    CHECK(!catalog_entry("N^{8,3}_7").root_spaces_all_dim1);
    CHECK(!catalog_entry("N^{8,3}_3").root_spaces_all_dim1);
}

TEST_CASE("computed related sequences match the stored H-msg sequences") {
    for (const CatalogEntry& e : catalog()) {
        if (!e.root_spaces_all_dim1) continue;
        CHECK(related_sequence(e.algebra) == e.hmsg_related_sequence);
    }
}

TEST_CASE("nomenclature reproduces every explicit published assignment") {
    const std::map<std::string, std::string> expected{
        {"N^{8,2}_1", "T^{8,2}_{4,1}"}, {"N^{8,2}_2", "T^{8,2}_{4,4}"},
        {"N^{8,2}_3", "T^{8,2}_{4,3}"}, {"N^{8,2}_4", "T^{8,2}_{4,2}"},
        {"N^{8,2}_5", "T^{8,2}_3"},
        {"N^{8,3}_1", "T^{8,3}_{4,2}"}, {"N^{8,3}_2", "T^{8,3}_{4,4}"},
        {"N^{8,3}_3", "T^{8,3}_{4,5}"}, {"N^{8,3}_4", "T^{8,3}_{4,3}"},
        {"N^{8,3}_5", "T^{8,3}_{4,1}"}, {"N^{8,3}_6", "T^{8,3}_{3,2}"},
        {"N^{8,3}_7", "T^{8,3}_{3,5}"}, {"N^{8,3}_8", "T^{8,3}_{3,1}"},
        {"N^{8,3}_9", "T^{8,3}_{3,3}"}, {"N^{8,3}_10", "T^{8,3}_{3,4}"},
        {"N^{8,3}_11", "T^{8,3}_2"},
        {"N^{8,4}_1", "T^{8,4}_{4,2}"}, {"N^{8,4}_2", "T^{8,4}_{4,1}"},
        {"N^{8,4}_3", "T^{8,4}_3"},
        {"N^{9,2}_1", "T^{9,2}_{5,1}"}, {"N^{9,2}_2", "T^{9,2}_{5,2}"},
        {"N^{9,2}_3", "T^{9,2}_{4,1}"}, {"N^{9,2}_4", "T^{9,2}_{4,2}"},
        {"N^{9,2}_5", "T^{9,2}_3"},
        {"N^{9,5}_1", "T^{9,5}_{4,1}"}, {"N^{9,5}_2", "T^{9,5}_{4,2}"},
    };
    for (const CatalogEntry& e : catalog()) {
        REQUIRE(expected.count(e.id) == 1);
        CHECK(e.t_name == expected.at(e.id));
    }
    // Names are injective.
    std::set<std::string> names;
    for (const CatalogEntry& e : catalog()) names.insert(e.t_name);
    CHECK(names.size() == catalog().size());
}

TEST_CASE("assign_t_names detects unresolved ties") {
    std::vector<CatalogEntry> twins;
    const CatalogEntry& base = catalog_entry("N^{8,3}_2");
    CatalogEntry a = base, b = base;
    b.id = "N^{8,3}_2-bis";
    twins.push_back(a);
    twins.push_back(b);
    CHECK_THROWS_AS(assign_t_names(twins), UnresolvedTie);
}

TEST_CASE("match") {
    SUBCASE("Example 3 quotients match the N^{9,5} entries exactly") {
        auto m1 = match(quotient(4, gauger_ideals_q4_one()[0]).algebra);
        REQUIRE(m1.size() == 1);
        CHECK(m1[0].entry->id == "N^{9,5}_1");
        CHECK(m1[0].strength == MatchStrength::Exact);
        auto m2 = match(quotient(4, gauger_ideals_q4_one()[1]).algebra);
        REQUIRE(m2.size() == 1);
        CHECK(m2[0].entry->id == "N^{9,5}_2");
        CHECK(m2[0].strength == MatchStrength::Exact);
    }
    SUBCASE("N^6/I_10-perp matches N^{8,2}_2 exactly") {
        PresentedAlgebra dual_alg = quotient(6, orthogonal_complement(gauger_ideals_q6()[9]));
        auto matches = match(dual_alg.algebra);
        REQUIRE(matches.size() == 1);
        CHECK(matches[0].entry->id == "N^{8,2}_2");
        CHECK(matches[0].strength == MatchStrength::Exact);
    }
    SUBCASE("unknown signatures match nothing") {
        StructureTensor t(10, 2);
        t.set(1, 2, 1, 1);
        t.set(3, 4, 2, 1);
        CHECK(match(validate(std::move(t))).empty());
    }
}

TEST_CASE("distinguish") {
    const TwoStepAlgebra& a2 = catalog_entry("N^{8,2}_2").algebra;
    const TwoStepAlgebra& a3 = catalog_entry("N^{8,2}_3").algebra;
    DistinguishResult r = distinguish(a2, a3);
    CHECK(r.not_isomorphic);
    CHECK(r.reason.find("generator relation") != std::string::npos);
    CHECK(r.reason.find("(3,3)") != std::string::npos);
    CHECK(r.reason.find("(2,4)") != std::string::npos);

    DistinguishResult girth_case = distinguish(catalog_entry("N^{8,3}_6").algebra,
                                               catalog_entry("N^{8,3}_9").algebra);
    CHECK(girth_case.not_isomorphic);
    CHECK(girth_case.reason.find("girth") != std::string::npos);

    DistinguishResult self = distinguish(a2, a2);
    CHECK(!self.not_isomorphic);

    // Symmetric in outcome.
    for (const char* x : {"N^{8,2}_1", "N^{8,3}_4", "N^{9,2}_5"}) {
        for (const char* y : {"N^{8,2}_2", "N^{8,3}_7"}) {
            CHECK(distinguish(catalog_entry(x).algebra, catalog_entry(y).algebra).not_isomorphic ==
                  distinguish(catalog_entry(y).algebra, catalog_entry(x).algebra).not_isomorphic);
        }
    }
}

TEST_CASE("every same-signature pair is distinguished") {
    const auto& entries = catalog();
    for (std::size_t a = 0; a < entries.size(); ++a) {
        for (std::size_t b = a + 1; b < entries.size(); ++b) {
            if (entries[a].algebra.q() != entries[b].algebra.q() ||
                entries[a].algebra.p() != entries[b].algebra.p())
                continue;
            DistinguishResult r = distinguish(entries[a].algebra, entries[b].algebra);
            INFO(entries[a].id, " vs ", entries[b].id);
            CHECK(r.not_isomorphic);
        }
    }
}

TEST_CASE("fixture families") {
    CHECK(gauger_ideals_q6().size() == 11);
    CHECK(gauger_ideals_q4_two().size() == 3);
    CHECK(gauger_ideals_q4_one().size() == 2);
    for (const RelationIdeal& ideal : gauger_ideals_q6()) CHECK(ideal.dim() == 2);
    for (const RelationIdeal& ideal : gauger_ideals_q4_two()) CHECK(ideal.dim() == 2);
    for (const RelationIdeal& ideal : gauger_ideals_q4_one()) CHECK(ideal.dim() == 1);
    CHECK(gt99_decomposable_examples().size() == 3);
    for (const FixtureAlgebra& f : gt99_decomposable_examples()) {
        CHECK(decide(f.algebra).status == Decomposability::Decomposable);
    }
}

TEST_CASE("catalog ranks are attached as metadata") {
    for (const CatalogEntry& e : catalog()) {
        REQUIRE(e.algebra.meta().has_value());
        CHECK(e.algebra.meta()->rank_r == e.rank_r);
        CHECK(e.algebra.meta()->source_label == e.id);
        CHECK(e.algebra.meta()->t_name == e.t_name);
    }
}

#include "gbslocc/catalog.hpp"

#include "gtest/gtest.h"

using namespace gbslocc;

TEST(catalog, family_sizes) {
    EXPECT_EQ(representatives(4, 4).entries.size(), 10u);
    EXPECT_EQ(representatives(5, 4).entries.size(), 8u);
    EXPECT_EQ(representatives(5, 5).entries.size(), 21u);
    EXPECT_TRUE(has_representatives(5, 5));
    EXPECT_FALSE(has_representatives(6, 4));
    EXPECT_THROW(representatives(6, 4), std::out_of_range);
}

TEST(catalog, representatives_are_standard_and_sized) {
    for (const auto &[d, k] : std::vector<std::pair<int, int>>{{4, 4}, {5, 4}, {5, 5}}) {
        const auto fam = representatives(d, k);
        EXPECT_EQ(fam.d, d);
        EXPECT_EQ(fam.k, k);
        std::set<std::string> labels;
        for (const auto &e : fam.entries) {
            EXPECT_TRUE(e.set.is_standard()) << e.label;
            EXPECT_EQ(e.set.modulus(), d);
            EXPECT_EQ(static_cast<int>(e.set.size()), k);
            EXPECT_TRUE(labels.insert(e.label).second) << e.label;
            EXPECT_EQ(e.index_cardinality.has_value(), d == 5) << e.label;
        }
    }
}

TEST(catalog, verdict_counts) {
    auto count_indist = [](const RepresentativeFamily &f) {
        return std::count_if(f.entries.begin(), f.entries.end(),
                             [](const FamilyEntry &e) { return e.verdict == KnownVerdict::Indist; });
    };
    EXPECT_EQ(count_indist(representatives(4, 4)), 3);
    EXPECT_EQ(count_indist(representatives(5, 4)), 2);
    EXPECT_EQ(count_indist(representatives(5, 5)), 12);
}

TEST(catalog, decide_matches_family_verdicts) {
    for (const auto &[d, k] : std::vector<std::pair<int, int>>{{4, 4}, {5, 4}, {5, 5}}) {
        for (const auto &e : representatives(d, k).entries) {
            const auto r = decide(e.set);
            const auto expected = e.verdict == KnownVerdict::Dist ? Verdict::Distinguishable : Verdict::Indistinguishable;
            EXPECT_EQ(r.verdict, expected) << d << "," << k << " " << e.label;
            if (e.index_cardinality) {
                EXPECT_EQ(r.index_cardinality, e.index_cardinality) << e.label;
            }
        }
    }
}

TEST(catalog, table1) {
    const auto t = golden_table1();
    EXPECT_EQ(t.rows.size(), 10u);
    EXPECT_EQ(t.total(), 455);
    EXPECT_EQ(t.lookup("G1_20"), 192);
    EXPECT_EQ(t.lookup("K"), 1);
    EXPECT_THROW(t.lookup("nope"), std::out_of_range);
}

TEST(catalog, table2_shape) {
    const auto t = golden_table2();
    EXPECT_EQ(t.d, 4);
    EXPECT_EQ(t.total(), 156u);
    ASSERT_EQ(t.groups.size(), 3u);
    EXPECT_EQ(t.groups[0].label, "G1_12");
    EXPECT_EQ(t.groups[0].rows.size(), 96u);
    EXPECT_EQ(t.groups[1].label, "G2_20");
    EXPECT_EQ(t.groups[1].rows.size(), 48u);
    EXPECT_EQ(t.groups[2].label, "G2_32");
    EXPECT_EQ(t.groups[2].rows.size(), 12u);
    const auto rows = t.all_rows();
    EXPECT_EQ(std::set<CanonicalSet>(rows.begin(), rows.end()).size(), 156u);
    EXPECT_EQ(t.preamble.size(), 2u);
}

TEST(catalog, table2_byte_stable) {
    const auto fixture = golden_table2_fixture();
    ASSERT_FALSE(fixture.empty());
    EXPECT_EQ(fixture.back(), '\n');
    EXPECT_EQ(format_set_table(golden_table2()), fixture);
}

TEST(catalog, table2_matches_orbits) {
    const auto t = golden_table2();
    const auto fam = representatives(4, 4);
    for (const auto &g : t.groups) {
        const auto it = std::find_if(fam.entries.begin(), fam.entries.end(),
                                     [&](const FamilyEntry &e) { return e.label == g.label; });
        ASSERT_NE(it, fam.entries.end()) << g.label;
        EXPECT_EQ(it->verdict, KnownVerdict::Indist);
        EXPECT_EQ(orbit(it->set).members, std::set<CanonicalSet>(g.rows.begin(), g.rows.end())) << g.label;
    }
}

TEST(catalog, fixture_parsing) {
    const auto sets = parse_fixture("# header\n0,0;1,1\n\n  2,2;3,3  \n", 4);
    ASSERT_EQ(sets.size(), 2u);
    EXPECT_EQ(sets[1].str(), "2,2;3,3");
    EXPECT_THROW(parse_fixture("0,0;1,\n", 4), ParseError);
    EXPECT_THROW(parse_set_table("# class A (1)\n1,1;2,2\n", 4), std::invalid_argument);

    const auto t = parse_set_table("# note\n# class A (2)\n0,0;1,1\n0,0;1,2\n# class B (1)\n0,0;2,2\n", 4);
    ASSERT_EQ(t.groups.size(), 2u);
    EXPECT_EQ(t.preamble, std::vector<std::string>{" note"});
    EXPECT_EQ(t.groups[1].label, "B");
    EXPECT_EQ(format_set_table(t), "# note\n# class A (2)\n0,0;1,1\n0,0;1,2\n# class B (1)\n0,0;2,2\n");
    EXPECT_EQ(format_fixture(t.groups[0].rows), "0,0;1,1\n0,0;1,2\n");
}

TEST(catalog, example_fixture_names) {
    const auto ex = example_fixtures();
    ASSERT_GE(ex.size(), 4u);
    EXPECT_EQ(ex[0].name, "L1");
    EXPECT_EQ(ex[0].set.modulus(), 6);
    EXPECT_EQ(ex[0].witness_member, Gpm(2, 3, 6));
    EXPECT_EQ(ex[3].name, "L4");
}

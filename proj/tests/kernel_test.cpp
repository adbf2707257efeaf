#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace lcr;
using lcr::testing::set;

namespace {

Table klein_table()
{
    return Table::from_rows({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

FiniteAbelianGroup group_of(const Table& t) { return *validate_group(t).value; }

} // namespace

TEST(Kernel, KleinGroupValidates)
{
    auto v = validate_group(klein_table());
    ASSERT_TRUE(v);
    EXPECT_EQ(v.value->order(), 4u);
    for (Elem x = 0; x < 4; ++x)
        EXPECT_EQ(v.value->neg(x), x);
}

TEST(Kernel, Z4InverseOfOneIsThree)
{
    auto g = cyclic_product_group({4});
    EXPECT_EQ(g.neg(1), 3u);
    EXPECT_EQ(g.element_order(1), 4u);
    EXPECT_EQ(g.element_order(2), 2u);
}

TEST(Kernel, NonCommutativeTableReportsFirstPair)
{
    Table t = klein_table();
    t(1, 2) = 2; // breaks commutativity at (1,2) and the Latin property
    auto v = validate_group(t);
    ASSERT_FALSE(v);
    const Violation* c = v.find("add-commutativity");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->witness, (Witness{1, 2}));
    EXPECT_EQ(c->to_string(), "add-commutativity fails at (1,2): not commutative");
}

TEST(Kernel, NonSquareAndMisplacedZeroAreErrors)
{
    try {
        (void)Table::from_rows({{0, 1}, {1}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonSquareTable);
    }
    // Z2 with the neutral element at index 1
    try {
        (void)validate_group(Table::from_rows({{1, 0}, {0, 1}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroNotAtIndexZero);
    }
}

TEST(Kernel, MissingInverseIsAViolation)
{
    // 0 neutral, but 1 + x != 0 for every x
    auto v = validate_group(Table::from_rows({{0, 1, 2}, {1, 1, 1}, {2, 1, 2}}));
    ASSERT_FALSE(v);
    EXPECT_TRUE(v.has_violation("add-inverse"));
}

TEST(Kernel, SubgroupClosureExamples)
{
    const auto z4 = cyclic_product_group({4});
    EXPECT_EQ(subgroup_closure(z4, set(4, {2})), set(4, {0, 2}));
    EXPECT_EQ(subgroup_closure(z4, Subset(4)), set(4, {0}));
    const auto klein = group_of(klein_table());
    EXPECT_EQ(subgroup_closure(klein, set(4, {1, 2})), Subset::full(4));
}

TEST(Kernel, SubgroupClosureIsIdempotentAndMonotone)
{
    const auto g = cyclic_product_group({2, 6});
    for (std::uint64_t bits = 0; bits < (1u << 12); bits += 37) {
        const Subset seed = Subset::from_bits(12, bits);
        const Subset c = subgroup_closure(g, seed);
        EXPECT_EQ(subgroup_closure(g, c), c);
        EXPECT_TRUE(seed.subset_of(c));
        Subset bigger = seed;
        bigger.insert(static_cast<Elem>(bits % 12));
        EXPECT_TRUE(c.subset_of(subgroup_closure(g, bigger)));
    }
}

TEST(Kernel, SubgroupCountsOfSmallGroups)
{
    const auto z4 = cyclic_product_group({4});
    const auto subs = enumerate_subgroups(z4);
    ASSERT_EQ(subs.size(), 3u);
    EXPECT_EQ(subs[0], set(4, {0}));
    EXPECT_EQ(subs[1], set(4, {0, 2}));
    EXPECT_EQ(subs[2], Subset::full(4));
    EXPECT_EQ(enumerate_subgroups(group_of(klein_table())).size(), 5u);
    // frozen from the subset-scan oracle
    EXPECT_EQ(enumerate_subgroups(cyclic_product_group({2, 4})).size(), 8u);
}

TEST(Kernel, SubgroupEnumerationMatchesSubsetScan)
{
    const std::vector<std::vector<std::size_t>> groups{{1}, {2}, {4}, {2, 2}, {2, 4}, {2, 2, 2},
                                                        {3, 3}, {9}, {12}, {2, 6}, {2, 2, 3}, {8}};
    for (const auto& orders : groups) {
        const auto g = cyclic_product_group(orders);
        auto expected = lcr::testing::oracle_subgroups(g.table());
        std::sort(expected.begin(), expected.end(), canonical_less);
        const auto got = enumerate_subgroups(g);
        EXPECT_EQ(got, expected) << "order " << g.order();
        for (const auto& h : got)
            EXPECT_TRUE(is_subgroup(g, h));
    }
}

TEST(Kernel, CanonicalOrderIsSizeThenLexicographic)
{
    EXPECT_TRUE(canonical_less(set(8, {0, 4}), set(8, {0, 1, 2})));
    EXPECT_TRUE(canonical_less(set(8, {0, 2}), set(8, {0, 4})));
    EXPECT_FALSE(canonical_less(set(8, {0, 4}), set(8, {0, 4})));
    EXPECT_EQ(set(8, {4, 0, 2}).to_string(), "0,2,4");
}

TEST(Kernel, SubsetRejectsOutOfRangeMembers)
{
    Subset s(4);
    EXPECT_THROW(s.insert(4), Error);
    EXPECT_THROW(Subset(65), Error);
    EXPECT_EQ(Subset::full(64).size(), 64u);
}

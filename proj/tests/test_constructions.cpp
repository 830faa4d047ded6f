#include <gtest/gtest.h>

#include <fstream>
#include <set>

#include "conjprod/builtin_tables.hpp"
#include "conjprod/classes.hpp"
#include "conjprod/constructions.hpp"

using namespace conjprod;

namespace {

std::vector<std::size_t> sizes(const std::vector<ConjugacyClass>& cs) {
    std::vector<std::size_t> out;
    for (const auto& c : cs) out.push_back(c.size());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Heisenberg, Examples) {
    const auto h3 = heisenberg(3);
    EXPECT_EQ(h3.group.order().to_u64(), 27u);
    EXPECT_EQ(center(h3.group).size(), 3u);
    const auto sq = eta_of_class_square(h3.group, h3.distinguished);
    EXPECT_EQ(sq.class_size, 3u);
    EXPECT_EQ(sq.eta, 3u);

    const auto h5 = heisenberg(5);
    EXPECT_EQ(h5.group.order().to_u64(), 125u);
    const auto z = center(h5.group);
    for (const auto& cls : all_classes(h5.group)) {
        if (cls.size() == 1) continue;
        EXPECT_EQ(eta_of_class_square(h5.group, cls.rep).product, z);
    }
}

TEST(Heisenberg, Errors) {
    EXPECT_THROW(heisenberg(2), SpecError);
    EXPECT_THROW(heisenberg(9), SpecError);
}

TEST(Heisenberg, ExponentP) {
    for (std::uint64_t p : {3u, 5u, 7u}) {
        const auto h = heisenberg(p);
        for (const auto& x : enumerate_elements(h.group)) {
            Element y = h.group.identity();
            for (std::uint64_t k = 0; k < p; ++k) y = h.group.multiply(y, x);
            ASSERT_EQ(y, h.group.identity());
        }
        EXPECT_EQ(center(h.group).size(), p);
    }
}

TEST(RemarkBGroup, Examples) {
    const auto g3 = remark_b_group(3);
    EXPECT_EQ(g3.group.order().to_u64(), 2187u);
    const auto sq = eta_of_class_square(g3.group, g3.distinguished);
    EXPECT_EQ(sq.class_size, 3u);
    EXPECT_EQ(sq.eta, 3u);
    EXPECT_EQ(sizes(sq.decomposition.classes), (std::vector<std::size_t>{1, 3, 3}));

    const auto g2 = remark_b_group(2);
    EXPECT_EQ(g2.group.order().to_u64(), 32u);
    const auto sq2 = eta_of_class_square(g2.group, g2.distinguished);
    EXPECT_EQ(sq2.class_size, 2u);
    EXPECT_EQ(sq2.eta, 2u);
}

TEST(RemarkBGroup, ClassesOfBiAreDisjoint) {
    // b_i = c at point 0 times c^-1 at point i.
    for (std::uint64_t p : {2u, 3u}) {
        const auto g = remark_b_group(p).group;
        std::vector<ConjugacyClass> classes;
        for (std::uint64_t i = 1; i < p; ++i) {
            std::vector<Element> f(p, Element::residue(0));
            f[0] = Element::residue(1);
            f[i] = Element::residue(p * p - 1);
            classes.push_back(conjugacy_class(g, Element::wreath(f, Element::residue(0))));
        }
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = i + 1; j < classes.size(); ++j)
                for (const auto& x : classes[i].elements) EXPECT_FALSE(classes[j].contains(x));
    }
}

TEST(WreathConstruction, Examples) {
    const FamilyInstance c9{build_group(GroupSpec::cyclic(9)), Element::residue(1), "cyclic", {9}, {}};
    const auto w3 = wreath_construction(c9, 3);
    EXPECT_EQ(eta_of_class_square(w3.group, w3.distinguished).eta, 3u);
    EXPECT_EQ(w3.family, "wreath(cyclic:9,3)");

    const FamilyInstance c4{build_group(GroupSpec::cyclic(4)), Element::residue(1), "cyclic", {4}, {}};
    const auto w2 = wreath_construction(c4, 2);
    const auto sq = eta_of_class_square(w2.group, w2.distinguished);
    EXPECT_EQ(sq.class_size, 2u);
    EXPECT_EQ(sq.eta, 2u);
}

TEST(WreathConstruction, Preconditions) {
    const auto q8 = catalog_instance("Q8");
    auto with_i = q8;
    with_i.distinguished = q8.names.at("i");
    EXPECT_THROW(wreath_construction(with_i, 2), PreconditionError);

    const FamilyInstance c9{build_group(GroupSpec::cyclic(9)), Element::residue(1), "cyclic", {9}, {}};
    EXPECT_THROW(wreath_construction(c9, 2), PreconditionError);  // not a 2-group
    EXPECT_THROW(wreath_construction(c9, 4), SpecError);
}

TEST(Tower, Examples) {
    const auto t0 = tower(3, 0);
    auto sq = eta_of_class_square(t0.group, t0.distinguished);
    EXPECT_EQ(sq.class_size, 1u);
    EXPECT_EQ(sq.eta, 1u);

    const auto t23 = tower(2, 3);
    sq = eta_of_class_square(t23.group, t23.distinguished);
    EXPECT_EQ(sq.class_size, 8u);
    EXPECT_EQ(sq.eta, 4u);

    const auto t52 = tower(5, 2);
    sq = eta_of_class_square(t52.group, t52.distinguished);
    EXPECT_EQ(sq.class_size, 25u);
    EXPECT_EQ(sq.eta, 9u);
    EXPECT_EQ(t52.label(), "tower:5:2");
}

TEST(Tower, InverseClassesStayDistinctAtEveryLevel) {
    for (std::uint64_t p : {2u, 3u})
        for (std::uint64_t n = 0; n <= 3; ++n) {
            const auto t = tower(p, n);
            EXPECT_FALSE(class_equals_inverse(t.group, t.distinguished)) << p << "," << n;
        }
}

TEST(Supersolvable, Examples) {
    const auto s3 = supersolvable_example(3);
    EXPECT_EQ(s3.group.order().to_u64(), 162u);
    const auto sq = eta_of_class_square(s3.group, s3.distinguished);
    EXPECT_EQ(sq.class_size, 3u);
    EXPECT_EQ(sq.eta, 2u);
    const auto other = Element::wreath({Element::residue(1), Element::residue(2), Element::residue(0)},
                                       Element::affine(1, 0));
    ASSERT_EQ(sq.decomposition.classes.size(), 2u);
    EXPECT_EQ(sq.decomposition.classes[0].rep, s3.group.identity());
    EXPECT_TRUE(sq.decomposition.classes[1].contains(other));

    const auto s2 = supersolvable_example(2);
    const auto sq2 = eta_of_class_square(s2.group, s2.distinguished);
    EXPECT_EQ(sq2.eta, 2u);
    EXPECT_EQ(sq2.product, (std::vector<Element>{s2.group.identity(),
                                                 Element::wreath({Element::residue(1), Element::residue(1)},
                                                                 Element::affine(1, 0))}));
}

TEST(Supersolvable, ProductSizeBound) {
    for (std::uint64_t p : {2u, 3u, 5u}) {
        const auto s = supersolvable_example(p);
        const auto sq = eta_of_class_square(s.group, s.distinguished);
        EXPECT_LE(sq.product.size(), p * p - p + 1);
        EXPECT_EQ(s.group.order(), GroupOrder::of(p).pow(p) * GroupOrder::of(p) * GroupOrder::of(p - 1));
    }
}

TEST(Catalog, Examples) {
    const auto q8 = catalog_instance("Q8");
    EXPECT_EQ(q8.distinguished, q8.names.at("i"));
    EXPECT_EQ(sizes(all_classes(catalog_instance("D4").group)), (std::vector<std::size_t>{1, 1, 2, 2, 2}));
    EXPECT_EQ(sizes(all_classes(catalog_instance("C2xC2").group)), (std::vector<std::size_t>{1, 1, 1, 1}));
    EXPECT_THROW(catalog_instance("S3"), SpecError);
}

TEST(Catalog, Contents) {
    std::set<std::string> names;
    for (const auto& f : catalog()) {
        names.insert(f.family);
        EXPECT_TRUE(f.group.contains(f.distinguished)) << f.family;
        EXPECT_TRUE(f.group.prime().has_value()) << f.family;
    }
    EXPECT_EQ(names, (std::set<std::string>{"catalog:Q8", "catalog:D4", "catalog:C4", "catalog:C2xC2", "catalog:C9",
                                            "catalog:M16", "catalog:C9sdC3", "catalog:Heis3"}));
    const auto m16 = catalog_instance("M16");
    EXPECT_EQ(sizes(all_classes(m16.group)), (std::vector<std::size_t>{1, 1, 1, 1, 2, 2, 2, 2, 2, 2}));
    const auto c9c3 = catalog_instance("C9sdC3");
    EXPECT_EQ(center(c9c3.group).size(), 3u);
    EXPECT_EQ(all_classes(c9c3.group).size(), 11u);
}

TEST(Catalog, Heis3MatchesHeisenbergConstruction) {
    const auto a = catalog_instance("Heis3").group.table();
    const auto b = heisenberg(3).group.table();
    ASSERT_TRUE(a && b);
    EXPECT_EQ(*a, *b);
}

TEST(Catalog, ShippedTableFilesMatchBuiltins) {
    for (const auto& t : catalog_tables()) {
        const std::string path = std::string(CONJPROD_DATA_DIR) + "/catalog/" + t.name + ".tbl";
        std::ifstream in(path);
        ASSERT_TRUE(in) << path;
        const auto raw = read_table(in);
        const auto shipped = validate_table(raw.n, raw.entries);
        EXPECT_EQ(*shipped.table(), *t.table) << t.name;
    }
}

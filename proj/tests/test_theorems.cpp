#include <gtest/gtest.h>

#include "conjprod/theorems.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace conjprod;

namespace {

std::string get(const KeyValues& kv, const std::string& key) {
    for (const auto& [k, v] : kv)
        if (k == key) return v;
    return "<missing " + key + ">";
}

FamilyInstance cyclic(std::uint64_t m) {
    return {build_group(GroupSpec::cyclic(m)), Element::residue(1), "cyclic", {m}, {}};
}

FamilyInstance named(const char* cat, const char* element) {
    auto f = catalog_instance(cat);
    f.distinguished = f.names.at(element);
    return f;
}

}  // namespace

TEST(VerifyTheoremA, Examples) {
    const auto t = tower(3, 2);
    const auto r = verify_theorem_a(t.group, t.distinguished);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.tight, true);
    EXPECT_EQ(get(r.computed, "eta"), "5");
    EXPECT_EQ(get(r.expected, "bound"), "5");

    const auto q8 = catalog_instance("Q8");
    const auto rq = verify_theorem_a(q8.group, q8.names.at("i"));
    EXPECT_TRUE(rq.pass);
    EXPECT_EQ(rq.tight, true);
    EXPECT_EQ(get(rq.computed, "eta"), "2");

    const auto c8 = build_group(GroupSpec::cyclic(8));
    for (const auto& x : enumerate_elements(c8)) {
        const auto rc = verify_theorem_a(c8, x);
        EXPECT_TRUE(rc.pass);
        EXPECT_EQ(get(rc.computed, "eta"), "1");
        EXPECT_EQ(get(rc.expected, "bound"), "1");
    }
}

TEST(VerifyTheoremA, RejectsNonPGroups) {
    const auto aff = build_group(GroupSpec::affine(5));
    EXPECT_THROW(verify_theorem_a(aff, Element::affine(1, 1)), PreconditionError);
}

TEST(ComputeSn, Examples) {
    EXPECT_EQ(compute_sn(1).values, (std::vector<std::uint64_t>{1}));
    EXPECT_EQ(compute_sn(2).values, (std::vector<std::uint64_t>{1, 2}));
    EXPECT_EQ(compute_sn(3).values, (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
    EXPECT_THROW(compute_sn(0), SpecError);
}

TEST(ComputeSn, MatchesDefiningPredicate) {
    // Largest element of S_n is the product of the maximal prime powers, so scanning up to it is exhaustive.
    for (std::uint64_t n = 1; n <= 8; ++n) {
        const auto sn = compute_sn(n);
        ASSERT_FALSE(sn.values.empty());
        EXPECT_EQ(sn.values, oracle::brute_force_sn(n, sn.values.back())) << "n=" << n;
    }
}

TEST(ComputeSn, Monotone) {
    for (std::uint64_t n = 1; n < 14; ++n) {
        const auto a = compute_sn(n);
        const auto b = compute_sn(n + 1);
        for (auto v : a.values) EXPECT_TRUE(b.contains(v)) << v << " in S_" << n;
    }
}

TEST(VerifyTheoremB, Examples) {
    const auto r = verify_theorem_b({heisenberg(3), named("Q8", "i")}, 6);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(get(r.computed, "class_size"), "6");
    EXPECT_EQ(get(r.computed, "eta"), "6");
    EXPECT_EQ(get(r.expected, "class_size_product"), "6");
    EXPECT_EQ(get(r.expected, "eta_product"), "6");
    EXPECT_EQ(get(r.computed, "in_Sn"), "true");

    const auto r2 = verify_theorem_b({cyclic(4)}, 1);
    EXPECT_TRUE(r2.pass);
    EXPECT_EQ(get(r2.computed, "class_size"), "1");
    EXPECT_EQ(get(r2.computed, "eta"), "1");

    const auto r3 = verify_theorem_b({tower(2, 2)}, 3);
    EXPECT_TRUE(r3.pass);
    EXPECT_EQ(get(r3.computed, "class_size"), "4");
    EXPECT_EQ(get(r3.computed, "eta"), "3");
}

TEST(VerifyTheoremB, DefaultNIsEta) {
    const auto r = verify_theorem_b({heisenberg(3), tower(2, 1)});
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(get(r.params, "n"), get(r.computed, "eta"));
}

TEST(VerifyTheoremB, RejectsRepeatedPrimes) {
    EXPECT_THROW(verify_theorem_b({heisenberg(3), cyclic(9)}, 6), PreconditionError);
}

TEST(VerifyTheoremC, Examples) {
    const auto r = verify_theorem_c(heisenberg(3).group);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(get(r.computed, "arm_i"), "3");
    EXPECT_EQ(get(r.computed, "arm_ii"), "8");
    EXPECT_EQ(get(r.computed, "arm_iii"), "0");

    const auto d4 = catalog_instance("D4").group;
    EXPECT_TRUE(verify_theorem_c(d4).pass);
    for (const auto& cls : all_classes(d4))
        if (cls.size() == 2) EXPECT_EQ(eta_of_class_square(d4, cls.rep).eta, 2u);

    const auto rc = verify_theorem_c(build_group(GroupSpec::cyclic(9)));
    EXPECT_TRUE(rc.pass);
    EXPECT_EQ(get(rc.computed, "arm_i"), "9");
}

TEST(VerifyLemma1, Examples) {
    const auto h = heisenberg(3);
    const auto z = center(h.group).at(1);
    const auto r = verify_lemma1(h.group, z, h.distinguished, h.group.invert(h.distinguished));
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(get(r.computed, "case"), "shrink");
    EXPECT_EQ(get(r.computed, "size_a"), "3");
    EXPECT_EQ(get(r.computed, "size_abar"), "1");
    EXPECT_EQ(get(r.computed, "eta_aa"), "3");
    EXPECT_EQ(get(r.computed, "kernel_in_product"), "true");

    const auto q8 = catalog_instance("Q8");
    const auto i = q8.names.at("i");
    const auto rq = verify_lemma1(q8.group, q8.names.at("neg1"), i, q8.group.invert(i));
    EXPECT_TRUE(rq.pass);
    EXPECT_EQ(get(rq.computed, "case"), "shrink");
    EXPECT_EQ(get(rq.computed, "eta_aa"), "2");
    EXPECT_EQ(get(rq.expected, "eta_aa_min"), "2");

    const auto c9 = build_group(GroupSpec::cyclic(9));
    const auto rc = verify_lemma1(c9, Element::residue(3), Element::residue(1), Element::residue(8));
    EXPECT_TRUE(rc.pass);
    EXPECT_EQ(get(rc.computed, "case"), "same");
    EXPECT_EQ(get(rc.computed, "eta_ab"), "1");
}

TEST(VerifyLemma1, AllCentralElementsOnSmallPGroups) {
    for (const auto& f : testcorpus::small_groups()) {
        if (!f.group.prime() || f.group.order().to_u64() > 128u) continue;
        for (const auto& r : verify_lemma1_all(f.group)) EXPECT_TRUE(r.pass) << f.label() << " " << r.witnesses.size();
    }
}

TEST(VerifySizePDichotomy, Examples) {
    const auto h = heisenberg(5);
    const auto r = verify_size_p_dichotomy(h.group, h.distinguished);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(get(r.computed, "case"), "I");
    const auto rb = remark_b_group(2);
    const auto r2 = verify_size_p_dichotomy(rb.group, rb.distinguished);
    EXPECT_TRUE(r2.pass);
    EXPECT_EQ(get(r2.computed, "eta"), "2");
}

TEST(VerifyRemarkA, PassesForSmallPrimes) {
    for (std::uint64_t p : {3u, 5u}) {
        const auto r = verify_remark_a(p);
        EXPECT_TRUE(r.pass) << p;
        EXPECT_EQ(get(r.computed, "center_size"), std::to_string(p));
        EXPECT_EQ(get(r.computed, "case_I"), "true");
    }
}

TEST(VerifyRemarkB, PassesForSmallPrimes) {
    const auto r = verify_remark_b(3);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(get(r.computed, "order"), "2187");
    EXPECT_EQ(get(r.computed, "class_sizes"), "1,3,3");
    EXPECT_TRUE(verify_remark_b(2).pass);
}

TEST(VerifyConstructionLemma, Examples) {
    const auto r = verify_construction_lemma(cyclic(9), 3);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(get(r.computed, "eta0"), "1");
    EXPECT_EQ(get(r.computed, "eta"), "3");

    const auto r2 = verify_construction_lemma(tower(3, 1), 3);
    EXPECT_TRUE(r2.pass);
    EXPECT_EQ(get(r2.computed, "eta0"), "3");
    EXPECT_EQ(get(r2.computed, "eta"), "5");

    const auto r3 = verify_construction_lemma(cyclic(4), 2);
    EXPECT_TRUE(r3.pass);
    EXPECT_EQ(get(r3.computed, "eta"), "2");
}

TEST(VerifyTower, VerifierAndTightness) {
    for (std::uint64_t p : {2u, 3u})
        for (std::uint64_t n = 0; n <= 2; ++n) {
            EXPECT_TRUE(verify_tower(p, n).pass) << p << "," << n;
            const auto t = tower(p, n);
            EXPECT_EQ(verify_theorem_a(t.group, t.distinguished).tight, true) << p << "," << n;
        }
}

TEST(VerifyPropNotForSuper, Examples) {
    const auto r3 = verify_prop_notforsuper(3);
    EXPECT_TRUE(r3.pass);
    EXPECT_EQ(get(r3.computed, "class_sizes"), "1,6");
    const auto r5 = verify_prop_notforsuper(5);
    EXPECT_TRUE(r5.pass);
    EXPECT_EQ(get(r5.computed, "class_sizes"), "1,20");
    const auto r2 = verify_prop_notforsuper(2);
    EXPECT_TRUE(r2.pass);
    EXPECT_EQ(get(r2.expected, "nontrivial_class_size"), "skipped");
}

TEST(Sweep, DefaultCorpusPasses) {
    for (const auto& r : sweep(default_corpus())) EXPECT_TRUE(r.pass) << r.claim_id << " " << get(r.params, "group");
}

TEST(Property, ClassSquareBoundOnEveryClassOfEveryPGroup) {
    for (const auto& f : testcorpus::enumerable_groups()) {
        const auto p = f.group.prime();
        if (!p) continue;
        for (const auto& cls : all_classes(f.group)) {
            const auto sq = eta_of_class_square(f.group, cls.rep);
            ASSERT_TRUE(sq.n.has_value());
            ASSERT_GE(sq.eta, *sq.n * (*p - 1) + 1) << f.label();
        }
    }
}

TEST(Property, SizeTrichotomyOnEveryPGroup) {
    for (const auto& f : testcorpus::enumerable_groups()) {
        const auto p = f.group.prime();
        if (!p) continue;
        for (const auto& cls : all_classes(f.group)) {
            const auto sq = eta_of_class_square(f.group, cls.rep);
            if (sq.class_size == 1)
                ASSERT_EQ(sq.eta, 1u) << f.label();
            else if (sq.class_size == *p)
                ASSERT_EQ(sq.eta, *p) << f.label();
            else
                ASSERT_GE(sq.eta, 2 * *p - 1) << f.label();
        }
    }
}

TEST(Property, VerifiersAreDeterministic) {
    auto same = [](const TheoremReport& a, const TheoremReport& b) {
        return a.claim_id == b.claim_id && a.params == b.params && a.expected == b.expected &&
               a.computed == b.computed && a.pass == b.pass && a.tight == b.tight && a.witnesses == b.witnesses;
    };
    EXPECT_TRUE(same(verify_tower(3, 2), verify_tower(3, 2)));
    EXPECT_TRUE(same(verify_remark_b(3), verify_remark_b(3)));
    EXPECT_TRUE(same(verify_theorem_c(catalog_instance("M16").group), verify_theorem_c(catalog_instance("M16").group)));
}

TEST(VerifyConstructionLemma, RejectsSelfInverseBaseClass) {
    const auto q8 = catalog_instance("Q8");
    auto base = q8;
    base.distinguished = q8.names.at("i");
    EXPECT_THROW(verify_construction_lemma(base, 2), PreconditionError);
}

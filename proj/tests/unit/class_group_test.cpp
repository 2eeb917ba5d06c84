#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "closegap/class_group.hpp"
#include "closegap/errors.hpp"

using namespace closegap;

namespace {

std::vector<QuadraticForm> brute_reduced_forms(std::int64_t d) {
    std::vector<QuadraticForm> out;
    for (std::int64_t a = 1; 3 * a * a <= d; ++a)
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if ((b * b + d) % (4 * a)) continue;
            const std::int64_t c = (b * b + d) / (4 * a);
            if (c < a || (b < 0 && c == a)) continue;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            out.push_back({a, b, c});
        }
    std::sort(out.begin(), out.end());
    return out;
}

// f(px + qy, rx + sy) for a matrix of determinant 1
QuadraticForm act(const QuadraticForm& f, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
    return {f.a * p * p + f.b * p * r + f.c * r * r, 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s,
            f.a * q * q + f.b * q * s + f.c * s * s};
}

// Search SL(2,Z) matrices with small entries for one carrying f to g.
bool sl2z_equivalent(const QuadraticForm& f, const QuadraticForm& g, int bound = 12) {
    for (int p = -bound; p <= bound; ++p)
        for (int q = -bound; q <= bound; ++q)
            for (int r = -bound; r <= bound; ++r)
                for (int s = -bound; s <= bound; ++s)
                    if (p * s - q * r == 1 && act(f, p, q, r, s) == g) return true;
    return false;
}

std::vector<std::int64_t> fundamental_upto(std::int64_t n) {
    std::vector<std::int64_t> v;
    for (std::int64_t d = 3; d <= n; ++d)
        if (is_fundamental(d)) v.push_back(d);
    return v;
}

}  // namespace

TEST(QuadraticFormTest, DiscriminantAndDefiniteness) {
    const QuadraticForm f{2, 1, 5};
    EXPECT_EQ(f.discriminant(), -39);
    EXPECT_TRUE(f.positive_definite());
    EXPECT_FALSE((QuadraticForm{1, 3, 1}).positive_definite());
    EXPECT_FALSE((QuadraticForm{-1, 1, -10}).positive_definite());
    EXPECT_EQ(f(1, 1), 8);
}

TEST(Reduce, OutputIsReducedAndEquivalent) {
    std::mt19937_64 rng(7);
    const QuadraticForm base[] = {{1, 1, 10}, {2, 1, 5}, {3, 3, 4}, {2, 2, 11}, {5, 4, 7}};
    std::uniform_int_distribution<int> e(-4, 4);
    for (const auto& f : base) {
        for (int trial = 0; trial < 50; ++trial) {
            int p, q, r, s;
            do {
                p = e(rng), q = e(rng), r = e(rng), s = e(rng);
            } while (p * s - q * r != 1);
            const QuadraticForm g = act(f, p, q, r, s);
            const ReducedForm rf = reduce(g);
            EXPECT_TRUE(is_reduced(rf));
            EXPECT_EQ(rf.form().discriminant(), f.discriminant());
            EXPECT_EQ(rf, reduce(f));
            EXPECT_TRUE(sl2z_equivalent(g, rf.form(), 20) || sl2z_equivalent(rf.form(), g, 20));
        }
    }
}

TEST(Reduce, FixesReducedForms) {
    for (std::int64_t d : fundamental_upto(500))
        for (const auto& f : brute_reduced_forms(d)) EXPECT_EQ(reduce(f).form(), f);
}

TEST(Reduce, BoundaryNormalization) {
    EXPECT_EQ(reduce({2, -2, 3}).form(), (QuadraticForm{2, 2, 3}));
    EXPECT_EQ(reduce({3, -1, 3}).form(), (QuadraticForm{3, 1, 3}));
    EXPECT_FALSE(is_reduced({2, -2, 3}));
    EXPECT_FALSE(is_reduced({3, -1, 3}));
    EXPECT_THROW(reduce({1, 3, 1}), DomainError);
    EXPECT_THROW(reduce({-2, 1, -5}), DomainError);
}

TEST(EnumerateClasses, MatchesBruteForceEnumeration) {
    for (std::int64_t d : fundamental_upto(5000)) {
        const auto D = make_fundamental_discriminant(d);
        const auto classes = enumerate_classes(D);
        std::vector<QuadraticForm> got;
        for (const auto& f : classes) got.push_back(f.form());
        ASSERT_EQ(got, brute_reduced_forms(d)) << d;
        EXPECT_EQ(class_number(D), static_cast<long>(classes.size()));
    }
}

TEST(EnumerateClasses, KnownClassNumbers) {
    const std::map<std::int64_t, long> known{{3, 1}, {4, 1}, {7, 1}, {8, 1}, {23, 3}, {39, 4}, {47, 5},
                                            {56, 4}, {163, 1}, {420, 8}, {5460, 16}};
    for (auto [d, h] : known) EXPECT_EQ(class_number(make_fundamental_discriminant(d)), h) << d;
}

TEST(EnumerateClasses, DistinctClassesAreInequivalent) {
    const auto D = make_fundamental_discriminant(39);
    const auto cls = enumerate_classes(D);
    for (std::size_t i = 0; i < cls.size(); ++i)
        for (std::size_t j = i + 1; j < cls.size(); ++j) EXPECT_FALSE(sl2z_equivalent(cls[i], cls[j], 8));
}

TEST(Compose, GroupAxiomsForSmallDiscriminants) {
    std::mt19937_64 rng(11);
    for (std::int64_t d : fundamental_upto(2000)) {
        const auto D = make_fundamental_discriminant(d);
        const auto cls = enumerate_classes(D);
        const auto e = principal_form(D);
        std::uniform_int_distribution<std::size_t> pick(0, cls.size() - 1);
        for (const auto& f : cls) {
            ASSERT_EQ(compose(f, e, D), f);
            ASSERT_EQ(compose(e, f, D), f);
            ASSERT_EQ(compose(f, f.inverse(), D), e);
        }
        for (int trial = 0; trial < 20; ++trial) {
            const auto& x = cls[pick(rng)];
            const auto& y = cls[pick(rng)];
            const auto& z = cls[pick(rng)];
            ASSERT_EQ(compose(x, y, D), compose(y, x, D));
            ASSERT_EQ(compose(compose(x, y, D), z, D), compose(x, compose(y, z, D), D)) << d;
        }
        // closure: left multiplication permutes the classes
        const auto& x = cls[pick(rng)];
        std::set<QuadraticForm> image;
        for (const auto& f : cls) image.insert(compose(x, f, D).form());
        ASSERT_EQ(image.size(), cls.size());
    }
}

TEST(Compose, ProductRepresentsProductOfValues) {
    // Q1(x1,y1) Q2(x2,y2) is represented by Q1 Q2 when the values are coprime.
    const auto D = make_fundamental_discriminant(56);
    const auto cls = enumerate_classes(D);
    for (const auto& f : cls)
        for (const auto& g : cls) {
            const auto fg = compose(f, g, D);
            const std::int64_t target = f.a() * g.a();
            if (std::gcd(f.a(), g.a()) != 1) continue;
            bool found = false;
            for (int x = -30; x <= 30 && !found; ++x)
                for (int y = -30; y <= 30 && !found; ++y) found = fg.form()(x, y) == target;
            EXPECT_TRUE(found);
        }
}

TEST(Compose, RejectsMismatchedDiscriminant) {
    const auto D39 = make_fundamental_discriminant(39);
    const auto D23 = make_fundamental_discriminant(23);
    const auto f = enumerate_classes(D39)[1];
    const auto g = enumerate_classes(D23)[1];
    EXPECT_THROW(compose(f, g, D39), DiscriminantMismatch);
    EXPECT_THROW(compose(f, f, D23), DiscriminantMismatch);
}

TEST(GroupStructure, ProductIsClassNumberAndFactorsDivide) {
    for (std::int64_t d : fundamental_upto(3000)) {
        const auto D = make_fundamental_discriminant(d);
        const auto gs = group_structure(D);
        long prod = 1;
        for (std::size_t i = 0; i < gs.size(); ++i) {
            prod *= gs[i];
            if (i) {
                ASSERT_EQ(gs[i] % gs[i - 1], 0) << d;
            }
        }
        ASSERT_EQ(prod, class_number(D)) << d;
        // the 2-rank is g - 1
        const long two_rank = std::count_if(gs.begin(), gs.end(), [](long n) { return n % 2 == 0; });
        ASSERT_EQ(two_rank, D.num_prime_factors() - 1) << d;
    }
}

TEST(GroupStructure, KnownGroups) {
    EXPECT_EQ(group_structure(make_fundamental_discriminant(39)), (std::vector<long>{4}));
    EXPECT_EQ(group_structure(make_fundamental_discriminant(163)), (std::vector<long>{1}));
    EXPECT_EQ(group_structure(make_fundamental_discriminant(420)), (std::vector<long>{2, 2, 2}));
    EXPECT_EQ(group_structure(make_fundamental_discriminant(5460)), (std::vector<long>{2, 2, 2, 2}));
}

TEST(RepresentedResidues, MatchDirectEvaluation) {
    for (std::int64_t d : fundamental_upto(400)) {
        const auto D = make_fundamental_discriminant(d);
        for (const auto& f : enumerate_classes(D)) {
            std::set<std::int64_t> direct;
            for (std::int64_t x = 0; x < d; ++x)
                for (std::int64_t y = 0; y < d; ++y) {
                    const std::int64_t v = f.form()(x, y) % d;
                    if (std::gcd(v, d) == 1) direct.insert(v);
                }
            ASSERT_EQ(std::vector<std::int64_t>(direct.begin(), direct.end()), represented_residues(f, D)) << d;
        }
    }
}

TEST(GenusReport, WorkedExampleThirtyNine) {
    const auto r = genus_report(make_fundamental_discriminant(39));
    EXPECT_EQ(r.h, 4);
    EXPECT_EQ(r.g, 2);
    EXPECT_EQ(r.num_genera, 2);
    EXPECT_EQ(r.p, 2);
    std::vector<QuadraticForm> forms;
    for (const auto& f : r.classes) forms.push_back(f.form());
    EXPECT_EQ(forms, (std::vector<QuadraticForm>{{1, 1, 10}, {2, -1, 5}, {2, 1, 5}, {3, 3, 4}}));
    EXPECT_EQ(r.genus_index, (std::vector<int>{0, 1, 1, 0}));
    ASSERT_EQ(r.genus_residues.size(), 2u);
    EXPECT_EQ(r.genus_residues[0], (std::vector<std::int64_t>{1, 4, 10, 16, 22, 25}));
    EXPECT_EQ(r.genus_residues[1], (std::vector<std::int64_t>{2, 5, 8, 11, 20, 32}));
    EXPECT_EQ(r.group_structure, (std::vector<long>{4}));
}

TEST(GenusReport, PrincipalGenusIsTheSquares) {
    for (std::int64_t d : fundamental_upto(1500)) {
        const auto D = make_fundamental_discriminant(d);
        const auto r = genus_report(D);
        std::set<QuadraticForm> squares;
        for (const auto& f : r.classes) squares.insert(compose(f, f, D).form());
        std::set<QuadraticForm> principal;
        for (std::size_t i = 0; i < r.classes.size(); ++i)
            if (r.genus_index[i] == 0) principal.insert(r.classes[i].form());
        ASSERT_EQ(squares, principal) << d;
        ASSERT_EQ(r.p, static_cast<long>(squares.size()));
        ASSERT_EQ(r.h, r.p * (1L << (r.g - 1)));
        ASSERT_EQ(r.num_genera, 1L << (r.g - 1));
    }
}

TEST(GenusReport, FormsInOneGenusShareResidues) {
    const auto D = make_fundamental_discriminant(5460);
    const auto r = genus_report(D);
    for (std::size_t i = 0; i < r.classes.size(); ++i)
        EXPECT_EQ(represented_residues(r.classes[i], D), r.genus_residues[r.genus_index[i]]);
}

TEST(Printing, FormsPrintAsTriples) {
    std::ostringstream os;
    os << enumerate_classes(make_fundamental_discriminant(39))[1];
    EXPECT_EQ(os.str(), "(2,-1,5)");
}

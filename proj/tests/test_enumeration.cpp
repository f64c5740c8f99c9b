#include <cstdlib>
#include <map>
#include <set>
#include <tuple>

#include <gtest/gtest.h>

#include "astz/enumeration.hpp"
#include "astz/verify.hpp"
#include "oracle.hpp"

using namespace astz;

namespace {

using Key = std::tuple<int, int, int, int, int>;  // i, j, mu, p, q

std::map<Key, long> brute_counts(int n, int l) {
    std::map<Key, long> out;
    enumerate_astz(n, l, {.r = 1}, [&](const Astz& a) {
        auto [i, j] = *ij_of(a);
        auto s = astz_stats(a);
        ++out[{i, j, s.mu, s.p, s.q}];
    });
    return out;
}

}  // namespace

TEST(Enumerate, SpecialFilters) {
    EnumFilter f;
    f.right_zero_positions = std::set<int>{1, 3};
    EXPECT_EQ(collect_astz(3, 2, f).size(), 5u);
    EXPECT_EQ(collect_astz(3, 2, {.i = 3, .j = 3}).size(), 1u);
    EXPECT_TRUE(collect_astz(3, 2, {.i = 3, .j = 2}).empty());
    EXPECT_EQ(collect_astz(3, 2, {.i = 3, .j = 3}).front(), unique_diagonal_astz(3, 3, 2));
}

TEST(Enumerate, FillAndPathRoutesAgreeOnFilters) {
    for (int n = 1; n <= 4; ++n)
        for (int l = 2; l <= 4; ++l) {
            std::set<Astz> all;
            for (const auto& a : collect_astz(n, l)) all.insert(a);
            EXPECT_EQ(all.size(), collect_astz(n, l).size());  // no duplicates
            std::set<Astz> single;
            for (const auto& a : collect_astz(n, l, {.r = 1})) single.insert(a);
            std::set<Astz> want;
            for (const auto& a : all)
                if (astz_stats(a).r == 1) want.insert(a);
            EXPECT_EQ(single, want);
        }
}

TEST(Enumerate, OuterRowsAreForced) {
    for (int n = 2; n <= 5; ++n)
        for (int l = 2; l <= 4; ++l)
            enumerate_astz(n, l, {.r = 1}, [&](const Astz& a) {
                auto [i, j] = *ij_of(a);
                auto plain = [&](int r) {
                    const auto& row = a.rows[std::size_t(r)];
                    for (std::size_t c = 0; c + 1 < row.size(); ++c)
                        if (row[c] != 0) return false;
                    return row.back() == 1;
                };
                for (int r = 0; r < n - j; ++r) EXPECT_TRUE(plain(r));
                for (int r = n - i + 1; r < n; ++r) EXPECT_TRUE(plain(r));
            });
}

TEST(Enumerate, Partitions) {
    EXPECT_TRUE(collect_partitions(3, 1, 4).empty());
    int mq = 0;
    enumerate_partitions(5, 1, 5, [&](const Csspp& c) {
        auto s = csspp_stats(c, 1);
        if (s.mu == 1 && s.p == 0 && s.q == 1) ++mq;
    });
    EXPECT_EQ(mq, 12);
    for (int j = 1; j <= 6; ++j)
        for (int k = 1; k <= 3; ++k) {
            auto got = collect_partitions(j, k, j);
            auto want = oracle::one_row_partitions(j, j + k);
            EXPECT_EQ(got.size(), want.size());
        }
    long shape31 = 0;
    enumerate_shape({3, 1}, 1, [&](const Csspp& c) {
        EXPECT_NO_THROW(validate_csspp(c.rows, 1));
        ++shape31;
    });
    EXPECT_EQ(shape31, 7);
}

TEST(Enumerate, CssppAllShapesAreValidAndDistinct) {
    for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= 2; ++k) {
            std::set<Csspp> seen;
            enumerate_csspp(n, k, [&](const Csspp& c) {
                EXPECT_NO_THROW(validate_csspp(c.rows, k));
                EXPECT_LE(c.rows.empty() ? 0 : int(c.rows[0].size()), n);
                EXPECT_TRUE(seen.insert(c).second);
            });
            EXPECT_FALSE(seen.empty());
        }
}

TEST(Enumerate, ScaleGuard) {
    ::unsetenv("ASTZ_SCALE_OVERRIDE");
    EXPECT_THROW(collect_astz(7, 2), scale_error);
    EXPECT_THROW(collect_astz(2, 7), scale_error);
    EXPECT_THROW(genfunc_det(9, 2), scale_error);
    ::setenv("ASTZ_SCALE_OVERRIDE", "1", 1);
    EXPECT_NO_THROW(guard_scale(7, 2));
    ::unsetenv("ASTZ_SCALE_OVERRIDE");
}

TEST(Counts, TheoremExamples) {
    EXPECT_EQ(theorem1_count(2, 8, 4, 2, 1, 2), 98);
    for (int j = 1; j <= 6; ++j) EXPECT_EQ(theorem1_count(j, j, 3, 0, 0, 0), 1);
    EXPECT_EQ(theorem1_count(3, 3, 3, 1, 0, 0), 0);
    EXPECT_EQ(theorem1_count(4, 2, 3, 0, 0, 0), 0);
    EXPECT_EQ(theorem1_count(4, 2, 3, 1, 1, 0), 0);
}

TEST(Counts, TheoremMatchesBruteForce) {
    for (int n = 1; n <= 5; ++n)
        for (int l = 2; l <= 4; ++l) {
            auto counts = brute_counts(n, l);
            for (int j = 1; j <= n; ++j)
                for (int i = 1; i <= n; ++i)
                    for (int mu = 0; mu <= j; ++mu)
                        for (int p = 0; p <= 1; ++p)
                            for (int q = 0; q <= j; ++q) {
                                Key key{i, j, mu, p, q};
                                long got = counts.count(key) ? counts[key] : 0;
                                ASSERT_EQ(Int(got), theorem1_count(i, j, l, mu, p, q))
                                    << "n=" << n << " l=" << l << " i=" << i << " j=" << j << " mu=" << mu
                                    << " p=" << p << " q=" << q;
                            }
        }
}

TEST(Counts, PartitionFormula) {
    EXPECT_EQ(csspp_count_formula(8, 3, 2, 1, 2), 315);
    EXPECT_EQ(csspp_count_formula(5, 1, 1, 0, 1), 12);
    for (int j = 1; j <= 6; ++j)
        for (int k = 1; k <= 3; ++k) {
            EXPECT_EQ(csspp_count_formula(j, k, 0, 0, 0), 1);
            for (int d = 1; d <= k; ++d) {
                std::map<std::tuple<int, int, int>, long> counts;
                enumerate_partitions(j, k, j, [&](const Csspp& c) {
                    auto s = csspp_stats(c, d);
                    ++counts[{s.mu, s.p, s.q}];
                });
                for (int mu = 0; mu <= j; ++mu)
                    for (int p = 0; p <= 1; ++p)
                        for (int q = 0; q <= j; ++q) {
                            long got = counts.count({mu, p, q}) ? counts[{mu, p, q}] : 0;
                            EXPECT_EQ(Int(got), csspp_count_formula(j, k, mu, p, q))
                                << j << " " << k << " " << d << " " << mu << p << q;
                            Int tele = 0;
                            for (int i = 1; i <= j; ++i) tele += theorem1_count(i, j, k + 1, mu, p, q);
                            EXPECT_EQ(tele, csspp_count_formula(j, k, mu, p, q));
                        }
            }
        }
}

TEST(Genfunc, SmallCases) {
    EXPECT_EQ(genfunc_det(1, 2).to_string(), "1 + R");
    EXPECT_EQ(genfunc_det(1, 2), astz_weight_sum(1, 2));
    EXPECT_EQ(genfunc_det(2, 2), astz_weight_sum(2, 2));
    EXPECT_EQ(genfunc_det(3, 1), astz_weight_sum(3, 1));
    EXPECT_EQ(genfunc_det(3, 1), csspp_weight_sum(3, 0, 0));
}

TEST(Genfunc, MatchesBothWeightSums) {
    for (int n = 1; n <= 3; ++n)
        for (int l = 2; l <= 4; ++l) {
            MultiPoly det = genfunc_det(n, l);
            EXPECT_EQ(det, astz_weight_sum(n, l)) << n << " " << l;
            for (int d = 1; d < l; ++d) EXPECT_EQ(det, csspp_weight_sum(n, l - 1, d)) << n << " " << l << " " << d;
            // at M = R = P = Q = 1 it counts the arrays
            EXPECT_EQ(det.evaluate({1, 1, 1, 1}), Int(collect_astz(n, l).size()));
        }
}

TEST(Genfunc, PolynomialAtOneCountsTriangles) {
    // at all-ones the (P+Q-M) factor is 1, so the l = 1 determinant just counts triangles
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(genfunc_det(n, 1).evaluate({1, 1, 1, 1}), Int(collect_astz(n, 1).size()));
}

TEST(ZPoly, Recurrences) {
    for (int n = 1; n <= 4; ++n)
        for (int l = 2; l <= 4; ++l) {
            EXPECT_EQ(z_poly(n, l, n, n), MultiPoly::var(R));
            if (n >= 2) {
                EXPECT_TRUE(z_poly(n, l, 2, 1).is_zero());
            }
            for (int i = 2; i <= n; ++i) EXPECT_EQ(z_poly(n, l, i, n), z_poly(n - 1, l + 2, i - 1, n - 1));
        }
}

TEST(Verify, SuiteNamesAndUnknown) {
    for (const auto& name : suite_names()) EXPECT_NO_THROW(default_bounds(name));
    EXPECT_THROW(verify_suite("nope"), std::invalid_argument);
}

TEST(Verify, FastSuitesPass) {
    auto c = verify_suite("counterexample");
    EXPECT_EQ(c.status, "pass");
    EXPECT_EQ(c.counts["astz"], 5);
    EXPECT_EQ(c.counts["csspp"], 7);
    auto j = c.to_json();
    for (const char* key : {"suite", "bounds", "status", "counterexample", "counts"}) EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(verify_suite("theorem1", Bounds{4, 3}).status, "pass");
    EXPECT_EQ(verify_suite("roundtrip", Bounds{3, 3}).status, "pass");
    EXPECT_EQ(verify_suite("qast", Bounds{4, 1}).status, "pass");
}

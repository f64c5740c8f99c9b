#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bijection.hpp"
#include "enumeration.hpp"
#include "io.hpp"

namespace astz {

struct Bounds {
    int n_max = 0;
    int l_max = 0;
};

struct Report {
    std::string suite;
    json bounds = json::object();
    std::string status = "pass";  // pass | fail | warn
    json counterexample = nullptr;
    json counts = json::object();

    bool failed() const { return status == "fail"; }

    void fail(json example) {
        if (status != "fail") counterexample = std::move(example);
        status = "fail";
    }
    void warn() {
        if (status == "pass") status = "warn";
    }

    json to_json() const {
        return json{{"suite", suite}, {"bounds", bounds}, {"status", status}, {"counterexample", counterexample},
                    {"counts", counts}};
    }
};

namespace suites {

inline std::string key_of(const Astz& a) { return astz::to_json(a).dump(); }

// Proposition: the three z identities, checked against array-filled data.
inline Report proposition(Bounds b) {
    Report rep{"proposition"};
    rep.bounds = {{"n_max", b.n_max}, {"l_max", b.l_max}};
    long checked = 0;
    auto z_arrays = [&](int n, int l) {
        std::map<std::pair<int, int>, MultiPoly> z;
        enumerate_astz(n, l, {}, [&](const Astz& a) {
            if (auto ij = ij_of(a)) z[*ij] += weight_of(astz_stats(a));
        });
        return z;
    };
    for (int l = 2; l <= b.l_max; ++l)
        for (int n = 1; n <= b.n_max; ++n) {
            auto za = z_arrays(n, l);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    MultiPoly z = za.count({i, j}) ? za[{i, j}] : MultiPoly();
                    MultiPoly zp = z_poly(n, l, i, j);
                    auto ex = [&](const char* what) {
                        return json{{"identity", what}, {"n", n}, {"l", l}, {"i", i}, {"j", j},
                                    {"z", z.to_string()}};
                    };
                    ++checked;
                    if (!(z == zp)) rep.fail(ex("paths-vs-arrays"));
                    if (i > j && !z.is_zero()) rep.fail(ex("i>j"));
                    if (i == j && !(z == MultiPoly::var(R))) rep.fail(ex("i=j"));
                    if (j < n && !(zp == z_poly(n - 1, l, i, j))) rep.fail(ex("remove top row"));
                    if (j == n && i > 1 && !(zp == z_poly(n - 1, l + 2, i - 1, n - 1))) rep.fail(ex("remove bottom row"));
                    for_each_single(n, l, i, j, [&](const Astz& a) {
                        for (int r = 0; r < n; ++r) {
                            bool edge = r >= n - (i - 1) || r < n - j;
                            if (!edge) continue;
                            std::vector<int> plain(a.rows[r].size(), 0);
                            plain.back() = 1;
                            if (a.rows[r] != plain) rep.fail(json{{"identity", "outer rows"}, {"array", to_json(a)}});
                        }
                    });
                }
        }
    rep.counts["checked"] = checked;
    return rep;
}

inline Report theorem1(Bounds b) {
    Report rep{"theorem1"};
    rep.bounds = {{"j_max", b.n_max}, {"l_max", b.l_max}};
    long tuples = 0, objects = 0, lgv = 0, skipped = 0;
    for (int l = 2; l <= b.l_max; ++l)
        for (int j = 1; j <= b.n_max; ++j)
            for (int n = j; n <= b.n_max; ++n)
                for (int i = 1; i <= n; ++i) {
                    std::map<std::array<int, 3>, long> counts;
                    for_each_single(n, l, i, j, [&](const Astz& a) {
                        auto s = astz_stats(a);
                        ++counts[{s.mu, s.p, s.q}];
                        ++objects;
                    });
                    for (int mu = 0; mu <= j + 1; ++mu)
                        for (int p = 0; p <= 1; ++p)
                            for (int q = 0; q <= j + 1; ++q) {
                                ++tuples;
                                long got = counts.count({mu, p, q}) ? counts[{mu, p, q}] : 0;
                                Int want = theorem1_count(i, j, l, mu, p, q);
                                if (Int(got) != want)
                                    rep.fail(json{{"n", n}, {"l", l}, {"i", i}, {"j", j}, {"mu", mu}, {"p", p},
                                                  {"q", q}, {"enumerated", got}, {"formula", want.str()}});
                                if (n != j || i >= j) continue;
                                // path-pair count and the telescoping identity on the same start/end points
                                Point sx{-mu, -j - i - l + 4 + mu + q}, sy{-mu - p - q, -j + i + mu + p + q};
                                Point ex{0, -1}, ey{0, 0};
                                if (sx.x > ex.x || sx.y > ex.y || sy.x > ey.x || sy.y > ey.y) {
                                    // no path pairs exist; only q = j-1 may still have a nonzero count
                                    ++skipped;
                                    if (want != 0 && q != j - 1)
                                        rep.fail(json{{"identity", "lgv geometry"}, {"i", i}, {"j", j}, {"l", l},
                                                      {"mu", mu}, {"p", p}, {"q", q}});
                                    continue;
                                }
                                Int pairs = lgv_count({sx, sy}, {ex, ey});
                                ++lgv;
                                if (pairs != want)
                                    rep.fail(json{{"identity", "lgv"}, {"i", i}, {"j", j}, {"l", l}, {"mu", mu}, {"p", p},
                                                  {"q", q}});
                                if (i >= 2) {
                                    Point sx1{-mu, -j - (i - 1) - l + 4 + mu + q};
                                    Point sy1{-mu - p - q, -j + (i - 1) + mu + p + q};
                                    Int lhs = pairs + lgv_count({sx1, sy1}, {ex, ey});
                                    Int rhs = lgv_count({sx, sy - Point{0, 1}}, {ex - Point{0, 1}, ey});
                                    if (lhs != rhs)
                                        rep.fail(json{{"identity", "telescoping pairs"}, {"i", i}, {"j", j}, {"l", l},
                                                      {"mu", mu}, {"p", p}, {"q", q}});
                                }
                            }
                }
    rep.counts = {{"tuples", tuples}, {"objects", objects}, {"lgv_checks", lgv}, {"lgv_degenerate", skipped}};
    return rep;
}

inline Report eq6(Bounds b) {
    Report rep{"eq6"};
    rep.bounds = {{"j_max", b.n_max}, {"k_max", b.l_max}};
    long checks = 0;
    for (int j = 1; j <= b.n_max; ++j)
        for (int k = 1; k <= b.l_max; ++k) {
            auto parts = collect_partitions(j, k, j);
            for (int d = 1; d <= k; ++d) {
                std::map<std::array<int, 3>, long> counts;
                for (const auto& c : parts) {
                    auto s = csspp_stats(c, d);
                    ++counts[{s.mu, s.p, s.q}];
                }
                for (int mu = 0; mu <= j; ++mu)
                    for (int p = 0; p <= 1; ++p)
                        for (int q = 0; q <= j; ++q) {
                            ++checks;
                            long got = counts.count({mu, p, q}) ? counts[{mu, p, q}] : 0;
                            Int want = csspp_count_formula(j, k, mu, p, q);
                            if (Int(got) != want)
                                rep.fail(json{{"j", j}, {"k", k}, {"d", d}, {"mu", mu}, {"p", p}, {"q", q},
                                              {"enumerated", got}, {"formula", want.str()}});
                            if (d == 1) {
                                Int tele = 0;
                                for (int i = 1; i <= j; ++i) tele += theorem1_count(i, j, k + 1, mu, p, q);
                                if (tele != want)
                                    rep.fail(json{{"identity", "sum over i"}, {"j", j}, {"k", k}, {"mu", mu}, {"p", p},
                                                  {"q", q}});
                            }
                        }
            }
        }
    rep.counts["checks"] = checks;
    return rep;
}

inline Report genfunc(Bounds b) {
    Report rep{"genfunc"};
    rep.bounds = {{"n_max", b.n_max}, {"l_max", b.l_max}};
    long checks = 0;
    for (int n = 1; n <= b.n_max; ++n)
        for (int l = 2; l <= b.l_max; ++l) {
            std::string det = genfunc_det(n, l).to_string();
            std::string arr = astz_weight_sum(n, l).to_string();
            ++checks;
            if (det != arr) rep.fail(json{{"n", n}, {"l", l}, {"side", "astz"}, {"det", det}, {"brute", arr}});
            for (int d = 1; d <= l - 1; ++d) {
                std::string cs = csspp_weight_sum(n, l - 1, d).to_string();
                ++checks;
                if (det != cs)
                    rep.fail(json{{"n", n}, {"l", l}, {"d", d}, {"side", "csspp"}, {"det", det}, {"brute", cs}});
            }
        }
    rep.counts["checks"] = checks;
    return rep;
}

// Both maps on every r=1 array and every one-row partition, for every configuration.
inline Report roundtrip(Bounds b) {
    Report rep{"roundtrip"};
    rep.bounds = {{"n_max", b.n_max}, {"l_max", b.l_max}};
    long forward = 0, backward = 0, weight_bad = 0, distinct_pairs = 0, equal_pairs = 0;
    for (int n = 1; n <= b.n_max; ++n)
        for (int l = 2; l <= b.l_max; ++l) {
            auto singles = collect_astz(n, l, EnumFilter{.r = 1});
            std::vector<Csspp> parts;
            for (int j = 1; j <= n; ++j)
                for (auto& c : collect_partitions(n, l - 1, j)) parts.push_back(c);
            for (int d = 1; d <= l - 1; ++d) {
                std::vector<std::vector<Csspp>> images;
                for (const auto& cfg : all_configs(l)) {
                    if (cfg.d != d) continue;
                    std::vector<Csspp> img;
                    std::set<Csspp> seen;
                    for (const auto& a : singles) {
                        ++forward;
                        auto ex = [&](const char* what) {
                            return json{{"check", what}, {"n", n}, {"config", to_json(cfg)}, {"array", to_json(a)}};
                        };
                        try {
                            Csspp c = astz_to_partition(a, cfg);
                            auto sa = astz_stats(a);
                            auto sc = csspp_stats(c, d);
                            if (sa.mu != sc.mu || sa.p != sc.p || sa.q != sc.q) {
                                ++weight_bad;
                                rep.fail(ex("weight"));
                            }
                            if (!seen.insert(c).second) rep.fail(ex("injective"));
                            if (partition_to_astz(c, n, cfg) != a) rep.fail(ex("inverse after forward"));
                            img.push_back(c);
                        } catch (const std::exception& e) {
                            auto j = ex("exception");
                            j["what"] = e.what();
                            rep.fail(j);
                        }
                    }
                    for (const auto& c : parts) {
                        ++backward;
                        try {
                            if (astz_to_partition(partition_to_astz(c, n, cfg), cfg) != c)
                                rep.fail(json{{"check", "forward after inverse"}, {"n", n}, {"config", to_json(cfg)},
                                              {"partition", to_json(c)}});
                        } catch (const std::exception& e) {
                            rep.fail(json{{"check", "exception"}, {"n", n}, {"config", to_json(cfg)},
                                          {"partition", to_json(c)}, {"what", e.what()}});
                        }
                    }
                    if (seen.size() != parts.size())
                        rep.fail(json{{"check", "cardinality"}, {"n", n}, {"l", l}, {"config", to_json(cfg)}});
                    images.push_back(img);
                }
                for (std::size_t x = 0; x < images.size(); ++x)
                    for (std::size_t y = x + 1; y < images.size(); ++y) (images[x] == images[y] ? equal_pairs : distinct_pairs)++;
            }
        }
    rep.counts = {{"forward", forward},
                  {"backward", backward},
                  {"weight_mismatches", weight_bad},
                  {"distinct_variant_pairs", distinct_pairs},
                  {"coinciding_variant_pairs", equal_pairs}};
    return rep;
}

// inv(A) = j - mu - p - q on r=1 arrays, and the joint distribution of the five statistics.
inline Report inversion(Bounds b, Bounds dist = {4, 4}) {
    Report rep{"inversion"};
    rep.bounds = {{"n_max", b.n_max}, {"l_max", b.l_max}, {"distribution_n_max", dist.n_max},
                  {"distribution_l_max", dist.l_max}};
    long instances = 0;
    for (int n = 1; n <= b.n_max; ++n)
        for (int l = 2; l <= b.l_max; ++l)
            enumerate_astz(n, l, EnumFilter{.r = 1}, [&](const Astz& a) {
                ++instances;
                auto s = astz_stats(a);
                int j = ij_of(a)->second;
                if (s.inv != j - s.mu - s.p - s.q) rep.fail(json{{"array", to_json(a)}, {"inv", s.inv}, {"j", j}});
            });
    json warnings = json::array();
    long dist_checks = 0;
    for (int n = 1; n <= dist.n_max; ++n)
        for (int l = 2; l <= dist.l_max; ++l) {
            std::map<StatProfile, long> da;
            enumerate_astz(n, l, {}, [&](const Astz& a) { ++da[astz_stats(a)]; });
            for (int d = 1; d <= l - 1; ++d) {
                std::map<StatProfile, long> dc;
                enumerate_csspp(n, l - 1, [&](const Csspp& c) { ++dc[csspp_stats(c, d)]; });
                ++dist_checks;
                if (dc == da) continue;
                if (d == l - 1) {
                    rep.fail(json{{"distribution", "d = l-1"}, {"n", n}, {"l", l}});
                } else {
                    warnings.push_back(json{{"n", n}, {"l", l}, {"d", d}});
                    rep.warn();
                }
            }
        }
    rep.counts = {{"instances", instances}, {"distribution_checks", dist_checks}, {"conjecture_warnings", warnings}};
    return rep;
}

inline Report qast(Bounds b) {
    Report rep{"qast"};
    rep.bounds = {{"n_max", b.n_max}};
    json differ = json::array();
    for (int n = 1; n <= b.n_max; ++n) {
        std::string det = genfunc_det(n, 1).to_string();
        std::multiset<std::string> wa, wc;
        MultiPoly sa, sc;
        enumerate_astz(n, 1, {}, [&](const Astz& a) {
            auto w = qast_weight(a);
            sa += w;
            wa.insert(w.to_string());
        });
        enumerate_csspp(n, 0, [&](const Csspp& c) {
            auto w = qast_weight(c);
            sc += w;
            wc.insert(w.to_string());
        });
        if (det != sa.to_string() || det != sc.to_string())
            rep.fail(json{{"n", n}, {"det", det}, {"qast", sa.to_string()}, {"csspp", sc.to_string()}});
        if (wa != wc) differ.push_back(n);
    }
    rep.counts = {{"multisets_differ_at", differ}};
    if (differ.empty()) rep.fail(json{{"check", "no n with differing weight multisets"}});
    return rep;
}

inline Report counterexample(Bounds = {}) {
    Report rep{"counterexample"};
    rep.bounds = {{"n", 3}, {"l", 2}};
    EnumFilter f;
    f.right_zero_positions = std::set<int>{1, 3};
    long astz = long(collect_astz(3, 2, f).size());
    long csspp = 0;
    enumerate_shape({3, 1}, 1, [&](const Csspp&) { ++csspp; });
    rep.counts = {{"astz", astz}, {"csspp", csspp}};
    if (astz != 5 || csspp != 7) rep.fail(rep.counts);
    return rep;
}

inline Report reflection(Bounds b) {
    Report rep{"reflection"};
    rep.bounds = {{"n_max", b.n_max}, {"l_max", b.l_max}};
    long maps = 0, mu_changed = 0;
    for (int n = 1; n <= b.n_max; ++n)
        for (int l = 2; l <= b.l_max; ++l) {
            auto singles = collect_astz(n, l, EnumFilter{.r = 1});
            std::set<Csspp> all;
            for (int j = 1; j <= n; ++j)
                for (auto& c : collect_partitions(n, l - 1, j)) all.insert(c);
            for (int d = 1; d <= l - 1; ++d)
                for (auto rot : {Rotation::Clockwise, Rotation::Counterclockwise}) {
                    std::set<Csspp> img;
                    json tag{{"n", n}, {"l", l}, {"d", d}, {"rotation", rot == Rotation::Clockwise ? "cw" : "ccw"}};
                    for (const auto& a : singles) {
                        ++maps;
                        try {
                            Csspp c = reflection_bijection_forward(a, rot, d);
                            auto sa = astz_stats(a);
                            auto sc = csspp_stats(c, d);
                            if (sa.p != sc.p || sa.q != sc.q) rep.fail(json{{"check", "(p,q)"}, {"at", tag}, {"array", to_json(a)}});
                            if (sa.mu != sc.mu) ++mu_changed;
                            if (!img.insert(c).second) rep.fail(json{{"check", "injective"}, {"at", tag}, {"array", to_json(a)}});
                            if (reflection_bijection_inverse(c, n, rot, d) != a)
                                rep.fail(json{{"check", "inverse"}, {"at", tag}, {"array", to_json(a)}});
                        } catch (const std::exception& e) {
                            rep.fail(json{{"check", "exception"}, {"at", tag}, {"array", to_json(a)}, {"what", e.what()}});
                        }
                    }
                    if (img != all) rep.fail(json{{"check", "surjective"}, {"at", tag}});
                }
        }
    rep.counts = {{"maps", maps}, {"mu_changed", mu_changed}};
    return rep;
}

}  // namespace suites

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"proposition", "theorem1", "eq6",     "genfunc",       "roundtrip",
                                                "inversion",   "qast",     "counterexample", "reflection"};
    return names;
}

inline Bounds default_bounds(const std::string& name) {
    if (name == "proposition") return {5, 5};
    if (name == "theorem1") return {7, 5};
    if (name == "eq6") return {8, 4};
    if (name == "genfunc") return {4, 4};
    if (name == "roundtrip") return {5, 4};
    if (name == "inversion") return {5, 5};
    if (name == "qast") return {4, 1};
    if (name == "reflection") return {5, 4};
    return {0, 0};
}

inline Report verify_suite(const std::string& name, std::optional<Bounds> bounds = std::nullopt) {
    Bounds b = bounds.value_or(default_bounds(name));
    if (name == "proposition") return suites::proposition(b);
    if (name == "theorem1") return suites::theorem1(b);
    if (name == "eq6") return suites::eq6(b);
    if (name == "genfunc") return suites::genfunc(b);
    if (name == "roundtrip") return suites::roundtrip(b);
    if (name == "inversion") return suites::inversion(b);
    if (name == "qast") return suites::qast(b);
    if (name == "counterexample") return suites::counterexample(b);
    if (name == "reflection") return suites::reflection(b);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace astz

#pragma once

// Slow reference implementations used only by the tests. They share no code with the library.

#include <cstdint>
#include <fstream>
#include <iterator>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Rows = std::vector<std::vector<int>>;

inline Big pascal(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::vector<Big> row{1};
    for (int r = 1; r <= n; ++r) {
        std::vector<Big> next(std::size_t(r + 1), 0);
        next[0] = next[std::size_t(r)] = 1;
        for (int c = 1; c < r; ++c) next[std::size_t(c)] = row[std::size_t(c - 1)] + row[std::size_t(c)];
        row = next;
    }
    return row[std::size_t(k)];
}

// Every {-1,0,1} sequence of length len whose nonzero entries alternate and whose sum is in `sums`.
inline std::vector<std::vector<int>> alternating_rows(int len, std::set<int> sums) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self) -> void {
        if (int(cur.size()) == len) {
            int last = 0, s = 0;
            for (int v : cur) {
                if (v == 0) continue;
                if (v == last) return;
                last = v;
                s += v;
            }
            if (sums.count(s)) out.push_back(cur);
            return;
        }
        for (int v : {-1, 0, 1}) {
            cur.push_back(v);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

// Literal reading of the definition with 1-based indices a[i][j], 1 <= i <= n, i <= j <= 2n+l-1-i.
inline std::vector<Rows> trapezoids(int n, int l) {
    std::vector<std::vector<std::vector<int>>> choices;
    for (int i = 1; i <= n; ++i) {
        int len = (2 * n + l - 1 - i) - i + 1;
        std::set<int> sums{1};
        if (l == 1 && i == n) sums.insert(0);
        choices.push_back(alternating_rows(len, sums));
    }
    std::vector<Rows> out;
    Rows cur;
    auto entry = [&](const Rows& a, int i, int j) { return a[std::size_t(i - 1)][std::size_t(j - i)]; };
    auto rec = [&](auto&& self, int i) -> void {
        if (i > n) {
            int W = 2 * n + l - 1 - 1;
            for (int j = 1; j <= W; ++j) {
                int last = 0, s = 0;
                for (int r = 1; r <= n; ++r) {
                    if (j < r || j > 2 * n + l - 1 - r) continue;
                    int v = entry(cur, r, j);
                    if (v == 0) continue;
                    if (last == 0 && v != 1) return;
                    if (v == last) return;
                    last = v;
                    s += v;
                }
                bool central = l >= 2 && j > n && j <= n + l - 2;
                if (central && s != 0) return;
            }
            out.push_back(cur);
            return;
        }
        for (const auto& row : choices[std::size_t(i - 1)]) {
            cur.push_back(row);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// Inversion number with 1-based indices, straight from the formula.
inline int inversions(const Rows& a, int n, int l) {
    int s = 0;
    for (int i = 1; i <= n; ++i)
        for (int it = i + 1; it <= n; ++it)
            for (int j = i; j <= 2 * n + l - 1 - i; ++j)
                for (int jt = std::max(j, it); jt <= 2 * n + l - 1 - it; ++jt)
                    s += a[std::size_t(i - 1)][std::size_t(j - i)] * a[std::size_t(it - 1)][std::size_t(jt - it)];
    int elevens = 0;
    for (int j = 1; j <= n; ++j) {
        int sum = 0, bottom = 0;
        for (int i = 1; i <= j; ++i) {
            sum += a[std::size_t(i - 1)][std::size_t(j - i)];
            bottom = a[std::size_t(i - 1)][std::size_t(j - i)];
        }
        if (sum == 1 && bottom == 1) ++elevens;
    }
    return s + elevens;
}

// Weakly decreasing sequences of length j with first part first and all parts in 1..first.
inline std::vector<std::vector<int>> one_row_partitions(int j, int first) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur{first};
    auto rec = [&](auto&& self) -> void {
        if (int(cur.size()) == j) {
            out.push_back(cur);
            return;
        }
        for (int v = 1; v <= cur.back(); ++v) {
            cur.push_back(v);
            self(self);
            cur.pop_back();
        }
    };
    if (j >= 1) rec(rec);
    return out;
}

// Every R/U word with the given numbers of each letter.
inline std::vector<std::string> words(int rights, int ups) {
    std::vector<std::string> out;
    std::string cur;
    auto rec = [&](auto&& self, int r, int u) -> void {
        if (!r && !u) {
            out.push_back(cur);
            return;
        }
        if (r) {
            cur += 'R';
            self(self, r - 1, u);
            cur.pop_back();
        }
        if (u) {
            cur += 'U';
            self(self, r, u - 1);
            cur.pop_back();
        }
    };
    if (rights >= 0 && ups >= 0) rec(rec, rights, ups);
    return out;
}

inline std::set<std::pair<long, long>> visited(long x, long y, const std::string& w) {
    std::set<std::pair<long, long>> s{{x, y}};
    for (char c : w) {
        if (c == 'R')
            ++x;
        else
            ++y;
        s.insert({x, y});
    }
    return s;
}

// Pairs of vertex-disjoint R/U paths (s1 -> e1, s2 -> e2).
inline long disjoint_pairs(std::pair<long, long> s1, std::pair<long, long> e1, std::pair<long, long> s2,
                           std::pair<long, long> e2) {
    auto w1 = words(int(e1.first - s1.first), int(e1.second - s1.second));
    auto w2 = words(int(e2.first - s2.first), int(e2.second - s2.second));
    std::vector<std::set<std::pair<long, long>>> v1;
    for (const auto& w : w1) v1.push_back(visited(s1.first, s1.second, w));
    long n = 0;
    for (const auto& w : w2) {
        auto b = visited(s2.first, s2.second, w);
        for (const auto& a : v1) {
            bool meet = false;
            for (const auto& p : b)
                if (a.count(p)) {
                    meet = true;
                    break;
                }
            if (!meet) ++n;
        }
    }
    return n;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace oracle

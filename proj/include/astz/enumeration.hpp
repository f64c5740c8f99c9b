#pragma once

#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "arrays.hpp"
#include "bijection.hpp"
#include "paths.hpp"

namespace astz {

struct scale_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

inline bool scale_override() {
    const char* v = std::getenv("ASTZ_SCALE_OVERRIDE");
    return v && std::string(v) == "1";
}

inline void guard_scale(int n, int l, int n_max = 6, int l_max = 6) {
    if ((n > n_max || l > l_max) && !scale_override())
        throw scale_error("n=" + std::to_string(n) + ", l=" + std::to_string(l) +
                          " exceeds the desk-scale guard (set ASTZ_SCALE_OVERRIDE=1)");
}

struct EnumFilter {
    std::optional<int> i{}, j{}, mu{}, p{}, q{}, r{};
    std::optional<std::set<int>> right_zero_positions{};  // exact set of right-half 0-column positions

    bool accepts(const Astz& a) const {
        if (i || j) {
            auto ij = ij_of(a);
            if (!ij || (i && ij->first != *i) || (j && ij->second != *j)) return false;
        }
        if (mu || p || q || r) {
            StatProfile s = a.l == 1 ? qast_stats(a).stats : astz_stats(a);
            if ((mu && s.mu != *mu) || (p && s.p != *p) || (q && s.q != *q) || (r && s.r != *r)) return false;
        }
        if (right_zero_positions) {
            std::set<int> z;
            for (const auto& cc : classify_columns(a))
                if (!cc.central && cc.position > 0 && cc.kind == ColumnKind::Zero) z.insert(cc.position);
            if (z != *right_zero_positions) return false;
        }
        return true;
    }
};

// Row-by-row fill; row and column prefix sums stay in {0,1}.
inline void fill_arrays(int n, int l, const std::function<void(const Astz&)>& emit) {
    Astz a{n, l, {}};
    const int w = a.width();
    std::vector<int> col(std::size_t(w), 0);
    auto rec = [&](auto&& self, int r) -> void {
        if (r == n) {
            if (l >= 2)
                for (int c = n; c < n + l - 2; ++c)
                    if (col[c] != 0) return;
            emit(a);
            return;
        }
        const int lo = r, hi = w - 1 - r;
        std::vector<int> row;
        auto cell = [&](auto&& cself, int c, int s) -> void {
            if (c > hi) {
                if (s == 1 || (l == 1 && r == n - 1 && s == 0)) {
                    a.rows.push_back(row);
                    self(self, r + 1);
                    a.rows.pop_back();
                }
                return;
            }
            for (int v : {0, 1, -1}) {
                int ns = s + v, nc = col[c] + v;
                if (ns < 0 || ns > 1 || nc < 0 || nc > 1) continue;
                col[c] = nc;
                row.push_back(v);
                cself(cself, c + 1, ns);
                row.pop_back();
                col[c] -= v;
            }
        };
        cell(cell, lo, 0);
    };
    rec(rec, 0);
}

// Monotone R/U paths from `s` to `e` staying weakly above y = x.
inline void for_each_diagonal_path(Point s, Point e, const std::function<void(const LatticePath&)>& f) {
    std::string steps;
    auto rec = [&](auto&& self, Point cur) -> void {
        if (cur == e) {
            f(LatticePath{s, steps});
            return;
        }
        if (cur.x < e.x && cur.y >= cur.x + 1) {
            steps.push_back('R');
            self(self, Point{cur.x + 1, cur.y});
            steps.pop_back();
        }
        if (cur.y < e.y) {
            steps.push_back('U');
            self(self, Point{cur.x, cur.y + 1});
            steps.pop_back();
        }
    };
    if (s.y >= s.x) rec(rec, s);
}

// All of ASTZ_{n,l}^{i,j}, generated from lattice paths.
inline void for_each_single(int n, int l, int i, int j, const std::function<void(const Astz&)>& emit) {
    if (l < 2 || i < 1 || j < 1 || i > n || j > n || i > j) return;
    for_each_diagonal_path({-l - 2 * i + 3, 0}, {j - i, j - i},
                           [&](const LatticePath& p) { emit(path_to_single_astz(p, n, l)); });
}

inline void enumerate_astz(int n, int l, const EnumFilter& filter, const std::function<void(const Astz&)>& emit) {
    guard_scale(n, l);
    if (n < 1 || l < 1) throw std::invalid_argument("need n >= 1 and l >= 1");
    auto pass = [&](const Astz& a) {
        if (filter.accepts(a)) emit(a);
    };
    if (l >= 2 && filter.i && filter.j) {
        for_each_single(n, l, *filter.i, *filter.j, pass);
        return;
    }
    if (l >= 2 && filter.r && *filter.r == 1) {
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                if ((!filter.i || *filter.i == i) && (!filter.j || *filter.j == j)) for_each_single(n, l, i, j, pass);
        return;
    }
    fill_arrays(n, l, pass);
}

inline std::vector<Astz> collect_astz(int n, int l, const EnumFilter& filter = {}) {
    std::vector<Astz> out;
    enumerate_astz(n, l, filter, [&](const Astz& a) { out.push_back(a); });
    return out;
}

// One-row class-k partitions with j parts (first part j+k); empty when n < j.
inline void enumerate_partitions(int n, int k, int j, const std::function<void(const Csspp&)>& emit) {
    if (j < 1 || n < j) return;
    std::vector<int> parts{j + k};
    auto rec = [&](auto&& self, int mx) -> void {
        if (int(parts.size()) == j) {
            emit(Csspp{k, {parts}});
            return;
        }
        for (int v = mx; v >= 1; --v) {
            parts.push_back(v);
            self(self, v);
            parts.pop_back();
        }
    };
    rec(rec, j + k);
}

inline std::vector<Csspp> collect_partitions(int n, int k, int j) {
    std::vector<Csspp> out;
    enumerate_partitions(n, k, j, [&](const Csspp& c) { out.push_back(c); });
    return out;
}

// All class-k fillings of one shifted shape.
inline void enumerate_shape(const std::vector<int>& shape, int k, const std::function<void(const Csspp&)>& emit) {
    Rows rows;
    for (int len : shape) rows.emplace_back(std::size_t(len), 0);
    struct Cell { int r, off; };
    std::vector<Cell> cells;
    for (int r = 0; r < int(shape.size()); ++r)
        for (int off = 0; off < shape[r]; ++off) cells.push_back({r, off});
    auto rec = [&](auto&& self, std::size_t t) -> void {
        if (t == cells.size()) {
            emit(Csspp{k, rows});
            return;
        }
        auto [r, off] = cells[t];
        int hi;
        if (off == 0)
            hi = k + shape[r];
        else
            hi = rows[r][off - 1];
        int lo = off == 0 ? hi : 1;
        if (r > 0) hi = std::min(hi, rows[r - 1][off + 1] - 1);
        for (int v = hi; v >= lo; --v) {
            rows[r][off] = v;
            self(self, t + 1);
        }
        rows[r][off] = 0;
    };
    rec(rec, 0);
}

// Every class-k CSSPP with at most n parts in the first row, the empty one included.
inline void enumerate_csspp(int n, int k, const std::function<void(const Csspp&)>& emit) {
    std::vector<int> shape;
    auto rec = [&](auto&& self, int mx) -> void {
        enumerate_shape(shape, k, emit);
        for (int v = mx; v >= 1; --v) {
            shape.push_back(v);
            self(self, v - 1);
            shape.pop_back();
        }
    };
    rec(rec, n);
}

// ---------------------------------------------------------------------------
// Closed forms

inline Int theorem1_count(int i, int j, int l, int mu, int p, int q) {
    if (i > j) return 0;
    if (i == j) return (mu == 0 && p == 0 && q == 0) ? 1 : 0;
    return binomial(j - i, mu + p + q) * binomial(j + i + l - q - 5, mu) -
           binomial(j - i - 1, mu + p + q) * binomial(j + i + l - q - 4, mu);
}

inline Int csspp_count_formula(int j, int k, int mu, int p, int q) {
    return binomial(j - 1, mu + p + q) * binomial(j - q + k - 3, mu);
}

inline PolyMatrix genfunc_matrix(int n, int l) {
    const MultiPoly Rv = MultiPoly::var(R);
    PolyMatrix m(static_cast<std::size_t>(n), std::vector<MultiPoly>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MultiPoly e;
            for (int k = 0; k <= i; ++k)
                for (int mm = 0; mm <= j; ++mm) {
                    Int outer = binomial(j, mm);
                    Int c1 = binomial(k + l - 3, k - mm), c2 = binomial(k + l - 3, k - mm - 1);
                    if (c1 != 0) e += MultiPoly::monomial({k - mm, 0, 0, i - k}, outer * c1);
                    if (c2 != 0) e += MultiPoly::monomial({k - mm - 1, 0, 1, i - k}, outer * c2);
                }
            m[i][j] = Rv * e + MultiPoly(i == j ? 1 : 0);
        }
    return m;
}

inline MultiPoly genfunc_det(int n, int l) {
    guard_scale(n, l, 8, 8);
    return poly_det(genfunc_matrix(n, l));
}

// ---------------------------------------------------------------------------
// Brute-force weight sums

inline MultiPoly z_poly(int n, int l, int i, int j) {
    guard_scale(n, l, 6, 8);
    MultiPoly z;
    for_each_single(n, l, i, j, [&](const Astz& a) { z += weight_of(astz_stats(a)); });
    return z;
}

inline MultiPoly astz_weight_sum(int n, int l) {
    MultiPoly z;
    enumerate_astz(n, l, {}, [&](const Astz& a) { z += l == 1 ? qast_weight(a) : weight_of(astz_stats(a)); });
    return z;
}

inline MultiPoly csspp_weight_sum(int n, int k, int d) {
    MultiPoly z;
    enumerate_csspp(n, k, [&](const Csspp& c) { z += k == 0 ? qast_weight(c) : weight_of(csspp_stats(c, d)); });
    return z;
}

}  // namespace astz

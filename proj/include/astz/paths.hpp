#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "arrays.hpp"

namespace astz {

struct Point {
    long x = 0, y = 0;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
};

// Steps are 'R', 'U' (north-east paths) or 'R', 'D' (south-east paths).
struct LatticePath {
    Point start;
    std::string steps;

    Point end() const {
        Point p = start;
        for (char s : steps) p = p + delta(s);
        return p;
    }

    std::vector<Point> points() const {
        std::vector<Point> pts{start};
        for (char s : steps) pts.push_back(pts.back() + delta(s));
        return pts;
    }

    LatticePath shifted(long dx, long dy) const { return {{start.x + dx, start.y + dy}, steps}; }

    std::string to_string() const {
        return "(" + std::to_string(start.x) + "," + std::to_string(start.y) + "):" + steps;
    }

    static Point delta(char s) {
        switch (s) {
            case 'R': return {1, 0};
            case 'U': return {0, 1};
            case 'D': return {0, -1};
        }
        throw std::invalid_argument(std::string("bad step '") + s + "'");
    }

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

inline LatticePath parse_path(const std::string& text) {
    auto colon = text.find(':');
    if (text.empty() || text[0] != '(' || colon == std::string::npos || colon < 2 || text[colon - 1] != ')')
        throw std::invalid_argument("path must look like (x,y):URRU");
    auto comma = text.find(',');
    if (comma == std::string::npos || comma > colon) throw std::invalid_argument("path start needs x,y");
    LatticePath p;
    p.start.x = std::stol(text.substr(1, comma - 1));
    p.start.y = std::stol(text.substr(comma + 1, colon - 2 - comma));
    p.steps = text.substr(colon + 1);
    for (char s : p.steps) LatticePath::delta(s);
    return p;
}

// ---------------------------------------------------------------------------
// Osculating paths. Cell (r, c) of the array is the lattice point (c, n-1-r).

namespace detail {

struct Edges {
    bool left, below, up, right;
};

inline Edges cell_edges(const Astz& a, int r, int c) {
    int before = 0;
    for (int t = r; t < c; ++t) before += a.at(r, t);
    int above = 0;
    for (int t = 0; t < r; ++t) above += a.at(t, c);
    int v = a.at(r, c);
    Edges e{};
    e.left = before == 1;
    e.up = above == 1;
    e.right = c < a.row_end(r) && before + v == 1;
    if (r < a.bottom(c))
        e.below = above + v == 1;
    else
        e.below = c < a.left_count() && above + v == 1;
    return e;
}

}  // namespace detail

inline std::vector<LatticePath> astz_to_osculating(const Astz& a) {
    if (a.l < 2) throw std::domain_error("osculating paths need l >= 2");
    std::vector<LatticePath> out;
    for (int c0 = 0; c0 < a.left_count(); ++c0) {
        if (a.column_sum(c0) != 1) continue;
        int r = a.bottom(c0), c = c0;
        LatticePath path{{c0, a.n - 1 - r}, ""};
        bool from_below = true;
        for (;;) {
            auto e = detail::cell_edges(a, r, c);
            int v = a.at(r, c);
            bool go_right;
            if (from_below)
                go_right = v == 1 || (v == 0 && e.left && e.right);
            else
                go_right = !(v == -1 || (v == 0 && e.below) || !e.right);
            if (go_right) {
                if (!e.right) throw std::logic_error("osculating trace left the array");
                ++c;
                path.steps += 'R';
                from_below = false;
            } else {
                if (!e.up) break;  // bottom of a right-half 0-column
                --r;
                path.steps += 'U';
                from_below = true;
            }
        }
        out.push_back(path);
    }
    return out;
}

inline LatticePath single_astz_to_path(const Astz& a) {
    auto ij = ij_of(a);
    if (!ij) throw std::invalid_argument("array does not have exactly one left 1-column");
    auto fam = astz_to_osculating(a);
    auto [i, j] = *ij;
    LatticePath p = fam.front().shifted(-(a.n + a.l - 3 + i), -(i - 1));
    if (p.start != Point{-a.l - 2 * i + 3, 0} || p.end() != Point{j - i, j - i})
        throw std::logic_error("single path has wrong endpoints");
    return p;
}

struct PathShape {
    int i, j;
};

// Reads (i, j) off the endpoints of a monotone path from (-l-2i+3, 0) to (j-i, j-i).
inline PathShape path_shape(const LatticePath& path, int l) {
    long t = 3 - l - path.start.x;
    if (path.start.y != 0 || t < 2 || t % 2) throw std::invalid_argument("path start is not of the form (-l-2i+3, 0)");
    int i = int(t / 2);
    Point e = path.end();
    if (e.x != e.y) throw std::invalid_argument("path must end on the diagonal");
    return {i, int(e.x) + i};
}

inline Astz path_to_single_astz(const LatticePath& path, int n, int l) {
    if (l < 2) throw std::domain_error("need l >= 2");
    auto [i, j] = path_shape(path, l);
    if (!(1 <= i && i <= j && j <= n)) throw std::invalid_argument("need 1 <= i <= j <= n");
    auto pts = path.points();
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k < path.steps.size() && path.steps[k] != 'R' && path.steps[k] != 'U')
            throw std::invalid_argument("path must use R and U steps");
        if (pts[k].y < pts[k].x) throw std::invalid_argument("path crosses the diagonal");
    }
    Astz a{n, l, {}};
    for (int r = 0; r < n; ++r) a.rows.emplace_back(a.width() - 2 * r, 0);
    auto rc = [&](Point p) { return std::pair<int, int>{int((n - i) - p.y), int(p.x + (n + l - 3 + i))}; };
    std::set<long> diag_rows{long(j - i)};
    for (std::size_t k = 0; k < path.steps.size(); ++k) {
        char in = k > 0 ? path.steps[k - 1] : 'U';
        char out = path.steps[k];
        if (in == 'U' && out == 'R') {
            auto [r, c] = rc(pts[k]);
            a.rows[r][c - r] = 1;
        } else if (in == 'R' && out == 'U') {
            if (pts[k].x == pts[k].y) {
                diag_rows.insert(pts[k].y);
            } else {
                auto [r, c] = rc(pts[k]);
                a.rows[r][c - r] = -1;
            }
        }
    }
    for (int r = 0; r < n; ++r)
        if (!diag_rows.count((n - i) - r)) a.rows[r].back() = 1;
    Astz v = validate_astz(a.rows, l);
    auto got = ij_of(v);
    if (!got || got->first != i || got->second != j) throw std::logic_error("path did not decode to ASTZ^{i,j}");
    return v;
}

struct TwoRowedArray {
    std::vector<long> xs, ys;
    long x_low = 0, x_high = 0, y_low = 0, y_high = 0;
    friend bool operator==(const TwoRowedArray&, const TwoRowedArray&) = default;
};

// Left turns: points reached by R and left by U.
inline TwoRowedArray left_turns(const LatticePath& path) {
    TwoRowedArray t;
    auto pts = path.points();
    for (std::size_t k = 1; k < path.steps.size(); ++k)
        if (path.steps[k - 1] == 'R' && path.steps[k] == 'U') {
            t.xs.push_back(pts[k].x);
            t.ys.push_back(pts[k].y);
        }
    return t;
}

// Same, with the bounds for a path of ASTZ_{n,l}^{i,j}.
inline TwoRowedArray left_turns(const LatticePath& path, int l) {
    auto t = left_turns(path);
    auto [i, j] = path_shape(path, l);
    int p = !path.steps.empty() && path.steps[0] == 'U';
    t.x_low = -2 * i - l + 4;
    t.x_high = t.y_high = j - i - 1;
    t.y_low = p;
    return t;
}

inline LatticePath path_from_turns(Point start, Point end, const std::vector<long>& xs, const std::vector<long>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("turn rows differ in length");
    LatticePath p{start, ""};
    Point cur = start;
    auto walk = [&](Point to) {
        if (to.x < cur.x || to.y < cur.y) throw std::invalid_argument("turns are not monotone");
        p.steps.append(std::size_t(to.y - cur.y), 'U');
        p.steps.append(std::size_t(to.x - cur.x), 'R');
        cur = to;
    };
    for (std::size_t m = 0; m < xs.size(); ++m) walk({xs[m], ys[m]});
    walk(end);
    return p;
}

// Path from (-c, a-b+c-1) to (0,0): scanning z = a..b, R when z is in the row, U otherwise.
inline LatticePath row_to_path(const std::vector<long>& row, long a, long b) {
    if (b < a - 1) throw std::invalid_argument("empty bound range");
    for (std::size_t m = 0; m < row.size(); ++m) {
        if (row[m] < a || row[m] > b) throw std::out_of_range("row entry outside bounds");
        if (m && row[m] <= row[m - 1]) throw std::invalid_argument("row must be strictly increasing");
    }
    long c = long(row.size());
    LatticePath p{{-c, a - b + c - 1}, ""};
    std::size_t m = 0;
    for (long z = a; z <= b; ++z) {
        if (m < row.size() && row[m] == z) {
            p.steps += 'R';
            ++m;
        } else {
            p.steps += 'U';
        }
    }
    return p;
}

inline std::vector<long> path_to_row(const LatticePath& p, long a) {
    std::vector<long> row;
    for (std::size_t t = 0; t < p.steps.size(); ++t)
        if (p.steps[t] == 'R') row.push_back(a + long(t));
    return row;
}

inline std::optional<Point> top_right_shared(const LatticePath& a, const LatticePath& b) {
    auto pa = a.points(), pb = b.points();
    std::set<Point> sb(pb.begin(), pb.end());
    std::optional<Point> best;
    for (const auto& p : pa)
        if (sb.count(p) && (!best || *best < p)) best = p;
    return best;
}

inline bool intersect(const LatticePath& a, const LatticePath& b) { return top_right_shared(a, b).has_value(); }

// Exchanges the tails after the shared point with maximal x (then maximal y).
inline std::pair<LatticePath, LatticePath> top_right_switch(const LatticePath& a, const LatticePath& b) {
    auto at = top_right_shared(a, b);
    if (!at) throw std::invalid_argument("paths do not intersect");
    auto index_of = [&](const LatticePath& p) {
        auto pts = p.points();
        return std::size_t(std::find(pts.begin(), pts.end(), *at) - pts.begin());
    };
    std::size_t ka = index_of(a), kb = index_of(b);
    LatticePath na{a.start, a.steps.substr(0, ka) + b.steps.substr(kb)};
    LatticePath nb{b.start, b.steps.substr(0, kb) + a.steps.substr(ka)};
    return {na, nb};
}

inline Int count_ne_paths(Point s, Point e) {
    long dx = e.x - s.x, dy = e.y - s.y;
    if (dx < 0 || dy < 0) return 0;
    return binomial_strict(dx + dy, dx);
}

// Nonintersecting pairs s1->e1, s2->e2 of R/U paths.
inline Int lgv_count(const std::array<Point, 2>& starts, const std::array<Point, 2>& ends) {
    return count_ne_paths(starts[0], ends[0]) * count_ne_paths(starts[1], ends[1]) -
           count_ne_paths(starts[0], ends[1]) * count_ne_paths(starts[1], ends[0]);
}

template <class F>
void for_each_ne_path(Point s, Point e, F&& f) {
    long dx = e.x - s.x, dy = e.y - s.y;
    if (dx < 0 || dy < 0) return;
    std::string steps;
    auto rec = [&](auto&& self, long r, long u) -> void {
        if (r == 0 && u == 0) {
            f(LatticePath{s, steps});
            return;
        }
        if (r > 0) {
            steps.push_back('R');
            self(self, r - 1, u);
            steps.pop_back();
        }
        if (u > 0) {
            steps.push_back('U');
            self(self, r, u - 1);
            steps.pop_back();
        }
    };
    rec(rec, dx, dy);
}

inline Int brute_nilp_count(const std::array<Point, 2>& starts, const std::array<Point, 2>& ends) {
    std::vector<LatticePath> first;
    for_each_ne_path(starts[0], ends[0], [&](const LatticePath& p) { first.push_back(p); });
    Int n = 0;
    for_each_ne_path(starts[1], ends[1], [&](const LatticePath& p) {
        for (const auto& f : first)
            if (!intersect(f, p)) ++n;
    });
    return n;
}

}  // namespace astz

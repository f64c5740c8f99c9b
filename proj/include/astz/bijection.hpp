#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arrays.hpp"
#include "paths.hpp"

namespace astz {

enum class Rotation { Clockwise, Counterclockwise };
enum class Reflection { HorizontalAxis, VerticalAxis };

struct BijectionConfig {
    int d = 1;
    Rotation rotation = Rotation::Clockwise;
    Reflection reflection = Reflection::VerticalAxis;
    friend bool operator==(const BijectionConfig&, const BijectionConfig&) = default;
};

inline std::vector<BijectionConfig> all_configs(int l) {
    std::vector<BijectionConfig> out;
    for (int d = 1; d <= l - 1; ++d)
        for (auto rot : {Rotation::Clockwise, Rotation::Counterclockwise})
            for (auto ref : {Reflection::VerticalAxis, Reflection::HorizontalAxis}) out.push_back({d, rot, ref});
    return out;
}

struct pipeline_error : std::logic_error {
    std::string stage;
    pipeline_error(const std::string& st, const std::string& what)
        : std::logic_error("[" + st + "] " + what), stage(st) {}
};

// Optional record of intermediate states, one (stage, description) entry per stage.
using Trace = std::vector<std::pair<std::string, std::string>>;

namespace detail {

inline void note(Trace* t, const std::string& stage, const std::string& text) {
    if (t) t->emplace_back(stage, text);
}

inline void expect(bool cond, const std::string& stage, const std::string& what) {
    if (!cond) throw pipeline_error(stage, what);
}

inline std::string map_steps(const std::string& s, char from1, char to1, char from2, char to2) {
    std::string out;
    for (char c : s) out += c == from1 ? to1 : c == from2 ? to2 : c;
    return out;
}

inline std::string reversed(std::string s) {
    std::reverse(s.begin(), s.end());
    return s;
}

inline std::string rotate_fwd(const std::string& s, Rotation rot) {
    std::string t = rot == Rotation::Clockwise ? s : reversed(s);
    return map_steps(t, 'U', 'R', 'R', 'D');
}

inline std::string rotate_inv(const std::string& s, Rotation rot) {
    std::string t = map_steps(s, 'R', 'U', 'D', 'R');
    return rot == Rotation::Clockwise ? t : reversed(t);
}

inline std::string reflect_fwd(const std::string& s, Reflection ref) {
    std::string t = ref == Reflection::VerticalAxis ? reversed(s) : s;
    return map_steps(t, 'U', 'D', 'D', 'D');
}

inline std::string reflect_inv(const std::string& s, Reflection ref) {
    std::string t = map_steps(s, 'D', 'U', 'U', 'U');
    return ref == Reflection::VerticalAxis ? reversed(t) : t;
}

// Inserts `fixed` steps at their indices, filling the rest from `free` in order.
inline std::string weave(const std::string& free, std::size_t total, const std::map<std::size_t, char>& fixed,
                         const std::string& stage) {
    expect(free.size() + fixed.size() == total, stage, "step count mismatch on reinsertion");
    std::string out;
    std::size_t it = 0;
    for (std::size_t t = 0; t < total; ++t) {
        auto f = fixed.find(t);
        out += f != fixed.end() ? f->second : free[it++];
    }
    return out;
}

inline std::string unweave(const std::string& full, const std::map<std::size_t, char>& fixed) {
    std::string out;
    for (std::size_t t = 0; t < full.size(); ++t)
        if (!fixed.count(t)) out += full[t];
    return out;
}

// Slots removed from the lower CSSPP path (length j+k-1): the step beneath y=x+d,
// the step down to height 0, and the q final steps at height 0.
inline std::map<std::size_t, char> lower_slots(int j, int k, int d, int p, int q) {
    std::size_t total = std::size_t(j + k - 1);
    std::map<std::size_t, char> f;
    f[std::size_t(k - d)] = p ? 'R' : 'D';
    f[total - 1 - q] = 'D';
    for (std::size_t t = total - q; t < total; ++t) f[t] = 'R';
    return f;
}

// Same slots measured on the whole path (length 2j+k-2).
inline std::map<std::size_t, char> full_slots(int j, int k, int d, int p, int q) {
    std::size_t total = std::size_t(2 * j + k - 2);
    std::map<std::size_t, char> f;
    f[std::size_t(j + k - 1 - d)] = p ? 'R' : 'D';
    f[total - 1 - q] = 'D';
    for (std::size_t t = total - q; t < total; ++t) f[t] = 'R';
    return f;
}

}  // namespace detail

// South-east path from (0, j+k-1) for a one-row partition whose first part is j+k.
inline std::string partition_to_steps(const std::vector<int>& parts, int k) {
    const int j = int(parts.size());
    if (j == 0 || parts[0] != j + k) throw std::invalid_argument("first part must equal j+k");
    std::string s;
    int h = j + k - 1;
    for (int m = 1; m < j; ++m) {
        s.append(std::size_t(h - (parts[m] - 1)), 'D');
        h = parts[m] - 1;
        s += 'R';
    }
    s.append(std::size_t(h), 'D');
    return s;
}

inline std::vector<int> steps_to_partition(const std::string& s, int j, int k) {
    std::vector<int> parts{j + k};
    int h = j + k - 1;
    for (char c : s) {
        if (c == 'D')
            --h;
        else
            parts.push_back(h + 1);
    }
    return parts;
}

inline Astz special_case_astz(int j, int n, int l) { return unique_diagonal_astz(j, n, l); }

inline std::pair<Astz, Csspp> special_case_ij(int j, int n, int l) {
    return {unique_diagonal_astz(j, n, l), one_row(std::vector<int>(std::size_t(j), j + l - 1), l - 1)};
}

// The single element with d=1 and q=j-1; its reinsertion slots collide, so it is mapped directly.
inline bool degenerate_case(int d, int q, int j) { return d == 1 && q == j - 1; }

inline Astz degenerate_astz(int j, int n, int l) {
    std::string s(std::size_t(l - 1), 'R');
    for (int t = 1; t < j; ++t) s += "UR";
    return path_to_single_astz({{-l + 1, 0}, s}, n, l);
}

inline Csspp degenerate_partition(int j, int k) {
    std::vector<int> parts{j + k};
    parts.resize(std::size_t(j), 1);
    return one_row(parts, k);
}

namespace detail {

inline void check_cfg(const BijectionConfig& cfg, int k) {
    if (cfg.d < 1 || cfg.d > k) throw std::out_of_range("d must lie in 1..l-1");
}

inline const std::vector<int>& single_row(const Csspp& c) {
    if (c.rows.size() != 1) throw std::invalid_argument("expected a one-row partition");
    return c.rows[0];
}

}  // namespace detail

inline Csspp astz_to_partition(const Astz& a, const BijectionConfig& cfg, Trace* trace = nullptr) {
    using namespace detail;
    const int l = a.l, k = l - 1;
    check_cfg(cfg, k);
    auto ij = ij_of(a);
    if (!ij) throw std::invalid_argument("r(A) must be 1");
    auto [i, j] = *ij;
    auto st = astz_stats(a);
    const int mu = st.mu, p = st.p, q = st.q;
    if (i == j) {
        note(trace, "special", "i = j");
        return special_case_ij(j, a.n, l).second;
    }
    if (degenerate_case(cfg.d, q, j)) {
        note(trace, "special", "d = 1, q = j-1");
        return degenerate_partition(j, k);
    }

    LatticePath path = single_astz_to_path(a);
    note(trace, "path", path.to_string());

    auto turns = left_turns(path, l);
    const long ax = turns.x_low, b = turns.x_high;
    std::string xp = row_to_path(turns.xs, ax, b).steps;
    std::string yp = row_to_path(turns.ys, p, b).steps;
    note(trace, "two-rowed", xp + " / " + yp);

    std::vector<long> diag;
    for (std::size_t m = 0; m < turns.xs.size(); ++m)
        if (turns.xs[m] == turns.ys[m]) diag.push_back(turns.xs[m]);
    expect(int(diag.size()) == q, "truncate", "diagonal turns differ from q");
    std::string xt;
    for (long z = ax; z <= b; ++z) {
        char c = xp[std::size_t(z - ax)];
        if (!(c == 'R' && std::count(diag.begin(), diag.end(), z))) xt += c;
    }
    if (p == 0) {
        expect(!yp.empty() && yp[0] == 'R', "truncate", "y-row does not start at 0");
        yp.erase(0, 1);
    }
    expect(!xt.empty() && xt.back() == 'U', "truncate", "x-path does not end with U");
    xt.pop_back();
    yp += 'R';
    note(trace, "truncate", xt + " / " + yp);

    LatticePath lower{{-mu, -j - i - l + 4 + mu + q}, xt};
    LatticePath upper{{-mu - p - q, -j + i + mu + p + q}, yp};
    expect(lower.end() == Point{0, -1} && upper.end() == Point{0, 0}, "place", "endpoints are not E_x, E_y");
    expect(!intersect(lower, upper), "place", "initial pair intersects");
    note(trace, "place", lower.to_string() + " / " + upper.to_string());

    for (int it = 1; it < i; ++it) {
        LatticePath u = upper.shifted(0, -1);
        LatticePath lo = lower.shifted(0, it);
        if (!intersect(lo, u)) throw pipeline_error("shuffle " + std::to_string(it), "paths do not meet");
        auto [lo2, u2] = top_right_switch(lo, u);
        lower = lo2.shifted(0, -it);
        upper = u2;
        note(trace, "shuffle " + std::to_string(it), lower.to_string() + " / " + upper.to_string());
    }

    std::string upper_se = rotate_fwd(upper.steps, cfg.rotation);
    std::string lower_se = reflect_fwd(lower.steps, cfg.reflection);
    std::string lower_full = weave(lower_se, std::size_t(j + k - 1), lower_slots(j, k, cfg.d, p, q), "finish");
    std::string full = upper_se + lower_full;
    expect(full.size() == std::size_t(2 * j + k - 2), "finish", "wrong path length");
    auto parts = steps_to_partition(full, j, k);
    note(trace, "finish", full);
    Csspp out = one_row(parts, k);
    auto cs = csspp_stats(out, cfg.d);
    expect(cs.mu == mu && cs.p == p && cs.q == q, "finish", "weight not preserved");
    return out;
}

// Insert one entry into xs. The search starts at index `from` (just past the previous insertion).
// Returns the new row and the insertion index.
inline std::pair<std::vector<long>, std::size_t> insert_entry(const std::vector<long>& xs, const std::vector<long>& ys,
                                                              std::size_t from = 0) {
    for (std::size_t a = from; a < xs.size(); ++a) {
        if (a < ys.size() && xs[a] >= ys[a]) {
            std::vector<long> out(xs.begin(), xs.begin() + long(a));
            out.push_back(ys[a]);
            for (std::size_t b = a; b < xs.size(); ++b) out.push_back(xs[b] + 1);
            return {out, a};
        }
    }
    if (xs.size() >= ys.size()) throw std::invalid_argument("no entry of ys left to append");
    std::vector<long> out = xs;
    out.push_back(ys[xs.size()]);
    return {out, xs.size()};
}

inline Astz partition_to_astz(const Csspp& c, int n, const BijectionConfig& cfg, Trace* trace = nullptr) {
    using namespace detail;
    const int k = c.k, l = k + 1;
    check_cfg(cfg, k);
    const auto& parts = single_row(c);
    const int j = int(parts.size());
    if (j > n) throw std::invalid_argument("partition has more than n parts");
    auto st = csspp_stats(c, cfg.d);
    const int mu = st.mu, p = st.p, q = st.q;
    if (mu == 0 && p == 0 && q == 0) {
        note(trace, "special", "i = j");
        return unique_diagonal_astz(j, n, l);
    }
    if (degenerate_case(cfg.d, q, j)) {
        note(trace, "special", "d = 1, q = j-1");
        return degenerate_astz(j, n, l);
    }

    std::string full = partition_to_steps(parts, k);
    std::string up = full.substr(0, std::size_t(j - 1)), lo = full.substr(std::size_t(j - 1));
    LatticePath upper{{-mu - p - q, -j + mu + p + q + 1}, rotate_inv(up, cfg.rotation)};
    LatticePath lower{{-mu, -j - k + mu + q + 2}, reflect_inv(unweave(lo, lower_slots(j, k, cfg.d, p, q)), cfg.reflection)};
    expect(upper.end() == Point{0, 0} && lower.end() == Point{0, -1}, "place", "endpoints are not E_y, E_x");
    note(trace, "place", lower.to_string() + " / " + upper.to_string());

    int switches = 0;
    while (intersect(lower, upper)) {
        auto [to_ey, to_ex] = top_right_switch(lower, upper);
        lower = to_ey.shifted(0, -1);
        upper = to_ex.shifted(0, 1);
        ++switches;
        note(trace, "shuffle " + std::to_string(switches), lower.to_string() + " / " + upper.to_string());
        expect(switches <= j, "shuffle", "too many switches");
    }
    const int i = switches + 1;
    if (i > n) throw std::invalid_argument("image needs more than n rows");

    expect(!upper.steps.empty() && upper.steps.back() == 'R', "unplace", "upper path does not end with R");
    std::string yp = upper.steps.substr(0, upper.steps.size() - 1);
    std::string xp = lower.steps + 'U';
    const long b = j - i - 1, ax = -2 * i - l + 4;
    if (p == 0) yp = 'R' + yp;
    expect(long(yp.size()) == b - p + 1, "unplace", "y-path has wrong length");
    std::vector<long> ys = path_to_row({{}, yp}, p), xs = path_to_row({{}, xp}, ax);
    std::size_t pos = 0;
    for (int t = 0; t < q; ++t) {
        auto [nx, a] = insert_entry(xs, ys, pos);
        xs = std::move(nx);
        pos = a + 1;
    }
    LatticePath path = path_from_turns({-l - 2 * i + 3, 0}, {j - i, j - i}, xs, ys);
    note(trace, "path", path.to_string());
    return path_to_single_astz(path, n, l);
}

// ---------------------------------------------------------------------------
// Reflection-principle bijection. Preserves (p, q) but not the number of -1s.

namespace detail {

inline long level(Point p) { return p.y - p.x; }

// Drops the first and last step and every U leaving the diagonal; returns the shortened path and q.
inline std::pair<LatticePath, int> strip_diagonal(const LatticePath& path) {
    auto pts = path.points();
    std::string keep;
    int q = 0;
    for (std::size_t t = 1; t + 1 < path.steps.size(); ++t) {
        if (path.steps[t] == 'U' && level(pts[t]) == 0)
            ++q;
        else
            keep += path.steps[t];
    }
    return {{{pts[1].x, pts[1].y + q}, keep}, q};
}

// Inverse of strip_diagonal: a U is restored at the first point reaching level q, then q-1, ..., 1.
inline LatticePath restore_diagonal(const LatticePath& red, int q, char first) {
    auto pts = red.points();
    std::vector<std::size_t> marks;
    std::size_t from = 0;
    for (int m = 1; m <= q; ++m) {
        long target = q - m + 1;
        std::size_t t = from;
        while (t < pts.size() && level(pts[t]) != target) ++t;
        expect(t < pts.size(), "restore", "level never reached");
        marks.push_back(t);
        from = t;
    }
    std::string out(1, first);
    for (std::size_t t = 0; t <= red.steps.size(); ++t) {
        out.append(std::size_t(std::count(marks.begin(), marks.end(), t)), 'U');
        if (t < red.steps.size()) out += red.steps[t];
    }
    out += 'R';
    Point s{red.start.x, red.start.y - q};
    s = first == 'R' ? Point{s.x - 1, s.y} : Point{s.x, s.y - 1};
    return {s, out};
}

// Mirrors the part after the last diagonal point in y = x; false when the path avoids the diagonal.
inline bool reflect_tail(LatticePath& path) {
    auto pts = path.points();
    std::size_t last = pts.size();
    for (std::size_t t = 0; t < pts.size(); ++t)
        if (level(pts[t]) == 0) last = t;
    if (last == pts.size()) return false;
    for (std::size_t t = last; t < path.steps.size(); ++t) path.steps[t] = path.steps[t] == 'R' ? 'U' : 'R';
    return true;
}

}  // namespace detail

inline Csspp reflection_bijection_forward(const Astz& a, Rotation rot, int d) {
    using namespace detail;
    const int l = a.l, k = l - 1;
    check_cfg({d, rot, Reflection::VerticalAxis}, k);
    auto ij = ij_of(a);
    if (!ij) throw std::invalid_argument("r(A) must be 1");
    auto [i, j] = *ij;
    auto st = astz_stats(a);
    const int p = st.p, q = st.q;
    if (degenerate_case(d, q, j)) return degenerate_partition(j, k);

    auto [path, q2] = strip_diagonal(single_astz_to_path(a));
    expect(q2 == q, "strip", "diagonal steps differ from q");
    expect(path.start == Point{-l - 2 * i - p + 4, p + q}, "strip", "unexpected start");
    for (int t = 1; t < i; ++t) {
        path = path.shifted(2, 0);
        expect(reflect_tail(path), "reflect", "shifted path misses the diagonal");
    }
    expect(path.end() == Point{j - 2, j - 1}, "reflect", "unexpected end");
    std::string full = weave(rotate_fwd(path.steps, rot), std::size_t(2 * j + k - 2), full_slots(j, k, d, p, q), "finish");
    Csspp out = one_row(steps_to_partition(full, j, k), k);
    auto cs = csspp_stats(out, d);
    expect(cs.p == p && cs.q == q, "finish", "(p, q) not preserved");
    return out;
}

inline Astz reflection_bijection_inverse(const Csspp& c, int n, Rotation rot, int d) {
    using namespace detail;
    const int k = c.k, l = k + 1;
    check_cfg({d, rot, Reflection::VerticalAxis}, k);
    const auto& parts = single_row(c);
    const int j = int(parts.size());
    if (j > n) throw std::invalid_argument("partition has more than n parts");
    auto st = csspp_stats(c, d);
    const int p = st.p, q = st.q;
    if (degenerate_case(d, q, j)) return degenerate_astz(j, n, l);

    std::string red = unweave(partition_to_steps(parts, k), full_slots(j, k, d, p, q));
    LatticePath path{{-l - p + 2, p + q}, rotate_inv(red, rot)};
    int rounds = 0;
    while (reflect_tail(path)) {
        path = path.shifted(-2, 0);
        ++rounds;
        expect(rounds <= j, "reflect", "too many rounds");
    }
    const int i = rounds + 1;
    if (i > n) throw std::invalid_argument("image needs more than n rows");
    LatticePath full = restore_diagonal(path, q, p ? 'U' : 'R');
    expect(full.start == Point{-l - 2 * i + 3, 0}, "restore", "unexpected start");
    return path_to_single_astz(full, n, l);
}

}  // namespace astz

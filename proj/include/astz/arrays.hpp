#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"

namespace astz {

using Rows = std::vector<std::vector<int>>;

// Trapezoid with n rows; 0-based row r covers absolute columns r .. width()-1-r.
// l == 1 is the quasi alternating sign triangle.
struct Astz {
    int n = 0;
    int l = 0;
    Rows rows;

    int width() const { return 2 * n + l - 2; }
    int row_begin(int r) const { return r; }
    int row_end(int r) const { return width() - 1 - r; }
    bool has(int r, int c) const { return r >= 0 && r < n && c >= r && c <= row_end(r); }
    int at(int r, int c) const { return rows[r][c - r]; }
    int bottom(int c) const { return std::min({c, width() - 1 - c, n - 1}); }

    // Left block has n columns for l >= 2, n-1 for the triangle (whose middle column is central).
    int left_count() const { return l == 1 ? n - 1 : n; }
    int central_count() const { return l == 1 ? 1 : l - 2; }
    int right_first() const { return left_count() + central_count(); }

    int column_sum(int c) const {
        int s = 0;
        for (int r = 0; r <= bottom(c); ++r) s += at(r, c);
        return s;
    }

    friend bool operator==(const Astz&, const Astz&) = default;
    friend auto operator<=>(const Astz&, const Astz&) = default;
};

enum class AstzFault { Shape, Entry, TopmostNotOne, ColumnAlternation, RowAlternation, RowSum, CentralSum };

inline const char* fault_name(AstzFault f) {
    switch (f) {
        case AstzFault::Shape: return "shape";
        case AstzFault::Entry: return "entry";
        case AstzFault::TopmostNotOne: return "topmost-nonzero-not-one";
        case AstzFault::ColumnAlternation: return "column-sign-alternation";
        case AstzFault::RowAlternation: return "row-sign-alternation";
        case AstzFault::RowSum: return "row-sum";
        case AstzFault::CentralSum: return "central-column-sum";
    }
    return "?";
}

struct invalid_astz : std::invalid_argument {
    AstzFault fault;
    int row, column;  // 0-based, column absolute
    invalid_astz(AstzFault f, int r, int c)
        : std::invalid_argument(std::string(fault_name(f)) + " at row " + std::to_string(r + 1) + ", column " +
                                std::to_string(c + 1)),
          fault(f), row(r), column(c) {}
};

inline Astz validate_astz(const Rows& rows, int l) {
    const int n = int(rows.size());
    if (n < 1 || l < 1) throw invalid_astz(AstzFault::Shape, 0, 0);
    Astz a{n, l, rows};
    for (int r = 0; r < n; ++r)
        if (int(rows[r].size()) != a.width() - 2 * r) throw invalid_astz(AstzFault::Shape, r, r);
    for (int r = 0; r < n; ++r)
        for (int c = r; c <= a.row_end(r); ++c)
            if (a.at(r, c) < -1 || a.at(r, c) > 1) throw invalid_astz(AstzFault::Entry, r, c);
    for (int c = 0; c < a.width(); ++c) {
        int last = 0;
        for (int r = 0; r <= a.bottom(c); ++r) {
            int v = a.at(r, c);
            if (v == 0) continue;
            if (last == 0 && v != 1) throw invalid_astz(AstzFault::TopmostNotOne, r, c);
            if (last == v) throw invalid_astz(AstzFault::ColumnAlternation, r, c);
            last = v;
        }
    }
    for (int r = 0; r < n; ++r) {
        int last = 0, sum = 0;
        for (int c = r; c <= a.row_end(r); ++c) {
            int v = a.at(r, c);
            if (v == 0) continue;
            if (last == v) throw invalid_astz(AstzFault::RowAlternation, r, c);
            last = v;
            sum += v;
        }
        bool ok = sum == 1 || (l == 1 && r == n - 1 && sum == 0);
        if (!ok) throw invalid_astz(AstzFault::RowSum, r, a.row_end(r));
    }
    if (l >= 2)
        for (int c = n; c < n + l - 2; ++c)
            if (a.column_sum(c) != 0) throw invalid_astz(AstzFault::CentralSum, a.bottom(c), c);
    return a;
}

enum class ColumnKind { Zero, Ten, Eleven };

struct ColumnClass {
    ColumnKind kind;
    int position;  // -n..-1, 0 for central columns, 1..n
    bool central = false;
    friend bool operator==(const ColumnClass&, const ColumnClass&) = default;
};

inline ColumnKind column_kind(const Astz& a, int c) {
    if (a.column_sum(c) == 0) return ColumnKind::Zero;
    return a.at(a.bottom(c), c) == 0 ? ColumnKind::Ten : ColumnKind::Eleven;
}

inline std::vector<ColumnClass> classify_columns(const Astz& a) {
    std::vector<ColumnClass> out;
    const int lc = a.left_count(), rf = a.right_first();
    for (int c = 0; c < a.width(); ++c) {
        ColumnClass cc{column_kind(a, c), 0, false};
        if (c < lc)
            cc.position = c - lc;
        else if (c < rf)
            cc.central = true;
        else
            cc.position = c - rf + 1;
        out.push_back(cc);
    }
    return out;
}

struct StatProfile {
    int mu = 0, r = 0, p = 0, q = 0, inv = 0;
    friend bool operator==(const StatProfile&, const StatProfile&) = default;
    friend auto operator<=>(const StatProfile&, const StatProfile&) = default;
};

inline int count_minus_ones(const Astz& a) {
    int mu = 0;
    for (const auto& row : a.rows) mu += int(std::count(row.begin(), row.end(), -1));
    return mu;
}

inline StatProfile astz_stats(const Astz& a) {
    if (a.l < 2) throw std::domain_error("astz_stats needs l >= 2; use qast_stats");
    StatProfile s;
    s.mu = count_minus_ones(a);
    auto cls = classify_columns(a);
    int elevens = 0;
    for (const auto& cc : cls) {
        if (cc.central) continue;
        if (cc.position < 0) {
            if (cc.kind != ColumnKind::Zero) ++s.r;
            if (cc.kind == ColumnKind::Ten) ++s.p;
            if (cc.kind == ColumnKind::Eleven) ++elevens;
        } else if (cc.kind == ColumnKind::Ten) {
            ++s.q;
        }
    }
    struct Cell { int r, c, v; };
    std::vector<Cell> cells;
    for (int r = 0; r < a.n; ++r)
        for (int c = r; c <= a.row_end(r); ++c)
            if (a.at(r, c)) cells.push_back({r, c, a.at(r, c)});
    int inv = 0;
    for (const auto& x : cells)
        for (const auto& y : cells)
            if (x.r < y.r && x.c <= y.c) inv += x.v * y.v;
    s.inv = inv + elevens;
    return s;
}

// (i, j) when the array has exactly one left 1-column (at -i); the unique right 0-column is at j.
inline std::optional<std::pair<int, int>> ij_of(const Astz& a) {
    if (a.l < 2) return std::nullopt;
    auto cls = classify_columns(a);
    std::optional<int> i, j;
    int ones = 0;
    for (const auto& cc : cls) {
        if (cc.central) continue;
        if (cc.position < 0 && cc.kind != ColumnKind::Zero) {
            ++ones;
            i = -cc.position;
        }
        if (cc.position > 0 && cc.kind == ColumnKind::Zero && !j) j = cc.position;
    }
    if (ones != 1 || !j) return std::nullopt;
    return std::make_pair(*i, *j);
}

// Column strict shifted plane partition; row r starts on the diagonal cell (r, r).
struct Csspp {
    int k = 0;
    Rows rows;

    std::vector<int> shape() const {
        std::vector<int> s;
        for (const auto& r : rows) s.push_back(int(r.size()));
        return s;
    }
    friend bool operator==(const Csspp&, const Csspp&) = default;
    friend auto operator<=>(const Csspp&, const Csspp&) = default;
};

inline Csspp validate_csspp(const Rows& rows, int k) {
    if (k < 0) throw std::invalid_argument("negative class");
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.empty()) throw std::invalid_argument("empty row " + std::to_string(r + 1));
        if (r > 0 && row.size() >= rows[r - 1].size())
            throw std::invalid_argument("row lengths must strictly decrease at row " + std::to_string(r + 1));
        if (row[0] != k + int(row.size()))
            throw std::invalid_argument("row " + std::to_string(r + 1) + " must start with " +
                                        std::to_string(k + int(row.size())));
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1) throw std::invalid_argument("parts must be positive");
            if (c > 0 && row[c] > row[c - 1])
                throw std::invalid_argument("row " + std::to_string(r + 1) + " is not weakly decreasing");
            // shifted diagram: cell (r, r+c) sits below cell (r-1, r+c), index c+1 of the row above
            if (r > 0 && !(row[c] < rows[r - 1][c + 1]))
                throw std::invalid_argument("column not strictly decreasing at row " + std::to_string(r + 1));
        }
    }
    return Csspp{k, rows};
}

inline Csspp one_row(const std::vector<int>& parts, int k) {
    if (parts.empty()) return validate_csspp({}, k);
    return validate_csspp({parts}, k);
}

inline StatProfile csspp_stats(const Csspp& c, int d) {
    if (d < 1 || d > c.k) throw std::out_of_range("d must lie in 1..k");
    StatProfile s;
    s.r = int(c.rows.size());
    for (const auto& row : c.rows)
        for (int off = 0; off < int(row.size()); ++off) {
            int v = row[off];
            if (v == 1)
                ++s.q;
            else if (v == off + d)
                ++s.p;
            else if (v >= 2 && v <= off + c.k)
                ++s.mu;
            else
                ++s.inv;
        }
    return s;
}

struct TriangleStats {
    StatProfile stats;  // inv unused
    bool flag = false;  // selects the (P+Q-M) factor
    friend bool operator==(const TriangleStats&, const TriangleStats&) = default;
};

inline TriangleStats csspp_class0_stats(const Csspp& c) {
    if (c.k != 0) throw std::domain_error("class-0 statistics need class 0");
    TriangleStats t;
    t.stats.r = int(c.rows.size());
    for (const auto& row : c.rows)
        for (int off = 0; off < int(row.size()); ++off) {
            int v = row[off];
            if (v == 1 && off == 1) t.flag = true;
            if (off > 1 && v == off)
                ++t.stats.p;
            else if (off > 1 && v == 1)
                ++t.stats.q;
            else if (v >= 2 && v <= off - 1)
                ++t.stats.mu;
        }
    return t;
}

inline TriangleStats qast_stats(const Astz& a) {
    if (a.l != 1) throw std::domain_error("qast_stats needs l = 1");
    TriangleStats t;
    t.stats.mu = count_minus_ones(a);
    for (const auto& cc : classify_columns(a)) {
        if (cc.central) {
            if (cc.kind != ColumnKind::Zero) ++t.stats.r;
            t.flag = cc.kind == ColumnKind::Ten;
        } else if (cc.position < 0) {
            if (cc.kind != ColumnKind::Zero) ++t.stats.r;
            if (cc.kind == ColumnKind::Ten) ++t.stats.p;
        } else if (cc.kind == ColumnKind::Ten) {
            ++t.stats.q;
        }
    }
    return t;
}

inline MultiPoly weight_of(const StatProfile& s) { return MultiPoly::monomial({s.mu, s.r, s.p, s.q}); }

inline MultiPoly triangle_weight(const TriangleStats& t) {
    MultiPoly w = weight_of(t.stats);
    if (t.flag) w *= MultiPoly::var(P) + MultiPoly::var(Q) - MultiPoly::var(M);
    return w;
}

inline MultiPoly qast_weight(const Astz& a) { return triangle_weight(qast_stats(a)); }
inline MultiPoly qast_weight(const Csspp& c) { return triangle_weight(csspp_class0_stats(c)); }

// Unique element of ASTZ_{n,l}^{j,j}: rows (0..01) except row j from the bottom, which is (10..0).
inline Astz unique_diagonal_astz(int j, int n, int l) {
    if (j < 1 || j > n || l < 2) throw std::out_of_range("need 1 <= j <= n, l >= 2");
    Astz a{n, l, {}};
    for (int r = 0; r < n; ++r) {
        std::vector<int> row(a.width() - 2 * r, 0);
        if (r == n - j)
            row.front() = 1;
        else
            row.back() = 1;
        a.rows.push_back(row);
    }
    return a;
}

inline std::string render(const Astz& a) {
    std::string out;
    for (int r = 0; r < a.n; ++r) {
        out += std::string(3 * r, ' ');
        for (int c = r; c <= a.row_end(r); ++c) {
            int v = a.at(r, c);
            std::string cell = v == 1 ? "1" : v == -1 ? "-1" : "0";
            out += std::string(3 - cell.size(), ' ') + cell;
        }
        out += "\n";
    }
    return out;
}

inline std::string render(const Csspp& c) {
    std::string out;
    int width = 1;
    for (const auto& row : c.rows)
        for (int v : row) width = std::max(width, int(std::to_string(v).size()));
    for (std::size_t r = 0; r < c.rows.size(); ++r) {
        out += std::string(r * (width + 1), ' ');
        for (std::size_t i = 0; i < c.rows[r].size(); ++i) {
            std::string s = std::to_string(c.rows[r][i]);
            out += std::string(width - s.size(), ' ') + s;
            if (i + 1 < c.rows[r].size()) out += " ";
        }
        out += "\n";
    }
    if (c.rows.empty()) out = "(empty)\n";
    return out;
}

}  // namespace astz

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace astz {

using Int = boost::multiprecision::cpp_int;

// Generalised binomial: 0 for k < 0, otherwise n(n-1)...(n-k+1)/k! for any integer n.
// C(-1,0) = 1 and C(-1,1) = -1; the determinant and partition counts rely on this.
inline Int binomial(long n, long k) {
    if (k < 0) return 0;
    Int num = 1, den = 1;
    for (long t = 0; t < k; ++t) {
        num *= Int(n - t);
        den *= Int(t + 1);
    }
    return num / den;
}

// Classical convention: 0 unless 0 <= k <= n.
inline Int binomial_strict(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return binomial(n, k);
}

enum Var { M = 0, R = 1, P = 2, Q = 3 };

using Exponents = std::array<int, 4>;

class MultiPoly {
public:
    using Terms = std::map<Exponents, Int>;

    MultiPoly() = default;
    MultiPoly(long c) { add_term({0, 0, 0, 0}, Int(c)); }
    MultiPoly(const Int& c) { add_term({0, 0, 0, 0}, c); }

    static MultiPoly var(Var v) {
        Exponents e{0, 0, 0, 0};
        e[v] = 1;
        return monomial(e);
    }

    static MultiPoly monomial(const Exponents& e, const Int& c = 1) {
        for (int x : e)
            if (x < 0) throw std::domain_error("negative exponent");
        MultiPoly p;
        p.add_term(e, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MultiPoly& operator*=(const MultiPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(const MultiPoly& a) { return MultiPoly() - a; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e;
                for (int t = 0; t < 4; ++t) e[t] = ea[t] + eb[t];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    Int evaluate(const std::array<Int, 4>& at) const {
        Int sum = 0;
        for (const auto& [e, c] : terms_) {
            Int t = c;
            for (int v = 0; v < 4; ++v)
                for (int k = 0; k < e[v]; ++k) t *= at[v];
            sum += t;
        }
        return sum;
    }

    // Canonical text: terms in lexicographic exponent order, e.g. "1 + 3*M^2*P*Q^2 - R".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        static const char* names[4] = {"M", "R", "P", "Q"};
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            bool neg = c < 0;
            Int mag = neg ? Int(-c) : c;
            if (first)
                out += neg ? "- " : "";
            else
                out += neg ? " - " : " + ";
            first = false;
            std::string body;
            bool constant = true;
            for (int v = 0; v < 4; ++v) {
                if (e[v] == 0) continue;
                constant = false;
                if (!body.empty()) body += "*";
                body += names[v];
                if (e[v] > 1) body += "^" + std::to_string(e[v]);
            }
            if (constant)
                out += mag.str();
            else if (mag == 1)
                out += body;
            else
                out += mag.str() + "*" + body;
        }
        return out;
    }

private:
    Terms terms_;
};

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

namespace detail {

inline void check_square(const PolyMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("determinant of a non-square matrix");
}

}  // namespace detail

// Laplace expansion along rows, memoised on the set of remaining columns.
inline MultiPoly poly_det(const PolyMatrix& m) {
    detail::check_square(m);
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly(1);
    if (n > 20) throw std::invalid_argument("matrix too large");
    std::vector<MultiPoly> memo(std::size_t(1) << n);
    // memo[mask]: determinant of rows n-popcount(mask).. with columns in mask
    const std::size_t full = memo.size() - 1;
    memo[0] = MultiPoly(1);
    for (std::size_t mask = 1; mask <= full; ++mask) {
        int cnt = std::popcount(mask);
        std::size_t row = n - cnt;
        MultiPoly acc;
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask >> c & 1)) continue;
            if (!m[row][c].is_zero()) {
                MultiPoly t = m[row][c] * memo[mask & ~(std::size_t(1) << c)];
                if (sign > 0)
                    acc += t;
                else
                    acc -= t;
            }
            sign = -sign;
        }
        memo[mask] = std::move(acc);
    }
    return memo[full];
}

// Leibniz formula; exponential, kept as an independent cross-check.
inline MultiPoly leibniz_det(const PolyMatrix& m) {
    detail::check_square(m);
    const int n = int(m.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    MultiPoly out;
    do {
        int inversions = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inversions;
        MultiPoly t(1);
        for (int i = 0; i < n; ++i) t *= m[i][perm[i]];
        if (inversions % 2)
            out -= t;
        else
            out += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace astz

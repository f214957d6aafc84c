// Copyright 2026 The indel-codes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "indel/edit_distance.hpp"
#include "indel/galois.hpp"

namespace indel {

// Exact rational arithmetic, desk scale (int64, no overflow guard).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n) {}  // NOLINT: implicit integers are intended
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        normalize();
    }

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rational operator+(Rational a, Rational b) { return Rational(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rational operator-(Rational a, Rational b) { return Rational(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rational operator*(Rational a, Rational b) { return Rational(a.num * b.num, a.den * b.den); }
    friend Rational operator/(Rational a, Rational b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(Rational a, Rational b) { return a == b || a < b; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

    // Decimal representation when the denominator divides a power of ten,
    // otherwise "num/den".
    std::string decimal_str() const {
        std::int64_t d = den;
        int tens = 0;
        while (d % 2 == 0) {
            d /= 2;
            ++tens;
        }
        int fives = 0;
        while (d % 5 == 0) {
            d /= 5;
            ++fives;
        }
        if (d != 1) return str();
        const int digits = tens > fives ? tens : fives;
        if (digits == 0) return std::to_string(num);
        std::int64_t scale = 1;
        for (int i = 0; i < digits; ++i) scale *= 10;
        const std::int64_t scaled = num * (scale / den);
        const bool negative = scaled < 0;
        std::string frac = std::to_string(negative ? -scaled : scaled);
        if (frac.size() <= static_cast<std::size_t>(digits)) frac.insert(0, digits + 1 - frac.size(), '0');
        frac.insert(frac.size() - digits, ".");
        return (negative ? "-" : "") + frac;
    }

    // Accepts "a", "a/b", and decimal literals like "0.05".
    static Rational parse(std::string_view text) {
        const std::string s(text);
        if (const auto slash = s.find('/'); slash != std::string::npos) {
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        }
        if (const auto dot = s.find('.'); dot != std::string::npos) {
            const std::string whole = s.substr(0, dot);
            const std::string frac = s.substr(dot + 1);
            if (frac.empty()) return Rational(std::stoll(whole));
            std::int64_t den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
            std::int64_t num = std::stoll(frac);
            const bool negative = !whole.empty() && whole[0] == '-';
            const std::int64_t w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
            num = (negative ? -1 : 1) * num + w * den;
            return Rational(num, den);
        }
        return Rational(std::stoll(s));
    }
};

// Rate ceiling (1 - delta)/2 + 1/(2n) for subfield-linear codes of length n
// correcting a delta fraction of indels.
inline Rational half_singleton_bound(std::size_t n, Rational delta) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (delta < Rational(0) || !(delta < Rational(1))) throw std::invalid_argument("delta must lie in [0, 1)");
    return (Rational(1) - delta) / Rational(2) + Rational(1, 2 * static_cast<std::int64_t>(n));
}

namespace detail {

// Reduced row echelon form over E, leftmost pivots, in place. Returns pivot
// column indices.
inline std::vector<std::size_t> rref(const Field& E, std::vector<std::vector<Symbol>>& rows, std::size_t width) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const Symbol scale = E.inv(rows[r][col]);
        for (std::size_t c = col; c < width; ++c) rows[r][c] = E.mul(rows[r][c], scale);
        for (std::size_t other = 0; other < rows.size(); ++other) {
            if (other == r || rows[other][col] == 0) continue;
            const Symbol factor = rows[other][col];
            for (std::size_t c = col; c < width; ++c)
                rows[other][c] = E.sub(rows[other][c], E.mul(factor, rows[r][c]));
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

// Basis of {x : M x = 0}, deterministic: free variables in ascending column
// order, each set to 1 in its own basis vector.
inline std::vector<std::vector<Symbol>> null_space(const Field& E, std::vector<std::vector<Symbol>> rows,
                                                   std::size_t width) {
    const std::vector<std::size_t> pivots = rref(E, rows, width);
    std::vector<bool> is_pivot(width, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Symbol>> basis;
    for (std::size_t free_col = 0; free_col < width; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Symbol> x(width, 0);
        x[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = E.neg(rows[r][free_col]);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace detail

// A length-n code over F = E^{ell_ext}, linear over the base field E, given
// by a basis of its expanded length-(ell_ext * n) digit space. F-symbols are
// handled as packed digit groups: base-|E| packed indices.
class SubfieldLinearCode {
public:
    SubfieldLinearCode(Field base, std::size_t ell_ext, std::size_t n, std::vector<std::vector<Symbol>> basis)
        : base_(std::move(base)), ell_ext_(ell_ext), n_(n) {
        if (ell_ext_ < 1 || n_ < 1) throw std::invalid_argument("extension degree and length must be positive");
        const std::size_t width = digit_length();
        for (const auto& row : basis) {
            if (row.size() != width) throw std::invalid_argument("basis row length != ell_ext * n");
            for (Symbol s : row)
                if (s >= base_.q()) throw std::invalid_argument("basis entry outside the base field");
        }
        rref_ = std::move(basis);
        pivots_ = detail::rref(base_, rref_, width);
    }

    const Field& base_field() const { return base_; }
    std::size_t ell_ext() const { return ell_ext_; }
    std::size_t length() const { return n_; }
    std::size_t digit_length() const { return ell_ext_ * n_; }
    std::size_t dimension() const { return rref_.size(); }

    Rational rate() const {
        return Rational(static_cast<std::int64_t>(dimension()), static_cast<std::int64_t>(digit_length()));
    }

    const std::vector<std::vector<Symbol>>& reduced_basis() const { return rref_; }

    bool contains(std::span<const Symbol> v) const {
        if (v.size() != digit_length()) throw std::invalid_argument("vector length != ell_ext * n");
        std::vector<Symbol> rem(v.begin(), v.end());
        for (std::size_t r = 0; r < rref_.size(); ++r) {
            const Symbol factor = rem[pivots_[r]];
            if (factor == 0) continue;
            for (std::size_t c = 0; c < rem.size(); ++c) rem[c] = base_.sub(rem[c], base_.mul(factor, rref_[r][c]));
        }
        for (Symbol s : rem)
            if (s != 0) return false;
        return true;
    }

    // All |E|^k codewords as digit vectors; capped to keep enumeration sane.
    std::vector<std::vector<Symbol>> enumerate_codewords() const {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < dimension(); ++i) {
            count *= base_.q();
            if (count > (std::uint64_t{1} << 16)) throw std::invalid_argument("code too large to enumerate");
        }
        std::vector<std::vector<Symbol>> out;
        out.reserve(count);
        std::vector<Symbol> coeffs(dimension(), 0);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                coeffs[i] = static_cast<Symbol>(v % base_.q());
                v /= base_.q();
            }
            std::vector<Symbol> w(digit_length(), 0);
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                if (coeffs[i] == 0) continue;
                for (std::size_t c = 0; c < w.size(); ++c)
                    w[c] = base_.add(w[c], base_.mul(coeffs[i], rref_[i][c]));
            }
            out.push_back(std::move(w));
        }
        return out;
    }

    // Packs each group of ell_ext digits into one F-symbol index.
    std::vector<std::uint64_t> to_f_symbols(std::span<const Symbol> v) const {
        if (v.size() != digit_length()) throw std::invalid_argument("vector length != ell_ext * n");
        std::vector<std::uint64_t> out(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            std::uint64_t packed = 0;
            for (std::size_t t = ell_ext_; t-- > 0;) packed = packed * base_.q() + v[i * ell_ext_ + t];
            out[i] = packed;
        }
        return out;
    }

    // Text format: header "p m_E ell_ext n", then one basis row per line.
    static SubfieldLinearCode load(std::istream& in) {
        std::uint32_t p = 0;
        std::uint32_t m = 0;
        std::size_t ell_ext = 0;
        std::size_t n = 0;
        if (!(in >> p >> m >> ell_ext >> n)) throw std::runtime_error("bad subfield code header");
        Field base(p, m);
        std::vector<std::vector<Symbol>> basis;
        Symbol v = 0;
        std::vector<Symbol> row;
        while (in >> v) {
            row.push_back(v);
            if (row.size() == ell_ext * n) {
                basis.push_back(row);
                row.clear();
            }
        }
        if (!row.empty()) throw std::runtime_error("trailing partial basis row");
        return SubfieldLinearCode(std::move(base), ell_ext, n, std::move(basis));
    }

private:
    Field base_;
    std::size_t ell_ext_;
    std::size_t n_;
    std::vector<std::vector<Symbol>> rref_;
    std::vector<std::size_t> pivots_;
};

// Certificate that a code cannot correct one deletion: a nonzero codeword x
// whose prefix-sum vector c (c_i = sum of x_j, j < i, in F) is also a
// codeword. Deleting the first F-symbol of c and the last of c + x yields
// the same word, exhibited by `delete_from_c` / `delete_from_second`.
struct ConfusabilityWitness {
    std::vector<Symbol> x;       // digit vector
    std::vector<Symbol> c;       // digit vector, prefix sums of x
    std::vector<Symbol> second;  // digit vector, c + x
    std::vector<std::uint64_t> x_f;
    std::vector<std::uint64_t> c_f;
    std::vector<std::uint64_t> second_f;
    std::size_t delete_from_c = 0;
    std::size_t delete_from_second = 0;
};

// Solves the homogeneous system { x in C, prefix-sums(x) in C } over E by a
// null-space computation. Any nontrivial solution yields a witness; none is
// returned iff only the trivial solution exists. A rate above 1/2 forces a
// witness: the system has 2(ell n - k) equations in ell n unknowns.
inline std::optional<ConfusabilityWitness> find_confusable_pair(const SubfieldLinearCode& code) {
    const Field& E = code.base_field();
    const std::size_t width = code.digit_length();
    const std::size_t ell = code.ell_ext();

    std::vector<std::vector<Symbol>> gen(code.reduced_basis());
    std::vector<std::vector<Symbol>> parity = detail::null_space(E, std::move(gen), width);

    // Row h composed with the prefix map: coefficient of x_(j,t) is the sum
    // of h_(i,t) over i > j.
    std::vector<std::vector<Symbol>> system;
    system.reserve(2 * parity.size());
    for (const auto& h : parity) {
        system.push_back(h);
        std::vector<Symbol> composed(width, 0);
        for (std::size_t t = 0; t < ell; ++t) {
            Symbol suffix = 0;
            for (std::size_t i = code.length(); i-- > 0;) {
                composed[i * ell + t] = suffix;
                suffix = E.add(suffix, h[i * ell + t]);
            }
        }
        system.push_back(std::move(composed));
    }

    const std::vector<std::vector<Symbol>> solutions = detail::null_space(E, std::move(system), width);
    if (solutions.empty()) return std::nullopt;

    ConfusabilityWitness w;
    w.x = solutions.front();
    w.c.assign(width, 0);
    for (std::size_t t = 0; t < ell; ++t) {
        Symbol prefix = 0;
        for (std::size_t i = 0; i < code.length(); ++i) {
            w.c[i * ell + t] = prefix;
            prefix = E.add(prefix, w.x[i * ell + t]);
        }
    }
    if (!code.contains(w.x) || !code.contains(w.c))
        throw std::logic_error("null-space solution failed the membership check");
    w.second.resize(width);
    for (std::size_t c = 0; c < width; ++c) w.second[c] = E.add(w.c[c], w.x[c]);
    w.x_f = code.to_f_symbols(w.x);
    w.c_f = code.to_f_symbols(w.c);
    w.second_f = code.to_f_symbols(w.second);
    w.delete_from_c = 0;
    w.delete_from_second = code.length() - 1;
    for (std::size_t i = 0; i + 1 < code.length(); ++i)
        if (w.c_f[i + 1] != w.second_f[i]) throw std::logic_error("witness deletion results disagree");
    return w;
}

// True iff every pair of distinct codewords has Levenshtein distance > 2t,
// i.e. the t-indel balls are disjoint. Codewords are fixed-length words over
// any alphabet of packed indices.
inline bool brute_indel_capability(const std::vector<std::vector<std::uint64_t>>& codewords, std::size_t t) {
    if (codewords.size() > (std::size_t{1} << 16)) throw std::invalid_argument("too many codewords to enumerate");
    for (std::size_t i = 0; i < codewords.size(); ++i)
        if (codewords[i].size() != codewords.front().size()) throw std::invalid_argument("codeword lengths differ");
    for (std::size_t i = 0; i < codewords.size(); ++i)
        for (std::size_t j = i + 1; j < codewords.size(); ++j)
            if (levenshtein(codewords[i], codewords[j]) <= 2 * t) return false;
    return true;
}

}  // namespace indel

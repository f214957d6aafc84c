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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace indel {

// A maximal common-subsequence alignment: index pairs (i, j) with
// a[i] == b[j], strictly increasing in both coordinates. Ties between
// maximal alignments are broken deterministically; the matcher depends on
// this to stay reproducible.
struct Alignment {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    std::size_t length() const { return pairs.size(); }
};

namespace detail {

// Suffix table t[i][j] = |LCS(a[i:], b[j:])|, flattened (m+1) x (n+1).
template <typename T>
std::vector<std::uint32_t> lcs_suffix_table(std::span<const T> a, std::span<const T> b) {
    const std::size_t m = a.size();
    const std::size_t n = b.size();
    std::vector<std::uint32_t> t((m + 1) * (n + 1), 0);
    for (std::size_t i = m; i-- > 0;) {
        const std::uint32_t* below = &t[(i + 1) * (n + 1)];
        std::uint32_t* row = &t[i * (n + 1)];
        for (std::size_t j = n; j-- > 0;)
            row[j] = a[i] == b[j] ? below[j + 1] + 1 : std::max(below[j], row[j + 1]);
    }
    return t;
}

}  // namespace detail

// Alignment of maximal length. Among all maximal alignments this returns the
// one matching the first argument at the smallest possible indices (and,
// given that, the smallest indices of the second argument): symbols are
// matched greedily the moment they coincide, which is optimal whenever the
// current symbols are equal.
template <typename T>
Alignment lcs_align(std::span<const T> a, std::span<const T> b) {
    const std::size_t m = a.size();
    const std::size_t n = b.size();
    const auto table = detail::lcs_suffix_table(a, b);
    const auto at = [&](std::size_t i, std::size_t j) { return table[i * (n + 1) + j]; };
    Alignment out;
    out.pairs.reserve(at(0, 0));
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < m && j < n && at(i, j) > 0) {
        if (a[i] == b[j]) {
            out.pairs.emplace_back(i, j);
            ++i;
            ++j;
        } else if (at(i, j + 1) == at(i, j)) {
            ++j;  // b[j] is expendable; keep a[i] available for a later match
        } else {
            ++i;  // every maximal alignment from here matches b[j] deeper in a
        }
    }
    return out;
}

template <typename T>
std::size_t lcs_length(std::span<const T> a, std::span<const T> b) {
    std::span<const T> s = a.size() <= b.size() ? a : b;
    std::span<const T> l = a.size() <= b.size() ? b : a;
    std::vector<std::uint32_t> prev(s.size() + 1, 0);
    std::vector<std::uint32_t> cur(s.size() + 1, 0);
    for (std::size_t i = 0; i < l.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j)
            cur[j + 1] = l[i] == s[j] ? prev[j] + 1 : std::max(prev[j + 1], cur[j]);
        std::swap(prev, cur);
    }
    return prev[s.size()];
}

// Indel-only edit distance: |a| + |b| - 2|LCS(a, b)|, the minimum number of
// single-symbol insertions and deletions transforming a into b.
template <typename T>
std::size_t levenshtein(std::span<const T> a, std::span<const T> b) {
    return a.size() + b.size() - 2 * lcs_length(a, b);
}

template <typename T>
Alignment lcs_align(const std::vector<T>& a, const std::vector<T>& b) {
    return lcs_align(std::span<const T>(a), std::span<const T>(b));
}

template <typename T>
std::size_t lcs_length(const std::vector<T>& a, const std::vector<T>& b) {
    return lcs_length(std::span<const T>(a), std::span<const T>(b));
}

template <typename T>
std::size_t levenshtein(const std::vector<T>& a, const std::vector<T>& b) {
    return levenshtein(std::span<const T>(a), std::span<const T>(b));
}

}  // namespace indel

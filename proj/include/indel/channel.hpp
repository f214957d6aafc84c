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
#include <stdexcept>
#include <vector>

#include "indel/linear_code.hpp"
#include "indel/rng.hpp"

namespace indel {

enum class EditKind : std::uint8_t { deletion, insertion };

// One edit of an edit script. Positions are 0-based and refer to the
// intermediate word at application time, not to the original word; this
// makes composition and cost accounting unambiguous.
struct Edit {
    EditKind kind;
    std::size_t position;     // deletion: [0, len), insertion: [0, len]
    std::uint64_t value = 0;  // inserted symbol, insertions only
};

struct IndelPattern {
    std::vector<Edit> edits;

    std::size_t cost() const { return edits.size(); }

    std::size_t deletion_count() const {
        std::size_t c = 0;
        for (const Edit& e : edits) c += e.kind == EditKind::deletion;
        return c;
    }

    std::size_t insertion_count() const { return edits.size() - deletion_count(); }
};

// Applies the edits in order. The result has length |w| - D + I and is
// within Levenshtein distance D + I of w.
template <typename T>
std::vector<T> apply_pattern(std::span<const T> w, const IndelPattern& p) {
    std::vector<T> out(w.begin(), w.end());
    for (const Edit& e : p.edits) {
        if (e.kind == EditKind::deletion) {
            if (e.position >= out.size()) throw std::out_of_range("deletion position past end of word");
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(e.position));
        } else {
            if (e.position > out.size()) throw std::out_of_range("insertion position past end of word");
            out.insert(out.begin() + static_cast<std::ptrdiff_t>(e.position), static_cast<T>(e.value));
        }
    }
    return out;
}

template <typename T>
std::vector<T> apply_pattern(const std::vector<T>& w, const IndelPattern& p) {
    return apply_pattern(std::span<const T>(w), p);
}

// D uniform deletions and I uniform insertions in a uniformly random valid
// interleaving; inserted values are uniform over [0, alphabet), zero
// included. Deterministic per seed.
inline IndelPattern random_pattern(std::size_t len, std::size_t deletions, std::size_t insertions,
                                   std::uint64_t alphabet, std::uint64_t seed) {
    if (deletions > len) throw std::invalid_argument("cannot delete more symbols than the word holds");
    if (alphabet == 0) throw std::invalid_argument("alphabet must be nonempty");
    Rng rng(seed);
    std::vector<EditKind> order(deletions, EditKind::deletion);
    order.insert(order.end(), insertions, EditKind::insertion);
    rng.shuffle(order);
    IndelPattern p;
    p.edits.reserve(order.size());
    std::size_t cur = len;
    for (EditKind kind : order) {
        if (kind == EditKind::deletion) {
            p.edits.push_back(Edit{kind, static_cast<std::size_t>(rng.below(cur)), 0});
            --cur;
        } else {
            p.edits.push_back(Edit{kind, static_cast<std::size_t>(rng.below(cur + 1)), rng.below(alphabet)});
            ++cur;
        }
    }
    return p;
}

// The attack strategies from the decoder's damage analysis.
enum class AdversaryStrategy {
    window_parity,    // one deletion per window: the window turns odd and is discarded
    window_desync,    // delete a window's first symbol, insert a nonzero one at its end: all pairs shift
    delimiter_delete, // remove a whole two-zero delimiter: adjacent windows merge past the 2*ell cap
};

// Builds an edit script realizing the strategy against a specific codeword,
// spending at most `budget` edits. Targets are located via segment() and
// chosen with seeded randomness; positions are emitted in descending order
// so each edit leaves the positions of later edits untouched.
inline IndelPattern adversarial_pattern(std::span<const Symbol> codeword, const LinearIndelCode& code,
                                        AdversaryStrategy strategy, std::size_t budget, std::uint64_t seed) {
    const std::size_t unit = strategy == AdversaryStrategy::window_parity ? 1 : 2;
    if (budget < unit) throw std::invalid_argument("budget below the strategy's unit cost");
    Rng rng(seed);
    const Segmentation seg = segment(codeword);
    const std::size_t q = code.field().q();

    struct Planned {
        std::size_t position;    // in the original word
        std::size_t window_len;  // window_desync only
        std::uint64_t value;
    };
    std::vector<Planned> plan;

    if (strategy == AdversaryStrategy::window_parity) {
        std::vector<std::size_t> targets(seg.windows.size());
        for (std::size_t w = 0; w < targets.size(); ++w) targets[w] = w;
        rng.shuffle(targets);
        const std::size_t count = std::min(budget, targets.size());
        for (std::size_t t = 0; t < count; ++t) {
            const std::size_t w = targets[t];
            const std::size_t offset = rng.below(seg.windows[w].size());
            plan.push_back(Planned{seg.window_start(w) + offset, 0, 0});
        }
    } else if (strategy == AdversaryStrategy::window_desync) {
        std::vector<std::size_t> targets(seg.windows.size());
        for (std::size_t w = 0; w < targets.size(); ++w) targets[w] = w;
        rng.shuffle(targets);
        const std::size_t count = std::min(budget / 2, targets.size());
        for (std::size_t t = 0; t < count; ++t) {
            const std::size_t w = targets[t];
            plan.push_back(Planned{seg.window_start(w), seg.windows[w].size(), rng.nonzero_below(q)});
        }
    } else {
        // Interior delimiters of length exactly two; removing one merges its
        // neighbors into a window the decoder must discard.
        std::vector<std::size_t> targets;
        for (std::size_t d = 1; d + 1 < seg.delimiter_lengths.size(); ++d)
            if (seg.delimiter_lengths[d] == 2) targets.push_back(d);
        rng.shuffle(targets);
        const std::size_t count = std::min(budget / 2, targets.size());
        for (std::size_t t = 0; t < count; ++t) {
            const std::size_t d = targets[t];
            const std::size_t start = seg.window_start(d - 1) + seg.windows[d - 1].size();
            plan.push_back(Planned{start, 0, 0});
        }
    }

    std::sort(plan.begin(), plan.end(), [](const Planned& a, const Planned& b) { return a.position > b.position; });
    IndelPattern p;
    for (const Planned& pl : plan) {
        if (strategy == AdversaryStrategy::window_parity) {
            p.edits.push_back(Edit{EditKind::deletion, pl.position, 0});
        } else if (strategy == AdversaryStrategy::window_desync) {
            // Insert after the window's last symbol first, then delete its
            // first; the insertion sits past the deletion point.
            p.edits.push_back(Edit{EditKind::insertion, pl.position + pl.window_len, pl.value});
            p.edits.push_back(Edit{EditKind::deletion, pl.position, 0});
        } else {
            p.edits.push_back(Edit{EditKind::deletion, pl.position, 0});
            p.edits.push_back(Edit{EditKind::deletion, pl.position, 0});
        }
    }
    return p;
}

}  // namespace indel

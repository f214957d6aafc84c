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

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "indel/edit_distance.hpp"
#include "indel/erasure_word.hpp"
#include "indel/sync_sequence.hpp"

namespace indel {

// A received pair after unmasking: the code coordinate and the recovered
// synchronization symbol.
struct ReceivedSymbol {
    Symbol code;
    Symbol sync;
};

struct MatchReport {
    std::size_t erasures = 0;    // '?' entries in the output word
    std::size_t rounds = 0;      // LCS rounds executed
    std::size_t matched = 0;     // received symbols assigned a position
    std::size_t collisions = 0;  // positions with two or more candidates
};

// Aligns the received sync coordinates against the reference sequence by
// repeated LCS rounds. Each round aligns the still-unmatched received
// symbols with the full reference, records the matched position of every
// newly matched received index, and removes those indices permanently.
// floor(1/sqrt(tau)) rounds are executed, at least one. A position of the
// reference matched by exactly one received index receives that index's
// code coordinate; every other position becomes '?'. The output length is
// always the reference length, whatever the received length.
inline std::pair<ErasureWord, MatchReport> match_sync(const SyncSequence& s,
                                                      std::span<const ReceivedSymbol> received, double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
    const std::size_t n = s.size();
    const std::size_t m = received.size();
    std::size_t rounds = static_cast<std::size_t>(std::floor(1.0 / std::sqrt(tau)));
    if (rounds < 1) rounds = 1;

    std::vector<std::optional<std::size_t>> position(m);
    std::vector<std::size_t> remaining(m);
    for (std::size_t j = 0; j < m; ++j) remaining[j] = j;
    std::vector<Symbol> rem_sync(m);

    for (std::size_t r = 0; r < rounds; ++r) {
        rem_sync.resize(remaining.size());
        for (std::size_t t = 0; t < remaining.size(); ++t) rem_sync[t] = received[remaining[t]].sync;
        const Alignment al = lcs_align(std::span<const Symbol>(s.symbols()), std::span<const Symbol>(rem_sync));
        std::vector<bool> taken(remaining.size(), false);
        for (const auto& [i, t] : al.pairs) {
            position[remaining[t]] = i;
            taken[t] = true;
        }
        std::vector<std::size_t> next;
        next.reserve(remaining.size() - al.pairs.size());
        for (std::size_t t = 0; t < remaining.size(); ++t)
            if (!taken[t]) next.push_back(remaining[t]);
        remaining = std::move(next);
    }

    std::vector<std::size_t> count(n, 0);
    std::vector<std::size_t> candidate(n, 0);
    MatchReport report;
    report.rounds = rounds;
    for (std::size_t j = 0; j < m; ++j) {
        if (!position[j]) continue;
        ++report.matched;
        ++count[*position[j]];
        candidate[*position[j]] = j;
    }

    ErasureWord out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (count[i] == 1)
            out.entries[i] = received[candidate[i]].code;
        else if (count[i] >= 2)
            ++report.collisions;
    }
    report.erasures = out.erasure_count();
    return {std::move(out), report};
}

inline std::pair<ErasureWord, MatchReport> match_sync(const SyncSequence& s,
                                                      const std::vector<ReceivedSymbol>& received, double tau) {
    return match_sync(s, std::span<const ReceivedSymbol>(received), tau);
}

}  // namespace indel

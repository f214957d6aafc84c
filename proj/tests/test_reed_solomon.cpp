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

#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <vector>

#include "indel/erasure_word.hpp"
#include "indel/galois.hpp"
#include "indel/reed_solomon.hpp"
#include "indel/rng.hpp"

using indel::ErasureWord;
using indel::Field;
using indel::ReedSolomon;
using indel::Rng;
using indel::Symbol;

namespace {

std::vector<std::vector<Symbol>> all_messages(const Field& f, std::size_t k) {
    std::vector<std::vector<Symbol>> out;
    std::vector<Symbol> msg(k, 0);
    for (;;) {
        out.push_back(msg);
        std::size_t i = 0;
        while (i < k && ++msg[i] == f.q()) msg[i++] = 0;
        if (i == k) break;
    }
    return out;
}

// Hamming-nearest codeword over an enumerated codebook, erasures excluded
// from the distance; the independent decoding oracle for tiny codes.
std::optional<std::vector<Symbol>> nearest_codeword_oracle(const std::vector<std::vector<Symbol>>& msgs,
                                                           const ReedSolomon& rs, const ErasureWord& w) {
    std::optional<std::vector<Symbol>> best;
    std::size_t best_dist = 0;
    bool tie = false;
    for (const auto& msg : msgs) {
        const std::vector<Symbol> cw = rs.encode(msg);
        std::size_t dist = 0;
        for (std::size_t i = 0; i < cw.size(); ++i)
            if (w.entries[i] != ErasureWord::erased && w.entries[i] != cw[i]) ++dist;
        if (!best || dist < best_dist) {
            best = msg;
            best_dist = dist;
            tie = false;
        } else if (dist == best_dist) {
            tie = true;
        }
    }
    if (tie) return std::nullopt;
    return best;
}

}  // namespace

TEST_CASE("construction and distance") {
    const Field f7(7, 1);
    CHECK(ReedSolomon(f7, 6, 2).min_distance() == 5);
    CHECK(ReedSolomon(Field(2, 8), 240, 120).min_distance() == 121);
    CHECK_THROWS_AS(ReedSolomon(f7, 8, 2), std::invalid_argument);
    CHECK_THROWS_AS(ReedSolomon(f7, 6, 0), std::invalid_argument);
    CHECK_THROWS_AS(ReedSolomon(f7, 6, 7), std::invalid_argument);
}

TEST_CASE("encoding evaluates the message polynomial") {
    const Field f7(7, 1);
    const ReedSolomon rs(f7, 6, 2);
    CHECK(rs.encode(std::vector<Symbol>{0, 0}) == std::vector<Symbol>{0, 0, 0, 0, 0, 0});
    // 1 + x at points 0..5
    CHECK(rs.encode(std::vector<Symbol>{1, 1}) == std::vector<Symbol>{1, 2, 3, 4, 5, 6});
    CHECK_THROWS_AS(rs.encode(std::vector<Symbol>{1, 2, 3}), std::invalid_argument);

    Rng rng(3);
    const ReedSolomon rs256(Field(2, 8), 40, 10);
    const Field& f = rs256.field();
    for (int t = 0; t < 50; ++t) {
        std::vector<Symbol> u(10), v(10), sum(10);
        for (std::size_t i = 0; i < 10; ++i) {
            u[i] = static_cast<Symbol>(rng.below(256));
            v[i] = static_cast<Symbol>(rng.below(256));
            sum[i] = f.add(u[i], v[i]);
        }
        const auto cu = rs256.encode(u);
        const auto cv = rs256.encode(v);
        const auto cs = rs256.encode(sum);
        for (std::size_t i = 0; i < 40; ++i) REQUIRE(cs[i] == f.add(cu[i], cv[i]));
    }
}

TEST_CASE("toy code: errors and erasures inside the radius, oracle-checked") {
    const Field f7(7, 1);
    const ReedSolomon rs(f7, 6, 2);
    const auto msgs = all_messages(f7, 2);

    // Uncorrupted codewords decode to their message.
    for (const auto& msg : msgs) {
        const auto decoded = rs.decode(rs.encode(msg));
        REQUIRE(decoded.has_value());
        REQUIRE(*decoded == msg);
    }

    // Two erasures plus one substitution: 2*1 + 2 = 4 < 5.
    const std::vector<Symbol> msg{3, 4};
    const std::vector<Symbol> cw = rs.encode(msg);
    ErasureWord w{std::vector<Symbol>(cw)};
    w.entries[0] = ErasureWord::erased;
    w.entries[3] = ErasureWord::erased;
    w.entries[5] = f7.add(w.entries[5], 2);
    const auto decoded = rs.decode(w);
    REQUIRE(decoded.has_value());
    CHECK(*decoded == msg);
    const auto oracle = nearest_codeword_oracle(msgs, rs, w);
    REQUIRE(oracle.has_value());
    CHECK(*oracle == msg);

    // Three substitutions sit outside the contract; any outcome but a crash
    // is acceptable.
    ErasureWord bad{std::vector<Symbol>(cw)};
    bad.entries[0] = f7.add(bad.entries[0], 1);
    bad.entries[1] = f7.add(bad.entries[1], 1);
    bad.entries[2] = f7.add(bad.entries[2], 1);
    CHECK_NOTHROW(rs.decode(bad));
}

TEST_CASE("minimum distance confirmed pairwise on the toy code") {
    const Field f7(7, 1);
    const ReedSolomon rs(f7, 6, 2);
    const auto msgs = all_messages(f7, 2);
    std::size_t min_dist = 6;
    for (std::size_t i = 0; i < msgs.size(); ++i)
        for (std::size_t j = i + 1; j < msgs.size(); ++j) {
            const auto a = rs.encode(msgs[i]);
            const auto b = rs.encode(msgs[j]);
            std::size_t dist = 0;
            for (std::size_t t = 0; t < 6; ++t) dist += a[t] != b[t];
            min_dist = std::min(min_dist, dist);
        }
    CHECK(min_dist == rs.min_distance());
}

TEST_CASE("reference code: randomized radius trials") {
    const ReedSolomon rs(Field(2, 8), 240, 120);
    const Field& f = rs.field();
    Rng rng(101);
    const std::size_t d = rs.min_distance();
    for (int t = 0; t < 10000; ++t) {
        std::vector<Symbol> msg(120);
        for (Symbol& s : msg) s = static_cast<Symbol>(rng.below(256));
        const std::vector<Symbol> cw = rs.encode(msg);

        // Random (s, e) with 2s + e < d.
        const std::size_t subs = rng.below(d / 2 + 1);
        const std::size_t erasures = rng.below(d - 2 * subs);
        std::vector<std::size_t> positions(240);
        for (std::size_t i = 0; i < 240; ++i) positions[i] = i;
        rng.shuffle(positions);
        ErasureWord w{std::vector<Symbol>(cw)};
        std::size_t at = 0;
        for (std::size_t i = 0; i < subs; ++i, ++at)
            w.entries[positions[at]] = f.add(w.entries[positions[at]], static_cast<Symbol>(rng.nonzero_below(256)));
        for (std::size_t i = 0; i < erasures; ++i, ++at) w.entries[positions[at]] = ErasureWord::erased;

        const auto decoded = rs.decode(w);
        REQUIRE(decoded.has_value());
        REQUIRE(*decoded == msg);
    }
}

TEST_CASE("erasures beyond the radius fail cleanly") {
    const Field f7(7, 1);
    const ReedSolomon rs(f7, 6, 2);
    ErasureWord w(6);  // everything erased
    CHECK_FALSE(rs.decode(w).has_value());
    CHECK_THROWS_AS(rs.decode(ErasureWord(5)), std::invalid_argument);
}

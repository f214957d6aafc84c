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

#include "indel/edit_distance.hpp"
#include "indel/half_linear.hpp"
#include "indel/rng.hpp"

using indel::DecoderVariant;
using indel::Field;
using indel::HalfLinearCode;
using indel::pack_pair;
using indel::PairSymbol;
using indel::ReedSolomon;
using indel::Rng;
using indel::Symbol;
using indel::SyncSequence;
using indel::SyncVerifySpec;

namespace {

HalfLinearCode toy_code() {
    const Field f7(7, 1);
    return HalfLinearCode(ReedSolomon(f7, 6, 2),
                          SyncSequence::from_symbols({1, 2, 3, 1, 2, 3}, 0.9, SyncVerifySpec{}));
}

std::vector<std::uint64_t> packed(const Field& f, const std::vector<PairSymbol>& pairs) {
    std::vector<std::uint64_t> out(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) out[i] = pack_pair(f, pairs[i]);
    return out;
}

// Levenshtein-nearest codeword over the whole toy codebook; ties fail.
std::optional<std::vector<Symbol>> nearest_oracle(const HalfLinearCode& code,
                                                  const std::vector<PairSymbol>& received) {
    const Field& f = code.field();
    const std::vector<std::uint64_t> rec = packed(f, received);
    std::optional<std::vector<Symbol>> best;
    std::size_t best_dist = 0;
    bool tie = false;
    for (Symbol a = 0; a < 7; ++a)
        for (Symbol b = 0; b < 7; ++b) {
            const std::vector<Symbol> msg{a, b};
            const std::size_t dist = indel::levenshtein(packed(f, code.encode(msg)), rec);
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

TEST_CASE("construction validates the sync sequence") {
    const Field f7(7, 1);
    const ReedSolomon rs(f7, 6, 2);
    CHECK_THROWS_AS(HalfLinearCode(rs, SyncSequence::from_symbols({1, 2, 3}, 0.9, SyncVerifySpec{})),
                    std::invalid_argument);
    CHECK_THROWS_AS(HalfLinearCode(rs, SyncSequence::from_symbols({1, 2, 3, 1, 2, 9}, 0.9, SyncVerifySpec{})),
                    std::invalid_argument);  // 9 outside F_7
}

TEST_CASE("encoding masks the inner codeword") {
    const HalfLinearCode code = toy_code();
    CHECK(code.encode(std::vector<Symbol>{0, 0}) == std::vector<PairSymbol>(6, PairSymbol{0, 0}));
    const std::vector<PairSymbol> expected{{1, 1}, {2, 4}, {3, 2}, {4, 4}, {5, 3}, {6, 4}};
    CHECK(code.encode(std::vector<Symbol>{1, 1}) == expected);
}

TEST_CASE("half-linearity: encode is F_q-linear in the message") {
    const HalfLinearCode code = toy_code();
    const Field& f = code.field();
    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
        const std::vector<Symbol> u{static_cast<Symbol>(rng.below(7)), static_cast<Symbol>(rng.below(7))};
        const std::vector<Symbol> v{static_cast<Symbol>(rng.below(7)), static_cast<Symbol>(rng.below(7))};
        const Symbol alpha = static_cast<Symbol>(rng.below(7));
        const std::vector<Symbol> au_v{f.add(f.mul(alpha, u[0]), v[0]), f.add(f.mul(alpha, u[1]), v[1])};
        const auto eu = code.encode(u);
        const auto ev = code.encode(v);
        const auto combined = code.encode(au_v);
        for (std::size_t i = 0; i < 6; ++i) {
            REQUIRE(combined[i].a == f.add(f.mul(alpha, eu[i].a), ev[i].a));
            REQUIRE(combined[i].b == f.add(f.mul(alpha, eu[i].b), ev[i].b));
        }
    }
}

TEST_CASE("mask consistency: b = s_i * a, zeros aligned") {
    const HalfLinearCode code = toy_code();
    const Field& f = code.field();
    for (Symbol a = 0; a < 7; ++a)
        for (Symbol b = 0; b < 7; ++b) {
            const auto cw = code.encode(std::vector<Symbol>{a, b});
            for (std::size_t i = 0; i < 6; ++i) {
                REQUIRE(cw[i].b == f.mul(code.sync().symbols()[i], cw[i].a));
                REQUIRE((cw[i].a == 0) == (cw[i].b == 0));
            }
        }
}

TEST_CASE("uncorrupted codewords decode under both variants") {
    const HalfLinearCode code = toy_code();
    for (Symbol a = 0; a < 7; ++a)
        for (Symbol b = 0; b < 7; ++b) {
            const std::vector<Symbol> msg{a, b};
            const auto cw = code.encode(msg);
            const auto improved = code.decode(cw, DecoderVariant::improved);
            REQUIRE(improved.message.has_value());
            REQUIRE(*improved.message == msg);
            const auto baseline = code.decode(cw, DecoderVariant::baseline);
            if (a == 0 && b == 0) {
                // The all-zero codeword is invisible to the baseline: every
                // pair is dropped and the word is fully erased.
                REQUIRE_FALSE(baseline.message.has_value());
            } else {
                REQUIRE(baseline.message.has_value());
                REQUIRE(*baseline.message == msg);
            }
        }
}

TEST_CASE("decoding tolerates removal of the zero pairs it would drop anyway") {
    const HalfLinearCode code = toy_code();
    // msg (3,4): inner codeword 3 + 4x at 0..5 = (3,0,4,1,5,2) has a zero.
    const std::vector<Symbol> msg{3, 4};
    std::vector<PairSymbol> cw = code.encode(msg);
    std::erase_if(cw, [](PairSymbol p) { return p.a == 0; });
    REQUIRE(cw.size() == 5);
    const auto result = code.decode(cw, DecoderVariant::improved);
    REQUIRE(result.message.has_value());
    CHECK(*result.message == msg);
}

TEST_CASE("one deleted pair decodes under the improved variant, oracle-checked") {
    const HalfLinearCode code = toy_code();
    const std::vector<Symbol> msg{1, 1};
    std::vector<PairSymbol> received = code.encode(msg);
    received.erase(received.begin() + 3);

    const auto improved = code.decode(received, DecoderVariant::improved);
    REQUIRE(improved.message.has_value());
    CHECK(*improved.message == msg);
    CHECK(improved.report.erasures == 1);

    const auto baseline = code.decode(received, DecoderVariant::baseline);
    REQUIRE(baseline.message.has_value());
    CHECK(*baseline.message == msg);

    const auto oracle = nearest_oracle(code, received);
    REQUIRE(oracle.has_value());
    CHECK(*oracle == msg);
}

TEST_CASE("all-zero codeword survives insertions under the improved variant") {
    const HalfLinearCode code = toy_code();
    const std::vector<Symbol> zero{0, 0};
    Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        std::vector<PairSymbol> received = code.encode(zero);
        const std::size_t insertions = rng.below(3);  // weight stays below d/2 = 2.5
        for (std::size_t i = 0; i < insertions; ++i) {
            const PairSymbol junk{static_cast<Symbol>(rng.nonzero_below(7)), static_cast<Symbol>(rng.nonzero_below(7))};
            received.insert(received.begin() + static_cast<std::ptrdiff_t>(rng.below(received.size() + 1)), junk);
        }
        const auto result = code.decode(received, DecoderVariant::improved);
        REQUIRE(result.message.has_value());
        REQUIRE(*result.message == zero);
    }
}

TEST_CASE("half-zero insertions are discarded before matching") {
    const HalfLinearCode code = toy_code();
    const std::vector<Symbol> msg{1, 1};
    std::vector<PairSymbol> received = code.encode(msg);
    received.insert(received.begin() + 2, PairSymbol{0, 5});  // adversarial half-zero pair
    received.insert(received.begin() + 5, PairSymbol{4, 0});
    const auto result = code.decode(received, DecoderVariant::improved);
    REQUIRE(result.message.has_value());
    CHECK(*result.message == msg);
    CHECK(result.report.erasures == 0);  // survivors align exactly
}

TEST_CASE("empty received input behaves per contract") {
    const HalfLinearCode code = toy_code();
    const auto improved = code.decode(std::vector<PairSymbol>{}, DecoderVariant::improved);
    REQUIRE(improved.message.has_value());
    CHECK(*improved.message == std::vector<Symbol>{0, 0});  // all-zero fill decodes to the zero message
    const auto baseline = code.decode(std::vector<PairSymbol>{}, DecoderVariant::baseline);
    CHECK_FALSE(baseline.message.has_value());  // n erasures exceed the radius
}

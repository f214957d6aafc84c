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
#include "indel/linear_code.hpp"
#include "indel/rng.hpp"

using indel::choose_ell;
using indel::DecoderVariant;
using indel::Field;
using indel::flat;
using indel::HalfLinearCode;
using indel::LinearIndelCode;
using indel::pad;
using indel::PairSymbol;
using indel::ReedSolomon;
using indel::reinterleave;
using indel::Rng;
using indel::segment;
using indel::Segmentation;
using indel::Symbol;
using indel::SyncSequence;
using indel::SyncVerifySpec;
using indel::unflat;

namespace {

// All-distinct sync symbols: disjoint windows share nothing, so the sequence
// is tau-self-matching for every tau in (0, 1).
LinearIndelCode toy_code(std::size_t ell = 3) {
    const Field f7(7, 1);
    HalfLinearCode base(ReedSolomon(f7, 6, 2), SyncSequence::from_symbols({1, 2, 3, 4, 5, 6}, 0.9, SyncVerifySpec{}));
    return LinearIndelCode(std::move(base), ell);
}

// Levenshtein-nearest codeword over the whole toy codebook; ties fail.
std::optional<std::vector<Symbol>> nearest_lin_oracle(const LinearIndelCode& code,
                                                      const std::vector<Symbol>& received) {
    std::optional<std::vector<Symbol>> best;
    std::size_t best_dist = 0;
    bool tie = false;
    for (Symbol a = 0; a < 7; ++a)
        for (Symbol b = 0; b < 7; ++b) {
            const std::vector<Symbol> msg{a, b};
            const std::size_t dist = indel::levenshtein(code.encode(msg), received);
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

TEST_CASE("flat interleaves pair coordinates") {
    const std::vector<PairSymbol> pairs{{0, 2}, {1, 2}, {0, 1}, {2, 2}};
    const std::vector<Symbol> expected{0, 2, 1, 2, 0, 1, 2, 2};
    CHECK(flat(pairs) == expected);
    CHECK(flat(std::vector<PairSymbol>{}).empty());
    CHECK(unflat(std::span<const Symbol>(expected)) == pairs);

    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        std::vector<PairSymbol> p(rng.below(20));
        for (auto& x : p) x = PairSymbol{static_cast<Symbol>(rng.below(9)), static_cast<Symbol>(rng.below(9))};
        REQUIRE(unflat(std::span<const Symbol>(flat(p))) == p);
    }

    const std::vector<Symbol> odd{1, 2, 3};
    CHECK_THROWS_AS(unflat(std::span<const Symbol>(odd)), std::invalid_argument);
}

TEST_CASE("pad inserts a two-zero delimiter after every complete group") {
    const std::vector<Symbol> v{0, 2, 1, 2, 0, 1, 2, 2};
    const std::vector<Symbol> expected{0, 2, 1, 2, 0, 1, 0, 0, 2, 2};
    CHECK(pad(v, 3) == expected);

    // No complete group of 2*ell: unchanged. A word of exactly one complete
    // group still receives its trailing delimiter, per the counting formula.
    CHECK(pad(v, 5) == v);
    std::vector<Symbol> one_group{v};
    one_group.push_back(0);
    one_group.push_back(0);
    CHECK(pad(v, 4) == one_group);
    CHECK(pad(std::vector<Symbol>{}, 2).empty());

    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        std::vector<Symbol> w(rng.below(40));
        for (Symbol& x : w) x = static_cast<Symbol>(rng.below(5));
        const std::size_t ell = 1 + rng.below(5);
        REQUIRE(pad(w, ell).size() == w.size() + 2 * (w.size() / (2 * ell)));
    }
}

TEST_CASE("segmentation splits on maximal zero-free windows") {
    const std::vector<Symbol> y{1, 1, 1, 0, 2, 1, 3, 0, 0, 0, 1};
    const Segmentation seg = segment(y);
    REQUIRE(seg.windows.size() == 3);
    CHECK(seg.windows[0] == std::vector<Symbol>{1, 1, 1});
    CHECK(seg.windows[1] == std::vector<Symbol>{2, 1, 3});
    CHECK(seg.windows[2] == std::vector<Symbol>{1});
    CHECK(seg.delimiter_lengths == std::vector<std::size_t>{0, 1, 3, 0});
    CHECK(reinterleave(seg) == y);
    CHECK(seg.window_start(0) == 0);
    CHECK(seg.window_start(1) == 4);
    CHECK(seg.window_start(2) == 10);

    const Segmentation zeros = segment(std::vector<Symbol>{0, 0, 0, 0});
    CHECK(zeros.windows.empty());
    CHECK(zeros.delimiter_lengths == std::vector<std::size_t>{4});

    const Segmentation free = segment(std::vector<Symbol>{3, 4, 5});
    REQUIRE(free.windows.size() == 1);
    CHECK(free.windows[0] == std::vector<Symbol>{3, 4, 5});
    CHECK(free.delimiter_lengths == std::vector<std::size_t>{0, 0});

    Rng rng(9);
    for (int t = 0; t < 100; ++t) {
        std::vector<Symbol> w(rng.below(30));
        for (Symbol& x : w) x = static_cast<Symbol>(rng.below(3));
        REQUIRE(reinterleave(segment(w)) == w);
    }
}

TEST_CASE("choose_ell follows the interval rule") {
    CHECK(choose_ell(1.0 / 64.0) == 3);
    CHECK(choose_ell(0.01) == 4);
    CHECK(choose_ell(0.03) == 2);    // 1/(2 sqrt(0.03)) = 2.886..., ceil = 3
    CHECK(choose_ell(0.0001) == 49); // 1/(2*0.01) = 50 exactly
    CHECK_THROWS_AS(choose_ell(1.0 / 16.0), std::invalid_argument);
    CHECK_THROWS_AS(choose_ell(0.0), std::invalid_argument);
    CHECK_THROWS_AS(choose_ell(0.2), std::invalid_argument);
}

TEST_CASE("construction requires ell dividing n") {
    const Field f7(7, 1);
    HalfLinearCode base(ReedSolomon(f7, 6, 2), SyncSequence::from_symbols({1, 2, 3, 4, 5, 6}, 0.9, SyncVerifySpec{}));
    CHECK_THROWS_AS(LinearIndelCode(base, 4), std::invalid_argument);
    CHECK_THROWS_AS(LinearIndelCode(base, 0), std::invalid_argument);
    CHECK_NOTHROW(LinearIndelCode(base, 2));
}

TEST_CASE("encoding length and linearity") {
    const LinearIndelCode code = toy_code();
    CHECK(code.codeword_length() == 16);  // 2*6*(3+1)/3

    const std::vector<Symbol> zero_cw = code.encode(std::vector<Symbol>{0, 0});
    CHECK(zero_cw == std::vector<Symbol>(16, 0));

    const Field& f = code.field();
    Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        const std::vector<Symbol> u{static_cast<Symbol>(rng.below(7)), static_cast<Symbol>(rng.below(7))};
        const std::vector<Symbol> v{static_cast<Symbol>(rng.below(7)), static_cast<Symbol>(rng.below(7))};
        const std::vector<Symbol> sum{f.add(u[0], v[0]), f.add(u[1], v[1])};
        const auto cu = code.encode(u);
        const auto cv = code.encode(v);
        const auto cs = code.encode(sum);
        REQUIRE(cu.size() == 16);
        for (std::size_t i = 0; i < 16; ++i) REQUIRE(cs[i] == f.add(cu[i], cv[i]));
    }
}

TEST_CASE("every zero run in a codeword has even length") {
    const LinearIndelCode code = toy_code();
    Rng rng(29);
    for (int t = 0; t < 500; ++t) {
        const std::vector<Symbol> msg{static_cast<Symbol>(rng.below(7)), static_cast<Symbol>(rng.below(7))};
        const std::vector<Symbol> cw = code.encode(msg);
        std::size_t run = 0;
        for (Symbol s : cw) {
            if (s == 0) {
                ++run;
            } else {
                REQUIRE(run % 2 == 0);
                run = 0;
            }
        }
        REQUIRE(run % 2 == 0);
    }
}

TEST_CASE("uncorrupted codewords decode; L is the pair sequence minus zero pairs") {
    const LinearIndelCode code = toy_code();
    for (Symbol a = 0; a < 7; ++a)
        for (Symbol b = 0; b < 7; ++b) {
            const std::vector<Symbol> msg{a, b};
            const auto result = code.decode(code.encode(msg));
            REQUIRE(result.message.has_value());
            REQUIRE(*result.message == msg);

            std::vector<PairSymbol> expected = code.base().encode(msg);
            std::erase_if(expected, [](PairSymbol p) { return p.a == 0; });
            REQUIRE(result.pairs == expected);
            REQUIRE(result.windows_discarded == 0);
        }
}

TEST_CASE("a deletion inside a window discards that window but still decodes") {
    // ell = 1 keeps the per-window loss inside the decoding radius.
    const LinearIndelCode code = toy_code(1);
    const std::vector<Symbol> msg{1, 1};  // codeword pairs all nonzero
    std::vector<Symbol> cw = code.encode(msg);
    REQUIRE(cw.size() == 24);
    cw.erase(cw.begin());  // first window turns odd
    const auto result = code.decode(cw);
    CHECK(result.windows_discarded == 1);
    CHECK(result.report.erasures == 1);
    REQUIRE(result.message.has_value());
    CHECK(*result.message == msg);

    const auto oracle = nearest_lin_oracle(code, cw);
    REQUIRE(oracle.has_value());
    CHECK(*oracle == msg);
}

TEST_CASE("all-zero codeword plus insertions decodes to zero, oracle-checked") {
    const LinearIndelCode code = toy_code(1);
    const std::vector<Symbol> zero{0, 0};
    const std::vector<Symbol> zero_cw = code.encode(zero);
    Rng rng(41);
    for (int t = 0; t < 40; ++t) {
        std::vector<Symbol> received = zero_cw;
        const std::size_t insertions = 1 + rng.below(2);  // matched weight stays under d/2
        for (std::size_t i = 0; i < insertions; ++i)
            received.insert(received.begin() + static_cast<std::ptrdiff_t>(rng.below(received.size() + 1)),
                            static_cast<Symbol>(rng.below(7)));
        const auto result = code.decode(received);
        REQUIRE(result.message.has_value());
        REQUIRE(*result.message == zero);
        const auto oracle = nearest_lin_oracle(code, received);
        if (oracle) REQUIRE(*oracle == zero);
    }
}

TEST_CASE("budget accounting per adversarial case on a zero-free codeword") {
    const LinearIndelCode code = toy_code();
    const std::vector<Symbol> msg{1, 1};
    const std::vector<PairSymbol> true_pairs = code.base().encode(msg);
    for (const PairSymbol& p : true_pairs) REQUIRE(p.a != 0);
    const std::vector<Symbol> cw = code.encode(msg);
    const std::size_t ell = code.ell();
    const Field& f = code.field();

    const auto pack_all = [&](const std::vector<PairSymbol>& pairs) {
        std::vector<std::uint64_t> out(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) out[i] = pack_pair(f, pairs[i]);
        return out;
    };

    SECTION("one in-window deletion costs at most ell pair deletions") {
        std::vector<Symbol> y = cw;
        y.erase(y.begin() + 1);
        const auto result = code.decode(y);
        CHECK(indel::levenshtein(pack_all(result.pairs), pack_all(true_pairs)) <= ell);
    }

    SECTION("window desynchronization costs at most ell deletions plus ell insertions") {
        std::vector<Symbol> y = cw;
        y.insert(y.begin() + 2 * ell, 4);  // nonzero tail symbol for the first window
        y.erase(y.begin());                // drop its first symbol
        const auto result = code.decode(y);
        CHECK(indel::levenshtein(pack_all(result.pairs), pack_all(true_pairs)) <= 2 * ell);
    }

    SECTION("deleting one delimiter costs at most 2*ell pair deletions") {
        std::vector<Symbol> y = cw;
        const Segmentation seg = segment(y);
        REQUIRE(seg.delimiter_lengths[1] == 2);
        const std::size_t start = seg.window_start(0) + seg.windows[0].size();
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(start));
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(start));
        const auto result = code.decode(y);
        CHECK(result.windows_discarded >= 1);
        CHECK(indel::levenshtein(pack_all(result.pairs), pack_all(true_pairs)) <= 2 * ell);
    }
}

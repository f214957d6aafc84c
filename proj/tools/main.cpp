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

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "indel/bounds.hpp"
#include "indel/channel.hpp"
#include "indel/experiment.hpp"
#include "indel/galois.hpp"
#include "indel/half_linear.hpp"
#include "indel/io.hpp"
#include "indel/linear_code.hpp"
#include "indel/reed_solomon.hpp"
#include "indel/rng.hpp"
#include "indel/sync_sequence.hpp"

namespace {

using namespace indel;

constexpr int exit_ok = 0;
constexpr int exit_config = 1;   // invalid configuration or input
constexpr int exit_failure = 2;  // decode or verification failure

// INDEL_SEED overrides the built-in default seed; explicit flags still win.
std::uint64_t default_seed() {
    if (const char* env = std::getenv("INDEL_SEED")) return std::stoull(env);
    return 1;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for reading");
    return f;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    return f;
}

std::vector<Symbol> parse_message(std::string text) {
    for (char& c : text)
        if (c == ',') c = ' ';
    std::istringstream in(text);
    return read_word(in);
}

SyncGenOptions sync_options(std::size_t restarts, const std::string& mode, std::size_t sample_count,
                            std::optional<std::uint64_t> sample_seed) {
    SyncGenOptions opt;
    opt.max_restarts = restarts;
    opt.sample_count = sample_count;
    opt.sample_seed = sample_seed;
    if (mode == "exhaustive") opt.mode = SyncMode::exhaustive;
    else if (mode == "sampled") opt.mode = SyncMode::sampled;
    else if (mode != "auto") throw std::runtime_error("mode must be auto, exhaustive, or sampled");
    return opt;
}

struct ChannelArgs {
    std::string delta;  // rational text; empty means explicit counts
    std::size_t deletions = 0;
    std::size_t insertions = 0;
    std::string strategy = "random";
    std::uint64_t seed = 0;
};

AdversaryStrategy to_adversary(ChannelStrategy s) {
    switch (s) {
        case ChannelStrategy::window_parity: return AdversaryStrategy::window_parity;
        case ChannelStrategy::window_desync: return AdversaryStrategy::window_desync;
        case ChannelStrategy::delimiter_delete: return AdversaryStrategy::delimiter_delete;
        case ChannelStrategy::random: break;
    }
    throw std::logic_error("not an adversarial strategy");
}

// Budget split and pattern generation, mirroring the experiment engine.
IndelPattern make_pattern(const ChannelArgs& ch, std::size_t len, std::uint64_t alphabet,
                          const LinearIndelCode* lin, std::span<const Symbol> codeword) {
    const ChannelStrategy strategy = parse_strategy(ch.strategy);
    std::size_t budget = ch.deletions + ch.insertions;
    if (!ch.delta.empty()) {
        const Rational delta = Rational::parse(ch.delta);
        if (delta < Rational(0)) throw std::runtime_error("delta must be nonnegative");
        budget = static_cast<std::size_t>(delta.num * static_cast<std::int64_t>(len) / delta.den);
    }
    if (strategy != ChannelStrategy::random) {
        if (lin == nullptr) throw std::runtime_error("adversarial strategies apply to linear codes only");
        return adversarial_pattern(codeword, *lin, to_adversary(strategy), budget, Rng::mix(ch.seed, 3));
    }
    std::size_t deletions = ch.deletions;
    std::size_t insertions = ch.insertions;
    if (!ch.delta.empty()) {
        Rng split(Rng::mix(ch.seed, 2));
        deletions = static_cast<std::size_t>(split.below(budget + 1));
        insertions = budget - deletions;
    }
    return random_pattern(len, deletions, insertions, alphabet, Rng::mix(ch.seed, 3));
}

int run_gen_sync(std::uint32_t p, std::uint32_t m, std::size_t n, double tau, std::uint64_t seed,
                 std::size_t restarts, const std::string& mode, std::size_t sample_count,
                 std::optional<std::uint64_t> sample_seed, const std::string& out_path) {
    const Field f(p, m);
    const SyncSequence s =
        SyncSequence::generate(f, n, tau, seed, sync_options(restarts, mode, sample_count, sample_seed));
    if (out_path.empty()) {
        write_sync(std::cout, s);
    } else {
        auto out = open_output(out_path);
        write_sync(out, s);
        std::cout << "generated sync sequence: n=" << n << " tau=" << tau << " mode="
                  << (s.verification().mode == SyncMode::exhaustive ? "exhaustive" : "sampled") << " -> " << out_path
                  << "\n";
    }
    return exit_ok;
}

int run_verify_sync(const std::string& in_path, std::optional<double> tau_override) {
    auto in = open_input(in_path);
    const SyncSequence s = read_sync(in);
    const double tau = tau_override.value_or(s.tau());
    const auto v = verify_self_matching(s.symbols(), tau, s.verification());
    if (v) {
        std::cout << "violation at (" << v->i << "," << v->j << "," << v->k << "): D_L=" << v->distance
                  << " needed > " << v->threshold << "\n";
        return exit_failure;
    }
    std::cout << "ok: n=" << s.size() << " tau=" << tau << " mode="
              << (s.verification().mode == SyncMode::exhaustive ? "exhaustive" : "sampled") << "\n";
    return exit_ok;
}

int run_make_code(std::uint32_t p, std::uint32_t m, std::size_t n, std::size_t k, std::size_t ell, double tau,
                  std::uint64_t sync_seed, std::size_t restarts, const std::string& mode, std::size_t sample_count,
                  const std::string& out_path) {
    const Field f(p, m);
    const ReedSolomon rs(f, n, k);  // validates n, k against the field
    const SyncSequence sync =
        SyncSequence::generate(f, n, tau, sync_seed, sync_options(restarts, mode, sample_count, std::nullopt));
    CodeDescription desc;
    desc.linear = ell > 0;
    desc.p = p;
    desc.m = m;
    desc.n = n;
    desc.k = k;
    desc.ell = ell;
    desc.tau = tau;
    desc.sync_claim = sync.verification();
    desc.sync = sync.symbols();
    std::size_t length = 2 * n;
    if (desc.linear) length = desc.to_linear().codeword_length();  // also validates ell | n
    auto out = open_output(out_path);
    write_code(out, desc);
    std::cout << "wrote " << (desc.linear ? "linear" : "half-linear") << " code: q=" << f.q() << " n=" << n
              << " k=" << k << " d=" << rs.min_distance();
    if (desc.linear) std::cout << " ell=" << ell << " N=" << length;
    std::cout << " -> " << out_path << "\n";
    return exit_ok;
}

CodeDescription load_code(const std::string& path) {
    auto in = open_input(path);
    return read_code(in);
}

int run_encode(const std::string& code_path, const std::string& msg_text, const std::string& msg_path,
               const std::string& out_path) {
    const CodeDescription desc = load_code(code_path);
    std::vector<Symbol> msg;
    if (!msg_text.empty()) {
        msg = parse_message(msg_text);
    } else if (!msg_path.empty()) {
        auto in = open_input(msg_path);
        msg = read_word(in);
    } else {
        throw std::runtime_error("need --msg or --msg-file");
    }
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file = open_output(out_path);
        out = &file;
    }
    if (desc.linear) {
        write_word(*out, desc.to_linear().encode(msg));
    } else {
        write_pairs(*out, desc.to_half_linear().encode(msg));
    }
    return exit_ok;
}

int run_corrupt(const std::string& code_path, const std::string& in_path, const std::string& out_path,
                const ChannelArgs& ch, const std::string& pattern_out, const std::string& pattern_in) {
    const CodeDescription desc = load_code(code_path);
    const Field f(desc.p, desc.m);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file = open_output(out_path);
        out = &file;
    }

    IndelPattern pattern;
    const bool have_pattern = !pattern_in.empty();
    if (have_pattern) {
        auto pin = open_input(pattern_in);
        pattern = read_pattern(pin);
    }

    if (desc.linear) {
        auto in = open_input(in_path);
        const std::vector<Symbol> w = read_word(in);
        if (!have_pattern) {
            const LinearIndelCode lin = desc.to_linear();
            pattern = make_pattern(ch, w.size(), f.q(), &lin, w);
        }
        write_word(*out, apply_pattern(w, pattern));
    } else {
        auto in = open_input(in_path);
        const std::vector<PairSymbol> pairs = read_pairs(in);
        std::vector<std::uint64_t> packed(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) packed[i] = pack_pair(f, pairs[i]);
        if (!have_pattern) pattern = make_pattern(ch, packed.size(), std::uint64_t{f.q()} * f.q(), nullptr, {});
        const std::vector<std::uint64_t> corrupted = apply_pattern(packed, pattern);
        std::vector<PairSymbol> result(corrupted.size());
        for (std::size_t i = 0; i < corrupted.size(); ++i) result[i] = unpack_pair(f, corrupted[i]);
        write_pairs(*out, result);
    }
    if (!pattern_out.empty()) {
        auto pout = open_output(pattern_out);
        write_pattern(pout, pattern);
    }
    return exit_ok;
}

int run_decode(const std::string& code_path, const std::string& in_path, const std::string& variant_name,
               const std::string& out_path) {
    const CodeDescription desc = load_code(code_path);
    const DecoderVariant variant = parse_variant(variant_name);
    std::optional<std::vector<Symbol>> message;
    auto in = open_input(in_path);
    if (desc.linear) {
        message = desc.to_linear().decode(read_word(in), variant).message;
    } else {
        message = desc.to_half_linear().decode(read_pairs(in), variant).message;
    }
    if (!message) {
        std::cerr << "decoding failed: received word is outside the decoding radius\n";
        return exit_failure;
    }
    if (out_path.empty()) {
        write_word(std::cout, *message);
    } else {
        auto out = open_output(out_path);
        write_word(out, *message);
    }
    return exit_ok;
}

int run_roundtrip(const std::string& code_path, const ChannelArgs& ch, const std::string& variant_name) {
    const CodeDescription desc = load_code(code_path);
    const Field f(desc.p, desc.m);
    const DecoderVariant variant = parse_variant(variant_name);

    Rng mrng(Rng::mix(ch.seed, 1));
    std::vector<Symbol> msg(desc.k);
    for (Symbol& s : msg) s = static_cast<Symbol>(mrng.below(f.q()));

    std::optional<std::vector<Symbol>> decoded;
    std::size_t deletions = 0;
    std::size_t insertions = 0;
    std::size_t erasures = 0;
    if (desc.linear) {
        const LinearIndelCode code = desc.to_linear();
        const std::vector<Symbol> cw = code.encode(msg);
        const IndelPattern pattern = make_pattern(ch, cw.size(), f.q(), &code, cw);
        deletions = pattern.deletion_count();
        insertions = pattern.insertion_count();
        const auto result = code.decode(apply_pattern(cw, pattern), variant);
        decoded = result.message;
        erasures = result.report.erasures;
    } else {
        const HalfLinearCode code = desc.to_half_linear();
        const std::vector<PairSymbol> cw = code.encode(msg);
        std::vector<std::uint64_t> packed(cw.size());
        for (std::size_t i = 0; i < cw.size(); ++i) packed[i] = pack_pair(f, cw[i]);
        const IndelPattern pattern = make_pattern(ch, packed.size(), std::uint64_t{f.q()} * f.q(), nullptr, {});
        deletions = pattern.deletion_count();
        insertions = pattern.insertion_count();
        const std::vector<std::uint64_t> corrupted = apply_pattern(packed, pattern);
        std::vector<PairSymbol> received(corrupted.size());
        for (std::size_t i = 0; i < corrupted.size(); ++i) received[i] = unpack_pair(f, corrupted[i]);
        const auto result = code.decode(received, variant);
        decoded = result.message;
        erasures = result.report.erasures;
    }

    const bool success = decoded && *decoded == msg;
    std::cout << "roundtrip: " << (success ? "success" : "FAILURE") << " (D=" << deletions << " I=" << insertions
              << " erasures=" << erasures << " variant=" << variant_name << " seed=" << ch.seed << ")\n";
    return success ? exit_ok : exit_failure;
}

int run_experiment_cmd(const std::string& config_path, const std::vector<std::string>& overrides,
                       const std::string& out_path) {
    std::vector<std::pair<std::string, std::string>> entries;
    if (!config_path.empty()) {
        auto in = open_input(config_path);
        entries = read_key_values(in);
    }
    for (const std::string& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw std::runtime_error("override '" + kv + "' is not KEY=VALUE");
        entries.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
    }
    bool has_seed = false;
    for (const auto& [key, value] : entries) has_seed |= key == "seed";
    if (!has_seed && std::getenv("INDEL_SEED")) entries.emplace_back("seed", std::getenv("INDEL_SEED"));

    const ExperimentConfig cfg = ExperimentConfig::from_entries(entries);
    const ExperimentResult result = run_experiment(cfg);
    if (out_path.empty()) {
        std::cout << result.csv;
    } else {
        auto out = open_output(out_path);
        out << result.csv;
        std::size_t total = 0;
        std::size_t good = 0;
        for (const auto& row : result.rows) {
            total += row.trials;
            good += row.successes;
        }
        std::cout << "wrote " << result.rows.size() << " rows (" << good << "/" << total << " successes) -> "
                  << out_path << "\n";
    }
    return exit_ok;
}

int run_bound(std::size_t n, const std::string& delta_text, const std::string& code_path) {
    std::optional<SubfieldLinearCode> code;
    if (!code_path.empty()) {
        auto in = open_input(code_path);
        code = SubfieldLinearCode::load(in);
        n = code->length();
    }
    if (n == 0) throw std::runtime_error("need --n or --code");
    const Rational delta = Rational::parse(delta_text);
    const Rational bound = half_singleton_bound(n, delta);
    std::cout << "half-Singleton bound: " << bound.decimal_str();
    if (bound.decimal_str() != bound.str()) std::cout << " (= " << bound.str() << ")";
    std::cout << " for n=" << n << ", delta=" << delta.str() << "\n";

    if (code) {
        std::cout << "code: |E|=" << code->base_field().q() << " ell_ext=" << code->ell_ext()
                  << " n=" << code->length() << " k_E=" << code->dimension() << " rate=" << code->rate().str()
                  << "\n";
        const auto witness = find_confusable_pair(*code);
        if (witness) {
            std::cout << "witness: found; deleting F-symbol " << witness->delete_from_c << " of c and F-symbol "
                      << witness->delete_from_second << " of c+x yields the same word\n";
            std::cout << "  x =";
            for (auto v : witness->x_f) std::cout << " " << v;
            std::cout << "\n  c =";
            for (auto v : witness->c_f) std::cout << " " << v;
            std::cout << "\n";
        } else {
            std::cout << "witness: none (the prefix-sum system has only the trivial solution)\n";
        }
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"indel-codes: insertion/deletion-correcting codes over finite fields"};
    app.require_subcommand(1);
    int rc = exit_ok;

    auto* gen = app.add_subcommand("gen-sync", "generate a verified self-matching sequence");
    std::uint32_t gp = 2, gm = 8;
    std::size_t gn = 240, g_restarts = 1000, g_samples = 100000;
    double gtau = 0.5;
    std::uint64_t gseed = default_seed();
    std::optional<std::uint64_t> g_sample_seed;
    std::string gmode = "auto", gout;
    gen->add_option("--p", gp, "field characteristic");
    gen->add_option("--m", gm, "extension degree");
    gen->add_option("--n", gn, "sequence length");
    gen->add_option("--tau", gtau, "self-matching parameter");
    gen->add_option("--seed", gseed, "generation seed");
    gen->add_option("--restarts", g_restarts, "rejection-sampling restart cap");
    gen->add_option("--mode", gmode, "verification mode: auto|exhaustive|sampled");
    gen->add_option("--sample-count", g_samples, "sampled mode: number of random triples");
    gen->add_option("--sample-seed", g_sample_seed, "sampled mode: sampling seed");
    gen->add_option("--out", gout, "output file (default stdout)");
    gen->callback(
        [&] { rc = run_gen_sync(gp, gm, gn, gtau, gseed, g_restarts, gmode, g_samples, g_sample_seed, gout); });

    auto* ver = app.add_subcommand("verify-sync", "re-verify a stored sequence");
    std::string vin;
    std::optional<double> vtau;
    ver->add_option("--in", vin, "sync file")->required();
    ver->add_option("--tau", vtau, "override the stored tau");
    ver->callback([&] { rc = run_verify_sync(vin, vtau); });

    auto* mk = app.add_subcommand("make-code", "construct a code and write its description file");
    std::uint32_t mp = 2, mm = 8;
    std::size_t mn = 240, mk_dim = 120, mell = 0, m_restarts = 1000, m_samples = 100000;
    double mtau = 0.5;
    std::uint64_t msync_seed = default_seed();
    std::string mmode = "auto", mout;
    mk->add_option("--p", mp, "field characteristic");
    mk->add_option("--m", mm, "extension degree");
    mk->add_option("--n", mn, "inner block length");
    mk->add_option("--k", mk_dim, "inner dimension");
    mk->add_option("--ell", mell, "padding period (0 = half-linear code)");
    mk->add_option("--tau", mtau, "sync self-matching parameter");
    mk->add_option("--sync-seed", msync_seed, "sync generation seed");
    mk->add_option("--restarts", m_restarts, "sync restart cap");
    mk->add_option("--mode", mmode, "sync verification mode: auto|exhaustive|sampled");
    mk->add_option("--sample-count", m_samples, "sampled mode: number of random triples");
    mk->add_option("--out", mout, "output code file")->required();
    mk->callback(
        [&] { rc = run_make_code(mp, mm, mn, mk_dim, mell, mtau, msync_seed, m_restarts, mmode, m_samples, mout); });

    auto* enc = app.add_subcommand("encode", "encode a message");
    std::string ecode, emsg, emsg_file, eout;
    enc->add_option("--code", ecode, "code description file")->required();
    enc->add_option("--msg", emsg, "message symbols, comma or space separated");
    enc->add_option("--msg-file", emsg_file, "message file");
    enc->add_option("--out", eout, "output file (default stdout)");
    enc->callback([&] { rc = run_encode(ecode, emsg, emsg_file, eout); });

    auto* cor = app.add_subcommand("corrupt", "apply an indel channel to a codeword");
    std::string ccode, cin_path, cout_path, cpattern_out, cpattern_in;
    ChannelArgs cch;
    cch.seed = default_seed();
    cor->add_option("--code", ccode, "code description file")->required();
    cor->add_option("--in", cin_path, "codeword file")->required();
    cor->add_option("--out", cout_path, "output file (default stdout)");
    cor->add_option("--delta", cch.delta, "indel fraction (rational or decimal)");
    cor->add_option("--deletions", cch.deletions, "explicit deletion count");
    cor->add_option("--insertions", cch.insertions, "explicit insertion count");
    cor->add_option("--strategy", cch.strategy, "random|window-parity|window-desync|delimiter-delete");
    cor->add_option("--seed", cch.seed, "channel seed");
    cor->add_option("--pattern-out", cpattern_out, "write the applied edit script");
    cor->add_option("--pattern-in", cpattern_in, "apply a stored edit script instead");
    cor->callback([&] { rc = run_corrupt(ccode, cin_path, cout_path, cch, cpattern_out, cpattern_in); });

    auto* dec = app.add_subcommand("decode", "decode a received word");
    std::string dcode, din, dvariant = "improved", dout;
    dec->add_option("--code", dcode, "code description file")->required();
    dec->add_option("--in", din, "received word file")->required();
    dec->add_option("--variant", dvariant, "improved|baseline");
    dec->add_option("--out", dout, "message output file (default stdout)");
    dec->callback([&] { rc = run_decode(dcode, din, dvariant, dout); });

    auto* rt = app.add_subcommand("roundtrip", "encode, corrupt, decode, and compare");
    std::string rcode, rvariant = "improved";
    ChannelArgs rch;
    rch.seed = default_seed();
    rt->add_option("--code", rcode, "code description file")->required();
    rt->add_option("--delta", rch.delta, "indel fraction");
    rt->add_option("--deletions", rch.deletions, "explicit deletion count");
    rt->add_option("--insertions", rch.insertions, "explicit insertion count");
    rt->add_option("--strategy", rch.strategy, "random|window-parity|window-desync|delimiter-delete");
    rt->add_option("--seed", rch.seed, "trial seed");
    rt->add_option("--variant", rvariant, "improved|baseline");
    rt->callback([&] { rc = run_roundtrip(rcode, rch, rvariant); });

    auto* exp = app.add_subcommand("experiment", "seeded sweep emitting CSV");
    std::string xconfig, xout;
    std::vector<std::string> xoverrides;
    exp->add_option("--config", xconfig, "key=value config file");
    exp->add_option("--out", xout, "CSV output file (default stdout)");
    exp->add_option("overrides", xoverrides, "KEY=VALUE overrides");
    exp->callback([&] { rc = run_experiment_cmd(xconfig, xoverrides, xout); });

    auto* bnd = app.add_subcommand("bound", "half-Singleton bound and witness search");
    std::size_t bn = 0;
    std::string bdelta = "0", bcode;
    bnd->add_option("--n", bn, "code length over F");
    bnd->add_option("--delta", bdelta, "indel fraction (rational or decimal)");
    bnd->add_option("--code", bcode, "subfield-linear code file (header 'p m_E ell_ext n', basis rows)");
    bnd->callback([&] { rc = run_bound(bn, bdelta, bcode); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    }
    return rc;
}

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gac/codec.hpp"
#include "gac/grouping.hpp"
#include "gac/sources.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitData = 2;

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return std::vector<uint8_t>(std::istreambuf_iterator<char>(in),
                                std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::vector<uint8_t>& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("write failed for " + path);
}

gac::Mode parse_mode(const std::string& s) {
    if (s == "plain") return gac::Mode::Plain;
    if (s == "grouped") return gac::Mode::Grouped;
    if (s == "huffman") return gac::Mode::Huffman;
    throw CLI::ValidationError("--mode", "expected plain|grouped|huffman");
}

std::pair<uint32_t, uint32_t> parse_c(const std::string& s) {
    const auto slash = s.find('/');
    const uint32_t num = static_cast<uint32_t>(std::stoul(s.substr(0, slash)));
    const uint32_t den = slash == std::string::npos
                             ? 1
                             : static_cast<uint32_t>(std::stoul(s.substr(slash + 1)));
    if (num == 0 || den == 0)
        throw CLI::ValidationError("-c", "numerator and denominator must be positive");
    return {num, den};
}

struct SourceSpec {
    std::string kind; // zipf | geom | file
    double param = 0;
    std::string path;
};

SourceSpec parse_source(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--source", "expected zipf:<alpha>|geom:<q>|file:<path>");
    SourceSpec spec;
    spec.kind = s.substr(0, colon);
    if (spec.kind == "zipf" || spec.kind == "geom")
        spec.param = std::stod(s.substr(colon + 1));
    else if (spec.kind == "file")
        spec.path = s.substr(colon + 1);
    else
        throw CLI::ValidationError("--source", "unknown source kind " + spec.kind);
    return spec;
}

int cmd_plan(uint64_t n, double delta, bool pow2, double coder_bound, bool as_json) {
    const auto plan = gac::optimal_grouping(n, delta, pow2);
    const double r = gac::worst_case_redundancy(plan);
    if (as_json) {
        json j;
        j["alphabet_size"] = n;
        j["delta"] = delta;
        j["pow2"] = pow2;
        j["groups"] = plan.groups();
        j["sizes"] = plan.sizes;
        j["covered"] = plan.covered();
        j["worst_case_redundancy"] = r;
        j["coder_bound"] = coder_bound;
        j["composed_bound"] = gac::composed_redundancy_bound(coder_bound, r);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "plan: " << plan.to_text() << '\n'
                  << "groups: " << plan.groups() << '\n'
                  << "covered letters: " << plan.covered() << '\n'
                  << "worst-case redundancy: " << r << " bits/letter\n"
                  << "composed bound (coder " << coder_bound
                  << "): " << gac::composed_redundancy_bound(coder_bound, r)
                  << " bits/letter\n";
    }
    return 0;
}

struct BenchRow {
    std::string mode;
    double delta = 0;
    uint64_t payload_bytes = 0;
    double bits_per_symbol = 0;
    double cum_ops_per_symbol = 0;
    double encode_mops = 0; // symbols per second, millions (non-normative)
    double decode_mops = 0;
};

BenchRow bench_mode(const std::string& mode, const std::vector<uint32_t>& msg,
                    uint32_t n, double delta, bool pow2) {
    using clock = std::chrono::steady_clock;
    BenchRow row;
    row.mode = mode;
    row.delta = delta;
    std::vector<uint8_t> payload;
    uint64_t ops = 0;
    double enc_s = 0, dec_s = 0;
    std::vector<uint32_t> round;

    if (mode == "grouped") {
        auto plan = gac::optimal_grouping(n, delta, pow2);
        {
            gac::GroupedStreamEncoder enc(payload, n, plan);
            const auto t0 = clock::now();
            for (uint32_t a : msg) enc.put(a);
            enc.finish();
            enc_s = std::chrono::duration<double>(clock::now() - t0).count();
            ops = enc.model().cum_ops();
        }
        {
            gac::GroupedStreamDecoder dec(payload.data(), payload.size(), n, plan);
            const auto t0 = clock::now();
            round.reserve(msg.size());
            for (size_t i = 0; i < msg.size(); ++i) round.push_back(dec.get());
            dec_s = std::chrono::duration<double>(clock::now() - t0).count();
        }
    } else if (mode == "plain") {
        {
            gac::PlainStreamEncoder enc(payload, n);
            const auto t0 = clock::now();
            for (uint32_t a : msg) enc.put(a);
            enc.finish();
            enc_s = std::chrono::duration<double>(clock::now() - t0).count();
            ops = enc.model().cum_ops();
        }
        {
            gac::PlainStreamDecoder dec(payload.data(), payload.size(), n);
            const auto t0 = clock::now();
            round.reserve(msg.size());
            for (size_t i = 0; i < msg.size(); ++i) round.push_back(dec.get());
            dec_s = std::chrono::duration<double>(clock::now() - t0).count();
        }
    } else {
        throw std::runtime_error("bench mode must be plain or grouped");
    }
    if (round != msg) throw std::runtime_error("bench round trip mismatch");

    const double count = msg.empty() ? 1 : static_cast<double>(msg.size());
    row.payload_bytes = payload.size();
    row.bits_per_symbol = 8.0 * static_cast<double>(payload.size()) / count;
    row.cum_ops_per_symbol = static_cast<double>(ops) / count;
    row.encode_mops = count / enc_s / 1e6;
    row.decode_mops = count / dec_s / 1e6;
    return row;
}

int cmd_bench(const SourceSpec& src, uint32_t n, uint64_t len, uint64_t seed,
              const std::vector<double>& deltas, const std::vector<std::string>& modes,
              bool pow2, bool as_json) {
    std::vector<uint32_t> msg;
    std::string descriptor;
    if (src.kind == "file") {
        const auto bytes = read_file(src.path);
        msg.assign(bytes.begin(), bytes.end());
        n = 256;
        descriptor = "file:" + src.path;
    } else {
        const auto probs = src.kind == "zipf" ? gac::zipf_probs(n, src.param)
                                              : gac::geometric_probs(n, src.param);
        msg = gac::sample_iid(probs, len, seed);
        descriptor = src.kind + ":" + std::to_string(src.param) +
                     " seed=" + std::to_string(seed);
    }

    std::vector<BenchRow> rows;
    for (const auto& mode : modes) {
        if (mode == "plain") {
            rows.push_back(bench_mode(mode, msg, n, 0, pow2));
        } else {
            for (double d : deltas) rows.push_back(bench_mode(mode, msg, n, d, pow2));
        }
    }

    if (as_json) {
        json j;
        j["source"] = descriptor;
        j["alphabet_size"] = n;
        j["symbols"] = msg.size();
        j["rows"] = json::array();
        for (const auto& r : rows) {
            j["rows"].push_back({{"mode", r.mode},
                                 {"delta", r.delta},
                                 {"payload_bytes", r.payload_bytes},
                                 {"bits_per_symbol", r.bits_per_symbol},
                                 {"cum_ops_per_symbol", r.cum_ops_per_symbol},
                                 {"encode_msym_per_s", r.encode_mops},
                                 {"decode_msym_per_s", r.decode_mops}});
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "source: " << descriptor << "  N=" << n
                  << "  symbols=" << msg.size() << '\n';
        for (const auto& r : rows) {
            std::cout << r.mode;
            if (r.mode != "plain") std::cout << " d=" << r.delta;
            std::cout << ": " << r.bits_per_symbol << " bits/sym, "
                      << r.cum_ops_per_symbol << " cum-ops/sym, enc "
                      << r.encode_mops << " Msym/s, dec " << r.decode_mops
                      << " Msym/s (timings non-normative)\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grouped-alphabet entropy coding toolkit"};
    app.require_subcommand(1);

    // plan
    auto* plan_cmd = app.add_subcommand("plan", "compute a grouping plan");
    uint64_t plan_n = 256;
    double plan_delta = 0.08;
    bool plan_pow2 = false;
    double coder_bound = 0.01;
    bool plan_json = false;
    plan_cmd->add_option("-N", plan_n, "alphabet size")->check(CLI::PositiveNumber);
    plan_cmd->add_option("-d,--delta", plan_delta, "redundancy budget, bits/letter");
    plan_cmd->add_flag("--pow2", plan_pow2, "restrict group sizes to powers of two");
    plan_cmd->add_option("--coder-bound", coder_bound,
                         "coder redundancy used in the composed bound");
    plan_cmd->add_flag("--json", plan_json, "machine-readable output");

    // encode / decode
    auto* enc_cmd = app.add_subcommand("encode", "compress a file");
    std::string in_path, out_path, mode_str = "grouped", c_str = "1";
    uint64_t enc_n = 256;
    double enc_delta = 0.08;
    bool enc_pow2 = false, full_width = false;
    uint32_t max_count = 1u << 24;
    enc_cmd->add_option("input", in_path)->required();
    enc_cmd->add_option("output", out_path)->required();
    enc_cmd->add_option("--mode", mode_str, "plain|grouped|huffman");
    enc_cmd->add_option("-N", enc_n, "alphabet size")->check(CLI::PositiveNumber);
    enc_cmd->add_option("-d,--delta", enc_delta, "redundancy budget");
    enc_cmd->add_option("-c", c_str, "smoothing constant num[/den]");
    enc_cmd->add_flag("--pow2", enc_pow2, "power-of-two group sizes");
    enc_cmd->add_flag("--full-width", full_width,
                      "code last-group ordinals at the plan's full width");
    enc_cmd->add_option("--max-count", max_count, "per-letter count cap");

    auto* dec_cmd = app.add_subcommand("decode", "decompress a container");
    std::string din_path, dout_path;
    dec_cmd->add_option("input", din_path)->required();
    dec_cmd->add_option("output", dout_path)->required();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "compare plain vs grouped coding");
    std::string source_str = "zipf:1.0";
    uint32_t bench_n = 256;
    uint64_t bench_len = 1000000, bench_seed = 1;
    std::vector<double> bench_deltas{0.08};
    std::vector<std::string> bench_modes{"plain", "grouped"};
    bool bench_pow2 = false, bench_json = false;
    bench_cmd->add_option("--source", source_str, "zipf:<alpha>|geom:<q>|file:<path>");
    bench_cmd->add_option("-N", bench_n, "alphabet size")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--len", bench_len, "synthetic message length");
    bench_cmd->add_option("--seed", bench_seed, "source seed");
    bench_cmd->add_option("-d,--delta", bench_deltas, "redundancy budgets");
    bench_cmd->add_option("--modes", bench_modes, "modes to run");
    bench_cmd->add_flag("--pow2", bench_pow2, "power-of-two group sizes");
    bench_cmd->add_flag("--json", bench_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // normalize CLI11's exit codes: 0 for --help, 1 for any usage error
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (plan_cmd->parsed())
            return cmd_plan(plan_n, plan_delta, plan_pow2, coder_bound, plan_json);

        if (enc_cmd->parsed()) {
            gac::CodecParams params;
            params.mode = parse_mode(mode_str); // validate before touching files
            params.alphabet_size = static_cast<uint32_t>(enc_n);
            params.delta = enc_delta;
            params.pow2 = enc_pow2;
            std::tie(params.c_num, params.c_den) = parse_c(c_str);
            params.max_count = max_count;
            params.full_width_last_group = full_width;
            const auto bytes = read_file(in_path);
            std::vector<uint32_t> symbols(bytes.begin(), bytes.end());
            write_file(out_path, gac::encode_message(symbols, params));
            return 0;
        }

        if (dec_cmd->parsed()) {
            const auto container = read_file(din_path);
            const auto symbols = gac::decode_message(container);
            std::vector<uint8_t> bytes;
            bytes.reserve(symbols.size());
            for (uint32_t a : symbols) {
                if (a > 255) throw gac::DecodeError("symbol does not fit a byte");
                bytes.push_back(static_cast<uint8_t>(a));
            }
            write_file(dout_path, bytes);
            return 0;
        }

        if (bench_cmd->parsed())
            return cmd_bench(parse_source(source_str), bench_n, bench_len, bench_seed,
                             bench_deltas, bench_modes, bench_pow2, bench_json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return 0;
}

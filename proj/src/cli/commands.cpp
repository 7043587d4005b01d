#include "moebius/cli/commands.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "moebius/asymptotics.hpp"
#include "moebius/cli/numparse.hpp"
#include "moebius/cli/output.hpp"
#include "moebius/cli/verify.hpp"
#include "moebius/error.hpp"
#include "moebius/summatory.hpp"

namespace moebius::cli {

namespace {

// Raw flag text; integers are converted with parse_integer_flag so that
// "1e8" is accepted.
struct Flags {
    std::string k;
    std::string m;
    std::string n;
    std::string x;
    std::string coprime_to = "1";
    std::string method = "direct";
    std::string prime_limit;
    double tol = 1e-12;
    std::string from;
    std::string to;
    std::string per_decade = "4";
    bool fit = false;
    std::string out_path = "-";
    std::string format = "csv";
    std::string suite = "all";
    std::string limit = "10000";
    std::string segment;
    std::string threads;
};

unsigned to_unsigned(const std::string& text, const char* name) {
    const std::uint64_t v = parse_integer_flag(text);
    if (v > 1'000'000) throw DomainError(std::string("--") + name + " is too large");
    return unsigned(v);
}

OrderPair order_from(const Flags& f) {
    const unsigned k = to_unsigned(f.k, "k");
    const unsigned m = f.m.empty() ? k : to_unsigned(f.m, "m");
    return OrderPair(k, m);
}

std::uint64_t prime_limit_from(const Flags& f, const Environment& env) {
    return f.prime_limit.empty() ? env.prime_limit : parse_integer_flag(f.prime_limit);
}

SieveConfig sieve_from(const Flags& f, const Environment& env) {
    SieveConfig config;
    if (!f.segment.empty()) config.segment_size = parse_integer_flag(f.segment);
    config.worker_count = f.threads.empty() ? env.workers : to_unsigned(f.threads, "threads");
    config.validate();
    return config;
}

int cmd_eval(const Flags& f, std::ostream& out) {
    const OrderPair order = order_from(f);
    const std::uint64_t n = parse_integer_flag(f.n);
    out << int(mu_km(n, order)) << '\n';
    return kExitOk;
}

int cmd_sum(const Flags& f, const Environment& env, std::ostream& out, std::ostream& err) {
    const SumQuery q{parse_integer_flag(f.x), order_from(f), parse_integer_flag(f.coprime_to)};
    const SieveConfig config = sieve_from(f, env);
    if (f.method == "direct") {
        out << sum_direct(q, config) << '\n';
        return kExitOk;
    }
    if (f.method == "conv") {
        out << sum_convolution(q) << '\n';
        return kExitOk;
    }
    const std::int64_t direct = sum_direct(q, config);
    const std::int64_t conv = sum_convolution(q);
    out << direct << ' ' << conv << '\n';
    if (direct != conv) {
        err << "mismatch: direct " << direct << " != convolution " << conv << '\n';
        return kExitVerification;
    }
    return kExitOk;
}

int cmd_constants(const Flags& f, const Environment& env, std::ostream& out) {
    const OrderPair order = order_from(f);
    const std::uint64_t limit = prime_limit_from(f, env);
    const unsigned k = order.k();
    const ConstantEstimate z = zeta(k, f.tol);
    const ConstantEstimate a = apostol_A(k, limit);
    const ConstantEstimate al = alpha(order, limit);

    out << kConstantsHeader << '\n';
    write_constant(out, "zeta_" + std::to_string(k), z);
    write_constant(out, "apostol_A_" + std::to_string(k), a);
    write_constant(out, "alpha_" + std::to_string(k) + "_" + std::to_string(order.m()), al);
    if (!order.is_apostol()) return kExitOk;

    // alpha_{k,k} = zeta(k) A_k; the row carries |difference| and the
    // propagated bound.
    ConstantEstimate diff;
    diff.value = std::fabs(al.value - z.value * a.value);
    diff.tail_bound =
        al.tail_bound + z.tail_bound * a.value + z.value * a.tail_bound + z.tail_bound * a.tail_bound;
    diff.prime_limit = limit;
    write_constant(out, "abs_alpha_minus_zeta_A", diff);
    return diff.value <= diff.tail_bound ? kExitOk : kExitVerification;
}

int cmd_scan(const Flags& f, const Environment& env, std::ostream& out, std::ostream& err) {
    const OrderPair order = order_from(f);
    const std::uint64_t from = parse_integer_flag(f.from);
    const std::uint64_t to = parse_integer_flag(f.to);
    if (from < 1 || from > to) throw DomainError("scan: require 1 <= --from <= --to");
    const unsigned per_decade = to_unsigned(f.per_decade, "points-per-decade");
    Format format;
    if (f.format == "csv")
        format = Format::csv;
    else if (f.format == "json")
        format = Format::json;
    else
        throw DomainError("scan: --format must be csv or json");

    ScanSettings settings;
    settings.prime_limit = prime_limit_from(f, env);
    settings.tol = f.tol;
    settings.sieve = sieve_from(f, env);
    const std::vector<std::uint64_t> grid = geometric_grid(from, to, per_decade);
    const std::vector<ScanRow> rows = scan(order, parse_integer_flag(f.coprime_to), grid, settings);
    std::optional<FitResult> fit;
    if (f.fit) fit = fit_exponent(rows);

    std::ofstream file;
    std::ostream* sink = &out;
    if (f.out_path != "-") {
        file.open(f.out_path);
        if (!file) {
            err << "cannot open " << f.out_path << " for writing\n";
            return kExitUsage;
        }
        sink = &file;
    }
    write_scan(*sink, rows, format);
    if (fit) write_fit(*sink, *fit, format);
    sink->flush();
    if (!*sink) {
        err << "write failed\n";
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_verify(const Flags& f, const Environment& env, std::ostream& out) {
    const std::uint64_t limit = parse_integer_flag(f.limit);
    int code = kExitOk;
    for (const VerifyReport& r : run_suite(f.suite, limit, env.workers)) {
        out << r.suite << ": " << r.passed << '/' << r.checked << " pass\n";
        if (!r.ok()) {
            out << r.suite << ": first counterexample " << r.counterexample.value_or("?") << '\n';
            code = kExitVerification;
        }
    }
    return code;
}

int cmd_bench(const Flags& f, const Environment& env, std::ostream& out) {
    const std::uint64_t x = parse_integer_flag(f.x);
    if (x < 1'000'000) throw DomainError("bench: --x must be >= 1e6");
    const OrderPair order = f.k.empty() ? OrderPair(2, 3) : order_from(f);
    const SieveConfig config = sieve_from(f, env);
    const std::uint64_t checkpoint[] = {x};

    const auto start = std::chrono::steady_clock::now();
    const std::int64_t s = stream_sum(x, order, 1, checkpoint, config).front().sum;
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    out << "order=(" << order.k() << "," << order.m() << ")\n"
        << "x=" << x << '\n'
        << "S=" << s << '\n'
        << "threads=" << config.worker_count << '\n'
        << "segment=" << config.segment_size << '\n'
        << "elapsed_s=" << format_double(elapsed.count()) << '\n'
        << "values_per_s=" << format_double(double(x) / std::max(elapsed.count(), 1e-9)) << '\n'
        << "segment_memory_bytes=" << config.segment_memory_bytes() << '\n';
    return kExitOk;
}

std::uint64_t env_integer(const char* name, std::uint64_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    const std::uint64_t v = parse_integer_flag(raw);
    if (v < 1) throw DomainError(std::string(name) + " must be a positive integer");
    return v;
}

}  // namespace

Environment Environment::from_process() {
    Environment env;
    const std::uint64_t workers = env_integer("MOEBIUS_WORKERS", env.workers);
    if (workers > 4096) throw DomainError("MOEBIUS_WORKERS is too large");
    env.workers = unsigned(workers);
    env.prime_limit = env_integer("MOEBIUS_PRIME_LIMIT", env.prime_limit);
    return env;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    Environment env;
    try {
        env = Environment::from_process();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return run(argv, out, err, env);
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err, const Environment& env) {
    CLI::App app{"Generalized Moebius functions mu_{k,m}: evaluation, sums, constants, scans"};
    app.require_subcommand(1);
    Flags f;

    auto* eval = app.add_subcommand("eval", "Print mu_{k,m}(n), or mu_k(n) without --m");
    eval->add_option("--k", f.k)->required();
    eval->add_option("--m", f.m);
    eval->add_option("--n", f.n)->required();

    auto* sum = app.add_subcommand("sum", "Exact sum of mu_{k,m}(r) over r <= x coprime to n");
    sum->add_option("--k", f.k)->required();
    sum->add_option("--m", f.m);
    sum->add_option("--x", f.x)->required();
    sum->add_option("--coprime-to", f.coprime_to);
    sum->add_option("--method", f.method)->check(CLI::IsMember({"direct", "conv", "both"}));
    sum->add_option("--segment", f.segment);
    sum->add_option("--threads", f.threads);

    auto* constants = app.add_subcommand("constants", "zeta(k), A_k and alpha_{k,m} with tail bounds");
    constants->add_option("--k", f.k)->required();
    constants->add_option("--m", f.m);
    constants->add_option("--prime-limit", f.prime_limit);
    constants->add_option("--tol", f.tol);

    auto* scan_cmd = app.add_subcommand("scan", "Error-term scan over a geometric grid");
    scan_cmd->add_option("--k", f.k)->required();
    scan_cmd->add_option("--m", f.m);
    scan_cmd->add_option("--coprime-to", f.coprime_to);
    scan_cmd->add_option("--from", f.from)->required();
    scan_cmd->add_option("--to", f.to)->required();
    scan_cmd->add_option("--points-per-decade", f.per_decade);
    scan_cmd->add_flag("--fit", f.fit);
    scan_cmd->add_option("--out", f.out_path);
    scan_cmd->add_option("--format", f.format)->check(CLI::IsMember({"csv", "json"}));
    scan_cmd->add_option("--prime-limit", f.prime_limit);
    scan_cmd->add_option("--tol", f.tol);
    scan_cmd->add_option("--segment", f.segment);
    scan_cmd->add_option("--threads", f.threads);

    auto* verify = app.add_subcommand("verify", "Run identity verification suites");
    verify->add_option("--suite", f.suite)
        ->check(CLI::IsMember({"lemma21", "lemma24", "apostol", "qk", "sums", "constants", "all"}));
    verify->add_option("--limit", f.limit);

    auto* bench = app.add_subcommand("bench", "Streaming-sum throughput");
    bench->add_option("--x", f.x)->required();
    bench->add_option("--k", f.k);
    bench->add_option("--m", f.m);
    bench->add_option("--segment", f.segment);
    bench->add_option("--threads", f.threads);

    std::vector<const char*> raw;
    raw.reserve(argv.size());
    for (const auto& a : argv) raw.push_back(a.c_str());
    try {
        app.parse(int(raw.size()), raw.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(f, out);
        if (sum->parsed()) return cmd_sum(f, env, out, err);
        if (constants->parsed()) return cmd_constants(f, env, out);
        if (scan_cmd->parsed()) return cmd_scan(f, env, out, err);
        if (verify->parsed()) return cmd_verify(f, env, out);
        if (bench->parsed()) return cmd_bench(f, env, out);
    } catch (const PrecisionError& e) {
        err << "precision error: " << e.what() << '\n';
        return kExitPrecision;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace moebius::cli

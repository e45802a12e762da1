// Command line front end: table generation, factorials, binomials,
// cross-verification of table files, and benchmark CSVs.

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "primetab/atkin_merge.hpp"
#include "primetab/atkin_mult.hpp"
#include "primetab/errors.hpp"
#include "primetab/numberkit.hpp"
#include "primetab/sieve_core.hpp"
#include "primetab/table_io.hpp"
#include "primetab/util.hpp"

namespace {

using primetab::PrimeTable;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitIo = 4;

PrimeTable generate(const std::string& algo, uint64_t n, bool wheel) {
    if (algo == "eratosthenes") return primetab::sieve_core::eratosthenes(n);
    if (algo == "schonhage") return primetab::sieve_core::schonhage_merge_sieve(n);
    if (algo == "atkin-merge") return primetab::atkin_merge::atkin_sieve_merge(n, wheel);
    if (algo == "atkin-mult") return primetab::atkin_mult::atkin_sieve_mult(n);
    throw CLI::ValidationError("--algo", "unknown algorithm " + algo);
}

double run_timed(PrimeTable& out, const std::string& algo, uint64_t n, bool wheel) {
    auto start = std::chrono::steady_clock::now();
    out = generate(algo, n, wheel);
    std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - start;
    return elapsed.count();
}

int cmd_primes(uint64_t n, const std::string& algo, bool wheel,
               const std::string& out_path, const std::string& format) {
    if (algo != "eratosthenes" && n < 2) {
        std::cerr << "error: --algo " << algo << " requires n >= 2\n";
        return kExitBadArgs;
    }
    if (format == "bits" && out_path.empty()) {
        std::cerr << "error: --format bits requires --out\n";
        return kExitBadArgs;
    }

    PrimeTable table = generate(algo, n, wheel);

    if (format == "txt") {
        std::string text;
        for (uint64_t k = 2; k <= table.n; ++k)
            if (table.bits.test(k)) {
                text += std::to_string(k);
                text += '\n';
            }
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path, std::ios::trunc);
            out << text;
            out.flush();
            if (!out) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return kExitIo;
            }
        }
    } else {
        primetab::table_io::write_table(out_path, table);
    }
    std::cout << "pi(" << n << ")=" << table.count() << "\n";
    return kExitOk;
}

int cmd_factorial(uint64_t n, const std::string& algo) {
    primetab::arith::BigNat value;
    if (algo == "iterative") {
        value = primetab::numberkit::factorial_iterative(n);
    } else {
        PrimeTable primes = primetab::sieve_core::eratosthenes(n);
        value = algo == "vardi"
                    ? primetab::numberkit::factorial_vardi(n, primes)
                    : primetab::numberkit::factorial_schonhage(n, primes);
    }
    std::cout << value.to_decimal() << "\n";
    return kExitOk;
}

int cmd_binomial(uint64_t n, uint64_t k) {
    if (k > n) {
        std::cerr << "error: --k must not exceed --n\n";
        return kExitBadArgs;
    }
    PrimeTable primes = primetab::sieve_core::eratosthenes(n);
    std::cout << primetab::numberkit::binomial(n, k, primes).to_decimal() << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& path_a, const std::string& path_b) {
    PrimeTable a = primetab::table_io::read_table(path_a);
    PrimeTable b = primetab::table_io::read_table(path_b);
    if (a.n != b.n) {
        std::cerr << "error: tables cover different ranges (" << a.n << " vs "
                  << b.n << ")\n";
        return kExitBadArgs;
    }
    auto diff = primetab::table_io::first_difference(a, b);
    if (diff) {
        std::cout << "tables differ first at index " << *diff << "\n";
        return kExitMismatch;
    }
    std::cout << "tables identical\n";
    return kExitOk;
}

// appends rows; writes the header only when the file is new or empty
std::ofstream open_csv(const std::string& path, const char* header, int& err) {
    bool need_header = true;
    if (std::filesystem::exists(path) && std::filesystem::file_size(path) > 0)
        need_header = false;
    std::ofstream csv(path, std::ios::app);
    if (!csv) {
        std::cerr << "error: cannot open " << path << "\n";
        err = kExitIo;
        return csv;
    }
    if (need_header) csv << header << "\n";
    return csv;
}

int cmd_bench_sieve(const std::vector<uint64_t>& sizes, const std::string& csv_path) {
    for (uint64_t n : sizes)
        if (n < 2) {
            std::cerr << "error: sieve bench sizes must be at least 2\n";
            return kExitBadArgs;
        }
    int err = kExitOk;
    std::ofstream csv = open_csv(csv_path, "algo,n,millis,pi_n", err);
    if (err) return err;
    const char* algos[] = {"eratosthenes", "schonhage", "atkin-merge", "atkin-mult"};
    for (uint64_t n : sizes) {
        uint64_t reference_pi = 0;
        bool first = true;
        for (const char* algo : algos) {
            PrimeTable table;
            double ms = run_timed(table, algo, n, false);
            uint64_t pi = table.count();
            if (first) {
                reference_pi = pi;
                first = false;
            } else if (pi != reference_pi) {
                std::cerr << "error: " << algo << " counted " << pi << " primes at n="
                          << n << ", expected " << reference_pi << "\n";
                return kExitMismatch;
            }
            csv << algo << "," << n << "," << std::fixed << std::setprecision(3)
                << ms << "," << pi << "\n";
        }
    }
    csv.flush();
    return csv ? kExitOk : kExitIo;
}

int cmd_bench_factorial(const std::vector<uint64_t>& sizes, const std::string& csv_path) {
    int err = kExitOk;
    std::ofstream csv = open_csv(csv_path, "algo,n,millis,bits", err);
    if (err) return err;
    const std::string algos[] = {"vardi", "schonhage", "iterative"};
    for (uint64_t n : sizes) {
        PrimeTable primes = primetab::sieve_core::eratosthenes(n);
        primetab::arith::BigNat reference;
        bool first = true;
        for (const std::string& algo : algos) {
            auto start = std::chrono::steady_clock::now();
            primetab::arith::BigNat value =
                algo == "vardi"
                    ? primetab::numberkit::factorial_vardi(n, primes)
                    : algo == "schonhage"
                          ? primetab::numberkit::factorial_schonhage(n, primes)
                          : primetab::numberkit::factorial_iterative(n);
            std::chrono::duration<double, std::milli> elapsed =
                std::chrono::steady_clock::now() - start;
            if (first) {
                reference = value;
                first = false;
            } else if (!(value == reference)) {
                std::cerr << "error: " << algo << " disagrees on " << n << "!\n";
                return kExitMismatch;
            }
            csv << algo << "," << n << "," << std::fixed << std::setprecision(3)
                << elapsed.count() << "," << value.bit_length() << "\n";
        }
    }
    csv.flush();
    return csv ? kExitOk : kExitIo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime tables, exact factorials/binomials, batched multiplication"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    unsigned threads = 1;
    app.add_option("--threads", threads, "worker budget for internal parallelism");

    auto* primes = app.add_subcommand("primes", "generate a prime table");
    uint64_t primes_n = 0;
    std::string primes_algo = "eratosthenes";
    std::string primes_format = "txt";
    std::string primes_out;
    bool wheel = false;
    primes->add_option("--n", primes_n, "inclusive upper bound")->required();
    primes->add_option("--algo", primes_algo)
        ->check(CLI::IsMember({"eratosthenes", "schonhage", "atkin-merge", "atkin-mult"}));
    primes->add_option("--format", primes_format)->check(CLI::IsMember({"bits", "txt"}));
    primes->add_option("--out", primes_out, "output file (required for bits)");
    primes->add_flag("--wheel", wheel, "screen by small odd primes (atkin-merge)");

    auto* factorial = app.add_subcommand("factorial", "compute n!");
    uint64_t fact_n = 0;
    std::string fact_algo = "vardi";
    factorial->add_option("--n", fact_n)->required();
    factorial->add_option("--algo", fact_algo)
        ->check(CLI::IsMember({"vardi", "schonhage", "iterative"}));

    auto* binomial = app.add_subcommand("binomial", "compute C(n,k)");
    uint64_t bin_n = 0, bin_k = 0;
    binomial->add_option("--n", bin_n)->required();
    binomial->add_option("--k", bin_k)->required();

    auto* verify = app.add_subcommand("verify", "compare two table files");
    std::string verify_a, verify_b;
    verify->add_option("file_a", verify_a)->required();
    verify->add_option("file_b", verify_b)->required();

    auto* bench = app.add_subcommand("bench", "timing runs, appended as CSV");
    std::string bench_suite;
    std::vector<uint64_t> bench_sizes;
    std::string bench_csv;
    bench->add_option("--suite", bench_suite)->required()
        ->check(CLI::IsMember({"sieve", "factorial"}));
    bench->add_option("--n", bench_sizes)->delimiter(',');
    bench->add_option("--csv", bench_csv)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArgs;
    }

    primetab::set_thread_budget(threads);

    try {
        if (app.got_subcommand(primes))
            return cmd_primes(primes_n, primes_algo, wheel, primes_out, primes_format);
        if (app.got_subcommand(factorial)) return cmd_factorial(fact_n, fact_algo);
        if (app.got_subcommand(binomial)) return cmd_binomial(bin_n, bin_k);
        if (app.got_subcommand(verify)) return cmd_verify(verify_a, verify_b);
        if (app.got_subcommand(bench))
            return bench_suite == "sieve" ? cmd_bench_sieve(bench_sizes, bench_csv)
                                          : cmd_bench_factorial(bench_sizes, bench_csv);
    } catch (const primetab::CapacityExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const primetab::MalformedTable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitBadArgs;
}

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = -1;
    std::string out;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(PRIMETAB_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.out.append(buffer, got);
    int status = ::pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("primetab-cli-test-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("primes to stdout as text") {
    CliResult r = run_cli("primes --n 10 --algo atkin-merge --format txt");
    CHECK(r.code == 0);
    CHECK(r.out == "2\n3\n5\n7\npi(10)=4\n");

    r = run_cli("primes --n 1 --algo eratosthenes --format txt");
    CHECK(r.code == 0);
    CHECK(r.out == "pi(1)=0\n");
}

TEST_CASE("primes below 2 only make sense for eratosthenes") {
    CHECK(run_cli("primes --n 1 --algo schonhage").code == 2);
    CHECK(run_cli("primes --n 0 --algo atkin-mult").code == 2);
}

TEST_CASE("primes to a text file") {
    TempDir dir;
    fs::path file = dir.path / "p10.txt";
    CliResult r =
        run_cli("primes --n 10 --algo schonhage --format txt --out " + file.string());
    CHECK(r.code == 0);
    CHECK(r.out == "pi(10)=4\n");
    CHECK(slurp(file) == "2\n3\n5\n7\n");
}

TEST_CASE("primes to a table file") {
    TempDir dir;
    fs::path file = dir.path / "t.ptb";
    CliResult r = run_cli("primes --n 1000000 --algo atkin-mult --format bits --out " +
                          file.string());
    CHECK(r.code == 0);
    CHECK(r.out == "pi(1000000)=78498\n");
    CHECK(fs::file_size(file) == 12 + 125001);

    // bits with nowhere to go is an argument error
    CHECK(run_cli("primes --n 100 --algo eratosthenes --format bits").code == 2);
}

TEST_CASE("verify compares table files") {
    TempDir dir;
    fs::path a = dir.path / "a.ptb";
    fs::path b = dir.path / "b.ptb";
    fs::path c = dir.path / "c.ptb";
    run_cli("primes --n 50000 --algo eratosthenes --format bits --out " + a.string());
    run_cli("primes --n 50000 --algo schonhage --format bits --out " + b.string());
    run_cli("primes --n 49999 --algo schonhage --format bits --out " + c.string());

    CliResult same = run_cli("verify " + a.string() + " " + b.string());
    CHECK(same.code == 0);
    CHECK(same.out == "tables identical\n");

    // flip one payload bit: k = 8*(byte-12) for the low bit of that byte
    std::string bytes = slurp(b);
    bytes[12 + 100] = char(uint8_t(bytes[12 + 100]) ^ 0x01);
    std::ofstream(b, std::ios::binary).write(bytes.data(), std::streamsize(bytes.size()));
    CliResult differ = run_cli("verify " + a.string() + " " + b.string());
    CHECK(differ.code == 1);
    CHECK(differ.out == "tables differ first at index 800\n");

    CHECK(run_cli("verify " + a.string() + " " + c.string()).code == 2);
    CHECK(run_cli("verify " + a.string() + " " + (dir.path / "no.ptb").string()).code == 4);
}

TEST_CASE("factorial and binomial commands") {
    CHECK(run_cli("factorial --n 10 --algo vardi").out == "3628800\n");
    CHECK(run_cli("factorial --n 0 --algo schonhage").out == "1\n");
    CHECK(run_cli("factorial --n 20 --algo iterative").out == "2432902008176640000\n");
    CHECK(run_cli("factorial --n 10 --algo nope").code == 2);

    CHECK(run_cli("binomial --n 10 --k 5").out == "252\n");
    CHECK(run_cli("binomial --n 52 --k 26").out == "495918532948104\n");
    CHECK(run_cli("binomial --n 5 --k 6").code == 2);
}

TEST_CASE("sieve benchmark CSV") {
    TempDir dir;
    fs::path csv = dir.path / "sieve.csv";
    CliResult r = run_cli("bench --suite sieve --n 1000,2000 --csv " + csv.string());
    CHECK(r.code == 0);

    auto rows = lines_of(slurp(csv));
    REQUIRE(rows.size() == 9);
    CHECK(rows[0] == "algo,n,millis,pi_n");
    for (size_t i = 1; i < rows.size(); ++i) {
        auto& row = rows[i];
        CHECK(std::count(row.begin(), row.end(), ',') == 3);
        if (row.find(",1000,") != std::string::npos)
            CHECK(row.substr(row.rfind(',') + 1) == "168");
        if (row.find(",2000,") != std::string::npos)
            CHECK(row.substr(row.rfind(',') + 1) == "303");
    }

    // appending keeps one header and the prior rows byte for byte
    std::string before = slurp(csv);
    CHECK(run_cli("bench --suite sieve --n 500 --csv " + csv.string()).code == 0);
    std::string after = slurp(csv);
    CHECK(after.substr(0, before.size()) == before);
    CHECK(lines_of(after).size() == 13);

    // no sizes: just the header
    fs::path empty_csv = dir.path / "empty.csv";
    CHECK(run_cli("bench --suite sieve --csv " + empty_csv.string()).code == 0);
    CHECK(slurp(empty_csv) == "algo,n,millis,pi_n\n");
}

TEST_CASE("factorial benchmark CSV") {
    TempDir dir;
    fs::path csv = dir.path / "fact.csv";
    CliResult r = run_cli("bench --suite factorial --n 100 --csv " + csv.string());
    CHECK(r.code == 0);

    auto rows = lines_of(slurp(csv));
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "algo,n,millis,bits");
    std::string bits = rows[1].substr(rows[1].rfind(',') + 1);
    CHECK(bits == "525");  // 100! has 525 bits
    for (size_t i = 2; i < rows.size(); ++i)
        CHECK(rows[i].substr(rows[i].rfind(',') + 1) == bits);
}

TEST_CASE("argument and capacity failures use distinct exit codes") {
    CHECK(run_cli("primes --n 10 --algo nonsense").code == 2);
    CHECK(run_cli("primes --algo eratosthenes").code == 2);  // --n required
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("bench --suite sieve --n 1").code == 2);  // n < 2 in the list

    CHECK(run_cli("primes --n 9000000000 --algo eratosthenes").code == 3);

    CHECK(run_cli("primes --n 100 --algo eratosthenes --format bits --out "
                  "/nonexistent/dir/x.ptb")
              .code == 4);
}

TEST_CASE("thread flag changes nothing observable") {
    TempDir dir;
    fs::path a = dir.path / "serial.ptb";
    fs::path b = dir.path / "threaded.ptb";
    CliResult serial = run_cli("primes --n 200000 --algo atkin-mult --format bits --out " +
                               a.string());
    CliResult threaded = run_cli(
        "primes --n 200000 --algo atkin-mult --format bits --out " + b.string() +
        " --threads 4");
    CHECK(serial.out == threaded.out);
    CHECK(slurp(a) == slurp(b));
}

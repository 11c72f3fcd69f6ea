#pragma once

// Front-end operations behind the qrsums command line: per-prime reports,
// range scans and the verification suite.

#include "qrsums/arith.hpp"
#include "qrsums/sums.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrs::app {

// Bad command-line input (maps to exit status 64).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Output could not be written (maps to exit status 74).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInternal = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitIo = 74;

struct ScanRow {
    std::uint64_t p;
    int class_mod8;
    std::int64_t q_o;
    std::int64_t q_e;
    std::int64_t a_value;
    std::int64_t m_value;
    std::int64_t t_value;
    std::int64_t c_value;
    std::int64_t h;
    std::int64_t s_low;
    std::int64_t s_high;
    std::int64_t even_below_half;
    std::int64_t even_above_half;
};

inline constexpr const char* kCsvHeader = "p,class_mod8,q_o,q_e,A,M,T,C,h,s_low,s_high,even_lo,even_hi";

ScanRow scan_row(OddPrime p);  // p = 3 (mod 4)
std::string csv_line(const ScanRow& row);
std::string json_object(const ScanRow& row);

enum class Format { Csv, Json };

struct ScanOptions {
    std::uint64_t lo = 3;
    std::uint64_t hi = 3;
    Format format = Format::Csv;
    unsigned jobs = 1;
    std::uint64_t block_width = 4096;
};

// Validates 3 <= lo <= hi <= 2^32; throws UsageError otherwise.
void check_scan_range(std::uint64_t lo, std::uint64_t hi);

// Writes one row per prime p = 3 (mod 4) in [lo, hi], in increasing order.
// Output is byte-identical for every worker count.
void scan(const ScanOptions& opts, std::ostream& out);

// Full report for p = 3 (mod 4); only the vanishing of T and C for
// p = 1 (mod 4).  Throws UsageError when p is not an odd prime.
void report(std::uint64_t p, bool want_float, bool as_json, std::ostream& out);

struct Failure {
    std::uint64_t p;
    std::string check;
    std::string expected;
    std::string actual;
};

struct VerifyOptions {
    std::uint64_t lo = 3;
    std::uint64_t hi = 3;
    bool with_float = false;
    std::uint64_t float_cap = 10000;
    std::uint64_t gauss_cap = 500;   // Gauss sums cost O(p^2) per prime
};

struct VerifyReport {
    std::uint64_t lo;
    std::uint64_t hi;
    std::uint64_t primes_checked = 0;
    std::uint64_t checks_run = 0;
    std::vector<Failure> failures;
    std::vector<Erratum> errata;

    bool ok() const noexcept { return failures.empty(); }
};

// Primes at which the misprinted identities are re-derived on every run.
inline constexpr std::uint64_t kErrataPrimes[] = {7, 11, 23};

VerifyReport verify(const VerifyOptions& opts);
void print_verify_report(const VerifyReport& rep, std::ostream& out);

// Runs gauss_sum_float for k = 1..p-1; returns true if all pass.
bool gauss_table(std::uint64_t p, std::ostream& out);

// printf("%.12g")
std::string format_real(double x);

} // namespace qrs::app

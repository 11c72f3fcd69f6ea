#pragma once

// Integer substrate: modular exponentiation, deterministic primality,
// the Legendre symbol and segmented prime iteration.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrs {

using i128 = __int128;
using u128 = unsigned __int128;

// Raised when an argument lies outside an operation's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Raised when an identity that must hold by construction does not.
// Always a bug, never a user error.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Primes handled by the library are below this bound; exported exact
// values then fit in signed 64-bit.
inline constexpr std::uint64_t kPrimeLimit = std::uint64_t{1} << 32;

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

// Exact for every n < 2^64.
bool is_prime(std::uint64_t n);

/// A validated odd prime below kPrimeLimit.
class OddPrime {
public:
    /// Throws DomainError unless n is an odd prime below kPrimeLimit.
    static OddPrime make(std::uint64_t n);
    static std::optional<OddPrime> try_make(std::uint64_t n) noexcept;

    std::uint64_t value() const noexcept { return value_; }
    std::int64_t signed_value() const noexcept { return static_cast<std::int64_t>(value_); }
    int class_mod4() const noexcept { return static_cast<int>(value_ % 4); }
    int class_mod8() const noexcept { return static_cast<int>(value_ % 8); }

    friend bool operator==(OddPrime, OddPrime) = default;
    friend auto operator<=>(OddPrime, OddPrime) = default;

private:
    explicit OddPrime(std::uint64_t v) noexcept : value_(v) {}
    std::uint64_t value_;

    friend void for_each_prime(std::uint64_t, std::uint64_t, const std::function<void(OddPrime)>&);
};

// Throws DomainError unless p = 3 (mod 4).
void require_3_mod_4(OddPrime p, const char* what);

// Euler's criterion: k^((p-1)/2) mod p.
int legendre(std::int64_t k, OddPrime p);

// Residue-class restriction for prime iteration (mod 4 or mod 8).
struct ClassFilter {
    std::uint32_t modulus;
    std::uint32_t residue;

    static ClassFilter mod4(std::uint32_t r) { return {4, r}; }
    static ClassFilter mod8(std::uint32_t r) { return {8, r}; }

    bool accepts(std::uint64_t n) const noexcept { return n % modulus == residue; }
};

// Calls fn for every odd prime in [lo, hi] in increasing order.  Memory is
// bounded by the segment size regardless of the width of the range.
void for_each_prime(std::uint64_t lo, std::uint64_t hi, const std::function<void(OddPrime)>& fn);

std::vector<OddPrime> primes_in_range(std::uint64_t lo, std::uint64_t hi,
                                      std::optional<ClassFilter> filter = std::nullopt);

// Decimal rendering of 128-bit integers.
std::string to_string(i128 v);

// Narrowing that refuses to lose information.
std::int64_t narrow_exact(i128 v, const char* what);

} // namespace qrs

#include "qrsums/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace qrs {

namespace {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    if (m <= 0xFFFFFFFFull)
        return (a * b) % m;
    return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

constexpr std::uint64_t kTrialDivisionLimit = 10000;
constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool trial_division(std::uint64_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

// n odd, n > 37
bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    std::uint64_t x = mod_pow(a % n, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n)
        --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

constexpr std::uint64_t kSegmentSpan = std::uint64_t{1} << 20;

} // namespace

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
    if (modulus < 2)
        throw DomainError("mod_pow: modulus must be at least 2");
    std::uint64_t result = 1;
    base %= modulus;
    while (exponent) {
        if (exponent & 1)
            result = mul_mod(result, base, modulus);
        base = mul_mod(base, base, modulus);
        exponent >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < kTrialDivisionLimit)
        return trial_division(n);
    if (n % 2 == 0)
        return false;
    for (std::uint64_t w : kWitnesses)
        if (n % w == 0)
            return false;
    for (std::uint64_t w : kWitnesses)
        if (!strong_probable_prime(n, w))
            return false;
    return true;
}

OddPrime OddPrime::make(std::uint64_t n) {
    if (auto p = try_make(n))
        return *p;
    throw DomainError(std::to_string(n) + " is not an odd prime below 2^32");
}

std::optional<OddPrime> OddPrime::try_make(std::uint64_t n) noexcept {
    if (n < 3 || n >= kPrimeLimit || n % 2 == 0 || !is_prime(n))
        return std::nullopt;
    return OddPrime(n);
}

void require_3_mod_4(OddPrime p, const char* what) {
    if (p.class_mod4() != 3)
        throw DomainError(std::string(what) + ": requires p = 3 (mod 4), got p = " +
                          std::to_string(p.value()));
}

int legendre(std::int64_t k, OddPrime p) {
    const auto m = static_cast<std::int64_t>(p.value());
    std::int64_t r = k % m;
    if (r < 0)
        r += m;
    if (r == 0)
        return 0;
    const std::uint64_t e = mod_pow(static_cast<std::uint64_t>(r), (p.value() - 1) / 2, p.value());
    if (e == 1)
        return 1;
    if (e == p.value() - 1)
        return -1;
    throw InvariantViolation("legendre: Euler criterion returned " + std::to_string(e));
}

void for_each_prime(std::uint64_t lo, std::uint64_t hi, const std::function<void(OddPrime)>& fn) {
    lo = std::max<std::uint64_t>(lo, 3);
    hi = std::min<std::uint64_t>(hi, kPrimeLimit - 1);
    if (lo > hi)
        return;

    // Base primes up to sqrt(hi), odd only.
    const std::uint64_t root = isqrt(hi);
    std::vector<std::uint32_t> base;
    {
        std::vector<bool> composite(root + 1, false);
        for (std::uint64_t i = 3; i <= root; i += 2) {
            if (composite[i])
                continue;
            base.push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t j = i * i; j <= root; j += 2 * i)
                composite[j] = true;
        }
    }

    // Each segment covers odd numbers only; slot i holds seg_lo + 2i.
    std::vector<std::uint8_t> composite;
    std::uint64_t seg_lo = lo | 1;
    while (seg_lo <= hi) {
        const std::uint64_t seg_hi = std::min(hi, seg_lo + 2 * (kSegmentSpan - 1));
        const std::size_t slots = static_cast<std::size_t>((seg_hi - seg_lo) / 2 + 1);
        composite.assign(slots, 0);
        for (std::uint32_t q : base) {
            const std::uint64_t q2 = std::uint64_t{q} * q;
            if (q2 > seg_hi)
                break;
            std::uint64_t start = std::max(q2, (seg_lo + q - 1) / q * q);
            if (start % 2 == 0)
                start += q;
            for (std::uint64_t j = start; j <= seg_hi; j += 2 * std::uint64_t{q})
                composite[static_cast<std::size_t>((j - seg_lo) / 2)] = 1;
        }
        for (std::size_t i = 0; i < slots; ++i)
            if (!composite[i])
                fn(OddPrime(seg_lo + 2 * i));
        if (seg_hi >= hi)
            break;
        seg_lo = seg_hi + 2;
    }
}

std::vector<OddPrime> primes_in_range(std::uint64_t lo, std::uint64_t hi,
                                      std::optional<ClassFilter> filter) {
    std::vector<OddPrime> out;
    for_each_prime(lo, hi, [&](OddPrime p) {
        if (!filter || filter->accepts(p.value()))
            out.push_back(p);
    });
    return out;
}

std::string to_string(i128 v) {
    if (v == 0)
        return "0";
    const bool neg = v < 0;
    u128 u = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
    std::string s;
    while (u) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg)
        s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

std::int64_t narrow_exact(i128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw InvariantViolation(std::string(what) + ": value " + to_string(v) +
                                 " does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

} // namespace qrs

#pragma once

// Floating-point evaluation of the trigonometric and exponential sums,
// each paired with its exact reference.

#include "qrsums/arith.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace qrs {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

enum class CheckKind {
    Closeness,    // pass iff residual <= tolerance
    StrictBound,  // computed is an upper bound; pass iff reference < computed
};

struct FloatCheckResult {
    std::string name;
    OddPrime p;
    CheckKind kind;
    std::complex<double> computed;     // imaginary part is 0 for real sums
    std::complex<double> reference;
    std::optional<std::int64_t> exact; // integer reference when there is one
    double residual;                   // |computed - reference|
    double tolerance;
    bool pass;
};

// Tolerance for the scalar sums: max(1e-9 p^{3/2} (1 + ln p), 1e-9).
double scalar_tolerance(std::uint64_t p) noexcept;
// Tolerance for Gauss sums: 1e-9 p.
double gauss_tolerance(std::uint64_t p) noexcept;

// tan(pi r / p) and cot(pi r / p) for 0 < r < p, from exact integer
// reductions of r; the tangent argument stays inside [-pi/4, pi/4].
double tan_pi_fraction(std::uint64_t r, std::uint64_t p) noexcept;
double cot_pi_fraction(std::uint64_t r, std::uint64_t p) noexcept;

// Raw sums, exposed for tests.
double tangent_sum(OddPrime p);   // sqrt(p) sum_{n<=(p-1)/2} tan(pi n^2 / p)
double cotangent_sum(OddPrime p); // sqrt(p) sum_{n<=(p-1)/2} cot(pi n^2 / p)
double character_cot_sum(OddPrime p); // sum_{k<p} (k/p) cot(pi k / p)

FloatCheckResult t_float(OddPrime p);
FloatCheckResult c_float(OddPrime p);
FloatCheckResult whiteman_sum(OddPrime p);
FloatCheckResult gauss_sum_float(std::int64_t k, OddPrime p);
FloatCheckResult lebesgue_float(OddPrime p);
FloatCheckResult berndt_m_float(OddPrime p);
FloatCheckResult bound_prop3(OddPrime p);
FloatCheckResult bound_pv(OddPrime p);

} // namespace qrs

#include "qrsums/analytic.hpp"

#include "qrsums/classnum.hpp"
#include "qrsums/residues.hpp"
#include "qrsums/sums.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace qrs {

namespace {

using std::numbers::pi;

FloatCheckResult closeness(std::string name, OddPrime p, std::complex<double> computed,
                           std::complex<double> reference, std::optional<std::int64_t> exact,
                           double tolerance) {
    const double residual = std::abs(computed - reference);
    return {std::move(name), p,        CheckKind::Closeness, computed, reference, exact,
            residual,        tolerance, residual <= tolerance};
}

FloatCheckResult strict_bound(std::string name, OddPrime p, double bound, double value,
                              std::optional<std::int64_t> exact, bool extra = true) {
    return {std::move(name), p, CheckKind::StrictBound, bound, value, exact, std::abs(bound - value),
            0.0, value < bound && extra};
}

std::uint64_t square_mod(std::uint64_t n, std::uint64_t p) { return (n % p) * (n % p) % p; }

} // namespace

double scalar_tolerance(std::uint64_t p) noexcept {
    const double x = static_cast<double>(p);
    return std::max(1e-9 * std::pow(x, 1.5) * (1.0 + std::log(x)), 1e-9);
}

double gauss_tolerance(std::uint64_t p) noexcept { return 1e-9 * static_cast<double>(p); }

// With s = r or r - p (|s| < p/2) and d = p - 2r (odd, nonzero):
//   tan(pi r/p) = tan(pi s/p) = 1 / tan(pi d/(2p)).
// Whichever form keeps the argument inside [-pi/4, pi/4] is used, so the
// tangent is always evaluated far from its poles.
namespace {

struct ReducedAngle {
    double near_zero;   // pi s / p
    double near_pole;   // pi d / (2p)
    bool use_near_zero;
};

ReducedAngle reduce(std::uint64_t r, std::uint64_t p) noexcept {
    const auto sp = static_cast<std::int64_t>(p);
    const auto sr = static_cast<std::int64_t>(r);
    const std::int64_t s = 2 * sr < sp ? sr : sr - sp;
    const std::int64_t d = sp - 2 * sr;
    const auto x = static_cast<double>(p);
    return {pi * static_cast<double>(s) / x, pi * static_cast<double>(d) / (2.0 * x), 4 * std::abs(s) <= sp};
}

} // namespace

double tan_pi_fraction(std::uint64_t r, std::uint64_t p) noexcept {
    const auto a = reduce(r, p);
    return a.use_near_zero ? std::tan(a.near_zero) : 1.0 / std::tan(a.near_pole);
}

double cot_pi_fraction(std::uint64_t r, std::uint64_t p) noexcept {
    const auto a = reduce(r, p);
    return a.use_near_zero ? 1.0 / std::tan(a.near_zero) : std::tan(a.near_pole);
}

double tangent_sum(OddPrime p) {
    const std::uint64_t n = p.value();
    CompensatedSum acc;
    for (std::uint64_t j = 1; j <= (n - 1) / 2; ++j)
        acc.add(tan_pi_fraction(square_mod(j, n), n));
    return std::sqrt(static_cast<double>(n)) * acc.value();
}

double cotangent_sum(OddPrime p) {
    const std::uint64_t n = p.value();
    CompensatedSum acc;
    for (std::uint64_t j = 1; j <= (n - 1) / 2; ++j)
        acc.add(cot_pi_fraction(square_mod(j, n), n));
    return std::sqrt(static_cast<double>(n)) * acc.value();
}

double character_cot_sum(OddPrime p) {
    const std::uint64_t n = p.value();
    const auto table = residue_table(p);
    CompensatedSum acc;
    for (std::uint64_t k = 1; k < n; ++k) {
        const double c = cot_pi_fraction(k, n);
        acc.add(table[k] ? c : -c);
    }
    return acc.value();
}

FloatCheckResult t_float(OddPrime p) {
    const std::int64_t ref = p.class_mod4() == 3 ? t_exact(p) : 0;
    return closeness("t_float", p, tangent_sum(p), static_cast<double>(ref), ref,
                     scalar_tolerance(p.value()));
}

FloatCheckResult c_float(OddPrime p) {
    const std::int64_t ref = p.class_mod4() == 3 ? c_exact(p) : 0;
    return closeness("c_float", p, cotangent_sum(p), static_cast<double>(ref), ref,
                     scalar_tolerance(p.value()));
}

FloatCheckResult whiteman_sum(OddPrime p) {
    require_3_mod_4(p, "whiteman_sum");
    const std::uint64_t n = p.value();
    CompensatedSum acc;
    for (std::uint64_t j = 1; j < n; ++j)
        acc.add(cot_pi_fraction(square_mod(j, n), n));
    const double computed = acc.value();
    const double reference = 2.0 * static_cast<double>(c_exact(p)) / std::sqrt(static_cast<double>(n));
    auto r = closeness("whiteman_sum", p, computed, reference, std::nullopt, scalar_tolerance(n));
    r.pass = r.pass && computed > 0.0;
    return r;
}

FloatCheckResult gauss_sum_float(std::int64_t k, OddPrime p) {
    require_3_mod_4(p, "gauss_sum_float");
    const auto n = p.signed_value();
    std::int64_t kr = k % n;
    if (kr < 0)
        kr += n;
    if (kr == 0)
        throw DomainError("gauss_sum_float: p divides k");

    const auto un = static_cast<std::uint64_t>(n);
    std::vector<double> cos_table(un), sin_table(un);
    for (std::uint64_t r = 0; r < un; ++r) {
        const double angle = 2.0 * pi * static_cast<double>(r) / static_cast<double>(un);
        cos_table[r] = std::cos(angle);
        sin_table[r] = std::sin(angle);
    }
    CompensatedSum re, im;
    for (std::uint64_t j = 0; j < un; ++j) {
        const std::uint64_t r = square_mod(j, un) * static_cast<std::uint64_t>(kr) % un;
        re.add(cos_table[r]);
        im.add(sin_table[r]);
    }
    const int chi = legendre(kr, p);
    const std::complex<double> reference(0.0, chi * std::sqrt(static_cast<double>(un)));
    return closeness("gauss_sum_float", p, {re.value(), im.value()}, reference, std::nullopt,
                     gauss_tolerance(un));
}

FloatCheckResult lebesgue_float(OddPrime p) {
    require_3_mod_4(p, "lebesgue_float");
    const double root = std::sqrt(static_cast<double>(p.value()));
    const double computed = unit_index(p) * character_cot_sum(p) / (2.0 * root);
    const std::int64_t h = h_from_forms(p);
    return closeness("lebesgue_float", p, computed, static_cast<double>(h), h,
                     scalar_tolerance(p.value()));
}

FloatCheckResult berndt_m_float(OddPrime p) {
    require_3_mod_4(p, "berndt_m_float");
    const double root = std::sqrt(static_cast<double>(p.value()));
    const double computed = root / 2.0 * character_cot_sum(p);
    const std::int64_t ref = -m_sum(p);
    return closeness("berndt_m_float", p, computed, static_cast<double>(ref), ref,
                     scalar_tolerance(p.value()));
}

FloatCheckResult bound_prop3(OddPrime p) {
    require_3_mod_4(p, "bound_prop3");
    const auto x = static_cast<double>(p.value());
    const double bound = 2.0 * x * std::sqrt(x) / pi * (1.0 + 0.5 * std::log(x - 2.0));
    const std::int64_t t = std::abs(t_exact(p));
    return strict_bound("bound_prop3", p, bound, static_cast<double>(t), t);
}

FloatCheckResult bound_pv(OddPrime p) {
    require_3_mod_4(p, "bound_pv");
    const auto prof = residue_profile(p);
    const auto x = static_cast<double>(p.value());
    const double bound = std::sqrt(x) * std::log(x);
    const std::int64_t s = std::abs(prof.half_sum());
    const double t = std::abs(static_cast<double>(t_exact(prof)));
    return strict_bound("bound_pv", p, bound, static_cast<double>(s), s, t < x * bound);
}

} // namespace qrs

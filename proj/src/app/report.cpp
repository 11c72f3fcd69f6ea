#include "qrsums/app.hpp"

#include "qrsums/analytic.hpp"
#include "qrsums/classnum.hpp"
#include "qrsums/residues.hpp"

#include <ostream>

#include <json.hpp>

namespace qrs::app {

namespace {

using ordered_json = nlohmann::ordered_json;

double rounded(double x) { return std::stod(format_real(x)); }

ordered_json check_json(const FloatCheckResult& r) {
    ordered_json j;
    j["name"] = r.name;
    j["kind"] = r.kind == CheckKind::Closeness ? "closeness" : "strict_bound";
    if (r.computed.imag() != 0.0 || r.reference.imag() != 0.0) {
        j["computed"] = {rounded(r.computed.real()), rounded(r.computed.imag())};
        j["reference"] = {rounded(r.reference.real()), rounded(r.reference.imag())};
    } else {
        j["computed"] = rounded(r.computed.real());
        j["reference"] = rounded(r.reference.real());
    }
    j["residual"] = rounded(r.residual);
    j["tolerance"] = rounded(r.tolerance);
    j["pass"] = r.pass;
    return j;
}

std::string value_text(std::complex<double> z) {
    if (z.imag() == 0.0)
        return format_real(z.real());
    return "(" + format_real(z.real()) + ", " + format_real(z.imag()) + ")";
}

void print_check(const FloatCheckResult& r, std::ostream& out) {
    out << "check " << r.name << ": computed=" << value_text(r.computed)
        << " reference=" << value_text(r.reference) << " residual=" << format_real(r.residual)
        << " tolerance=" << format_real(r.tolerance) << ' ' << (r.pass ? "pass" : "FAIL") << '\n';
}

std::vector<FloatCheckResult> float_checks(OddPrime p) {
    if (p.class_mod4() == 1)
        return {t_float(p), c_float(p)};
    return {t_float(p),        c_float(p),        whiteman_sum(p), lebesgue_float(p),
            berndt_m_float(p), bound_prop3(p),    bound_pv(p)};
}

std::string forms_text(const std::vector<ReducedForm>& forms) {
    std::string s;
    for (const auto& f : forms) {
        if (!s.empty())
            s += ' ';
        s += "(" + std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c) + ")";
    }
    return s;
}

} // namespace

void report(std::uint64_t pv, bool want_float, bool as_json, std::ostream& out) {
    const auto maybe = OddPrime::try_make(pv);
    if (!maybe)
        throw UsageError(std::to_string(pv) + " is not an odd prime below 2^32");
    const OddPrime p = *maybe;

    std::vector<FloatCheckResult> checks;
    if (want_float)
        checks = float_checks(p);

    if (p.class_mod4() == 1) {
        if (as_json) {
            ordered_json j;
            j["p"] = p.value();
            j["class_mod8"] = p.class_mod8();
            j["T"] = 0;
            j["C"] = 0;
            if (want_float) {
                j["float_checks"] = ordered_json::array();
                for (const auto& c : checks)
                    j["float_checks"].push_back(check_json(c));
            }
            out << j.dump(2) << '\n';
        } else {
            out << "p = " << p.value() << "\nclass_mod8 = " << p.class_mod8()
                << "\nT = 0\nC = 0\n";
            for (const auto& c : checks)
                print_check(c, out);
        }
        return;
    }

    const auto prof = residue_profile(p);
    const auto sums = sum_record(prof);
    const auto cls = class_record(prof);
    const auto row = scan_row(p);
    const std::int64_t t_m = t_from_m(prof);

    if (as_json) {
        ordered_json j = ordered_json::parse(json_object(row));
        j["T_expressions"] = sums.t_expr;
        j["T_from_M"] = t_m;
        j["h_residues"] = cls.h_residues;
        j["forms"] = ordered_json::array();
        for (const auto& f : cls.forms)
            j["forms"].push_back({f.a, f.b, f.c});
        if (want_float) {
            j["float_checks"] = ordered_json::array();
            for (const auto& c : checks)
                j["float_checks"].push_back(check_json(c));
        }
        out << j.dump(2) << '\n';
        return;
    }

    out << "p = " << row.p << '\n'
        << "class_mod8 = " << row.class_mod8 << '\n'
        << "q_o = " << row.q_o << '\n'
        << "q_e = " << row.q_e << '\n'
        << "A = " << row.a_value << '\n'
        << "M = " << row.m_value << '\n'
        << "T = " << row.t_value << '\n'
        << "T_expressions =";
    for (auto v : sums.t_expr)
        out << ' ' << v;
    out << '\n'
        << "T_from_M = " << t_m << '\n'
        << "C = " << row.c_value << '\n'
        << "h = " << row.h << '\n'
        << "h_residues = " << cls.h_residues << '\n'
        << "forms = " << forms_text(cls.forms) << '\n'
        << "s_low = " << row.s_low << '\n'
        << "s_high = " << row.s_high << '\n'
        << "even_lo = " << row.even_below_half << '\n'
        << "even_hi = " << row.even_above_half << '\n';
    for (const auto& c : checks)
        print_check(c, out);
}

bool gauss_table(std::uint64_t pv, std::ostream& out) {
    const auto maybe = OddPrime::try_make(pv);
    if (!maybe || maybe->class_mod4() != 3)
        throw UsageError("gauss: p must be a prime = 3 (mod 4) below 2^32");
    bool all = true;
    for (std::uint64_t k = 1; k < pv; ++k) {
        const auto r = gauss_sum_float(static_cast<std::int64_t>(k), *maybe);
        out << "k = " << k << ' ';
        print_check(r, out);
        all = all && r.pass;
    }
    return all;
}

} // namespace qrs::app

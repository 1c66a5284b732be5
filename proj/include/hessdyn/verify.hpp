#pragma once

#include "cubics.hpp"
#include "hmap.hpp"

#include <string>
#include <vector>

namespace hessdyn {
namespace verify {

struct CheckResult {
    std::string name;
    bool passed;
};

struct Report {
    std::vector<CheckResult> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
};

// The exact verification suite. Takes the map as a parameter so a negative
// control (a corrupted constant) is detectable by the same code path.
inline Report run_suite(const RatFunQ& h, unsigned max_compose = 6, unsigned moebius_bound = 10000,
                        unsigned orbit_bound = 24) {
    Report report;
    auto add = [&report](std::string name, bool ok) {
        report.checks.push_back({std::move(name), ok});
    };

    add("hessian_normal_form_identity", cubics::verify_hessian_normal_form());
    add("hessian_j_formula_identity", cubics::verify_hessian_j_formula());

    // H(1728) = 1728 and the critical orbits terminate exactly.
    {
        bool ok = eval_ext(h, ExtRat(Rational(1728))) == ExtRat(Rational(1728));
        ExtRat x(Rational(6912));
        ExtRat x1 = eval_ext(h, x);
        ExtRat x2 = eval_ext(h, x1);
        ExtRat x3 = eval_ext(h, x2);
        ok = ok && x1 == ExtRat(Rational(0)) && x2.inf && x3.inf;
        ExtRat y1 = eval_ext(h, ExtRat(Rational(-13824)));
        ok = ok && y1 == ExtRat(Rational(1728));
        add("critical_orbits_preperiodic", ok);
    }

    // Leading coefficients and degrees of the iterates.
    {
        bool ok = true;
        RatFunQ acc = h;
        for (unsigned n = 1; n <= max_compose && ok; ++n) {
            if (n > 1) acc = h.compose(acc);
            Int three_n = pow_int(3, n);
            ok = acc.degree() == three_n && acc.ddeg() == 1 &&
                 acc.num().leading() == (n % 2 == 0 ? 1 : -1) &&
                 acc.den().leading() == pow_int(27, n);
        }
        add("iterate_leading_coefficients_n_le_" + std::to_string(max_compose), ok);
    }

    {
        bool ok = orbits::moebius_divisor_sum(1) == 1;
        for (unsigned n = 2; n <= moebius_bound && ok; ++n)
            ok = orbits::moebius_divisor_sum(n) == 0;
        add("moebius_divisor_sum_zero", ok);
    }

    {
        bool ok = true;
        for (unsigned n = 1; n <= orbit_bound && ok; ++n)
            ok = orbits::count_orbits_recursive(n) == orbits::count_orbits_closed(n);
        add("orbit_counts_recursive_equals_closed", ok);
    }

    return report;
}

}  // namespace verify
}  // namespace hessdyn

#pragma once

#include "rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace hessdyn {
namespace orbits {

// Raised if an orbit-count division is inexact; indicates an
// implementation bug, never expected on valid input.
class NonIntegralCount : public std::logic_error {
public:
    explicit NonIntegralCount(unsigned n)
        : std::logic_error("orbit count for n=" + std::to_string(n) + " is not an integer") {}
};

inline std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> small, large;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

// Moebius function by trial-division factorization.
inline int moebius(unsigned n) {
    if (n == 0) throw std::invalid_argument("moebius requires n >= 1");
    int factors = 0;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++factors;
        }
    }
    if (n > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

// sum_{d|n} mu(d); 1 at n = 1 and 0 otherwise.
inline int moebius_divisor_sum(unsigned n) {
    int s = 0;
    for (unsigned d : divisors(n)) s += moebius(d);
    return s;
}

// B_n = (3^n - sum_{i|n, i<n} i*B_i) / n, B_1 = 3: the number of size-n
// cycles of a degree-3 map with all periodic points simple.
inline Int count_orbits_recursive(unsigned n) {
    if (n == 0) throw std::invalid_argument("orbit count requires n >= 1");
    std::map<unsigned, Int> memo;
    auto rec = [&memo](auto&& self, unsigned k) -> Int {
        if (auto it = memo.find(k); it != memo.end()) return it->second;
        Int total = pow_int(3, k);
        for (unsigned d : divisors(k))
            if (d < k) total -= Int(d) * self(self, d);
        if (total % k != 0) throw NonIntegralCount(k);
        Int b = total / k;
        memo[k] = b;
        return b;
    };
    return rec(rec, n);
}

// Necklace closed form B_n = (1/n) sum_{d|n} mu(d) 3^(n/d).
inline Int count_orbits_closed(unsigned n) {
    if (n == 0) throw std::invalid_argument("orbit count requires n >= 1");
    Int total = 0;
    for (unsigned d : divisors(n)) total += Int(moebius(d)) * pow_int(3, n / d);
    if (total % n != 0) throw NonIntegralCount(n);
    return total / n;
}

struct OrbitCountTable {
    enum class Method { recursive, closed };
    std::map<unsigned, Int> entries;
    Method method;
};

inline OrbitCountTable make_table(unsigned max_n, OrbitCountTable::Method method) {
    OrbitCountTable t{{}, method};
    for (unsigned n = 1; n <= max_n; ++n)
        t.entries[n] = method == OrbitCountTable::Method::recursive ? count_orbits_recursive(n)
                                                                    : count_orbits_closed(n);
    return t;
}

}  // namespace orbits
}  // namespace hessdyn

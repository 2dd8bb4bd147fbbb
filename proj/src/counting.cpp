#include "maxchord/counting.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxchord {

CountBig exact_div(const CountBig& num, const CountBig& den, const char* what) {
    if (den == 0) throw std::logic_error(std::string(what) + ": division by zero");
    if (num % den != 0)
        throw std::logic_error(std::string(what) + ": division of " + num.str() + " by " +
                               den.str() + " is not exact");
    return num / den;
}

CountBig factorial(unsigned m) {
    CountBig r = 1;
    for (unsigned i = 2; i <= m; ++i) r *= i;
    return r;
}

CountBig binomial(unsigned n, long long k) {
    if (k < 0 || k > static_cast<long long>(n)) return 0;
    unsigned kk = static_cast<unsigned>(k);
    if (kk > n - kk) kk = n - kk;
    CountBig r = 1;
    for (unsigned i = 1; i <= kk; ++i) {
        r *= n - kk + i;
        r /= i; // exact: r is C(n-kk+i, i) at each step
    }
    return r;
}

unsigned long long totient(unsigned long long q) {
    if (q == 0) throw std::invalid_argument("totient(0) is undefined");
    unsigned long long r = q;
    for (unsigned long long p = 2; p * p <= q; ++p) {
        if (q % p != 0) continue;
        r -= r / p;
        while (q % p == 0) q /= p;
    }
    if (q > 1) r -= r / q;
    return r;
}

CountBig mu(unsigned g) {
    using boost::multiprecision::pow;
    return exact_div(factorial(4 * g), pow(CountBig(4), g) * factorial(2 * g + 1), "mu");
}

CountBig d_star(unsigned g) {
    using boost::multiprecision::pow;
    if (g < 1) throw std::invalid_argument("d_star needs genus >= 1");
    const unsigned n4 = 4 * g;
    CountBig total = mu(g); // the identity contribution; q=1 stays out of the odd sum
    for (unsigned q = 2; q <= n4; ++q) {
        if (n4 % q != 0) continue;
        const unsigned k = n4 / q;
        if (q % 2 == 0) {
            CountBig inner = 0;
            for (unsigned gamma = 0; 4 * gamma <= k; ++gamma)
                inner += binomial(k, 4 * gamma) * mu(gamma) * pow(CountBig(q), 2 * gamma);
            total += CountBig(totient(q)) * inner;
        } else {
            // odd q forces 4 | k, so k/2 is even and the division is exact
            const CountBig maps =
                exact_div(factorial(k), pow(CountBig(2), k / 2) * factorial(k / 2 + 1), "d_star odd term");
            total += CountBig(totient(q)) * pow(CountBig(q), k / 2) * maps;
        }
    }
    return exact_div(total, CountBig(n4), "d_star");
}

CountBig d_parallel(unsigned g) {
    static std::mutex lock;
    static std::vector<CountBig> memo{1, 1}; // values at g = 0 and g = 1
    std::scoped_lock guard(lock);
    while (memo.size() <= g) {
        const unsigned t = static_cast<unsigned>(memo.size());
        auto prev = [&](unsigned back) -> CountBig {
            return back > t ? CountBig(0) : memo[t - back];
        };
        const long long tl = t;
        CountBig acc = -CountBig(4 * tl - 1) * prev(1);
        acc += CountBig(tl) * (2 * tl - 3) * (10 * tl - 9) * prev(2);
        acc += 30 * binomial(2 * t - 3, 3) * prev(3);
        acc -= 240 * binomial(2 * t - 3, 5) * prev(4);
        CountBig val = exact_div(acc, CountBig(t + 1), "d_parallel");
        if (val < 0) throw std::logic_error("d_parallel: negative value at g=" + std::to_string(t));
        memo.push_back(std::move(val));
    }
    return memo[g];
}

CountBig d_vertical(unsigned g) {
    if (g < 1) throw std::invalid_argument("d_vertical needs genus >= 1");
    return CountBig(2 * g - 1) * d_parallel(g - 1);
}

CountBig d_circle(unsigned g) {
    if (g < 1) throw std::invalid_argument("d_circle needs genus >= 1");
    return exact_div(2 * d_star(g) + d_vertical(g) + d_parallel(g), CountBig(4), "d_circle");
}

CountBig double_factorial_odd(unsigned n) {
    CountBig r = 1;
    for (unsigned i = 1; i <= n; ++i) r *= 2 * i - 1;
    return r;
}

CountBig catalan(unsigned n) {
    return exact_div(binomial(2 * n, n), CountBig(n + 1), "catalan");
}

} // namespace maxchord

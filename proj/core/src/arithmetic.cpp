#include "closegap/arithmetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "closegap/errors.hpp"

namespace closegap {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 e, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

// Deterministic for all n < 2^64 with these bases.
bool miller_rabin(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        u64 x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's variant of Pollard rho. n is odd, composite, and has no factor
// below the trial division bound.
u64 pollard_rho(u64 n) {
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1;
        constexpr u64 m = 128;
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (miller_rabin(n)) {
        out.push_back(n);
        return;
    }
    u64 f = pollard_rho(n);
    factor_into(f, out);
    factor_into(n / f, out);
}

constexpr u64 kTrialBound = 1u << 16;

}  // namespace

bool is_prime(std::uint64_t n) { return miller_rabin(n); }

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw DomainError("factorize: n must be positive");
    Factorization result;
    auto push = [&](u64 p) {
        if (!result.empty() && result.back().prime == p)
            ++result.back().exponent;
        else
            result.push_back({p, 1});
    };
    while ((n & 1) == 0) {
        push(2);
        n >>= 1;
    }
    for (u64 p : {3ull, 5ull}) {
        while (n % p == 0) {
            push(p);
            n /= p;
        }
    }
    // 2*3*5 wheel
    static constexpr std::array<u64, 8> steps{4, 2, 4, 2, 4, 6, 2, 6};
    u64 p = 7;
    for (std::size_t i = 0; p < kTrialBound && p * p <= n; p += steps[i++ % steps.size()]) {
        while (n % p == 0) {
            push(p);
            n /= p;
        }
    }
    if (n > 1) {
        std::vector<u64> large;
        factor_into(n, large);
        std::sort(large.begin(), large.end());
        for (u64 q : large) push(q);
    }
    return result;
}

namespace {

bool squarefree(const Factorization& f) {
    return std::all_of(f.begin(), f.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

bool check_fundamental(std::int64_t d, Factorization* factors) {
    if (d < 3) return false;
    Factorization f = factorize(static_cast<u64>(d));
    bool ok = false;
    if (d % 4 == 3) {
        ok = squarefree(f);
    } else if (d % 4 == 0) {
        const std::int64_t m = d / 4;
        if (m % 4 == 1 || m % 4 == 2) {
            // m squarefree <=> the only square in d is 4
            ok = std::all_of(f.begin(), f.end(), [](const PrimePower& pp) {
                return pp.prime == 2 ? pp.exponent <= 3 : pp.exponent == 1;
            });
            if (ok && m % 4 == 1) ok = f.front().prime == 2 && f.front().exponent == 2;
        }
    }
    if (ok && factors) *factors = std::move(f);
    return ok;
}

}  // namespace

bool is_fundamental(std::int64_t d) { return check_fundamental(d, nullptr); }

FundamentalDiscriminant make_fundamental_discriminant(std::int64_t d) {
    if (d < 3) throw DomainError("discriminant -" + std::to_string(d) + " is out of range (need d >= 3)");
    Factorization f;
    if (!check_fundamental(d, &f))
        throw NotFundamental("-" + std::to_string(d) + " is not a fundamental discriminant");
    return FundamentalDiscriminant(d, std::move(f));
}

int jacobi(std::int64_t a, std::int64_t q) {
    if (q <= 0 || (q & 1) == 0) throw DomainError("jacobi: modulus must be odd and positive");
    u64 n = static_cast<u64>(q);
    std::int64_t r = a % q;
    if (r < 0) r += q;
    u64 x = static_cast<u64>(r);
    int result = 1;
    while (x != 0) {
        while ((x & 1) == 0) {
            x >>= 1;
            const u64 n8 = n & 7;
            if (n8 == 3 || n8 == 5) result = -result;
        }
        std::swap(x, n);
        if ((x & 3) == 3 && (n & 3) == 3) result = -result;
        x %= n;
    }
    return n == 1 ? result : 0;
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -1;
    }
    int v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    if (v > 0) {
        if ((a & 1) == 0) return 0;
        if (v & 1) {
            std::int64_t a8 = a % 8;
            if (a8 < 0) a8 += 8;
            if (a8 == 3 || a8 == 5) result = -result;
        }
    }
    return result * jacobi(a, n);
}

int kronecker(std::int64_t n, const FundamentalDiscriminant& D) { return kronecker_symbol(-D.d(), n); }

namespace {

// Hurwitz zeta(s, a) for real s >= 2 and a >= 8 by Euler-Maclaurin. The
// remainder after the last Bernoulli term is bounded by the first omitted
// term, since x^-s is completely monotone; that bound goes to `err`.
double hurwitz_zeta(int s, double a, double& err) {
    // B_2k / (2k)!
    static constexpr std::array<double, 10> b2k_over_fact{
        8.3333333333333333e-02, -1.3888888888888889e-03, 3.3068783068783069e-05,
        -8.2671957671957672e-07, 2.0876756987868099e-08, -5.2841901386874932e-10,
        1.3382536530684679e-11, -3.3896802963225827e-13, 8.5860620562778452e-15,
        -2.1748686985580619e-16};
    constexpr int kDirect = 8;
    long double sum = 0;
    for (int k = 0; k < kDirect; ++k) sum += std::pow(static_cast<long double>(a + k), -s);
    const long double x = a + kDirect;
    sum += std::pow(x, 1 - s) / (s - 1) + 0.5L * std::pow(x, -s);
    // rising factorial s (s+1) ... (s + 2k - 2) times x^{-s-2k+1}
    long double rising = s;
    long double xp = std::pow(x, -s - 1);
    const int terms = static_cast<int>(b2k_over_fact.size()) - 1;
    for (int k = 1; k <= terms; ++k) {
        sum += b2k_over_fact[k - 1] * rising * xp;
        rising *= static_cast<long double>(s + 2 * k - 1) * (s + 2 * k);
        xp /= x * x;
    }
    err = static_cast<double>(std::fabs(b2k_over_fact[terms] * rising * xp));
    return static_cast<double>(sum);
}

}  // namespace

double dirichlet_L1(const FundamentalDiscriminant& D, double tol) {
    if (!(tol > 0.0) || tol > 1e-4) throw DomainError("dirichlet_L1: tol must lie in (0, 1e-4]");
    const std::int64_t d = D.d();
    std::vector<int> chi(static_cast<std::size_t>(d) + 1);
    for (std::int64_t r = 1; r <= d; ++r) chi[r] = kronecker(r, D);

    // f(k) = sum_{r=1}^{d} chi(r) / (k d + r) = (1/d) sum_r chi(r) / (k + u_r),
    // u_r = r/d. Each f(k) is O(1/k^2) because the period sum of chi vanishes.
    constexpr int kPeriods = 16;
    long double head = 0;
    for (int k = 0; k <= kPeriods; ++k) {
        long double block = 0;
        const long double base = static_cast<long double>(k) * d;
        for (std::int64_t r = 1; r <= d; ++r)
            if (chi[r]) block += chi[r] / (base + r);
        head += block;
    }

    // For k > K: 1/(k+u) = sum_{j<J} (-u)^j / k^{j+1} + (-u)^J / (k^J (k+u)),
    // so sum_{k>K} f(k) = sum_{1<=j<J} c_j zeta(j+1, K+1) + E with
    // c_j = (1/d) sum_r chi(r) (-u_r)^j and |E| <= 1 / (J K^J).
    constexpr int kMaxOrder = 40;
    int order = 2;
    while (order < kMaxOrder && 1.0 / (order * std::pow(double(kPeriods), order)) > tol / 4) ++order;
    double bound = 1.0 / (order * std::pow(double(kPeriods), order));

    std::vector<long double> c(order, 0.0L);
    for (std::int64_t r = 1; r <= d; ++r) {
        if (!chi[r]) continue;
        const long double u = static_cast<long double>(r) / d;
        long double pw = 1;
        for (int j = 1; j < order; ++j) {
            pw *= -u;
            c[j] += chi[r] * pw;
        }
    }
    long double tail = 0;
    for (int j = 1; j < order; ++j) {
        double err = 0;
        const double z = hurwitz_zeta(j + 1, kPeriods + 1, err);
        const long double cj = c[j] / d;
        tail += cj * z;
        bound += static_cast<double>(std::fabs(cj)) * err;
    }
    if (!(bound <= tol))
        throw NonConvergence("dirichlet_L1: tail bound " + std::to_string(bound) + " exceeds tolerance");
    return static_cast<double>(head + tail);
}

double class_number_formula_L1(const FundamentalDiscriminant& D, long h) {
    return 2.0 * std::numbers::pi * static_cast<double>(h) /
           (D.units() * std::sqrt(static_cast<double>(D.d())));
}

}  // namespace closegap

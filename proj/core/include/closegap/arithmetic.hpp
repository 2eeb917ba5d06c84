#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace closegap {

struct PrimePower {
    std::uint64_t prime;
    int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

/// Prime factorization of n >= 1, primes ascending. factorize(1) is empty.
Factorization factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// A validated negative fundamental discriminant -d, stored through d > 0.
class FundamentalDiscriminant {
public:
    std::int64_t d() const noexcept { return d_; }
    /// The discriminant itself, -d.
    std::int64_t discriminant() const noexcept { return -d_; }
    const Factorization& prime_factors() const noexcept { return factors_; }
    /// Number of distinct primes dividing d.
    int num_prime_factors() const noexcept { return static_cast<int>(factors_.size()); }
    /// Number of roots of unity in the associated imaginary quadratic order.
    int units() const noexcept { return d_ == 3 ? 6 : d_ == 4 ? 4 : 2; }

    friend bool operator==(const FundamentalDiscriminant& a, const FundamentalDiscriminant& b) {
        return a.d_ == b.d_;
    }

private:
    FundamentalDiscriminant(std::int64_t d, Factorization f) : d_(d), factors_(std::move(f)) {}
    friend FundamentalDiscriminant make_fundamental_discriminant(std::int64_t d);

    std::int64_t d_;
    Factorization factors_;
};

/// Validates that -d is a fundamental discriminant. Throws NotFundamental
/// otherwise and DomainError for d < 3.
FundamentalDiscriminant make_fundamental_discriminant(std::int64_t d);

/// Non-throwing fundamentality test for -d.
bool is_fundamental(std::int64_t d);

/// Jacobi symbol (a/q) for odd q >= 1. Throws DomainError on even or
/// nonpositive q.
int jacobi(std::int64_t a, std::int64_t q);

/// General Kronecker symbol (a/n) with the standard rules at 2, -1 and 0.
int kronecker_symbol(std::int64_t a, std::int64_t n);

/// The real primitive character chi_{-D}(n) = (-d / n).
int kronecker(std::int64_t n, const FundamentalDiscriminant& D);

/// Callable wrapper around chi_{-D}.
class KroneckerCharacter {
public:
    explicit KroneckerCharacter(FundamentalDiscriminant D) : D_(std::move(D)) {}
    int operator()(std::int64_t n) const { return kronecker(n, D_); }
    const FundamentalDiscriminant& discriminant() const noexcept { return D_; }

private:
    FundamentalDiscriminant D_;
};

/// L(1, chi_{-D}) to absolute accuracy `tol`, tol in (0, 1e-4].
///
/// The Dirichlet series is summed one full period at a time. Beyond K
/// periods each period block is expanded in powers of 1/k, and the tail is
/// resummed through Hurwitz zeta values with an explicit remainder bound.
/// Throws NonConvergence if that bound cannot be brought under tol.
double dirichlet_L1(const FundamentalDiscriminant& D, double tol = 1e-10);

/// 2 pi h / (w sqrt(d)): the right side of the class number formula.
double class_number_formula_L1(const FundamentalDiscriminant& D, long h);

}  // namespace closegap

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "closegap/arithmetic.hpp"

namespace closegap {

/// The binary quadratic form a x^2 + b x y + c y^2.
struct QuadraticForm {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    /// b^2 - 4ac
    std::int64_t discriminant() const;
    bool positive_definite() const { return a > 0 && discriminant() < 0; }
    std::int64_t operator()(std::int64_t x, std::int64_t y) const { return a * x * x + b * x * y + c * y * y; }

    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
    friend auto operator<=>(const QuadraticForm&, const QuadraticForm&) = default;
};

std::ostream& operator<<(std::ostream& os, const QuadraticForm& f);

/// A positive definite form in the reduced domain: |b| <= a <= c, with
/// b >= 0 whenever |b| = a or a = c. Only `reduce` and the class
/// enumeration produce these.
class ReducedForm {
public:
    std::int64_t a() const noexcept { return f_.a; }
    std::int64_t b() const noexcept { return f_.b; }
    std::int64_t c() const noexcept { return f_.c; }
    const QuadraticForm& form() const noexcept { return f_; }
    operator const QuadraticForm&() const noexcept { return f_; }

    /// The inverse class (a, -b, c), reduced.
    ReducedForm inverse() const;

    friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
    /// Canonical order: lexicographic in (a, b).
    friend auto operator<=>(const ReducedForm& x, const ReducedForm& y) { return x.f_ <=> y.f_; }

private:
    explicit ReducedForm(QuadraticForm f) : f_(f) {}
    friend ReducedForm reduce(const QuadraticForm& f);

    QuadraticForm f_;
};

std::ostream& operator<<(std::ostream& os, const ReducedForm& f);

bool is_reduced(const QuadraticForm& f);

/// Reduced representative of the SL(2,Z) class of f. Throws DomainError if
/// f is not positive definite.
ReducedForm reduce(const QuadraticForm& f);

/// Identity element x^2 + bxy + cy^2 of the class group.
ReducedForm principal_form(const FundamentalDiscriminant& D);

/// One reduced form per class, sorted by (a, b).
std::vector<ReducedForm> enumerate_classes(const FundamentalDiscriminant& D);

long class_number(const FundamentalDiscriminant& D);

/// Gauss composition of two classes of discriminant -d. Throws
/// DiscriminantMismatch if either form has another discriminant.
ReducedForm compose(const ReducedForm& f1, const ReducedForm& f2, const FundamentalDiscriminant& D);

/// Invariant factors d_1 | d_2 | ... of the class group, ascending.
/// The trivial group yields {1}.
std::vector<long> group_structure(const FundamentalDiscriminant& D);

/// { Q(x,y) mod d : gcd(Q(x,y), d) = 1 } for x, y in [0, d), ascending.
std::vector<std::int64_t> represented_residues(const ReducedForm& f, const FundamentalDiscriminant& D);

/// Number of classes in the image of the squaring map, |C(-D)^2|.
long principal_genus_order(const FundamentalDiscriminant& D);

struct ClassGroupReport {
    FundamentalDiscriminant discriminant;
    std::vector<ReducedForm> classes;
    long h = 0;
    int g = 0;
    long num_genera = 0;
    long p = 0;
    std::vector<long> group_structure;
    /// genus_index[i] is the genus of classes[i]; the principal genus is 0.
    std::vector<int> genus_index;
    /// Represented residues mod d shared by every class of a genus.
    std::vector<std::vector<std::int64_t>> genus_residues;
};

/// Full class group and genus data. Two classes share a genus exactly when
/// their represented residue sets coincide; an Error is raised if that
/// partition does not have 2^(g-1) cells or if h != p 2^(g-1).
ClassGroupReport genus_report(const FundamentalDiscriminant& D);

}  // namespace closegap

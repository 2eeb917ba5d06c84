#include "closegap/class_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <string>

#include "closegap/errors.hpp"

namespace closegap {

namespace {

using i128 = __int128;

std::int64_t floor_div(i128 num, i128 den) {
    i128 q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return static_cast<std::int64_t>(q);
}

// Extended Euclid: returns g = gcd(x, y) >= 0 with u x + v y = g.
std::int64_t ext_gcd(std::int64_t x, std::int64_t y, std::int64_t& u, std::int64_t& v) {
    std::int64_t u0 = 1, v0 = 0, u1 = 0, v1 = 1;
    while (y != 0) {
        const std::int64_t q = floor_div(x, y);
        std::int64_t t = x - q * y;
        x = y;
        y = t;
        t = u0 - q * u1;
        u0 = u1;
        u1 = t;
        t = v0 - q * v1;
        v0 = v1;
        v1 = t;
    }
    if (x < 0) {
        x = -x;
        u0 = -u0;
        v0 = -v0;
    }
    u = u0;
    v = v0;
    return x;
}

}  // namespace

std::int64_t QuadraticForm::discriminant() const {
    const i128 disc = static_cast<i128>(b) * b - static_cast<i128>(4) * a * c;
    return static_cast<std::int64_t>(disc);
}

std::ostream& operator<<(std::ostream& os, const QuadraticForm& f) {
    return os << '(' << f.a << ',' << f.b << ',' << f.c << ')';
}

std::ostream& operator<<(std::ostream& os, const ReducedForm& f) { return os << f.form(); }

bool is_reduced(const QuadraticForm& f) {
    if (!f.positive_definite()) return false;
    const std::int64_t ab = f.b < 0 ? -f.b : f.b;
    if (!(ab <= f.a && f.a <= f.c)) return false;
    if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
}

ReducedForm reduce(const QuadraticForm& f) {
    if (!f.positive_definite()) throw DomainError("reduce: form is not positive definite");
    i128 a = f.a, b = f.b, c = f.c;
    auto normalize = [&] {
        // bring b into (-a, a]
        if (-a < b && b <= a) return;
        const i128 r = floor_div(a - b, 2 * a);
        c = a * r * r + b * r + c;
        b = b + 2 * r * a;
    };
    normalize();
    while (a > c) {
        std::swap(a, c);
        b = -b;
        normalize();
    }
    if (a == c && b < 0) b = -b;
    return ReducedForm(QuadraticForm{static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                                     static_cast<std::int64_t>(c)});
}

ReducedForm ReducedForm::inverse() const { return reduce(QuadraticForm{f_.a, -f_.b, f_.c}); }

ReducedForm principal_form(const FundamentalDiscriminant& D) {
    const std::int64_t d = D.d();
    const std::int64_t b = d & 1;
    return reduce(QuadraticForm{1, b, (b + d) / 4});
}

std::vector<ReducedForm> enumerate_classes(const FundamentalDiscriminant& D) {
    const std::int64_t d = D.d();
    std::vector<ReducedForm> out;
    for (std::int64_t a = 1; 3 * a * a <= d; ++a) {
        const std::int64_t four_a = 4 * a;
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if (((b ^ d) & 1) != 0) continue;
            const std::int64_t num = b * b + d;
            if (num % four_a != 0) continue;
            const std::int64_t c = num / four_a;
            if (c < a || (c == a && b < 0)) continue;
            out.push_back(reduce(QuadraticForm{a, b, c}));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long class_number(const FundamentalDiscriminant& D) { return static_cast<long>(enumerate_classes(D).size()); }

ReducedForm compose(const ReducedForm& f1, const ReducedForm& f2, const FundamentalDiscriminant& D) {
    if (f1.form().discriminant() != D.discriminant() || f2.form().discriminant() != D.discriminant())
        throw DiscriminantMismatch("compose: forms do not have discriminant " + std::to_string(D.discriminant()));

    QuadraticForm p = f1.form(), q = f2.form();
    if (p.a > q.a) std::swap(p, q);
    const std::int64_t a1 = p.a, b1 = p.b;
    const std::int64_t a2 = q.a, b2 = q.b, c2 = q.c;

    // Shanks' arrangement of Dirichlet composition: find concordant
    // representatives with a common middle coefficient.
    const std::int64_t s = (b1 + b2) / 2;
    const std::int64_t n = b2 - s;
    std::int64_t y1 = 0, dd = a1;
    if (a2 % a1 != 0) {
        std::int64_t u, v;
        dd = ext_gcd(a2, a1, u, v);
        y1 = u;
    }
    std::int64_t x2 = 0, y2 = -1, d1 = dd;
    if (s % dd != 0) {
        std::int64_t u, v;
        d1 = ext_gcd(s, dd, u, v);
        x2 = u;
        y2 = -v;
    }
    const std::int64_t v1 = a1 / d1;
    const std::int64_t v2 = a2 / d1;
    i128 r = (static_cast<i128>(y1) * y2 * n - static_cast<i128>(x2) * c2) % v1;
    if (r < 0) r += v1;
    const i128 a3 = static_cast<i128>(v1) * v2;
    const i128 b3 = b2 + 2 * static_cast<i128>(v2) * r;
    const i128 num = b3 * b3 + D.d();
    if (num % (4 * a3) != 0) throw Error("compose: internal error, non-integral c");
    const i128 c3 = num / (4 * a3);
    return reduce(QuadraticForm{static_cast<std::int64_t>(a3), static_cast<std::int64_t>(b3),
                                static_cast<std::int64_t>(c3)});
}

namespace {

struct IndexedGroup {
    std::vector<ReducedForm> elems;
    std::map<ReducedForm, std::size_t> index;
    std::size_t identity = 0;
};

IndexedGroup index_group(const FundamentalDiscriminant& D) {
    IndexedGroup g;
    g.elems = enumerate_classes(D);
    for (std::size_t i = 0; i < g.elems.size(); ++i) g.index.emplace(g.elems[i], i);
    g.identity = g.index.at(principal_form(D));
    return g;
}

}  // namespace

std::vector<long> group_structure(const FundamentalDiscriminant& D) {
    const IndexedGroup G = index_group(D);
    const long h = static_cast<long>(G.elems.size());
    if (h == 1) return {1};

    std::vector<long> order(G.elems.size(), 1);
    for (std::size_t i = 0; i < G.elems.size(); ++i) {
        ReducedForm x = G.elems[i];
        long k = 1;
        while (G.index.at(x) != G.identity) {
            x = compose(x, G.elems[i], D);
            ++k;
        }
        order[i] = k;
    }

    // For each prime p | h, the count of elements killed by p^k determines
    // how many cyclic p-factors have exponent >= k.
    std::vector<std::vector<int>> exponents;  // per prime, descending
    std::vector<long> primes;
    for (const PrimePower& pp : factorize(static_cast<std::uint64_t>(h))) {
        const long p = static_cast<long>(pp.prime);
        std::vector<int> at_least;  // at_least[k-1] = #factors with exponent >= k
        long prev = 1;
        long pk = 1;
        for (int k = 1; k <= pp.exponent; ++k) {
            pk *= p;
            const long killed = std::count_if(order.begin(), order.end(), [pk](long o) { return pk % o == 0; });
            long ratio = killed / prev;
            int r = 0;
            while (ratio > 1) {
                ratio /= p;
                ++r;
            }
            at_least.push_back(r);
            prev = killed;
        }
        std::vector<int> ex(at_least.empty() ? 0 : at_least.front(), 0);
        for (std::size_t k = 0; k < at_least.size(); ++k)
            for (int j = 0; j < at_least[k]; ++j) ex[j] = static_cast<int>(k) + 1;
        primes.push_back(p);
        exponents.push_back(std::move(ex));
    }
    std::size_t count = 0;
    for (const auto& ex : exponents) count = std::max(count, ex.size());
    std::vector<long> factors(count, 1);
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = 0; j < exponents[i].size(); ++j)
            for (int e = 0; e < exponents[i][j]; ++e) factors[j] *= primes[i];
    std::sort(factors.begin(), factors.end());
    return factors;
}

namespace {

struct LocalResidues {
    std::vector<std::int64_t> moduli;
    std::vector<std::vector<char>> hit;  // hit[i][q]: unit q mod moduli[i] is a value of the form
};

// (x, y) mod d runs independently over each prime-power factor by CRT, so
// the represented units are the CRT product of these local sets.
LocalResidues local_residues(const ReducedForm& f, const FundamentalDiscriminant& D) {
    LocalResidues out;
    for (const PrimePower& pp : D.prime_factors()) {
        std::int64_t m = 1;
        for (int i = 0; i < pp.exponent; ++i) m *= static_cast<std::int64_t>(pp.prime);
        const auto p = static_cast<std::int64_t>(pp.prime);
        std::vector<char> hit(static_cast<std::size_t>(m), 0);
        const std::int64_t a = ((f.a() % m) + m) % m;
        const std::int64_t b = ((f.b() % m) + m) % m;
        const std::int64_t c = ((f.c() % m) + m) % m;
        if (p != 2 && m == p) {
            // 4aQ = (2ax + by)^2 - D y^2 = (2ax + by)^2 mod p, and p cannot
            // divide both a and c, so the values are a x^2 or c x^2.
            for (std::int64_t x = 1; x < p; ++x) {
                const std::int64_t s = x * x % p;
                if (a) hit[a * s % p] = 1;
                if (c) hit[c * s % p] = 1;
            }
        } else {
            for (std::int64_t x = 0; x < m; ++x)
                for (std::int64_t y = 0; y < m; ++y) {
                    const std::int64_t q = (a * x % m * x + b * x % m * y + c * y % m * y) % m;
                    if (q % p) hit[q] = 1;
                }
        }
        out.moduli.push_back(m);
        out.hit.push_back(std::move(hit));
    }
    return out;
}

std::vector<std::int64_t> crt_product(const LocalResidues& local, std::int64_t d) {
    std::vector<std::int64_t> out;
    for (std::int64_t r = 1; r < d; ++r) {
        bool ok = true;
        for (std::size_t i = 0; i < local.moduli.size() && ok; ++i) ok = local.hit[i][r % local.moduli[i]];
        if (ok) out.push_back(r);
    }
    return out;
}

}  // namespace

std::vector<std::int64_t> represented_residues(const ReducedForm& f, const FundamentalDiscriminant& D) {
    return crt_product(local_residues(f, D), D.d());
}

long principal_genus_order(const FundamentalDiscriminant& D) {
    std::vector<ReducedForm> squares;
    for (const ReducedForm& f : enumerate_classes(D)) squares.push_back(compose(f, f, D));
    std::sort(squares.begin(), squares.end());
    squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
    return static_cast<long>(squares.size());
}

ClassGroupReport genus_report(const FundamentalDiscriminant& D) {
    ClassGroupReport rep{D, enumerate_classes(D), 0, 0, 0, 0, {}, {}, {}};
    rep.h = static_cast<long>(rep.classes.size());
    rep.g = D.num_prime_factors();
    rep.num_genera = 1L << (rep.g - 1);
    rep.p = principal_genus_order(D);
    rep.group_structure = group_structure(D);

    // classes[0] is the principal form, so the principal genus gets index 0
    std::vector<std::vector<std::vector<char>>> seen;
    for (const ReducedForm& f : rep.classes) {
        LocalResidues local = local_residues(f, D);
        auto it = std::find(seen.begin(), seen.end(), local.hit);
        if (it == seen.end()) {
            rep.genus_index.push_back(static_cast<int>(seen.size()));
            rep.genus_residues.push_back(crt_product(local, D.d()));
            seen.push_back(std::move(local.hit));
        } else {
            rep.genus_index.push_back(static_cast<int>(it - seen.begin()));
        }
    }
    if (static_cast<long>(rep.genus_residues.size()) != rep.num_genera)
        throw Error("genus_report: residue partition has " + std::to_string(rep.genus_residues.size()) +
                    " cells, expected " + std::to_string(rep.num_genera));
    if (rep.h != rep.p * rep.num_genera)
        throw Error("genus_report: h = " + std::to_string(rep.h) + " but p 2^(g-1) = " +
                    std::to_string(rep.p * rep.num_genera));
    return rep;
}

}  // namespace closegap

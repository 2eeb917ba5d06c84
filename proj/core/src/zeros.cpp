#include "closegap/zeros.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <utility>

#include "closegap/errors.hpp"
#include "closegap/zeta.hpp"
#include "riemann_siegel.hpp"

namespace closegap {

// ---------------------------------------------------------------------------
// ZeroSequence

ZeroSequence::ZeroSequence(std::vector<double> ordinates, double t_min, double t_max, double precision,
                           bool certified, std::optional<TuringCertificate> certificate)
    : ordinates_(std::move(ordinates)),
      t_min_(t_min),
      t_max_(t_max),
      precision_(precision),
      certified_(certified),
      certificate_(std::move(certificate)) {
    if (!(t_min_ <= t_max_)) throw RangeError("ZeroSequence: t_min > t_max");
    for (std::size_t i = 0; i < ordinates_.size(); ++i) {
        const double t = ordinates_[i];
        if (i > 0 && !(t > ordinates_[i - 1])) throw MonotonicityError(i, i + 1);
        if (!(t >= t_min_ && t <= t_max_)) throw RangeError("ZeroSequence: ordinate outside [t_min, t_max]");
    }
}

ZeroSequence ZeroSequence::degenerate_empty(double precision) {
    ZeroSequence zs;
    zs.t_min_ = std::numeric_limits<double>::quiet_NaN();
    zs.t_max_ = std::numeric_limits<double>::quiet_NaN();
    zs.precision_ = precision;
    zs.degenerate_ = true;
    return zs;
}

std::size_t ZeroSequence::count_at_or_below(double t) const {
    return static_cast<std::size_t>(std::upper_bound(ordinates_.begin(), ordinates_.end(), t) - ordinates_.begin());
}

ZeroSequence ZeroSequence::without(std::size_t i) const {
    ZeroSequence copy = *this;
    copy.ordinates_.erase(copy.ordinates_.begin() + static_cast<std::ptrdiff_t>(i));
    return copy;
}

// ---------------------------------------------------------------------------
// Engine

int turing_required_blocks(double t) {
    const double l = std::log(std::max(t, 2.0));
    return std::max(1, static_cast<int>(std::ceil(0.0061 * l * l + 0.08 * l)));
}

double asymptotic_N(double T) {
    if (!(T >= kMinHeight)) throw DomainError("asymptotic_N: T must be >= 10");
    return T / (2.0 * std::numbers::pi) * std::log(T);
}

namespace {

constexpr double kEngineMax = 1e7;

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& body) {
    if (threads <= 1 || n < 2) {
        body(std::size_t{0}, n, 0u);
        return;
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        const std::size_t lo = n * w / threads;
        const std::size_t hi = n * (w + 1) / threads;
        pool.emplace_back([&body, lo, hi, w] { body(lo, hi, w); });
    }
    for (auto& th : pool) th.join();
}

inline int sgn(double z) { return z < 0 ? -1 : 1; }

struct Sample {
    double t;
    double z;
};

// Counts sign changes along a sample list.
int sign_changes(const std::vector<Sample>& s) {
    int n = 0;
    for (std::size_t i = 1; i < s.size(); ++i) n += sgn(s[i - 1].z) != sgn(s[i].z);
    return n;
}

class Evaluator {
public:
    double operator()(double t) {
        ++count;
        const double z = detail::hardy_z_unchecked(t);
        // an exact zero would be indistinguishable from either sign
        return z == 0.0 ? std::numeric_limits<double>::min() : z;
    }
    std::int64_t count = 0;
};

// Brent's zeroin on a sign-change bracket, followed by bisection until the
// bracket is no wider than `width` or its ends are adjacent doubles.
double refine_root(Evaluator& Z, double a, double b, double fa, double fb, double width) {
    double c = a, fc = fa, d = b - a, e = d;
    const double eps = std::numeric_limits<double>::epsilon();
    for (int it = 0; it < 200; ++it) {
        if (sgn(fb) == sgn(fc)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = std::max(2.0 * eps * std::fabs(b), 0.5 * width);
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1) break;
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::fabs(d) > tol1 ? d : (xm > 0 ? tol1 : -tol1);
        fb = Z(b);
    }
    double lo = std::min(b, c), hi = std::max(b, c);
    double flo = lo == b ? fb : fc;
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = Z(mid);
        if (sgn(fm) == sgn(flo)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Golden-section search for a sign flip of Z between x0 < x1 < x2, where
// s * Z has a local minimum near x1 (s the common sign). Returns a sample
// of opposite sign if one is found.
std::optional<Sample> hunt_hidden_pair(Evaluator& Z, Sample p0, Sample p1, Sample p2) {
    const int s = sgn(p1.z);
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = p0.t, b = p2.t;
    double x = p1.t, fx = s * p1.z;
    for (int it = 0; it < 100 && b - a > 1e-12 * b; ++it) {
        // probe the larger side of x
        const bool right = (b - x) > (x - a);
        const double u = right ? x + (1.0 - invphi) * (b - x) : x - (1.0 - invphi) * (x - a);
        const double zu = Z(u);
        if (sgn(zu) != s) return Sample{u, zu};
        const double fu = s * zu;
        if (fu < fx) {
            if (right)
                a = x;
            else
                b = x;
            x = u;
            fx = fu;
        } else {
            if (right)
                b = u;
            else
                a = u;
        }
    }
    return std::nullopt;
}

struct BlockResult {
    std::int32_t zeros = 0;
    bool rosser = false;
    bool subdivided = false;
    bool hunted = false;
};

// Finds the sign changes of one Gram block and appends the refined roots.
BlockResult process_block(std::span<const double> gt, std::span<const double> gz, double precision,
                          Evaluator& Z, std::vector<double>& out) {
    const int L = static_cast<int>(gt.size()) - 1;
    std::vector<Sample> s(gt.size());
    for (std::size_t i = 0; i < gt.size(); ++i) s[i] = {gt[i], gz[i]};
    BlockResult res;
    int changes = sign_changes(s);
    for (int level = 0; level < 3 && changes < L; ++level) {
        res.subdivided = true;
        std::vector<Sample> finer;
        finer.reserve(4 * s.size());
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            finer.push_back(s[i]);
            const double h = (s[i + 1].t - s[i].t) / 4.0;
            for (int q = 1; q < 4; ++q) {
                const double t = s[i].t + q * h;
                finer.push_back({t, Z(t)});
            }
        }
        finer.push_back(s.back());
        s = std::move(finer);
        changes = sign_changes(s);
    }
    if (changes < L) {
        res.hunted = true;
        std::vector<std::size_t> cand;
        for (std::size_t i = 1; i + 1 < s.size(); ++i) {
            const double a0 = std::fabs(s[i - 1].z), a1 = std::fabs(s[i].z), a2 = std::fabs(s[i + 1].z);
            if (sgn(s[i - 1].z) == sgn(s[i].z) && sgn(s[i].z) == sgn(s[i + 1].z) && a1 < a0 && a1 <= a2)
                cand.push_back(i);
        }
        std::sort(cand.begin(), cand.end(),
                  [&](std::size_t x, std::size_t y) { return std::fabs(s[x].z) < std::fabs(s[y].z); });
        std::vector<Sample> found;
        for (std::size_t i : cand) {
            if (changes + 2 * static_cast<int>(found.size()) >= L) break;
            if (auto hit = hunt_hidden_pair(Z, s[i - 1], s[i], s[i + 1])) found.push_back(*hit);
        }
        if (!found.empty()) {
            s.insert(s.end(), found.begin(), found.end());
            std::sort(s.begin(), s.end(), [](const Sample& x, const Sample& y) { return x.t < y.t; });
            changes = sign_changes(s);
        }
    }
    for (std::size_t i = 1; i < s.size(); ++i)
        if (sgn(s[i - 1].z) != sgn(s[i].z))
            out.push_back(refine_root(Z, s[i - 1].t, s[i].t, s[i - 1].z, s[i].z, precision));
    res.zeros = changes;
    res.rosser = changes >= L;
    return res;
}

struct Window {
    std::int64_t first_index = 0;  // Gram index of position 0
    bool floor = false;            // position 0 is t = 10 standing in for g_{-1}
    std::vector<double> t;
    std::vector<double> z;
    std::vector<std::int32_t> good;  // positions of good Gram points
    std::vector<BlockResult> blocks;  // blocks[j] spans good[j] .. good[j+1]
    std::vector<std::int64_t> zero_offset;  // zeros of block j start at zero_offset[j]
    std::vector<double> zeros;
};

Window scan_window(std::int64_t first, std::int64_t last, bool floor, double precision, unsigned threads,
                   FindZerosStats& stats) {
    Window w;
    w.first_index = first;
    w.floor = floor;
    const std::size_t n = static_cast<std::size_t>(last - first + 1);
    w.t.resize(n);
    w.z.resize(n);
    std::vector<std::int64_t> evals(std::max(1u, threads), 0);
    parallel_for(n, threads, [&](std::size_t lo, std::size_t hi, unsigned wk) {
        Evaluator Z;
        for (std::size_t i = lo; i < hi; ++i) {
            const std::int64_t idx = first + static_cast<std::int64_t>(i);
            w.t[i] = (floor && i == 0) ? kMinHeight : gram_point(idx).value;
            w.z[i] = Z(w.t[i]);
        }
        evals[wk] += Z.count;
    });
    stats.gram_points += static_cast<std::int64_t>(n);

    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t idx = first + static_cast<std::int64_t>(i);
        const int parity = (idx % 2 == 0) ? 1 : -1;
        if (sgn(w.z[i]) == parity) w.good.push_back(static_cast<std::int32_t>(i));
    }
    const std::size_t nblocks = w.good.size() > 1 ? w.good.size() - 1 : 0;
    w.blocks.resize(nblocks);

    struct Chunk {
        std::vector<double> zeros;
        std::vector<std::int64_t> offsets;
    };
    const unsigned workers = std::max(1u, threads);
    std::vector<Chunk> chunks(workers);
    parallel_for(nblocks, threads, [&](std::size_t lo, std::size_t hi, unsigned wk) {
        Evaluator Z;
        Chunk& ch = chunks[wk];
        for (std::size_t j = lo; j < hi; ++j) {
            const std::size_t p0 = static_cast<std::size_t>(w.good[j]);
            const std::size_t p1 = static_cast<std::size_t>(w.good[j + 1]);
            ch.offsets.push_back(static_cast<std::int64_t>(ch.zeros.size()));
            w.blocks[j] = process_block(std::span<const double>(w.t).subspan(p0, p1 - p0 + 1),
                                        std::span<const double>(w.z).subspan(p0, p1 - p0 + 1), precision, Z,
                                        ch.zeros);
        }
        evals[wk] += Z.count;
    });
    std::size_t total = 0;
    for (const Chunk& ch : chunks) total += ch.zeros.size();
    w.zeros.reserve(total);
    w.zero_offset.reserve(nblocks + 1);
    for (Chunk& ch : chunks) {
        const std::int64_t base = static_cast<std::int64_t>(w.zeros.size());
        for (std::int64_t off : ch.offsets) w.zero_offset.push_back(base + off);
        w.zeros.insert(w.zeros.end(), ch.zeros.begin(), ch.zeros.end());
        std::vector<double>().swap(ch.zeros);
    }
    w.zero_offset.push_back(static_cast<std::int64_t>(w.zeros.size()));
    for (const BlockResult& b : w.blocks) {
        stats.blocks_subdivided += b.subdivided;
        stats.blocks_extremum_search += b.hunted;
    }
    for (std::int64_t e : evals) stats.z_evaluations += e;
    return w;
}

}  // namespace

ZeroSequence find_zeros(double t_min, double t_max, double precision, const FindZerosOptions& opts,
                        FindZerosStats* stats_out) {
    if (!(t_min >= 0.0) || !(t_max <= kEngineMax) || !(t_min < t_max))
        throw DomainError("find_zeros: need 0 <= t_min < t_max <= 1e7");
    if (!(t_max >= kMinHeight)) throw DomainError("find_zeros: t_max below the engine floor t = 10");
    if (!(precision >= 1e-12) || precision > 1e-3) throw DomainError("find_zeros: precision must lie in [1e-12, 1e-3]");

    const unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    FindZerosStats stats;
    const double lo = std::max(t_min, kMinHeight);
    // Below g_1 the lower anchor is the point t = 10 with N(10) = 0.
    const bool floor = gram_index_below(lo) <= 1;
    const std::int64_t n_lo = floor ? -1 : gram_index_below(lo);
    const std::int64_t n_hi = gram_index_below(t_max) + 1;
    const int K = turing_required_blocks(t_max + 100.0);

    std::int64_t margin = 4 * K + 40;
    for (int attempt = 0; attempt <= opts.max_retries; ++attempt, margin *= 2) {
        const std::int64_t first = floor ? -1 : std::max<std::int64_t>(2, n_lo - margin);
        const std::int64_t last = n_hi + margin;
        Window w = scan_window(first, last, floor, precision, threads, stats);
        const auto index_of = [&](std::size_t pos) { return w.first_index + static_cast<std::int64_t>(pos); };

        // Upper anchor: first good Gram point at or above t_max opening K
        // consecutive Rosser blocks.
        std::optional<std::size_t> jb;
        for (std::size_t j = 0; j < w.good.size(); ++j) {
            if (w.t[static_cast<std::size_t>(w.good[j])] < t_max) continue;
            jb = j;
            break;
        }
        std::optional<std::size_t> ja;
        if (floor) {
            if (!w.good.empty() && w.good.front() == 0) ja = 0;
        } else {
            for (std::size_t j = w.good.size(); j-- > 0;) {
                if (w.t[static_cast<std::size_t>(w.good[j])] > lo) continue;
                ja = j;
                break;
            }
        }
        if (!ja || !jb || *ja >= *jb) continue;

        int above = 0;
        for (std::size_t j = *jb; j < w.blocks.size() && w.blocks[j].rosser; ++j) ++above;
        int below = 0;
        if (!floor)
            for (std::size_t j = *ja; j-- > 0 && w.blocks[j].rosser;) ++below;
        if (above < K || (!floor && below < K)) continue;

        const std::int64_t a = index_of(static_cast<std::size_t>(w.good[*ja]));
        const std::int64_t b = index_of(static_cast<std::size_t>(w.good[*jb]));
        const double ga = w.t[static_cast<std::size_t>(w.good[*ja])];
        const double gb = w.t[static_cast<std::size_t>(w.good[*jb])];
        const auto zfirst = w.zeros.begin() + w.zero_offset[*ja];
        const auto zlast = w.zeros.begin() + w.zero_offset[*jb];
        const std::int64_t found = zlast - zfirst;
        if (found != b - a) {
            if (attempt < opts.max_retries) continue;
            throw CertificationFailure("find_zeros: found " + std::to_string(found) + " zeros between Gram points " +
                                       std::to_string(a) + " and " + std::to_string(b) + ", expected " +
                                       std::to_string(b - a));
        }

        TuringCertificate cert;
        cert.lower_index = a;
        cert.upper_index = b;
        cert.lower_anchor = ga;
        cert.upper_anchor = gb;
        cert.lower_is_floor = floor;
        cert.required_blocks = K;
        cert.rosser_blocks_below = below;
        cert.rosser_blocks_above = above;
        cert.gram_blocks = static_cast<std::int64_t>(*jb - *ja);
        cert.gram_intervals = b - a;
        for (std::size_t j = *ja; j < *jb; ++j)
            cert.block_interval_total += w.good[j + 1] - w.good[j];

        const auto in_lo = std::lower_bound(zfirst, zlast, t_min);
        const auto in_hi = std::upper_bound(in_lo, zlast, t_max);
        cert.zeros_below = in_lo - zfirst;
        cert.zeros_above = zlast - in_hi;
        std::vector<double> ords(in_lo, in_hi);
        std::vector<double>().swap(w.zeros);
        if (stats_out) *stats_out = stats;
        return ZeroSequence(std::move(ords), t_min, t_max, precision, true, cert);
    }
    throw CertificationFailure("find_zeros: could not establish Turing anchors around [" + std::to_string(t_min) +
                               ", " + std::to_string(t_max) + "]");
}

bool turing_certify(const ZeroSequence& zs) {
    const auto& cert = zs.certificate();
    if (!cert) return false;
    if (!cert->lower_is_floor && cert->rosser_blocks_below < cert->required_blocks) return false;
    if (cert->rosser_blocks_above < cert->required_blocks) return false;
    if (cert->block_interval_total != cert->gram_intervals) return false;
    if (!(cert->lower_anchor <= std::max(zs.t_min(), kMinHeight)) || !(cert->upper_anchor >= zs.t_max())) return false;
    const std::int64_t counted = static_cast<std::int64_t>(zs.size()) + cert->zeros_below + cert->zeros_above;
    return counted == cert->upper_index - cert->lower_index;
}

std::int64_t count_N(double T, const FindZerosOptions& opts) {
    if (!(T >= kMinHeight)) throw DomainError("count_N: T must be >= 10");
    const ZeroSequence zs = find_zeros(kMinHeight, T, 1e-6, opts);
    if (!turing_certify(zs)) throw CertificationFailure("count_N: certification failed");
    return static_cast<std::int64_t>(zs.size());
}

}  // namespace closegap

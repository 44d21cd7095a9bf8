#include "ortho/volume.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "ortho/quadrature.hpp"
#include "ortho/random.hpp"
#include "ortho/schlafli.hpp"

namespace ortho {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool near(double a, double b) { return std::fabs(a - b) <= kClassEps; }

// Monotone envelope of the far-range derivative: |dV/dh| <= (A + B log h)/h^2
// for h >= t_from, so the tail beyond H is at most (A + B (log H + 1))/H.
// t_from must sit inside the far regime (Lambert for r > 1) and be >= 4.
// B is only nonzero for the ideal-v0 family, whose l03 grows like log h.
struct TailEnvelope {
    double a = 0.0;
    double b = 0.0;

    double bound_beyond(double H) const { return (a + b * (std::log(H) + 1.0)) / H; }

    // Smallest power-of-two-ish cutoff meeting `target`; fixed-point on the
    // slowly varying log factor.
    double cutoff_for(double target, double t_min) const {
        double H = std::max(t_min, a / target);
        for (int i = 0; i < 4; ++i)
            H = std::max(t_min, (a + b * (std::log(H) + 1.0)) / target);
        return H;
    }
};

TailEnvelope tail_envelope(double r, double theta, double t_from) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double rc = r * c;
    const double q = std::sqrt(1.0 - rc * rc);
    const double l01 = std::fabs(edge_l01({2.0, r, theta}).length);
    const double t23_coeff = rc / q; // t^2 * dtheta23/dh <= rc/q

    TailEnvelope env;
    if (r > 1.0 + kClassEps) {
        const double b = lambert_threshold(r);
        const double l03_sup = stable_acosh(s / q); // l03 increases to this limit
        const double t12_coeff = 1.0 / ((1.0 - 1.0 / (t_from * t_from)) *
                                        std::sqrt((r * r - 1.0) *
                                                  (1.0 - (b * b) / (t_from * t_from))));
        env.a = 0.5 * (l03_sup * t12_coeff + l01 * t23_coeff);
        return env;
    }
    if (std::fabs(r - 1.0) <= kClassEps) {
        // |l03(t)| = |log 2 - (1/2) log(t^2-1)| <= log t for t >= 2.
        const double t12_coeff = c / s;
        env.a = 0.5 * l01 * t23_coeff;
        env.b = 0.5 * t12_coeff;
        return env;
    }
    const double e_at = (1.0 - r * r) * t_from * t_from + r * r;
    const double l03_sup = edge_l03({t_from, r, theta}).length; // decreasing in h
    const double t12_coeff = r * r * s * c / ((1.0 - rc * rc) * std::sqrt(e_at));
    env.a = 0.5 * (l03_sup * t12_coeff + l01 * t23_coeff);
    return env;
}

} // namespace

const char* to_string(VolumeMethod m) {
    return m == VolumeMethod::SchlafliIntegral ? "schlafli" : "montecarlo";
}

VolumeEstimate volume_schlafli(const OrthoschemeParams& p, double tol) {
    validate(p);
    if (!(tol > 0.0)) throw domain_error("quadrature tolerance must be positive");
    if (p.h < 1.0 && !near(p.h, 1.0))
        throw regime_error("Schlafli volume integral requires h >= 1; use the Monte-Carlo oracle");

    const double r = p.r;
    const double theta = p.theta;
    const bool lambert_far = r > 1.0 + kClassEps;
    const double b = lambert_threshold(r);
    const double h0 = std::max(p.h, 1.0);

    VolumeEstimate est;
    est.method = VolumeMethod::SchlafliIntegral;

    auto add = [&](const QuadratureResult& q) {
        est.value -= q.value;
        est.error += q.error;
        est.count += q.evaluations;
    };

    double far_start = h0;
    if (lambert_far && h0 < b) {
        auto g = [&](double t) { return detail::dV_dh_forced(t, r, theta, false); };
        add(integrate_adaptive(g, h0, b, tol));
        far_start = b;
    }

    auto g_far = [&](double t) { return detail::dV_dh_forced(t, r, theta, lambert_far); };
    const double t_mid = std::max(2.0 * far_start, 4.0);
    add(integrate_adaptive(g_far, far_start, t_mid, tol));

    // Far range in reciprocal coordinates up to the envelope cutoff.
    const TailEnvelope env = tail_envelope(r, theta, t_mid);
    const double cutoff = env.cutoff_for(0.5 * tol, 2.0 * t_mid);
    auto g_recip = [&](double u) { return g_far(1.0 / u) / (u * u); };
    add(integrate_adaptive(g_recip, 1.0 / cutoff, 1.0 / t_mid, tol));

    est.tail_cutoff = cutoff;
    est.tail_bound = env.bound_beyond(cutoff);
    est.error += est.tail_bound;
    return est;
}

namespace {

struct AffinePlane {
    // inner((1,x), w) = a0 + a1 x + a2 y + a3 z <= 0
    double a0, a1, a2, a3;
    static AffinePlane from(const LorentzVec& w) { return {-w.x0, w.x1, w.x2, w.x3}; }
};

struct McBlock {
    double sum_w = 0.0;
    double sum_w2 = 0.0;
    long long accepted = 0;
};

} // namespace

VolumeEstimate volume_montecarlo(const OrthoschemeParams& p, long long samples,
                                 std::uint64_t seed, int threads) {
    validate(p);
    if (samples < 1) throw domain_error("Monte-Carlo needs at least one sample");
    if (threads < 1) throw domain_error("thread count must be at least 1");
    if (near(p.r, 1.0))
        throw regime_error("ideal vertex v0 (r = 1): the ball-model integrand is unbounded; "
                           "use the analytic route");
    if (near(p.h, 1.0))
        throw regime_error("ideal apex (h = 1): the ball-model integrand is unbounded; "
                           "use the analytic route");
    if (p.r > 1.0 && near(p.h, lambert_threshold(p.r)))
        throw regime_error("ideal vertex at the Lambert threshold: the ball-model integrand "
                           "is unbounded; use the analytic route");

    const OrthoschemeGeometry g = build(p);
    AffinePlane planes[6];
    int n_planes = 0;
    for (int i = 0; i < 4; ++i) planes[n_planes++] = AffinePlane::from(g.pole[i]);
    for (const LorentzVec& v : truncation_halfspaces(g))
        planes[n_planes++] = AffinePlane::from(v);

    // The truncated polytope is contained in the Euclidean tetrahedron and in
    // the closed unit ball, so this box is a correct (if loose) superset.
    const double bx = std::min(1.0, p.r * std::sin(p.theta));
    const double by = std::min(1.0, p.r * std::cos(p.theta));
    const double bz = std::min(1.0, p.h);
    const double box_volume = bx * by * bz;

    constexpr long long kBlock = 1 << 16;
    const long long n_blocks = (samples + kBlock - 1) / kBlock;
    std::vector<McBlock> blocks(static_cast<std::size_t>(n_blocks));

    auto run_block = [&](long long bi) {
        const long long begin = bi * kBlock;
        const long long count = std::min(kBlock, samples - begin);
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(bi) + 1)));
        McBlock acc;
        for (long long i = 0; i < count; ++i) {
            const double x = uniform01(rng) * bx;
            const double y = uniform01(rng) * by;
            const double z = uniform01(rng) * bz;
            const double n2 = x * x + y * y + z * z;
            if (n2 >= 1.0) continue;
            bool inside = true;
            for (int k = 0; k < n_planes; ++k) {
                if (planes[k].a0 + planes[k].a1 * x + planes[k].a2 * y + planes[k].a3 * z > 0.0) {
                    inside = false;
                    break;
                }
            }
            if (!inside) continue;
            const double w = 1.0 / ((1.0 - n2) * (1.0 - n2));
            acc.sum_w += w;
            acc.sum_w2 += w * w;
            ++acc.accepted;
        }
        blocks[static_cast<std::size_t>(bi)] = acc;
    };

    if (threads == 1 || n_blocks == 1) {
        for (long long bi = 0; bi < n_blocks; ++bi) run_block(bi);
    } else {
        const int n_workers = std::min<long long>(threads, n_blocks);
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_workers));
        for (int w = 0; w < n_workers; ++w) {
            pool.emplace_back([&, w] {
                for (long long bi = w; bi < n_blocks; bi += n_workers) run_block(bi);
            });
        }
        for (auto& t : pool) t.join();
    }

    // Reduce in block order: bit-for-bit identical for any thread count.
    double s1 = 0.0, s2 = 0.0;
    long long accepted = 0;
    for (const McBlock& blk : blocks) {
        s1 += blk.sum_w;
        s2 += blk.sum_w2;
        accepted += blk.accepted;
    }
    if (accepted == 0)
        throw regime_error("degenerate polytope: no sample accepted; volume at or below "
                           "the resolution of the requested sample count");

    const double n = static_cast<double>(samples);
    const double mean = s1 / n;
    const double var = std::max(0.0, s2 / n - mean * mean);

    VolumeEstimate est;
    est.method = VolumeMethod::MonteCarlo;
    est.value = box_volume * mean;
    est.error = box_volume * std::sqrt(var / n);
    est.count = samples;
    est.seed = seed;
    return est;
}

std::vector<SweepRow> sweep(double r, double theta, const std::vector<double>& h_grid,
                            long long mc_samples, std::uint64_t seed) {
    validate(OrthoschemeParams{2.0, r, theta});
    if (h_grid.empty()) throw domain_error("sweep grid is empty");
    for (std::size_t i = 0; i < h_grid.size(); ++i) {
        if (!(h_grid[i] > 0.0)) throw domain_error("sweep grid values must be positive");
        if (i > 0 && !(h_grid[i] > h_grid[i - 1]))
            throw domain_error("sweep grid must be strictly increasing");
    }

    std::vector<SweepRow> rows;
    rows.reserve(h_grid.size());
    for (const double h : h_grid) {
        SweepRow row;
        row.h = h;
        const OrthoschemeParams p{h, r, theta};
        row.regime = classify(p);
        row.dv_dh = kNaN;
        row.volume = kNaN;
        row.error = kNaN;
        row.method = "none";

        if (h > 1.0 && !near(h, 1.0)) {
            try {
                row.dv_dh = dV_dh(p).dV_dh;
            } catch (const std::exception& e) {
                row.note = e.what();
            }
        }
        try {
            if (h > 1.0 || near(h, 1.0)) {
                const VolumeEstimate est = volume_schlafli(p);
                row.volume = est.value;
                row.error = est.error;
                row.method = "schlafli";
                if (near(h, 1.0)) row.note = "ideal apex: one-sided Schlafli limit";
            } else {
                const VolumeEstimate est = volume_montecarlo(p, mc_samples, seed);
                row.volume = est.value;
                row.error = est.error;
                row.method = "montecarlo";
            }
        } catch (const std::exception& e) {
            row.method = "none";
            row.note = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace ortho

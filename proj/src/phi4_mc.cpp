#include <cmath>
#include <stdexcept>

#include "phi4tc/phi4_oracle.hpp"
#include "phi4tc/rng.hpp"

namespace phi4tc {

double MonotoneFn::operator()(const std::vector<double>& phi) const {
    const double v = phi[static_cast<std::size_t>(vertex)];
    switch (kind) {
        case kCoordinate: return v;
        case kClamp: return std::min(hi, std::max(lo, v));
        case kHalfSpaceIndicator: return v >= level ? 1.0 : 0.0;
    }
    return 0.0;
}

namespace {

struct Chain {
    const CorrelationRequest& req;
    std::vector<int> vol;
    std::vector<double> field;
    std::vector<double> phi;
    double step = 1.0;
    Rng rng;
    std::int64_t accepted = 0, proposed = 0;

    Chain(const CorrelationRequest& r, std::uint64_t seed) : req(r), rng(seed) {
        auto [v, f] = r.folded();
        vol = std::move(v);
        field = std::move(f);
        phi.assign(static_cast<std::size_t>(req.graph.size()), 0.0);
    }

    double local_action(int x, double value) const {
        const double g = req.params.g, a = req.params.a;
        double s = g * value * value * value * value + a * value * value -
                   req.beta * field[static_cast<std::size_t>(x)] * value;
        for (int y : vol) {
            if (y == x) continue;
            s -= req.beta * req.graph.coupling(x, y) * value * phi[static_cast<std::size_t>(y)];
        }
        return s;
    }

    void sweep() {
        for (int x : vol) {
            const double old = phi[static_cast<std::size_t>(x)];
            const double cand = old + rng.uniform(-step, step);
            const double ds = local_action(x, cand) - local_action(x, old);
            ++proposed;
            if (ds <= 0.0 || rng.uniform() < std::exp(-ds)) {
                phi[static_cast<std::size_t>(x)] = cand;
                ++accepted;
            }
        }
    }

    void calibrate(std::int64_t warm_sweeps) {
        const std::int64_t block = std::max<std::int64_t>(20, warm_sweeps / 25);
        std::int64_t done = 0;
        while (done < warm_sweeps) {
            accepted = proposed = 0;
            for (std::int64_t i = 0; i < block && done < warm_sweeps; ++i, ++done) sweep();
            const double acc = proposed ? static_cast<double>(accepted) / proposed : 0.5;
            if (acc < 0.3) step *= 0.8;
            else if (acc > 0.6) step *= 1.25;
        }
    }
};

double observable(const CorrelationRequest& req, const std::vector<double>& phi) {
    double obs = 1.0;
    for (int x = 0; x < req.graph.size(); ++x)
        for (int k = 0; k < req.a.at(x); ++k) obs *= phi[static_cast<std::size_t>(x)];
    return obs;
}

}  // namespace

EstimateWithError correlate_mc(const CorrelationRequest& req, std::int64_t sweeps,
                               std::uint64_t seed) {
    if (sweeps < 1000) throw std::invalid_argument("correlate_mc: sweeps must be >= 1000");
    req.params.validate();
    Chain chain(req, seed);
    const std::int64_t warm = sweeps / 5;  // discarded 20%
    chain.calibrate(warm);

    constexpr int kBatches = 32;
    const std::int64_t per_batch = (sweeps - warm) / kBatches;
    std::vector<double> batch_means;
    batch_means.reserve(kBatches);
    for (int b = 0; b < kBatches; ++b) {
        double acc = 0.0;
        for (std::int64_t i = 0; i < per_batch; ++i) {
            chain.sweep();
            acc += observable(req, chain.phi);
        }
        batch_means.push_back(acc / static_cast<double>(per_batch));
    }
    EstimateWithError out;
    out.seed = seed;
    out.n_samples = per_batch * kBatches;
    double mean = 0.0;
    for (double m : batch_means) mean += m;
    mean /= kBatches;
    double var = 0.0;
    for (double m : batch_means) var += (m - mean) * (m - mean);
    var /= (kBatches - 1);
    out.value = mean;
    out.stderror = std::sqrt(var / kBatches);
    return out;
}

FkgPairEstimate fkg_pair_estimate(const CorrelationRequest& req, const MonotoneFn& f,
                                  const MonotoneFn& g, std::int64_t sweeps, std::uint64_t seed) {
    if (sweeps < 1000) throw std::invalid_argument("fkg_pair_estimate: sweeps must be >= 1000");
    Chain chain(req, seed);
    const std::int64_t warm = sweeps / 5;
    chain.calibrate(warm);

    constexpr int kBatches = 32;
    const std::int64_t per_batch = (sweeps - warm) / kBatches;
    std::vector<double> bf(kBatches, 0.0), bg(kBatches, 0.0), bfg(kBatches, 0.0);
    for (int b = 0; b < kBatches; ++b) {
        for (std::int64_t i = 0; i < per_batch; ++i) {
            chain.sweep();
            const double vf = f(chain.phi), vg = g(chain.phi);
            bf[static_cast<std::size_t>(b)] += vf;
            bg[static_cast<std::size_t>(b)] += vg;
            bfg[static_cast<std::size_t>(b)] += vf * vg;
        }
        bf[static_cast<std::size_t>(b)] /= static_cast<double>(per_batch);
        bg[static_cast<std::size_t>(b)] /= static_cast<double>(per_batch);
        bfg[static_cast<std::size_t>(b)] /= static_cast<double>(per_batch);
    }
    auto reduce = [&](const std::vector<double>& v) {
        EstimateWithError e;
        e.seed = seed;
        e.n_samples = per_batch * kBatches;
        double mean = 0.0;
        for (double m : v) mean += m;
        mean /= kBatches;
        double var = 0.0;
        for (double m : v) var += (m - mean) * (m - mean);
        var /= (kBatches - 1);
        e.value = mean;
        e.stderror = std::sqrt(var / kBatches);
        return e;
    };
    FkgPairEstimate out;
    out.f = reduce(bf);
    out.g = reduce(bg);
    out.fg = reduce(bfg);
    out.covariance = out.fg.value - out.f.value * out.g.value;
    // jackknife over batches for the covariance error
    std::vector<double> jk(kBatches, 0.0);
    double sf = 0.0, sg = 0.0, sfg = 0.0;
    for (int b = 0; b < kBatches; ++b) {
        sf += bf[static_cast<std::size_t>(b)];
        sg += bg[static_cast<std::size_t>(b)];
        sfg += bfg[static_cast<std::size_t>(b)];
    }
    for (int b = 0; b < kBatches; ++b) {
        const double mf = (sf - bf[static_cast<std::size_t>(b)]) / (kBatches - 1);
        const double mg = (sg - bg[static_cast<std::size_t>(b)]) / (kBatches - 1);
        const double mfg = (sfg - bfg[static_cast<std::size_t>(b)]) / (kBatches - 1);
        jk[static_cast<std::size_t>(b)] = mfg - mf * mg;
    }
    double jmean = 0.0;
    for (double v : jk) jmean += v;
    jmean /= kBatches;
    double jvar = 0.0;
    for (double v : jk) jvar += (v - jmean) * (v - jmean);
    out.cov_stderror = std::sqrt(jvar * (kBatches - 1) / kBatches);
    return out;
}

}  // namespace phi4tc

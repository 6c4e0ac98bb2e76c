#include "imkit/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "imkit/rng.hpp"

namespace imkit {

namespace {

using Point = std::vector<double>;

struct Simplex {
    Point x;
    double f;
};

// Standard Nelder-Mead (reflection 1, expansion 2, contraction 1/2,
// shrink 1/2) minimizing f, stopping when the value spread across the
// simplex falls below ftol.
Simplex nelder_mead_min(const std::function<double(const Point&)>& f,
                        const Point& start, double step, int maxIter,
                        double ftol) {
    const std::size_t n = start.size();
    std::vector<Simplex> s(n + 1);
    s[0] = {start, f(start)};
    for (std::size_t i = 0; i < n; ++i) {
        Point p = start;
        p[i] += step;
        s[i + 1] = {p, f(p)};
    }
    auto byValue = [](const Simplex& a, const Simplex& b) { return a.f < b.f; };

    for (int iter = 0; iter < maxIter; ++iter) {
        std::sort(s.begin(), s.end(), byValue);
        if (s.back().f - s.front().f <= ftol)
            break;

        Point centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                centroid[j] += s[i].x[j] / double(n);

        auto blend = [&](double coeff) {
            Point p(n);
            for (std::size_t j = 0; j < n; ++j)
                p[j] = centroid[j] + coeff * (s.back().x[j] - centroid[j]);
            return p;
        };

        Point refl = blend(-1.0);
        double fRefl = f(refl);
        if (fRefl < s.front().f) {
            Point expa = blend(-2.0);
            double fExpa = f(expa);
            if (fExpa < fRefl)
                s.back() = {std::move(expa), fExpa};
            else
                s.back() = {std::move(refl), fRefl};
            continue;
        }
        if (fRefl < s[n - 1].f) {
            s.back() = {std::move(refl), fRefl};
            continue;
        }
        Point contr = blend(fRefl < s.back().f ? -0.5 : 0.5);
        double fContr = f(contr);
        if (fContr < std::min(fRefl, s.back().f)) {
            s.back() = {std::move(contr), fContr};
            continue;
        }
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                s[i].x[j] = s[0].x[j] + 0.5 * (s[i].x[j] - s[0].x[j]);
            s[i].f = f(s[i].x);
        }
    }
    std::sort(s.begin(), s.end(), byValue);
    return s.front();
}

PureState state_from_embedding(const Point& x, int dim) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i)
        v[i] = Complex(x[i], x[dim + i]);
    v.normalize();
    return PureState(v);
}

}  // namespace

std::pair<std::vector<double>, double> nelder_mead_minimize(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& start, double step, int maxIterations,
    double functionTolerance) {
    if (maxIterations < 1 || functionTolerance <= 0.0)
        throw std::invalid_argument("nelder_mead_minimize: bad configuration");
    Simplex best = nelder_mead_min(f, start, step, maxIterations,
                                   functionTolerance);
    return {std::move(best.x), best.f};
}

std::pair<PureState, double> maximize_over_pure_states(
    const std::function<double(const PureState&)>& objective, int dim,
    const OptimizerConfig& cfg) {
    if (dim <= 0 || cfg.restarts < 1 || cfg.maxIterations < 1 ||
        cfg.functionTolerance <= 0.0)
        throw std::invalid_argument("maximize_over_pure_states: bad configuration");

    auto embedded = [&](const Point& x) {
        double norm2 = 0.0;
        for (double v : x)
            norm2 += v * v;
        if (norm2 < 1e-24)
            return 1e100;  // degenerate embedding, never optimal
        return -objective(state_from_embedding(x, dim));
    };

    double bestF = 0.0;
    Point bestX;
    for (int r = 0; r < cfg.restarts; ++r) {
        Rng rng(cfg.seed * 0x9e3779b97f4a7c15ULL + std::uint64_t(r) + 1);
        Point start(2 * std::size_t(dim));
        double norm2 = 0.0;
        for (double& v : start) {
            v = rng.normal();
            norm2 += v * v;
        }
        for (double& v : start)
            v /= std::sqrt(norm2);
        Simplex found = nelder_mead_min(embedded, start, 0.5, cfg.maxIterations,
                                        cfg.functionTolerance);
        if (bestX.empty() || found.f < bestF) {
            bestF = found.f;
            bestX = std::move(found.x);
        }
    }
    PureState best = state_from_embedding(bestX, dim);
    return {best, objective(best)};
}

FeasibilityResult dykstra_feasibility(
    const std::vector<std::function<Matrix(const Matrix&)>>& projections,
    const Matrix& start, const FeasibilityConfig& cfg) {
    if (projections.empty())
        throw std::invalid_argument("dykstra_feasibility: no projections given");
    if (cfg.maxSweeps < 1 || cfg.residualTolerance <= 0.0)
        throw std::invalid_argument("dykstra_feasibility: bad configuration");

    Matrix x = start;
    std::vector<Matrix> corrections(projections.size(),
                                    Matrix::Zero(start.rows(), start.cols()));
    double residual = 0.0;
    for (int sweep = 0; sweep < cfg.maxSweeps; ++sweep) {
        for (std::size_t i = 0; i < projections.size(); ++i) {
            Matrix shifted = x + corrections[i];
            Matrix projected = projections[i](shifted);
            corrections[i] = shifted - projected;
            x = std::move(projected);
        }
        residual = 0.0;
        for (const auto& proj : projections)
            residual = std::max(residual, (x - proj(x)).norm());
        if (residual <= cfg.residualTolerance)
            break;
    }
    return {residual <= cfg.residualTolerance, std::move(x), residual};
}

double bisect_min_feasible_s(const std::function<bool(double)>& feasibleAt,
                             double tolerance) {
    if (tolerance <= 0.0)
        throw std::invalid_argument("bisect_min_feasible_s: bad tolerance");
    if (feasibleAt(0.0))
        return 0.0;
    double lo = 0.0, hi = 1.0;  // feasible at 1 by assumption
    while (hi - lo > tolerance) {
        double mid = 0.5 * (lo + hi);
        if (feasibleAt(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    if (n <= 0)
        return;
    int workers = 0;
    if (const char* env = std::getenv("IMKIT_THREADS"))
        workers = std::atoi(env);
    if (workers <= 0)
        workers = int(std::thread::hardware_concurrency());
    workers = std::clamp(workers, 1, n);
    if (workers == 1) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                fn(i);
        });
    }
    for (auto& t : pool)
        t.join();
}

}  // namespace imkit

#include "imkit/measures.hpp"

#include <cmath>
#include <limits>
#include <tuple>

#include "imkit/gates.hpp"

namespace imkit {

namespace {

constexpr double kAxiomZeroTol = 1e-7;
constexpr double kAxiomSlackTol = 1e-6;
constexpr double kScalingCheckTol = 1e-5;

void require_p(double p) {
    if (!(p >= 1.0))
        throw std::invalid_argument("Schatten exponent must satisfy p >= 1");
}

Matrix real_symmetric_part(const Matrix& x) {
    Eigen::MatrixXd re = 0.5 * (x + x.adjoint()).real();
    return (0.5 * (re + re.transpose())).cast<Complex>();
}

}  // namespace

Matrix QubitUnitaryParams::matrix() const {
    return gates::qubit_unitary(theta, phi, lambda);
}

std::string method_name(Method m) {
    switch (m) {
        case Method::analytic: return "analytic";
        case Method::optimized: return "optimized";
        case Method::upper_bound: return "upper-bound";
        case Method::weight: return "weight";
    }
    return "unknown";
}

bool AxiomSuiteReport::all_pass() const {
    bool mdc = faithfulnessMdc.pass && monotonicityMdc.pass && convexityMdc.pass;
    if (!weightEvaluated)
        return mdc;
    return mdc && faithfulnessWeight.pass && monotonicityWeight.pass &&
           convexityWeight.pass;
}

TrigConstants trig_constants(const QubitUnitaryParams& p) {
    double st = std::sin(p.theta), ct = std::cos(p.theta);
    double sp = std::sin(p.phi);
    return {
        2.0 * st * st * std::cos(2.0 * p.phi) + std::cos(2.0 * p.theta),
        std::sin(2.0 * p.theta) * std::cos(p.lambda) * sp * sp,
        std::cos(2.0 * p.lambda) *
            (-2.0 * std::cos(2.0 * p.theta) * sp * sp + 3.0 * std::cos(2.0 * p.phi) + 1.0),
        st * std::sin(p.lambda) * std::sin(2.0 * p.phi),
        ct * std::sin(2.0 * p.lambda) * std::sin(2.0 * p.phi),
    };
}

double m_dc_qubit_unitary_analytic(const QubitUnitaryParams& p) {
    TrigConstants c = trig_constants(p);
    double radicand = 5.0 - c.c1 - c.c3 + 4.0 * c.c5;
    return std::sqrt(std::max(0.0, radicand)) / (2.0 * std::sqrt(2.0));
}

double m_dc_qubit_unitary_lambda_half_pi(double theta, double phi) {
    double sp = std::sin(phi);
    double radicand = 3.0 - 2.0 * std::cos(2.0 * theta) * sp * sp + std::cos(2.0 * phi);
    return 0.5 * std::sqrt(std::max(0.0, radicand));
}

MeasureReport m_dc(const KrausOperation& op, double p, const OptimizerConfig& cfg) {
    require_p(p);
    auto objective = [&](const PureState& psi) {
        Matrix proj = psi.projector();
        Matrix detect = deimaginarity(op.apply_raw(proj));
        Matrix create = op.apply_raw(deimaginarity(proj));
        return schatten_norm(detect - create, p);
    };
    auto [state, value] = maximize_over_pure_states(objective, op.dim_in(), cfg);
    return {value, state, Method::optimized};
}

MeasureReport m_c_upper(const KrausOperation& op, double p, const OptimizerConfig& cfg) {
    require_p(p);
    KrausOperation candidate = realify(op);
    auto objective = [&](const PureState& psi) {
        Matrix real = deimaginarity(psi.projector());
        return schatten_norm(op.apply_raw(real) - candidate.apply_raw(real), p);
    };
    auto [state, value] = maximize_over_pure_states(objective, op.dim_in(), cfg);
    return {value, state, Method::upper_bound};
}

MeasureReport m_d_upper(const KrausOperation& op, double p, const OptimizerConfig& cfg) {
    require_p(p);
    KrausOperation candidate = realify(op);
    auto objective = [&](const PureState& psi) {
        Matrix proj = psi.projector();
        return schatten_norm(
            deimaginarity(op.apply_raw(proj)) - deimaginarity(candidate.apply_raw(proj)), p);
    };
    auto [state, value] = maximize_over_pure_states(objective, op.dim_in(), cfg);
    return {value, state, Method::upper_bound};
}

double superoperator_norm_estimate(const KrausOperation& op, double p,
                                   const OptimizerConfig& cfg) {
    require_p(p);
    auto objective = [&](const PureState& psi) {
        return schatten_norm(op.apply_raw(psi.projector()), p);
    };
    return maximize_over_pure_states(objective, op.dim_in(), cfg).second;
}

double deimaginarity_norm_estimate(int dim, double p, const OptimizerConfig& cfg) {
    require_p(p);
    auto objective = [&](const PureState& psi) {
        return schatten_norm(deimaginarity(psi.projector()), p);
    };
    return maximize_over_pure_states(objective, dim, cfg).second;
}

std::pair<double, WeightDecomposition> weight_of_imaginarity(
    const KrausOperation& op, const FeasibilityConfig& cfg,
    double bisectionTolerance) {
    if (!op.is_channel())
        throw std::invalid_argument(
            "weight of imaginarity requires a channel (sum K†K = I); the input "
            "operation is trace-decreasing");

    const Matrix& j = op.choi().mat();
    const int dIn = op.dim_in();
    const int dOut = op.dim_out();
    const Eigen::Index d = j.rows();
    const double partSlack = std::max(tol::kChoi, 100.0 * cfg.residualTolerance);

    auto free_part_or_self = [&](double s, const Matrix& r) {
        ChoiMatrix freePart(dIn, dOut, r, partSlack);
        Matrix residual = s > 1e-12 ? Matrix(((j - (1.0 - s) * r) / s).eval()) : r;
        ChoiMatrix residualPart(dIn, dOut, residual, partSlack / std::max(s, 0.05));
        return WeightDecomposition{s, std::move(freePart), std::move(residualPart)};
    };

    // Unitary (rank-1 Choi) channels carry weight 0 or 1; decide by the
    // realness of the Choi matrix, normalizing away any global phase first.
    HermitianEig eig = hermitian_eig(j);
    int rank = 0;
    for (int i = 0; i < eig.values.size(); ++i)
        if (eig.values[i] > 1e-10 * std::max(1.0, eig.values.maxCoeff()))
            ++rank;
    if (rank == 1) {
        Complex lead(0.0, 0.0);
        for (Eigen::Index r = 0; r < d; ++r)
            for (Eigen::Index c = 0; c < d; ++c)
                if (std::abs(j(r, c)) > std::abs(lead))
                    lead = j(r, c);
        Matrix dephased = j / (lead / std::abs(lead));
        bool real = dephased.imag().cwiseAbs().maxCoeff() <=
                    tol::kFreeness * std::max(1.0, j.norm());
        if (real)
            return {0.0, free_part_or_self(0.0, real_symmetric_part(j))};
        // Weight 1: the whole channel is the residual; any real channel can
        // stand as the (unused) free part.
        Matrix idChoi = conjugation(Matrix::Identity(dOut, dIn)).choi().mat();
        ChoiMatrix freePart(dIn, dOut, idChoi);
        ChoiMatrix residualPart(dIn, dOut, j);
        return {1.0, WeightDecomposition{1.0, std::move(freePart), std::move(residualPart)}};
    }

    // For s < 1 the cap (1-s)R <= Choi confines R to the support of the Choi
    // matrix, so substitute R = B Z B^dagger with B a square-root factor of
    // the Choi matrix and Z Hermitian on its support. The substitution merges
    // the PSD and cap constraints into the single spectral box
    // 0 <= Z <= I/(1-s), while realness of R and trace preservation stay
    // affine in Z with s-independent coefficients. Dykstra then alternates
    // between just two sets -- the box and a precomputed affine projector --
    // which converges far faster near the feasibility boundary than the
    // four-set formulation in R.
    const int r = rank;
    Matrix b(d, r);
    {
        int col = 0;
        for (int i = 0; i < eig.values.size(); ++i)
            if (eig.values[i] > 1e-10 * std::max(1.0, eig.values.maxCoeff()))
                b.col(col++) = eig.vectors.col(i) * std::sqrt(eig.values[i]);
    }

    // Orthonormal Hermitian basis of the Z space, so Frobenius distances on Z
    // match Euclidean distances in the packed coordinates.
    std::vector<Matrix> hermBasis;
    hermBasis.reserve(std::size_t(r) * std::size_t(r));
    const double invSqrt2 = 1.0 / std::sqrt(2.0);
    for (int k = 0; k < r; ++k) {
        Matrix h = Matrix::Zero(r, r);
        h(k, k) = 1.0;
        hermBasis.push_back(h);
        for (int l = k + 1; l < r; ++l) {
            Matrix sym = Matrix::Zero(r, r);
            sym(k, l) = invSqrt2;
            sym(l, k) = invSqrt2;
            hermBasis.push_back(sym);
            Matrix anti = Matrix::Zero(r, r);
            anti(k, l) = Complex(0.0, invSqrt2);
            anti(l, k) = Complex(0.0, -invSqrt2);
            hermBasis.push_back(anti);
        }
    }
    const int m = int(hermBasis.size());

    const int rows = int(d * d) + dIn * dIn;
    Eigen::MatrixXd constraints(rows, m);
    for (int c = 0; c < m; ++c) {
        Matrix image = b * hermBasis[std::size_t(c)] * b.adjoint();
        Eigen::MatrixXd im = image.imag();
        Eigen::MatrixXd reduced = partial_trace_out(image, dIn, dOut).real();
        constraints.col(c).head(d * d) =
            Eigen::Map<Eigen::VectorXd>(im.data(), d * d);
        constraints.col(c).tail(dIn * dIn) =
            Eigen::Map<Eigen::VectorXd>(reduced.data(), dIn * dIn);
    }
    Eigen::VectorXd target = Eigen::VectorXd::Zero(rows);
    {
        Eigen::MatrixXd identityIn = Eigen::MatrixXd::Identity(dIn, dIn);
        target.tail(dIn * dIn) =
            Eigen::Map<Eigen::VectorXd>(identityIn.data(), dIn * dIn);
    }
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> affineSolver;
    affineSolver.setThreshold(1e-9);
    affineSolver.compute(constraints);

    // No real trace-preserving candidate lives inside the support: every
    // s < 1 is infeasible and the channel itself is the whole residual.
    if ((constraints * affineSolver.solve(target) - target).norm() >
        1e-7 * std::max(1.0, target.norm())) {
        Matrix idChoi = conjugation(Matrix::Identity(dOut, dIn)).choi().mat();
        ChoiMatrix freePart(dIn, dOut, idChoi);
        ChoiMatrix residualPart(dIn, dOut, j);
        return {1.0, WeightDecomposition{1.0, std::move(freePart), std::move(residualPart)}};
    }

    // Affine solutions form v0 + span(nullBasis) in packed coordinates; the
    // explicit parameterization backs the certification step below.
    const Eigen::VectorXd v0 = affineSolver.solve(target);
    Eigen::JacobiSVD<Eigen::MatrixXd> constraintSvd(constraints,
                                                    Eigen::ComputeFullV);
    int constraintRank = 0;
    for (int i = 0; i < constraintSvd.singularValues().size(); ++i)
        if (constraintSvd.singularValues()[i] >
            1e-9 * constraintSvd.singularValues()[0])
            ++constraintRank;
    const Eigen::MatrixXd nullBasis =
        constraintSvd.matrixV().rightCols(m - constraintRank);
    const int nullDim = int(nullBasis.cols());

    auto pack = [&](const Matrix& z) {
        Eigen::VectorXd v(m);
        for (int c = 0; c < m; ++c)
            v[c] = hermBasis[std::size_t(c)]
                       .conjugate()
                       .cwiseProduct(z)
                       .sum()
                       .real();
        return v;
    };
    auto unpack = [&](const Eigen::VectorXd& v) {
        Matrix z = Matrix::Zero(r, r);
        for (int c = 0; c < m; ++c)
            z += v[c] * hermBasis[std::size_t(c)];
        return z;
    };
    auto project_affine = [&](const Matrix& z) -> Matrix {
        Eigen::VectorXd v = pack(0.5 * (z + z.adjoint()));
        v -= affineSolver.solve(constraints * v - target);
        return unpack(v);
    };

    Matrix start = project_affine(Matrix::Identity(r, r));
    double bestS = 1.0;
    Matrix bestZ = start;

    auto feasible_at = [&](double s) {
        if (s >= 1.0 - 1e-12)
            return true;  // the channel itself closes the decomposition
        const double upper = 1.0 / (1.0 - s);
        std::vector<std::function<Matrix(const Matrix&)>> projections;
        projections.emplace_back([upper](const Matrix& z) -> Matrix {
            HermitianEig ez = hermitian_eig(z);
            Eigen::VectorXd clipped =
                ez.values.cwiseMax(0.0).cwiseMin(upper);
            return ez.vectors * clipped.asDiagonal() * ez.vectors.adjoint();
        });
        projections.emplace_back(project_affine);
        // Warm-start from the tightest feasible iterate found so far; nearby
        // values of s move the feasible region only slightly.
        FeasibilityResult result = dykstra_feasibility(projections, bestZ, cfg);
        if (result.feasible) {
            if (s <= bestS) {
                bestS = s;
                bestZ = result.iterate;
            }
            return true;
        }

        // Near the critical s the box and the affine set are almost tangent
        // and alternating projections stall well before the sweep budget
        // resolves the probe. Certify instead by minimizing the worst
        // spectral-box violation over the affine subspace directly: the
        // objective is convex, and a derivative-free minimizer can only
        // overestimate its true minimum, so accepting values at or below the
        // slack never misclassifies an infeasible probe as feasible.
        auto violation = [&](const std::vector<double>& w) {
            Eigen::VectorXd v = v0;
            for (int i = 0; i < nullDim; ++i)
                v += w[std::size_t(i)] * nullBasis.col(i);
            HermitianEig ez = hermitian_eig(unpack(v));
            return std::max(ez.values.maxCoeff() - upper,
                            -ez.values.minCoeff());
        };
        const double slack = 1e-9 * std::max(1.0, upper);
        double bestViolation;
        Eigen::VectorXd bestV = v0;
        if (nullDim == 0) {
            bestViolation = violation({});
        } else {
            std::vector<Eigen::VectorXd> starts;
            starts.push_back(Eigen::VectorXd::Zero(nullDim));
            starts.push_back(nullBasis.transpose() *
                             (pack(0.5 * (result.iterate +
                                          result.iterate.adjoint())) -
                              v0));
            starts.push_back(nullBasis.transpose() * (pack(bestZ) - v0));
            bestViolation = std::numeric_limits<double>::infinity();
            for (const Eigen::VectorXd& w0 : starts) {
                std::vector<double> w(w0.data(), w0.data() + nullDim);
                double step = 0.25;
                double value = violation(w);
                // A couple of restarts with shrinking steps sharpen the
                // nonsmooth minimum well past the acceptance slack.
                for (int round = 0; round < 3 && value > -slack; ++round) {
                    std::tie(w, value) = nelder_mead_minimize(
                        violation, w, step, 600, 1e-13);
                    step *= 0.04;
                }
                if (value < bestViolation) {
                    bestViolation = value;
                    bestV = v0 + nullBasis *
                                     Eigen::Map<const Eigen::VectorXd>(
                                         w.data(), nullDim);
                }
            }
        }
        if (bestViolation > slack)
            return false;
        // Clip the certified point into the box so the witnessed parts are
        // admissible up to the reporting tolerance.
        HermitianEig ez = hermitian_eig(unpack(bestV));
        Eigen::VectorXd clipped = ez.values.cwiseMax(0.0).cwiseMin(upper);
        Matrix certified =
            ez.vectors * clipped.asDiagonal() * ez.vectors.adjoint();
        if (s <= bestS) {
            bestS = s;
            bestZ = certified;
        }
        return true;
    };

    double s = bisect_min_feasible_s(feasible_at, bisectionTolerance);
    if (bestS >= 1.0 - 1e-12) {  // no feasible decomposition found below 1
        Matrix idChoi = conjugation(Matrix::Identity(dOut, dIn)).choi().mat();
        ChoiMatrix freePart(dIn, dOut, idChoi);
        ChoiMatrix residualPart(dIn, dOut, j);
        return {s, WeightDecomposition{s, std::move(freePart), std::move(residualPart)}};
    }
    Matrix candidate = b * bestZ * b.adjoint();
    return {bestS, free_part_or_self(bestS, real_symmetric_part(candidate))};
}

AxiomSuiteReport measure_axiom_suite(const std::vector<KrausOperation>& ops,
                                     const std::vector<KrausOperation>& freeOps,
                                     const OptimizerConfig& cfg,
                                     std::uint64_t mixSeed) {
    AxiomSuiteReport report;
    bool allChannels = true;
    for (const auto& op : ops)
        allChannels = allChannels && op.is_channel();
    for (const auto& op : freeOps)
        allChannels = allChannels && op.is_channel();
    report.weightEvaluated = allChannels;

    FeasibilityConfig fcfg;
    const double weightTol = 1e-7;  // resolve well below the slack tolerance
    auto mdcValue = [&](const KrausOperation& op) { return m_dc(op, 1.0, cfg).value; };
    auto weightValue = [&](const KrausOperation& op) {
        return weight_of_imaginarity(op, fcfg, weightTol).first;
    };

    auto checkFaithfulness = [&](AxiomOutcome& out, auto&& value) {
        for (const auto& op : ops) {
            double v = value(op);
            bool free = classify_freeness(op).isFree;
            if (free) {
                out.worstSlack = std::max(out.worstSlack, v - kAxiomZeroTol);
                if (v > kAxiomZeroTol)
                    out.pass = false;
            } else if (v <= kAxiomZeroTol) {
                out.pass = false;
                out.worstSlack = std::max(out.worstSlack, kAxiomZeroTol - v);
            }
        }
    };
    auto checkMonotonicity = [&](AxiomOutcome& out, auto&& value) {
        for (const auto& op : ops) {
            double base = value(op);
            for (const auto& phi : freeOps) {
                for (const KrausOperation& composed :
                     {compose(phi, op), compose(op, phi)}) {
                    double slack = value(composed) - base - kAxiomSlackTol;
                    out.worstSlack = std::max(out.worstSlack, slack);
                    if (slack > 0.0)
                        out.pass = false;
                }
            }
        }
    };
    auto checkConvexity = [&](AxiomOutcome& out, auto&& value, int trials) {
        Rng rng(mixSeed);
        std::vector<double> baseValues;
        baseValues.reserve(ops.size());
        for (const auto& op : ops)
            baseValues.push_back(value(op));
        for (int t = 0; t < trials; ++t) {
            std::vector<double> weights(ops.size());
            double total = 0.0;
            for (double& w : weights)
                total += (w = rng.uniform() + 1e-3);
            for (double& w : weights)
                w /= total;
            double bound = 0.0;
            for (std::size_t n = 0; n < ops.size(); ++n)
                bound += weights[n] * baseValues[n];
            double slack = value(mix(ops, weights)) - bound - kAxiomSlackTol;
            out.worstSlack = std::max(out.worstSlack, slack);
            if (slack > 0.0)
                out.pass = false;
        }
    };

    checkFaithfulness(report.faithfulnessMdc, mdcValue);
    checkMonotonicity(report.monotonicityMdc, mdcValue);
    checkConvexity(report.convexityMdc, mdcValue, 20);
    if (allChannels) {
        checkFaithfulness(report.faithfulnessWeight, weightValue);
        checkMonotonicity(report.monotonicityWeight, weightValue);
        checkConvexity(report.convexityWeight, weightValue, 20);
    }
    return report;
}

InequalityReport weight_inequality_suite(
    const std::vector<std::pair<KrausOperation, KrausOperation>>& pairs,
    const FeasibilityConfig& cfg, double bisectionTolerance) {
    InequalityReport report;
    const double slackTol = 2.0 * bisectionTolerance;
    for (const auto& [a, b] : pairs) {
        double wa = weight_of_imaginarity(a, cfg, bisectionTolerance).first;
        double wb = weight_of_imaginarity(b, cfg, bisectionTolerance).first;
        double bound = wa + wb - wa * wb;
        double composed =
            weight_of_imaginarity(compose(a, b), cfg, bisectionTolerance).first;
        double product =
            weight_of_imaginarity(tensor(a, b), cfg, bisectionTolerance).first;
        for (double lhs : {composed, product}) {
            double slack = lhs - bound - slackTol;
            report.worstSlack = std::max(report.worstSlack, slack);
            if (slack > 0.0)
                report.pass = false;
        }
    }
    return report;
}

ScalingCheckReport mixture_scaling_check(double s, const KrausOperation& freeOp,
                                         const KrausOperation& residual,
                                         const OptimizerConfig& cfg) {
    if (s < 0.0 || s > 1.0)
        throw std::invalid_argument("mixture_scaling_check: s must lie in [0, 1]");
    if (!classify_freeness(freeOp).isFree)
        throw std::invalid_argument("mixture_scaling_check: freeOp is not free");
    if (s > 0.0) {
        double wr = weight_of_imaginarity(residual).first;
        if (wr < 1.0 - 10.0 * kDefaultBisectionTolerance)
            throw std::invalid_argument(
                "mixture_scaling_check: residual does not have weight 1");
    }
    KrausOperation mixture = mix({freeOp, residual}, {1.0 - s, s});
    double mixtureValue = m_dc(mixture, 1.0, cfg).value;
    double expected = s * m_dc(residual, 1.0, cfg).value;
    bool pass = std::abs(mixtureValue - expected) <= kScalingCheckTol;
    return {pass, mixtureValue, expected};
}

}  // namespace imkit

#include "gjq/bessel_expansion.hpp"

#include <cmath>
#include <numbers>

#include "gjq/bessel_functions.hpp"
#include "gjq/elementary_expansion.hpp"
#include "jet.hpp"

namespace gjq {

namespace {

using Jet = detail::Jet<kBesselJetOrder>;
constexpr int kMaxA = 2 * kBesselMaxSeries + 1;
constexpr int kSeriesTerms = 20;  // terms of the entire series in theta^2

// coefficients of c_j(t) = sum_i (-1)^i binom(i+j, j) t^{2i} / (2i+2j)!,
// so that chi_j = 2 c_{j+1}(t) t / sin t
struct EntireSeries {
    double c[kMaxA + 2][kSeriesTerms];
    double sinc[kSeriesTerms];  // sin t / t
    EntireSeries() {
        for (int j = 0; j < kMaxA + 2; ++j) {
            for (int i = 0; i < kSeriesTerms; ++i) {
                double f = 1.0;
                for (int q = 2; q <= 2 * i + 2 * j; ++q) f *= q;
                double b = 1.0;
                for (int q = 1; q <= j; ++q) b = b * (i + q) / q;
                c[j][i] = ((i % 2) ? -b : b) / f;
            }
        }
        for (int k = 0; k < kSeriesTerms; ++k) {
            double f = 1.0;
            for (int q = 2; q <= 2 * k + 1; ++q) f *= q;
            sinc[k] = ((k % 2) ? -1.0 : 1.0) / f;
        }
    }
};

const EntireSeries& entire() {
    static const EntireSeries s;
    return s;
}

Jet horner_t2(const double* co, const Jet& t2) {
    Jet r = Jet::constant(co[kSeriesTerms - 1]);
    for (int i = kSeriesTerms - 2; i >= 0; --i) {
        r = r * t2;
        r.c[0] += co[i];
    }
    return r;
}

double poch(double a, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= a + i;
    return r;
}

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// truncated power series in d = 1/kappa
constexpr int kL = 2 * kBesselMaxTheta;
using Ser = std::array<double, kL>;

Ser smul(const Ser& a, const Ser& b, int L) {
    Ser r{};
    for (int k = 0; k < L; ++k) {
        double s = 0.0;
        for (int i = 0; i <= k; ++i) s += a[i] * b[k - i];
        r[k] = s;
    }
    return r;
}

}  // namespace

double coef_A1(double alpha, double beta, double theta, double cut) {
    const double a2 = alpha * alpha, b2 = beta * beta;
    if (theta >= cut) {
        return ((4.0 * a2 - 1.0) * (std::sin(theta) - theta * std::cos(theta)) +
                2.0 * theta * (a2 - b2) * (std::cos(theta) - 1.0)) /
               (8.0 * theta * std::sin(theta));
    }
    // (sin t - t cos t)/t^3 and (1 - cos t)/t^2 as even series
    const double t2 = theta * theta;
    double g1 = 0.0, g2 = 0.0, p = 1.0, f2 = 2.0, f3 = 6.0;
    for (int k = 1; k <= 12; ++k) {
        const double sg = (k % 2) ? 1.0 : -1.0;
        g1 += sg * 2.0 * k * p / f3;
        g2 += sg * p / f2;
        p *= t2;
        f2 *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
        f3 *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
    }
    const double chi = theta == 0.0 ? 1.0 : theta / std::sin(theta);
    return chi * theta * ((4.0 * a2 - 1.0) * g1 / 8.0 - (a2 - b2) * g2 / 4.0);
}

BesselCoeffSet::BesselCoeffSet(double alpha, double beta, double theta0, int series_order)
    : alpha_(alpha), theta0_(theta0), series_(std::min(series_order, kBesselMaxSeries)) {
    const int nA = 2 * series_ + 1;
    const auto& es = entire();
    const Jet th = Jet::variable(theta0);
    const Jet th2 = th * th;

    Jet chi[kMaxA + 1];
    const Jet sinc = horner_t2(es.sinc, th2);
    chi[0] = Jet::constant(1.0);
    for (int k = 1; k <= nA; ++k) chi[k] = (2.0 * horner_t2(es.c[k + 1], th2)) / sinc;

    // psi[j][r] = [w^r] (sum chi_k w^k)^{j + alpha - 1/2}
    Jet psi[kMaxA + 1][kMaxA + 1];
    for (int j = 0; j <= nA; ++j) {
        const double mu = j + alpha - 0.5;
        psi[j][0] = Jet::constant(1.0);
        for (int r = 1; r <= nA - j; ++r) {
            Jet acc;
            for (int k = 1; k <= r; ++k) acc += ((mu + 1.0) * k - r) * (chi[k] * psi[j][r - k]);
            psi[j][r] = acc * (1.0 / r);
        }
    }

    const Jet tan_half = detail::sin_jet<kBesselJetOrder>(theta0) /
                         (Jet::constant(1.0) + detail::cos_jet<kBesselJetOrder>(theta0));
    Jet pow2t[kMaxA + 1], powtan[kMaxA + 1];
    pow2t[0] = powtan[0] = Jet::constant(1.0);
    for (int i = 1; i <= nA; ++i) {
        pow2t[i] = pow2t[i - 1] * (2.0 * th);
        powtan[i] = powtan[i - 1] * tan_half;
    }

    const double hs = 0.5 * (alpha + beta), hd = 0.5 * (alpha - beta);
    std::vector<Jet> A(nA + 1);
    for (int m = 0; m <= nA; ++m) {
        Jet tot;
        double fact = 1.0;
        for (int j = 0; j <= m; ++j) {
            if (j > 0) fact *= j;
            const double coef = ((j % 2) ? -1.0 : 1.0) * poch(hs, j) * poch(hd, j) * poch(alpha + 0.5 + j, m - j) / fact;
            if (coef == 0.0) continue;
            tot += coef * (pow2t[m - j] * powtan[j] * psi[j][m - j]);
        }
        A[m] = tot;
    }

    std::vector<Jet> S(series_ + 1), T(series_ + 1);
    for (int m = 0; m <= series_; ++m) {
        if (m == 0) {
            S[0] = Jet::constant(1.0);
        } else {
            Jet acc;
            Jet mt = Jet::constant(1.0);  // (-theta)^j
            for (int j = 0; j <= m - 1; ++j) {
                acc += (-binom(m - 1, j) * std::ldexp(1.0, m - 1 - j) * poch(alpha + 2.0 + j, m - j - 1)) *
                       (A[j + m + 1] * mt);
                mt = mt * (-1.0 * th);
            }
            for (int i = 0; i < m - 1; ++i) acc = acc / th;
            S[m] = acc;
        }
        Jet acc;
        Jet mt = Jet::constant(1.0);
        for (int j = 0; j <= m; ++j) {
            acc += (binom(m, j) * std::ldexp(1.0, m - j) * poch(alpha + 1.0 + j, m - j)) * (A[j + m + 1] * mt);
            mt = mt * (-1.0 * th);
        }
        for (int i = 0; i < m; ++i) acc = acc / th;
        T[m] = acc;
    }

    for (const auto& a : A) A_.push_back(a.c);
    for (const auto& s : S) S_.push_back(s.c);
    for (const auto& t : T) T_.push_back(t.c);
}

namespace {
double jet_value(const std::array<double, kBesselJetOrder>& c, double t) {
    double r = 0.0;
    for (int i = kBesselJetOrder - 1; i >= 0; --i) r = r * t + c[i];
    return r;
}
double jet_derivative(const std::array<double, kBesselJetOrder>& c, double t) {
    double r = 0.0;
    for (int i = kBesselJetOrder - 1; i >= 1; --i) r = r * t + i * c[i];
    return r;
}
}  // namespace

double BesselCoeffSet::S_at(int m, double eps) const { return jet_value(S_[m], eps); }
double BesselCoeffSet::T_at(int m, double eps) const { return jet_value(T_[m], eps); }
double BesselCoeffSet::dS_at(int m, double eps) const { return jet_derivative(S_[m], eps); }
double BesselCoeffSet::dT_at(int m, double eps) const { return jet_derivative(T_[m], eps); }

double BesselCoeffSet::Y_at(int m, double eps) const {
    if (m == 0) return 1.0;
    const double th = theta0_ + eps;
    return S_at(m, eps) + (2.0 * alpha_ + 1.0) / (2.0 * th) * T_at(m - 1, eps) - dT_at(m - 1, eps);
}

double BesselCoeffSet::Z_at(int m, double eps) const {
    const double th = theta0_ + eps;
    return (2.0 * alpha_ + 1.0) * S_at(m, eps) + 2.0 * th * T_at(m, eps) + 2.0 * th * dS_at(m, eps);
}

namespace {
template <class F>
double kappa_sum(int s, double kappa, F f) {
    const double ik2 = 1.0 / (kappa * kappa);
    double r = 0.0;
    for (int m = s; m >= 0; --m) r = r * ik2 + f(m);
    return r;
}
}  // namespace

double BesselCoeffSet::S_sum(double kappa, double eps) const {
    return kappa_sum(series_, kappa, [&](int m) { return S_at(m, eps); });
}
double BesselCoeffSet::T_sum(double kappa, double eps) const {
    return kappa_sum(series_, kappa, [&](int m) { return T_at(m, eps); });
}
double BesselCoeffSet::Y_sum(double kappa, double eps) const {
    return kappa_sum(series_, kappa, [&](int m) { return Y_at(m, eps); });
}
double BesselCoeffSet::Z_sum(double kappa, double eps) const {
    return kappa_sum(series_, kappa, [&](int m) { return Z_at(m, eps); });
}

std::vector<double> BesselCoeffSet::theta_corrections(int M) const {
    M = std::min({M, series_ + 1, kBesselMaxTheta});
    const int L = 2 * M;
    const double a = alpha_;
    // Taylor coefficients of J_alpha(j + s) / J_{alpha+1}(j), as series in d through 1/j = d/theta0
    Ser iota{};
    iota[1] = 1.0 / theta0_;
    const Ser iota2 = smul(iota, iota, L);
    std::array<Ser, kL + 1> ak{};
    ak[1][0] = -1.0;
    for (int k = 0; k + 2 <= L; ++k) {
        const Ser t1 = smul(iota, ak[k + 1], L);
        const Ser t2 = smul(iota2, ak[k], L);
        Ser t3{}, t4{};
        if (k >= 1) t3 = smul(iota, ak[k - 1], L);
        if (k >= 2) t4 = smul(iota2, ak[k - 2], L);
        for (int i = 0; i < L; ++i) {
            const double acc = (k + 1.0) * (2.0 * k + 1.0) * t1[i] + ak[k][i] + (k * k - a * a) * t2[i] +
                               2.0 * t3[i] + t4[i];
            ak[k + 2][i] = -acc / ((k + 1.0) * (k + 2.0));
        }
    }

    std::vector<double> thetas;
    auto residual = [&](const std::vector<double>& th) {
        Ser delta{}, eps{};
        for (std::size_t i = 0; i < th.size(); ++i)
            if (2 * static_cast<int>(i) + 1 < L) delta[2 * i + 1] = th[i];
        for (int i = 1; i < L; ++i) eps[i] = delta[i - 1];
        // P = sum a_k delta^k, dP = sum k a_k delta^{k-1}
        Ser P{}, dP{}, pw{};
        pw[0] = 1.0;
        for (int k = 1; k < L; ++k) {
            const Ser t = smul(ak[k], pw, L);
            for (int i = 0; i < L; ++i) dP[i] += k * t[i];
            pw = smul(pw, delta, L);
            const Ser u = smul(ak[k], pw, L);
            for (int i = 0; i < L; ++i) P[i] += u[i];
        }
        // alpha iota / (1 + iota delta)
        const Ser x = smul(iota, delta, L);
        Ser inv{}, g{};
        inv[0] = g[0] = 1.0;
        for (int r = 1; r < L; ++r) {
            g = smul(g, x, L);
            for (int i = 0; i < L; ++i) inv[i] += ((r % 2) ? -g[i] : g[i]);
        }
        const Ser ai = smul(iota, inv, L);
        const Ser aiP = smul(ai, P, L);
        Ser Q{};
        for (int i = 0; i < L; ++i) Q[i] = a * aiP[i] - dP[i];
        // F(theta0 + eps) with F = sum_m F_m d^{2m}
        auto fser = [&](const std::vector<std::array<double, kBesselJetOrder>>& F) {
            Ser out{};
            for (std::size_t m = 0; m < F.size() && 2 * static_cast<int>(m) < L; ++m) {
                Ser pe{}, acc{};
                pe[0] = 1.0;
                for (int i = 0; i < kBesselJetOrder; ++i) {
                    for (int q = 0; q < L; ++q) acc[q] += F[m][i] * pe[q];
                    pe = smul(pe, eps, L);
                }
                for (int q = 2 * static_cast<int>(m); q < L; ++q) out[q] += acc[q - 2 * m];
            }
            return out;
        };
        const Ser Sd = fser(S_), Td = fser(T_);
        const Ser PS = smul(P, Sd, L), QT = smul(Q, Td, L);
        Ser R{};
        for (int i = 0; i < L; ++i) R[i] = PS[i] + (i > 0 ? QT[i - 1] : 0.0);
        return R;
    };
    for (int i = 1; i <= M; ++i) {
        std::vector<double> trial = thetas;
        trial.push_back(0.0);
        const Ser R = residual(trial);
        thetas.push_back(R[2 * i - 1]);
    }
    return thetas;
}

BesselExpansion::BesselExpansion(const JacobiParams& p, ExpansionOrders orders)
    : p_(p), kappa_(p.kappa()), orders_(orders) {
    orders_.bessel_series = std::min(orders_.bessel_series, kBesselMaxSeries);
    orders_.bessel_theta = std::min({orders_.bessel_theta, kBesselMaxTheta, orders_.bessel_series + 1});
    log_front_ = std::log(g_front_factor(p));
    log_mass_ratio_ = log_mass_ratio(p);
}

double BesselExpansion::eval_poly(double theta, double delta) const {
    if (!(theta > 0.0) || theta > std::numbers::pi - delta)
        throw Error(ErrorCode::DomainTooCloseToEndpoint, "theta outside (0, pi - delta]");
    const BesselCoeffSet c(p_.alpha, p_.beta, theta, orders_.bessel_series);
    const double z = kappa_ * theta;
    const double W = bessel_j(p_.alpha, z) * c.S_sum(kappa_, 0.0) +
                     bessel_j(p_.alpha + 1.0, z) * c.T_sum(kappa_, 0.0) / kappa_;
    const double lden = p_.alpha * std::log(std::sin(0.5 * theta)) + p_.beta * std::log(std::cos(0.5 * theta));
    return std::exp(log_front_ - lden) * std::sqrt(theta / std::sin(theta)) * W;
}

double BesselExpansion::eval_U(double theta, double delta) const {
    if (!(theta > 0.0) || theta > std::numbers::pi - delta)
        throw Error(ErrorCode::DomainTooCloseToEndpoint, "theta outside (0, pi - delta]");
    const BesselCoeffSet c(p_.alpha, p_.beta, theta, orders_.bessel_series);
    const double z = kappa_ * theta;
    return std::sqrt(theta) * (bessel_j(p_.alpha, z) * c.S_sum(kappa_, 0.0) +
                               bessel_j(p_.alpha + 1.0, z) * c.T_sum(kappa_, 0.0) / kappa_);
}

double BesselExpansion::eval_U_derivative(double theta, double delta) const {
    if (!(theta > 0.0) || theta > std::numbers::pi - delta)
        throw Error(ErrorCode::DomainTooCloseToEndpoint, "theta outside (0, pi - delta]");
    const BesselCoeffSet c(p_.alpha, p_.beta, theta, orders_.bessel_series);
    const double z = kappa_ * theta;
    const double j0 = bessel_j(p_.alpha, z), j1 = bessel_j(p_.alpha + 1.0, z);
    return -kappa_ * std::sqrt(theta) *
           (j1 * c.Y_sum(kappa_, 0.0) - j0 * c.Z_sum(kappa_, 0.0) / (2.0 * theta * kappa_));
}

ThetaNode BesselExpansion::node(int m, double* omega) const {
    if (m < 1 || m > p_.n) throw Error(ErrorCode::IndexOutOfRange, "Bessel node index out of range");
    const double j = bessel_zero(p_.alpha, m).j;
    ThetaNode nd;
    nd.k = p_.n + 1 - m;
    nd.branch = Branch::BesselRight;
    nd.theta0 = j / kappa_;
    if (nd.theta0 > std::numbers::pi - 0.2)
        throw Error(ErrorCode::IndexOutOfRange, "Bessel node too close to x = -1");
    const BesselCoeffSet c(p_.alpha, p_.beta, nd.theta0, orders_.bessel_series);
    const auto th = c.theta_corrections(orders_.bessel_theta);
    const double ik2 = 1.0 / (kappa_ * kappa_);
    double eps = 0.0;
    for (auto it = th.rbegin(); it != th.rend(); ++it) eps = (eps + *it) * ik2;
    nd.eps = eps;
    nd.theta = nd.theta0 + eps;
    nd.x = std::cos(nd.theta);
    if (omega) *omega = scaled_weight(c, j, eps);
    return nd;
}

ThetaNode BesselExpansion::node(int m) const { return node(m, nullptr); }

double BesselExpansion::scaled_weight(const BesselCoeffSet& c, double j, double eps) const {
    const double th = c.theta0() + eps;
    const auto J = bessel_pair_near_zero(p_.alpha, j, bessel_j(p_.alpha + 1.0, j), kappa_ * eps);
    const double dU = -kappa_ * std::sqrt(th) *
                      (J.j_alpha1 * c.Y_sum(kappa_, eps) - J.j_alpha * c.Z_sum(kappa_, eps) / (2.0 * th * kappa_));
    return std::exp(std::numbers::ln2 + log_mass_ratio_ - 2.0 * std::log(std::fabs(dU)));
}

double BesselExpansion::scaled_weight(int m, double eps) const {
    const double j = bessel_zero(p_.alpha, m).j;
    const BesselCoeffSet c(p_.alpha, p_.beta, j / kappa_, orders_.bessel_series);
    return scaled_weight(c, j, eps);
}

double eval_poly_bessel(const JacobiParams& p, double theta, double delta) {
    return BesselExpansion(p).eval_poly(theta, delta);
}

double eval_U_derivative(const JacobiParams& p, double theta, double delta) {
    return BesselExpansion(p).eval_U_derivative(theta, delta);
}

ThetaNode node_bessel(const JacobiParams& p, int m, ExpansionOrders orders) {
    return BesselExpansion(p, orders).node(m);
}

}  // namespace gjq

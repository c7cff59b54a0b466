#include "selberg/toy_models.hpp"

#include <cmath>
#include <numbers>

namespace selberg {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

AvoidedCrossingModel::AvoidedCrossingModel(double t0, Complex p2) : t0_(t0), p2_(p2) {
    if (!(t0 > 0.0)) throw InvalidModel("t0 must be positive");
    if (p2.real() == 0.0) throw InvalidModel("Re p2 must be nonzero");
}

double AvoidedCrossingModel::a_minus(double alpha, double s) const {
    const double sgn = p2_.real() > 0.0 ? 1.0 : -1.0;
    const Complex w = p(alpha) - Complex(0.0, s);
    return phi_minus(t0_ + s) + 2.0 * std::arg(sgn * w) - sgn * kPi;
}

double AvoidedCrossingModel::f(double alpha, double s) const {
    const double ell = std::log(kPi * alpha);
    return 2.0 * t0_ * ell + 2.0 * s * ell - a_minus(alpha, s);
}

AvoidedCrossingResult avoided_crossing_slope(const AvoidedCrossingModel& model, int k) {
    const double target = -2.0 * kPi * k;
    const double sgn = model.p2().real() > 0.0 ? 1.0 : -1.0;
    auto on_curve = [&](double alpha) { return model.f(alpha, model.p(alpha).imag()) - target; };

    const double guess = std::exp((phi_minus(model.t0()) - sgn * kPi + target) / (2.0 * model.t0())) / kPi;
    double lo = std::log(0.5 * guess), hi = std::log(2.0 * guess);
    if (!(on_curve(std::exp(lo)) < 0.0 && on_curve(std::exp(hi)) > 0.0)) throw NoBracket("avoided crossing bracket");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (on_curve(std::exp(mid)) < 0.0 ? lo : hi) = mid;
    }
    AvoidedCrossingResult out;
    out.k = k;
    out.alpha_k = std::exp(0.5 * (lo + hi));
    if (!(out.alpha_k < 1.0)) throw OutOfRange("alpha_k >= 1");

    // middle branch of the level set near (alpha_k, t0 + Im p)
    auto offset_at = [&](double alpha) {
        const Complex pa = model.p(alpha);
        const double w = 40.0 * std::abs(pa.real());
        double a = pa.imag() - w, b = pa.imag() + w;
        const double fa = model.f(alpha, a) - target;
        const double fb = model.f(alpha, b) - target;
        if (!(fa * fb < 0.0)) throw NonConvergence("level set leaves the crossing window");
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;
            const double fm = model.f(alpha, mid) - target;
            ((fm < 0.0) == (fa < 0.0) ? a : b) = mid;
        }
        return 0.5 * (a + b);
    };
    const double delta = 1e-3 * out.alpha_k;
    out.slope = (offset_at(out.alpha_k + delta) - offset_at(out.alpha_k - delta)) / (2.0 * delta);
    out.t_k = model.t0() + offset_at(out.alpha_k);
    const Complex p2 = model.p2();
    out.predicted_slope = 2.0 * out.alpha_k * (p2.imag() - 0.5 * model.t0() * p2.real());
    out.steepness_ratio =
        std::abs(out.slope) / (out.t_k / (out.alpha_k * std::abs(std::log(kPi * out.alpha_k))));
    return out;
}

LoopModel::LoopModel(double t0, Complex p2, Complex rplus2, Complex rinf2, Complex gamma_tilde0)
    : t0_(t0), p2_(p2), rplus2_(rplus2), rinf2_(rinf2), gamma_tilde0_(gamma_tilde0) {
    if (!(t0 > 0.0)) throw InvalidModel("t0 must be positive");
    const Complex coeffs[] = {p2_, r002(), rinf2_, rplus2_};
    for (int i = 0; i < 4; ++i) {
        if (std::abs(coeffs[i]) == 0.0) throw InvalidModel("loop coefficients must be nonzero");
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(coeffs[i] - coeffs[j]) < 1e-12) throw InvalidModel("loop coefficients must be distinct");
    }
    if (std::abs(rinf2_.real()) > 1e-14 * std::abs(rinf2_)) throw InvalidModel("r_0inf must be purely imaginary");
    const double g = std::abs(gamma_tilde0_);
    if (!(g > 0.0 && g < 1.0)) throw InvalidModel("|gamma tilde| must lie in (0, 1)");
    const double lhs = g * std::abs(rinf2_ - rplus2_);
    const double rhs = std::abs(rinf2_ - p2_);
    if (std::abs(lhs - rhs) > 1e-10 * rhs) throw InvalidModel("C_+ is not unimodular where C_0inf vanishes");
}

LoopModel LoopModel::tangent_circle(double t0, double rinf2_imag, double radius, Complex p2, double phase) {
    const Complex rinf2(0.0, rinf2_imag);
    const Complex center = rinf2 - radius;
    const Complex d = p2 - center;
    if (!(std::abs(d) < radius)) throw InvalidModel("p2 must lie inside the loop circle");
    const Complex rplus2 = center + radius * radius / std::conj(d);
    const double lambda = std::abs(d) / radius;
    return {t0, p2, rplus2, rinf2, std::polar(lambda, phase)};
}

LoopZeta loop_zeta(const LoopModel& m, double alpha, Complex u_seed) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw OutOfRange("alpha must lie in (0, 1)");
    const double ell = std::log(kPi * alpha);
    const double a2 = alpha * alpha;
    const Complex p = m.p2() * a2;
    const Complex rp = m.rplus2() * a2;
    const Complex kk = std::exp(Complex(0.0, 2.0 * m.t0() * ell)) * m.gamma_tilde0();
    auto z_of = [&](Complex u) {
        const Complex e = std::exp(u);
        return (e * p - kk * rp) / (e - kk);
    };

    LoopZeta out;
    Complex u = u_seed;
    double prev = -1.0;
    bool converged = false;
    int polish = 0;
    for (int it = 1; it <= 200; ++it) {
        const Complex next = -2.0 * z_of(u) * ell;
        const double dist = std::abs(next - u);
        u = next;
        out.iterations = it;
        if (prev > 1e-300 && dist > 1e-15 * a2) {
            const double ratio = dist / prev;
            out.contraction_ratio = std::max(out.contraction_ratio, ratio);
            if (ratio >= 0.5) throw NotContracting("loop map ratio " + std::to_string(ratio));
        }
        if (converged) {
            if (dist == 0.0 || dist >= prev || ++polish >= 4) break;
        } else if (dist <= 1e-15 * std::max(a2, std::abs(u))) {
            converged = true;
        }
        prev = dist;
    }
    if (!converged) throw NonConvergence("loop fixed point did not converge");
    out.u = u;
    out.z = z_of(u);
    out.zeta = m.beta0() + out.z;
    return out;
}

std::vector<double> loop_touchings(const LoopModel& m, const std::vector<int>& ks) {
    const double rho = m.rinf2().imag();
    const double s0 = std::arg(m.gamma_tilde0() * (m.rinf2() - m.rplus2()) / (m.rinf2() - m.p2()));
    auto a_of = [&](double alpha) {
        const double ell = std::log(kPi * alpha);
        return 2.0 * m.t0() * ell + 2.0 * rho * alpha * alpha * ell + s0;
    };
    auto slope = [&](double alpha) {
        const double ell = std::log(kPi * alpha);
        return 2.0 * m.t0() / alpha + 2.0 * rho * (2.0 * alpha * ell + alpha);
    };
    std::vector<double> out;
    for (int k : ks) {
        const double target = -2.0 * kPi * k;
        const double guess = std::exp((target - s0) / (2.0 * m.t0())) / kPi;
        double lo = 0.5 * guess, hi = std::min(2.0 * guess, 0.999);
        if (!(slope(lo) > 0.0 && slope(hi) > 0.0)) throw NonMonotone("touching condition not monotone in alpha");
        if (!(a_of(lo) < target && a_of(hi) > target)) throw NoBracket("touching bracket");
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            (a_of(mid) < target ? lo : hi) = mid;
        }
        out.push_back(0.5 * (lo + hi));
    }
    return out;
}

double loop_validity_radius(const LoopModel& m, double alpha_start, double factor) {
    double good = 0.0;
    for (double a = alpha_start; a < 1.0; a *= factor) {
        try {
            loop_zeta(m, a);
            good = a;
        } catch (const NotContracting&) {
            break;
        } catch (const NonConvergence&) {
            break;
        }
    }
    return good;
}

double loop_winding(const LoopModel& m, double alpha_hi, double alpha_lo) {
    if (!(alpha_lo > 0.0 && alpha_lo < alpha_hi)) throw OutOfRange("need 0 < alpha_lo < alpha_hi");
    auto ratio_at = [&](double x) {
        const double a = std::exp(-x);
        const Complex z = loop_zeta(m, a).z;
        return (z - m.rplus2() * a * a) / (z - m.p2() * a * a);
    };
    PhaseTracker tracker(ratio_at, -std::log(alpha_hi), 0.0, 0.05 / m.t0());
    return tracker.advance(-std::log(alpha_lo));
}

}  // namespace selberg

#include "hbarlab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hbarlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double arg_step(const Complex& from, const Complex& to) {
    // Nearest-branch continuation: arg of the ratio is the unique
    // representative in (-pi, pi].
    return std::arg(to / from);
}

}  // namespace

WindingTrace winding_trace(const std::vector<Complex>& values) {
    if (values.size() < 2) throw Undersampled("winding_number: need at least 2 samples");

    WindingTrace tr;
    tr.samples.reserve(values.size());
    const double n = static_cast<double>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const Complex& v = values[i];
        if (std::abs(v) < kDegeneracyFloor) {
            std::ostringstream os;
            os << "winding_number: sample " << i << " has modulus " << std::abs(v)
               << " below floor " << kDegeneracyFloor;
            throw DegenerateValue(os.str());
        }
        tr.samples.emplace_back(static_cast<double>(i) / n, v);
    }

    double total = 0.0;
    auto step = [&](const Complex& a, const Complex& b) {
        const double d = arg_step(a, b);
        if (std::abs(d) > tr.max_step) tr.max_step = std::abs(d);
        total += d;
    };
    for (std::size_t i = 0; i + 1 < values.size(); ++i) step(values[i], values[i + 1]);
    // Close the loop if the sequence does not repeat its first value.
    if (std::abs(values.back() - values.front()) > 1e-9 * std::abs(values.front()))
        step(values.back(), values.front());

    if (tr.max_step >= kPi / 2.0) {
        std::ostringstream os;
        os << "winding_number: argument jump " << tr.max_step << " >= pi/2, refine the sampling";
        throw Undersampled(os.str());
    }

    tr.total_turns = total / kTwoPi;
    tr.winding = static_cast<int>(std::lround(tr.total_turns));
    tr.residual = std::abs(tr.total_turns - tr.winding);
    if (tr.residual >= 0.1) {
        std::ostringstream os;
        os << "winding_number: rounding residual " << tr.residual << " turns >= 0.1";
        throw Undersampled(os.str());
    }
    return tr;
}

int winding_number(const std::vector<Complex>& values) {
    return winding_trace(values).winding;
}

WindingTrace winding_number_adaptive(const std::function<Complex(double)>& f,
                                     int initial_samples) {
    int n = initial_samples < 64 ? 64 : initial_samples;
    constexpr int kMaxSamples = 1 << 20;

    auto attempt = [&](int m) {
        std::vector<Complex> vals(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            vals[static_cast<std::size_t>(i)] = f(static_cast<double>(i) / m);
        return winding_trace(vals);
    };

    // Refine until a doubling confirms the result: guards against aliased
    // samplings that pass the jump test by accident.
    while (true) {
        try {
            const WindingTrace coarse = attempt(n);
            if (n >= kMaxSamples) return coarse;
            const WindingTrace fine = attempt(std::min(2 * n, kMaxSamples));
            if (fine.winding == coarse.winding) return fine;
        } catch (const Undersampled&) {
            if (n >= kMaxSamples) throw;
        }
        n *= 2;
    }
}

namespace {

// Gauss-Legendre order 10 nodes/weights on [-1, 1].
constexpr double kGlNode[5] = {
    0.1488743389816312108848260,
    0.4333953941292471907992659,
    0.6794095682990244062343274,
    0.8650633666889845107320967,
    0.9739065285171717200779640,
};
constexpr double kGlWeight[5] = {
    0.2955242247147528701738930,
    0.2692667193099963550912269,
    0.2190863625159820439955349,
    0.1494513491505805931457763,
    0.0666713443086881375935688,
};

double gl10(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 5; ++i)
        s += kGlWeight[i] * (f(c - h * kGlNode[i]) + f(c + h * kGlNode[i]));
    return s * h;
}

double integrate_rec(const std::function<double(double)>& f, double a, double b,
                     double whole, double tol, int depth, int max_depth) {
    const double m = 0.5 * (a + b);
    const double left = gl10(f, a, m);
    const double right = gl10(f, m, b);
    const double err = std::abs(left + right - whole);
    if (err <= tol || err <= 1e-16 * std::abs(left + right)) return left + right;
    if (depth >= max_depth) {
        std::ostringstream os;
        os << "integrate: tolerance not reached on [" << a << ", " << b
           << "] at depth " << depth << " (local error " << err << ")";
        throw QuadratureFailure(os.str());
    }
    return integrate_rec(f, a, m, left, 0.5 * tol, depth + 1, max_depth) +
           integrate_rec(f, m, b, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    return integrate_rec(f, a, b, gl10(f, a, b), abs_tol, 0, max_depth);
}

double boundary_line_integral(const std::function<CVec(double)>& u,
                              const std::function<CVec(double)>& du,
                              double abs_tol,
                              const std::vector<double>& breakpoints) {
    auto integrand = [&](double t) {
        const CVec p = u(t);
        const CVec v = du(t);
        double s = 0.0;
        for (std::size_t j = 0; j < p.dim(); ++j)
            s += (std::conj(p[j]) * v[j]).imag();
        return 0.5 * s;
    };
    std::vector<double> cuts = breakpoints;
    cuts.push_back(0.0);
    cuts.push_back(1.0);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] - cuts[i] < 1e-300) continue;
        total += integrate(integrand, cuts[i], cuts[i + 1], abs_tol / cuts.size());
    }
    return total;
}

Complex complex_det(const std::vector<CVec>& columns) {
    const std::size_t n = columns.size();
    for (const auto& c : columns)
        if (c.dim() != n) throw DomainError("complex_det: column dimension mismatch");

    // Column-major working copy; LU with partial pivoting on rows.
    std::vector<Complex> m(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) m[j * n + i] = columns[j][i];

    Complex det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(m[k * n + k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double a = std::abs(m[k * n + i]);
            if (a > best) {
                best = a;
                piv = i;
            }
        }
        if (best == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m[j * n + k], m[j * n + piv]);
            det = -det;
        }
        const Complex d = m[k * n + k];
        det *= d;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex factor = m[k * n + i] / d;
            for (std::size_t j = k + 1; j < n; ++j) m[j * n + i] -= factor * m[j * n + k];
        }
    }
    return det;
}

}  // namespace hbarlab

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "hbarlab/errors.hpp"

namespace hbarlab {

using Complex = std::complex<double>;

/// A point of C^n, stored contiguously as 2n reals (std::complex<double> is
/// two adjacent doubles). Homogeneous points of CP^n are stored as a CVec of
/// dimension n+1 with nonzero norm.
class CVec {
 public:
    CVec() = default;
    explicit CVec(std::size_t n) : z_(n) {}
    CVec(std::initializer_list<Complex> init) : z_(init) {}
    explicit CVec(std::vector<Complex> z) : z_(std::move(z)) {}

    std::size_t dim() const { return z_.size(); }
    Complex& operator[](std::size_t i) { return z_[i]; }
    const Complex& operator[](std::size_t i) const { return z_[i]; }

    const std::vector<Complex>& components() const { return z_; }

    /// View of the underlying 2n reals (re0, im0, re1, im1, ...).
    const double* re_im() const { return reinterpret_cast<const double*>(z_.data()); }

    double norm_sq() const {
        double s = 0.0;
        for (const auto& c : z_) s += std::norm(c);
        return s;
    }
    double norm() const { return std::sqrt(norm_sq()); }

    bool finite() const {
        for (const auto& c : z_)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
        return true;
    }

    void check_finite() const {
        if (!finite()) throw DomainError("CVec has non-finite components");
    }

    CVec& operator+=(const CVec& o) {
        for (std::size_t i = 0; i < z_.size(); ++i) z_[i] += o.z_[i];
        return *this;
    }
    CVec& operator-=(const CVec& o) {
        for (std::size_t i = 0; i < z_.size(); ++i) z_[i] -= o.z_[i];
        return *this;
    }
    CVec& operator*=(double s) {
        for (auto& c : z_) c *= s;
        return *this;
    }

    friend CVec operator+(CVec a, const CVec& b) { return a += b; }
    friend CVec operator-(CVec a, const CVec& b) { return a -= b; }
    friend CVec operator*(double s, CVec a) { return a *= s; }

    friend double distance(const CVec& a, const CVec& b) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.z_.size(); ++i) s += std::norm(a.z_[i] - b.z_[i]);
        return std::sqrt(s);
    }

    /// Hermitian inner product <a, b> = sum conj(a_i) b_i.
    friend Complex hermitian_dot(const CVec& a, const CVec& b) {
        Complex s = 0.0;
        for (std::size_t i = 0; i < a.z_.size(); ++i) s += std::conj(a.z_[i]) * b.z_[i];
        return s;
    }

    /// Standard symplectic form omega_std(a, b) = sum Im(conj(a_i) b_i)
    /// = sum (x_i dy_i terms); the imaginary part of the Hermitian product.
    friend double omega_std(const CVec& a, const CVec& b) {
        return hermitian_dot(a, b).imag();
    }

 private:
    std::vector<Complex> z_;
};

/// Chordal Fubini-Study distance between homogeneous points:
/// sin of the angle between the lines, in [0, 1]. Scale invariant.
inline double fs_chordal_distance(const CVec& a, const CVec& b) {
    const double na = a.norm_sq(), nb = b.norm_sq();
    if (na <= 0.0 || nb <= 0.0) throw DomainError("fs_chordal_distance: zero representative");
    const double c = std::norm(hermitian_dot(a, b)) / (na * nb);
    return std::sqrt(std::max(0.0, 1.0 - c));
}

}  // namespace hbarlab

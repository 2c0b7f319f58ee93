#pragma once

// Conformal weights (exact) and modular S-matrices (double complex) for
// su(N)_k, U(1)_N and Spin(2L)_1. Row/column order of every S-matrix is the
// enumeration order of the factor: enumerate_su, charges 0..N-1, and
// vacuum/vector/spinor/cospinor.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kscoset/affine.hpp"
#include "kscoset/rational.hpp"

namespace kscoset {

using Complex = std::complex<double>;

/// h = (lambda, lambda + 2 rho) / (2 (N + k)), evaluated on the partition.
inline RationalWeight h_su(const AffineWeight& w) {
    const int n = w.rank();
    if (n == 1) return RationalWeight(0);
    const auto rows = w.partition();
    std::int64_t sum_sq = 0;
    std::int64_t size = 0;
    std::int64_t rho_term = 0;
    for (int i = 0; i < n; ++i) {
        const std::int64_t r = rows[static_cast<std::size_t>(i)];
        sum_sq += r * r;
        size += r;
        rho_term += r * (n + 1 - 2 * (i + 1));
    }
    const RationalWeight casimir = RationalWeight(sum_sq + rho_term) - RationalWeight(size * size, n);
    return casimir / RationalWeight(2 * (n + w.level()));
}

/// h = xbar^2 / (2N) with xbar the centered representative.
inline RationalWeight h_u1(const U1Charge& c) {
    const std::int64_t x = c.centered();
    return RationalWeight(x * x, 2 * c.modulus());
}

inline RationalWeight h_spin(const SpinLabel& s) {
    switch (s.kind()) {
        case SpinKind::vacuum: return RationalWeight(0);
        case SpinKind::vector: return RationalWeight(1, 2);
        case SpinKind::spinor:
        case SpinKind::cospinor: return RationalWeight(s.half_dim(), 8);
    }
    return RationalWeight(0);
}

/// Dense modular S-matrix of one chiral factor.
class SMatrix {
public:
    SMatrix() = default;
    explicit SMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
        if (entries_.rows() != entries_.cols()) throw std::invalid_argument("S-matrix must be square");
    }

    std::size_t dimension() const { return static_cast<std::size_t>(entries_.rows()); }
    Complex operator()(std::size_t row, std::size_t col) const {
        return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
    const Eigen::MatrixXcd& matrix() const { return entries_; }

    /// max |(S S^dagger - I)_{ij}|
    double unitarity_residual() const {
        const Eigen::MatrixXcd product = entries_ * entries_.adjoint();
        return (product - Eigen::MatrixXcd::Identity(entries_.rows(), entries_.cols())).cwiseAbs().maxCoeff();
    }

    /// max |(S - S^T)_{ij}|
    double symmetry_residual() const { return (entries_ - entries_.transpose()).cwiseAbs().maxCoeff(); }

private:
    Eigen::MatrixXcd entries_;
};

namespace detail {

// exp(2 pi i * num / den) with num reduced mod den first.
inline Complex root_of_unity(std::int64_t num, std::int64_t den) {
    std::int64_t r = num % den;
    if (r < 0) r += den;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

// Shifted partition coordinates l_i = lambda_i + N - i (i = 1..N).
inline std::vector<std::int64_t> shifted_rows(const AffineWeight& w) {
    const auto rows = w.partition();
    std::vector<std::int64_t> out(rows.size());
    const auto n = static_cast<std::int64_t>(rows.size());
    for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i)] + n - 1 - i;
    return out;
}

}  // namespace detail

/// Kac-Peterson S-matrix of su(N)_k. The Weyl-group sum is evaluated as
///   exp(2 pi i |x||y| / (N K)) * det[ exp(-2 pi i x_a y_b / K) ],  K = N + k,
/// on shifted partitions x, y; the overall constant is fixed by S_00 > 0 and
/// unit row norm.
inline SMatrix s_su(int rank_n, int level) {
    const auto weights = enumerate_su(rank_n, level);
    const auto dim = static_cast<Eigen::Index>(weights.size());
    if (rank_n == 1) return SMatrix(Eigen::MatrixXcd::Ones(1, 1));

    const std::int64_t kk = rank_n + level;
    std::vector<std::vector<std::int64_t>> shifted;
    shifted.reserve(weights.size());
    for (const auto& w : weights) shifted.push_back(detail::shifted_rows(w));

    Eigen::MatrixXcd raw(dim, dim);
    Eigen::MatrixXcd block(rank_n, rank_n);
    for (Eigen::Index a = 0; a < dim; ++a) {
        const auto& x = shifted[static_cast<std::size_t>(a)];
        std::int64_t sx = 0;
        for (auto v : x) sx += v;
        for (Eigen::Index b = 0; b <= a; ++b) {
            const auto& y = shifted[static_cast<std::size_t>(b)];
            std::int64_t sy = 0;
            for (auto v : y) sy += v;
            for (int r = 0; r < rank_n; ++r) {
                for (int c = 0; c < rank_n; ++c) {
                    block(r, c) = detail::root_of_unity(-x[static_cast<std::size_t>(r)] * y[static_cast<std::size_t>(c)], kk);
                }
            }
            const Complex value = detail::root_of_unity(sx * sy, rank_n * kk) * block.determinant();
            raw(a, b) = value;
            raw(b, a) = value;
        }
    }
    const Complex s00 = raw(0, 0);
    const Complex phase = s00 / std::abs(s00);
    const double norm = raw.row(0).norm();
    return SMatrix(raw / (phase * norm));
}

/// S_{xy} = exp(-2 pi i x y / N) / sqrt(N).
inline SMatrix s_u1(std::int64_t modulus) {
    if (modulus < 1) throw std::invalid_argument("U(1) modulus must be >= 1");
    const auto dim = static_cast<Eigen::Index>(modulus);
    const double scale = 1.0 / std::sqrt(static_cast<double>(modulus));
    Eigen::MatrixXcd entries(dim, dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
        for (Eigen::Index y = 0; y < dim; ++y) {
            entries(x, y) = scale * detail::root_of_unity(-static_cast<std::int64_t>(x) * y, modulus);
        }
    }
    return SMatrix(std::move(entries));
}

/// Single entry of s_u1 without building the matrix.
inline Complex s_u1_entry(std::int64_t modulus, std::int64_t x, std::int64_t y) {
    return detail::root_of_unity(-((x % modulus) * (y % modulus)), modulus) / std::sqrt(static_cast<double>(modulus));
}

/// Spin(2L)_1 S-matrix with sigma = i^{-L}; Spin(2)_1 agrees with U(1)_4
/// under vacuum, vector, spinor, cospinor = 0, 2, 1, 3.
inline SMatrix s_spin(int half_dim) {
    if (half_dim < 1) throw std::invalid_argument("Spin(2L) requires L >= 1");
    static constexpr Complex powers[] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};  // i^{-L}
    const Complex sigma = powers[half_dim % 4];
    Eigen::MatrixXcd entries(4, 4);
    entries << 1, 1, 1, 1,
               1, 1, -1, -1,
               1, -1, sigma, -sigma,
               1, -1, -sigma, sigma;
    return SMatrix(entries * 0.5);
}

/// Quantum dimension S_{0,i} / S_{0,0}.
inline double qdim(const SMatrix& s, std::size_t index) {
    if (index >= s.dimension()) {
        throw std::out_of_range("qdim index " + std::to_string(index) + " out of range for dimension " +
                                std::to_string(s.dimension()));
    }
    return (s(0, index) / s(0, 0)).real();
}

}  // namespace kscoset

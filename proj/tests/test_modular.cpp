#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

#include "kscoset/modular.hpp"
#include "oracle.hpp"

using namespace kscoset;

namespace {

std::vector<int> labels_of(const AffineWeight& w) { return {w.labels().begin(), w.labels().end()}; }

}  // namespace

TEST(ConformalWeight, SuExamples) {
    EXPECT_EQ(h_su(AffineWeight::vacuum(4, 3)), RationalWeight(0));
    EXPECT_EQ(h_su(AffineWeight(2, 1, {1})), RationalWeight(1, 4));
    EXPECT_EQ(h_su(AffineWeight(2, 2, {2})), RationalWeight(1, 2));
}

TEST(ConformalWeight, Su2MatchesSpinFormula) {
    for (int k = 0; k <= 8; ++k) {
        for (int a = 0; a <= k; ++a) {
            // h = j(j+1)/(k+2) with j = a/2
            const RationalWeight expected(a * (a + 2), 4 * (k + 2));
            EXPECT_EQ(h_su(AffineWeight(2, k, {a})), expected);
        }
    }
}

TEST(ConformalWeight, SuMatchesInverseCartanRoute) {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 0; k <= 4; ++k) {
            for (const auto& w : enumerate_su(n, k)) {
                EXPECT_EQ(h_su(w), oracle::h_su_dynkin(labels_of(w), k)) << to_string(w);
                EXPECT_GE(h_su(w), RationalWeight(0));
            }
        }
    }
}

TEST(ConformalWeight, SimpleCurrentSpin) {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 0; k <= 4; ++k) {
            const auto current = tau_su(AffineWeight::vacuum(n, k), 1);
            const RationalWeight expected = mod1(RationalWeight(k * (n - 1), 2 * n));
            EXPECT_EQ(mod1(oracle::h_su_dynkin(labels_of(current), k)), expected);
            EXPECT_EQ(mod1(h_su(current)), expected);
        }
    }
}

TEST(ConformalWeight, U1AndSpin) {
    EXPECT_EQ(h_u1(U1Charge(8, 0)), RationalWeight(0));
    EXPECT_EQ(h_u1(U1Charge(8, 2)), RationalWeight(1, 4));
    EXPECT_EQ(h_u1(U1Charge(8, 6)), RationalWeight(1, 4));
    // agrees mod 1 with x^2 / 2N on 0 <= x < N
    for (std::int64_t x = 0; x < 24; ++x) {
        EXPECT_EQ(mod1(h_u1(U1Charge(24, x))), mod1(RationalWeight(x * x, 48)));
    }
    EXPECT_EQ(h_spin(SpinLabel(4, SpinKind::vacuum)), RationalWeight(0));
    EXPECT_EQ(h_spin(SpinLabel(4, SpinKind::spinor)), RationalWeight(1, 2));
    EXPECT_EQ(h_spin(SpinLabel(1, SpinKind::vector)), RationalWeight(1, 2));
    EXPECT_EQ(h_spin(SpinLabel(3, SpinKind::cospinor)), RationalWeight(3, 8));
}

TEST(SMatrixSu, TrivialFactor) {
    const auto s = s_su(1, 7);
    ASSERT_EQ(s.dimension(), 1u);
    EXPECT_NEAR(std::abs(s(0, 0) - Complex(1, 0)), 0.0, 1e-15);
}

TEST(SMatrixSu, Su2ClosedForm) {
    for (int k = 0; k <= 8; ++k) {
        const auto s = s_su(2, k);
        for (int a = 0; a <= k; ++a) {
            for (int b = 0; b <= k; ++b) {
                EXPECT_NEAR(std::abs(s(a, b) - oracle::s_su2(k, a, b)), 0.0, 1e-12) << k << " " << a << " " << b;
            }
        }
    }
    const auto s = s_su(2, 1);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(s(1, 1).real(), -r, 1e-14);
}

TEST(SMatrixSu, UnitarySymmetricPositiveFirstRow) {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 0; k + n <= 9; ++k) {
            const auto s = s_su(n, k);
            EXPECT_LT(s.unitarity_residual(), 1e-9) << n << "," << k;
            EXPECT_LT(s.symmetry_residual(), 1e-12) << n << "," << k;
            for (std::size_t j = 0; j < s.dimension(); ++j) {
                EXPECT_GT(s(0, j).real(), 0.0);
                EXPECT_NEAR(s(0, j).imag(), 0.0, 1e-12);
            }
        }
    }
    EXPECT_LT(s_su(4, 3).unitarity_residual(), 1e-9);
}

TEST(SMatrixSu, SquareIsChargeConjugation) {
    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k <= 4; ++k) {
            const auto s = s_su(n, k);
            const Eigen::MatrixXcd sq = s.matrix() * s.matrix();
            const auto ws = enumerate_su(n, k);
            for (std::size_t a = 0; a < ws.size(); ++a) {
                const std::size_t conj = weight_index(conjugate_su(ws[a]));
                for (std::size_t b = 0; b < ws.size(); ++b) {
                    const double expected = b == conj ? 1.0 : 0.0;
                    EXPECT_NEAR(std::abs(sq(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) - expected),
                                0.0, 1e-9);
                }
            }
        }
    }
}

TEST(SMatrixSu, QuantumDimensionsMatchProductOfSines) {
    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k <= 4; ++k) {
            const auto s = s_su(n, k);
            const auto ws = enumerate_su(n, k);
            for (std::size_t i = 0; i < ws.size(); ++i) {
                EXPECT_NEAR(qdim(s, i), oracle::qdim_sines(labels_of(ws[i]), k), 1e-8) << to_string(ws[i]);
                EXPECT_GE(qdim(s, i), 1.0 - 1e-9);
            }
        }
    }
    EXPECT_NEAR(qdim(s_su(2, 2), 1), std::sqrt(2.0), 1e-9);
    EXPECT_NEAR(qdim(s_su(3, 2), 0), 1.0, 1e-15);
}

// S_{lambda, tau^p(0)} = exp(2 pi i p r_lambda / N) S_{lambda, 0}
TEST(SMatrixSu, SimpleCurrentColumnsArePhases) {
    for (int n = 2; n <= 5; ++n) {
        for (int k = 1; k <= 3; ++k) {
            const auto s = s_su(n, k);
            const auto ws = enumerate_su(n, k);
            for (int p = 0; p < n; ++p) {
                const std::size_t col = weight_index(tau_su(AffineWeight::vacuum(n, k), p));
                for (std::size_t a = 0; a < ws.size(); ++a) {
                    const double angle = 2.0 * std::numbers::pi * p * static_cast<double>(box_count(ws[a])) / n;
                    const Complex expected = std::polar(1.0, angle) * s(a, 0);
                    EXPECT_NEAR(std::abs(s(a, col) - expected), 0.0, 1e-10);
                }
            }
        }
    }
}

TEST(SMatrixU1, SmallCasesAndNorms) {
    EXPECT_NEAR(std::abs(s_u1(1)(0, 0) - Complex(1, 0)), 0.0, 1e-15);
    const auto s2 = s_u1(2);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(s2(0, 0) - r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s2(1, 1) + r), 0.0, 1e-15);
    const auto s12 = s_u1(12);
    for (std::size_t x = 0; x < 12; ++x) EXPECT_NEAR(s12.matrix().row(static_cast<Eigen::Index>(x)).norm(), 1.0, 1e-12);
    for (std::int64_t n = 1; n <= 64; ++n) {
        const auto s = s_u1(n);
        EXPECT_LT(s.unitarity_residual(), 1e-9);
        EXPECT_LT(s.symmetry_residual(), 1e-12);
        for (std::size_t x = 0; x < s.dimension(); ++x) {
            EXPECT_NEAR(qdim(s, x), 1.0, 1e-12);
            EXPECT_NEAR(std::abs(s_u1_entry(n, 3, static_cast<std::int64_t>(x)) - s(3 % s.dimension(), x)), 0.0, 1e-12);
        }
    }
}

TEST(SMatrixSpin, TableProperties) {
    const auto s = s_spin(3);
    for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(std::abs(s(0, j) - 0.5), 0.0, 1e-15);
    EXPECT_LT(s_spin(6).unitarity_residual(), 1e-12);
    for (int l = 1; l <= 8; ++l) {
        const auto sl = s_spin(l);
        EXPECT_LT(sl.unitarity_residual(), 1e-12);
        EXPECT_LT(sl.symmetry_residual(), 1e-12);
        for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(qdim(sl, j), 1.0, 1e-12);
        if (l % 2 == 0) {
            EXPECT_NEAR(sl.matrix().imag().cwiseAbs().maxCoeff(), 0.0, 1e-15);
        }
    }
    // Spin(2)_1 is U(1)_4 with vacuum, vector, spinor, cospinor = 0, 2, 1, 3
    const int charge[] = {0, 2, 1, 3};
    const auto s1 = s_spin(1);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) EXPECT_NEAR(std::abs(s1(a, b) - s_u1_entry(4, charge[a], charge[b])), 0.0, 1e-14);
    }
}

TEST(QuantumDimension, OutOfRangeThrows) {
    EXPECT_THROW(qdim(s_spin(2), 4), std::out_of_range);
    EXPECT_THROW(qdim(s_su(3, 1), 3), std::out_of_range);
}

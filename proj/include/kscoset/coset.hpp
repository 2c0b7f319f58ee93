#pragma once

// Grassmannian coset G(m,n,k) = [su(m+n)_k x Spin(2mn)_1] / [su(m)_{n+k} x
// su(n)_{m+k} x U(1)_{mn(m+n)(m+n+k)}]: selection rules, the vacuum-pair
// (field identification) group, its action on coset labels, b-coefficients
// and statistical dimensions, and the resolved primary spectrum.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "kscoset/affine.hpp"
#include "kscoset/modular.hpp"
#include "kscoset/rational.hpp"

namespace kscoset {

inline constexpr std::int64_t kDefaultBudget = 1'000'000;

/// Thrown when the candidate label space of a coset exceeds the budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::int64_t estimated, std::int64_t budget)
        : std::runtime_error("enumeration budget exceeded: " + std::to_string(estimated) +
                             " candidate labels > budget " + std::to_string(budget)),
          estimated_(estimated),
          budget_(budget) {}

    std::int64_t estimated() const { return estimated_; }
    std::int64_t budget() const { return budget_; }

private:
    std::int64_t estimated_;
    std::int64_t budget_;
};

class CosetSpec {
public:
    CosetSpec(int m, int n, int k) : m_(m), n_(n), k_(k) {
        if (m < 1 || n < 1 || k < 1) throw std::invalid_argument("coset parameters m, n, k must be positive");
    }

    int m() const { return m_; }
    int n() const { return n_; }
    int k() const { return k_; }

    int big_rank() const { return m_ + n_; }
    int big_level() const { return k_; }
    int spin_half_dim() const { return m_ * n_; }
    int su_m_level() const { return n_ + k_; }
    int su_n_level() const { return m_ + k_; }
    std::int64_t u1_modulus() const {
        return static_cast<std::int64_t>(m_) * n_ * (m_ + n_) * (m_ + n_ + k_);
    }

    /// The level-rank partner G(k, n, m).
    CosetSpec dual() const { return CosetSpec(k_, n_, m_); }

    /// |su(m+n)_k| * 4 * |su(m)_{n+k}| * |su(n)_{m+k}| * u1_modulus
    std::int64_t candidate_count() const {
        return su_size(big_rank(), big_level()) * 4 * su_size(m_, su_m_level()) * su_size(n_, su_n_level()) *
               u1_modulus();
    }

    auto operator<=>(const CosetSpec&) const = default;

private:
    int m_;
    int n_;
    int k_;
};

inline std::string to_string(const CosetSpec& spec) {
    return "G(" + std::to_string(spec.m()) + "," + std::to_string(spec.n()) + "," + std::to_string(spec.k()) + ")";
}

/// c = 3mnk / (m+n+k)
inline RationalWeight central_charge(const CosetSpec& spec) {
    return RationalWeight(3LL * spec.m() * spec.n() * spec.k(), spec.m() + spec.n() + spec.k());
}

/// Coset label (lambda0, pi0; lam1, lam2, qdot).
struct CosetField {
    AffineWeight lambda0;
    SpinLabel pi0;
    AffineWeight lam1;
    AffineWeight lam2;
    U1Charge qdot;

    auto operator<=>(const CosetField&) const = default;
};

inline std::string to_string(const CosetField& f) {
    return "(" + to_string(f.lambda0) + ", " + to_string(f.pi0) + "; " + to_string(f.lam1) + ", " +
           to_string(f.lam2) + ", " + to_string(f.qdot) + ")";
}

inline CosetField vacuum_field(const CosetSpec& spec) {
    return {AffineWeight::vacuum(spec.big_rank(), spec.big_level()),
            SpinLabel(spec.spin_half_dim(), SpinKind::vacuum),
            AffineWeight::vacuum(spec.m(), spec.su_m_level()),
            AffineWeight::vacuum(spec.n(), spec.su_n_level()),
            U1Charge(spec.u1_modulus(), 0)};
}

inline void validate_field(const CosetField& f, const CosetSpec& spec) {
    auto check_su = [](const AffineWeight& w, int rank, int level, const char* what) {
        if (w.rank() != rank || w.level() != level) {
            throw std::invalid_argument(std::string(what) + " must be a weight of su(" + std::to_string(rank) + ")_" +
                                        std::to_string(level) + ", got " + to_string(w));
        }
    };
    check_su(f.lambda0, spec.big_rank(), spec.big_level(), "lambda0");
    check_su(f.lam1, spec.m(), spec.su_m_level(), "lam1");
    check_su(f.lam2, spec.n(), spec.su_n_level(), "lam2");
    if (f.pi0.half_dim() != spec.spin_half_dim()) {
        throw std::invalid_argument("pi0 must be a Spin(" + std::to_string(2 * spec.spin_half_dim()) + ")_1 label");
    }
    if (f.qdot.modulus() != spec.u1_modulus()) {
        throw std::invalid_argument("qdot must have modulus " + std::to_string(spec.u1_modulus()));
    }
}

namespace detail {

inline bool congruent(std::int64_t a, std::int64_t b, std::int64_t modulus) {
    std::int64_t d = (a - b) % modulus;
    return d == 0;
}

// (1/2) n m (m+n) eps; n m (m+n) is even for all positive m, n.
inline std::int64_t spinor_shift(const CosetSpec& spec, bool spinor) {
    const std::int64_t nmmn = static_cast<std::int64_t>(spec.n()) * spec.m() * (spec.m() + spec.n());
    if (nmmn % 2 != 0) throw std::logic_error("n m (m+n) is odd; the spinor term is not integral");
    return spinor ? nmmn / 2 : 0;
}

// Right-hand sides of the two congruences for qdot, before reduction.
inline std::pair<std::int64_t, std::int64_t> selection_targets(const CosetField& f, const CosetSpec& spec) {
    const std::int64_t m = spec.m();
    const std::int64_t n = spec.n();
    const std::int64_t shift = spinor_shift(spec, f.pi0.is_spinor());
    const std::int64_t r0 = box_count(f.lambda0);
    return {-m * r0 + (m + n) * box_count(f.lam1) + shift, n * r0 - (m + n) * box_count(f.lam2) + shift};
}

}  // namespace detail

/// Congruences on qdot modulo m(m+n) and n(m+n) coming from the centers of
/// su(m), su(n) and su(m+n); eps = 1 exactly for spinor/cospinor pi0.
inline bool selection_check(const CosetField& f, const CosetSpec& spec) {
    validate_field(f, spec);
    const std::int64_t m = spec.m();
    const std::int64_t n = spec.n();
    const auto [first, second] = detail::selection_targets(f, spec);
    const std::int64_t q = f.qdot.value();
    return detail::congruent(q, first, m * (m + n)) && detail::congruent(q, second, n * (m + n));
}

/// Selection rules of the sub-coset su(m+n)_k / [su(m)_k x su(n)_k x U(1)_{mnk(m+n)}].
inline bool selection_check_h3(const AffineWeight& lambda0, const AffineWeight& lam1, const AffineWeight& lam2,
                               const U1Charge& q, const CosetSpec& spec) {
    const std::int64_t m = spec.m();
    const std::int64_t n = spec.n();
    const std::int64_t k = spec.k();
    if (lambda0.rank() != m + n || lambda0.level() != k || lam1.rank() != m || lam1.level() != k ||
        lam2.rank() != n || lam2.level() != k) {
        throw std::invalid_argument("H3 labels must be su(m+n)_k, su(m)_k, su(n)_k weights");
    }
    if (q.modulus() != m * n * k * (m + n)) {
        throw std::invalid_argument("H3 charge must have modulus m n k (m+n)");
    }
    const std::int64_t r0 = box_count(lambda0);
    return detail::congruent(q.value(), -m * r0 + (m + n) * box_count(lam1), m * (m + n)) &&
           detail::congruent(q.value(), n * r0 - (m + n) * box_count(lam2), n * (m + n));
}

/// All labels passing selection_check, in lexicographic order.
inline std::vector<CosetField> enumerate_exp(const CosetSpec& spec, std::int64_t budget = kDefaultBudget) {
    const std::int64_t candidates = spec.candidate_count();
    if (candidates > budget) throw BudgetExceeded(candidates, budget);

    const std::int64_t m = spec.m();
    const std::int64_t n = spec.n();
    const std::int64_t modulus = spec.u1_modulus();
    const std::int64_t step = m * (m + n);

    const auto big = enumerate_su(spec.big_rank(), spec.big_level());
    const auto spins = enumerate_spin(spec.spin_half_dim());
    const auto small_m = enumerate_su(spec.m(), spec.su_m_level());
    const auto small_n = enumerate_su(spec.n(), spec.su_n_level());

    std::vector<CosetField> out;
    for (const auto& lambda0 : big) {
        for (const auto& pi0 : spins) {
            for (const auto& lam1 : small_m) {
                for (const auto& lam2 : small_n) {
                    CosetField f{lambda0, pi0, lam1, lam2, U1Charge(modulus, 0)};
                    const auto [first, second] = detail::selection_targets(f, spec);
                    std::int64_t start = first % step;
                    if (start < 0) start += step;
                    // q runs over the residue class of the first congruence
                    for (std::int64_t q = start; q < modulus; q += step) {
                        if (detail::congruent(q, second, n * (m + n))) {
                            f.qdot = U1Charge(modulus, q);
                            out.push_back(f);
                        }
                    }
                }
            }
        }
    }
    return out;
}

/// Exact coset weight h_i - h_alpha, i = (lambda0, pi0), alpha = (lam1, lam2, qdot).
inline RationalWeight coset_h(const CosetField& f) {
    return h_su(f.lambda0) + h_spin(f.pi0) - h_su(f.lam1) - h_su(f.lam2) - h_u1(f.qdot);
}

inline RationalWeight coset_h_mod1(const CosetField& f, const CosetSpec& spec) {
    validate_field(f, spec);
    return mod1(coset_h(f));
}

/// Field identification current labelled by (j, i):
///   (tau^{j+i}(1), tau^{jn+im}(1); tau^j(1), tau^i(1), (nj - mi)(m+n+k)).
struct VpElement {
    std::int64_t j = 0;
    std::int64_t i = 0;
    CosetField image;
};

/// Componentwise action of the identification current (j, i) on a label.
inline CosetField vp_act(std::int64_t j, std::int64_t i, const CosetField& f, const CosetSpec& spec) {
    const std::int64_t m = spec.m();
    const std::int64_t n = spec.n();
    const std::int64_t charge = (n * j - m * i) * (m + n + spec.k());
    return {tau_su(f.lambda0, j + i), tau_spin(f.pi0, j * n + i * m), tau_su(f.lam1, j), tau_su(f.lam2, i),
            f.qdot.shifted(charge)};
}

inline CosetField vp_act(const VpElement& w, const CosetField& f, const CosetSpec& spec) {
    validate_field(f, spec);
    return vp_act(w.j, w.i, f, spec);
}

/// Result of checking the group axioms on the composition table.
struct GroupAudit {
    bool closed = true;
    bool has_identity = true;
    bool has_inverses = true;
    bool commutative = true;
    bool orders_divide = true;

    bool ok() const { return closed && has_identity && has_inverses && commutative && orders_divide; }
};

/// The finite abelian group of identification currents, deduplicated by image.
class VpGroup {
public:
    explicit VpGroup(const CosetSpec& spec) : spec_(spec) {
        const std::int64_t m = spec.m();
        const std::int64_t n = spec.n();
        // Component orders: su(m+n) rotation m+n, spin 2, su(m) m, su(n) n,
        // charge steps n(m+n+k) and m(m+n+k) have orders m(m+n) and n(m+n).
        const std::int64_t side = std::lcm(std::lcm(std::int64_t{2}, m * (m + n)), n * (m + n));
        const CosetField vacuum = vacuum_field(spec);
        for (std::int64_t j = 0; j < side; ++j) {
            for (std::int64_t i = 0; i < side; ++i) {
                CosetField image = vp_act(j, i, vacuum, spec);
                if (index_.find(image) == index_.end()) {
                    index_.emplace(image, elements_.size());
                    elements_.push_back({j, i, std::move(image)});
                }
            }
        }
    }

    const CosetSpec& spec() const { return spec_; }
    const std::vector<VpElement>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    const VpElement& operator[](std::size_t idx) const { return elements_[idx]; }

    std::optional<std::size_t> find(const CosetField& image) const {
        const auto it = index_.find(image);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Index of a * b, obtained by acting with a on the image of b.
    std::size_t compose(std::size_t a, std::size_t b) const {
        const auto product = find(vp_act(elements_[a], elements_[b].image, spec_));
        if (!product) throw std::logic_error("vacuum-pair set is not closed under composition");
        return *product;
    }

    std::size_t element_order(std::size_t a) const {
        std::size_t power = a;
        std::size_t ord = 1;
        while (elements_[power].image != elements_[0].image) {
            power = compose(a, power);
            ++ord;
            if (ord > order()) throw std::logic_error("element order exceeds group order");
        }
        return ord;
    }

    GroupAudit audit() const {
        GroupAudit out;
        const std::size_t size = order();
        out.has_identity = size > 0 && elements_[0].image == vacuum_field(spec_);
        std::vector<std::vector<std::size_t>> table(size, std::vector<std::size_t>(size, 0));
        for (std::size_t a = 0; a < size; ++a) {
            for (std::size_t b = 0; b < size; ++b) {
                const auto product = find(vp_act(elements_[a], elements_[b].image, spec_));
                if (!product) {
                    out.closed = false;
                    return out;
                }
                table[a][b] = *product;
            }
        }
        for (std::size_t a = 0; a < size; ++a) {
            bool inverse = false;
            for (std::size_t b = 0; b < size; ++b) {
                if (table[a][b] != table[b][a]) out.commutative = false;
                if (table[a][b] == 0) inverse = true;
            }
            if (!inverse) out.has_inverses = false;
            if (size % element_order(a) != 0) out.orders_divide = false;
        }
        return out;
    }

private:
    CosetSpec spec_;
    std::vector<VpElement> elements_;
    std::map<CosetField, std::size_t> index_;
};

inline VpGroup vp_group(const CosetSpec& spec) { return VpGroup(spec); }

/// Order of the stabilizer {w : w(f) = f}.
inline std::int64_t stabilizer_order(const CosetField& f, const VpGroup& group) {
    validate_field(f, group.spec());
    std::int64_t t = 0;
    for (const auto& w : group.elements()) {
        if (vp_act(w.j, w.i, f, group.spec()) == f) ++t;
    }
    return t;
}

/// S-matrices of the five chiral factors of one coset. The U(1) factor is
/// evaluated entrywise from its closed form.
class CosetKernel {
public:
    explicit CosetKernel(const CosetSpec& spec)
        : spec_(spec),
          s_big_(s_su(spec.big_rank(), spec.big_level())),
          s_spin_(s_spin(spec.spin_half_dim())),
          s_m_(s_su(spec.m(), spec.su_m_level())),
          s_n_(s_su(spec.n(), spec.su_n_level())) {}

    const CosetSpec& spec() const { return spec_; }
    const SMatrix& s_big() const { return s_big_; }
    const SMatrix& s_spin_matrix() const { return s_spin_; }
    const SMatrix& s_m() const { return s_m_; }
    const SMatrix& s_n() const { return s_n_; }

    Complex s_u1(const U1Charge& x, const U1Charge& y) const {
        return s_u1_entry(spec_.u1_modulus(), x.value(), y.value());
    }

    /// S_{i,j} for i = (lambda0, pi0).
    Complex s_numerator(const CosetField& a, const CosetField& b) const {
        return s_big_(weight_index(a.lambda0), weight_index(b.lambda0)) *
               s_spin_(static_cast<std::size_t>(a.pi0.index()), static_cast<std::size_t>(b.pi0.index()));
    }

    /// Sdot_{alpha,beta} for alpha = (lam1, lam2, qdot).
    Complex s_denominator(const CosetField& a, const CosetField& b) const {
        return s_m_(weight_index(a.lam1), weight_index(b.lam1)) * s_n_(weight_index(a.lam2), weight_index(b.lam2)) *
               s_u1(a.qdot, b.qdot);
    }

    /// d_{lambda0} d_{lam1} d_{lam2}
    double qdim_product(const CosetField& f) const {
        return qdim(s_big_, weight_index(f.lambda0)) * qdim(s_m_, weight_index(f.lam1)) *
               qdim(s_n_, weight_index(f.lam2));
    }

private:
    CosetSpec spec_;
    SMatrix s_big_;
    SMatrix s_spin_;
    SMatrix s_m_;
    SMatrix s_n_;
};

/// sum_{w in VPS} S_{i, w(1)} conj(Sdot_{alpha, w(1)}), unreduced complex value.
inline Complex b_sum(const CosetField& f, const VpGroup& group, const CosetKernel& kernel) {
    Complex total{0.0, 0.0};
    for (const auto& w : group.elements()) {
        total += kernel.s_numerator(f, w.image) * std::conj(kernel.s_denominator(f, w.image));
    }
    return total;
}

/// b-coefficient of a label in exp. Throws for labels violating the
/// selection rules or when the imaginary part exceeds 1e-9.
inline double b_coeff(const CosetField& f, const VpGroup& group, const CosetKernel& kernel) {
    if (!selection_check(f, group.spec())) {
        throw std::invalid_argument("b-coefficient requested for a label outside exp: " + to_string(f));
    }
    const Complex value = b_sum(f, group, kernel);
    if (std::abs(value.imag()) > 1e-9) {
        throw std::logic_error("b-coefficient has imaginary part " + std::to_string(value.imag()));
    }
    return value.real();
}

/// d = b(f) / b(vacuum).
inline double stat_dim(const CosetField& f, const VpGroup& group, const CosetKernel& kernel) {
    return b_coeff(f, group, kernel) / b_coeff(vacuum_field(group.spec()), group, kernel);
}

/// Vacuum pair (x, y; z) of U(1)_{2a+2b} inside U(1)_{2a} x U(1)_{2b}.
struct U1Triple {
    U1Charge x;
    U1Charge y;
    U1Charge z;

    auto operator<=>(const U1Triple&) const = default;
};

/// The 2 gcd(a,b) triples (a i/g, b i/g; (a+b) i/g), 0 <= i < 2g.
inline std::vector<U1Triple> u1_coset_vps(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1) throw std::invalid_argument("u1_coset_vps requires a, b >= 1");
    const std::int64_t g = std::gcd(a, b);
    std::vector<U1Triple> out;
    out.reserve(static_cast<std::size_t>(2 * g));
    for (std::int64_t i = 0; i < 2 * g; ++i) {
        out.push_back({U1Charge(2 * a, a / g * i), U1Charge(2 * b, b / g * i), U1Charge(2 * (a + b), (a + b) / g * i)});
    }
    return out;
}

/// b(1,1) of the U(1) sub-coset, summed directly over its vacuum pairs.
inline double u1_coset_b11(std::int64_t a, std::int64_t b) {
    Complex total{0.0, 0.0};
    for (const auto& t : u1_coset_vps(a, b)) {
        total += s_u1_entry(2 * a, 0, t.x.value()) * s_u1_entry(2 * b, 0, t.y.value()) *
                 std::conj(s_u1_entry(2 * (a + b), 0, t.z.value()));
    }
    return total.real();
}

/// One VP orbit of exp.
struct SpectrumRow {
    CosetField representative;
    std::int64_t orbit_size = 0;
    std::int64_t stabilizer = 0;
    double dimension = 0.0;        // statistical dimension of the reducible label
    double piece_dimension = 0.0;  // dimension / stabilizer
    RationalWeight h_mod1;
};

struct ResolvedSpectrum {
    CosetSpec spec{1, 1, 1};
    RationalWeight central_charge;
    std::int64_t exp_size = 0;
    std::int64_t group_order = 0;
    std::vector<SpectrumRow> rows;
    std::int64_t irrep_count = 0;
};

/// Partitions exp into VP orbits; every orbit with stabilizer of order t
/// contributes t irreducible pieces of dimension d / t.
inline ResolvedSpectrum resolve_spectrum(const CosetSpec& spec, std::int64_t budget = kDefaultBudget) {
    const auto exp = enumerate_exp(spec, budget);
    const VpGroup group(spec);
    const CosetKernel kernel(spec);
    const double b_vacuum = b_coeff(vacuum_field(spec), group, kernel);

    ResolvedSpectrum out;
    out.spec = spec;
    out.central_charge = central_charge(spec);
    out.exp_size = static_cast<std::int64_t>(exp.size());
    out.group_order = static_cast<std::int64_t>(group.order());

    std::vector<bool> visited(exp.size(), false);
    for (std::size_t idx = 0; idx < exp.size(); ++idx) {
        if (visited[idx]) continue;
        const CosetField& f = exp[idx];
        std::int64_t orbit = 0;
        std::int64_t t = 0;
        for (const auto& w : group.elements()) {
            const CosetField image = vp_act(w.j, w.i, f, spec);
            if (image == f) ++t;
            const auto it = std::lower_bound(exp.begin(), exp.end(), image);
            if (it == exp.end() || *it != image) throw std::logic_error("VP action left exp at " + to_string(image));
            const auto pos = static_cast<std::size_t>(it - exp.begin());
            if (!visited[pos]) {
                visited[pos] = true;
                ++orbit;
            }
        }
        SpectrumRow row;
        row.representative = f;
        row.orbit_size = orbit;
        row.stabilizer = t;
        row.dimension = b_coeff(f, group, kernel) / b_vacuum;
        row.piece_dimension = row.dimension / static_cast<double>(t);
        row.h_mod1 = mod1(coset_h(f));
        out.irrep_count += t;
        out.rows.push_back(std::move(row));
    }
    std::stable_sort(out.rows.begin(), out.rows.end(), [](const SpectrumRow& a, const SpectrumRow& b) {
        if (a.h_mod1 != b.h_mod1) return a.h_mod1 < b.h_mod1;
        const auto da = std::llround(a.piece_dimension * 1e9);
        const auto db = std::llround(b.piece_dimension * 1e9);
        if (da != db) return da < db;
        return a.representative < b.representative;
    });
    return out;
}

}  // namespace kscoset

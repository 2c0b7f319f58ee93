#pragma once

// Primary labels for the three kinds of chiral factor appearing in the
// Grassmannian coset: su(N)_k integrable weights, Spin(2L)_1 labels and
// U(1)_N charges, together with the simple-current action tau.

#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kscoset {

/// Binomial coefficient C(n, r); exact for the sizes used here.
inline std::int64_t binomial(std::int64_t n, std::int64_t r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    std::int64_t out = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        out = out * (n - r + i) / i;
    }
    return out;
}

/// Number of integrable su(N)_k weights, C(N+k-1, N-1).
inline std::int64_t su_size(int rank_n, int level) {
    return binomial(rank_n + level - 1, rank_n - 1);
}

/// Integrable highest weight of su(N) at level k, stored by its finite
/// Dynkin labels a_1..a_{N-1}. The affine label a_0 = k - sum(a_i).
class AffineWeight {
public:
    AffineWeight() = default;

    AffineWeight(int rank_n, int level, std::vector<int> labels)
        : rank_n_(rank_n), level_(level), labels_(std::move(labels)) {
        if (rank_n_ < 1) throw std::invalid_argument("su(N) requires N >= 1");
        if (level_ < 0) throw std::invalid_argument("level must be non-negative");
        if (static_cast<int>(labels_.size()) != rank_n_ - 1) {
            throw std::invalid_argument("su(" + std::to_string(rank_n_) + ") weight needs " +
                                        std::to_string(rank_n_ - 1) + " Dynkin labels");
        }
        int sum = 0;
        for (int a : labels_) {
            if (a < 0) throw std::invalid_argument("Dynkin labels must be non-negative");
            sum += a;
        }
        if (sum > level_) throw std::invalid_argument("Dynkin labels exceed the level");
    }

    static AffineWeight vacuum(int rank_n, int level) {
        return AffineWeight(rank_n, level, std::vector<int>(rank_n > 0 ? rank_n - 1 : 0, 0));
    }

    int rank() const { return rank_n_; }
    int level() const { return level_; }
    std::span<const int> labels() const { return labels_; }

    int affine_label() const {
        return level_ - std::accumulate(labels_.begin(), labels_.end(), 0);
    }

    /// Extended labels (a_0, a_1, ..., a_{N-1}).
    std::vector<int> extended_labels() const {
        std::vector<int> ext;
        ext.reserve(labels_.size() + 1);
        ext.push_back(affine_label());
        ext.insert(ext.end(), labels_.begin(), labels_.end());
        return ext;
    }

    /// Young diagram rows lambda_i = sum_{j >= i} a_j, i = 1..N (last row 0).
    std::vector<int> partition() const {
        std::vector<int> rows(static_cast<std::size_t>(rank_n_), 0);
        int running = 0;
        for (int i = rank_n_ - 2; i >= 0; --i) {
            running += labels_[static_cast<std::size_t>(i)];
            rows[static_cast<std::size_t>(i)] = running;
        }
        return rows;
    }

    bool is_vacuum() const {
        for (int a : labels_) {
            if (a != 0) return false;
        }
        return true;
    }

    auto operator<=>(const AffineWeight&) const = default;

private:
    int rank_n_ = 1;
    int level_ = 0;
    std::vector<int> labels_;
};

/// "su(3)_1:(1,0)"; su(1) weights print as "su(1)_k:()".
inline std::string to_string(const AffineWeight& w) {
    std::string out = "su(" + std::to_string(w.rank()) + ")_" + std::to_string(w.level()) + ":(";
    bool first = true;
    for (int a : w.labels()) {
        if (!first) out += ",";
        out += std::to_string(a);
        first = false;
    }
    return out + ")";
}

/// All weights of su(N)_k in lexicographic order of their label sequences.
inline std::vector<AffineWeight> enumerate_su(int rank_n, int level) {
    if (rank_n < 1 || level < 0) throw std::invalid_argument("enumerate_su requires N >= 1, k >= 0");
    std::vector<AffineWeight> out;
    out.reserve(static_cast<std::size_t>(su_size(rank_n, level)));
    std::vector<int> labels(static_cast<std::size_t>(rank_n - 1), 0);

    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos == labels.size()) {
            out.emplace_back(rank_n, level, labels);
            return;
        }
        for (int a = 0; a <= remaining; ++a) {
            labels[pos] = a;
            self(self, pos + 1, remaining - a);
        }
        labels[pos] = 0;
    };
    rec(rec, 0, level);
    return out;
}

/// Position of w in enumerate_su(w.rank(), w.level()), computed by ranking
/// instead of search.
inline std::size_t weight_index(const AffineWeight& w) {
    std::int64_t index = 0;
    int remaining = w.level();
    const auto labels = w.labels();
    const auto positions = static_cast<std::int64_t>(labels.size());
    for (std::int64_t p = 0; p < positions; ++p) {
        const std::int64_t rest = positions - p - 1;
        const int a = labels[static_cast<std::size_t>(p)];
        for (int v = 0; v < a; ++v) {
            // tuples of length `rest` with sum <= remaining - v
            index += binomial(rest + remaining - v, rest);
        }
        remaining -= a;
    }
    return static_cast<std::size_t>(index);
}

/// Number of boxes of the Young diagram, sum_j j * a_j.
inline std::int64_t box_count(const AffineWeight& w) {
    std::int64_t boxes = 0;
    const auto labels = w.labels();
    for (std::size_t j = 0; j < labels.size(); ++j) {
        boxes += static_cast<std::int64_t>(j + 1) * labels[j];
    }
    return boxes;
}

/// Simple-current action tau^power on the extended labels. Orientation:
/// tau moves a_{i-1} into slot i, so tau(vacuum) = k * Lambda_1.
inline AffineWeight tau_su(const AffineWeight& w, std::int64_t power) {
    const int n = w.rank();
    const auto ext = w.extended_labels();
    std::int64_t shift = power % n;
    if (shift < 0) shift += n;
    std::vector<int> rotated(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto src = static_cast<std::size_t>(((i - shift) % n + n) % n);
        rotated[static_cast<std::size_t>(i)] = ext[src];
    }
    return AffineWeight(n, w.level(), std::vector<int>(rotated.begin() + 1, rotated.end()));
}

/// Charge conjugation a_i -> a_{N-i}.
inline AffineWeight conjugate_su(const AffineWeight& w) {
    const auto labels = w.labels();
    return AffineWeight(w.rank(), w.level(), std::vector<int>(labels.rbegin(), labels.rend()));
}

enum class SpinKind : int { vacuum = 0, vector = 1, spinor = 2, cospinor = 3 };

inline const char* to_string(SpinKind kind) {
    switch (kind) {
        case SpinKind::vacuum: return "vacuum";
        case SpinKind::vector: return "vector";
        case SpinKind::spinor: return "spinor";
        case SpinKind::cospinor: return "cospinor";
    }
    return "?";
}

/// Level-1 primary of Spin(2L). Index order: vacuum, vector, spinor, cospinor.
class SpinLabel {
public:
    SpinLabel() = default;
    SpinLabel(int half_dim, SpinKind kind) : half_dim_(half_dim), kind_(kind) {
        if (half_dim_ < 1) throw std::invalid_argument("Spin(2L) requires L >= 1");
    }

    int half_dim() const { return half_dim_; }
    SpinKind kind() const { return kind_; }
    int index() const { return static_cast<int>(kind_); }
    bool is_spinor() const { return kind_ == SpinKind::spinor || kind_ == SpinKind::cospinor; }

    auto operator<=>(const SpinLabel&) const = default;

private:
    int half_dim_ = 1;
    SpinKind kind_ = SpinKind::vacuum;
};

inline std::string to_string(const SpinLabel& s) {
    return "spin(" + std::to_string(2 * s.half_dim()) + ")_1:" + to_string(s.kind());
}

inline std::vector<SpinLabel> enumerate_spin(int half_dim) {
    return {SpinLabel(half_dim, SpinKind::vacuum), SpinLabel(half_dim, SpinKind::vector),
            SpinLabel(half_dim, SpinKind::spinor), SpinLabel(half_dim, SpinKind::cospinor)};
}

/// Fusion with the vector: odd powers swap vacuum<->vector and spinor<->cospinor.
inline SpinLabel tau_spin(const SpinLabel& s, std::int64_t power) {
    if (power % 2 == 0) return s;
    static constexpr SpinKind swapped[] = {SpinKind::vector, SpinKind::vacuum, SpinKind::cospinor,
                                           SpinKind::spinor};
    return SpinLabel(s.half_dim(), swapped[s.index()]);
}

/// Primary of the rank-one lattice theory with `modulus` primaries.
class U1Charge {
public:
    U1Charge() = default;
    U1Charge(std::int64_t modulus, std::int64_t value) : modulus_(modulus) {
        if (modulus_ < 1) throw std::invalid_argument("U(1) modulus must be >= 1");
        value_ = value % modulus_;
        if (value_ < 0) value_ += modulus_;
    }

    std::int64_t modulus() const { return modulus_; }
    std::int64_t value() const { return value_; }

    /// Representative in (-N/2, N/2].
    std::int64_t centered() const { return 2 * value_ > modulus_ ? value_ - modulus_ : value_; }

    U1Charge shifted(std::int64_t delta) const { return U1Charge(modulus_, value_ + delta % modulus_); }

    auto operator<=>(const U1Charge&) const = default;

private:
    std::int64_t modulus_ = 1;
    std::int64_t value_ = 0;
};

inline std::string to_string(const U1Charge& c) {
    return "u1(" + std::to_string(c.modulus()) + "):" + std::to_string(c.value());
}

}  // namespace kscoset

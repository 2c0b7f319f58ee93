#pragma once

// Spectral fingerprints of resolved coset spectra and the comparison of
// G(m,n,k) against its level-rank partner G(k,n,m).

#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kscoset/coset.hpp"
#include "kscoset/rational.hpp"

namespace kscoset {

inline constexpr double kDimensionTolerance = 1e-6;

struct FingerprintRow {
    RationalWeight h;
    double dimension = 0.0;  // rounded to 1e-6
    std::int64_t multiplicity = 0;
};

/// Multiset of (h mod 1, dimension) over the irreducible pieces, plus c and
/// the irreducible count. Rows are sorted by (h, dimension).
struct Fingerprint {
    RationalWeight central_charge;
    std::int64_t irrep_count = 0;
    std::vector<FingerprintRow> rows;
};

inline double round_dimension(double d) { return std::round(d / kDimensionTolerance) * kDimensionTolerance; }

inline Fingerprint fingerprint(const ResolvedSpectrum& spectrum) {
    std::map<std::pair<RationalWeight, std::int64_t>, std::int64_t> counts;
    for (const auto& row : spectrum.rows) {
        const auto micro = std::llround(row.piece_dimension / kDimensionTolerance);
        counts[{row.h_mod1, micro}] += row.stabilizer;
    }
    Fingerprint out;
    out.central_charge = spectrum.central_charge;
    out.irrep_count = spectrum.irrep_count;
    for (const auto& [key, mult] : counts) {
        out.rows.push_back({key.first, static_cast<double>(key.second) * kDimensionTolerance, mult});
    }
    return out;
}

inline Fingerprint fingerprint(const CosetSpec& spec, std::int64_t budget = kDefaultBudget) {
    return fingerprint(resolve_spectrum(spec, budget));
}

struct DualityReport {
    CosetSpec spec{1, 1, 1};
    CosetSpec dual{1, 1, 1};
    Fingerprint lhs;
    Fingerprint rhs;
    bool central_charge_equal = false;
    bool irrep_count_equal = false;
    bool rows_equal = false;
    std::string mismatch;  // first differing row, empty when rows agree

    bool pass() const { return central_charge_equal && irrep_count_equal && rows_equal; }
    const char* verdict() const { return pass() ? "PASS" : "FAIL"; }
};

/// Compares two fingerprints: c exactly, counts exactly, rows with h exact
/// and dimensions within kDimensionTolerance.
inline DualityReport compare_fingerprints(const CosetSpec& spec, const CosetSpec& dual, Fingerprint lhs,
                                          Fingerprint rhs) {
    DualityReport report{spec, dual, std::move(lhs), std::move(rhs), false, false, false, {}};
    report.central_charge_equal = report.lhs.central_charge == report.rhs.central_charge;
    report.irrep_count_equal = report.lhs.irrep_count == report.rhs.irrep_count;
    report.rows_equal = report.lhs.rows.size() == report.rhs.rows.size();
    const std::size_t common = std::min(report.lhs.rows.size(), report.rhs.rows.size());
    for (std::size_t r = 0; r < common && report.mismatch.empty(); ++r) {
        const auto& a = report.lhs.rows[r];
        const auto& b = report.rhs.rows[r];
        // rounding both sides can separate equal values by one grid step
        const bool same = a.h == b.h && std::abs(a.dimension - b.dimension) <= kDimensionTolerance * (1 + 1e-9) &&
                          a.multiplicity == b.multiplicity;
        if (!same) {
            std::ostringstream os;
            os << "row " << r << ": (h=" << to_string(a.h) << ", d=" << a.dimension << ", x" << a.multiplicity
               << ") vs (h=" << to_string(b.h) << ", d=" << b.dimension << ", x" << b.multiplicity << ")";
            report.mismatch = os.str();
            report.rows_equal = false;
        }
    }
    if (report.mismatch.empty() && report.lhs.rows.size() != report.rhs.rows.size()) {
        report.mismatch = "row counts differ: " + std::to_string(report.lhs.rows.size()) + " vs " +
                          std::to_string(report.rhs.rows.size());
    }
    return report;
}

/// Fingerprint comparison of G(m,n,k) with G(k,n,m).
inline DualityReport check_duality(const CosetSpec& spec, std::int64_t budget = kDefaultBudget) {
    const CosetSpec dual = spec.dual();
    return compare_fingerprints(spec, dual, fingerprint(spec, budget), fingerprint(dual, budget));
}

}  // namespace kscoset

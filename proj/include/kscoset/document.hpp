#pragma once

// Output documents of the command-line front end. Every command builds a
// JSON document first; the table and CSV renderers read that document, so all
// three formats carry the same rounded values. Rationals are "p/q" strings and
// reals are rounded to 12 significant digits.

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "kscoset/affine.hpp"
#include "kscoset/coset.hpp"
#include "kscoset/duality.hpp"
#include "kscoset/modular.hpp"
#include "kscoset/rational.hpp"

namespace kscoset::doc {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

inline std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

/// value rounded to 12 significant digits
inline double round_real(double value) { return std::stod(format_real(value)); }

inline json envelope(const std::string& command, json spec, json payload) {
    return json{{"schema_version", kSchemaVersion}, {"command", command}, {"spec", std::move(spec)},
                {"payload", std::move(payload)}};
}

inline json spec_json(const CosetSpec& spec) { return json{{"m", spec.m()}, {"n", spec.n()}, {"k", spec.k()}}; }

inline CosetSpec spec_from_json(const json& j) {
    return CosetSpec(j.at("m").get<int>(), j.at("n").get<int>(), j.at("k").get<int>());
}

inline json labels_json(const AffineWeight& w) { return json(std::vector<int>(w.labels().begin(), w.labels().end())); }

inline json field_json(const CosetField& f) {
    return json{{"lambda0", labels_json(f.lambda0)}, {"pi0", to_string(f.pi0.kind())},
                {"lam1", labels_json(f.lam1)},       {"lam2", labels_json(f.lam2)},
                {"qdot", f.qdot.value()},            {"label", to_string(f)}};
}

inline SpinKind spin_kind_from_string(const std::string& s) {
    if (s == "vacuum") return SpinKind::vacuum;
    if (s == "vector") return SpinKind::vector;
    if (s == "spinor") return SpinKind::spinor;
    if (s == "cospinor") return SpinKind::cospinor;
    throw std::invalid_argument("unknown spin label: " + s);
}

inline CosetField field_from_json(const json& j, const CosetSpec& spec) {
    CosetField f{AffineWeight(spec.big_rank(), spec.big_level(), j.at("lambda0").get<std::vector<int>>()),
                 SpinLabel(spec.spin_half_dim(), spin_kind_from_string(j.at("pi0").get<std::string>())),
                 AffineWeight(spec.m(), spec.su_m_level(), j.at("lam1").get<std::vector<int>>()),
                 AffineWeight(spec.n(), spec.su_n_level(), j.at("lam2").get<std::vector<int>>()),
                 U1Charge(spec.u1_modulus(), j.at("qdot").get<std::int64_t>())};
    validate_field(f, spec);
    return f;
}

// ---- spectrum

inline json spectrum_json(const ResolvedSpectrum& s) {
    json orbits = json::array();
    for (const auto& row : s.rows) {
        orbits.push_back({{"representative", field_json(row.representative)},
                          {"orbit_size", row.orbit_size},
                          {"stabilizer", row.stabilizer},
                          {"dimension", round_real(row.dimension)},
                          {"piece_dimension", round_real(row.piece_dimension)},
                          {"h_mod1", to_string(row.h_mod1)}});
    }
    json payload{{"kind", "spectrum"},
                 {"central_charge", to_string(s.central_charge)},
                 {"exp_size", s.exp_size},
                 {"group_order", s.group_order},
                 {"irrep_count", s.irrep_count},
                 {"orbits", std::move(orbits)}};
    return envelope("spectrum", spec_json(s.spec), std::move(payload));
}

/// Inverse of spectrum_json (dimensions carry the 12-digit rounding).
inline ResolvedSpectrum spectrum_from_json(const json& document) {
    if (document.at("schema_version").get<std::string>() != kSchemaVersion) {
        throw std::invalid_argument("unsupported schema version");
    }
    const json& payload = document.at("payload");
    if (payload.at("kind").get<std::string>() != "spectrum") throw std::invalid_argument("not a spectrum document");
    ResolvedSpectrum s;
    s.spec = spec_from_json(document.at("spec"));
    s.central_charge = parse_rational(payload.at("central_charge").get<std::string>());
    s.exp_size = payload.at("exp_size").get<std::int64_t>();
    s.group_order = payload.at("group_order").get<std::int64_t>();
    s.irrep_count = payload.at("irrep_count").get<std::int64_t>();
    for (const auto& o : payload.at("orbits")) {
        SpectrumRow row;
        row.representative = field_from_json(o.at("representative"), s.spec);
        row.orbit_size = o.at("orbit_size").get<std::int64_t>();
        row.stabilizer = o.at("stabilizer").get<std::int64_t>();
        row.dimension = o.at("dimension").get<double>();
        row.piece_dimension = o.at("piece_dimension").get<double>();
        row.h_mod1 = parse_rational(o.at("h_mod1").get<std::string>());
        s.rows.push_back(std::move(row));
    }
    return s;
}

// ---- vacuum-pair group

struct VpAudit {
    bool selection_rules = true;
    bool integral_gap = true;
    bool group_axioms = true;

    bool ok() const { return selection_rules && integral_gap && group_axioms; }
};

/// Selection rules, h_alpha - h_i in Z_{>=0}, and the group axioms.
inline VpAudit audit_vp_group(const VpGroup& group) {
    VpAudit audit;
    for (const auto& w : group.elements()) {
        if (!selection_check(w.image, group.spec())) audit.selection_rules = false;
        const RationalWeight gap = -coset_h(w.image);
        if (!is_integer(gap) || gap < RationalWeight(0)) audit.integral_gap = false;
    }
    audit.group_axioms = group.audit().ok();
    return audit;
}

inline json vp_group_json(const VpGroup& group, const VpAudit* audit) {
    json elements = json::array();
    for (const auto& w : group.elements()) {
        elements.push_back({{"j", w.j},
                            {"i", w.i},
                            {"image", field_json(w.image)},
                            {"h_gap", to_string(-coset_h(w.image))}});
    }
    json payload{{"kind", "vp_group"}, {"order", group.order()}, {"elements", std::move(elements)}};
    if (audit != nullptr) {
        payload["verification"] = {{"selection_rules", audit->selection_rules},
                                   {"integral_gap", audit->integral_gap},
                                   {"group_axioms", audit->group_axioms},
                                   {"verified", audit->ok()}};
    }
    return envelope("vps", spec_json(group.spec()), std::move(payload));
}

// ---- duality

inline json fingerprint_json(const Fingerprint& fp) {
    json rows = json::array();
    for (const auto& r : fp.rows) {
        rows.push_back({{"h_mod1", to_string(r.h)}, {"dimension", round_real(r.dimension)},
                        {"multiplicity", r.multiplicity}});
    }
    return json{{"central_charge", to_string(fp.central_charge)}, {"irrep_count", fp.irrep_count},
                {"rows", std::move(rows)}};
}

inline json duality_json(const DualityReport& r) {
    json checks = json::array();
    checks.push_back({{"name", "central_charge"},
                      {"lhs", to_string(r.lhs.central_charge)},
                      {"rhs", to_string(r.rhs.central_charge)},
                      {"equal", r.central_charge_equal}});
    checks.push_back({{"name", "irrep_count"},
                      {"lhs", std::to_string(r.lhs.irrep_count)},
                      {"rhs", std::to_string(r.rhs.irrep_count)},
                      {"equal", r.irrep_count_equal}});
    checks.push_back({{"name", "fingerprint_rows"},
                      {"lhs", std::to_string(r.lhs.rows.size())},
                      {"rhs", std::to_string(r.rhs.rows.size())},
                      {"equal", r.rows_equal},
                      {"mismatch", r.mismatch}});
    json payload{{"kind", "duality_report"},
                 {"dual", spec_json(r.dual)},
                 {"verdict", r.verdict()},
                 {"dimension_tolerance", kDimensionTolerance},
                 {"checks", std::move(checks)},
                 {"fingerprints", {{"lhs", fingerprint_json(r.lhs)}, {"rhs", fingerprint_json(r.rhs)}}}};
    return envelope("duality", spec_json(r.spec), std::move(payload));
}

// ---- modular data of the five factors

inline json factor_json(const std::string& name, const SMatrix& s, const std::vector<std::string>& labels,
                        const std::vector<RationalWeight>& weights) {
    json primaries = json::array();
    for (std::size_t idx = 0; idx < labels.size(); ++idx) {
        primaries.push_back(
            {{"label", labels[idx]}, {"h", to_string(weights[idx])}, {"qdim", round_real(qdim(s, idx))}});
    }
    const double unitarity = s.unitarity_residual();
    const double symmetry = s.symmetry_residual();
    return json{{"name", name},
                {"dimension", s.dimension()},
                {"unitary", unitarity < 1e-9},
                {"symmetric", symmetry < 1e-12},
                {"primaries", std::move(primaries)}};
}

inline json su_factor_json(int rank, int level) {
    const auto weights = enumerate_su(rank, level);
    std::vector<std::string> labels;
    std::vector<RationalWeight> hs;
    for (const auto& w : weights) {
        labels.push_back(to_string(w));
        hs.push_back(h_su(w));
    }
    return factor_json("su(" + std::to_string(rank) + ")_" + std::to_string(level), s_su(rank, level), labels, hs);
}

inline json modular_json(const CosetSpec& spec) {
    json factors = json::array();
    factors.push_back(su_factor_json(spec.big_rank(), spec.big_level()));
    {
        std::vector<std::string> labels;
        std::vector<RationalWeight> hs;
        for (const auto& s : enumerate_spin(spec.spin_half_dim())) {
            labels.push_back(to_string(s));
            hs.push_back(h_spin(s));
        }
        factors.push_back(factor_json("spin(" + std::to_string(2 * spec.spin_half_dim()) + ")_1",
                                      s_spin(spec.spin_half_dim()), labels, hs));
    }
    factors.push_back(su_factor_json(spec.m(), spec.su_m_level()));
    factors.push_back(su_factor_json(spec.n(), spec.su_n_level()));
    {
        std::vector<std::string> labels;
        std::vector<RationalWeight> hs;
        for (std::int64_t x = 0; x < spec.u1_modulus(); ++x) {
            const U1Charge c(spec.u1_modulus(), x);
            labels.push_back(to_string(c));
            hs.push_back(h_u1(c));
        }
        factors.push_back(factor_json("u1(" + std::to_string(spec.u1_modulus()) + ")", s_u1(spec.u1_modulus()), labels,
                                      hs));
    }
    json payload{{"kind", "modular_data"},
                 {"central_charge", to_string(central_charge(spec))},
                 {"factors", std::move(factors)}};
    return envelope("modular", spec_json(spec), std::move(payload));
}

// ---- U(1) sub-coset

inline json u1_coset_json(std::int64_t a, std::int64_t b) {
    const auto triples = u1_coset_vps(a, b);
    json rows = json::array();
    for (const auto& t : triples) {
        const RationalWeight gap = h_u1(t.z) - h_u1(t.x) - h_u1(t.y);
        rows.push_back({{"x", t.x.value()}, {"y", t.y.value()}, {"z", t.z.value()}, {"h_gap", to_string(gap)}});
    }
    const double direct = u1_coset_b11(a, b);
    const double closed =
        static_cast<double>(std::gcd(a, b)) / std::sqrt(2.0 * static_cast<double>(a) * static_cast<double>(b) *
                                                        static_cast<double>(a + b));
    json payload{{"kind", "u1_coset"},
                 {"count", triples.size()},
                 {"b11_direct", round_real(direct)},
                 {"b11_closed_form", round_real(closed)},
                 {"agree", std::abs(direct - closed) < 1e-9},
                 {"triples", std::move(rows)}};
    return envelope("u1-coset", json{{"a", a}, {"b", b}}, std::move(payload));
}

// ---- text renderers

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) line += ",";
        line += csv_field(fields[i]);
    }
    return line + "\n";
}

inline std::string text(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_float()) return format_real(j.get<double>());
    return j.dump();
}

inline std::string spec_text(const json& spec) {
    if (spec.contains("m")) {
        return "G(" + text(spec["m"]) + "," + text(spec["n"]) + "," + text(spec["k"]) + ")";
    }
    return "U(1) coset a=" + text(spec["a"]) + " b=" + text(spec["b"]);
}

}  // namespace detail

/// CSV rendering: one header row and one row per record, LF line endings.
inline std::string render_csv(const json& document) {
    using detail::csv_row;
    using detail::text;
    const json& p = document.at("payload");
    const std::string kind = p.at("kind").get<std::string>();
    std::string out;
    if (kind == "spectrum") {
        out += csv_row({"h_mod1", "piece_dimension", "stabilizer", "orbit_size", "dimension", "lambda0", "pi0", "lam1",
                        "lam2", "qdot"});
        for (const auto& o : p.at("orbits")) {
            const auto& r = o.at("representative");
            out += csv_row({text(o["h_mod1"]), text(o["piece_dimension"]), text(o["stabilizer"]),
                            text(o["orbit_size"]), text(o["dimension"]), r["lambda0"].dump(), text(r["pi0"]),
                            r["lam1"].dump(), r["lam2"].dump(), text(r["qdot"])});
        }
    } else if (kind == "vp_group") {
        out += csv_row({"j", "i", "lambda0", "pi0", "lam1", "lam2", "qdot", "h_gap"});
        for (const auto& e : p.at("elements")) {
            const auto& r = e.at("image");
            out += csv_row({text(e["j"]), text(e["i"]), r["lambda0"].dump(), text(r["pi0"]), r["lam1"].dump(),
                            r["lam2"].dump(), text(r["qdot"]), text(e["h_gap"])});
        }
    } else if (kind == "duality_report") {
        out += csv_row({"check", "lhs", "rhs", "equal"});
        for (const auto& c : p.at("checks")) {
            out += csv_row({text(c["name"]), text(c["lhs"]), text(c["rhs"]), text(c["equal"])});
        }
        out += csv_row({"verdict", text(p["verdict"]), "", ""});
    } else if (kind == "modular_data") {
        out += csv_row({"factor", "label", "h", "qdim"});
        for (const auto& f : p.at("factors")) {
            for (const auto& pr : f.at("primaries")) {
                out += csv_row({text(f["name"]), text(pr["label"]), text(pr["h"]), text(pr["qdim"])});
            }
        }
    } else if (kind == "u1_coset") {
        out += csv_row({"x", "y", "z", "h_gap"});
        for (const auto& t : p.at("triples")) {
            out += csv_row({text(t["x"]), text(t["y"]), text(t["z"]), text(t["h_gap"])});
        }
    } else {
        throw std::invalid_argument("unknown payload kind: " + kind);
    }
    return out;
}

/// Human-readable rendering.
inline std::string render_table(const json& document) {
    using detail::text;
    const json& p = document.at("payload");
    const std::string kind = p.at("kind").get<std::string>();
    std::ostringstream os;
    os << detail::spec_text(document.at("spec")) << "\n";
    if (kind == "spectrum") {
        os << "central charge  " << text(p["central_charge"]) << "\n"
           << "|exp|           " << text(p["exp_size"]) << "\n"
           << "|VPS|           " << text(p["group_order"]) << "\n"
           << "irreducibles    " << text(p["irrep_count"]) << "\n\n";
        os << std::left << std::setw(10) << "h mod 1" << std::setw(16) << "d/t" << std::setw(4) << "t"
           << std::setw(7) << "orbit"
           << "representative\n";
        for (const auto& o : p.at("orbits")) {
            os << std::left << std::setw(10) << text(o["h_mod1"]) << std::setw(16) << text(o["piece_dimension"])
               << std::setw(4) << text(o["stabilizer"]) << std::setw(7) << text(o["orbit_size"])
               << text(o["representative"]["label"]) << "\n";
        }
    } else if (kind == "vp_group") {
        os << "|VPS|  " << text(p["order"]) << "\n";
        if (p.contains("verification")) {
            os << "verified  " << text(p["verification"]["verified"]) << "\n";
        }
        os << "\n" << std::left << std::setw(5) << "j" << std::setw(5) << "i" << std::setw(8) << "h gap"
           << "image\n";
        for (const auto& e : p.at("elements")) {
            os << std::left << std::setw(5) << text(e["j"]) << std::setw(5) << text(e["i"]) << std::setw(8)
               << text(e["h_gap"]) << text(e["image"]["label"]) << "\n";
        }
    } else if (kind == "duality_report") {
        os << "dual            " << detail::spec_text(p["dual"]) << "\n";
        for (const auto& c : p.at("checks")) {
            os << std::left << std::setw(18) << text(c["name"]) << std::setw(10) << text(c["lhs"]) << std::setw(10)
               << text(c["rhs"]) << (c["equal"].get<bool>() ? "equal" : "DIFFERENT") << "\n";
            if (c.contains("mismatch") && !c["mismatch"].get<std::string>().empty()) {
                os << "  " << text(c["mismatch"]) << "\n";
            }
        }
        os << "verdict         " << text(p["verdict"]) << "\n";
    } else if (kind == "modular_data") {
        os << "central charge  " << text(p["central_charge"]) << "\n";
        for (const auto& f : p.at("factors")) {
            os << "\n" << text(f["name"]) << "  primaries=" << text(f["dimension"])
               << "  unitary=" << text(f["unitary"]) << "  symmetric=" << text(f["symmetric"]) << "\n";
            for (const auto& pr : f.at("primaries")) {
                os << "  " << std::left << std::setw(28) << text(pr["label"]) << std::setw(10) << text(pr["h"])
                   << text(pr["qdim"]) << "\n";
            }
        }
    } else if (kind == "u1_coset") {
        os << "vacuum pairs    " << text(p["count"]) << "\n"
           << "b(1,1) direct   " << text(p["b11_direct"]) << "\n"
           << "b(1,1) closed   " << text(p["b11_closed_form"]) << "\n"
           << "agree           " << text(p["agree"]) << "\n\n";
        for (const auto& t : p.at("triples")) {
            os << "  (" << text(t["x"]) << ", " << text(t["y"]) << "; " << text(t["z"]) << ")  h gap "
               << text(t["h_gap"]) << "\n";
        }
    } else {
        throw std::invalid_argument("unknown payload kind: " + kind);
    }
    return os.str();
}

inline std::string render_json(const json& document) { return document.dump(2) + "\n"; }

}  // namespace kscoset::doc

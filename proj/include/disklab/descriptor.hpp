#ifndef DISKLAB_DESCRIPTOR_HPP
#define DISKLAB_DESCRIPTOR_HPP

#include <cmath>
#include <complex>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "blaschke.hpp"
#include "compose.hpp"
#include "core.hpp"
#include "function.hpp"
#include "inner.hpp"
#include "outer.hpp"
#include "preserver.hpp"
#include "taylor.hpp"

// JSON descriptors for functions, operators and actions. Canonical forms
// round-trip byte-identically: parsing and re-serializing a serialized
// descriptor reproduces the same bytes.

namespace disklab {

using json = nlohmann::ordered_json;

struct DescriptorError : std::runtime_error {
    explicit DescriptorError(const std::string& where, const std::string& what_)
        : std::runtime_error("descriptor error at " + where + ": " + what_) {}
};

/// num(z)/den(z) for polynomial num, den.
struct RationalFunction {
    TaylorSeries num, den;
    cplx eval(cplx z) const { return num.eval(z) / den.eval(z); }
    double log_abs(cplx z) const {
        return std::log(std::abs(num.eval(z))) - std::log(std::abs(den.eval(z)));
    }
};

namespace detail {

inline json complex_to_json(cplx v) { return json::array({v.real(), v.imag()}); }

inline cplx complex_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw DescriptorError(where, "expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline const json& field(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw DescriptorError(where, std::string("missing field '") + key + "'");
    return *it;
}

} // namespace detail

inline json to_json(const FiniteBlaschke& b) {
    json zeros = json::array();
    for (const cplx& a : b.zeros()) zeros.push_back(detail::complex_to_json(a));
    return json{{"type", "blaschke"},
                {"constant", detail::complex_to_json(b.constant())},
                {"zeros", std::move(zeros)}};
}

inline FiniteBlaschke blaschke_from_json(const json& j, const std::string& where = "blaschke") {
    const cplx c = detail::complex_from_json(detail::field(j, "constant", where), where + ".constant");
    const json& zs = detail::field(j, "zeros", where);
    if (!zs.is_array()) throw DescriptorError(where + ".zeros", "expected an array");
    std::vector<cplx> zeros;
    zeros.reserve(zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i)
        zeros.push_back(detail::complex_from_json(zs[i], where + ".zeros[" + std::to_string(i) + "]"));
    try {
        return FiniteBlaschke(UnimodularConstant(c), std::move(zeros));
    } catch (const std::invalid_argument& e) {
        throw DescriptorError(where, e.what());
    }
}

inline json to_json(const InnerFunction& h) {
    json atoms = json::array();
    for (const Atom& a : h.measure().atoms()) atoms.push_back(json::array({a.angle, a.mass}));
    return json{{"type", "inner"}, {"blaschke", to_json(h.blaschke())}, {"atoms", std::move(atoms)}};
}

inline InnerFunction inner_from_json(const json& j, const std::string& where = "inner") {
    const FiniteBlaschke b = blaschke_from_json(detail::field(j, "blaschke", where), where + ".blaschke");
    const json& as = detail::field(j, "atoms", where);
    if (!as.is_array()) throw DescriptorError(where + ".atoms", "expected an array");
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < as.size(); ++i) {
        const json& a = as[i];
        if (!a.is_array() || a.size() != 2)
            throw DescriptorError(where + ".atoms[" + std::to_string(i) + "]", "expected [angle, mass]");
        atoms.push_back({a[0].get<double>(), a[1].get<double>()});
    }
    try {
        return InnerFunction(b, SingularMeasure(std::move(atoms)));
    } catch (const std::invalid_argument& e) {
        throw DescriptorError(where, e.what());
    }
}

inline json to_json(const OuterFunction& g) {
    return json{{"type", "outer"}, {"n", g.grid_size()}, {"logG", g.log_values()}};
}

inline OuterFunction outer_from_json(const json& j, const std::string& where = "outer") {
    const int n = detail::field(j, "n", where).get<int>();
    const json& lg = detail::field(j, "logG", where);
    if (!lg.is_array() || static_cast<int>(lg.size()) != n)
        throw DescriptorError(where + ".logG", "expected an array of length n");
    std::vector<double> log_values(lg.begin(), lg.end());
    try {
        return OuterFunction(BoundaryModulus(BoundaryGrid(n), std::move(log_values)));
    } catch (const std::invalid_argument& e) {
        throw DescriptorError(where, e.what());
    }
}

inline json to_json(const TaylorSeries& t) {
    json coeffs = json::array();
    for (const cplx& c : t.coeffs()) coeffs.push_back(detail::complex_to_json(c));
    return json{{"type", "taylor"}, {"coeffs", std::move(coeffs)}};
}

inline TaylorSeries taylor_from_json(const json& j, const std::string& where = "taylor") {
    const json& cs = detail::field(j, "coeffs", where);
    if (!cs.is_array() || cs.empty())
        throw DescriptorError(where + ".coeffs", "expected a nonempty array");
    std::vector<cplx> coeffs;
    coeffs.reserve(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i)
        coeffs.push_back(detail::complex_from_json(cs[i], where + ".coeffs[" + std::to_string(i) + "]"));
    return TaylorSeries(std::move(coeffs));
}

inline RationalFunction rational_from_json(const json& j, const std::string& where = "rational") {
    auto read_poly = [&](const char* key) {
        const json& cs = detail::field(j, key, where);
        if (!cs.is_array() || cs.empty())
            throw DescriptorError(where + "." + key, "expected a nonempty array");
        std::vector<cplx> coeffs;
        for (std::size_t i = 0; i < cs.size(); ++i)
            coeffs.push_back(
                detail::complex_from_json(cs[i], where + "." + key + "[" + std::to_string(i) + "]"));
        return TaylorSeries(std::move(coeffs));
    };
    return RationalFunction{read_poly("num"), read_poly("den")};
}

inline json to_json(const RationalFunction& r) {
    json num = json::array(), den = json::array();
    for (const cplx& c : r.num.coeffs()) num.push_back(detail::complex_to_json(c));
    for (const cplx& c : r.den.coeffs()) den.push_back(detail::complex_to_json(c));
    return json{{"type", "rational"}, {"num", std::move(num)}, {"den", std::move(den)}};
}

// forward declaration for the recursive wco-image case
inline Handle handle_from_json(const json& j, const std::string& where = "function");

inline WeightedCompositionOperator wco_from_json(const json& j, const std::string& where = "wco") {
    const json& jpsi = detail::field(j, "psi", where);
    const json& jphi = detail::field(j, "phi", where);
    const std::string tpsi = detail::field(jpsi, "type", where + ".psi").get<std::string>();
    const std::string tphi = detail::field(jphi, "type", where + ".phi").get<std::string>();
    try {
        if (tpsi == "inner" && tphi == "inner")
            return WeightedCompositionOperator(inner_from_json(jpsi, where + ".psi"),
                                               inner_from_json(jphi, where + ".phi"));
        if (tpsi == "blaschke" && tphi == "blaschke")
            return WeightedCompositionOperator(InnerFunction(blaschke_from_json(jpsi, where + ".psi")),
                                               InnerFunction(blaschke_from_json(jphi, where + ".phi")));
        return WeightedCompositionOperator(handle_from_json(jpsi, where + ".psi"),
                                           handle_from_json(jphi, where + ".phi"));
    } catch (const std::invalid_argument& e) {
        throw DescriptorError(where, e.what());
    }
}

inline Handle handle_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) throw DescriptorError(where, "expected an object");
    const std::string type = detail::field(j, "type", where).get<std::string>();
    if (type == "blaschke") return Handle(InnerFunction(blaschke_from_json(j, where)));
    if (type == "inner") return Handle(inner_from_json(j, where));
    if (type == "outer") return Handle(outer_from_json(j, where));
    if (type == "taylor") return Handle(taylor_from_json(j, where));
    if (type == "rational") return Handle(rational_from_json(j, where));
    if (type == "wco-image") {
        const WeightedCompositionOperator T = wco_from_json(detail::field(j, "wco", where), where + ".wco");
        return T.apply(handle_from_json(detail::field(j, "f", where), where + ".f"));
    }
    throw DescriptorError(where, "unknown function type '" + type + "'");
}

/// Optional canonical inner data of a descriptor (blaschke / inner only).
inline std::optional<InnerFunction> canonical_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type")) return std::nullopt;
    const std::string type = j["type"].get<std::string>();
    if (type == "blaschke") return InnerFunction(blaschke_from_json(j));
    if (type == "inner") return inner_from_json(j);
    return std::nullopt;
}

inline MonomialAction action_from_json(const json& j, const std::string& where = "action") {
    const std::string type = detail::field(j, "type", where).get<std::string>();
    if (type != "action") throw DescriptorError(where, "expected type 'action'");
    const json& es = detail::field(j, "entries", where);
    if (!es.is_array() || es.empty()) throw DescriptorError(where + ".entries", "expected a nonempty array");
    std::vector<ActionEntry> entries;
    entries.reserve(es.size());
    for (std::size_t i = 0; i < es.size(); ++i) {
        const std::string ew = where + ".entries[" + std::to_string(i) + "]";
        if (auto canonical = canonical_from_json(es[i]))
            entries.emplace_back(*canonical);
        else
            entries.emplace_back(ActionEntry(handle_from_json(es[i], ew)));
    }
    return MonomialAction(std::move(entries));
}

inline json to_json(const PreserverReport& rep) {
    json out;
    out["classification"] = to_string(rep.classification);
    out["canonical_route"] = rep.canonical_route;
    out["psi"] = rep.psi_canonical ? to_json(*rep.psi_canonical) : json(nullptr);
    out["phi"] = rep.phi_canonical ? to_json(*rep.phi_canonical) : json(nullptr);
    out["alpha"] = rep.alpha ? detail::complex_to_json(*rep.alpha) : json(nullptr);
    out["innerness_residuals"] = rep.innerness_residuals;
    out["relation_residual"] = rep.relation_residual;
    out["reconstruction_residual"] = rep.reconstruction_residual;
    out["failed_stage"] = rep.failed_stage.empty() ? json(nullptr) : json(rep.failed_stage);
    return out;
}

} // namespace disklab

#endif

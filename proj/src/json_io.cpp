#include "lsf/json_io.hpp"

#include <stdexcept>
#include <string>

namespace lsf {

namespace {

Rational rational_from(const Json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw std::invalid_argument("coefficients must be integers or \"p/q\" strings");
}

Json one_based(const IndexSet& s) {
    Json a = Json::array();
    for (std::size_t i : s) a.push_back(i + 1);
    return a;
}

IndexSet zero_based(const Json& a) {
    IndexSet s;
    for (const auto& v : a) {
        const auto i = v.get<long>();
        if (i < 1) throw std::invalid_argument("indices are 1-based");
        s.push_back(static_cast<std::size_t>(i - 1));
    }
    return s;
}

Partition partition_from(const Json& v) { return Partition::parse(v.get<std::string>()); }

Json witness_json(const Witness& w) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, NegativeCoefficient>) {
                return Json{{"at", x.at.to_string()}};
            } else if constexpr (std::is_same_v<T, IncomparableMaxima>) {
                return Json{{"first", x.first.to_string()}, {"second", x.second.to_string()}};
            } else if constexpr (std::is_same_v<T, DominanceViolation>) {
                return Json{{"lower", x.lower.to_string()}, {"upper", x.upper.to_string()}};
            } else if constexpr (std::is_same_v<T, HessianViolation>) {
                return Json{{"mu", x.mu.to_string()}, {"minor", one_based(x.minor)}};
            } else if constexpr (std::is_same_v<T, ExchangeViolation>) {
                return Json{{"x", x.x}, {"y", x.y}, {"i", x.i + 1}};
            } else if constexpr (std::is_same_v<T, OracleHessianViolation>) {
                return Json{{"alpha", x.alpha}, {"minor", one_based(x.minor)}};
            } else {
                return Json{{"alpha", x.alpha}};
            }
        },
        w);
}

FailureKind kind_from(const std::string& s) {
    for (auto k : {FailureKind::Nonnegativity, FailureKind::SupportM, FailureKind::DominanceD, FailureKind::HessianH,
                   FailureKind::Decomposable})
        if (failure_kind_name(k) == s) return k;
    throw std::invalid_argument("unknown failure kind: " + s);
}

Witness witness_from(FailureKind kind, const Json& w) {
    switch (kind) {
        case FailureKind::Nonnegativity:
            return NegativeCoefficient{partition_from(w.at("at"))};
        case FailureKind::SupportM:
            if (w.contains("first")) return IncomparableMaxima{partition_from(w.at("first")), partition_from(w.at("second"))};
            return ExchangeViolation{w.at("x").get<Exponent>(), w.at("y").get<Exponent>(), w.at("i").get<int>() - 1};
        case FailureKind::DominanceD:
            return DominanceViolation{partition_from(w.at("lower")), partition_from(w.at("upper"))};
        case FailureKind::HessianH:
            if (w.contains("mu")) return HessianViolation{partition_from(w.at("mu")), zero_based(w.at("minor"))};
            return OracleHessianViolation{w.at("alpha").get<Exponent>(), zero_based(w.at("minor"))};
        case FailureKind::Decomposable:
            return Decomposition{w.at("alpha").get<Exponent>()};
    }
    throw std::invalid_argument("unknown failure kind");
}

}  // namespace

Json to_json(const SymPoly& f) {
    Json coeffs = Json::object();
    for (const auto& [lambda, c] : f.coeffs()) coeffs[lambda.to_string()] = to_string(c);
    return Json{{"degree", f.degree()}, {"basis", std::string(basis_name(f.basis()))}, {"coeffs", coeffs}};
}

SymPoly sympoly_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("symmetric function JSON must be an object");
    if (!j.contains("degree") || !j.at("degree").is_number_integer())
        throw std::invalid_argument("missing integer field \"degree\"");
    const int degree = j.at("degree").get<int>();
    const Basis basis = j.contains("basis") ? parse_basis(j.at("basis").get<std::string>()) : Basis::NormalizedMonomial;
    SymPoly f(degree, basis);
    if (!j.contains("coeffs")) throw std::invalid_argument("missing field \"coeffs\"");
    const Json& c = j.at("coeffs");
    if (c.is_object()) {
        for (const auto& [key, value] : c.items()) f.add(Partition::parse(key), rational_from(value));
    } else if (c.is_array()) {
        // Positional: one entry per partition, largest first.
        std::vector<Rational> values;
        for (const auto& v : c) values.push_back(rational_from(v));
        f = SymPoly::from_dense(degree, basis, values);
    } else {
        throw std::invalid_argument("\"coeffs\" must be an object or an array");
    }
    return f;
}

Json to_json(const Verdict& v) {
    Json failure = nullptr;
    if (v.failure)
        failure = Json{{"kind", std::string(failure_kind_name(v.failure->kind))}, {"witness", witness_json(v.failure->witness)}};
    return Json{{"lorentzian", v.lorentzian}, {"failure", failure}, {"opCount", v.op_count}};
}

Verdict verdict_from_json(const Json& j) {
    Verdict v;
    v.lorentzian = j.at("lorentzian").get<bool>();
    v.op_count = j.at("opCount").get<std::uint64_t>();
    const Json& f = j.at("failure");
    if (!f.is_null()) {
        const FailureKind kind = kind_from(f.at("kind").get<std::string>());
        v.failure = Failure{kind, witness_from(kind, f.at("witness"))};
    }
    if (v.lorentzian && v.failure) throw std::invalid_argument("a Lorentzian verdict cannot carry a failure");
    return v;
}

Json to_json(const RegionVerdict& r) {
    return Json{{"member", r.member}, {"failed", r.failed ? Json(*r.failed) : Json(nullptr)}};
}

}  // namespace lsf

#pragma once

#include "nchilb/asymptotics.hpp"
#include "nchilb/betti.hpp"
#include "nchilb/cells.hpp"
#include "nchilb/census.hpp"
#include "nchilb/enumerate.hpp"
#include "nchilb/forest_text.hpp"
#include "nchilb/report.hpp"
#include "nchilb/zeta.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>
#include <variant>

namespace nchilb {

using Json = nlohmann::ordered_json;

/// All floating-point output is pinned to 12 significant digits and carried
/// as JSON strings, like the big integers.
inline std::string fmtDouble(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string fmtRational(const BigRational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Json toJson(const QPolynomial& p) {
    Json arr = Json::array();
    for (const BigInt& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

inline Json toJson(const TSeries& s) {
    Json j;
    j["m"] = s.m;
    j["n"] = s.n;
    j["dmax"] = s.dmax;
    Json coeffs = Json::array();
    for (const QPolynomial& c : s.coeff) coeffs.push_back(toJson(c));
    j["coeffs"] = coeffs;
    return j;
}

inline std::string toCsv(const TSeries& s) {
    std::string out = "d,k,coefficient\n";
    for (int d = 0; d <= s.dmax; ++d) {
        const auto& c = s.at(d).coeffs();
        for (std::size_t k = 0; k < c.size(); ++k)
            out += std::to_string(d) + "," + std::to_string(k) + "," + c[k].str() + "\n";
    }
    return out;
}

inline Json toJson(const GammaSeries& g) {
    Json j;
    j["m"] = g.m;
    j["dmax"] = g.dmax;
    Json num = Json::array(), den = Json::array();
    for (const QPolynomial& p : g.num) num.push_back(toJson(p));
    for (const QPolynomial& p : g.den) den.push_back(toJson(p));
    j["num"] = num;
    j["den"] = den;
    return j;
}

inline Json toJson(const BettiTable& t) {
    Json j;
    j["m"] = t.m;
    j["n"] = t.n;
    j["d"] = t.d;
    Json rows = Json::array();
    for (std::size_t k = 0; k < t.betti.size(); ++k) {
        Json row;
        row["d"] = t.d;
        row["k"] = k;
        row["b_k"] = t.betti[k].str();
        rows.push_back(row);
    }
    j["rows"] = rows;
    j["euler"] = t.total().str();
    j["intersection_poly"] = toJson(t.intersectionPoly);
    return j;
}

inline std::string toCsv(const BettiTable& t) {
    std::string out = "d,k,b_k\n";
    for (std::size_t k = 0; k < t.betti.size(); ++k)
        out += std::to_string(t.d) + "," + std::to_string(k) + "," + t.betti[k].str() + "\n";
    return out;
}

inline Json toJson(const NodeRef& n) {
    Json j = Json::array();
    j.push_back(n.component);
    j.push_back(formatWord(n.word));
    return j;
}

template <class Fld>
Json toJson(const CellPoint<Fld>& p) {
    Json j;
    j["m"] = p.m;
    j["n"] = p.n;
    j["d"] = p.d;
    j["field"] = p.field.descriptor();
    Json f = Json::array();
    for (std::size_t r = 0; r < p.f.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < p.f.cols(); ++c) row.push_back(p.field.toString(p.f.at(r, c)));
        f.push_back(row);
    }
    j["f"] = f;
    Json phis = Json::array();
    for (const auto& phi : p.phi) {
        Json mat = Json::array();
        for (std::size_t r = 0; r < phi.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < phi.cols(); ++c) row.push_back(p.field.toString(phi.at(r, c)));
            mat.push_back(row);
        }
        phis.push_back(mat);
    }
    j["phi"] = phis;
    return j;
}

template <class Fld>
Json toJson(const LambdaAssignment<Fld>& lam, const Fld& field) {
    Json arr = Json::array();
    for (const auto& [pair, value] : lam.values) {
        Json j;
        j["source"] = toJson(pair.source);
        j["target"] = toJson(pair.target);
        j["value"] = field.toString(value);
        arr.push_back(j);
    }
    return arr;
}

namespace detail {

inline BigRational parseRationalText(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return BigRational(BigInt(s));
    return BigRational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

template <class Fld>
CellPoint<Fld> cellPointFromJsonTyped(const Json& j, const Fld& field) {
    CellPoint<Fld> p{j.at("m").get<std::uint32_t>(), j.at("n").get<std::uint32_t>(),
                     j.at("d").get<std::uint32_t>(), field, {}, {}};
    auto scalar = [&](const Json& v) {
        if constexpr (std::is_same_v<Fld, PrimeField>) {
            return field.fromInt(std::stoll(v.get<std::string>()));
        } else {
            return parseRationalText(v.get<std::string>());
        }
    };
    p.f = Matrix<Fld>(p.d, p.n, field.zero());
    const Json& f = j.at("f");
    for (std::size_t r = 0; r < p.d; ++r)
        for (std::size_t c = 0; c < p.n; ++c) p.f.at(r, c) = scalar(f.at(r).at(c));
    const Json& phis = j.at("phi");
    for (std::size_t i = 0; i < p.m; ++i) {
        Matrix<Fld> mat(p.d, p.d, field.zero());
        for (std::size_t r = 0; r < p.d; ++r)
            for (std::size_t c = 0; c < p.d; ++c) mat.at(r, c) = scalar(phis.at(i).at(r).at(c));
        p.phi.push_back(std::move(mat));
    }
    validateCellPoint(p);
    return p;
}

} // namespace detail

using AnyCellPoint = std::variant<CellPoint<PrimeField>, CellPoint<RationalField>>;

inline AnyCellPoint cellPointFromJson(const Json& j) {
    const std::string field = j.at("field").get<std::string>();
    if (field == "Q")
        return detail::cellPointFromJsonTyped(j, RationalField{});
    if (field.rfind("Fp:", 0) == 0)
        return detail::cellPointFromJsonTyped(j, PrimeField(std::stoull(field.substr(3))));
    throw ParseError("unknown field descriptor \"" + field + "\"");
}

inline Json toJson(const CensusReport& r) {
    Json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["d"] = r.d;
    j["p"] = r.p;
    j["stable_tuples"] = r.stableTupleCount.str();
    j["gl_order"] = r.glOrderValue.str();
    j["point_count"] = r.pointCount.str();
    if (r.withPerCell) {
        Json cells;
        for (const auto& [forest, count] : r.perCell) cells[forest] = count.str();
        j["per_cell"] = cells;
    }
    return j;
}

inline Json toJson(const Check& c) {
    Json j;
    j["name"] = c.name;
    j["methods"] = c.methodPair;
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    j["pass"] = c.pass;
    return j;
}

inline Json toJson(const Report& r) {
    Json j;
    Json checks = Json::array();
    for (const Check& c : r.checks) checks.push_back(toJson(c));
    j["checks"] = checks;
    j["total"] = r.checks.size();
    j["failed"] = r.failedCount();
    j["pass"] = r.allPassed();
    return j;
}

inline Json toJson(const AiryMoments& a) {
    Json j;
    Json omegas = Json::array();
    for (const BigRational& o : a.omegas) omegas.push_back(fmtRational(o));
    j["omegas"] = omegas;
    Json moments = Json::array();
    for (std::size_t k = 0; k < a.moments.size(); ++k) {
        Json mj;
        mj["k"] = k;
        mj["exact"] = fmtRational(a.moments[k].rationalPart) +
                      (a.moments[k].timesSqrtPi ? "*sqrt(pi)" : "");
        mj["value"] = fmtDouble(a.moments[k].value);
        moments.push_back(mj);
    }
    j["moments"] = moments;
    return j;
}

inline Json toJson(const LimitLawTrace& t) {
    Json j;
    j["m"] = t.m;
    j["jmax"] = t.jmax;
    Json entries = Json::array();
    for (const auto& e : t.entries) {
        Json ej;
        ej["d"] = e.d;
        Json rows = Json::array();
        for (std::size_t jj = 0; jj < e.exact.size(); ++jj) {
            Json row;
            row["j"] = jj;
            row["exact_num"] = numerator(e.exact[jj]).str();
            row["exact_den"] = denominator(e.exact[jj]).str();
            row["normalized"] = fmtDouble(e.normalized[jj]);
            row["airy"] = fmtDouble(e.airyTarget[jj]);
            row["gap"] = fmtDouble(e.gap[jj]);
            rows.push_back(row);
        }
        ej["moments"] = rows;
        entries.push_back(ej);
    }
    j["entries"] = entries;
    return j;
}

inline std::string toCsv(const LimitLawTrace& t) {
    std::string out = "d,j,exact_numerator,exact_denominator,normalized,airy_target,gap\n";
    for (const auto& e : t.entries)
        for (std::size_t jj = 0; jj < e.exact.size(); ++jj)
            out += std::to_string(e.d) + "," + std::to_string(jj) + "," +
                   numerator(e.exact[jj]).str() + "," + denominator(e.exact[jj]).str() + "," +
                   fmtDouble(e.normalized[jj]) + "," + fmtDouble(e.airyTarget[jj]) + "," +
                   fmtDouble(e.gap[jj]) + "\n";
    return out;
}

inline Json toJson(const LatticePath& p, std::uint32_t m, std::uint32_t n) {
    Json j;
    Json h = Json::array();
    for (std::uint64_t x : p.heights) h.push_back(x);
    j["heights"] = h;
    j["coarea"] = coarea(p, m, n);
    return j;
}

} // namespace nchilb

#include "freewitt/json_io.hpp"

#include <cmath>

#include "freewitt/errors.hpp"

namespace freewitt::json_io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

const Json& as_array(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    return j;
}

} // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
}

Json encode(const Rational& r) { return r.str(); }

Rational decode_rational(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("rational must be a \"p/q\" string");
}

Json encode_rationals(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& r : v) out.push_back(encode(r));
    return out;
}

std::vector<Rational> decode_rationals(const Json& j) {
    std::vector<Rational> out;
    for (const auto& x : as_array(j, "coefficient list")) out.push_back(decode_rational(x));
    return out;
}

Json encode(const TruncSeries& s) { return Json{{"order", s.order()}, {"coeffs", encode_rationals(s.coeffs())}}; }

TruncSeries decode_series(const Json& j) {
    const int order = as_int(field(j, "order"), "order");
    auto c = decode_rationals(field(j, "coeffs"));
    if (order < 0 || static_cast<int>(c.size()) != order + 1) {
        throw ParseError("series needs exactly order+1 coefficients");
    }
    return TruncSeries(std::move(c));
}

Json encode(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [mono, c] : p.terms()) {
        Json m = Json::object();
        for (const auto& [var, e] : mono) m[var] = e;
        terms.push_back(Json{{"monomial", m}, {"c", encode(c)}});
    }
    Json weights = Json::object();
    for (const auto& [var, w] : p.weights()) weights[var] = w;
    return Json{{"terms", terms}, {"weights", weights}};
}

MultiPoly decode_poly(const Json& j) {
    MultiPoly p;
    if (j.contains("weights")) {
        for (const auto& [var, w] : field(j, "weights").items()) p.set_weight(var, as_int(w, "weight"));
    }
    for (const auto& t : as_array(field(j, "terms"), "terms")) {
        Monomial m;
        for (const auto& [var, e] : field(t, "monomial").items()) {
            const int ex = as_int(e, "exponent");
            if (ex < 0) throw ParseError("negative exponent");
            if (ex > 0) m.emplace_back(var, static_cast<unsigned>(ex));
        }
        MultiPoly term = MultiPoly::monomial(m, decode_rational(field(t, "c")));
        for (const auto& [var, w] : p.weights()) term.set_weight(var, w);
        p += term;
    }
    return p;
}

Json encode(const Fgl& F) {
    Json terms = Json::array();
    for (const auto& [mono, c] : F.F.terms()) {
        int x = 0;
        int y = 0;
        for (const auto& [var, e] : mono) {
            if (var == "x") {
                x = static_cast<int>(e);
            } else if (var == "y") {
                y = static_cast<int>(e);
            } else {
                throw DomainError("UnknownVariable", "formal group law in variables other than x, y");
            }
        }
        terms.push_back(Json{{"x", x}, {"y", y}, {"c", encode(c)}});
    }
    return Json{{"degree", F.degree}, {"terms", terms}};
}

Fgl decode_fgl(const Json& j) {
    Fgl F;
    F.degree = as_int(field(j, "degree"), "degree");
    for (const auto& t : as_array(field(j, "terms"), "terms")) {
        const int x = as_int(field(t, "x"), "x exponent");
        const int y = as_int(field(t, "y"), "y exponent");
        if (x < 0 || y < 0) throw ParseError("negative exponent");
        Monomial m;
        if (x > 0) m.emplace_back("x", static_cast<unsigned>(x));
        if (y > 0) m.emplace_back("y", static_cast<unsigned>(y));
        F.F += MultiPoly::monomial(m, decode_rational(field(t, "c")));
    }
    return F;
}

std::vector<Rational> decode_comps(const Json& j, std::string_view kind) {
    const Json& k = field(j, "kind");
    if (!k.is_string() || k.get<std::string>() != kind) {
        throw ParseError("expected a vector of kind '" + std::string(kind) + "'");
    }
    return decode_rationals(field(j, "comps"));
}

WittVector decode_witt(const Json& j) { return WittVector(decode_comps(j, WittTag::kind)); }
GhostVector decode_ghost(const Json& j) { return GhostVector(decode_comps(j, GhostTag::kind)); }
NecklaceVector decode_necklace(const Json& j) { return NecklaceVector(decode_comps(j, NecklaceTag::kind)); }

Json encode(const LambdaElement& f) { return encode(f.series()); }
LambdaElement decode_lambda(const Json& j) { return LambdaElement(decode_series(j)); }

Json encode(const Distribution& mu) { return Json{{"moments", encode_rationals(mu.moments())}}; }
Distribution decode_distribution(const Json& j) { return Distribution(decode_rationals(field(j, "moments"))); }

Json encode(const CumulantVector& k) { return Json{{"cumulants", encode_rationals(k.k)}}; }
CumulantVector decode_cumulants(const Json& j) { return CumulantVector{decode_rationals(field(j, "cumulants"))}; }

Json encode(const GrunskyTable& t) {
    Json out = Json::array();
    for (const auto& row : t.beta) {
        for (const auto& x : row) out.push_back(x.is_constant() ? encode(x.constant_term()) : encode(x));
    }
    return out;
}

GrunskyTable decode_grunsky(const Json& j) {
    const auto& arr = as_array(j, "Grunsky table");
    const auto M = static_cast<int>(std::lround(std::sqrt(static_cast<double>(arr.size()))));
    if (static_cast<std::size_t>(M) * static_cast<std::size_t>(M) != arr.size()) {
        throw ParseError("Grunsky table must be square");
    }
    GrunskyTable t;
    t.M = M;
    t.beta.assign(static_cast<std::size_t>(M), std::vector<MultiPoly>(static_cast<std::size_t>(M)));
    for (int i = 0; i < M * M; ++i) {
        const auto& x = arr[static_cast<std::size_t>(i)];
        t.beta[i / M][i % M] = x.is_object() ? decode_poly(x) : MultiPoly(decode_rational(x));
    }
    return t;
}

Json encode(const OpElement& a) {
    Json terms = Json::array();
    for (const auto& [w, c] : a.terms()) {
        Json cr = Json::array();
        Json an = Json::array();
        for (auto g : w.creators) cr.push_back(static_cast<int>(g));
        for (auto g : w.annihilators) an.push_back(static_cast<int>(g));
        terms.push_back(Json{{"creators", cr}, {"annihilators", an}, {"coeff", encode(c)}});
    }
    return Json{{"generators", a.generators()}, {"degree_cap", a.degree_cap()}, {"terms", terms}};
}

OpElement decode_op(const Json& j) {
    const int k = as_int(field(j, "generators"), "generators");
    OpElement a(k, as_int(field(j, "degree_cap"), "degree_cap"));
    auto letters = [k](const Json& arr) {
        std::vector<std::uint8_t> out;
        for (const auto& g : as_array(arr, "word")) {
            const int v = as_int(g, "generator");
            if (v < 1 || v > k) throw ParseError("generator index out of range");
            out.push_back(static_cast<std::uint8_t>(v));
        }
        return out;
    };
    for (const auto& t : as_array(field(j, "terms"), "terms")) {
        OpWord w{letters(field(t, "creators")), letters(field(t, "annihilators"))};
        if (static_cast<int>(w.length()) > a.degree_cap()) throw ParseError("word longer than the degree cap");
        a.add_term(w, decode_rational(field(t, "coeff")));
    }
    return a;
}

Json encode(const Genus& g) { return Json{{"cp_values", encode_rationals(g.cp_values)}}; }
Genus decode_genus(const Json& j) { return Genus(decode_rationals(field(j, "cp_values"))); }

Json encode(const MSequence& K) {
    Json out = Json::array();
    for (const auto& p : K.K) out.push_back(encode(p));
    return out;
}

MSequence decode_msequence(const Json& j) {
    MSequence K;
    for (const auto& p : as_array(j, "multiplicative sequence")) K.K.push_back(decode_poly(p));
    return K;
}

} // namespace freewitt::json_io

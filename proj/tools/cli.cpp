#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "freewitt/check/selftest.hpp"
#include "freewitt/errors.hpp"
#include "freewitt/faber.hpp"
#include "freewitt/fock.hpp"
#include "freewitt/formal_group.hpp"
#include "freewitt/free_prob.hpp"
#include "freewitt/genus.hpp"
#include "freewitt/json_io.hpp"
#include "freewitt/witt.hpp"

namespace freewitt::cli {

namespace {

using json_io::Json;

class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    std::istream& in;
    std::ostream& out;
};

// A verb's result: JSON, or preformatted text for selftest.
struct Output {
    std::optional<Json> json;
    std::string text;
    int exit_code = 0;
};

struct Options {
    std::vector<std::string> inputs;
    std::optional<int> order;
    std::optional<int> len;
    std::optional<int> degree;
    int n = 6;
    int r = 2;
    std::optional<int> out_len;
    std::string f_path;
    std::string form = "additive";
    std::string name;
    std::optional<int> symbolic;
    std::uint64_t seed = 42;
};

Json read_json(const Context& ctx, const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << ctx.in.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(path);
        if (!f) throw IoError("cannot read '" + path + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    return json_io::parse(text);
}

const std::string& input(const Options& o, std::size_t i) {
    if (o.inputs.size() <= i) throw CLI::ValidationError("missing input file #" + std::to_string(i + 1));
    return o.inputs[i];
}

TruncSeries series_in(const Context& ctx, const Options& o, std::size_t i) {
    auto s = json_io::decode_series(read_json(ctx, input(o, i)));
    return o.order ? s.truncate(*o.order) : s;
}

Distribution distribution_in(const Context& ctx, const Options& o, std::size_t i) {
    auto mu = json_io::decode_distribution(read_json(ctx, input(o, i)));
    if (o.order) {
        if (*o.order > mu.order()) throw DomainError("BeyondOrder", "distribution has fewer moments than --order");
        mu = Distribution(std::vector<Rational>(mu.moments().begin(), mu.moments().begin() + *o.order));
    }
    return mu;
}

std::vector<Rational> fit(std::vector<Rational> comps, const Options& o) {
    if (!o.len) return comps;
    if (static_cast<std::size_t>(*o.len) > comps.size()) {
        throw DomainError("LengthMismatch", "vector shorter than --len");
    }
    comps.resize(static_cast<std::size_t>(*o.len));
    return comps;
}

// A Witt-side element in any of the four coordinate systems.
struct AnyVector {
    std::string kind;  // witt, ghost, necklace, lambda
    std::vector<Rational> comps;
    std::optional<TruncSeries> series;
};

AnyVector vector_in(const Context& ctx, const Options& o, std::size_t i) {
    const Json j = read_json(ctx, input(o, i));
    AnyVector v;
    if (j.is_object() && j.contains("order")) {
        v.kind = "lambda";
        auto s = json_io::decode_series(j);
        if (o.len) s = s.truncate(*o.len);
        v.series = s;
        return v;
    }
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) throw ParseError("vector needs a kind");
    v.kind = j.at("kind").get<std::string>();
    if (v.kind != "witt" && v.kind != "ghost" && v.kind != "necklace") throw ParseError("unknown vector kind");
    v.comps = fit(json_io::decode_comps(j, v.kind), o);
    return v;
}

Json ring_op(const AnyVector& a, const AnyVector& b, RingOp op) {
    if (a.kind != b.kind) throw DomainError("KindMismatch", "operands use different coordinates");
    if (a.kind == "witt") return json_io::encode(witt_ring_op(WittVector(a.comps), WittVector(b.comps), op));
    if (a.kind == "ghost") return json_io::encode(ghost_ring_op(GhostVector(a.comps), GhostVector(b.comps), op));
    if (a.kind == "necklace") {
        return json_io::encode(necklace_ring_op(NecklaceVector(a.comps), NecklaceVector(b.comps), op));
    }
    return json_io::encode(lambda_ring_op(LambdaElement(*a.series), LambdaElement(*b.series), op));
}

DomainError wrong_kind(const std::string& verb, const std::string& kind) {
    return DomainError("KindMismatch", verb + " does not accept a " + kind + " vector");
}

Json report_json(const IdentityReport& r) {
    Json j{{"pass", r.pass}};
    if (!r.pass) {
        j["identity"] = r.identity;
        j["monomial"] = MultiPoly::monomial(r.monomial, Rational(1)).str();
        j["coefficient"] = r.coefficient.str();
    }
    return j;
}

Json poly_list(const std::vector<MultiPoly>& ps) {
    Json arr = Json::array();
    for (const auto& p : ps) arr.push_back(json_io::encode(p));
    return arr;
}

FaberInput faber_in(const Context& ctx, const Options& o) {
    if (o.symbolic) return FaberInput::symbolic(*o.symbolic);
    const Json j = read_json(ctx, input(o, 0));
    if (!j.is_object() || !j.contains("b")) throw ParseError("Faber input needs a 'b' list");
    return FaberInput::numeric(json_io::decode_rationals(j.at("b")));
}

int order_or(const Options& o, int fallback) { return o.order ? *o.order : fallback; }

using Handler = std::function<Output(const Context&, const Options&)>;

Output json_out(Json j) {
    Output out;
    out.json = std::move(j);
    return out;
}

void add_verb(CLI::App& group, const std::string& name, const std::string& help, const std::vector<std::string>& aliases,
              const std::function<void(CLI::App&, Options&)>& flags, Handler handler,
              std::shared_ptr<Options> opts, std::shared_ptr<Handler> chosen) {
    auto* sub = group.add_subcommand(name, help);
    for (const auto& a : aliases) sub->alias(a);
    sub->add_option("inputs", opts->inputs, "JSON input files ('-' for stdin)");
    flags(*sub, *opts);
    sub->callback([chosen, handler]() { *chosen = handler; });
}

void order_flag(CLI::App& app, Options& o) { app.add_option("--order", o.order, "truncation order")->check(CLI::NonNegativeNumber); }
void len_flag(CLI::App& app, Options& o) { app.add_option("--len", o.len, "vector length")->check(CLI::NonNegativeNumber); }
void no_flags(CLI::App&, Options&) {}

void build(CLI::App& app, const std::shared_ptr<Options>& o, const std::shared_ptr<Handler>& chosen) {
    auto verb = [&](CLI::App& group, const std::string& name, const std::string& help,
                    const std::function<void(CLI::App&, Options&)>& flags, Handler h,
                    const std::vector<std::string>& aliases = {}) {
        add_verb(group, name, help, aliases, flags, std::move(h), o, chosen);
    };

    // series
    auto& series = *app.add_subcommand("series", "truncated power series");
    series.require_subcommand(1);
    auto arith = [&](const char* name, ArithKind k) {
        verb(series, name, std::string(name) + " two series", order_flag, [k](const Context& c, const Options& op) {
            return json_out(json_io::encode(series_arith(series_in(c, op, 0), series_in(c, op, 1), k)));
        });
    };
    arith("mul", ArithKind::mul);
    arith("div", ArithKind::div);
    verb(series, "compose", "f(g(z))", order_flag, [](const Context& c, const Options& op) {
        return json_out(json_io::encode(compose(series_in(c, op, 0), series_in(c, op, 1))));
    });
    verb(series, "invert", "compositional inverse", order_flag, [](const Context& c, const Options& op) {
        return json_out(json_io::encode(comp_inverse(series_in(c, op, 0))));
    });
    verb(series, "log", "log f for f(0) = 1", order_flag, [](const Context& c, const Options& op) {
        return json_out(json_io::encode(log_unit(series_in(c, op, 0))));
    });
    verb(series, "exp", "exp g for g(0) = 0", order_flag, [](const Context& c, const Options& op) {
        return json_out(json_io::encode(exp_zero(series_in(c, op, 0))));
    });
    verb(series, "zdlog", "z f'/f", order_flag, [](const Context& c, const Options& op) {
        return json_out(json_io::encode(z_dlog(series_in(c, op, 0))));
    });

    // fgl
    auto& fgl = *app.add_subcommand("fgl", "formal group laws");
    fgl.require_subcommand(1);
    verb(fgl, "fromlog", "F(x,y) = f^-1(f(x) + f(y))",
         [](CLI::App& a, Options& op) {
             order_flag(a, op);
             a.add_option("--degree", op.degree, "total degree");
         },
         [](const Context& c, const Options& op) {
             const auto log = series_in(c, op, 0);
             return json_out(json_io::encode(fgl_from_log(log, op.degree ? *op.degree : log.order())));
         });
    verb(fgl, "check", "neutral element, commutativity, associativity", no_flags,
         [](const Context& c, const Options& op) {
             return json_out(report_json(fgl_check_axioms(json_io::decode_fgl(read_json(c, input(op, 0))))));
         });
    verb(fgl, "inverse", "formal inverse", no_flags, [](const Context& c, const Options& op) {
        return json_out(json_io::encode(fgl_formal_inverse(json_io::decode_fgl(read_json(c, input(op, 0))))));
    });
    verb(fgl, "ishom", "is f a homomorphism F -> G (inputs: f, F, G)", order_flag,
         [](const Context& c, const Options& op) {
             const bool hom = fgl_is_hom(series_in(c, op, 0), json_io::decode_fgl(read_json(c, input(op, 1))),
                                         json_io::decode_fgl(read_json(c, input(op, 2))));
             return json_out(Json{{"hom", hom}});
         });
    verb(fgl, "expder", "exponential of the derivation v d/dz", order_flag, [](const Context& c, const Options& op) {
        const auto v = series_in(c, op, 0);
        return json_out(json_io::encode(exp_derivation(Derivation{v}, order_or(op, v.order()))));
    });

    // witt
    auto& witt = *app.add_subcommand("witt", "Witt vectors, Lambda(Q), necklace and ghost coordinates");
    witt.require_subcommand(1);
    verb(witt, "add", "ring sum in the coordinates of the inputs", len_flag, [](const Context& c, const Options& op) {
        return json_out(ring_op(vector_in(c, op, 0), vector_in(c, op, 1), RingOp::add));
    });
    verb(witt, "mul", "ring product in the coordinates of the inputs", len_flag,
         [](const Context& c, const Options& op) {
             return json_out(ring_op(vector_in(c, op, 0), vector_in(c, op, 1), RingOp::mul));
         });
    verb(witt, "ghost", "ghost components of a Witt, necklace or Lambda element; a ghost vector maps back to Witt",
         len_flag, [](const Context& c, const Options& op) {
             const auto v = vector_in(c, op, 0);
             if (v.kind == "witt") return json_out(json_io::encode(ghost_map(WittVector(v.comps))));
             if (v.kind == "necklace") return json_out(json_io::encode(g_tilde(NecklaceVector(v.comps))));
             if (v.kind == "lambda") return json_out(json_io::encode(lambda_ghost(LambdaElement(*v.series))));
             return json_out(json_io::encode(ghost_inv(GhostVector(v.comps))));
         });
    verb(witt, "gamma", "Witt vector to Lambda(Q), or back", len_flag, [](const Context& c, const Options& op) {
        const auto v = vector_in(c, op, 0);
        if (v.kind == "witt") return json_out(json_io::encode(gamma(WittVector(v.comps))));
        if (v.kind == "lambda") return json_out(json_io::encode(gamma_inv(LambdaElement(*v.series))));
        throw wrong_kind("gamma", v.kind);
    });
    verb(witt, "necklace", "necklace coordinates of a Witt or ghost vector; necklace to Lambda via c", len_flag,
         [](const Context& c, const Options& op) {
             const auto v = vector_in(c, op, 0);
             if (v.kind == "witt") return json_out(json_io::encode(f_tilde(WittVector(v.comps))));
             if (v.kind == "ghost") return json_out(json_io::encode(g_tilde_inv(GhostVector(v.comps))));
             if (v.kind == "necklace") return json_out(json_io::encode(c_map(NecklaceVector(v.comps))));
             throw wrong_kind("necklace", v.kind);
         });
    verb(witt, "vr", "Verschiebung V_r on necklace coordinates",
         [](CLI::App& a, Options& op) {
             len_flag(a, op);
             a.add_option("--r", op.r, "index r")->check(CLI::PositiveNumber);
         },
         [](const Context& c, const Options& op) {
             const auto v = vector_in(c, op, 0);
             if (v.kind != "necklace") throw wrong_kind("vr", v.kind);
             return json_out(json_io::encode(verschiebung(op.r, NecklaceVector(v.comps))));
         });
    verb(witt, "fr", "Frobenius F_r on necklace coordinates",
         [](CLI::App& a, Options& op) {
             len_flag(a, op);
             a.add_option("--r", op.r, "index r")->check(CLI::PositiveNumber);
             a.add_option("--out-len", op.out_len, "number of output components");
         },
         [](const Context& c, const Options& op) {
             const auto v = vector_in(c, op, 0);
             if (v.kind != "necklace") throw wrong_kind("fr", v.kind);
             const NecklaceVector alpha(v.comps);
             return json_out(json_io::encode(op.out_len ? frobenius(op.r, alpha, static_cast<std::size_t>(*op.out_len))
                                                        : frobenius(op.r, alpha)));
         });
    verb(witt, "diagram", "evaluate every path of the coordinate diagram on a Witt vector", len_flag,
         [](const Context& c, const Options& op) {
             const auto v = vector_in(c, op, 0);
             if (v.kind != "witt") throw wrong_kind("diagram", v.kind);
             const WittVector a(v.comps);
             const auto ghost = ghost_map(a);
             const auto lam = gamma(a);
             const auto neck = f_tilde(a);
             std::vector<Rational> scaled{Rational(0)};
             for (int n = 1; n <= static_cast<int>(ghost.size()); ++n) scaled.push_back(ghost.at(n) / Rational(n));
             Json paths{{"zdlog_gamma_eq_gammaw_w", z_dlog(lam.series()) == gamma_w(ghost)},
                        {"gtilde_ftilde_eq_w", g_tilde(neck) == ghost},
                        {"c_ftilde_eq_gamma", c_map(neck) == lam},
                        {"c_gtilde_inv_eq_exp", c_map(g_tilde_inv(ghost)).series() == exp_zero(TruncSeries(scaled))}};
             return json_out(Json{{"ghost", json_io::encode(ghost)},
                                  {"lambda", json_io::encode(lam)},
                                  {"necklace", json_io::encode(neck)},
                                  {"paths", paths}});
         });

    // faber
    auto& faber = *app.add_subcommand("faber", "Faber polynomials, Grunsky coefficients, Adams operations");
    faber.require_subcommand(1);
    auto faber_flags = [](CLI::App& a, Options& op) {
        a.add_option("--n", op.n, "largest index")->check(CLI::NonNegativeNumber);
        a.add_option("--symbolic", op.symbolic, "use symbolic b1..bL instead of an input file");
    };
    verb(faber, "poly", "F_0..F_n in the variable w (input: {\"b\": [...]})", faber_flags,
         [](const Context& c, const Options& op) {
             const auto b = faber_in(c, op);
             const auto F = faber_recursion(b, op.n);
             const auto gen = faber_from_generating(b, op.n);
             for (int k = 1; k <= op.n; ++k) {
                 if (!(F[k] == faber_det(b, k)) ||
                     !(F[k].substitute({{kFaberVar, MultiPoly(Rational(0))}}) == gen[k])) {
                     throw DomainError("RouteMismatch", "Faber routes disagree");
                 }
             }
             return json_out(Json{{"faber", poly_list(F)}});
         });
    verb(faber, "grunsky", "Grunsky coefficients beta_mn, 1 <= m, n <= --n (row-major)", faber_flags,
         [](const Context& c, const Options& op) { return json_out(json_io::encode(grunsky_coeffs(faber_in(c, op), op.n))); });
    verb(faber, "adams", "Adams operations Psi^1..Psi^n in lambda1..lambdan",
         [](CLI::App& a, Options& op) { a.add_option("--n", op.n, "largest index")->check(CLI::NonNegativeNumber); },
         [](const Context&, const Options& op) {
             std::vector<MultiPoly> psi;
             for (int k = 1; k <= op.n; ++k) psi.push_back(adams_poly(k));
             return json_out(Json{{"adams", poly_list(psi)}, {"faber_lemma", check_adams_lemma(op.n)}});
         });

    // freeprob
    auto& fp = *app.add_subcommand("freeprob", "free probability on moment sequences");
    fp.require_subcommand(1);
    verb(fp, "moments", "moments from free cumulants (input: {\"cumulants\": [...]})", order_flag,
         [](const Context& c, const Options& op) {
             auto k = json_io::decode_cumulants(read_json(c, input(op, 0)));
             if (op.order) {
                 if (*op.order > k.order()) throw DomainError("BeyondOrder", "fewer cumulants than --order");
                 k.k.resize(static_cast<std::size_t>(*op.order));
             }
             return json_out(json_io::encode(moments_from_cumulants(k)));
         });
    verb(fp, "cumulants", "free cumulants", order_flag, [](const Context& c, const Options& op) {
        return json_out(json_io::encode(cumulants_from_moments(distribution_in(c, op, 0))));
    });
    verb(fp, "rtransform", "R-transform", order_flag, [](const Context& c, const Options& op) {
        return json_out(json_io::encode(r_transform(distribution_in(c, op, 0))));
    });
    verb(fp, "stransform", "S-transform", order_flag, [](const Context& c, const Options& op) {
        return json_out(json_io::encode(s_transform(distribution_in(c, op, 0))));
    });
    auto binary = [&](const char* name, Distribution (*f)(const Distribution&, const Distribution&)) {
        verb(fp, name, name, order_flag, [f](const Context& c, const Options& op) {
            return json_out(json_io::encode(f(distribution_in(c, op, 0), distribution_in(c, op, 1))));
        });
    };
    binary("boxplus", boxplus);
    binary("boxtimes", boxtimes);
    binary("circledast", circledast);
    binary("boxdot", boxdot);
    verb(fp, "log", "LOG: mean-one laws to laws (order drops by one)", order_flag,
         [](const Context& c, const Options& op) {
             return json_out(json_io::encode(log_exp(distribution_in(c, op, 0), LogExpDir::log)));
         });
    verb(fp, "exp", "EXP: inverse of LOG (order rises by one)", order_flag, [](const Context& c, const Options& op) {
        return json_out(json_io::encode(log_exp(distribution_in(c, op, 0), LogExpDir::exp)));
    });
    verb(fp, "nctransform", "multiplicative functions on NC to those on all partitions", order_flag,
         [](const Context& c, const Options& op) {
             return json_out(json_io::encode(mult_fn_transform(series_in(c, op, 0))));
         });

    // fock
    auto& fock = *app.add_subcommand("fock", "creation/annihilation operators on the full Fock space");
    fock.require_subcommand(1);
    verb(fock, "moments", "vacuum moments of l + f(l*) or (1 + l) f(l*)",
         [](CLI::App& a, Options& op) {
             a.add_option("--f", op.f_path, "series f")->required();
             a.add_option("--form", op.form, "additive or haagerup")
                 ->check(CLI::IsMember({"additive", "haagerup"}));
             a.add_option("--order", op.order, "number of moments")->required()->check(CLI::NonNegativeNumber);
         },
         [](const Context& c, const Options& op) {
             const auto f = json_io::decode_series(read_json(c, op.f_path));
             const int N = *op.order;
             const auto a = op.form == "additive" ? additive_op(f, 1, 1, N) : haagerup_op(f, N);
             return json_out(json_io::encode(vacuum_moments(a, N)));
         });
    verb(fock, "freeness", "freeness checks for a = op(f) on generator 1, b = op(g) on generator 2", order_flag,
         [](const Context& c, const Options& op) {
             const auto f = json_io::decode_series(read_json(c, input(op, 0)));
             const auto g = json_io::decode_series(read_json(c, input(op, 1)));
             const auto rep = freeness_witness(f, g, order_or(op, std::min(f.order(), g.order())));
             Json j{{"additive", rep.additive},
                    {"multiplicative", rep.multiplicative_checked ? Json(rep.multiplicative) : Json(nullptr)},
                    {"alternating", rep.alternating},
                    {"patterns_checked", rep.patterns_checked},
                    {"pass", rep.pass()}};
             if (!rep.failure.empty()) j["failure"] = rep.failure;
             return json_out(j);
         });
    verb(fock, "genusop", "the operator (1 + l)(1/Q)(l*)", order_flag, [](const Context& c, const Options& op) {
        const auto q = json_io::decode_series(read_json(c, input(op, 0)));
        return json_out(json_io::encode(genus_operator(q, order_or(op, q.order()))));
    });

    // genus
    auto& genus = *app.add_subcommand("genus", "genera, characteristic series, multiplicative sequences");
    genus.require_subcommand(1);
    auto genus_source = [](CLI::App& a, Options& op) {
        a.add_option("--name", op.name, "trivial, todd or L instead of an input file");
        a.add_option("--len", op.len, "number of CP-values for --name")->check(CLI::PositiveNumber);
    };
    verb(genus, "fromvalues", "logarithm from CP-values (input: {\"cp_values\": [...]})", genus_source,
         [](const Context& c, const Options& op) {
             const Genus g = op.name.empty() ? json_io::decode_genus(read_json(c, input(op, 0)))
                                             : named_genus(op.name, op.len ? *op.len : 10);
             return json_out(json_io::encode(log_from_genus(g)));
         },
         {"from-values"});
    verb(genus, "fromlog", "CP-values from a strict logarithm", order_flag, [](const Context& c, const Options& op) {
        return json_out(json_io::encode(genus_from_log(series_in(c, op, 0))));
    }, {"from-log"});
    verb(genus, "named", "CP-values of a named genus", genus_source, [](const Context&, const Options& op) {
        return json_out(json_io::encode(named_genus(op.name, op.len ? *op.len : 10)));
    });
    verb(genus, "q", "characteristic series z / log^-1(z)", order_flag, [](const Context& c, const Options& op) {
        return json_out(json_io::encode(q_from_log(series_in(c, op, 0)).q));
    });
    verb(genus, "logfromq", "logarithm from a characteristic series", order_flag,
         [](const Context& c, const Options& op) {
             return json_out(json_io::encode(log_from_q(CharSeries(series_in(c, op, 0)))));
         }, {"log-from-q"});
    verb(genus, "ksequence", "multiplicative sequence K_0..K_D of a characteristic series",
         [](CLI::App& a, Options& op) { a.add_option("--degree", op.degree, "D <= 8")->check(CLI::NonNegativeNumber); },
         [](const Context& c, const Options& op) {
             const CharSeries q(json_io::decode_series(read_json(c, input(op, 0))));
             return json_out(json_io::encode(msequence_from_q(q, op.degree ? *op.degree : std::min(q.order(), 8))));
         });
    verb(genus, "checkmult", "check K(p' p'') = K(p') K(p'') up to weight D",
         [](CLI::App& a, Options& op) { a.add_option("--degree", op.degree, "D <= 6")->check(CLI::NonNegativeNumber); },
         [](const Context& c, const Options& op) {
             const auto K = json_io::decode_msequence(read_json(c, input(op, 0)));
             const auto rep = msequence_multiplicativity_check(K, op.degree ? *op.degree : std::min(K.degree(), 6));
             Json j{{"pass", rep.pass}};
             if (!rep.pass) {
                 j["weight"] = rep.weight;
                 j["monomial"] = rep.monomial;
                 j["coefficient"] = rep.coefficient.str();
             }
             return json_out(j);
         },
         {"check-mult"});
    verb(genus, "addlambda", "commutative structure: product of characteristic series", order_flag,
         [](const Context& c, const Options& op) {
             return json_out(json_io::encode(
                 genus_add_lambda(CharSeries(series_in(c, op, 0)), CharSeries(series_in(c, op, 1))).q));
         },
         {"add-lambda"});
    verb(genus, "composelog", "non-commutative structure: composition of logarithms", order_flag,
         [](const Context& c, const Options& op) {
             return json_out(json_io::encode(genus_compose_log(series_in(c, op, 0), series_in(c, op, 1))));
         },
         {"compose-log"});
    verb(genus, "fock", "S-transform of the vacuum law of the genus operator", order_flag,
         [](const Context& c, const Options& op) {
             return json_out(json_io::encode(genus_fock_s(CharSeries(series_in(c, op, 0)))));
         });

    // selftest
    verb(app, "selftest", "run the acceptance suite",
         [](CLI::App& a, Options& op) {
             a.add_option("--order", op.order, "length/order for the Witt and free-probability checks")
                 ->check(CLI::Range(2, 12));
             a.add_option("--seed", op.seed, "random seed");
         },
         [](const Context&, const Options& op) {
             check::SuiteOptions so;
             so.order = op.order ? *op.order : 8;
             so.seed = op.seed;
             const auto results = check::run_suite(so);
             Output out;
             out.text = check::render(results);
             for (const auto& r : results) {
                 if (!r.pass) out.exit_code = 1;
             }
             return out;
         });
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with Witt vectors, formal groups, free probability and genera", "freewitt"};
    app.require_subcommand(1);
    auto opts = std::make_shared<Options>();
    auto chosen = std::make_shared<Handler>();
    build(app, opts, chosen);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::string name = "UsageError";
        if (dynamic_cast<const CLI::RequiredError*>(&e) != nullptr || dynamic_cast<const CLI::ExtrasError*>(&e)) {
            name = "UnknownVerb";
        }
        err << "error: " << name << ": " << e.what() << "\n";
        return 1;
    }
    if (!*chosen) {
        err << "error: UnknownVerb: no verb given\n";
        return 1;
    }
    try {
        const Output result = (*chosen)(Context{in, out}, *opts);
        if (result.json) {
            out << json_io::dump(*result.json);
        } else {
            out << result.text;
        }
        return result.exit_code;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        err << "error: UsageError: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: ParseError: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        err << "error: IoError: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace freewitt::cli

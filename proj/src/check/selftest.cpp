#include "freewitt/check/selftest.hpp"

#include <exception>
#include <sstream>

#include "freewitt/check/oracle.hpp"
#include "freewitt/errors.hpp"
#include "freewitt/faber.hpp"
#include "freewitt/fock.hpp"
#include "freewitt/formal_group.hpp"
#include "freewitt/free_prob.hpp"
#include "freewitt/genus.hpp"
#include "freewitt/json_io.hpp"
#include "freewitt/partitions.hpp"
#include "freewitt/random.hpp"
#include "freewitt/witt.hpp"

namespace freewitt::check {

namespace {

class Checker {
public:
    Checker(CriterionResult& r) : r_(r) {}  // NOLINT

    void expect(bool ok, const std::string& what) {
        ++r_.checks;
        if (!ok && r_.detail.empty()) r_.detail = what;
    }

private:
    CriterionResult& r_;
};

CriterionResult start(int id, std::string name) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    return r;
}

CriterionResult finish(CriterionResult r) {
    r.pass = r.detail.empty();
    return r;
}

std::string idx(const char* label, long i) { return std::string(label) + " #" + std::to_string(i); }

Distribution random_distribution(Rng& rng, int N, bool mean_one) {
    std::vector<Rational> m = rng.rationals(static_cast<std::size_t>(N));
    m[0] = mean_one ? Rational(1) : rng.nonzero_rational();
    return Distribution(std::move(m));
}

TruncSeries geometric(const Rational& r, int order) {
    std::vector<Rational> c;
    Rational p(1);
    for (int k = 0; k <= order; ++k) {
        c.push_back(p);
        p *= r;
    }
    return TruncSeries(std::move(c));
}

} // namespace

CriterionResult witt_diagram(const SuiteOptions& opt) {
    auto r = start(1, "Witt diagram paths commute");
    Checker chk(r);
    Rng rng(opt.seed);
    const auto L = static_cast<std::size_t>(opt.order);
    for (long i = 0; i < 100; ++i) {
        const WittVector a(rng.rationals(L));
        const auto ghost = ghost_map(a);
        const auto lam = gamma(a);
        const auto neck = f_tilde(a);
        chk.expect(z_dlog(lam.series()) == gamma_w(ghost), idx("z dlog gamma = gamma^w w", i));
        chk.expect(g_tilde(neck) == ghost, idx("g~ f~ = w", i));
        chk.expect(c_map(neck) == lam, idx("c f~ = gamma", i));
        std::vector<Rational> scaled{Rational(0)};
        for (int n = 1; n <= opt.order; ++n) scaled.push_back(ghost.at(n) / Rational(n));
        chk.expect(c_map(g_tilde_inv(ghost)).series() == oracle::exp_by_powers(TruncSeries(scaled)),
                   idx("c g~^-1 = exp(sum x_n z^n / n)", i));
        chk.expect(gamma_inv(lam) == a && ghost_inv(ghost) == a, idx("gamma and w invert", i));
    }
    return finish(std::move(r));
}

CriterionResult ring_isomorphisms(const SuiteOptions& opt) {
    auto r = start(2, "ring structures agree on W, Lambda, Nr, ghost");
    Checker chk(r);
    Rng rng(opt.seed + 1);
    const int L = opt.order;
    const auto len = static_cast<std::size_t>(L);
    for (long i = 0; i < 50; ++i) {
        const WittVector a(rng.rationals(len));
        const WittVector b(rng.rationals(len));
        for (const auto op : {RingOp::add, RingOp::mul}) {
            const char* name = op == RingOp::add ? "add" : "mul";
            const auto w = witt_ring_op(a, b, op);
            chk.expect(ghost_map(w) == ghost_ring_op(ghost_map(a), ghost_map(b), op), idx(name, i) + " ghost");
            chk.expect(gamma(w) == lambda_ring_op(gamma(a), gamma(b), op), idx(name, i) + " Lambda");
            chk.expect(f_tilde(w) == necklace_ring_op(f_tilde(a), f_tilde(b), op), idx(name, i) + " necklace");
        }
        chk.expect(necklace_ring_op(f_tilde(a), f_tilde(b), RingOp::mul) ==
                       oracle::necklace_mul_lcm(f_tilde(a), f_tilde(b)),
                   idx("necklace product vs lcm/gcd formula", i));
    }
    for (long i = 0; i < 10; ++i) {
        const auto xi = rng.rationals(2, 3, 2);
        const auto eta = rng.rationals(2, 3, 2);
        const LambdaElement f(oracle::root_product(xi, L));
        const LambdaElement g(oracle::root_product(eta, L));
        auto both = xi;
        both.insert(both.end(), eta.begin(), eta.end());
        chk.expect(lambda_ring_op(f, g, RingOp::add).series() == oracle::root_product(both, L),
                   idx("Lambda sum of root products", i));
        chk.expect(lambda_ring_op(f, g, RingOp::mul).series() ==
                       oracle::root_product(oracle::product_roots(xi, eta), L),
                   idx("Lambda product of root products", i));
    }
    const auto unit = WittVector::unit_vector(1, len);
    const auto e1 = NecklaceVector::unit_vector(1, len);
    const GhostVector ones(std::vector<Rational>(len, Rational(1)));
    chk.expect(gamma(unit).series() == geometric(Rational(1), L), "gamma(1,0,...) = (1-z)^-1");
    chk.expect(f_tilde(unit) == e1, "f~(1,0,...) = e_1");
    chk.expect(g_tilde(e1) == ones && ghost_map(unit) == ones, "unit ghost vector is (1,1,...)");
    const WittVector a(rng.rationals(len));
    chk.expect(witt_ring_op(unit, a, RingOp::mul) == a, "Witt unit");
    chk.expect(lambda_ring_op(gamma(unit), gamma(a), RingOp::mul) == gamma(a), "Lambda unit");
    chk.expect(necklace_ring_op(e1, f_tilde(a), RingOp::mul) == f_tilde(a), "necklace unit");
    chk.expect(necklace_poly(Rational(2), 6) == Rational(oracle::primitive_binary_necklaces(6)),
               "M(2,6) counts primitive binary necklaces");
    return finish(std::move(r));
}

CriterionResult faber_routes(const SuiteOptions& opt) {
    auto r = start(3, "Faber routes, Grunsky coefficients, Adams lemma");
    Checker chk(r);
    Rng rng(opt.seed + 2);
    auto at_zero = [](const MultiPoly& p) { return p.substitute({{kFaberVar, MultiPoly(Rational(0))}}); };
    auto three_routes = [&](const FaberInput& b, int n_max, const std::string& label) {
        const auto rec = faber_recursion(b, n_max);
        const auto exp = faber_from_expansion(b, n_max);
        const auto gen = faber_from_generating(b, n_max);
        for (int n = 0; n <= n_max; ++n) {
            const std::string tag = label + " F_" + std::to_string(n);
            chk.expect(rec[n] == exp[n], tag + ": recursion vs expansion");
            chk.expect(at_zero(rec[n]) == gen[n], tag + "(0): recursion vs generating function");
            if (n >= 1) chk.expect(rec[n] == faber_det(b, n), tag + ": recursion vs determinant");
        }
    };
    for (int i = 0; i < 3; ++i) three_routes(FaberInput::numeric(rng.rationals(10)), 10, idx("numeric", i));
    three_routes(FaberInput::symbolic(6), 6, "symbolic");

    const int M = 8;
    for (int i = 0; i < 3; ++i) {
        const auto bv = rng.rationals(M);
        const auto b = FaberInput::numeric(bv);
        const auto table = grunsky_coeffs(b, M);  // also checks the bivariate definition for m+n <= M
        chk.expect(table.is_symmetric(), idx("Grunsky symmetry", i));
        const auto F = faber_recursion(b, M);
        for (int n = 1; n < M; ++n) {
            std::vector<Rational> coeffs;
            for (unsigned k = 0; k <= F[n].degree_in(kFaberVar); ++k) {
                coeffs.push_back(F[n].coefficient_of(kFaberVar, k).constant_term());
            }
            const auto laurent = oracle::compose_laurent(coeffs, bv, n - M);
            auto coeff = [&](int e) {
                const auto it = laurent.find(e);
                return it == laurent.end() ? Rational(0) : it->second;
            };
            bool ok = coeff(n) == Rational(1) && laurent.rbegin()->first == n;
            for (int e = 0; e < n; ++e) ok = ok && coeff(e).is_zero();
            for (int m = 1; m + n <= M; ++m) ok = ok && coeff(-m) == Rational(n) * table.at(m, n).constant_term();
            chk.expect(ok, idx("F_n(g(z)) reconstruction", i) + " n=" + std::to_string(n));
        }
    }
    chk.expect(check_adams_lemma(6), "Psi^n = (-1)^n F_n for n <= 6");
    return finish(std::move(r));
}

CriterionResult formal_groups(const SuiteOptions& opt) {
    auto r = start(4, "formal group laws and the Witt algebra");
    Checker chk(r);
    Rng rng(opt.seed + 3);
    const int D = 10;
    for (long i = 0; i < 20; ++i) {
        const auto log = rng.series(D, {Rational(0), Rational(1)});
        const auto F = fgl_from_log(log, D);
        const auto rep = fgl_check_axioms(F);
        chk.expect(rep.pass, idx("axioms", i) + ": " + rep.str());
        chk.expect(fgl_is_hom(log, F, Fgl::additive(D)), idx("log is a homomorphism to the additive law", i));
        chk.expect(fgl_logarithm(F) == log, idx("logarithm recovered", i));
    }
    std::vector<Rational> ln1p{Rational(0)};
    for (int k = 1; k <= D; ++k) ln1p.push_back(Rational(k % 2 == 1 ? 1 : -1, k));
    chk.expect(fgl_from_log(TruncSeries(ln1p), D).F == Fgl::multiplicative(D).F, "ln(1+z) gives x + y + xy");

    const int order = 16;
    for (int m = 0; m <= 5; ++m) {
        for (int n = 0; n <= 5; ++n) {
            const auto g = rng.series(order);
            const auto lm = Derivation::basis(m, order);
            const auto ln = Derivation::basis(n, order);
            const auto lhs = lm.apply(ln.apply(g)) - ln.apply(lm.apply(g));
            const auto rhs = (Rational(m - n) * Derivation::basis(m + n, order)).apply(g);
            const int common = std::min(lhs.order(), rhs.order());
            const std::string tag = "[l_" + std::to_string(m) + ", l_" + std::to_string(n) + "]";
            chk.expect(lhs.truncate(common) == rhs.truncate(common), tag + " on a series");
            const auto br = derivation_bracket(lm, ln).v;
            const auto expected = (Rational(m - n) * Derivation::basis(m + n, order)).v;
            const int c2 = std::min(br.order(), expected.order());
            chk.expect(br.truncate(c2) == expected.truncate(c2), tag + " as vector fields");
        }
    }
    std::vector<Rational> z_over(1, Rational(0));
    for (int k = 1; k <= D; ++k) z_over.push_back(Rational(k % 2 == 1 ? 1 : -1));
    chk.expect(exp_derivation(Derivation::basis(1, D), D) == TruncSeries(z_over), "exp(l_1) = z/(1+z)");
    return finish(std::move(r));
}

CriterionResult free_probability(const SuiteOptions& opt) {
    auto r = start(5, "moments, cumulants, R- and S-transforms");
    Checker chk(r);
    Rng rng(opt.seed + 4);
    const int N = opt.order;
    for (int n = 1; n <= N; ++n) {
        chk.expect(Rational(static_cast<long>(enumerate_partitions(n, PartitionMode::noncrossing).size())) ==
                       oracle::catalan(n),
                   "|NC(" + std::to_string(n) + ")| = Catalan");
        chk.expect(Rational(static_cast<long>(enumerate_partitions(n, PartitionMode::all).size())) == oracle::bell(n),
                   "|P(" + std::to_string(n) + ")| = Bell");
    }
    for (long i = 0; i < 10; ++i) {
        CumulantVector k{rng.rationals(static_cast<std::size_t>(N))};
        if (k.k[0].is_zero()) k.k[0] = Rational(1);
        const auto mu = moments_from_cumulants(k);
        chk.expect(mu == moments_from_cumulants_nc(k), idx("moments vs NC enumeration", i));
        chk.expect(cumulants_from_moments(mu) == k, idx("cumulant roundtrip", i));
        chk.expect(r_transform(mu) == r_series(k), idx("R-transform equals cumulant series", i));
        chk.expect(distribution_from_r(r_transform(mu)) == mu, idx("R-transform inverts", i));
        const auto S = s_transform_from_moments(mu);
        chk.expect(S == s_transform_from_cumulants(mu), idx("S-transform routes", i));
        chk.expect(distribution_from_s(S) == mu, idx("S-transform inverts", i));
    }
    std::vector<Rational> semi;
    std::vector<Rational> poisson;
    for (int n = 1; n <= N; ++n) {
        semi.push_back(n % 2 == 0 ? oracle::catalan(n / 2) : Rational(0));
        poisson.push_back(oracle::catalan(n));
    }
    chk.expect(Distribution::semicircle(N).moments() == semi, "semicircle moments are Catalan numbers");
    chk.expect(Distribution::free_poisson(N).moments() == poisson, "free Poisson moments are Catalan numbers");
    chk.expect(r_transform(Distribution::semicircle(N)) == TruncSeries::monomial(2, Rational(1), N),
               "semicircle R = z^2");
    chk.expect(r_transform(Distribution::free_poisson(N)) == geometric(Rational(1), N) - TruncSeries::one(N),
               "free Poisson R = z/(1-z)");
    chk.expect(s_transform(Distribution::free_poisson(N)) == geometric(Rational(-1), N - 1),
               "free Poisson S = 1/(1+z)");
    const Rational c(3, 2);
    const auto delta = Distribution::dirac(c, N);
    bool powers = true;
    for (int n = 1; n <= N; ++n) powers = powers && delta.moment(n) == c.pow(n);
    chk.expect(powers, "Dirac moments are powers");
    chk.expect(r_transform(delta) == TruncSeries::monomial(1, c, N), "Dirac R = c z");
    chk.expect(s_transform(delta) == TruncSeries::constant(c.inverse(), N - 1), "Dirac S = 1/c");
    chk.expect(s_transform(Distribution::circledast_unit(N)) == geometric(Rational(1), N - 1),
               "S of the circledast unit is (1-z)^-1");
    return finish(std::move(r));
}

CriterionResult distribution_rings(const SuiteOptions& opt) {
    auto r = start(6, "distribution rings and LOG/EXP");
    Checker chk(r);
    Rng rng(opt.seed + 5);
    const int N = opt.order;
    for (long i = 0; i < 5; ++i) {
        const auto mu = random_distribution(rng, N, true);
        const auto nu = random_distribution(rng, N, true);
        const auto rho = random_distribution(rng, N, true);
        const auto one = Distribution::dirac(Rational(1), N);
        const auto unit = Distribution::circledast_unit(N);
        chk.expect(boxtimes(boxtimes(mu, nu), rho) == boxtimes(mu, boxtimes(nu, rho)), idx("boxtimes associative", i));
        chk.expect(boxtimes(mu, nu) == boxtimes(nu, mu), idx("boxtimes commutative", i));
        chk.expect(boxtimes(mu, one) == mu, idx("boxtimes unit", i));
        chk.expect(boxtimes(mu, boxtimes_inverse(mu)) == one, idx("boxtimes inverse", i));
        chk.expect(circledast(circledast(mu, nu), rho) == circledast(mu, circledast(nu, rho)),
                   idx("circledast associative", i));
        chk.expect(circledast(mu, nu) == circledast(nu, mu), idx("circledast commutative", i));
        chk.expect(circledast(mu, unit) == mu, idx("circledast unit", i));
        chk.expect(circledast(boxtimes(mu, nu), rho) == boxtimes(circledast(mu, rho), circledast(nu, rho)),
                   idx("circledast distributes over boxtimes", i));

        const auto logmu = log_exp(mu, LogExpDir::log);
        const auto lognu = log_exp(nu, LogExpDir::log);
        chk.expect(log_exp(logmu, LogExpDir::exp) == mu, idx("EXP LOG = id", i));
        chk.expect(log_exp(boxtimes(mu, nu), LogExpDir::log) == boxplus(logmu, lognu), idx("LOG additive", i));
        chk.expect(log_exp(circledast(mu, nu), LogExpDir::log) == boxdot(logmu, lognu), idx("LOG multiplicative", i));

        const auto a = random_distribution(rng, N, false);
        const auto b = random_distribution(rng, N, false);
        const auto c = random_distribution(rng, N, false);
        const auto zero = Distribution::dirac(Rational(0), N);
        const auto fp = Distribution::free_poisson(N);
        chk.expect(boxplus(boxplus(a, b), c) == boxplus(a, boxplus(b, c)), idx("boxplus associative", i));
        chk.expect(boxplus(a, b) == boxplus(b, a), idx("boxplus commutative", i));
        chk.expect(boxplus(a, zero) == a, idx("boxplus unit", i));
        chk.expect(boxplus(a, boxplus_inverse(a)) == zero, idx("boxplus inverse", i));
        chk.expect(boxdot(boxdot(a, b), c) == boxdot(a, boxdot(b, c)), idx("boxdot associative", i));
        chk.expect(boxdot(a, b) == boxdot(b, a), idx("boxdot commutative", i));
        chk.expect(boxdot(a, fp) == a, idx("boxdot unit", i));
        chk.expect(boxdot(boxplus(a, b), c) == boxplus(boxdot(a, c), boxdot(b, c)), idx("boxdot distributes", i));

        const auto expa = log_exp(a, LogExpDir::exp);
        const auto expb = log_exp(b, LogExpDir::exp);
        chk.expect(log_exp(expa, LogExpDir::log) == a, idx("LOG EXP = id", i));
        chk.expect(log_exp(boxplus(a, b), LogExpDir::exp) == boxtimes(expa, expb), idx("EXP additive", i));
        chk.expect(log_exp(boxdot(a, b), LogExpDir::exp) == circledast(expa, expb), idx("EXP multiplicative", i));
    }
    chk.expect(log_exp(Distribution::dirac(Rational(1), N), LogExpDir::log) == Distribution::dirac(Rational(0), N - 1),
               "LOG maps the boxtimes unit to the boxplus unit");
    chk.expect(log_exp(Distribution::circledast_unit(N), LogExpDir::log) == Distribution::free_poisson(N - 1),
               "LOG maps the circledast unit to the boxdot unit");
    return finish(std::move(r));
}

CriterionResult fock_cross_validation(const SuiteOptions& opt) {
    auto r = start(7, "Fock space operators realize free convolutions");
    Checker chk(r);
    Rng rng(opt.seed + 6);
    const int N = 6;
    for (long i = 0; i < 20; ++i) {
        const CumulantVector k{rng.rationals(N)};
        const auto T = canonical_T(k, N);
        const auto moments = vacuum_moments(T, N);
        chk.expect(moments == moments_from_cumulants(k), idx("canonical operator moments", i));
        if (i < 3) {
            std::vector<OpElement> factors;
            bool ok = true;
            for (int n = 1; n <= N; ++n) {
                factors.push_back(T);
                ok = ok && oracle::fock_vacuum(factors) == moments.moment(n);
            }
            chk.expect(ok, idx("vacuum pairing vs explicit Fock vectors", i));
        }
    }
    for (long i = 0; i < 20; ++i) {
        const auto f = rng.series(N, {Rational(1)});
        const auto g = rng.series(N, {Rational(1)});
        const auto rep = freeness_witness(f, g, N);
        chk.expect(rep.additive, idx("R additivity", i));
        chk.expect(rep.multiplicative_checked && rep.multiplicative, idx("S multiplicativity", i));
        chk.expect(rep.alternating, idx("alternating centered products", i) + ": " + rep.failure);
    }
    return finish(std::move(r));
}

CriterionResult genus_suite(const SuiteOptions& /*opt*/) {
    auto r = start(8, "genera, characteristic series, multiplicative sequences");
    Checker chk(r);
    const auto todd = q_from_log(log_from_genus(named_genus("todd", 11)));
    const auto ell = q_from_log(log_from_genus(named_genus("L", 11)));
    const auto triv = q_from_log(log_from_genus(named_genus("trivial", 11)));
    chk.expect(todd.q == oracle::todd_q(10), "Todd Q = z/(1 - e^-z) to order 10");
    chk.expect(todd.q[1] == Rational(1, 2) && todd.q[2] == Rational(1, 12) && todd.q[3].is_zero() &&
                   todd.q[4] == Rational(-1, 720),
               "Todd Q = 1 + z/2 + z^2/12 - z^4/720 + ...");
    chk.expect(ell.q == oracle::l_genus_q(10), "L-genus Q = z/tanh z to order 10");
    chk.expect(ell.q[1].is_zero() && ell.q[2] == Rational(1, 3) && ell.q[4] == Rational(-1, 45),
               "L-genus Q = 1 + z^2/3 - z^4/45 + ...");
    chk.expect(triv.q == TruncSeries::one(10), "trivial genus Q = 1");

    for (const auto* name : {"trivial", "todd", "L"}) {
        const auto g = named_genus(name, 11);
        const auto log = log_from_genus(g);
        chk.expect(genus_from_log(log) == g, std::string(name) + ": CP-values roundtrip");
        const auto q = q_from_log(log);
        chk.expect(log_from_q(q) == log, std::string(name) + ": log <-> Q roundtrip");
        const auto K = msequence_from_q(q, 8);
        std::map<std::string, Rational> point;
        for (int i = 1; i <= 8; ++i) point[elementary_var(i)] = Rational(i == 1 ? 1 : 0);
        for (int n = 0; n <= 8; ++n) {
            chk.expect(K.K[n].is_weighted_homogeneous(n), std::string(name) + ": K_" + std::to_string(n) + " homogeneous");
            chk.expect(K.K[n].evaluate(point) == q.q[n], std::string(name) + ": K_" + std::to_string(n) + "(1,0,...)");
        }
        const auto rep = msequence_multiplicativity_check(K, 6);
        chk.expect(rep.pass, std::string(name) + ": multiplicativity " + rep.str());
        chk.expect(oracle::msequence_matches_roots(q.q, K, 4), std::string(name) + ": formal roots oracle");
        const CharSeries q6(q.q.truncate(6));
        chk.expect(genus_fock_s(q6) == q6.q, std::string(name) + ": S(tau(A)) = Q to order 6");
        if (std::string(name) == "todd") {
            const auto p1 = MultiPoly::variable(elementary_var(1), 1);
            const auto p2 = MultiPoly::variable(elementary_var(2), 2);
            chk.expect(K.K[1] == Rational(1, 2) * p1, "Todd K_1 = p_1/2");
            chk.expect(K.K[2] == Rational(1, 12) * (p2 + p1 * p1), "Todd K_2 = (p_2 + p_1^2)/12");
        }
    }
    const auto composed = genus_compose_log(log_from_genus(named_genus("todd", 11)),
                                            log_from_genus(named_genus("L", 11)));
    chk.expect(is_strict_log(composed), "composition of strict logs is strict");
    chk.expect(genus_add_lambda(todd, ell).q == todd.q * ell.q, "Lambda addition multiplies Q");
    return finish(std::move(r));
}

CriterionResult encodings_roundtrip(const SuiteOptions& opt) {
    auto r = start(9, "deterministic output and JSON roundtrips");
    Checker chk(r);
    using namespace json_io;
    auto roundtrip = [&](const Json& j, auto decoder, const std::string& what) {
        const std::string text = dump(j);
        const std::string again = dump(encode(decoder(parse(text))));
        chk.expect(text == again, what + " roundtrip");
    };
    auto sample = [&](std::uint64_t seed) {
        Rng rng(seed);
        std::string out;
        const int L = opt.order;
        const auto len = static_cast<std::size_t>(L);
        const auto s = rng.series(L);
        roundtrip(encode(s), decode_series, "series");
        out += dump(encode(s));
        const WittVector a(rng.rationals(len));
        roundtrip(encode(a), decode_witt, "Witt vector");
        roundtrip(encode(ghost_map(a)), decode_ghost, "ghost vector");
        roundtrip(encode(f_tilde(a)), decode_necklace, "necklace vector");
        roundtrip(encode(gamma(a)), decode_lambda, "Lambda element");
        out += dump(encode(gamma(a)));
        const auto F = fgl_from_log(rng.series(6, {Rational(0), Rational(1)}), 6);
        roundtrip(encode(F), decode_fgl, "formal group law");
        out += dump(encode(F));
        const Distribution mu(rng.rationals(len));
        roundtrip(encode(mu), decode_distribution, "distribution");
        roundtrip(encode(cumulants_from_moments(mu)), decode_cumulants, "cumulants");
        const auto b = FaberInput::numeric(rng.rationals(4));
        roundtrip(encode(grunsky_coeffs(b, 4)), decode_grunsky, "Grunsky table");
        roundtrip(encode(grunsky_coeffs(FaberInput::symbolic(3), 3)), decode_grunsky, "symbolic Grunsky table");
        roundtrip(encode(faber_recursion(FaberInput::symbolic(3), 3)[3]), decode_poly, "polynomial");
        const auto T = canonical_T(CumulantVector{rng.rationals(4)}, 4);
        roundtrip(encode(T), decode_op, "operator");
        out += dump(encode(T));
        roundtrip(encode(named_genus("L", 6)), decode_genus, "genus");
        const auto K = msequence_from_q(q_from_log(log_from_genus(named_genus("todd", 5))), 4);
        roundtrip(encode(K), decode_msequence, "multiplicative sequence");
        out += dump(encode(K));
        return out;
    };
    chk.expect(sample(opt.seed) == sample(opt.seed), "seeded generation is reproducible");
    chk.expect(encode(Rational(3)) == Json("3/1") && encode(Rational(-2, 4)) == Json("-1/2"),
               "rationals encode as p/q");
    return finish(std::move(r));
}

const std::vector<CriterionFn>& all_criteria() {
    static const std::vector<CriterionFn> fns{witt_diagram,     ring_isomorphisms,     faber_routes,
                                              formal_groups,    free_probability,      distribution_rings,
                                              fock_cross_validation, genus_suite,      encodings_roundtrip};
    return fns;
}

CriterionResult run_criterion(CriterionFn fn, const SuiteOptions& opt) {
    try {
        return fn(opt);
    } catch (const DomainError& e) {
        CriterionResult r;
        r.detail = std::string("unexpected ") + e.name() + ": " + e.what();
        return r;
    } catch (const std::exception& e) {
        CriterionResult r;
        r.detail = std::string("unexpected exception: ") + e.what();
        return r;
    }
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opt) {
    std::vector<CriterionResult> out;
    int id = 1;
    for (auto fn : all_criteria()) {
        auto r = run_criterion(fn, opt);
        if (r.id == 0) {
            r.id = id;
            r.name = "criterion " + std::to_string(id);
        }
        out.push_back(std::move(r));
        ++id;
    }
    return out;
}

std::string render(const std::vector<CriterionResult>& results) {
    std::ostringstream os;
    int passed = 0;
    for (const auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name << " (" << r.checks
           << " checks)";
        if (!r.pass) os << " -- " << r.detail;
        os << "\n";
        passed += r.pass ? 1 : 0;
    }
    os << passed << "/" << results.size() << " criteria passed\n";
    return os.str();
}

} // namespace freewitt::check

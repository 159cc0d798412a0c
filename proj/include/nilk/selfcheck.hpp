#pragma once

// Randomized invariant suites. Each case either holds or yields a short
// description of the counterexample; exceptions count as failures.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nilk/random.hpp"
#include "nilk/ring_maps.hpp"
#include "nilk/rings.hpp"
#include "nilk/steinberg.hpp"

namespace nilk {

struct PropertyOutcome {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const { return cases > 0 && failures == 0; }
};

using PropertyCase = std::function<std::optional<std::string>(RandomSource &)>;

inline PropertyOutcome run_property(std::string name, std::size_t cases, std::uint64_t seed, const PropertyCase &body) {
    PropertyOutcome out{std::move(name), 0, 0, {}};
    RandomSource rng(seed);
    for (std::size_t k = 0; k < cases; ++k) {
        std::optional<std::string> bad;
        try {
            bad = body(rng);
        } catch (const std::exception &e) {
            bad = std::string("exception: ") + e.what();
        }
        ++out.cases;
        if (bad) {
            if (out.failures++ == 0)
                out.first_failure = "case " + std::to_string(k) + ": " + *bad;
        }
    }
    return out;
}

namespace props {

/// Commutative ring axioms plus canonical form under term-by-term rebuilding.
template <Coefficient C>
PropertyCase ring_axioms(RingPtr ring) {
    return [ring](RandomSource &rng) -> std::optional<std::string> {
        using P = Poly<C>;
        P a = random_poly<C>(rng, ring), b = random_poly<C>(rng, ring), c = random_poly<C>(rng, ring);
        const P zero = P::zero(ring), one = P::one(ring);
        auto where = [&](const char *law) {
            return std::string(law) + " for a=" + a.to_string() + ", b=" + b.to_string() + ", c=" + c.to_string();
        };
        if (!((a + b) + c == a + (b + c)))
            return where("additive associativity");
        if (!(a + b == b + a))
            return where("additive commutativity");
        if (!(a + zero == a) || !(a + (-a) == zero) || !(a - b == a + (-b)))
            return where("additive identity/inverse");
        if (!((a * b) * c == a * (b * c)))
            return where("multiplicative associativity");
        if (!(a * b == b * a))
            return where("multiplicative commutativity");
        if (!(a * one == a) || !(a * zero == zero))
            return where("multiplicative identity");
        if (!(a * (b + c) == a * b + a * c))
            return where("distributivity");
        P rebuilt = zero;
        const auto &terms = a.terms();
        for (auto it = terms.rbegin(); it != terms.rend(); ++it)
            rebuilt = rebuilt + P::monomial(ring, it->first, it->second);
        if (!(rebuilt == a) || rebuilt.to_string() != a.to_string())
            return where("canonical form");
        return std::nullopt;
    };
}

/// f(a+b) = f(a)+f(b), f(ab) = f(a)f(b), f(1) = 1.
template <Coefficient C, class F>
PropertyCase homomorphism(RingPtr ring, F f) {
    return [ring, f](RandomSource &rng) -> std::optional<std::string> {
        auto a = random_poly<C>(rng, ring), b = random_poly<C>(rng, ring);
        if (!(f(a + b) == f(a) + f(b)))
            return "additivity fails for " + a.to_string() + ", " + b.to_string();
        if (!(f(a * b) == f(a) * f(b)))
            return "multiplicativity fails for " + a.to_string() + ", " + b.to_string();
        if (!f(Poly<C>::one(ring)).is_one())
            return std::string("1 not sent to 1");
        return std::nullopt;
    };
}

/// Generator multiples lie in the ideal, and the ideal is closed under sums and ring multiples.
template <Coefficient C>
PropertyCase ideal_closure(RingPtr ring, Poly<C> generator, IdealSpec spec) {
    return [ring, generator, spec](RandomSource &rng) -> std::optional<std::string> {
        auto a = generator * random_poly<C>(rng, ring), b = generator * random_poly<C>(rng, ring);
        auto r = random_poly<C>(rng, ring);
        if (!ideal_member(a, spec))
            return "multiple " + a.to_string() + " not recognized in " + to_string(spec);
        if (!ideal_member(a + b, spec) || !ideal_member(a - b, spec))
            return "sum leaves " + to_string(spec) + ": " + a.to_string() + ", " + b.to_string();
        if (!ideal_member(r * a, spec))
            return "ring multiple leaves " + to_string(spec) + ": " + r.to_string() + " * " + a.to_string();
        return std::nullopt;
    };
}

template <Coefficient C>
PropertyCase det_multiplicative(RingPtr ring, std::size_t n) {
    return [ring, n](RandomSource &rng) -> std::optional<std::string> {
        auto A = random_matrix<C>(rng, ring, n, n), B = random_matrix<C>(rng, ring, n, n);
        if (!((A * B).det() == A.det() * B.det()))
            return "det(AB) != det(A)det(B) for A=" + A.to_string() + ", B=" + B.to_string();
        if (!A.transpose().det().is_zero() && !(A.transpose().det() == A.det()))
            return "det(A^T) != det(A) for A=" + A.to_string();
        return std::nullopt;
    };
}

/// eval(w1 w2) = eval(w1) eval(w2) and eval(w^-1) = eval(w)^-1.
template <Coefficient C>
PropertyCase eval_homomorphism(RingPtr ring, std::size_t n) {
    return [ring, n](RandomSource &rng) -> std::optional<std::string> {
        auto w1 = random_word<C>(rng, ring, n), w2 = random_word<C>(rng, ring, n);
        if (!((w1 * w2).eval(n) == w1.eval(n) * w2.eval(n)))
            return "eval(w1 w2) != eval(w1) eval(w2) for " + w1.to_string() + " | " + w2.to_string();
        if (!(w1.inverse().eval(n) * w1.eval(n)).is_identity())
            return "eval(w^-1) eval(w) != I for " + w1.to_string();
        return std::nullopt;
    };
}

/// <a, b> evaluates to I when a is a multiple of a nilpotent (so 1 - ab is a unit).
template <Coefficient C>
PropertyCase dennis_stein_identity(RingPtr ring, Poly<C> nilpotent) {
    return [ring, nilpotent](RandomSource &rng) -> std::optional<std::string> {
        auto a = nilpotent * random_poly<C>(rng, ring), b = random_poly<C>(rng, ring);
        if (rng.coin())
            std::swap(a, b);
        const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
        std::size_t i = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(n))), j = i;
        while (j == i)
            j = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(n)));
        if (!dennis_stein_word(i, j, a, b).eval(n).is_identity())
            return "<" + a.to_string() + ", " + b.to_string() + "> does not evaluate to I";
        return std::nullopt;
    };
}

} // namespace props

/// All suites, `cases` cases per suite and ring.
inline std::vector<PropertyOutcome> run_property_suites(std::uint64_t seed, std::size_t cases) {
    std::vector<PropertyOutcome> out;
    auto run = [&](std::string name, const PropertyCase &body) { out.push_back(run_property(name, cases, seed++, body)); };

    const auto ts = rings::ts(), ts2 = rings::ts_mod_t2(), tsz = rings::tsz(), x = rings::x();

    run("ring axioms QQ[t,s]", props::ring_axioms<Rational>(ts));
    run("ring axioms QQ[t,s]/(t^2)", props::ring_axioms<Rational>(ts2));
    run("ring axioms QQ[t,s,z,z^-1]", props::ring_axioms<Rational>(tsz));
    run("ring axioms ZZ[x]", props::ring_axioms<Integer>(x));
    run("ring axioms ZZ[i][x]", props::ring_axioms<GaussianInt>(x));
    run("ring axioms ZZ[C4][x]", props::ring_axioms<GroupRingZ4>(x));
    run("ring axioms F2[x]", props::ring_axioms<F2>(x));
    run("ring axioms F2[e]/(e^2)[x]", props::ring_axioms<DualF2>(x));

    run("homomorphism psi", props::homomorphism<GroupRingZ4>(x, [](const auto &p) { return psi(p); }));
    run("homomorphism rho", props::homomorphism<GaussianInt>(x, [](const auto &p) { return rho(p); }));
    run("homomorphism pi_t2", props::homomorphism<Rational>(ts, [](const auto &p) { return pi_t2(p); }));
    run("homomorphism rho.psi",
        props::homomorphism<GroupRingZ4>(x, [](const auto &p) { return rho(psi(p)); }));

    run("ideal closure (t^2)",
        props::ideal_closure<Rational>(ts, parse_poly<Rational>("t^2", ts), IdealSpec::MonomialT2));
    run("ideal closure (2)",
        props::ideal_closure<GaussianInt>(x, Poly<GaussianInt>::from_int(x, 2), IdealSpec::PrincipalTwo));
    run("ideal closure (1-sigma^2)", props::ideal_closure<GroupRingZ4>(x, parse_poly<GroupRingZ4>("1-sigma^2", x),
                                                                      IdealSpec::PrincipalOneMinusSigmaSq));

    run("det multiplicative 2x2 QQ[t,s]", props::det_multiplicative<Rational>(ts, 2));
    run("det multiplicative 3x3 QQ[t,s,z,z^-1]", props::det_multiplicative<Rational>(tsz, 3));
    run("det multiplicative 2x2 ZZ[C4][x]", props::det_multiplicative<GroupRingZ4>(x, 2));

    run("eval homomorphism QQ[t,s]", props::eval_homomorphism<Rational>(ts, 3));
    run("eval homomorphism ZZ[i][x]", props::eval_homomorphism<GaussianInt>(x, 2));
    run("eval homomorphism F2[e]/(e^2)[x]", props::eval_homomorphism<DualF2>(x, 3));

    run("Dennis-Stein identity F2[e]/(e^2)[x]",
        props::dennis_stein_identity<DualF2>(x, parse_poly<DualF2>("e", x)));
    run("Dennis-Stein identity QQ[t,s]/(t^2)", props::dennis_stein_identity<Rational>(ts2, parse_poly<Rational>("t", ts2)));
    return out;
}

} // namespace nilk

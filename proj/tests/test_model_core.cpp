#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "phi4tc/graph.hpp"
#include "phi4tc/model_spec.hpp"
#include "phi4tc/single_site.hpp"

using namespace phi4tc;

TEST_CASE("single-site moments: normalisation and symmetry") {
    SingleSiteParams p{1.0, 0.0};
    CHECK(single_site_moment(p, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(raw_moment(p, 1) == 0.0);
    CHECK_THROWS_AS(single_site_moment(p, 1), std::domain_error);
    CHECK_THROWS_AS(single_site_moment({-1.0, 0.0}, 2), std::invalid_argument);
}

TEST_CASE("single-site moments: u2 at g=1,a=0 equals Gamma(3/4)/Gamma(1/4)") {
    // independent oracle: u2 = Gamma(3/4)/Gamma(1/4) = 0.33798912003419...
    const double expected = std::tgamma(0.75) / std::tgamma(0.25);
    SingleSiteParams p{1.0, 0.0};
    CHECK(single_site_moment(p, 2) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(single_site_moment(p, 2) == doctest::Approx(0.337989120034).epsilon(1e-9));
    // u4 at g=1,a=0 is exactly 1/4 (substitute s = t^4 in both integrals)
    CHECK(single_site_moment(p, 4) == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("moment recursion residual vanishes and detects perturbations") {
    for (auto [g, a] : {std::pair{1.0, 0.0}, std::pair{2.0, -1.0}, std::pair{0.7, 1.3}}) {
        MomentTable table({g, a}, 24);
        for (int k = 0; k + 2 <= 10; ++k) {
            const double res = moment_recursion_residual(table, k);
            CHECK(std::abs(res) <= 10 * table.tol() * std::max(1.0, table.u(2 * k)) * 1e4);
        }
    }
    // a 1% perturbation of u2 moves the k=1 residual by 3*delta (linearity)
    MomentTable table({1.0, 0.0}, 8);
    const double delta = 0.01 * table.u(2);
    const double shifted = 3.0 * (table.u(2) + delta) - 4.0 * 1.0 * table.u(6);
    const double moved = std::abs(shifted - moment_recursion_residual(table, 1));
    CHECK(moved == doctest::Approx(3.0 * delta).epsilon(1e-6));
    CHECK(moved > 100.0 * 10.0 * table.tol());  // bounded away from zero
}

TEST_CASE("moment table: log-convexity and ratio bound") {
    MomentTable table({0.8, -1.2}, 32);
    double prev = 0.0;
    for (int k = 0; 2 * k + 2 <= 32; ++k) {
        const double r = table.u(2 * k + 2) / table.u(2 * k);
        CHECK(r >= prev * (1.0 - 1e-9));  // nondecreasing ratios
        prev = r;
        CHECK(table.u(2 * k) > 0.0);
        CHECK(r <= table.step_ratio_bound(2 * k) * (1.0 + 1e-9));
    }
    // closed-form bound holds past the housed range by construction; sanity
    CHECK(table.step_ratio_bound(100) >= table.max_step_ratio());
}

TEST_CASE("gs_couplings arithmetic is pure and self-consistent") {
    SingleSiteParams p{12.0, 0.0};
    auto gs = gs_couplings(p, 16);
    CHECK(gs.g_tilde == doctest::Approx(std::pow(12.0 * 12.0, -0.25)));
    CHECK(gs.a_tilde == 0.0);
    CHECK(gs.c_N == doctest::Approx(gs.g_tilde * std::pow(16.0, -0.75)));
    CHECK(gs.d_N == doctest::Approx(1.0 / 16.0));
    auto gs2 = gs_couplings(p, 16);
    CHECK(gs.c_N == gs2.c_N);  // bit-identical recomputation
    CHECK(gs.d_N == gs2.d_N);
    CHECK_THROWS_AS(gs_couplings(p, 0), std::invalid_argument);

    SingleSiteParams q{12.0, 1.0};
    auto gq = gs_couplings(q, 4);
    CHECK(gq.a_tilde == doctest::Approx(2.0 * gq.g_tilde * gq.g_tilde));
    CHECK(gq.d_N == doctest::Approx(0.25 * (1.0 - gq.a_tilde / 2.0)));
}

TEST_CASE("validate_interaction flags the spec cases") {
    InteractionGraph g2(2);
    g2.set_coupling(0, 1, 1.0);
    CHECK(validate_interaction(g2).valid());

    InteractionGraph neg(2);
    neg.set_coupling(0, 1, -1.0);
    auto rep = validate_interaction(neg);
    CHECK(!rep.ferromagnetic);
    CHECK(!rep.valid());

    InteractionGraph disc(3);
    disc.set_coupling(0, 1, 1.0);
    auto rep3 = validate_interaction(disc);
    CHECK(!rep3.irreducible);
}

TEST_CASE("boundary profile values") {
    // path 0-1-2-3
    InteractionGraph path(4);
    for (int i = 0; i + 1 < 4; ++i) path.set_coupling(i, i + 1, 1.0);
    auto prof = boundary_profile(1.0, path, 0);
    CHECK(prof.values[0] == 0.0);                       // log(0 v 1) = 0
    CHECK(prof.values[1] == 0.0);                       // log(1) = 0
    CHECK(prof.values[3] == doctest::Approx(std::pow(std::log(3.0), 0.25)));
    CHECK(prof.values[3] == doctest::Approx(1.0237905).epsilon(1e-4));
    auto prof16 = boundary_profile(16.0, path, 0);
    CHECK(prof16.values[3] == doctest::Approx(2.0 * std::pow(std::log(3.0), 0.25)));
    // monotone in distance
    CHECK(prof.values[2] <= prof.values[3]);
    InteractionGraph disc(2);
    CHECK_THROWS_AS(boundary_profile(1.0, disc, 0), std::runtime_error);
}

TEST_CASE("ModelSpec json round trip") {
    const char* text = R"({
        "g": 1.5, "a": -0.5, "beta": 0.4, "h": 0.1,
        "vertices": ["x", "y"], "edges": [[0, 1, 1.0]]
    })";
    auto spec = ModelSpec::from_json_text(text);
    CHECK(spec.params.g == 1.5);
    CHECK(spec.h.size() == 2);
    CHECK(spec.h[0] == 0.1);
    CHECK(spec.graph.coupling(0, 1) == 1.0);
    auto spec2 = ModelSpec::from_json_text(spec.to_json_text());
    CHECK(spec2.to_json_text() == spec.to_json_text());
    CHECK_THROWS(ModelSpec::from_json_text(R"({"g": -1, "vertices": ["x"]})"));
}

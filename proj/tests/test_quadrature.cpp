#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "magphon/quadrature.hpp"

using namespace magphon;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("gauss-legendre nodes and weights") {
    const GaussLegendre r = GaussLegendre::on_interval(64, -1.0, 1.0);
    double wsum = 0.0;
    for (std::size_t i = 0; i < r.weights.size(); ++i) {
        wsum += r.weights[i];
        if (i) CHECK(r.nodes[i] > r.nodes[i - 1]); // ascending
        // symmetric about 0
        CHECK_THAT(r.nodes[i] + r.nodes[r.nodes.size() - 1 - i], WithinAbs(0.0, 1e-15));
    }
    CHECK_THAT(wsum, WithinAbs(2.0, 1e-14));
}

TEST_CASE("polynomial exactness up to degree 2n-1") {
    const int n = 16;
    const GaussLegendre r = GaussLegendre::on_interval(n, 0.0, 1.0);
    for (int deg : {0, 1, 5, 17, 2 * n - 1}) {
        double s = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i)
            s += r.weights[i] * std::pow(r.nodes[i], deg);
        CHECK_THAT(s, WithinRel(1.0 / (deg + 1.0), 1e-13));
    }
}

TEST_CASE("smooth integrand convergence") {
    // int_0^pi sin = 2
    const GaussLegendre r = GaussLegendre::on_interval(32, 0.0, std::acos(-1.0));
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::sin(r.nodes[i]);
    CHECK_THAT(s, WithinRel(2.0, 1e-14));
}

TEST_CASE("large orders behave") {
    for (int n : {511, 512, 1024}) {
        const GaussLegendre r = GaussLegendre::on_interval(n, 0.0, 2.0);
        double s = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i)
            s += r.weights[i] * r.nodes[i] * r.nodes[i];
        CHECK_THAT(s, WithinRel(8.0 / 3.0, 1e-13));
    }
    CHECK_THROWS_AS(GaussLegendre::on_interval(0, 0.0, 1.0), std::invalid_argument);
}

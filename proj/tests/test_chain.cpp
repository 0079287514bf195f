#include "rosekit/chain.hpp"

#include <doctest.h>

#include <random>

using namespace rosekit;
using chain::ChainComplex;
using chain::Coefficients;
using exactla::Integer;
using exactla::IntegerMatrix;

namespace {

// complex of the mapping cone of a degree-m self-map of the circle
ChainComplex pseudo_projective_plane(long long m, Coefficients coeff = Coefficients::integers()) {
    IntegerMatrix d1(1, 1);
    IntegerMatrix d2(1, 1);
    d2.at(0, 0) = m;
    return ChainComplex(coeff, {1, 1, 1}, {d1, d2});
}

ChainComplex wedge_of_circles(int m) {
    return ChainComplex(Coefficients::integers(), {1, m}, {IntegerMatrix(1, m)});
}

// random three-term complex: a random degree-1 boundary, then a degree-2
// boundary assembled from its integer kernel so the composite vanishes
ChainComplex random_complex(std::mt19937& rng, int max_dim) {
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::uniform_int_distribution<int> entry(-4, 4);
    const int d0 = dim(rng), d1 = dim(rng);
    IntegerMatrix b1(d0, d1);
    for (int i = 0; i < d0; ++i)
        for (int j = 0; j < d1; ++j) b1.at(i, j) = entry(rng);
    auto kernel = exactla::kernel_basis_integer(b1);
    IntegerMatrix b2(d1, static_cast<int>(kernel.size()));
    for (std::size_t c = 0; c < kernel.size(); ++c) {
        const long long scale = entry(rng);
        for (int r = 0; r < d1; ++r) b2.at(r, static_cast<int>(c)) = scale * kernel[c][r];
    }
    return ChainComplex(Coefficients::integers(), {d0, d1, b2.cols()}, {b1, b2});
}

long long p_torsion_count(const std::vector<Integer>& torsion, std::int64_t p) {
    long long n = 0;
    for (const Integer& t : torsion)
        if (t % p == 0) ++n;
    return n;
}

}  // namespace

TEST_CASE("boundary composite is checked on construction") {
    IntegerMatrix b1 = IntegerMatrix::from_rows({{1, 0}});
    IntegerMatrix b2 = IntegerMatrix::from_rows({{1}, {0}});
    CHECK_THROWS_AS(ChainComplex(Coefficients::integers(), {1, 2, 1}, {b1, b2}),
                    std::invalid_argument);
    // the same data with an even entry is a complex mod 2 but not over Z
    IntegerMatrix b2even = IntegerMatrix::from_rows({{2}, {0}});
    CHECK_THROWS_AS(ChainComplex(Coefficients::integers(), {1, 2, 1}, {b1, b2even}),
                    std::invalid_argument);
    CHECK_NOTHROW(ChainComplex(Coefficients::mod(2), {1, 2, 1}, {b1, b2even}));
}

TEST_CASE("homology of basic complexes") {
    SUBCASE("circle") {
        chain::HomologyProfile h = chain::homology(ChainComplex::circle());
        CHECK(h.betti(0) == 1);
        CHECK(h.betti(1) == 1);
        CHECK(h.torsion(0).empty());
        CHECK(h.torsion(1).empty());
    }
    SUBCASE("pseudo-projective plane of order 3 over Z") {
        chain::HomologyProfile h = chain::homology(pseudo_projective_plane(3));
        CHECK(h.betti(0) == 1);
        CHECK(h.betti(1) == 0);
        REQUIRE(h.torsion(1).size() == 1);
        CHECK(h.torsion(1)[0] == 3);
        CHECK(h.betti(2) == 0);
        CHECK(h.torsion(2).empty());
    }
    SUBCASE("pseudo-projective plane of order 3 is mod-2 acyclic") {
        chain::HomologyProfile h = chain::homology(pseudo_projective_plane(3, Coefficients::mod(2)));
        CHECK(h.betti(0) == 1);
        CHECK(h.betti(1) == 0);
        CHECK(h.betti(2) == 0);
    }
}

TEST_CASE("euler characteristic") {
    CHECK(chain::euler_characteristic(wedge_of_circles(4)) == -3);
    CHECK(chain::euler_characteristic(pseudo_projective_plane(5)) == 1);
    const ChainComplex product =
        chain::tensor_product(ChainComplex::circle(), pseudo_projective_plane(3));
    CHECK(chain::euler_characteristic(product) == 0);

    // equals the alternating betti sum over any field
    for (std::int64_t p : {2, 3, 5}) {
        chain::HomologyProfile h = chain::homology(chain::reduce_mod_p(product, p));
        long long alt = 0;
        for (std::size_t i = 0; i < h.by_degree.size(); ++i)
            alt += (i % 2 == 0 ? 1 : -1) * h.betti(static_cast<int>(i));
        CHECK(alt == chain::euler_characteristic(product));
    }
}

TEST_CASE("tensor products") {
    SUBCASE("torus from two circles") {
        const ChainComplex torus = chain::tensor_product(ChainComplex::circle(), ChainComplex::circle());
        chain::HomologyProfile h = chain::homology(torus);
        CHECK(h.betti(0) == 1);
        CHECK(h.betti(1) == 2);
        CHECK(h.betti(2) == 1);
        CHECK(h.torsion(1).empty());
        CHECK(h.torsion(2).empty());
    }
    SUBCASE("circle times P_3 is a mod-2 homology circle") {
        const ChainComplex c = chain::tensor_product(ChainComplex::circle(Coefficients::mod(2)),
                                                     pseudo_projective_plane(3, Coefficients::mod(2)));
        chain::HomologyProfile h = chain::homology(c);
        CHECK(h.betti(0) == 1);
        CHECK(h.betti(1) == 1);
        CHECK(h.betti(2) == 0);
        CHECK(h.betti(3) == 0);
    }
    SUBCASE("point is a unit") {
        const ChainComplex c = pseudo_projective_plane(4);
        CHECK(chain::tensor_product(c, ChainComplex::point()) == c);
    }
    SUBCASE("coefficient mismatch is rejected") {
        CHECK_THROWS_AS(chain::tensor_product(ChainComplex::circle(),
                                              ChainComplex::circle(Coefficients::mod(2))),
                        std::invalid_argument);
    }
}

TEST_CASE("reduce mod p") {
    const ChainComplex p3 = pseudo_projective_plane(3);
    const ChainComplex mod3 = chain::reduce_mod_p(p3, 3);
    CHECK(mod3.boundary(2).at(0, 0) == 0);
    const ChainComplex mod2 = chain::reduce_mod_p(p3, 2);
    CHECK(mod2.boundary(2).at(0, 0) == 1);
    CHECK(mod2.dims() == p3.dims());
    CHECK_THROWS_AS(chain::reduce_mod_p(mod2, 2), std::invalid_argument);
}

TEST_CASE("universal coefficients on random complexes") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 40; ++trial) {
        const ChainComplex c = random_complex(rng, 4);
        const chain::HomologyProfile hz = chain::homology(c);
        for (std::int64_t p : {2, 3, 5}) {
            const chain::HomologyProfile hp = chain::homology(chain::reduce_mod_p(c, p));
            for (int i = 0; i <= c.top_degree(); ++i) {
                const long long expected = hz.betti(i) + p_torsion_count(hz.torsion(i), p) +
                                           p_torsion_count(hz.torsion(i - 1), p);
                CHECK(hp.betti(i) == expected);
            }
        }
    }
}

TEST_CASE("kunneth over a field and euler multiplicativity on random complexes") {
    std::mt19937 rng(515151);
    for (int trial = 0; trial < 15; ++trial) {
        const ChainComplex a = random_complex(rng, 3);
        const ChainComplex b = random_complex(rng, 3);
        const ChainComplex t = chain::tensor_product(a, b);
        CHECK(chain::euler_characteristic(t) ==
              chain::euler_characteristic(a) * chain::euler_characteristic(b));
        for (std::int64_t p : {2, 5}) {
            const chain::HomologyProfile ha = chain::homology(chain::reduce_mod_p(a, p));
            const chain::HomologyProfile hb = chain::homology(chain::reduce_mod_p(b, p));
            const chain::HomologyProfile ht = chain::homology(chain::reduce_mod_p(t, p));
            for (int n = 0; n <= t.top_degree(); ++n) {
                long long expected = 0;
                for (int i = 0; i <= n; ++i) expected += ha.betti(i) * hb.betti(n - i);
                CHECK(ht.betti(n) == expected);
            }
        }
    }
}

TEST_CASE("zero boundaries give betti equal to dims") {
    const ChainComplex c(Coefficients::integers(), {2, 3, 1},
                         {IntegerMatrix(2, 3), IntegerMatrix(3, 1)});
    const chain::HomologyProfile h = chain::homology(c);
    CHECK(h.betti(0) == 2);
    CHECK(h.betti(1) == 3);
    CHECK(h.betti(2) == 1);
}

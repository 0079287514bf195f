#include "rosekit/abelian.hpp"

#include <doctest.h>

using namespace rosekit;
using abelian::FgAbelianGroup;
using abelian::FieldSpec;
using exactla::Integer;

namespace {

FgAbelianGroup group(long long r, std::vector<long long> d) {
    FgAbelianGroup a;
    a.r = r;
    for (long long v : d) a.d.push_back(v);
    a.validate();
    return a;
}

// all divisibility chains of length <= kmax drawn from the pool
std::vector<std::vector<long long>> torsion_chains(const std::vector<long long>& pool, int kmax) {
    std::vector<std::vector<long long>> chains{{}};
    std::vector<std::vector<long long>> frontier{{}};
    for (int len = 1; len <= kmax; ++len) {
        std::vector<std::vector<long long>> next;
        for (const auto& c : frontier)
            for (long long d : pool)
                if (c.empty() || d % c.back() == 0) {
                    auto ext = c;
                    ext.push_back(d);
                    next.push_back(ext);
                }
        chains.insert(chains.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return chains;
}

long long count_divisible(const std::vector<Integer>& d, std::int64_t p) {
    long long n = 0;
    for (const Integer& v : d)
        if (v % p == 0) ++n;
    return n;
}

}  // namespace

TEST_CASE("canonicalization") {
    SUBCASE("coprime factors merge") {
        const FgAbelianGroup a = FgAbelianGroup::canonical(1, {Integer(2), Integer(3)});
        CHECK(a.r == 1);
        REQUIRE(a.d.size() == 1);
        CHECK(a.d[0] == 6);
    }
    SUBCASE("non-chained factors rechain") {
        const FgAbelianGroup a = FgAbelianGroup::canonical(0, {Integer(4), Integer(6)});
        REQUIRE(a.d.size() == 2);
        CHECK(a.d[0] == 2);
        CHECK(a.d[1] == 12);
    }
    SUBCASE("unit factors disappear") {
        const FgAbelianGroup a = FgAbelianGroup::canonical(2, {Integer(1), Integer(1)});
        CHECK(a.r == 2);
        CHECK(a.d.empty());
    }
    SUBCASE("non-canonical input is rejected by validate") {
        FgAbelianGroup bad;
        bad.d = {Integer(4), Integer(6)};
        CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    }
}

TEST_CASE("deficiency closed form") {
    CHECK(abelian::deficiency(group(2, {})) == 1);        // free rank 2
    CHECK(abelian::deficiency(group(0, {2, 4})) == -1);   // Z_2 + Z_4
    CHECK(abelian::deficiency(group(0, {7})) == 0);       // cyclic
    CHECK(abelian::deficiency(group(1, {})) == 1);
    CHECK(abelian::deficiency(group(3, {2})) == 3 - 6);
}

TEST_CASE("schur multiplicator closed form") {
    SUBCASE("Z_2 + Z_2") {
        const FgAbelianGroup m = abelian::schur_multiplicator(group(0, {2, 2}));
        CHECK(m.r == 0);
        REQUIRE(m.d.size() == 1);
        CHECK(m.d[0] == 2);
    }
    SUBCASE("Z has trivial multiplicator") {
        CHECK(abelian::schur_multiplicator(group(1, {})).trivial());
    }
    SUBCASE("Z^3") {
        const FgAbelianGroup m = abelian::schur_multiplicator(group(3, {}));
        CHECK(m.r == 3);
        CHECK(m.d.empty());
    }
    SUBCASE("mixed group keeps the chain ordered") {
        const FgAbelianGroup m = abelian::schur_multiplicator(group(1, {2, 6}));
        // exponents r+k-j: d_1 = 2 twice, d_2 = 6 once
        CHECK(m.r == 0);
        REQUIRE(m.d.size() == 3);
        CHECK(m.d[0] == 2);
        CHECK(m.d[1] == 2);
        CHECK(m.d[2] == 6);
        m.validate();
    }
}

TEST_CASE("minimum generators of the multiplicator") {
    CHECK(abelian::min_generators_h2(group(0, {2, 2})) == 1);
    CHECK(abelian::min_generators_h2(group(0, {9})) == 0);
    CHECK(abelian::min_generators_h2(group(1, {3})) == 1);
}

TEST_CASE("betti closed forms") {
    CHECK(abelian::betti(group(1, {3}), FieldSpec::mod(3), 1) == 2);
    CHECK(abelian::betti(group(1, {3}), FieldSpec::mod(2), 1) == 1);
    for (const FgAbelianGroup& a : {group(0, {2, 4}), group(2, {3}), group(1, {})})
        CHECK(abelian::betti(a, FieldSpec::rationals(), 2) == a.r * (a.r - 1) / 2);
    // Z^2 + Z_2 at p = 2: (k-l+1) + C(r,2) + sum = 1 + 1 + 2
    CHECK(abelian::betti(group(2, {2}), FieldSpec::mod(2), 2) == 4);
    CHECK(abelian::betti(group(0, {}), FieldSpec::mod(5), 1) == 0);
}

TEST_CASE("gap closed forms and named values") {
    SUBCASE("two copies of a cyclic group away from p") {
        const abelian::GapReport r = abelian::gap(group(0, {2, 2}), FieldSpec::mod(3));
        CHECK(r.gap == 1);
    }
    SUBCASE("p-group torsion has zero gap") {
        CHECK(abelian::gap(group(0, {2, 4}), FieldSpec::mod(2)).gap == 0);
        CHECK(abelian::gap(group(2, {3, 9}), FieldSpec::mod(3)).gap == 0);
    }
    SUBCASE("free abelian groups have zero gap over every field") {
        for (long long r = 0; r <= 3; ++r) {
            CHECK(abelian::gap(group(r, {}), FieldSpec::rationals()).gap == 0);
            for (std::int64_t p : {2, 3, 5}) CHECK(abelian::gap(group(r, {}), FieldSpec::mod(p)).gap == 0);
        }
    }
    SUBCASE("rational gap vanishes exactly for free abelian and cyclic groups") {
        for (const FgAbelianGroup& a :
             {group(0, {}), group(2, {}), group(0, {6}), group(0, {2, 2}), group(1, {3}), group(2, {2, 4})}) {
            const bool expected_zero = a.d.empty() || (a.r == 0 && a.d.size() == 1);
            CHECK((abelian::gap(a, FieldSpec::rationals()).gap == 0) == expected_zero);
        }
    }
}

TEST_CASE("realizability of abelian fundamental groups") {
    CHECK(abelian::realizable_as(group(1, {3}), abelian::Realization::rose_fundamental_group, 2));
    CHECK_FALSE(abelian::realizable_as(group(2, {}), abelian::Realization::rose_fundamental_group, 2));
    CHECK_FALSE(abelian::realizable_as(group(1, {4}), abelian::Realization::rose_fundamental_group, 2));
    CHECK(abelian::realizable_as(group(0, {6}), abelian::Realization::acyclic_fundamental_group, 5));
    CHECK_FALSE(abelian::realizable_as(group(0, {6}), abelian::Realization::acyclic_fundamental_group, 3));
    CHECK_FALSE(abelian::realizable_as(group(1, {}), abelian::Realization::acyclic_fundamental_group, 3));
}

TEST_CASE("kunneth oracle on small groups") {
    SUBCASE("Z_2 + Z_2") {
        const chain::HomologyProfile h = abelian::kunneth_oracle(group(0, {2, 2}));
        CHECK(h.betti(1) == 0);
        CHECK(h.torsion(1) == std::vector<Integer>{2, 2});
        CHECK(h.betti(2) == 0);
        CHECK(h.torsion(2) == std::vector<Integer>{2});
    }
    SUBCASE("Z^2 has H_2 = Z") {
        const chain::HomologyProfile h = abelian::kunneth_oracle(group(2, {}));
        CHECK(h.betti(1) == 2);
        CHECK(h.betti(2) == 1);
        CHECK(h.torsion(2).empty());
    }
    SUBCASE("Z_3 mod 3 via universal coefficients") {
        const chain::HomologyProfile h = abelian::kunneth_oracle(group(0, {3}));
        // b_i(F_3) = betti_Q + p-torsion of H_i and H_{i-1}
        const long long b1 = h.betti(1) + count_divisible(h.torsion(1), 3) + count_divisible(h.torsion(0), 3);
        const long long b2 = h.betti(2) + count_divisible(h.torsion(2), 3) + count_divisible(h.torsion(1), 3);
        CHECK(b1 == 1);
        CHECK(b2 == 1);
    }
    SUBCASE("truncation must leave room for degree 2") {
        CHECK_THROWS_AS(abelian::kunneth_oracle(group(0, {2}), 2), std::invalid_argument);
    }
}

TEST_CASE("closed forms against the oracle on a small sweep") {
    // the full acceptance sweep is larger; this keeps the unit suite quick
    const auto chains = torsion_chains({2, 3, 4}, 2);
    for (long long r = 0; r <= 2; ++r) {
        for (const auto& torsion : chains) {
            std::vector<long long> t(torsion.begin(), torsion.end());
            const FgAbelianGroup a = group(r, t);
            const chain::HomologyProfile h = abelian::kunneth_oracle(a);

            // degree 1: the group itself; degree 2: the multiplicator
            CHECK(h.betti(1) == a.r);
            CHECK(h.torsion(1) == a.d);
            const FgAbelianGroup m = abelian::schur_multiplicator(a);
            CHECK(h.betti(2) == m.r);
            CHECK(h.torsion(2) == m.d);

            CHECK(abelian::min_generators_h2(a) ==
                  m.r + static_cast<long long>(m.d.size()));

            for (std::int64_t p : {2, 3, 5}) {
                const FieldSpec f = FieldSpec::mod(p);
                const long long b1_uct =
                    h.betti(1) + count_divisible(h.torsion(1), p) + count_divisible(h.torsion(0), p);
                const long long b2_uct =
                    h.betti(2) + count_divisible(h.torsion(2), p) + count_divisible(h.torsion(1), p);
                CHECK(abelian::betti(a, f, 1) == b1_uct);
                CHECK(abelian::betti(a, f, 2) == b2_uct);

                const abelian::GapReport g = abelian::gap(a, f);
                CHECK(g.gap == g.b1 - g.b2 - g.deficiency);
                CHECK(g.gap >= 0);
                CHECK(abelian::relation_gap_check(a, p));
            }
            const abelian::GapReport gq = abelian::gap(a, FieldSpec::rationals());
            CHECK(gq.gap >= 0);
            if (gq.gap == 0)
                for (std::int64_t p : {2, 3, 5}) CHECK(abelian::gap(a, FieldSpec::mod(p)).gap == 0);
        }
    }
}

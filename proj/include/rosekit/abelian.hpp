#pragma once

#include "rosekit/chain.hpp"
#include "rosekit/exactla.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rosekit::abelian {

/// Field of coefficients for betti numbers: Q when p == 0, else F_p.
struct FieldSpec {
    std::int64_t p = 0;

    static FieldSpec rationals() { return {0}; }
    static FieldSpec mod(std::int64_t p);

    bool rational() const { return p == 0; }
    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
};

/// Finitely generated abelian group in canonical form:
/// Z^r + Z_{d_1} + ... + Z_{d_k} with 1 < d_1 | d_2 | ... | d_k.
struct FgAbelianGroup {
    long long r = 0;
    std::vector<exactla::Integer> d;

    /// Canonicalize an arbitrary direct-sum spec (unit factors dropped, the
    /// rest rechained through the Smith form of the diagonal relation matrix).
    static FgAbelianGroup canonical(long long free_rank, std::vector<exactla::Integer> torsion);

    /// Cokernel of an integer relation matrix: the group presented by one
    /// generator per row and one relation per column.
    static FgAbelianGroup from_relation_matrix(const exactla::IntegerMatrix& rel);

    int torsion_count() const { return static_cast<int>(d.size()); }
    bool trivial() const { return r == 0 && d.empty(); }
    bool finite() const { return r == 0; }
    bool has_p_torsion(std::int64_t p) const;
    void validate() const;

    bool operator==(const FgAbelianGroup&) const = default;
    bool operator<(const FgAbelianGroup& other) const;
    std::string str() const;
};

long long deficiency(const FgAbelianGroup& a);

FgAbelianGroup schur_multiplicator(const FgAbelianGroup& a);

/// Minimum number of generators of the Schur multiplicator.
long long min_generators_h2(const FgAbelianGroup& a);

/// b_i(A; F) for i in {0, 1, 2}, closed form.
long long betti(const FgAbelianGroup& a, FieldSpec field, int degree);

struct GapReport {
    FgAbelianGroup group;
    FieldSpec field;
    long long b1 = 0;
    long long b2 = 0;
    long long deficiency = 0;
    long long gap = 0;
};

GapReport gap(const FgAbelianGroup& a, FieldSpec field);

/// Consistency of the two gap computations: gap(A; F_p) must equal
/// gap(A; Q) - dim(torsion of the multiplicator tensored with F_p).
bool relation_gap_check(const FgAbelianGroup& a, std::int64_t p);

enum class Realization {
    rose_fundamental_group,     // free rank 1 and no p-torsion
    acyclic_fundamental_group,  // finite and no p-torsion
};

bool realizable_as(const FgAbelianGroup& a, Realization role, std::int64_t p);

/// Standard truncated complex of a K(A, 1): a circle factor per Z summand and
/// a periodic factor (boundaries alternating multiplication by d and by 0) per
/// Z_d summand, all tensored together. Homology is correct below the
/// truncation degree.
chain::ChainComplex standard_complex(const FgAbelianGroup& a, int truncation);

/// Independent homology oracle for A: integral homology of standard_complex,
/// reported for degrees 0 .. truncation - 1. Requires truncation >= 3.
chain::HomologyProfile kunneth_oracle(const FgAbelianGroup& a, int truncation = 4);

}  // namespace rosekit::abelian

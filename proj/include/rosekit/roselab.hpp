#pragma once

#include "rosekit/abelian.hpp"
#include "rosekit/chain.hpp"
#include "rosekit/covers.hpp"
#include "rosekit/grouppres.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rosekit::roselab {

struct H1Structure {
    long long free_rank = 0;
    std::vector<exactla::Integer> torsion;
    bool has_p_torsion = false;

    bool operator==(const H1Structure&) const = default;
};

/// Verdict of the mod-p homology-rose test on a connected complex.
struct RoseVerdict {
    bool is_rose = false;
    bool is_acyclic = false;
    long long petals = 0;  // first mod-p betti number
    std::int64_t p = 2;
    long long euler = 0;
    std::vector<long long> betti;          // mod-p betti numbers per degree
    std::optional<H1Structure> h1;         // integral H_1, when the input was integral
    bool h1_structure_ok = true;           // rose implies free rank = petals and no p-torsion
};

/// Accepts an integral complex (reduced internally) or one already over F_p.
/// Throws when the complex is disconnected (mod-p b_0 != 1).
RoseVerdict rose_check(const chain::ChainComplex& c, std::int64_t p);

struct Theorem1Report {
    RoseVerdict base;
    RoseVerdict cover;
    std::int64_t group_order = 1;
    int rank = 0;  // target is (Z_p)^rank
    bool biconditional_ok = false;
    bool euler_ok = false;
    std::optional<long long> expected_petals;  // p^rank (m - 1) + 1 when both sides are roses
    bool petal_formula_ok = true;

    bool ok() const { return biconditional_ok && euler_ok && petal_formula_ok; }
};

/// Builds the cover and compares both sides of the rose biconditional;
/// the target must be elementary abelian.
Theorem1Report verify_theorem1(const covers::CoverSpec& spec, std::int64_t p);

struct CarlssonReport {
    bool hypothesis_checkable = false;  // base has vanishing second mod-p betti
    int rank = 0;
    long long b1_cover = 0;
    long long betti_sum = 0;
    long long b1_bound = 0;   // 2^rank - 1
    long long sum_bound = 0;  // 2^rank
    bool b1_bound_ok = true;
    bool sum_bound_ok = true;
    std::optional<long long> sharper;  // p^rank (m - 1) + 1 when the base is a rose
    bool sharper_ok = true;

    bool ok() const { return !hypothesis_checkable || (b1_bound_ok && sum_bound_ok && sharper_ok); }
};

CarlssonReport verify_carlsson(const covers::CoverSpec& spec, std::int64_t p);

struct LedgerRow {
    abelian::FieldSpec field;
    long long b1 = 0;
    long long b2 = 0;
    bool morse_ok = true;  // def(P) <= b1 - b2
    std::optional<long long> supplied_group_b2;
    std::optional<long long> gap_upper_bound;  // b2(K_P; F) - supplied b2(G; F)
};

enum class FlagStatus { holds, fails, supplied, unchecked };

std::string to_string(FlagStatus s);

struct ConditionFlag {
    std::string condition;
    FlagStatus status = FlagStatus::unchecked;
    std::string detail;
};

struct ScreeningReport {
    grouppres::FinitePresentation presentation;
    long long def_presentation = 0;
    abelian::FgAbelianGroup h1;  // abelianization of the presented group
    std::vector<LedgerRow> rows;
    std::vector<ConditionFlag> flags;

    bool morse_all_ok() const;
};

/// Abelianization of the presented group, via the Smith form of the relator
/// exponent matrix.
abelian::FgAbelianGroup abelianization(const grouppres::FinitePresentation& p);

/// Per-field betti data for the presentation complex, with the deficiency
/// inequality checked and an upper bound for the gap whenever b_2 of the
/// group itself is supplied (keyed by field: 0 for Q, else the prime).
ScreeningReport deficiency_ledger(const grouppres::FinitePresentation& p,
                                  const std::vector<abelian::FieldSpec>& fields,
                                  const std::map<std::int64_t, long long>& supplied_group_b2 = {});

/// Data about the quotient group in a candidate extension 1 -> N -> G -> Gamma -> 1.
struct QuotientData {
    std::optional<abelian::FgAbelianGroup> gamma;     // Gamma itself, when abelian
    std::optional<abelian::FgAbelianGroup> gamma_h1;  // H_1(Gamma; Z), when Gamma is not abelian
    std::map<std::int64_t, long long> supplied_gamma_gap;
    std::map<std::int64_t, long long> supplied_gamma_b2;
};

/// Evaluates the checkable counterexample-screening conditions for the
/// extension data and marks the rest as supplied or unchecked.
ScreeningReport screen_d2_conditions(const grouppres::FinitePresentation& p,
                                     const QuotientData& quotient,
                                     const std::vector<abelian::FieldSpec>& fields);

}  // namespace rosekit::roselab

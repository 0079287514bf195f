#include "rosekit/roselab.hpp"

#include <algorithm>
#include <stdexcept>

namespace rosekit::roselab {

using abelian::FgAbelianGroup;
using abelian::FieldSpec;
using chain::ChainComplex;
using covers::CoverSpec;
using grouppres::FinitePresentation;

namespace {

long long ipow(long long base, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

int elementary_abelian_rank(const grouppres::AbelianTarget& g, std::int64_t p) {
    for (std::int64_t f : g.factors)
        if (f != p)
            throw std::invalid_argument("target " + g.str() + " is not elementary abelian of exponent " +
                                        std::to_string(p));
    return g.coords();
}

}  // namespace

RoseVerdict rose_check(const ChainComplex& c, std::int64_t p) {
    if (!exactla::is_prime(p))
        throw std::invalid_argument("rose_check: " + std::to_string(p) + " is not prime");
    const bool integral = c.coefficients().integral();
    if (!integral && c.coefficients().p != p)
        throw std::invalid_argument("rose_check: complex has coefficients " + c.coefficients().str() +
                                    ", asked about p = " + std::to_string(p));

    const ChainComplex mod = integral ? chain::reduce_mod_p(c, p) : c;
    const chain::HomologyProfile h = chain::homology(mod);
    if (h.betti(0) != 1)
        throw std::invalid_argument("rose_check: complex is not connected (mod-p b_0 = " +
                                    std::to_string(h.betti(0)) + ")");

    RoseVerdict v;
    v.p = p;
    v.euler = chain::euler_characteristic(c);
    for (int i = 0; i <= mod.top_degree(); ++i) v.betti.push_back(h.betti(i));
    const bool higher_vanish =
        std::all_of(v.betti.begin() + std::min<std::size_t>(2, v.betti.size()), v.betti.end(),
                    [](long long b) { return b == 0; });
    v.petals = h.betti(1);
    v.is_rose = higher_vanish && v.petals >= 1;
    v.is_acyclic = higher_vanish && v.petals == 0;

    if (integral) {
        const chain::HomologyProfile hz = chain::homology(c);
        H1Structure s;
        s.free_rank = hz.betti(1);
        s.torsion = hz.torsion(1);
        s.has_p_torsion = std::any_of(s.torsion.begin(), s.torsion.end(),
                                      [&](const exactla::Integer& t) { return t % p == 0; });
        v.h1 = s;
        if (v.is_rose) v.h1_structure_ok = (s.free_rank == v.petals) && !s.has_p_torsion;
    }
    return v;
}

Theorem1Report verify_theorem1(const CoverSpec& spec, std::int64_t p) {
    Theorem1Report rep;
    rep.rank = elementary_abelian_rank(spec.epi.target, p);
    rep.group_order = spec.epi.target.order();

    const ChainComplex base = grouppres::presentation_complex(spec.base);
    const covers::CoverComplex cover = covers::build_cover(spec);
    rep.base = rose_check(base, p);
    rep.cover = rose_check(cover.complex(), p);

    rep.biconditional_ok = (rep.base.is_rose == rep.cover.is_rose);
    rep.euler_ok = (rep.cover.euler == rep.group_order * rep.base.euler);
    if (rep.base.is_rose && rep.cover.is_rose) {
        rep.expected_petals = ipow(p, rep.rank) * (rep.base.petals - 1) + 1;
        rep.petal_formula_ok = (rep.cover.petals == *rep.expected_petals);
    }
    return rep;
}

CarlssonReport verify_carlsson(const CoverSpec& spec, std::int64_t p) {
    CarlssonReport rep;
    rep.rank = elementary_abelian_rank(spec.epi.target, p);
    rep.b1_bound = ipow(2, rep.rank) - 1;
    rep.sum_bound = ipow(2, rep.rank);

    const RoseVerdict base = rose_check(grouppres::presentation_complex(spec.base), p);
    rep.hypothesis_checkable = (base.betti.size() < 3 || base.betti[2] == 0);
    if (!rep.hypothesis_checkable) return rep;

    const covers::CoverComplex cover = covers::build_cover(spec);
    const RoseVerdict cv = rose_check(cover.complex(), p);
    rep.b1_cover = cv.petals;
    rep.betti_sum = 0;
    for (long long b : cv.betti) rep.betti_sum += b;
    rep.b1_bound_ok = rep.b1_cover >= rep.b1_bound;
    rep.sum_bound_ok = rep.betti_sum >= rep.sum_bound;
    if (base.is_rose) {
        rep.sharper = ipow(p, rep.rank) * (base.petals - 1) + 1;
        rep.sharper_ok = (rep.b1_cover == *rep.sharper);
    }
    return rep;
}

std::string to_string(FlagStatus s) {
    switch (s) {
        case FlagStatus::holds: return "holds";
        case FlagStatus::fails: return "fails";
        case FlagStatus::supplied: return "supplied";
        case FlagStatus::unchecked: return "unchecked";
    }
    return "?";
}

bool ScreeningReport::morse_all_ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const LedgerRow& r) { return r.morse_ok; });
}

FgAbelianGroup abelianization(const FinitePresentation& p) {
    return FgAbelianGroup::from_relation_matrix(grouppres::presentation_complex(p).boundary(2));
}

namespace {

std::pair<long long, long long> complex_betti(const ChainComplex& k, FieldSpec field) {
    const chain::HomologyProfile h =
        field.rational() ? chain::homology(k) : chain::homology(chain::reduce_mod_p(k, field.p));
    return {h.betti(1), h.betti(2)};
}

}  // namespace

ScreeningReport deficiency_ledger(const FinitePresentation& p,
                                  const std::vector<FieldSpec>& fields,
                                  const std::map<std::int64_t, long long>& supplied_group_b2) {
    ScreeningReport rep;
    rep.presentation = p;
    rep.def_presentation = p.deficiency();
    rep.h1 = abelianization(p);

    const ChainComplex k = grouppres::presentation_complex(p);
    for (FieldSpec f : fields) {
        auto [b1, b2] = complex_betti(k, f);
        LedgerRow row{f, b1, b2, rep.def_presentation <= b1 - b2, {}, {}};
        if (auto it = supplied_group_b2.find(f.p); it != supplied_group_b2.end()) {
            row.supplied_group_b2 = it->second;
            row.gap_upper_bound = b2 - it->second;
        }
        rep.rows.push_back(row);
    }
    return rep;
}

ScreeningReport screen_d2_conditions(const FinitePresentation& p, const QuotientData& quotient,
                                     const std::vector<FieldSpec>& fields) {
    ScreeningReport rep = deficiency_ledger(p, fields);

    const FgAbelianGroup* gamma_h1 = nullptr;
    if (quotient.gamma) gamma_h1 = &*quotient.gamma;
    if (quotient.gamma_h1) gamma_h1 = &*quotient.gamma_h1;

    if (gamma_h1 != nullptr) {
        const bool eq = (*gamma_h1 == rep.h1);
        rep.flags.push_back({"H_1(Gamma;Z) = H_1(G;Z)", eq ? FlagStatus::holds : FlagStatus::fails,
                             gamma_h1->str() + " vs " + rep.h1.str()});
    } else {
        rep.flags.push_back({"H_1(Gamma;Z) = H_1(G;Z)", FlagStatus::unchecked,
                             "no quotient abelianization supplied"});
    }

    for (const LedgerRow& row : rep.rows) {
        const std::string f = row.field.str();
        if (row.b2 == 0) {
            rep.flags.push_back({"b_2(G;" + f + ") = 0", FlagStatus::holds,
                                 "presentation complex has b_2 = 0"});
            // def(P) = b_1 - b_2 pins def(G) = b_1(G;F) and kills the gap
            rep.flags.push_back({"gap(G;" + f + ") = 0", FlagStatus::holds,
                                 "b_2(K_P) = 0 forces def(G) = b_1(G;" + f + ") = " +
                                     std::to_string(row.b1)});
            rep.flags.push_back({"def(G) = b_1(G;" + f + ") >= 0",
                                 row.b1 >= 0 ? FlagStatus::holds : FlagStatus::fails,
                                 "def(G) = " + std::to_string(row.b1)});
        } else {
            rep.flags.push_back({"b_2(G;" + f + ") = 0", FlagStatus::fails,
                                 "presentation complex has b_2 = " + std::to_string(row.b2)});
            rep.flags.push_back({"gap(G;" + f + ") = 0", FlagStatus::unchecked,
                                 "not decidable from this presentation"});
        }

        if (quotient.gamma) {
            const abelian::GapReport g = abelian::gap(*quotient.gamma, row.field);
            rep.flags.push_back({"gap(Gamma;" + f + ") > 0",
                                 g.gap > 0 ? FlagStatus::holds : FlagStatus::fails,
                                 "gap(" + quotient.gamma->str() + ";" + f + ") = " +
                                     std::to_string(g.gap)});
            rep.flags.push_back({"b_2(Gamma;" + f + ") = 0",
                                 g.b2 == 0 ? FlagStatus::holds : FlagStatus::fails,
                                 "b_2 = " + std::to_string(g.b2)});
        } else {
            if (auto it = quotient.supplied_gamma_gap.find(row.field.p);
                it != quotient.supplied_gamma_gap.end()) {
                rep.flags.push_back({"gap(Gamma;" + f + ") > 0", FlagStatus::supplied,
                                     "supplied gap = " + std::to_string(it->second) +
                                         (it->second > 0 ? " (> 0)" : " (not > 0)")});
            } else {
                rep.flags.push_back({"gap(Gamma;" + f + ") > 0", FlagStatus::unchecked,
                                     "no algorithm for nonabelian quotients"});
            }
            if (auto it = quotient.supplied_gamma_b2.find(row.field.p);
                it != quotient.supplied_gamma_b2.end()) {
                rep.flags.push_back({"b_2(Gamma;" + f + ") = 0", FlagStatus::supplied,
                                     "supplied b_2 = " + std::to_string(it->second)});
            } else {
                rep.flags.push_back({"b_2(Gamma;" + f + ") = 0", FlagStatus::unchecked, ""});
            }
        }
    }

    rep.flags.push_back({"N nontrivial, finitely closed, perfect", FlagStatus::unchecked,
                         "perfectness of the kernel is outside presentation-level computation"});
    return rep;
}

}  // namespace rosekit::roselab

#pragma once

#include "rosekit/chain.hpp"
#include "rosekit/exactla.hpp"
#include "rosekit/grouppres.hpp"

#include <cstdint>
#include <vector>

namespace rosekit::covers {

/// A regular abelian cover of a presentation complex: the base presentation
/// together with an epimorphism onto the deck group.
struct CoverSpec {
    grouppres::FinitePresentation base;
    grouppres::Epimorphism epi;
};

/// Cellular chain complex of the cover, dims [|G|, |G| n, |G| m]. Cells are
/// indexed block-per-base-cell with group elements in lexicographic order
/// inside each block: cell (base cell c, g) has index c * |G| + index(g).
class CoverComplex {
public:
    CoverComplex(CoverSpec spec, chain::ChainComplex complex);

    const CoverSpec& spec() const { return spec_; }
    const chain::ChainComplex& complex() const { return complex_; }
    const grouppres::AbelianTarget& group() const { return spec_.epi.target; }

    /// Permutation matrix of the deck transformation g in the given degree (0..2).
    exactla::IntegerMatrix deck_matrix(const grouppres::AbelianTarget::Element& g, int degree) const;

private:
    CoverSpec spec_;
    chain::ChainComplex complex_;
};

CoverComplex build_cover(const CoverSpec& spec);

/// Matrix of the action induced by the deck transformation g on H_1(cover; F_p),
/// in the deterministic homology basis fixed by row-echelon pivots.
exactla::PrimeFieldMatrix deck_action_on_h1(const CoverComplex& cover,
                                            const grouppres::AbelianTarget::Element& g,
                                            std::int64_t p);

struct SeriesStage {
    grouppres::FinitePresentation presentation;
    long long b1 = 0;
    long long b2 = 0;
};

/// Iterated index-p subgroups: stage 0 is p itself; each following stage is the
/// Reidemeister-Schreier presentation of the kernel of the lexicographically
/// first surjection of the previous stage onto Z_p. Reports mod-p b_1 and b_2
/// of each stage's presentation complex; returns depth + 1 stages.
std::vector<SeriesStage> subnormal_series(const grouppres::FinitePresentation& p,
                                          std::int64_t prime, int depth);

}  // namespace rosekit::covers

#include "rosekit/covers.hpp"

#include <stdexcept>
#include <utility>

namespace rosekit::covers {

using chain::ChainComplex;
using chain::Coefficients;
using exactla::IntegerMatrix;
using exactla::PrimeFieldMatrix;
using grouppres::AbelianTarget;
using grouppres::Epimorphism;
using grouppres::FinitePresentation;
using grouppres::GroupRingElement;
using grouppres::Word;

namespace {

// Expansion of a group-ring element through the regular representation:
// sum of c_h P(h) where P(h)[idx(g + h)][idx(g)] = 1.
IntegerMatrix expand(const GroupRingElement& u) {
    const AbelianTarget& g = u.group();
    const std::int64_t n = g.order();
    IntegerMatrix out(static_cast<int>(n), static_cast<int>(n));
    for (const auto& [elem, c] : u.terms()) {
        for (std::int64_t col = 0; col < n; ++col) {
            std::int64_t row = g.index_of(g.add(g.element_at(col), elem));
            out.at(static_cast<int>(row), static_cast<int>(col)) += c;
        }
    }
    return out;
}

void place_block(IntegerMatrix& dst, const IntegerMatrix& block, int row0, int col0) {
    for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j) dst.at(row0 + i, col0 + j) = block.at(i, j);
}

}  // namespace

CoverComplex::CoverComplex(CoverSpec spec, ChainComplex complex)
    : spec_(std::move(spec)), complex_(std::move(complex)) {}

IntegerMatrix CoverComplex::deck_matrix(const AbelianTarget::Element& g, int degree) const {
    const AbelianTarget& target = group();
    const std::int64_t n = target.order();
    int blocks = 0;
    switch (degree) {
        case 0: blocks = 1; break;
        case 1: blocks = spec_.base.generators; break;
        case 2: blocks = spec_.base.relator_count(); break;
        default: throw std::out_of_range("deck_matrix: degree must be 0, 1 or 2");
    }
    GroupRingElement unit(target);
    unit.add_term(g, 1);
    IntegerMatrix perm = expand(unit);
    IntegerMatrix out(static_cast<int>(n) * blocks, static_cast<int>(n) * blocks);
    for (int b = 0; b < blocks; ++b) place_block(out, perm, b * static_cast<int>(n), b * static_cast<int>(n));
    return out;
}

CoverComplex build_cover(const CoverSpec& spec) {
    grouppres::validate_epimorphism(spec.epi, spec.base);
    const AbelianTarget& g = spec.epi.target;
    const int N = static_cast<int>(g.order());
    const int n = spec.base.generators;
    const int m = spec.base.relator_count();

    IntegerMatrix d1(N, N * n);
    for (int j = 0; j < n; ++j) {
        GroupRingElement u(g);
        u.add_term(spec.epi.images[j], 1);
        u.add_term(g.zero(), -1);
        place_block(d1, expand(u), 0, j * N);
    }

    IntegerMatrix d2(N * n, N * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            place_block(d2, expand(grouppres::fox_derivative(spec.base.relators[i], j, spec.epi)),
                        j * N, i * N);

    ChainComplex complex(Coefficients::integers(), {N, N * n, N * m},
                         {std::move(d1), std::move(d2)});
    return CoverComplex(spec, std::move(complex));
}

PrimeFieldMatrix deck_action_on_h1(const CoverComplex& cover, const AbelianTarget::Element& g,
                                   std::int64_t p) {
    const ChainComplex reduced = chain::reduce_mod_p(cover.complex(), p);
    const PrimeFieldMatrix b1 = PrimeFieldMatrix::reduce(reduced.boundary(1), p);
    const PrimeFieldMatrix b2 = PrimeFieldMatrix::reduce(reduced.boundary(2), p);
    const int chains = b1.cols();

    // Kernel of b1, parametrized by its free coordinates.
    PrimeFieldMatrix echelon = b1;
    std::vector<int> pivots = exactla::rref_in_place(echelon);
    std::vector<bool> is_pivot(chains, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < chains; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    const int kernel_dim = static_cast<int>(free_cols.size());

    auto mulmod = [p](std::int64_t a, std::int64_t b) {
        return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
    };

    // Fill in the pivot coordinates of a kernel vector from its free coordinates.
    auto lift = [&](const std::vector<std::int64_t>& coords) {
        std::vector<std::int64_t> v(chains, 0);
        for (int f = 0; f < kernel_dim; ++f) v[free_cols[f]] = coords[f];
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            std::int64_t s = 0;
            for (int f = 0; f < kernel_dim; ++f)
                s = (s + mulmod(echelon.at(static_cast<int>(r), free_cols[f]), coords[f])) % p;
            v[pivots[r]] = (p - s) % p;
        }
        return v;
    };
    auto free_coords = [&](const std::vector<std::int64_t>& v) {
        std::vector<std::int64_t> c(kernel_dim);
        for (int f = 0; f < kernel_dim; ++f) c[f] = v[free_cols[f]];
        return c;
    };

    // Image of b2 expressed in kernel coordinates, as echelon rows.
    PrimeFieldMatrix image_rows(p, b2.cols(), kernel_dim);
    for (int t = 0; t < b2.cols(); ++t)
        for (int f = 0; f < kernel_dim; ++f) image_rows.set(t, f, b2.at(free_cols[f], t));
    std::vector<int> image_pivots = exactla::rref_in_place(image_rows);
    std::vector<bool> in_image_pivot(kernel_dim, false);
    for (int c : image_pivots) in_image_pivot[c] = true;
    std::vector<int> quotient_coords;
    for (int c = 0; c < kernel_dim; ++c)
        if (!in_image_pivot[c]) quotient_coords.push_back(c);
    const int h1_dim = static_cast<int>(quotient_coords.size());

    auto reduce_mod_image = [&](std::vector<std::int64_t> c) {
        for (std::size_t r = 0; r < image_pivots.size(); ++r) {
            std::int64_t f = c[image_pivots[r]];
            if (f == 0) continue;
            for (int j = 0; j < kernel_dim; ++j) {
                std::int64_t v = c[j] - mulmod(f, image_rows.at(static_cast<int>(r), j));
                c[j] = ((v % p) + p) % p;
            }
        }
        return c;
    };

    const IntegerMatrix deck = cover.deck_matrix(g, 1);
    PrimeFieldMatrix action(p, h1_dim, h1_dim);
    for (int b = 0; b < h1_dim; ++b) {
        std::vector<std::int64_t> coords(kernel_dim, 0);
        coords[quotient_coords[b]] = 1;
        std::vector<std::int64_t> v = lift(coords);

        // permutation matrix: push the chain through the deck transformation
        std::vector<std::int64_t> w(chains, 0);
        for (int col = 0; col < chains; ++col) {
            if (v[col] == 0) continue;
            for (int row = 0; row < chains; ++row) {
                if (deck.at(row, col) != 0) {
                    w[row] = (w[row] + v[col]) % p;
                    break;
                }
            }
        }
        std::vector<std::int64_t> c = reduce_mod_image(free_coords(w));
        for (int i = 0; i < h1_dim; ++i) action.set(i, b, c[quotient_coords[i]]);
    }
    return action;
}

std::vector<SeriesStage> subnormal_series(const FinitePresentation& p, std::int64_t prime,
                                          int depth) {
    if (!exactla::is_prime(prime))
        throw std::invalid_argument("subnormal_series: " + std::to_string(prime) + " is not prime");
    if (depth < 1) throw std::invalid_argument("subnormal_series: depth must be >= 1");

    auto betti_pair = [&](const FinitePresentation& pres) {
        chain::HomologyProfile h =
            chain::homology(chain::reduce_mod_p(grouppres::presentation_complex(pres), prime));
        return std::pair<long long, long long>(h.betti(1), h.betti(2));
    };

    // lexicographically first surjection onto Z_p that kills all relators
    auto first_epimorphism = [&](const FinitePresentation& pres) {
        const int n = pres.generators;
        std::vector<std::int64_t> c(n, 0);
        AbelianTarget zp({prime});
        for (;;) {
            int i = n - 1;
            while (i >= 0 && c[i] == prime - 1) c[i--] = 0;
            if (i < 0) break;
            ++c[i];
            Epimorphism phi{zp, {}};
            phi.images.reserve(n);
            for (int j = 0; j < n; ++j) phi.images.push_back({c[j]});
            if (grouppres::is_well_defined(phi, pres)) return phi;
        }
        throw std::invalid_argument(
            "subnormal_series: no surjection onto Z_" + std::to_string(prime) +
            " exists (mod-p first homology is zero)");
    };

    std::vector<SeriesStage> stages;
    FinitePresentation current = p;
    for (int i = 0; i <= depth; ++i) {
        auto [b1, b2] = betti_pair(current);
        stages.push_back({current, b1, b2});
        if (i == depth) break;
        current = grouppres::reidemeister_schreier(current, first_epimorphism(current));
    }
    return stages;
}

}  // namespace rosekit::covers

#pragma once

#include "rosekit/exactla.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rosekit::modrep {

/// Decomposition of an F_p[Z_p]-module into indecomposables: multiplicities[k-1]
/// copies of the dimension-k block, 1 <= k <= p.
struct ModuleDecomposition {
    std::int64_t p = 2;
    std::vector<long long> multiplicities;

    long long multiplicity(int k) const;  // l_k, 1 <= k <= p
    long long total_dimension() const;    // sum of k * l_k
    bool operator==(const ModuleDecomposition&) const = default;
    std::string str() const;
};

/// The k x k matrix with ones on the subdiagonal: action of the radical
/// generator on the dimension-k indecomposable. Requires 1 <= k <= p.
exactla::PrimeFieldMatrix nilpotent_block(std::int64_t p, int k);

/// Multiplicities of the indecomposable summands of the module given by an
/// order-p action matrix T (T^p = I over F_p), recovered from the rank
/// sequence of powers of T - I.
ModuleDecomposition decompose(const exactla::PrimeFieldMatrix& t);

/// dim H^j(Z_p; M) for the module M given by the action matrix T, computed
/// from the ranks of x = T - I and x^{p-1} (the periodic resolution
/// alternates between those two maps).
long long cohomology_zp(const exactla::PrimeFieldMatrix& t, int j);

}  // namespace rosekit::modrep

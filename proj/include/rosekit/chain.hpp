#pragma once

#include "rosekit/exactla.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rosekit::chain {

/// Coefficient ring of a chain complex: Z when p == 0, else F_p.
struct Coefficients {
    std::int64_t p = 0;

    static Coefficients integers() { return {0}; }
    static Coefficients mod(std::int64_t p);

    bool integral() const { return p == 0; }
    bool operator==(const Coefficients&) const = default;
    std::string str() const;
};

/// Finite chain complex: chain-group ranks dims[0..N] and boundary maps
/// boundary(i) : C_i -> C_{i-1} of shape dims[i-1] x dims[i]. The composite
/// of consecutive boundaries is checked to vanish on construction.
class ChainComplex {
public:
    ChainComplex(Coefficients coeff, std::vector<int> dims, std::vector<exactla::IntegerMatrix> boundaries);

    static ChainComplex point(Coefficients coeff = Coefficients::integers());
    static ChainComplex circle(Coefficients coeff = Coefficients::integers());

    const Coefficients& coefficients() const { return coeff_; }
    int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
    int dim(int degree) const;
    const std::vector<int>& dims() const { return dims_; }

    /// Boundary C_i -> C_{i-1}, valid for 1 <= i <= top_degree().
    const exactla::IntegerMatrix& boundary(int i) const;

    bool operator==(const ChainComplex&) const = default;

private:
    Coefficients coeff_;
    std::vector<int> dims_;
    std::vector<exactla::IntegerMatrix> boundaries_;
};

struct HomologyProfile {
    struct Entry {
        long long betti = 0;
        std::vector<exactla::Integer> torsion;  // invariant factors > 1, Z coefficients only

        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> by_degree;

    long long betti(int degree) const;
    const std::vector<exactla::Integer>& torsion(int degree) const;
    bool operator==(const HomologyProfile&) const = default;
    std::string str() const;
};

HomologyProfile homology(const ChainComplex& c);

long long euler_characteristic(const ChainComplex& c);

/// Graded tensor product with boundary d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy.
/// Within bidegree (i, j) the basis is ordered row-major: (a, b) -> a * dim(D_j) + b,
/// and bidegrees of total degree n are laid out in increasing i.
ChainComplex tensor_product(const ChainComplex& c, const ChainComplex& d);

ChainComplex reduce_mod_p(const ChainComplex& c, std::int64_t p);

}  // namespace rosekit::chain

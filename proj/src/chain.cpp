#include "rosekit/chain.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace rosekit::chain {

using exactla::Integer;
using exactla::IntegerMatrix;
using exactla::PrimeFieldMatrix;

Coefficients Coefficients::mod(std::int64_t p) {
    if (!exactla::is_prime(p))
        throw std::invalid_argument("Coefficients: modulus " + std::to_string(p) + " is not prime");
    return {p};
}

std::string Coefficients::str() const {
    return integral() ? "Z" : "F_" + std::to_string(p);
}

ChainComplex::ChainComplex(Coefficients coeff, std::vector<int> dims,
                           std::vector<IntegerMatrix> boundaries)
    : coeff_(coeff), dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
    if (dims_.empty()) throw std::invalid_argument("ChainComplex: no degrees");
    for (int d : dims_)
        if (d < 0) throw std::invalid_argument("ChainComplex: negative chain-group rank");
    if (boundaries_.size() + 1 != dims_.size())
        throw std::invalid_argument("ChainComplex: need one boundary per degree pair");
    for (std::size_t i = 0; i < boundaries_.size(); ++i) {
        if (boundaries_[i].rows() != dims_[i] || boundaries_[i].cols() != dims_[i + 1])
            throw std::invalid_argument("ChainComplex: boundary " + std::to_string(i + 1) +
                                        " has inconsistent shape");
    }
    if (!coeff_.integral()) {
        for (auto& b : boundaries_) {
            IntegerMatrix reduced(b.rows(), b.cols());
            for (int i = 0; i < b.rows(); ++i)
                for (int j = 0; j < b.cols(); ++j) {
                    Integer v = b.at(i, j) % coeff_.p;
                    if (v < 0) v += coeff_.p;
                    reduced.at(i, j) = v;
                }
            b = std::move(reduced);
        }
    }
    for (std::size_t i = 0; i + 1 < boundaries_.size(); ++i) {
        IntegerMatrix prod = boundaries_[i] * boundaries_[i + 1];
        if (!coeff_.integral()) {
            for (int r = 0; r < prod.rows(); ++r)
                for (int c = 0; c < prod.cols(); ++c) prod.at(r, c) %= coeff_.p;
        }
        if (!prod.is_zero())
            throw std::invalid_argument("ChainComplex: boundary composite at degree " +
                                        std::to_string(i + 2) + " is nonzero");
    }
}

ChainComplex ChainComplex::point(Coefficients coeff) {
    return ChainComplex(coeff, {1}, {});
}

ChainComplex ChainComplex::circle(Coefficients coeff) {
    return ChainComplex(coeff, {1, 1}, {IntegerMatrix(1, 1)});
}

int ChainComplex::dim(int degree) const {
    if (degree < 0 || degree > top_degree()) return 0;
    return dims_[degree];
}

const IntegerMatrix& ChainComplex::boundary(int i) const {
    if (i < 1 || i > top_degree())
        throw std::out_of_range("ChainComplex: no boundary in degree " + std::to_string(i));
    return boundaries_[i - 1];
}

long long HomologyProfile::betti(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(by_degree.size())) return 0;
    return by_degree[degree].betti;
}

const std::vector<Integer>& HomologyProfile::torsion(int degree) const {
    static const std::vector<Integer> empty;
    if (degree < 0 || degree >= static_cast<int>(by_degree.size())) return empty;
    return by_degree[degree].torsion;
}

std::string HomologyProfile::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < by_degree.size(); ++i) {
        os << "H_" << i << " = ";
        bool first = true;
        if (by_degree[i].betti > 0) {
            os << "Z";
            if (by_degree[i].betti > 1) os << "^" << by_degree[i].betti;
            first = false;
        }
        for (const Integer& t : by_degree[i].torsion) {
            os << (first ? "" : " + ") << "Z_" << t;
            first = false;
        }
        if (first) os << "0";
        if (i + 1 < by_degree.size()) os << "\n";
    }
    return os.str();
}

HomologyProfile homology(const ChainComplex& c) {
    const int top = c.top_degree();
    HomologyProfile out;
    out.by_degree.resize(top + 1);

    if (c.coefficients().integral()) {
        std::vector<int> rank(top + 2, 0);
        std::vector<std::vector<Integer>> torsion(top + 2);
        for (int i = 1; i <= top; ++i) {
            exactla::SmithForm snf = exactla::smith_normal_form(c.boundary(i));
            rank[i] = static_cast<int>(snf.diag.size());
            for (const Integer& d : snf.diag)
                if (d > 1) torsion[i].push_back(d);
        }
        for (int i = 0; i <= top; ++i) {
            out.by_degree[i].betti = c.dim(i) - rank[i] - rank[i + 1];
            out.by_degree[i].torsion = torsion[i + 1];
        }
    } else {
        const std::int64_t p = c.coefficients().p;
        std::vector<int> rank(top + 2, 0);
        for (int i = 1; i <= top; ++i)
            rank[i] = exactla::rank_mod_p(PrimeFieldMatrix::reduce(c.boundary(i), p));
        for (int i = 0; i <= top; ++i)
            out.by_degree[i].betti = c.dim(i) - rank[i] - rank[i + 1];
    }
    return out;
}

long long euler_characteristic(const ChainComplex& c) {
    long long chi = 0;
    for (int i = 0; i <= c.top_degree(); ++i) chi += (i % 2 == 0 ? 1LL : -1LL) * c.dim(i);
    return chi;
}

ChainComplex tensor_product(const ChainComplex& c, const ChainComplex& d) {
    if (!(c.coefficients() == d.coefficients()))
        throw std::invalid_argument("tensor_product: coefficient mismatch (" +
                                    c.coefficients().str() + " vs " + d.coefficients().str() + ")");
    const int top = c.top_degree() + d.top_degree();

    // offset of block (i, j) inside total degree n = i + j
    auto block_offset = [&](int n, int i) {
        int off = 0;
        for (int a = 0; a < i; ++a) {
            int b = n - a;
            if (a <= c.top_degree() && b >= 0 && b <= d.top_degree()) off += c.dim(a) * d.dim(b);
        }
        return off;
    };

    std::vector<int> dims(top + 1, 0);
    for (int n = 0; n <= top; ++n)
        for (int i = 0; i <= n; ++i)
            if (i <= c.top_degree() && n - i <= d.top_degree()) dims[n] += c.dim(i) * d.dim(n - i);

    std::vector<IntegerMatrix> boundaries;
    for (int n = 1; n <= top; ++n) {
        IntegerMatrix bd(dims[n - 1], dims[n]);
        for (int i = 0; i <= n; ++i) {
            const int j = n - i;
            if (i > c.top_degree() || j < 0 || j > d.top_degree()) continue;
            const int ci = c.dim(i), dj = d.dim(j);
            if (ci == 0 || dj == 0) continue;
            const int src = block_offset(n, i);

            if (i >= 1 && c.dim(i - 1) > 0) {  // dx (x) y lands in block (i-1, j)
                const int dst = block_offset(n - 1, i - 1);
                const IntegerMatrix& bc = c.boundary(i);
                for (int a2 = 0; a2 < c.dim(i - 1); ++a2)
                    for (int a = 0; a < ci; ++a) {
                        const Integer& v = bc.at(a2, a);
                        if (v == 0) continue;
                        for (int b = 0; b < dj; ++b)
                            bd.at(dst + a2 * dj + b, src + a * dj + b) += v;
                    }
            }
            if (j >= 1 && d.dim(j - 1) > 0) {  // (-1)^i x (x) dy lands in block (i, j-1)
                const int dst = block_offset(n - 1, i);
                const IntegerMatrix& bdj = d.boundary(j);
                const int sign = (i % 2 == 0) ? 1 : -1;
                for (int a = 0; a < ci; ++a)
                    for (int b2 = 0; b2 < d.dim(j - 1); ++b2)
                        for (int b = 0; b < dj; ++b) {
                            const Integer& v = bdj.at(b2, b);
                            if (v == 0) continue;
                            bd.at(dst + a * d.dim(j - 1) + b2, src + a * dj + b) += sign * v;
                        }
            }
        }
        boundaries.push_back(std::move(bd));
    }
    return ChainComplex(c.coefficients(), std::move(dims), std::move(boundaries));
}

ChainComplex reduce_mod_p(const ChainComplex& c, std::int64_t p) {
    if (!c.coefficients().integral())
        throw std::invalid_argument("reduce_mod_p: complex already has field coefficients");
    std::vector<IntegerMatrix> boundaries;
    for (int i = 1; i <= c.top_degree(); ++i) boundaries.push_back(c.boundary(i));
    return ChainComplex(Coefficients::mod(p), c.dims(), std::move(boundaries));
}

}  // namespace rosekit::chain

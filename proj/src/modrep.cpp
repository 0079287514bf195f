#include "rosekit/modrep.hpp"

#include <sstream>
#include <stdexcept>

namespace rosekit::modrep {

using exactla::PrimeFieldMatrix;

long long ModuleDecomposition::multiplicity(int k) const {
    if (k < 1 || k > static_cast<int>(multiplicities.size()))
        throw std::out_of_range("ModuleDecomposition: block size out of range");
    return multiplicities[k - 1];
}

long long ModuleDecomposition::total_dimension() const {
    long long d = 0;
    for (std::size_t k = 0; k < multiplicities.size(); ++k)
        d += static_cast<long long>(k + 1) * multiplicities[k];
    return d;
}

std::string ModuleDecomposition::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < multiplicities.size(); ++k) {
        if (multiplicities[k] == 0) continue;
        os << (first ? "" : " + ") << "R_" << (k + 1);
        if (multiplicities[k] > 1) os << "^" << multiplicities[k];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

PrimeFieldMatrix nilpotent_block(std::int64_t p, int k) {
    if (k < 1) throw std::invalid_argument("nilpotent_block: block size must be >= 1");
    PrimeFieldMatrix n(p, k, k);
    if (k > p) throw std::invalid_argument("nilpotent_block: block size exceeds the modulus");
    for (int i = 1; i < k; ++i) n.set(i, i - 1, 1);
    return n;
}

namespace {

void require_order_p(const PrimeFieldMatrix& t) {
    if (t.rows() != t.cols()) throw std::invalid_argument("modrep: action matrix must be square");
    if (!t.pow(t.modulus()).is_identity())
        throw std::invalid_argument("modrep: matrix order does not divide p (T^p != I)");
}

}  // namespace

ModuleDecomposition decompose(const PrimeFieldMatrix& t) {
    require_order_p(t);
    const std::int64_t p = t.modulus();
    const int d = t.rows();

    PrimeFieldMatrix x = t - PrimeFieldMatrix::identity(p, d);
    // rank of x^j for j = 0..p+1; x^p = 0 since T^p = I
    std::vector<long long> rank(static_cast<std::size_t>(p) + 2, 0);
    rank[0] = d;
    PrimeFieldMatrix power = PrimeFieldMatrix::identity(p, d);
    for (std::int64_t j = 1; j <= p; ++j) {
        power = power * x;
        rank[j] = exactla::rank_mod_p(power);
    }

    ModuleDecomposition out{p, std::vector<long long>(static_cast<std::size_t>(p), 0)};
    for (std::int64_t k = 1; k <= p; ++k)
        out.multiplicities[k - 1] = rank[k - 1] - 2 * rank[k] + rank[k + 1];
    return out;
}

long long cohomology_zp(const PrimeFieldMatrix& t, int j) {
    require_order_p(t);
    if (j < 0) throw std::invalid_argument("cohomology_zp: negative degree");
    const std::int64_t p = t.modulus();
    const int d = t.rows();

    PrimeFieldMatrix x = t - PrimeFieldMatrix::identity(p, d);
    const long long rank_x = exactla::rank_mod_p(x);
    const long long rank_norm = exactla::rank_mod_p(x.pow(p - 1));

    if (j == 0) return d - rank_x;                    // ker x
    if (j % 2 == 1) return (d - rank_norm) - rank_x;  // ker x^{p-1} / im x
    return (d - rank_x) - rank_norm;                  // ker x / im x^{p-1}
}

}  // namespace rosekit::modrep

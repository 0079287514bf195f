#include "rosekit/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rosekit::abelian {

using exactla::Integer;
using exactla::IntegerMatrix;

namespace {

long long choose2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace

FieldSpec FieldSpec::mod(std::int64_t p) {
    if (!exactla::is_prime(p))
        throw std::invalid_argument("FieldSpec: modulus " + std::to_string(p) + " is not prime");
    return {p};
}

std::string FieldSpec::str() const {
    return rational() ? "Q" : "F_" + std::to_string(p);
}

FgAbelianGroup FgAbelianGroup::canonical(long long free_rank, std::vector<Integer> torsion) {
    if (free_rank < 0) throw std::invalid_argument("FgAbelianGroup: negative free rank");
    for (const Integer& t : torsion)
        if (t < 1) throw std::invalid_argument("FgAbelianGroup: torsion orders must be positive");
    const int k = static_cast<int>(torsion.size());
    IntegerMatrix rel(k, k);
    for (int i = 0; i < k; ++i) rel.at(i, i) = torsion[i];
    FgAbelianGroup a = from_relation_matrix(rel);
    a.r += free_rank;
    return a;
}

FgAbelianGroup FgAbelianGroup::from_relation_matrix(const IntegerMatrix& rel) {
    exactla::SmithForm snf = exactla::smith_normal_form(rel);
    FgAbelianGroup a;
    a.r = rel.rows() - static_cast<long long>(snf.diag.size());
    for (const Integer& v : snf.diag)
        if (v > 1) a.d.push_back(v);
    return a;
}

bool FgAbelianGroup::has_p_torsion(std::int64_t p) const {
    return std::any_of(d.begin(), d.end(), [&](const Integer& v) { return v % p == 0; });
}

void FgAbelianGroup::validate() const {
    if (r < 0) throw std::invalid_argument("FgAbelianGroup: negative free rank");
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] <= 1) throw std::invalid_argument("FgAbelianGroup: invariant factors must exceed 1");
        if (i + 1 < d.size() && d[i + 1] % d[i] != 0)
            throw std::invalid_argument("FgAbelianGroup: invariant factors must form a divisibility chain");
    }
}

bool FgAbelianGroup::operator<(const FgAbelianGroup& other) const {
    if (r != other.r) return r < other.r;
    return d < other.d;
}

std::string FgAbelianGroup::str() const {
    std::ostringstream os;
    bool first = true;
    if (r > 0) {
        os << "Z";
        if (r > 1) os << "^" << r;
        first = false;
    }
    for (const Integer& v : d) {
        os << (first ? "" : " + ") << "Z_" << v;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

long long deficiency(const FgAbelianGroup& a) {
    a.validate();
    return a.r - choose2(a.r + a.torsion_count());
}

FgAbelianGroup schur_multiplicator(const FgAbelianGroup& a) {
    a.validate();
    const long long k = a.torsion_count();
    FgAbelianGroup m;
    m.r = choose2(a.r);
    // d_j appears with exponent r + k - j; ascending j keeps the chain ordered
    for (long long j = 1; j <= k; ++j)
        for (long long c = 0; c < a.r + k - j; ++c) m.d.push_back(a.d[j - 1]);
    return m;
}

long long min_generators_h2(const FgAbelianGroup& a) {
    a.validate();
    return choose2(a.r + a.torsion_count());
}

namespace {

// index of the first invariant factor divisible by p (1-based), 0 when none
long long first_p_torsion_index(const FgAbelianGroup& a, std::int64_t p) {
    for (std::size_t i = 0; i < a.d.size(); ++i)
        if (a.d[i] % p == 0) return static_cast<long long>(i) + 1;
    return 0;
}

}  // namespace

long long betti(const FgAbelianGroup& a, FieldSpec field, int degree) {
    a.validate();
    if (degree < 0 || degree > 2)
        throw std::invalid_argument("betti: closed forms cover degrees 0..2 only");
    if (degree == 0) return 1;

    const long long r = a.r;
    const long long k = a.torsion_count();
    if (field.rational()) return degree == 1 ? r : choose2(r);

    const long long l = first_p_torsion_index(a, field.p);
    if (l == 0) {  // no p-torsion: same dimensions as over Q
        return degree == 1 ? r : choose2(r);
    }
    if (degree == 1) return r + k - l + 1;
    long long sum = 0;
    for (long long j = l; j <= k; ++j) sum += r + k - j;
    return (k - l + 1) + choose2(r) + sum;
}

GapReport gap(const FgAbelianGroup& a, FieldSpec field) {
    a.validate();
    const long long r = a.r;
    const long long k = a.torsion_count();

    long long g = 0;
    if (field.rational()) {
        g = choose2(r + k) - choose2(r);
    } else if (k == 0) {
        g = 0;
    } else {
        const long long l = first_p_torsion_index(a, field.p);
        g = (l == 0) ? choose2(r + k) - choose2(r) : (2 * r + 2 * k - l) * (l - 1) / 2;
    }

    GapReport report{a, field, betti(a, field, 1), betti(a, field, 2), deficiency(a), g};
    if (report.gap != report.b1 - report.b2 - report.deficiency)
        throw std::logic_error("gap: closed form disagrees with b1 - b2 - def for " + a.str());
    return report;
}

bool relation_gap_check(const FgAbelianGroup& a, std::int64_t p) {
    const FgAbelianGroup t2 = schur_multiplicator(a);
    long long t2_tensor_dim = 0;
    for (const Integer& v : t2.d)
        if (v % p == 0) ++t2_tensor_dim;
    return gap(a, FieldSpec::mod(p)).gap == gap(a, FieldSpec::rationals()).gap - t2_tensor_dim;
}

bool realizable_as(const FgAbelianGroup& a, Realization role, std::int64_t p) {
    a.validate();
    if (!exactla::is_prime(p))
        throw std::invalid_argument("realizable_as: " + std::to_string(p) + " is not prime");
    switch (role) {
        case Realization::rose_fundamental_group:
            return a.r == 1 && !a.has_p_torsion(p);
        case Realization::acyclic_fundamental_group:
            return a.r == 0 && !a.has_p_torsion(p);
    }
    throw std::invalid_argument("realizable_as: unknown role");
}

chain::ChainComplex standard_complex(const FgAbelianGroup& a, int truncation) {
    a.validate();
    if (truncation < 1) throw std::invalid_argument("standard_complex: truncation must be >= 1");

    chain::ChainComplex out = chain::ChainComplex::point();
    for (long long i = 0; i < a.r; ++i) out = chain::tensor_product(out, chain::ChainComplex::circle());
    for (const Integer& v : a.d) {
        // truncated periodic complex of a cyclic group: . -> Z -0-> Z -d-> Z -0-> Z
        std::vector<int> dims(truncation + 1, 1);
        std::vector<IntegerMatrix> boundaries;
        for (int i = 1; i <= truncation; ++i) {
            IntegerMatrix b(1, 1);
            if (i % 2 == 0) b.at(0, 0) = v;
            boundaries.push_back(std::move(b));
        }
        out = chain::tensor_product(
            out, chain::ChainComplex(chain::Coefficients::integers(), std::move(dims),
                                     std::move(boundaries)));
    }
    return out;
}

chain::HomologyProfile kunneth_oracle(const FgAbelianGroup& a, int truncation) {
    if (truncation < 3) throw std::invalid_argument("kunneth_oracle: truncation must be >= 3");
    chain::HomologyProfile full = chain::homology(standard_complex(a, truncation));
    chain::HomologyProfile out;
    for (int i = 0; i < truncation && i < static_cast<int>(full.by_degree.size()); ++i)
        out.by_degree.push_back(full.by_degree[i]);
    return out;
}

}  // namespace rosekit::abelian

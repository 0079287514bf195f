#include "rosekit/exactla.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rosekit::exactla {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::int64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::int64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1 && witness; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::invalid_argument("mod_inverse: zero has no inverse");
    return powmod(a, p - 2, p);
}

IntegerMatrix::IntegerMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntegerMatrix: negative shape");
}

IntegerMatrix::IntegerMatrix(int rows, int cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntegerMatrix: negative shape");
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("IntegerMatrix: entry count does not match shape");
}

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    IntegerMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw std::invalid_argument("IntegerMatrix: ragged rows");
        int j = 0;
        for (long long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& v) { return v == 0; });
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntegerMatrix: shape mismatch in product");
    IntegerMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Integer& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += v * rhs.at(k, j);
        }
    }
    return out;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("IntegerMatrix: shape mismatch in sum");
    IntegerMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("IntegerMatrix: shape mismatch in difference");
    IntegerMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
    return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Integer IntegerMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
    int n = rows_;
    if (n == 0) return 1;
    IntegerMatrix m = *this;
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i) {
                if (m.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Integer v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = v / prev;  // exact division (Bareiss)
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::string IntegerMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " [");
        for (int j = 0; j < cols_; ++j) os << (j == 0 ? "" : " ") << at(i, j);
        os << "]" << (i + 1 < rows_ ? "\n" : "");
    }
    os << "]";
    return os.str();
}

PrimeFieldMatrix::PrimeFieldMatrix(std::int64_t p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeFieldMatrix: modulus " + std::to_string(p) + " is not prime");
    if (rows < 0 || cols < 0) throw std::invalid_argument("PrimeFieldMatrix: negative shape");
}

PrimeFieldMatrix::PrimeFieldMatrix(std::int64_t p, int rows, int cols, std::vector<std::int64_t> entries)
    : PrimeFieldMatrix(p, rows, cols) {
    if (entries.size() != entries_.size())
        throw std::invalid_argument("PrimeFieldMatrix: entry count does not match shape");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        std::int64_t v = entries[i] % p_;
        entries_[i] = v < 0 ? v + p_ : v;
    }
}

PrimeFieldMatrix PrimeFieldMatrix::identity(std::int64_t p, int n) {
    PrimeFieldMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

PrimeFieldMatrix PrimeFieldMatrix::reduce(const IntegerMatrix& m, std::int64_t p) {
    PrimeFieldMatrix out(p, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            Integer v = m.at(i, j) % p;
            if (v < 0) v += p;
            out.set(i, j, v.convert_to<std::int64_t>());
        }
    }
    return out;
}

void PrimeFieldMatrix::set(int i, int j, std::int64_t v) {
    v %= p_;
    if (v < 0) v += p_;
    entries_[static_cast<std::size_t>(i) * cols_ + j] = v;
}

PrimeFieldMatrix PrimeFieldMatrix::operator*(const PrimeFieldMatrix& rhs) const {
    if (p_ != rhs.p_) throw std::invalid_argument("PrimeFieldMatrix: modulus mismatch");
    if (cols_ != rhs.rows_) throw std::invalid_argument("PrimeFieldMatrix: shape mismatch in product");
    PrimeFieldMatrix out(p_, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            std::int64_t v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                std::int64_t w = out.at(i, j) + mulmod(v, rhs.at(k, j), p_);
                out.set(i, j, w);
            }
        }
    }
    return out;
}

PrimeFieldMatrix PrimeFieldMatrix::operator+(const PrimeFieldMatrix& rhs) const {
    if (p_ != rhs.p_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("PrimeFieldMatrix: mismatch in sum");
    PrimeFieldMatrix out(p_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j) + rhs.at(i, j));
    return out;
}

PrimeFieldMatrix PrimeFieldMatrix::operator-(const PrimeFieldMatrix& rhs) const {
    if (p_ != rhs.p_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("PrimeFieldMatrix: mismatch in difference");
    PrimeFieldMatrix out(p_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j) - rhs.at(i, j));
    return out;
}

PrimeFieldMatrix PrimeFieldMatrix::pow(std::int64_t e) const {
    if (rows_ != cols_) throw std::invalid_argument("PrimeFieldMatrix: pow of non-square matrix");
    if (e < 0) throw std::invalid_argument("PrimeFieldMatrix: negative power");
    PrimeFieldMatrix result = identity(p_, rows_);
    PrimeFieldMatrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

PrimeFieldMatrix PrimeFieldMatrix::transpose() const {
    PrimeFieldMatrix out(p_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

bool PrimeFieldMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool PrimeFieldMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t v) { return v == 0; });
}

std::string PrimeFieldMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " [");
        for (int j = 0; j < cols_; ++j) os << (j == 0 ? "" : " ") << at(i, j);
        os << "]" << (i + 1 < rows_ ? "\n" : "");
    }
    os << "] mod " << p_;
    return os.str();
}

IntegerMatrix SmithForm::diagonal_matrix(int rows, int cols) const {
    IntegerMatrix d(rows, cols);
    for (std::size_t i = 0; i < diag.size(); ++i) d.at(static_cast<int>(i), static_cast<int>(i)) = diag[i];
    return d;
}

namespace {

struct SnfState {
    IntegerMatrix s, left, right;

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < s.cols(); ++j) std::swap(s.at(a, j), s.at(b, j));
        for (int j = 0; j < left.cols(); ++j) std::swap(left.at(a, j), left.at(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < s.rows(); ++i) std::swap(s.at(i, a), s.at(i, b));
        for (int i = 0; i < right.rows(); ++i) std::swap(right.at(i, a), right.at(i, b));
    }
    // row[a] += q * row[b]
    void add_row(int a, int b, const Integer& q) {
        for (int j = 0; j < s.cols(); ++j) s.at(a, j) += q * s.at(b, j);
        for (int j = 0; j < left.cols(); ++j) left.at(a, j) += q * left.at(b, j);
    }
    // col[a] += q * col[b]
    void add_col(int a, int b, const Integer& q) {
        for (int i = 0; i < s.rows(); ++i) s.at(i, a) += q * s.at(i, b);
        for (int i = 0; i < right.rows(); ++i) right.at(i, a) += q * right.at(i, b);
    }
    void negate_row(int a) {
        for (int j = 0; j < s.cols(); ++j) s.at(a, j) = -s.at(a, j);
        for (int j = 0; j < left.cols(); ++j) left.at(a, j) = -left.at(a, j);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& a) {
    SnfState st{a, IntegerMatrix::identity(a.rows()), IntegerMatrix::identity(a.cols())};
    const int rows = a.rows(), cols = a.cols();
    const int bound = std::min(rows, cols);

    int t = 0;
    while (t < bound) {
        // minimal-absolute-value nonzero pivot in the trailing submatrix
        int pi = -1, pj = -1;
        Integer best;
        for (int i = t; i < rows; ++i) {
            for (int j = t; j < cols; ++j) {
                const Integer& v = st.s.at(i, j);
                if (v == 0) continue;
                Integer av = abs(v);
                if (pi < 0 || av < best) {
                    best = std::move(av);
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi < 0) break;  // trailing submatrix is zero
        st.swap_rows(t, pi);
        st.swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (st.s.at(i, t) == 0) continue;
                Integer q = st.s.at(i, t) / st.s.at(t, t);
                if (q != 0) st.add_row(i, t, -q);
                if (st.s.at(i, t) != 0) {
                    st.swap_rows(t, i);  // remainder is strictly smaller, promote it
                    dirty = true;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (st.s.at(t, j) == 0) continue;
                Integer q = st.s.at(t, j) / st.s.at(t, t);
                if (q != 0) st.add_col(j, t, -q);
                if (st.s.at(t, j) != 0) {
                    st.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;

            // enforce divisibility of the trailing block by the pivot
            bool fixed = true;
            for (int i = t + 1; i < rows && fixed; ++i) {
                for (int j = t + 1; j < cols && fixed; ++j) {
                    if (st.s.at(i, j) % st.s.at(t, t) != 0) {
                        st.add_row(t, i, 1);
                        fixed = false;
                    }
                }
            }
            if (fixed) break;
        }
        if (st.s.at(t, t) < 0) st.negate_row(t);
        ++t;
    }

    SmithForm out;
    for (int i = 0; i < t; ++i) out.diag.push_back(st.s.at(i, i));
    out.left = std::move(st.left);
    out.right = std::move(st.right);
    return out;
}

std::vector<int> rref_in_place(PrimeFieldMatrix& a) {
    const std::int64_t p = a.modulus();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < a.rows(); ++i) {
            if (a.at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int j = 0; j < a.cols(); ++j) {
                std::int64_t tmp = a.at(row, j);
                a.set(row, j, a.at(pivot, j));
                a.set(pivot, j, tmp);
            }
        }
        std::int64_t inv = mod_inverse(a.at(row, col), p);
        for (int j = col; j < a.cols(); ++j) a.set(row, j, mulmod(a.at(row, j), inv, p));
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row) continue;
            std::int64_t f = a.at(i, col);
            if (f == 0) continue;
            for (int j = col; j < a.cols(); ++j)
                a.set(i, j, a.at(i, j) - mulmod(f, a.at(row, j), p));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank_mod_p(const PrimeFieldMatrix& a) {
    PrimeFieldMatrix m = a;
    return static_cast<int>(rref_in_place(m).size());
}

int rank_over_q(const IntegerMatrix& a) {
    return static_cast<int>(smith_normal_form(a).diag.size());
}

std::vector<std::vector<std::int64_t>> kernel_basis_mod_p(const PrimeFieldMatrix& a) {
    const std::int64_t p = a.modulus();
    PrimeFieldMatrix r = a;
    std::vector<int> pivots = rref_in_place(r);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<std::int64_t>> basis;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::int64_t> v(a.cols(), 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            std::int64_t c = r.at(static_cast<int>(i), f);
            if (c != 0) v[pivots[i]] = p - c;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Integer>> kernel_basis_integer(const IntegerMatrix& a) {
    SmithForm snf = smith_normal_form(a);
    const int rank = static_cast<int>(snf.diag.size());
    std::vector<std::vector<Integer>> basis;
    for (int j = rank; j < a.cols(); ++j) {
        std::vector<Integer> v(a.cols());
        for (int i = 0; i < a.cols(); ++i) v[i] = snf.right.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace rosekit::exactla

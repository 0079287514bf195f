#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace rosekit::exactla {

using Integer = boost::multiprecision::cpp_int;

/// Dense matrix over Z with arbitrary-precision entries, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols);
    IntegerMatrix(int rows, int cols, std::vector<Integer> entries);

    static IntegerMatrix identity(int n);
    static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Integer& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Integer& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const std::vector<Integer>& entries() const { return entries_; }

    bool is_zero() const;
    bool operator==(const IntegerMatrix& other) const = default;

    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    IntegerMatrix operator+(const IntegerMatrix& rhs) const;
    IntegerMatrix operator-(const IntegerMatrix& rhs) const;
    IntegerMatrix transpose() const;

    /// Exact determinant (Bareiss fraction-free elimination); square matrices only.
    Integer determinant() const;

    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Integer> entries_;
};

/// Dense matrix over F_p; entries stored reduced to [0, p).
class PrimeFieldMatrix {
public:
    PrimeFieldMatrix(std::int64_t p, int rows, int cols);
    PrimeFieldMatrix(std::int64_t p, int rows, int cols, std::vector<std::int64_t> entries);

    static PrimeFieldMatrix identity(std::int64_t p, int n);
    static PrimeFieldMatrix reduce(const IntegerMatrix& m, std::int64_t p);

    std::int64_t modulus() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::int64_t at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    void set(int i, int j, std::int64_t v);

    bool operator==(const PrimeFieldMatrix& other) const = default;

    PrimeFieldMatrix operator*(const PrimeFieldMatrix& rhs) const;
    PrimeFieldMatrix operator+(const PrimeFieldMatrix& rhs) const;
    PrimeFieldMatrix operator-(const PrimeFieldMatrix& rhs) const;
    PrimeFieldMatrix pow(std::int64_t e) const;
    PrimeFieldMatrix transpose() const;
    bool is_identity() const;
    bool is_zero() const;

    std::string str() const;

private:
    std::int64_t p_ = 2;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> entries_;
};

/// Smith normal form. diag holds the nonzero invariant factors d_1 | d_2 | ... | d_s
/// (s = rank over Q); left and right are unimodular with left * A * right equal to
/// the rows x cols matrix carrying diag on its leading diagonal.
struct SmithForm {
    std::vector<Integer> diag;
    IntegerMatrix left;
    IntegerMatrix right;

    IntegerMatrix diagonal_matrix(int rows, int cols) const;
};

bool is_prime(std::int64_t n);
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

SmithForm smith_normal_form(const IntegerMatrix& a);

int rank_mod_p(const PrimeFieldMatrix& a);
int rank_over_q(const IntegerMatrix& a);

/// Basis of ker(a) as vectors of length cols(); size = cols - rank.
/// Deterministic: parametrized by the non-pivot columns of the RREF in column order,
/// each basis vector carrying 1 at its own free column.
std::vector<std::vector<std::int64_t>> kernel_basis_mod_p(const PrimeFieldMatrix& a);

/// Integer kernel basis (columns of the SNF right factor past the rank).
std::vector<std::vector<Integer>> kernel_basis_integer(const IntegerMatrix& a);

/// Row-reduce a in place to reduced row-echelon form; returns pivot column indices
/// in increasing order.
std::vector<int> rref_in_place(PrimeFieldMatrix& a);

}  // namespace rosekit::exactla

#pragma once

// Exact scalars, vectors and matrices.  Every quantity in the library is a
// GMP rational; vectors are coordinate lists in the simple-root basis.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pnh {

using Int = mpz_class;
using Rat = mpq_class;

/// Builds num/den in lowest terms. Throws ParseError when den == 0.
Rat make_rat(long num, long den = 1);
Rat make_rat(const Int& num, const Int& den);

/// Parses "p/q", "p" or "-p/q".
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& r);

std::size_t hash_value(const Int& z);
std::size_t hash_value(const Rat& q);

class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t n) : coords_(n) {}
    Vec(std::initializer_list<Rat> values) : coords_(values) {}
    explicit Vec(std::vector<Rat> values) : coords_(std::move(values)) {}

    static Vec unit(std::size_t n, std::size_t i);

    std::size_t size() const { return coords_.size(); }
    const Rat& operator[](std::size_t i) const { return coords_[i]; }
    Rat& operator[](std::size_t i) { return coords_[i]; }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const;

    Vec& operator+=(const Vec& other);
    Vec& operator-=(const Vec& other);
    Vec& operator*=(const Rat& s);

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(Vec a, const Rat& s) { return a *= s; }
    friend Vec operator*(const Rat& s, Vec a) { return a *= s; }
    friend Vec operator-(Vec a) { return a *= Rat(-1); }
    friend bool operator==(const Vec& a, const Vec& b) { return a.coords_ == b.coords_; }
    /// Lexicographic order on coordinates.
    friend bool operator<(const Vec& a, const Vec& b);

private:
    std::vector<Rat> coords_;
};

struct VecHash {
    std::size_t operator()(const Vec& v) const;
};

/// Plain coordinate dot product (no metric).
Rat dot(const Vec& a, const Vec& b);

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Mat identity(std::size_t n);
    static Mat from_rows(std::span<const Vec> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    Mat transpose() const;

    friend Vec operator*(const Mat& m, const Vec& v);
    friend Mat operator*(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

/// Square integer matrix; used for group elements acting on root coordinates.
class IntMat {
public:
    IntMat() = default;
    explicit IntMat(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}
    static IntMat identity(int n);

    int size() const { return n_; }
    int operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    int& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<int>& entries() const { return data_; }

    Vec apply(const Vec& v) const;
    std::vector<int> apply(std::span<const int> v) const;
    Mat to_rational() const;

    friend IntMat operator*(const IntMat& a, const IntMat& b);
    friend bool operator==(const IntMat& a, const IntMat& b) = default;
    friend auto operator<=>(const IntMat& a, const IntMat& b) { return a.data_ <=> b.data_; }

private:
    int n_ = 0;
    std::vector<int> data_;
};

struct IntMatHash {
    std::size_t operator()(const IntMat& m) const;
};

/// Unique exact solution of A x = b by fraction-free elimination.
/// Throws SingularSystem when det(A) == 0.
Vec solve_linear_system(const Mat& a, const Vec& b);

/// Exact rank of a family of equal-length vectors.
int rank(std::span<const Vec> vectors);

/// Incrementally maintained row-echelon basis of a subspace.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t ambient) : ambient_(ambient) {}

    /// Adds v; returns false (and leaves the basis unchanged) if v is already in the span.
    bool add(const Vec& v);
    bool contains(const Vec& v) const;
    int dim() const { return static_cast<int>(rows_.size()); }

private:
    Vec reduce(Vec v) const;

    std::size_t ambient_;
    std::vector<Vec> rows_;        // pivot entry normalized to 1
    std::vector<std::size_t> pivots_;
};

}  // namespace pnh

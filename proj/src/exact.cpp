#include "pnh/exact.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>

#include "pnh/error.hpp"

namespace pnh {

Rat make_rat(long num, long den) {
    if (den == 0) throw ParseError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw ParseError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(std::string_view text) {
    auto is_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto to_int = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        return Int(std::string(s));
    };
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den)) {
        throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    return make_rat(to_int(num), to_int(den));
}

std::string to_string(const Rat& r) {
    return r.get_str();
}

std::size_t hash_value(const Int& z) {
    const std::size_t limbs = mpz_size(z.get_mpz_t());
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
    for (std::size_t i = 0; i < limbs; ++i) {
        h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::size_t hash_value(const Rat& q) {
    const std::size_t a = hash_value(Int(q.get_num()));
    const std::size_t b = hash_value(Int(q.get_den()));
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

// ---------------------------------------------------------------- Vec

Vec Vec::unit(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

bool Vec::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

Vec& Vec::operator+=(const Vec& other) {
    assert(size() == other.size());
    for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

Vec& Vec::operator-=(const Vec& other) {
    assert(size() == other.size());
    for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

Vec& Vec::operator*=(const Rat& s) {
    for (auto& x : coords_) x *= s;
    return *this;
}

bool operator<(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t VecHash::operator()(const Vec& v) const {
    std::size_t h = v.size();
    for (const auto& x : v) h ^= hash_value(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

Rat dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// ---------------------------------------------------------------- Mat

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(std::span<const Vec> rows) {
    if (rows.empty()) return {};
    Mat m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        assert(rows[i].size() == m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vec Mat::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

Vec Mat::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vec operator*(const Mat& m, const Vec& v) {
    assert(m.cols() == v.size());
    Vec out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

Mat operator*(const Mat& a, const Mat& b) {
    assert(a.cols() == b.rows());
    Mat out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

// ---------------------------------------------------------------- IntMat

IntMat IntMat::identity(int n) {
    IntMat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vec IntMat::apply(const Vec& v) const {
    assert(static_cast<int>(v.size()) == n_);
    Vec out(v.size());
    for (int i = 0; i < n_; ++i) {
        Rat s = 0;
        for (int j = 0; j < n_; ++j) {
            const int e = (*this)(i, j);
            if (e != 0) s += e * v[j];
        }
        out[i] = s;
    }
    return out;
}

std::vector<int> IntMat::apply(std::span<const int> v) const {
    assert(static_cast<int>(v.size()) == n_);
    std::vector<int> out(v.size(), 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

Mat IntMat::to_rational() const {
    Mat m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
    return m;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
    assert(a.size() == b.size());
    const int n = a.size();
    IntMat out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const int e = a(i, k);
            if (e == 0) continue;
            for (int j = 0; j < n; ++j) out(i, j) += e * b(k, j);
        }
    return out;
}

std::size_t IntMatHash::operator()(const IntMat& m) const {
    std::size_t h = static_cast<std::size_t>(m.size());
    for (int x : m.entries()) h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

// ---------------------------------------------------------------- elimination

namespace {

using IntRow = std::vector<Int>;

// Scales a rational row by the lcm of its denominators.
IntRow integer_row(std::span<const Rat> row) {
    Int l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntRow out;
    out.reserve(row.size());
    for (const auto& x : row) out.push_back(Int(x.get_num() * (l / x.get_den())));
    return out;
}

// Bareiss elimination in place.  Columns [0, pivot_cols) are eliminated;
// returns the pivot column of each echelon row.
std::vector<std::size_t> bareiss(std::vector<IntRow>& m, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        const Int pivot = m[r][c];
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            const Int factor = m[i][c];
            for (std::size_t j = c; j < m[i].size(); ++j) {
                Int v = m[i][j] * pivot - factor * m[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
        }
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Vec solve_linear_system(const Mat& a, const Vec& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw SingularSystem("solve_linear_system: shape mismatch");
    std::vector<IntRow> m;
    m.reserve(n);
    std::vector<Rat> row(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) row[j] = a(i, j);
        row[n] = b[i];
        m.push_back(integer_row(row));
    }
    const auto pivots = bareiss(m, n);
    if (pivots.size() != n) throw SingularSystem("solve_linear_system: singular matrix");

    Vec x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rat s = Rat(m[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) s -= Rat(m[i][j]) * x[j];
        x[i] = s / Rat(m[i][i]);
    }
    return x;
}

int rank(std::span<const Vec> vectors) {
    if (vectors.empty()) return 0;
    std::vector<IntRow> m;
    m.reserve(vectors.size());
    for (const auto& v : vectors) m.push_back(integer_row(v.coords()));
    return static_cast<int>(bareiss(m, vectors.front().size()).size());
}

// ---------------------------------------------------------------- SpanBasis

Vec SpanBasis::reduce(Vec v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rat f = v[pivots_[k]];
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) {
            if (sgn(rows_[k][j]) != 0) v[j] -= f * rows_[k][j];
        }
    }
    return v;
}

bool SpanBasis::add(const Vec& v) {
    assert(v.size() == ambient_);
    Vec r = reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && sgn(r[p]) == 0) ++p;
    if (p == ambient_) return false;
    r *= 1 / r[p];
    // keep earlier rows reduced against the new pivot so reduce() stays one pass
    for (auto& row : rows_) {
        const Rat f = row[p];
        if (sgn(f) != 0) row -= f * r;
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

bool SpanBasis::contains(const Vec& v) const {
    return reduce(v).is_zero();
}

}  // namespace pnh

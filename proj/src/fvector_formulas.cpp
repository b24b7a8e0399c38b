#include "pnh/fvector_formulas.hpp"

#include <algorithm>
#include <string>

#include "pnh/error.hpp"

namespace pnh {

namespace {

void extend(int remaining, int largest, std::vector<int>& parts, std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition p;
        p.parts = parts;
        p.multiplicities.assign(parts.empty() ? 0 : parts.front(), 0);
        for (int x : parts) ++p.multiplicities[x - 1];
        p.weight = factorial(p.length());
        for (int m : p.multiplicities) p.weight /= factorial(m);
        out.push_back(std::move(p));
        return;
    }
    for (int x = std::min(remaining, largest); x >= 1; --x) {
        parts.push_back(x);
        extend(remaining - x, x, parts, out);
        parts.pop_back();
    }
}

void check_range(int n, int k) {
    if (n < 2 || k < 0 || k > n - 2)
        throw OutOfRange("codimension index k = " + std::to_string(k) + " outside [0, n - 2] for n = " +
                         std::to_string(n));
}

// sum over 1 < j_1 < ... < j_k < l of prod_t C(j_{t+1} - 1, j_t - 1), with j_{k+1} = l
Int chain_sum(int l, int k) {
    if (k == 0) return 1;
    std::vector<std::vector<Int>> g(k + 1, std::vector<Int>(l + 1, 0));
    g[0][l] = 1;
    for (int r = 1; r <= k; ++r)
        for (int upper = 2; upper <= l; ++upper) {
            if (g[r - 1][upper] == 0) continue;
            for (int j = 2; j < upper; ++j) g[r][j] += g[r - 1][upper] * binomial(upper - 1, j - 1);
        }
    Int total = 0;
    for (int j = 2; j <= l; ++j) total += g[k][j];
    return total;
}

template <class Inner>
Int face_count(int n, int k, Inner inner) {
    check_range(n, k);
    Int total = 0;
    for (const auto& p : partitions(n)) {
        if (p.length() < 2 + k) continue;
        total += p.weight * multinomial(p) * inner(p.length(), k);
    }
    return total;
}

}  // namespace

Int factorial(int n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Int binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

std::vector<Partition> partitions(int n) {
    if (n < 1) throw OutOfRange("partitions of a non-positive integer");
    std::vector<Partition> out;
    std::vector<int> parts;
    extend(n, n, parts, out);
    return out;
}

Int multinomial(const Partition& p) {
    int n = 0;
    for (int x : p.parts) n += x;
    Int out = factorial(n);
    for (int x : p.parts) out /= factorial(x);
    return out;
}

Int cayley_count(int l, int k) {
    if (k < 0 || k > l - 2) throw OutOfRange("cayley_count needs 0 <= k <= l - 2");
    const Int num = binomial(l - 2, k) * binomial(l + k, k);
    if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(k + 1)))
        throw VerificationFailed("parenthesization count is not an integer");
    return num / (k + 1);
}

Int minimal_face_count(int n, int k) { return face_count(n, k, cayley_count); }

Int maximal_face_count(int n, int k) { return face_count(n, k, chain_sum); }

}  // namespace pnh

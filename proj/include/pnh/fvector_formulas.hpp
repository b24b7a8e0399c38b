#pragma once

// Closed-form face counts of the minimal and maximal polytopes of type
// A_{n-1}, indexed by codimension k + 1.

#include <vector>

#include "pnh/exact.hpp"

namespace pnh {

struct Partition {
    std::vector<int> parts;           // weakly decreasing
    std::vector<int> multiplicities;  // multiplicities[i] = number of parts equal to i + 1
    Int weight;                       // l! / prod m_i!

    int length() const { return static_cast<int>(parts.size()); }
};

/// Partitions of n in reverse lexicographic order, starting with (n).
std::vector<Partition> partitions(int n);

Int binomial(int n, int k);
Int factorial(int n);

/// Parenthesizations of a word of length l with k pairs of brackets.
Int cayley_count(int l, int k);

/// n! / prod lambda_i!
Int multinomial(const Partition& p);

/// Faces of codimension k + 1, 0 <= k <= n - 2.  Throw OutOfRange otherwise.
Int minimal_face_count(int n, int k);
Int maximal_face_count(int n, int k);

}  // namespace pnh

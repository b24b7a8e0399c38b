#include "pnh/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "pnh/error.hpp"

namespace pnh {

bool ParabolicSubgroup::contains(int g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

std::uint64_t predicted_order(const RootSystem& rs) {
    std::uint64_t total = 1;
    for (const auto& c : rs.components()) {
        const std::uint64_t m = static_cast<std::uint64_t>(c.rank);
        std::uint64_t f = 1;
        for (std::uint64_t k = 2; k <= m; ++k) f *= k;
        switch (c.type) {
            case RootType::A: f *= m + 1; break;
            case RootType::B:
            case RootType::C: f <<= m; break;
            case RootType::D: f <<= (m - 1); break;
        }
        total *= f;
        if (total > (std::uint64_t{1} << 40)) return total;
    }
    return total;
}

namespace {

IntMat simple_reflection(const IntMat& cartan, int i) {
    IntMat s = IntMat::identity(cartan.size());
    for (int j = 0; j < cartan.size(); ++j) s(i, j) -= cartan(i, j);
    return s;
}

}  // namespace

WeylGroup::WeylGroup(const RootSystem& rs, std::size_t cap) : rs_(rs) {
    const int n = rs_.rank();
    num_roots_ = rs_.num_positive_roots();
    const std::uint64_t expected = predicted_order(rs_);
    if (expected > cap) {
        throw GroupTooLarge("|W(" + rs_.name() + ")| = " + std::to_string(expected) + " exceeds the cap " +
                            std::to_string(cap));
    }

    std::vector<IntMat> gens;
    for (int i = 0; i < n; ++i) gens.push_back(simple_reflection(rs_.cartan(), i));

    elements_.push_back(IntMat::identity(n));
    words_.emplace_back();
    index_.emplace(elements_[0], 0);
    for (std::size_t g = 0; g < elements_.size(); ++g) {
        for (int i = 0; i < n; ++i) {
            IntMat m = elements_[g] * gens[i];
            auto [it, inserted] = index_.try_emplace(m, static_cast<int>(elements_.size()));
            if (inserted) {
                if (elements_.size() >= expected) throw Error("Weyl group enumeration exceeded the classical order");
                auto w = words_[g];
                w.push_back(i);
                elements_.push_back(std::move(m));
                words_.push_back(std::move(w));
            }
        }
    }
    if (elements_.size() != expected) throw Error("Weyl group order differs from the classical order");

    const std::size_t size = elements_.size();
    right_.resize(size * n);
    for (std::size_t g = 0; g < size; ++g)
        for (int i = 0; i < n; ++i) right_[g * n + i] = index_.at(elements_[g] * gens[i]);
    for (int i = 0; i < n; ++i) generators_.push_back(index_.at(gens[i]));

    inverse_.resize(size);
    for (std::size_t g = 0; g < size; ++g) {
        int cur = identity();
        for (auto it = words_[g].rbegin(); it != words_[g].rend(); ++it) cur = right_[cur * n + *it];
        inverse_[g] = cur;
    }

    std::vector<int> order(size);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return elements_[a] < elements_[b]; });
    lex_rank_.resize(size);
    for (std::size_t r = 0; r < size; ++r) lex_rank_[order[r]] = static_cast<int>(r);

    // every element must be an isometry permuting the roots
    IntMat gram(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& x = rs_.gram()(i, j);
            if (x.get_den() != 1) throw Error("Gram matrix is not integral");
            gram(i, j) = static_cast<int>(x.get_num().get_si());
        }
    const auto& roots = rs_.positive_root_coords();
    root_perm_.resize(size * num_roots_);
    for (std::size_t g = 0; g < size; ++g) {
        const IntMat& m = elements_[g];
        IntMat mt(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) mt(i, j) = m(j, i);
        if (mt * gram * m != gram) throw Error("Weyl group element does not preserve the inner product");
        for (int k = 0; k < num_roots_; ++k) {
            const int image = rs_.signed_root_index(elements_[g].apply(roots[k]));
            if (image == 0) throw Error("Weyl group element does not permute the roots");
            root_perm_[g * num_roots_ + k] = image;
        }
    }

    for (int k = 0; k < num_roots_; ++k) {
        const Vec& beta = rs_.positive_roots()[k];
        const Rat norm = rs_.inner(beta, beta);
        IntMat s = IntMat::identity(n);
        for (int j = 0; j < n; ++j) {
            const Rat c = 2 * rs_.inner(Vec::unit(n, j), beta) / norm;
            if (c.get_den() != 1) throw Error("non-integral reflection coefficient");
            const int ci = static_cast<int>(c.get_num().get_si());
            for (int i = 0; i < n; ++i) s(i, j) -= ci * roots[k][i];
        }
        const int id = find(s);
        if (id < 0) throw Error("reflection missing from the enumerated group");
        reflections_.push_back(id);
    }

    if (size <= kTableLimit) build_multiplication_table();
}

void WeylGroup::build_multiplication_table() {
    const std::size_t size = elements_.size();
    const int n = rank();
    table_.assign(size * size, -1);
    // g (h s_i) = (g h) s_i, filled in BFS order of h
    for (std::size_t g = 0; g < size; ++g) table_[g * size] = static_cast<int>(g);
    for (std::size_t h = 1; h < size; ++h) {
        const auto& w = words_[h];
        const int i = w.back();
        int prefix = identity();
        for (std::size_t k = 0; k + 1 < w.size(); ++k) prefix = right_[prefix * n + w[k]];
        for (std::size_t g = 0; g < size; ++g) table_[g * size + h] = right_[table_[g * size + prefix] * n + i];
    }
}

int WeylGroup::multiply(int g, int h) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(g) * elements_.size() + h];
    const int n = rank();
    int cur = g;
    for (int letter : words_[h]) cur = right_[cur * n + letter];
    return cur;
}

int WeylGroup::find(const IntMat& m) const {
    const auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

RootSet WeylGroup::act(int g, const RootSet& roots) const {
    RootSet out;
    for (int k : roots.indices()) {
        const int image = root_image(g, k);
        out.set(std::abs(image) - 1);
    }
    return out;
}

int WeylGroup::conjugate(int g, const DiagramAutomorphism& gamma) const {
    const int n = rank();
    int cur = identity();
    for (int letter : words_[g]) cur = right_[cur * n + gamma.perm[letter]];
    return cur;
}

namespace {

ParabolicSubgroup generate(const WeylGroup& w, const RootSet& roots, const std::vector<int>& gens) {
    ParabolicSubgroup p;
    p.roots = roots;
    const int size = w.order();
    p.coset_rep.assign(size, -1);
    std::vector<int> component(size, -1);
    std::vector<int> queue;
    // left cosets gH are the connected components of g ~ g r, r a generator
    for (int start = 0; start < size; ++start) {
        if (component[start] >= 0) continue;
        queue.assign(1, start);
        component[start] = start;
        int best = start;
        for (std::size_t k = 0; k < queue.size(); ++k) {
            const int g = queue[k];
            if (w.lex_rank(g) < w.lex_rank(best)) best = g;
            for (int r : gens) {
                const int h = w.multiply(g, r);
                if (component[h] < 0) {
                    component[h] = start;
                    queue.push_back(h);
                }
            }
        }
        for (int g : queue) p.coset_rep[g] = best;
        p.coset_reps.push_back(best);
        if (start == WeylGroup::identity()) {
            p.members = queue;
            std::sort(p.members.begin(), p.members.end());
        }
    }
    std::sort(p.coset_reps.begin(), p.coset_reps.end());
    if (static_cast<std::size_t>(p.order()) * p.coset_reps.size() != static_cast<std::size_t>(size)) {
        throw Error("coset partition is inconsistent with Lagrange's theorem");
    }
    return p;
}

}  // namespace

const ParabolicSubgroup& WeylGroup::standard_parabolic(SimpleMask mask) const {
    std::lock_guard lock(cache_mutex_);
    auto& slot = parabolic_cache_[mask];
    if (!slot) {
        RootSet roots;
        const int n = rank();
        const auto& coords = rs_.positive_root_coords();
        for (int k = 0; k < num_roots_; ++k) {
            bool inside = true;
            for (int i = 0; i < n && inside; ++i) inside = coords[k][i] == 0 || ((mask >> i) & 1U);
            if (inside) roots.set(k);
        }
        std::vector<int> gens;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1U) gens.push_back(generators_[i]);
        slot = std::make_unique<ParabolicSubgroup>(generate(*this, roots, gens));
    }
    return *slot;
}

ParabolicSubgroup parabolic_subgroup(const WeylGroup& w, const RootSet& roots) {
    std::vector<int> gens;
    for (int k : roots.indices()) gens.push_back(w.reflection(k));
    return generate(w, roots, gens);
}

}  // namespace pnh

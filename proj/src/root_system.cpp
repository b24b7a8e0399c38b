#include "pnh/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "pnh/error.hpp"

namespace pnh {

char type_letter(RootType t) {
    switch (t) {
        case RootType::A: return 'A';
        case RootType::B: return 'B';
        case RootType::C: return 'C';
        case RootType::D: return 'D';
    }
    return '?';
}

std::vector<ComponentSpec> parse_root_spec(std::string_view text) {
    std::vector<ComponentSpec> out;
    std::size_t pos = 0;
    auto fail = [&]() { throw UnsupportedType("cannot parse root system '" + std::string(text) + "'"); };
    auto read_int = [&]() {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos || pos - start > 3) fail();
        return std::stoi(std::string(text.substr(start, pos - start)));
    };
    while (true) {
        if (pos >= text.size()) fail();
        RootType type;
        switch (std::toupper(static_cast<unsigned char>(text[pos]))) {
            case 'A': type = RootType::A; break;
            case 'B': type = RootType::B; break;
            case 'C': type = RootType::C; break;
            case 'D': type = RootType::D; break;
            default: fail(); type = RootType::A;
        }
        ++pos;
        const int rank = read_int();
        int copies = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            copies = read_int();
        }
        if (copies < 1) fail();
        for (int i = 0; i < copies; ++i) out.push_back({type, rank});
        if (pos == text.size()) break;
        if (text[pos] != 'x' && text[pos] != 'X' && text[pos] != '*') fail();
        ++pos;
    }
    return out;
}

namespace {

void check_component_rank(const ComponentSpec& c) {
    const int min_rank = c.type == RootType::A ? 1 : c.type == RootType::D ? 3 : 2;
    if (c.rank < min_rank) {
        throw UnsupportedType(std::string(1, type_letter(c.type)) + std::to_string(c.rank) +
                              " is not a supported root system");
    }
}

IntMat cartan_of(std::span<const ComponentSpec> spec) {
    int n = 0;
    for (const auto& c : spec) {
        check_component_rank(c);
        n += c.rank;
    }
    IntMat a(n);
    int off = 0;
    for (const auto& c : spec) {
        const int m = c.rank;
        for (int i = 0; i < m; ++i) a(off + i, off + i) = 2;
        auto link = [&](int i, int j, int aij, int aji) {
            a(off + i, off + j) = aij;
            a(off + j, off + i) = aji;
        };
        switch (c.type) {
            case RootType::A:
                for (int i = 0; i + 1 < m; ++i) link(i, i + 1, -1, -1);
                break;
            case RootType::B:
                for (int i = 0; i + 2 < m; ++i) link(i, i + 1, -1, -1);
                link(m - 2, m - 1, -1, -2);  // a_m short
                break;
            case RootType::C:
                for (int i = 0; i + 2 < m; ++i) link(i, i + 1, -1, -1);
                link(m - 2, m - 1, -2, -1);  // a_m long
                break;
            case RootType::D:
                for (int i = 0; i + 2 < m; ++i) link(i, i + 1, -1, -1);
                link(m - 3, m - 1, -1, -1);
                break;
        }
        off += m;
    }
    return a;
}

// Connected components of the Dynkin diagram, each as a sorted index list.
std::vector<std::vector<int>> diagram_components(const IntMat& a) {
    const int n = a.size();
    std::vector<int> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t k = 0; k < comp.size(); ++k) {
            for (int j = 0; j < n; ++j) {
                if (!seen[j] && a(comp[k], j) != 0) {
                    seen[j] = 1;
                    comp.push_back(j);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

RootType classify(const IntMat& a, const std::vector<int>& comp, const std::vector<Rat>& len) {
    const int m = static_cast<int>(comp.size());
    int double_bonds = 0;
    int max_degree = 0;
    int edges = 0;
    for (int x = 0; x < m; ++x) {
        int deg = 0;
        for (int y = 0; y < m; ++y) {
            if (x == y) continue;
            const int e = a(comp[x], comp[y]);
            if (e == 0) continue;
            ++deg;
            if (x < y) {
                ++edges;
                const int prod = e * a(comp[y], comp[x]);
                if (prod == 2) ++double_bonds;
                else if (prod != 1) throw UnsupportedType("exceptional or non-crystallographic bond");
            }
        }
        max_degree = std::max(max_degree, deg);
    }
    if (edges != m - 1) throw UnsupportedType("Dynkin diagram is not a tree");
    if (double_bonds == 0) {
        if (max_degree <= 2) return RootType::A;
        if (max_degree == 3 && m >= 4) {
            // D_m: a single branch node with at least two leaf neighbours
            return RootType::D;
        }
        throw UnsupportedType("unsupported simply-laced diagram");
    }
    if (double_bonds > 1 || max_degree > 2) throw UnsupportedType("unsupported multiply-laced diagram");
    const Rat shortest = *std::min_element(len.begin(), len.end());
    const int shorts = static_cast<int>(std::count(len.begin(), len.end(), shortest));
    if (m >= 3 && shorts != 1 && shorts != m - 1) throw UnsupportedType("F4-like diagram");
    return shorts == 1 ? RootType::B : RootType::C;
}

}  // namespace

RootSystem RootSystem::from_cartan(const IntMat& cartan) {
    RootSystem rs;
    const int n = cartan.size();
    rs.rank_ = n;
    rs.cartan_ = cartan;

    // squared lengths d_i with d_i A_ij = d_j A_ji, shortest = 2 per component
    std::vector<Rat> d(n);
    const auto comps = diagram_components(cartan);
    for (const auto& comp : comps) {
        d[comp[0]] = 1;
        std::vector<int> order{comp[0]};
        std::vector<int> done(n, 0);
        done[comp[0]] = 1;
        for (std::size_t k = 0; k < order.size(); ++k) {
            const int i = order[k];
            for (int j : comp) {
                if (done[j] || cartan(i, j) == 0) continue;
                if (cartan(j, i) == 0) throw UnsupportedType("Cartan matrix is not symmetrizable");
                d[j] = d[i] * cartan(i, j) / cartan(j, i);
                done[j] = 1;
                order.push_back(j);
            }
        }
        Rat shortest = d[comp[0]];
        for (int i : comp) shortest = std::min(shortest, d[i]);
        const Rat scale = 2 / shortest;
        std::vector<Rat> comp_len;
        for (int i : comp) {
            d[i] *= scale;
            comp_len.push_back(d[i]);
        }
        const RootType t = comp.size() == 1 ? RootType::A : classify(cartan, comp, comp_len);
        rs.components_.push_back({t, static_cast<int>(comp.size()), comp[0]});
        for (std::size_t k = 0; k < comp.size(); ++k) {
            if (comp[k] != comp[0] + static_cast<int>(k)) {
                throw UnsupportedType("components must occupy consecutive simple-root indices");
            }
        }
    }

    rs.gram_ = Mat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs.gram_(i, j) = d[i] * cartan(i, j) / 2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rs.gram_(i, j) != rs.gram_(j, i)) throw UnsupportedType("Cartan matrix is not symmetrizable");

    // positive roots, height by height, via root strings
    std::map<std::vector<int>, int> known;
    std::vector<std::vector<int>> level;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        level.push_back(e);
    }
    std::vector<std::vector<int>> all;
    while (!level.empty()) {
        std::sort(level.begin(), level.end(), std::greater<>());
        for (const auto& r : level) {
            known.emplace(r, static_cast<int>(all.size()));
            all.push_back(r);
        }
        std::vector<std::vector<int>> next;
        for (const auto& beta : level) {
            for (int i = 0; i < n; ++i) {
                int pairing = 0;  // <beta, a_i^vee>
                for (int j = 0; j < n; ++j) pairing += cartan(i, j) * beta[j];
                int p = 0;
                std::vector<int> down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!known.contains(down)) break;
                    ++p;
                }
                const bool is_simple_i = std::count(beta.begin(), beta.end(), 0) == n - 1 && beta[i] == 1;
                if (is_simple_i) continue;
                if (p - pairing > 0) {
                    std::vector<int> up = beta;
                    up[i] += 1;
                    if (std::find(next.begin(), next.end(), up) == next.end()) next.push_back(up);
                }
            }
        }
        level = std::move(next);
    }
    rs.root_coords_ = all;
    for (std::size_t k = 0; k < all.size(); ++k) {
        Vec v(n);
        for (int j = 0; j < n; ++j) v[j] = all[k][j];
        rs.positive_roots_.push_back(std::move(v));
        rs.root_lookup_.emplace(all[k], static_cast<int>(k) + 1);
        std::vector<int> neg = all[k];
        for (auto& x : neg) x = -x;
        rs.root_lookup_.emplace(neg, -(static_cast<int>(k) + 1));
    }

    rs.delta_ = Vec(n);
    for (const auto& r : rs.positive_roots_) rs.delta_ += r;
    rs.delta_ *= Rat(1, 2);
    rs.weights_ = fundamental_weights(rs);
    rs.self_check();
    return rs;
}

std::string RootSystem::name() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < components_.size();) {
        std::size_t run = k;
        while (run < components_.size() && components_[run].type == components_[k].type &&
               components_[run].rank == components_[k].rank)
            ++run;
        if (k > 0) os << 'x';
        os << type_letter(components_[k].type) << components_[k].rank;
        if (run - k > 1) os << '^' << (run - k);
        k = run;
    }
    return os.str();
}

Rat RootSystem::inner(const Vec& x, const Vec& y) const {
    return dot(x, gram_ * y);
}

Vec RootSystem::weight_coords(const Vec& v) const {
    const Vec c = covector(v);
    Vec out(rank_);
    for (int i = 0; i < rank_; ++i) out[i] = 2 * c[i] / gram_(i, i);
    return out;
}

int RootSystem::signed_root_index(std::span<const int> coords) const {
    const auto it = root_lookup_.find(std::vector<int>(coords.begin(), coords.end()));
    return it == root_lookup_.end() ? 0 : it->second;
}

void RootSystem::self_check() const {
    const int n = rank_;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (2 * gram_(i, j) / gram_(i, i) != cartan_(i, j)) throw Error("root system: Cartan/Gram mismatch");

    std::size_t expected = 0;
    for (const auto& c : components_) {
        const std::size_t m = static_cast<std::size_t>(c.rank);
        switch (c.type) {
            case RootType::A: expected += m * (m + 1) / 2; break;
            case RootType::B:
            case RootType::C: expected += m * m; break;
            case RootType::D: expected += m * (m - 1); break;
        }
    }
    if (expected != root_coords_.size()) throw Error("root system: positive root count mismatch");

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat v = 2 * inner(Vec::unit(n, j), weights_[i]) / gram_(j, j);
            if (v != (i == j ? 1 : 0)) throw Error("root system: weights do not dualize the coroots");
        }

    Vec sum(n);
    for (const auto& w : weights_) sum += w;
    if (sum != delta_) throw Error("root system: delta differs from the sum of the weights");
    for (int i = 0; i < n; ++i)
        if (sgn(inner(delta_, Vec::unit(n, i))) <= 0) throw Error("root system: delta not in the open chamber");
    for (const auto& r : root_coords_)
        for (int x : r)
            if (x < 0) throw Error("root system: positive root with negative coordinate");
}

RootSystem build_root_system(std::span<const ComponentSpec> spec) {
    if (spec.empty()) throw UnsupportedType("empty root system");
    return RootSystem::from_cartan(cartan_of(spec));
}

RootSystem build_root_system(std::string_view spec) {
    const auto parts = parse_root_spec(spec);
    return build_root_system(parts);
}

std::vector<Vec> fundamental_weights(const RootSystem& rs) {
    const int n = rs.rank();
    std::vector<Vec> out;
    for (int i = 0; i < n; ++i) {
        // (a_j, w_i) = [i == j] (a_i, a_i) / 2
        Vec rhs(n);
        rhs[i] = rs.gram()(i, i) / 2;
        out.push_back(solve_linear_system(rs.gram(), rhs));
    }
    return out;
}

std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs) {
    const int n = rs.rank();
    const IntMat& a = rs.cartan();
    const Mat& g = rs.gram();
    std::vector<DiagramAutomorphism> out;
    std::vector<int> perm(n, -1);
    std::vector<int> used(n, 0);

    auto extend = [&](auto&& self, int i) -> void {
        if (i == n) {
            IntMat m(n);
            for (int k = 0; k < n; ++k) m(perm[k], k) = 1;
            out.push_back({perm, std::move(m)});
            return;
        }
        for (int t = 0; t < n; ++t) {
            if (used[t]) continue;
            bool ok = true;
            for (int k = 0; k <= i && ok; ++k) {
                const int pk = k == i ? t : perm[k];
                ok = a(i, k) == a(t, pk) && a(k, i) == a(pk, t) && g(i, k) == g(t, pk);
            }
            if (!ok) continue;
            perm[i] = t;
            used[t] = 1;
            self(self, i + 1);
            used[t] = 0;
        }
        perm[i] = -1;
    };
    extend(extend, 0);
    return out;
}

}  // namespace pnh

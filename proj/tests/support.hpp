#pragma once

#include <memory>
#include <string>

#include "pnh/face_poset.hpp"

namespace testing_support {

using namespace pnh;

inline Rat q(long p, long d = 1) { return make_rat(p, d); }

/// Root system, group, building set and the polytope for one configuration.
struct Fixture {
    RootSystem rs;
    std::unique_ptr<WeylGroup> w;
    std::unique_ptr<BuildingSet> g;
    std::vector<Rat> eps;

    Fixture(const std::string& type, bool maximal)
        : rs(build_root_system(std::string_view(type))), w(std::make_unique<WeylGroup>(rs)) {
        g = std::make_unique<BuildingSet>(maximal ? build_maximal(rs, *w) : build_minimal(rs, *w));
        eps = suitable_list(*g, 1).eps;
    }
};

/// Mask from 1-based simple-root indices.
inline SimpleMask m(std::initializer_list<int> idx) {
    SimpleMask out = 0;
    for (int i : idx) out |= SimpleMask{1} << (i - 1);
    return out;
}

}  // namespace testing_support

#include "pnh/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "pnh/error.hpp"

namespace pnh {

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json mask_json(SimpleMask m) {
    Json out = Json::array();
    for (int i = 0; i < 32; ++i)
        if ((m >> i) & 1U) out.push_back(i + 1);
    return out;
}

Json root_system_json(const RootSystem& rs) {
    Json gram = Json::array();
    for (std::size_t i = 0; i < rs.gram().rows(); ++i) gram.push_back(to_json(rs.gram().row(i)));
    return Json{{"type", rs.name()}, {"rank", rs.rank()}, {"basis", "simple roots"}, {"gram", std::move(gram)}};
}

Json halfspaces_json(const HalfSpaceSystem& hs) {
    Json out = Json::array();
    for (std::size_t k = 0; k < hs.size(); ++k) {
        const HalfSpace& h = hs[k];
        Json item{{"id", k}, {"kind", kind_name(h.kind)}, {"flat", mask_json(h.origin)}};
        if (h.kind == HalfSpaceKind::Composite) {
            Json parts = Json::array();
            for (SimpleMask p : h.parts) parts.push_back(mask_json(p));
            item["parts"] = std::move(parts);
        }
        item["sigma_id"] = h.sigma;
        item["normal"] = to_json(h.normal);
        item["offset"] = to_json(h.offset);
        out.push_back(std::move(item));
    }
    return out;
}

Json vertices_json(const VRep& v) {
    Json out = Json::array();
    for (std::size_t id = 0; id < v.size(); ++id) {
        Json nested = Json::array();
        for (SimpleMask m : v.maximal_masks[v.nested_of(static_cast<int>(id))]) nested.push_back(mask_json(m));
        out.push_back(Json{{"id", id},
                           {"sigma_id", v.sigma_of(static_cast<int>(id))},
                           {"nested", std::move(nested)},
                           {"point", to_json(v.points[id])}});
    }
    return out;
}

Json building_set_json(const BuildingSet& g) {
    const RootSystem& rs = g.root_system();
    Json roots = Json::array();
    for (const auto& c : rs.positive_root_coords()) roots.push_back(c);
    Json flats = Json::array();
    for (const auto& f : g.flats()) flats.push_back(f.roots.indices());
    return Json{{"type", rs.name()}, {"label", g.label()}, {"roots", std::move(roots)}, {"flats", std::move(flats)}};
}

Json face_poset_json(const FacePoset& poset, bool with_edges) {
    const auto& masks = poset.building().fund_masks();
    const auto faces = poset.enumerate_faces();
    Json nodes = Json::array();
    for (std::size_t k = 0; k < faces.size(); ++k) {
        const auto& p = faces[k];
        Json flats = Json::array();
        for (int i : p.s.nested) flats.push_back(mask_json(masks[i]));
        Json labels = Json::array();
        for (int i : p.s.labels) labels.push_back(mask_json(masks[i]));
        nodes.push_back(Json{{"id", k},
                             {"dim", poset.face_dimension(p)},
                             {"coset_rep_id", p.coset},
                             {"flats", std::move(flats)},
                             {"labels", std::move(labels)}});
    }
    Json out{{"rank", poset.rank()}, {"f_vector", Json::array()}, {"nodes", std::move(nodes)}};
    for (const auto& f : poset.f_vector()) out["f_vector"].push_back(f.get_str());
    if (!with_edges) return out;

    std::vector<std::vector<std::size_t>> by_dim(poset.rank() + 1);
    for (std::size_t k = 0; k < faces.size(); ++k) by_dim[poset.face_dimension(faces[k])].push_back(k);
    Json edges = Json::array();
    for (int d = 0; d < poset.rank(); ++d)
        for (std::size_t lo : by_dim[d])
            for (std::size_t hi : by_dim[d + 1])
                if (poset.is_face_leq(faces[lo], faces[hi])) edges.push_back(Json::array({lo, hi}));
    out["edges"] = std::move(edges);
    return out;
}

BuildingSet load_building_set(const RootSystem& rs, const WeylGroup& w, const nlohmann::json& doc) {
    std::vector<int> positive;
    std::vector<Flat> family;
    try {
        if (!doc.is_object() || !doc.contains("roots") || !doc.contains("flats"))
            throw ParseError("building set needs \"roots\" and \"flats\"");
        for (const auto& r : doc.at("roots")) {
            const auto coords = r.get<std::vector<int>>();
            if (static_cast<int>(coords.size()) != rs.rank())
                throw ParseError("root with " + std::to_string(coords.size()) + " coordinates in rank " +
                                 std::to_string(rs.rank()));
            const int id = rs.signed_root_index(coords);
            if (id == 0) throw ParseError("listed vector " + r.dump() + " is not a root");
            positive.push_back(std::abs(id) - 1);
        }
        for (const auto& f : doc.at("flats")) {
            RootSet span;
            for (int i : f.get<std::vector<int>>()) {
                if (i < 0 || i >= static_cast<int>(positive.size()))
                    throw ParseError("flat refers to root #" + std::to_string(i) + " which is not listed");
                span.set(positive[i]);
            }
            if (span.empty()) throw ParseError("empty flat in building set");
            family.push_back(flat_closure(rs, span));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed building set: ") + e.what());
    }
    return validate_building_set(rs, w, std::move(family));
}

BuildingSet load_building_set_file(const RootSystem& rs, const WeylGroup& w, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return load_building_set(rs, w, doc);
}

namespace {

using Point = std::array<double, 3>;

Point sub(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot3(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Point cross(const Point& a, const Point& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

void write_off(std::ostream& out, const RootSystem& rs, const VRep& v,
               const std::vector<std::vector<int>>& facet_sets, int digits) {
    if (rs.rank() != 3) throw OutOfRange("OFF export needs rank 3, got rank " + std::to_string(rs.rank()));
    // gram = L L^T, and L^T x has the Euclidean lengths of x
    double gram[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) gram[i][j] = rs.gram()(i, j).get_d();
    double l[3][3] = {};
    for (int j = 0; j < 3; ++j) {
        double s = gram[j][j];
        for (int k = 0; k < j; ++k) s -= l[j][k] * l[j][k];
        l[j][j] = std::sqrt(s);
        for (int i = j + 1; i < 3; ++i) {
            double t = gram[i][j];
            for (int k = 0; k < j; ++k) t -= l[i][k] * l[j][k];
            l[i][j] = t / l[j][j];
        }
    }
    std::vector<Point> pts;
    for (const auto& p : v.points) {
        Point y{};
        for (int r = 0; r < 3; ++r)
            for (int i = r; i < 3; ++i) y[r] += l[i][r] * p[i].get_d();
        pts.push_back(y);
    }

    std::ostringstream body;
    body << std::setprecision(digits);
    for (const auto& y : pts) body << y[0] << ' ' << y[1] << ' ' << y[2] << '\n';
    for (const auto& facet : facet_sets) {
        Point c{};
        for (int id : facet)
            for (int r = 0; r < 3; ++r) c[r] += pts[id][r] / static_cast<double>(facet.size());
        const Point u = sub(pts[facet.front()], c);
        Point normal{};
        for (int id : facet) {
            const Point n = cross(u, sub(pts[id], c));
            if (dot3(n, n) > dot3(normal, normal)) normal = n;
        }
        if (dot3(normal, c) < 0) normal = {-normal[0], -normal[1], -normal[2]};
        const Point w = cross(normal, u);
        std::vector<std::pair<double, int>> order;
        for (int id : facet) {
            const Point d = sub(pts[id], c);
            order.emplace_back(std::atan2(dot3(d, w), dot3(d, u)), id);
        }
        std::sort(order.begin(), order.end());
        body << facet.size();
        for (const auto& [angle, id] : order) body << ' ' << id;
        body << '\n';
    }

    out << "OFF\n";
    out << "# " << rs.name() << ": exact rational vertices rounded to " << digits
        << " significant digits (lossy), Euclidean frame from the Gram matrix\n";
    out << v.size() << ' ' << facet_sets.size() << " 0\n";
    out << body.str();
}

}  // namespace pnh

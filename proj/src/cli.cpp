#include "pnh/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "pnh/error.hpp"
#include "pnh/fvector_formulas.hpp"
#include "pnh/io.hpp"

namespace pnh::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JobConfig {
    std::string type;
    std::string building = "minimal";
    std::string a = "1";
    std::string epsilons;
    std::string format;
    std::string verify = "fast";
    std::uint64_t seed = 0;
    std::string output;
    bool edges = false;
    bool no_edges = false;
};

// Everything a command needs, built in dependency order.
struct Job {
    explicit Job(const JobConfig& cfg) : config(cfg), rs(build_root_system(std::string_view(cfg.type))) {
        w = std::make_unique<WeylGroup>(rs);
        const std::string& b = cfg.building;
        if (b == "minimal") {
            g = std::make_unique<BuildingSet>(build_minimal(rs, *w));
        } else if (b == "maximal") {
            g = std::make_unique<BuildingSet>(build_maximal(rs, *w));
        } else if (b == "interval") {
            g = std::make_unique<BuildingSet>(interval_building_set(rs, *w));
        } else if (b.starts_with("file:")) {
            g = std::make_unique<BuildingSet>(load_building_set_file(rs, *w, b.substr(5)));
        } else {
            throw UsageError("--building must be minimal, maximal, interval or file:<path>");
        }
        a = parse_rat(cfg.a);
        if (sgn(a) <= 0) throw UsageError("--a must be positive");
        if (cfg.epsilons.empty()) {
            eps = suitable_list(*g, a).eps;
        } else {
            std::stringstream in(cfg.epsilons);
            for (std::string item; std::getline(in, item, ',');) eps.push_back(parse_rat(item));
            if (static_cast<int>(eps.size()) != rs.rank())
                throw UsageError("--epsilons needs " + std::to_string(rs.rank()) + " values");
            a = eps.back();
        }
    }

    void build_polytope() {
        if (hs) return;
        hs = std::make_unique<HalfSpaceSystem>(*g, *w, eps);
        v = all_vertices(*g, eps, *w);
    }

    const JobConfig& config;
    RootSystem rs;
    std::unique_ptr<WeylGroup> w;
    std::unique_ptr<BuildingSet> g;
    Rat a;
    std::vector<Rat> eps;
    std::unique_ptr<HalfSpaceSystem> hs;
    VRep v;
};

Json eps_json(const std::vector<Rat>& eps) {
    Json out = Json::array();
    for (const auto& e : eps) out.push_back(to_json(e));
    return out;
}

Json building_summary(const BuildingSet& g) {
    Json fund = Json::array();
    for (SimpleMask m : g.fund_masks()) fund.push_back(mask_json(m));
    return Json{{"label", g.label()}, {"members", g.flats().size()}, {"fund", std::move(fund)}};
}

std::size_t pair_limit(const std::string& level) { return level == "full" ? kFullCheckLimit : 100'000; }

void require_suitable(const Job& job) {
    if (auto why = suitability_violation(*job.g, job.eps)) throw InvalidEpsilons("epsilons are not suitable: " + *why);
}

Json polytope_json(Job& job) {
    require_suitable(job);
    job.build_polytope();
    Json out{{"root_system", root_system_json(job.rs)},
             {"building_set", building_summary(*job.g)},
             {"a", to_json(job.a)},
             {"epsilons", eps_json(job.eps)}};
    if (job.config.verify != "none") {
        verify_epsilon_lemma(*job.g, job.eps);
        const auto rep = verify_hrep_vrep(*job.w, *job.hs, job.v, pair_limit(job.config.verify), job.config.seed);
        out["verification"] = Json{{"level", job.config.verify},
                                   {"pairs_total", rep.pairs_total},
                                   {"pairs_checked", rep.pairs_checked},
                                   {"sampled", rep.sampled},
                                   {"seed", rep.seed}};
    }
    out["halfspaces"] = halfspaces_json(*job.hs);
    out["vertices"] = vertices_json(job.v);
    return out;
}

void emit(const JobConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.output);
    if (!file) throw UsageError("cannot write " + cfg.output);
    file << text;
}

int cmd_build(const JobConfig& cfg, std::ostream& out) {
    Job job(cfg);
    const Json doc = polytope_json(job);
    if (cfg.format == "table") {
        std::ostringstream os;
        os << "root system  " << job.rs.name() << "\nbuilding set " << job.g->label() << "\nepsilons    ";
        for (const auto& e : job.eps) os << ' ' << to_string(e);
        os << "\nhalf-spaces  " << job.hs->size() << "\nvertices     " << job.v.size() << '\n';
        emit(cfg, out, os.str());
    } else {
        emit(cfg, out, doc.dump(2) + "\n");
    }
    return kExitOk;
}

bool a_type(const RootSystem& rs) {
    return rs.components().size() == 1 && rs.components().front().type == RootType::A;
}

int cmd_fvector(const JobConfig& cfg, std::ostream& out) {
    Job job(cfg);
    const FacePoset poset(*job.g, *job.w);
    const auto f = poset.f_vector();
    const int n = job.rs.rank();
    const bool formula = a_type(job.rs) && (cfg.building == "minimal" || cfg.building == "maximal");
    auto closed = [&](int dim) -> std::optional<Int> {
        const int k = n - dim - 1;
        if (!formula || k < 0) return std::nullopt;
        return cfg.building == "minimal" ? minimal_face_count(n + 1, k) : maximal_face_count(n + 1, k);
    };
    bool agree = true;
    for (int d = 0; d <= n; ++d)
        if (auto c = closed(d); c && *c != f[d]) agree = false;

    if (cfg.format == "json") {
        Json rows = Json::array();
        for (int d = 0; d <= n; ++d) {
            Json row{{"dim", d}, {"count", f[d].get_str()}};
            if (auto c = closed(d)) row["formula"] = c->get_str();
            rows.push_back(std::move(row));
        }
        emit(cfg, out, Json{{"root_system", job.rs.name()}, {"building_set", job.g->label()}, {"f_vector", rows}}.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << job.rs.name() << ' ' << job.g->label() << '\n';
        os << std::setw(4) << "dim" << std::setw(14) << "faces";
        if (formula) os << std::setw(14) << "formula";
        os << '\n';
        for (int d = 0; d <= n; ++d) {
            os << std::setw(4) << d << std::setw(14) << f[d].get_str();
            if (formula) os << std::setw(14) << (closed(d) ? closed(d)->get_str() : "-");
            os << '\n';
        }
        emit(cfg, out, os.str());
    }
    return agree ? kExitOk : kExitVerificationFailed;
}

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

// Runs one named check; a pnh::Error counts as a failure with its message.
template <class F>
bool run_check(std::vector<Check>& checks, const std::string& name, F body) {
    try {
        std::string detail = body();
        checks.push_back({name, true, std::move(detail)});
        return true;
    } catch (const Error& e) {
        checks.push_back({name, false, e.what()});
        return false;
    }
}

int cmd_verify(const JobConfig& cfg, std::ostream& out) {
    Job job(cfg);
    const bool full = cfg.verify == "full";
    const int n = job.rs.rank();
    std::vector<Check> checks;

    bool ok = run_check(checks, "suitable epsilons", [&] {
        require_suitable(job);
        return std::string("strict separations hold");
    });
    ok = run_check(checks, "epsilon inequality on decompositions", [&] {
             const auto rep = verify_epsilon_lemma(*job.g, job.eps);
             return std::to_string(rep.checked) + " decompositions";
         }) && ok;
    if (ok) {
        ok = run_check(checks, "vertices in the open chamber", [&] {
            job.build_polytope();
            if (!job.v.coincidences.empty()) throw VerificationFailed("two vertex ids share a point");
            return std::to_string(job.v.maximal.size()) + " per chamber, " + std::to_string(job.v.size()) + " total";
        });
    }
    if (ok) {
        run_check(checks, "half-spaces versus vertices", [&] {
            const auto rep = verify_hrep_vrep(*job.w, *job.hs, job.v, pair_limit(cfg.verify), cfg.seed);
            return std::to_string(rep.pairs_checked) + " of " + std::to_string(rep.pairs_total) + " pairs" +
                   (rep.sampled ? " (sampled, seed " + std::to_string(rep.seed) + ")" : "");
        });
        run_check(checks, "chamber nestohedron", [&] {
            const auto rep = nestohedron_check(*job.g, job.eps);
            return std::to_string(rep.non_nested_checked) + " non-nested families cut off";
        });

        const FacePoset poset(*job.g, *job.w);
        std::vector<std::vector<int>> facet_sets;
        run_check(checks, "face counts", [&] {
            facet_sets = facet_vertex_sets(*job.hs, job.v);
            const auto f = poset.f_vector();
            if (f[0] != Int(static_cast<unsigned long>(job.v.size())))
                throw VerificationFailed("vertex count differs from the enumeration");
            if (f[n - 1] != Int(static_cast<unsigned long>(job.hs->size())))
                throw VerificationFailed("facet count differs from the half-space count");
            if (!euler_check(f)) throw VerificationFailed("Euler characteristic is wrong");
            std::string s;
            for (const auto& x : f) s += (s.empty() ? "" : " ") + x.get_str();
            return "f = (" + s + ")";
        });
        if (!facet_sets.empty()) {
            run_check(checks, "face vertex sets", [&] {
                const auto faces = poset.enumerate_faces(full ? std::nullopt : std::optional<int>(n - 1));
                for (const auto& p : faces)
                    if (poset.face_vertices(p) != poset.incidence_vertices(p, *job.hs, facet_sets))
                        throw VerificationFailed("a face's vertices disagree with its supporting hyperplanes");
                return std::to_string(faces.size()) + " faces";
            });
            run_check(checks, "simplicity", [&] {
                std::vector<int> through(job.v.size(), 0);
                for (const auto& s : facet_sets)
                    for (int id : s) ++through[id];
                for (std::size_t t = 0; t < job.v.maximal.size(); ++t)
                    if (through[job.v.id(0, static_cast<int>(t))] != poset.facets_through(job.v.maximal[t]))
                        throw VerificationFailed("facet count at a vertex differs from the nested-set count");
                const bool simple = poset.is_simple();
                std::size_t flats = 0;
                for (const auto& f : all_flats(job.rs))
                    if (f.dim > 0) ++flats;
                if (simple != (job.g->flats().size() == flats))
                    throw VerificationFailed("simple polytope for a non-maximal building set or vice versa");
                return std::string(simple ? "simple" : "not simple");
            });
        }
        if (n <= 3) {
            run_check(checks, "order relation", [&] {
                const auto faces = poset.enumerate_faces();
                std::vector<std::vector<int>> verts;
                for (const auto& p : faces) verts.push_back(poset.face_vertices(p));
                for (std::size_t x = 0; x < faces.size(); ++x)
                    for (std::size_t y = 0; y < faces.size(); ++y) {
                        const bool geo = std::includes(verts[y].begin(), verts[y].end(), verts[x].begin(), verts[x].end());
                        if (geo != poset.is_face_leq(faces[x], faces[y]))
                            throw VerificationFailed("moves and vertex containment disagree");
                    }
                return std::to_string(faces.size() * faces.size()) + " pairs";
            });
        }
        run_check(checks, "facet factorization", [&] {
            const auto facets = crossing_facets(poset);
            for (const auto& p : facets) facet_factors(poset, p, full && n <= 3);
            return std::to_string(facets.size()) + " crossing facets" + (full && n <= 3 ? ", lattices checked" : "");
        });
        run_check(checks, "automorphisms permute half-spaces", [&] {
            std::size_t maps = 0;
            for (int gamma : job.g->preserving_automorphisms())
                for (int x = 0; x < (full ? job.w->order() : 1); ++x) {
                    aut_action_on_halfspaces(*job.g, *job.w, *job.hs, x, gamma);
                    ++maps;
                }
            return std::to_string(maps) + " maps";
        });
    }

    bool all = true;
    for (const auto& c : checks) all = all && c.pass;
    if (cfg.format == "json") {
        Json items = Json::array();
        for (const auto& c : checks)
            items.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        emit(cfg, out,
             Json{{"root_system", job.rs.name()},
                  {"building_set", job.g->label()},
                  {"epsilons", eps_json(job.eps)},
                  {"checks", items},
                  {"pass", all}}
                     .dump(2) +
                 "\n");
    } else {
        std::ostringstream os;
        os << job.rs.name() << ' ' << job.g->label() << ", epsilons";
        for (const auto& e : job.eps) os << ' ' << to_string(e);
        os << '\n';
        for (const auto& c : checks) os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        os << (all ? "all checks passed" : "verification failed") << '\n';
        emit(cfg, out, os.str());
    }
    return all ? kExitOk : kExitVerificationFailed;
}

int cmd_export(const JobConfig& cfg, std::ostream& out) {
    Job job(cfg);
    if (cfg.format == "off") {
        if (job.rs.rank() != 3) throw UsageError("OFF export needs a rank 3 root system");
        require_suitable(job);
        job.build_polytope();
        std::ostringstream os;
        write_off(os, job.rs, job.v, facet_vertex_sets(*job.hs, job.v));
        emit(cfg, out, os.str());
    } else {
        emit(cfg, out, polytope_json(job).dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_poset(const JobConfig& cfg, std::ostream& out) {
    Job job(cfg);
    const FacePoset poset(*job.g, *job.w);
    const bool edges = cfg.edges || (!cfg.no_edges && job.rs.rank() <= 3);
    Json doc{{"root_system", job.rs.name()}, {"building_set", job.g->label()}};
    const Json body = face_poset_json(poset, edges);
    for (const auto& [key, value] : body.items()) doc[key] = value;
    emit(cfg, out, doc.dump(2) + "\n");
    return kExitOk;
}

// Failed checks exit with 1; bad input, unsupported systems and size limits with 2.
int exit_code_for(const Error& e) {
    if (dynamic_cast<const InvalidEpsilons*>(&e) || dynamic_cast<const LemmaViolated*>(&e) ||
        dynamic_cast<const VerificationFailed*>(&e) || dynamic_cast<const NotInChamber*>(&e) ||
        dynamic_cast<const EmptyFacet*>(&e))
        return kExitVerificationFailed;
    return kExitUsage;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact construction and verification of permutonestohedra", "pnh"};
    app.require_subcommand(1);
    JobConfig cfg;

    auto* build = app.add_subcommand("build", "half-spaces and vertices as JSON");
    auto* fvector = app.add_subcommand("fvector", "face counts by dimension");
    auto* verify = app.add_subcommand("verify", "run every check and report pass/fail");
    auto* exporter = app.add_subcommand("export", "OFF mesh (rank 3) or JSON");
    auto* poset = app.add_subcommand("poset", "face poset as JSON");
    for (auto* sub : {build, fvector, verify, exporter, poset}) {
        sub->add_option("--type", cfg.type, "root system, e.g. A3, B3, D4, A1^3, A2xA1")->required();
        sub->add_option("--building", cfg.building, "minimal, maximal, interval or file:<path>");
        sub->add_option("--a", cfg.a, "largest epsilon, a positive rational");
        sub->add_option("--epsilons", cfg.epsilons, "comma-separated epsilons, overriding --a");
        sub->add_option("--verify", cfg.verify, "none, fast or full")->check(CLI::IsMember({"none", "fast", "full"}));
        sub->add_option("--seed", cfg.seed, "seed for sampled checks");
        sub->add_option("-o,--output", cfg.output, "write to a file instead of stdout");
    }
    build->add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    fvector->add_option("--format", cfg.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    verify->add_option("--format", cfg.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    exporter->add_option("--format", cfg.format, "off or json")->check(CLI::IsMember({"off", "json"}));
    poset->add_option("--format", cfg.format, "json")->check(CLI::IsMember({"json"}));
    poset->add_flag("--edges", cfg.edges, "include covering relations");
    poset->add_flag("--no-edges", cfg.no_edges, "omit covering relations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (build->parsed()) {
            if (cfg.format.empty()) cfg.format = "json";
            return cmd_build(cfg, out);
        }
        if (fvector->parsed()) {
            if (cfg.format.empty()) cfg.format = "table";
            return cmd_fvector(cfg, out);
        }
        if (verify->parsed()) {
            if (cfg.format.empty()) cfg.format = "table";
            return cmd_verify(cfg, out);
        }
        if (exporter->parsed()) {
            if (cfg.format.empty()) cfg.format = "json";
            return cmd_export(cfg, out);
        }
        if (cfg.format.empty()) cfg.format = "json";
        return cmd_poset(cfg, out);
    } catch (const UsageError& e) {
        err << "pnh: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        const int code = exit_code_for(e);
        err << "pnh: " << (code == kExitVerificationFailed ? "verification failed: " : "") << e.what() << '\n';
        return code;
    }
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace pnh::cli

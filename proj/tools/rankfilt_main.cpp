// Command line front end: one subcommand per operation, machine-readable
// output on stdout (JSON unless a command is documented as CSV), errors as
// single-line JSON on stderr. Exit codes: 0 ok, 1 bad input, 2 budget refusal.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "rankfilt/building.hpp"
#include "rankfilt/cbc.hpp"
#include "rankfilt/cubical.hpp"
#include "rankfilt/errors.hpp"
#include "rankfilt/milnor.hpp"
#include "rankfilt/parallel.hpp"
#include "rankfilt/rankchart.hpp"
#include "rankfilt/simplicial.hpp"
#include "rankfilt/subspace.hpp"

using json = nlohmann::ordered_json;
using namespace rankfilt;

namespace {

const long long kJsonIntMax = 1LL << 53;

json count_json(const BigInt& v) {
    if (v <= kJsonIntMax && v >= -kJsonIntMax) return to_int64_checked(v);
    return v.str();
}

json torsion_json(const std::vector<BigInt>& torsion) {
    json arr = json::array();
    for (const BigInt& d : torsion) arr.push_back(count_json(d));
    return arr;
}

json group_json(const AbelianGroup& g) {
    json o;
    o["betti"] = g.rank;
    o["torsion"] = torsion_json(g.torsion);
    return o;
}

json homology_json(const HomologyResult& h) {
    json o = json::object();
    for (const auto& [k, g] : h.groups) o[std::to_string(k)] = group_json(g);
    return o;
}

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

void export_complex(const SimplicialComplex& c, const std::vector<Subspace>& registry,
                    const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ValidationError("io", "cannot open export path " + path);
    write_scx(c, os);
    json reg = json::object();
    for (size_t i = 0; i < registry.size(); ++i) reg[std::to_string(i)] = registry[i].basis_digit_strings();
    std::ofstream rs(path + ".registry.json", std::ios::binary);
    if (!rs) throw ValidationError("io", "cannot open registry path " + path + ".registry.json");
    rs << reg.dump(2) << "\n";
}

CubicalDiagram load_diagram(const FqField& f, int r, int n, int deg, const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ValidationError("io", "cannot open diagram file " + path);
    json spec_json;
    try {
        is >> spec_json;
    } catch (const json::exception& e) {
        throw ValidationError("parse", "diagram file is not valid JSON", e.what());
    }
    if (!spec_json.is_object()) throw ValidationError("parse", "diagram file must be a JSON object");

    size_t npoints = 1;
    for (int i = 0; i < n; ++i) npoints *= static_cast<size_t>(deg) + 1;
    std::vector<Subspace> values(npoints, Subspace::zero(f, r));
    CubicalDiagram shape = CubicalDiagram::make(f, r, n, deg, values);

    for (const auto& [key, rows] : spec_json.items()) {
        std::vector<int> point;
        std::stringstream ks(key);
        std::string part;
        while (std::getline(ks, part, ',')) point.push_back(std::stoi(part));
        if (static_cast<int>(point.size()) != n)
            throw ValidationError("parse", "diagram key '" + key + "' has wrong arity");
        if (!rows.is_array()) throw ValidationError("parse", "diagram value for '" + key + "' must be an array");
        std::vector<std::vector<uint8_t>> vecs;
        for (const auto& row : rows) {
            if (!row.is_string()) throw ValidationError("parse", "basis rows must be digit strings");
            std::string s = row.get<std::string>();
            if (static_cast<int>(s.size()) != r)
                throw ValidationError("parse", "basis row '" + s + "' has length != r");
            std::vector<uint8_t> v(r);
            for (int i = 0; i < r; ++i) v[i] = f.parse_digit(s[i]);
            vecs.push_back(std::move(v));
        }
        shape.values[shape.index_of(point)] = span_of(f, r, vecs);
    }
    return shape;
}

std::string point_key(const std::vector<int>& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s;
}

int run(int argc, char** argv) {
    CLI::App app{"exact combinatorial homology over small finite fields"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    unsigned threads = 0;
    bool big = false;
    long long budget_facets = 5000000, budget_degree = 200000;
    app.add_option("--threads", threads, "cap worker parallelism (0 = auto)");
    app.add_flag("--big", big, "allow stretch-size common basis complexes");
    app.add_option("--budget-facets", budget_facets, "override the facet generation budget");
    app.add_option("--budget-degree", budget_degree, "override the per-degree simplex budget");

    int p = 0, k = 1, q = 0, r = 0, dim = -1, n = 0, deg = 0, j = 0, wmax = 0;
    std::string export_path, in_path, diagram_path;
    bool reduced = false;

    auto* c_field = app.add_subcommand("field-table", "print add/mul tables as CSV");
    c_field->add_option("--p", p)->required();
    c_field->add_option("--k", k);

    auto* c_sub = app.add_subcommand("subspaces", "list subspaces as JSON basis matrices");
    c_sub->add_option("--q", q)->required();
    c_sub->add_option("--r", r)->required();
    c_sub->add_option("--dim", dim);

    auto* c_gl = app.add_subcommand("gl-order", "order of GL_r(F_q)");
    c_gl->add_option("--q", q)->required();
    c_gl->add_option("--r", r)->required();

    auto* c_building = app.add_subcommand("building", "construct the subspace order complex");
    c_building->add_option("--q", q)->required();
    c_building->add_option("--r", r)->required();
    c_building->add_option("--export", export_path);

    auto* c_st = app.add_subcommand("steinberg", "top homology report of the subspace order complex");
    c_st->add_option("--q", q)->required();
    c_st->add_option("--r", r)->required();

    auto* c_cbc = app.add_subcommand("cbc", "construct the common basis complex");
    c_cbc->add_option("--q", q)->required();
    c_cbc->add_option("--r", r)->required();
    c_cbc->add_option("--export", export_path);

    auto* c_delta = app.add_subcommand("delta", "homology of the common basis complex in degree 2r-3");
    c_delta->add_option("--q", q)->required();
    c_delta->add_option("--r", r)->required();

    auto* c_conn = app.add_subcommand("connectivity", "per-degree homology of the common basis complex");
    c_conn->add_option("--q", q)->required();
    c_conn->add_option("--r", r)->required();

    auto* c_jump = app.add_subcommand("rankjump", "rank jumps and component count of a cubical diagram");
    c_jump->add_option("--q-field", q)->required();
    c_jump->add_option("--r", r)->required();
    c_jump->add_option("--n", n)->required();
    c_jump->add_option("--deg", deg)->required();
    c_jump->add_option("--diagram", diagram_path)->required();

    auto* c_census = app.add_subcommand("filtration-census", "histogram of component counts (CSV)");
    c_census->add_option("--q-field", q)->required();
    c_census->add_option("--r", r)->required();
    c_census->add_option("--n", n)->required();
    c_census->add_option("--deg", deg)->required();

    auto* c_milnor = app.add_subcommand("milnor", "degree-j Milnor K group");
    c_milnor->add_option("--q", q)->required();
    c_milnor->add_option("--j", j)->required();

    auto* c_coinv = app.add_subcommand("coinvariants", "GL coinvariants of the degree-(2r-3) homology");
    c_coinv->add_option("--q", q)->required();
    c_coinv->add_option("--r", r)->required();

    auto* c_table = app.add_subcommand("ranktable", "computable corner of the first-page rank chart");
    c_table->add_option("--q", q)->required();
    c_table->add_option("--wmax", wmax)->required();

    auto* c_hom = app.add_subcommand("homology", "homology of an scx complex");
    c_hom->add_option("--in", in_path)->required();
    c_hom->add_flag("--reduced", reduced);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        json err{{"code", "usage"}, {"message", e.what()}, {"detail", ""}};
        std::cerr << err.dump() << "\n";
        return 1;
    }

    worker_thread_cap() = threads;
    CbcOptions cbc_opts;
    cbc_opts.big = big;
    cbc_opts.facet_budget = budget_facets;
    cbc_opts.degree_budget = budget_degree;

    try {
        if (*c_field) {
            const FqField& F = FqField::get(p, k);
            std::ostringstream os;
            for (const char* table : {"add", "mul"}) {
                for (int a = 0; a < F.q; ++a) {
                    os << table << "," << a;
                    for (int b = 0; b < F.q; ++b)
                        os << ","
                           << static_cast<int>(table[0] == 'a' ? F.add(static_cast<uint8_t>(a), static_cast<uint8_t>(b))
                                                               : F.mul(static_cast<uint8_t>(a), static_cast<uint8_t>(b)));
                    os << "\n";
                }
            }
            std::cout << os.str();
        } else if (*c_sub) {
            const FqField& F = FqField::get_order(q);
            if (r < 1) throw ValidationError("usage", "r must be >= 1");
            std::vector<Subspace> list;
            if (c_sub->count("--dim")) {
                list = enumerate_subspaces(F, r, dim);
            } else {
                for (int d = 0; d <= r; ++d) {
                    auto part = enumerate_subspaces(F, r, d);
                    list.insert(list.end(), part.begin(), part.end());
                }
            }
            json arr = json::array();
            for (const auto& s : list) arr.push_back(s.basis_digit_strings());
            emit(arr);
        } else if (*c_gl) {
            FqField::get_order(q);
            if (r < 1) throw ValidationError("usage", "r must be >= 1");
            emit(count_json(gl_order(q, r)));
        } else if (*c_building) {
            const FqField& F = FqField::get_order(q);
            auto registry = r >= 2 ? building_vertex_registry(F, r) : std::vector<Subspace>{};
            SimplicialComplex c = tits_building(F, r, budget_degree);
            if (!export_path.empty()) export_complex(c, registry, export_path);
            json o;
            o["q"] = q;
            o["r"] = r;
            o["num_vertices"] = c.num_vertices;
            o["num_facets"] = static_cast<long long>(c.facets.size());
            o["dimension"] = c.dimension();
            if (!export_path.empty()) o["export"] = export_path;
            emit(o);
        } else if (*c_st) {
            const FqField& F = FqField::get_order(q);
            BuildingReport rep = solomon_tits_report(F, r, budget_degree);
            json o;
            o["rank"] = count_json(rep.steinberg_rank);
            o["concentrated"] = rep.concentrated;
            o["free"] = rep.free_part;
            emit(o);
        } else if (*c_cbc) {
            const FqField& F = FqField::get_order(q);
            CbcReport rep = common_basis_complex(F, r, cbc_opts);
            if (!export_path.empty()) export_complex(rep.complex, rep.registry, export_path);
            json o;
            o["q"] = q;
            o["r"] = r;
            o["num_vertices"] = rep.complex.num_vertices;
            o["num_facets"] = static_cast<long long>(rep.complex.facets.size());
            o["dimension"] = rep.complex.dimension();
            if (!export_path.empty()) o["export"] = export_path;
            emit(o);
        } else if (*c_delta) {
            const FqField& F = FqField::get_order(q);
            CbcReport rep = delta(F, r, cbc_opts);
            json o;
            o["rank"] = count_json(rep.delta_rank);
            o["torsion"] = torsion_json(rep.delta_torsion);
            o["concentrated"] = rep.concentrated;
            emit(o);
        } else if (*c_conn) {
            const FqField& F = FqField::get_order(q);
            ConnectivityReport rep = verify_connectivity(F, r, cbc_opts);
            json o;
            o["concentrated"] = rep.concentrated;
            o["degrees_with_homology"] = rep.degrees_with_homology;
            o["homology"] = homology_json(rep.homology);
            emit(o);
        } else if (*c_jump) {
            const FqField& F = FqField::get_order(q);
            CubicalDiagram d = load_diagram(F, r, n, deg, diagram_path);
            LatticeCheck chk = check_lattice_conditions(d);
            if (!chk.ok) throw ValidationError("lattice", "lattice conditions fail", chk.diagnostic);
            json jumps = json::object();
            for (size_t idx = 0; idx < d.num_points(); ++idx) {
                auto pt = d.point_of(idx);
                jumps[point_key(pt)] = rank_jump(d, pt);
            }
            DistinguishedPoints pts = distinguished_points(d);
            json dist = json::array();
            for (const auto& [pt, mult] : pts.points)
                dist.push_back(json{{"point", point_key(pt)}, {"multiplicity", mult}});
            json o;
            o["lattice_ok"] = true;
            o["jumps"] = jumps;
            o["distinguished"] = dist;
            o["c"] = component_count(d);
            emit(o);
        } else if (*c_census) {
            const FqField& F = FqField::get_order(q);
            auto hist = component_census(F, r, n, deg);
            std::ostringstream os;
            os << "c,count\n";
            for (const auto& [c, cnt] : hist) os << c << "," << cnt << "\n";
            std::cout << os.str();
        } else if (*c_milnor) {
            const FqField& F = FqField::get_order(q);
            AbelianGroup g = milnor_k(F, j);
            emit(group_json(g));
        } else if (*c_coinv) {
            const FqField& F = FqField::get_order(q);
            CoinvariantsResult res = coinvariants_delta(F, r);
            json o;
            o["q"] = q;
            o["r"] = r;
            o["delta_rank"] = res.delta_rank;
            o["betti"] = res.group.rank;
            o["torsion"] = torsion_json(res.group.torsion);
            o["torsion_flag"] = res.torsion_flag;
            emit(o);
        } else if (*c_table) {
            const FqField& F = FqField::get_order(q);
            RankTable table = rank_complex_table(F, wmax);
            json entries = json::array();
            for (const auto& e : table.entries) {
                json o;
                o["s"] = e.s;
                o["t"] = e.t;
                switch (e.kind) {
                    case ChartKind::Group: o["kind"] = "group"; break;
                    case ChartKind::ZeroByConnectivity: o["kind"] = "zero-by-connectivity"; break;
                    case ChartKind::NotComputed: o["kind"] = "not-computed"; break;
                }
                if (e.kind == ChartKind::Group) {
                    o["betti"] = e.value.rank;
                    o["torsion"] = torsion_json(e.value.torsion);
                }
                o["provenance"] = e.provenance;
                entries.push_back(std::move(o));
            }
            json o;
            o["q"] = q;
            o["wmax"] = wmax;
            o["entries"] = entries;
            emit(o);
        } else if (*c_hom) {
            std::ifstream is(in_path, std::ios::binary);
            if (!is) throw ValidationError("io", "cannot open " + in_path);
            SimplicialComplex c = read_scx(is);
            emit(homology_json(homology(c, reduced)));
        }
    } catch (const ValidationError& e) {
        json err{{"code", e.code}, {"message", e.what()}, {"detail", e.detail}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const BudgetError& e) {
        json err{{"code", e.code}, {"message", e.what()}, {"detail", e.detail}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err{{"code", "internal"}, {"message", e.what()}, {"detail", ""}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }

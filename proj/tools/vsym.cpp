// Command-line front-end: Groebner bases, unimodularity certificates,
// Vaserstein symbols, the quadric morphisms, and the numeric Hopf invariant.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vsym/acceptance.hpp"
#include "vsym/io.hpp"
#include "vsym/realize.hpp"
#include "vsym/spheres.hpp"

using nlohmann::json;
using namespace vsym;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

constexpr const char* kSchemaVersion = "1";

Vec3 parse_vec3(const std::string& s) {
    Vec3 v{};
    std::istringstream in(s);
    char comma;
    if (!(in >> v[0] >> comma >> v[1] >> comma >> v[2]))
        throw std::runtime_error("expected three comma-separated numbers: " + s);
    return v;
}

NumericMap load_numeric_map(const std::string& path) {
    json j = io::load_json(path);
    VarListPtr vars = make_vars(j.at("vars").get<std::vector<std::string>>());
    std::vector<Polynomial> comps;
    for (const auto& c : j.at("components"))
        comps.push_back(poly_parse(c.get<std::string>(), vars));
    return NumericMap::from_polys(std::move(comps), vars->size());
}

int cmd_gb(const std::string& ring_path, bool as_json) {
    RingPtr ring = io::load_ring(ring_path);
    if (as_json) {
        json out;
        out["schema"] = kSchemaVersion;
        out["order"] = io::order_name(ring->order());
        out["trivial"] = ring->is_trivial();
        out["basis"] = json::array();
        for (const auto& g : ring->gb().generators) out["basis"].push_back(g.str(ring->order()));
        std::cout << out.dump(2) << "\n";
    } else {
        if (ring->is_trivial()) std::cout << "warning: trivial ring (1 lies in the ideal)\n";
        for (const auto& g : ring->gb().generators) std::cout << g.str(ring->order()) << "\n";
    }
    return kExitOk;
}

int cmd_nf(const std::string& ring_path, const std::string& poly_text, bool as_json) {
    RingPtr ring = io::load_ring(ring_path);
    RingElement e = elem(ring, poly_text);
    if (as_json) {
        json out{{"schema", kSchemaVersion}, {"normal_form", e.str()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << e.str() << "\n";
    }
    return kExitOk;
}

int cmd_certify(const std::string& row_path, bool as_json) {
    io::RowFile rf = io::load_row(row_path);
    try {
        UnimodularRow row = row_make(rf.ring, rf.entries, rf.certificate);
        if (as_json) {
            json out = io::row_to_json(row);
            out["schema"] = kSchemaVersion;
            out["unimodular"] = true;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "UNIMODULAR\ncertificate:";
            for (const auto& c : row.certificate) std::cout << " " << c.str();
            std::cout << "\n";
        }
        return kExitOk;
    } catch (const NotUnimodular&) {
        if (as_json) {
            json out{{"schema", kSchemaVersion}, {"unimodular", false}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "NOT-UNIMODULAR\n";
        }
        return kExitVerifyFail;
    }
}

int cmd_vsymbol(const std::string& row_path, bool as_json) {
    io::RowFile rf = io::load_row(row_path);
    UnimodularRow row = row_make(rf.ring, rf.entries, rf.certificate);
    WittRep w = vaserstein_symbol(row);
    if (as_json) {
        json out{{"schema", kSchemaVersion},
                 {"matrix", io::matrix_to_json(w.matrix)},
                 {"pfaffian", w.pf.str()}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j)
                std::cout << (j ? "  " : "") << w.matrix.at(i, j).str();
            std::cout << "\n";
        }
        std::cout << "Pfaffian: " << w.pf.str() << "\n";
    }
    return kExitOk;
}

int cmd_pfaffian(const std::string& matrix_path, bool as_json) {
    SkewMatrix m = io::load_matrix(matrix_path);
    RingElement pf = pfaffian(m);
    if (as_json) {
        json out{{"schema", kSchemaVersion}, {"pfaffian", pf.str()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << pf.str() << "\n";
    }
    return kExitOk;
}

int cmd_map(const std::string& name, const std::string& row_path, bool as_json) {
    io::RowFile rf = io::load_row(row_path);
    json out{{"schema", kSchemaVersion}, {"map", name}};

    auto print_elems = [&](const std::vector<RingElement>& es, const char* label) {
        if (as_json) {
            out[label] = json::array();
            for (const auto& e : es) out[label].push_back(e.str());
        } else {
            std::cout << label << ":";
            for (const auto& e : es) std::cout << " " << e.str();
            std::cout << "\n";
        }
    };

    if (name == "f") {
        UnimodularRow row = row_make(rf.ring, rf.entries, rf.certificate);
        print_elems(map_f(row), "image");
    } else if (name == "H" || name == "alpha" || name == "alpha-symmetric") {
        UnimodularRow row = row_make(rf.ring, rf.entries, rf.certificate);
        UnimodularRow img = (name == "H") ? compose_H(row)
                                          : map_alpha(row, name == "alpha-symmetric");
        print_elems(img.entries, "image");
        print_elems(img.certificate, "certificate");
    } else if (name == "h") {
        UnimodularRow img = map_h(rf.ring);
        print_elems(img.entries, "image");
        print_elems(img.certificate, "certificate");
    } else if (name == "g") {
        // row file carries the 5-component Q4 point; alpha = -1 (the [-1] substitution)
        if (rf.entries.size() != 5)
            throw std::runtime_error("map g expects a 5-component point in the row file");
        print_elems(map_g(rf.entries, elem(rf.ring, Rational(-1))), "image");
    } else {
        throw std::runtime_error("unknown map: " + name +
                                 " (expected f, g, H, h, alpha, alpha-symmetric)");
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(bool as_json) {
    struct Check {
        const char* name;
        bool (*fn)();
    };
    const Check checks[] = {
        {"f-membership", verify_f_membership},
        {"f-matrix-agreement", verify_f_matrix_agreement},
        {"proposition-formula", verify_proposition_formula},
        {"hopf-norm-identity", verify_hopf_norm_identity},
        {"minus-one-naturality", verify_minus_one_naturality},
    };
    bool all = true;
    json out{{"schema", kSchemaVersion}, {"checks", json::array()}};
    for (const auto& c : checks) {
        bool ok = c.fn();
        all = all && ok;
        if (as_json)
            out["checks"].push_back({{"name", c.name}, {"pass", ok}});
        else
            std::cout << (ok ? "PASS" : "FAIL") << " " << c.name << "\n";
    }
    if (as_json) {
        out["pass"] = all;
        std::cout << out.dump(2) << "\n";
    }
    return all ? kExitOk : kExitVerifyFail;
}

int cmd_hopf(const std::string& map_path, const std::string& v1s, const std::string& v2s,
             std::size_t grid, bool as_json) {
    NumericMap map = load_numeric_map(map_path);
    HopfResult r = hopf_invariant(map, parse_vec3(v1s), parse_vec3(v2s), grid);
    json out{{"schema", kSchemaVersion}, {"linking", r.linking}, {"residual", r.residual}};
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "linking " << r.linking << " (residual " << r.residual << ", grid "
                  << r.grid_used << ")\n";
    }
    return kExitOk;
}

int cmd_suite() {
    auto results = accept::run_acceptance_suite();
    std::cout << "TAP version 13\n1.." << results.size() << "\n";
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        std::cout << (r.pass ? "ok " : "not ok ") << r.id << " - " << r.name << " # "
                  << r.detail << " (" << r.seconds << "s)\n";
    }
    return all ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unimodular rows, Vaserstein symbols, and the Hopf map over presented Q-algebras"};
    app.require_subcommand(1);
    app.fallthrough();  // let --json appear after the subcommand
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of plain text");

    std::string ring_path, row_path, matrix_path, map_path, poly_text, map_name;
    std::string v1 = "0,0,1", v2 = "0,0,-1";
    std::size_t grid = 64;

    auto* gb = app.add_subcommand("gb", "print the reduced Groebner basis of a ring file");
    gb->add_option("--ring", ring_path, "ring presentation JSON")->required();

    auto* nf = app.add_subcommand("nf", "normal form of a polynomial in a ring");
    nf->add_option("--ring", ring_path)->required();
    nf->add_option("--poly", poly_text, "polynomial expression")->required();

    auto* certify = app.add_subcommand("certify", "certify or refute unimodularity of a row");
    certify->add_option("--row", row_path, "row JSON")->required();

    auto* vsymbol = app.add_subcommand("vsymbol", "Vaserstein symbol of a length-3 row");
    vsymbol->add_option("--row", row_path)->required();

    auto* pf = app.add_subcommand("pfaffian", "Pfaffian of a skew matrix file");
    pf->add_option("--matrix", matrix_path)->required();

    auto* mp = app.add_subcommand("map", "apply one of the quadric morphisms");
    mp->add_option("--name", map_name, "f, g, H, h, alpha, alpha-symmetric")->required();
    mp->add_option("--row", row_path)->required();

    auto* verify = app.add_subcommand("verify", "run the symbolic identity battery");

    auto* hopf = app.add_subcommand("hopf", "numeric Hopf invariant of a map S^3 -> S^2");
    hopf->add_option("--map", map_path, "map JSON with vars and components")->required();
    hopf->add_option("--v1", v1, "first regular value, e.g. 0,0,1");
    hopf->add_option("--v2", v2, "second regular value");
    hopf->add_option("--grid", grid, "tracing resolution");

    auto* suite = app.add_subcommand("suite", "run the full acceptance battery (TAP output)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gb->parsed()) return cmd_gb(ring_path, as_json);
        if (nf->parsed()) return cmd_nf(ring_path, poly_text, as_json);
        if (certify->parsed()) return cmd_certify(row_path, as_json);
        if (vsymbol->parsed()) return cmd_vsymbol(row_path, as_json);
        if (pf->parsed()) return cmd_pfaffian(matrix_path, as_json);
        if (mp->parsed()) return cmd_map(map_name, row_path, as_json);
        if (verify->parsed()) return cmd_verify(as_json);
        if (hopf->parsed()) return cmd_hopf(map_path, v1, v2, grid, as_json);
        if (suite->parsed()) return cmd_suite();
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}

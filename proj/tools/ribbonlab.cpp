// ribbonlab: compute ribbon-function objects and verify the identity suite.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ribbon/domino.hpp"
#include "ribbon/verify.hpp"

using json = nlohmann::ordered_json;
using namespace ribbon;

namespace {

json poly_json(const LaurentPoly& p) {
    json out = json::object();
    for (auto& [e, c] : p.terms()) out[std::to_string(e)] = c.str();
    return out;
}

json symfunc_json(const SymFunc& f) {
    json coeffs = json::array();
    for (auto& [part, poly] : f.coeffs())
        coeffs.push_back({{"part", part.str()}, {"poly", poly_json(poly)}});
    return {{"basis", basis_name(f.basis())}, {"coeffs", coeffs}};
}

json table_json(const std::map<Partition, LaurentPoly>& table) {
    json out = json::array();
    for (auto& [part, poly] : table)
        out.push_back({{"part", part.str()}, {"poly", poly_json(poly)}});
    return out;
}

std::string table_pretty(const std::map<Partition, LaurentPoly>& table) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto& [part, poly] : table) {
        if (!first) os << ",";
        os << "(" << part.str() << "):" << poly.str();
        first = false;
    }
    os << "}";
    return os.str();
}

json fock_json(const FockVector& v) {
    json entries = json::array();
    for (auto& [part, poly] : v.entries)
        entries.push_back({{"part", part.str()}, {"poly", poly_json(poly)}});
    return {{"n", v.n}, {"entries", entries}};
}

json ribbon_tableau_json(const RibbonTableau& t) {
    json chain = json::array();
    for (auto& p : t.chain) chain.push_back(p.str());
    return {{"chain", chain}, {"spin", t.spin}, {"weight", t.weight}};
}

// chain of shapes after each label, mirroring the ribbon tableau form
json domino_tableau_json(const DominoTableau& t) {
    json chain = json::array();
    chain.push_back(t.core.str());
    int maxlabel = 0;
    for (auto& d : t.dominoes) maxlabel = std::max(maxlabel, d.label);
    std::vector<Cell> cells;
    for (int label = 1; label <= maxlabel; ++label) {
        for (auto& d : t.dominoes)
            if (d.label == label) {
                cells.push_back(d.a);
                cells.push_back(d.b);
            }
        auto shape = ribbon::detail::cells_to_shape(t.core, cells);
        chain.push_back(shape ? shape->str() : std::string("?"));
    }
    return {{"chain", chain}, {"spin", t.spin()}, {"weight", t.weight()}};
}

std::string paren(const Partition& p) { return "(" + p.str() + ")"; }

SkewShape shape_from(const std::string& shape, const std::string& outer,
                     const std::string& inner) {
    if (!outer.empty() || !inner.empty())
        return SkewShape(Partition::parse(outer), Partition::parse(inner));
    return SkewShape::parse(shape);
}

Composition parse_composition(const std::string& s) {
    Composition out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

ColoredBiword read_biword(std::istream& in) {
    ColoredBiword w;
    std::string line;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        BiLetter letter;
        if (ss >> letter.c >> letter.i >> letter.j) {
            if (letter.c != 0 && letter.c != 1)
                throw std::invalid_argument("color must be 0 or 1");
            if (letter.i < 1 || letter.j < 1)
                throw std::invalid_argument("biword letters must be positive");
            w.push_back(letter);
        } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
            throw std::invalid_argument("malformed biword line: " + line);
        }
    }
    return w;
}

json report_json(const VerifyReport& rep) {
    json cells = json::array();
    for (auto& c : rep.cells)
        cells.push_back({{"params", c.params}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"identity", rep.identity},
            {"all_pass", rep.all_pass()},
            {"wall_ms", rep.wall_ms},
            {"cells", cells}};
}

void print_report(const VerifyReport& rep, const std::string& format) {
    if (format == "json") {
        std::cout << report_json(rep).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "identity,params,pass,detail\n";
        for (auto& c : rep.cells) {
            std::string detail = c.detail;
            for (auto& ch : detail)
                if (ch == ',') ch = ';';
            std::cout << rep.identity << "," << c.params << "," << (c.pass ? "1" : "0") << ","
                      << detail << "\n";
        }
    } else {
        int failed = 0;
        for (auto& c : rep.cells) {
            if (c.pass) continue;
            failed++;
            std::cout << "FAIL " << c.params << " : " << c.detail << "\n";
        }
        std::cout << rep.identity << ": " << (rep.cells.size() - failed) << "/" << rep.cells.size()
                  << " cells pass (" << rep.wall_ms << " ms)\n";
    }
}

struct ComputeArgs {
    std::string object;
    std::string shape, outer, inner;
    int n = 2;
    std::string basis = "schur";
    std::string type;
    int labels = -1;
    std::string op, param, start;
    int i = 0, k = 1;
    std::string input, core;
    std::string format = "pretty";
};

int run_compute(const ComputeArgs& a) {
    if (a.object == "core") {
        Partition c = n_core(Partition::parse(a.shape), a.n);
        if (a.format == "json")
            std::cout << json{{"core", c.str()}}.dump() << "\n";
        else
            std::cout << paren(c) << "\n";
    } else if (a.object == "quotient") {
        auto q = n_quotient(Partition::parse(a.shape), a.n);
        if (a.format == "json") {
            json parts = json::array();
            for (auto& p : q) parts.push_back(p.str());
            std::cout << json{{"quotient", parts}}.dump() << "\n";
        } else {
            std::cout << "[";
            for (size_t t = 0; t < q.size(); ++t) std::cout << (t ? "," : "") << paren(q[t]);
            std::cout << "]\n";
        }
    } else if (a.object == "tableaux") {
        SkewShape shape = shape_from(a.shape, a.outer, a.inner);
        int labels = a.labels > 0 ? a.labels : shape.size() / a.n;
        auto ts = enumerate_tableaux(shape, a.n, labels);
        if (a.format == "json") {
            json out = json::array();
            for (auto& t : ts) out.push_back(ribbon_tableau_json(t));
            std::cout << out.dump(2) << "\n";
        } else {
            for (auto& t : ts) {
                std::cout << "chain=";
                for (size_t s = 0; s < t.chain.size(); ++s)
                    std::cout << (s ? "<" : "") << paren(t.chain[s]);
                std::cout << " weight=[";
                for (size_t s = 0; s < t.weight.size(); ++s)
                    std::cout << (s ? "," : "") << t.weight[s];
                std::cout << "] spin=" << t.spin << "\n";
            }
            std::cout << ts.size() << " tableaux\n";
        }
    } else if (a.object == "G") {
        SkewShape shape = shape_from(a.shape, a.outer, a.inner);
        SymFunc f = convert(G(shape, a.n), parse_basis(a.basis));
        if (a.format == "json")
            std::cout << symfunc_json(f).dump(2) << "\n";
        else if (a.format == "csv") {
            std::cout << "part,poly\n";
            for (auto& [part, poly] : f.coeffs())
                std::cout << part.str() << "," << poly.str() << "\n";
        } else
            std::cout << table_pretty(f.coeffs()) << "\n";
    } else if (a.object == "qlr") {
        SkewShape shape = shape_from(a.shape, a.outer, a.inner);
        auto table = q_lr(shape, a.n);
        if (a.format == "json")
            std::cout << table_json(table).dump(2) << "\n";
        else if (a.format == "csv") {
            std::cout << "part,poly\n";
            for (auto& [part, poly] : table)
                std::cout << part.str() << "," << poly.str() << "\n";
        } else
            std::cout << table_pretty(table) << "\n";
    } else if (a.object == "X") {
        SkewShape shape = shape_from(a.shape, a.outer, a.inner);
        Composition type = parse_composition(a.type);
        LaurentPoly x = X_poly(shape, a.n, type);
        if (a.format == "json")
            std::cout << poly_json(x).dump() << "\n";
        else
            std::cout << x.str() << "\n";
    } else if (a.object == "fock-op") {
        FockVector v = FockVector::basis(a.n, Partition::parse(a.start));
        FockVector out(a.n);
        if (a.op == "f")
            out = apply_f(v, a.i);
        else if (a.op == "e")
            out = apply_e(v, a.i);
        else if (a.op == "qh")
            out = apply_qh(v, a.i);
        else if (a.op == "qD")
            out = apply_qD(v);
        else if (a.op == "V")
            out = apply_V(v, a.k);
        else if (a.op == "U")
            out = apply_U(v, a.k);
        else if (a.op == "Vt")
            out = apply_Vtilde(v, a.k);
        else if (a.op == "Ut")
            out = apply_Utilde(v, a.k);
        else if (a.op == "B")
            out = apply_B(v, a.k);
        else if (a.op == "S")
            out = apply_S(v, Partition::parse(a.param));
        else
            throw std::invalid_argument("unknown operator: " + a.op);
        if (a.format == "json")
            std::cout << fock_json(out).dump(2) << "\n";
        else
            std::cout << out.str() << "\n";
    } else if (a.object == "domino-rsk") {
        ColoredBiword w;
        if (a.input.empty()) {
            w = read_biword(std::cin);
        } else {
            std::ifstream in(a.input);
            if (!in) throw std::invalid_argument("cannot open input file: " + a.input);
            w = read_biword(in);
        }
        auto [p, q] = rsk(w, Partition::parse(a.core));
        if (a.format == "json") {
            json out = {{"P", domino_tableau_json(p)},
                        {"Q", domino_tableau_json(q)},
                        {"tc", tc(w)}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "P: shape=" << paren(p.shape()) << " spin=" << p.spin() << "\n";
            std::cout << "Q: shape=" << paren(q.shape()) << " spin=" << q.spin() << "\n";
            std::cout << "tc=" << tc(w) << "\n";
        }
    } else {
        throw std::invalid_argument("unknown compute object: " + a.object);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with ribbon symmetric functions"};
    app.require_subcommand(1);

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "compute a single object");
    compute->add_option("object", ca.object,
                        "one of: core quotient tableaux G qlr X fock-op domino-rsk")
        ->required();
    compute->add_option("--shape", ca.shape, "partition or skew shape outer/inner");
    compute->add_option("--outer", ca.outer, "outer partition");
    compute->add_option("--inner", ca.inner, "inner partition");
    compute->add_option("--n", ca.n, "ribbon size");
    compute->add_option("--basis", ca.basis, "output basis for G");
    compute->add_option("--type", ca.type, "composition for X, e.g. 5 or 2,1");
    compute->add_option("--labels", ca.labels, "max label for tableaux");
    compute->add_option("--op", ca.op, "fock operator: f e qh qD V U Vt Ut B S");
    compute->add_option("--i", ca.i, "residue index for f/e/qh");
    compute->add_option("--k", ca.k, "operator degree for V/U/Vt/Ut/B");
    compute->add_option("--param", ca.param, "partition parameter for S");
    compute->add_option("--start", ca.start, "starting basis partition for fock-op");
    compute->add_option("--input", ca.input, "biword file (lines 'c i j'); stdin if absent");
    compute->add_option("--core", ca.core, "2-core for domino-rsk");
    compute->add_option("--format", ca.format, "json|csv|pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));

    std::string identity, nu_str, core_str;
    VerifyGrid grid;
    int n_flag = 0, k_flag = 0;
    std::string format = "pretty";
    auto* verify = app.add_subcommand("verify", "check an identity over a parameter grid");
    verify->add_option("identity", identity, "identity name")->required();
    auto* n_opt = verify->add_option("--n", n_flag, "restrict to one ribbon size");
    auto* nu_opt = verify->add_option("--nu", nu_str, "restrict to one partition");
    auto* k_opt = verify->add_option("--k", k_flag, "restrict to one k");
    verify->add_option("--kmax", grid.kmax, "largest k in the sweep");
    verify->add_option("--sizemax", grid.sizemax, "largest partition size in the sweep");
    verify->add_option("--lammax", grid.lammax, "largest |lambda| for LR-type sweeps");
    verify->add_option("--degree", grid.degree, "truncation degree for Cauchy kernels");
    verify->add_option("--vars", grid.vars, "variables per alphabet");
    auto* core_opt = verify->add_option("--core", core_str, "fixed core for core-class sweeps");
    verify->add_option("--format", format, "json|csv|pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    // RIBBONLAB_THREADS caps worker parallelism; execution is sequential, which
    // respects any positive cap
    if (const char* t = std::getenv("RIBBONLAB_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(t, &end, 10);
        if (end == t || v < 1) {
            std::cerr << "error: RIBBONLAB_THREADS must be a positive integer\n";
            return 2;
        }
    }

    try {
        if (compute->parsed()) return run_compute(ca);

        auto& registry = verify_registry();
        auto it = registry.find(identity);
        if (it == registry.end())
            throw std::invalid_argument("unknown identity: " + identity);
        if (n_opt->count()) grid.ns = {n_flag};
        if (nu_opt->count()) grid.nu = Partition::parse(nu_str);
        if (k_opt->count()) grid.k = k_flag;
        if (core_opt->count()) grid.cores = {Partition::parse(core_str)};
        VerifyReport rep = it->second(grid);
        print_report(rep, format);
        return rep.all_pass() ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

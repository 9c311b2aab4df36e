#include "fano/classify.hpp"
#include "fano/params.hpp"
#include "fano/patterns.hpp"
#include "fano/planefile.hpp"
#include "fano/schubert.hpp"
#include "fano/symalg.hpp"
#include "fano/tangent.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "fano 1.0.0";

std::string compress_list(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size();) {
        std::size_t j = i;
        while (j + 1 < values.size() && values[j + 1] == values[j] + 1) ++j;
        if (!out.empty()) out += ",";
        if (j == i)
            out += std::to_string(values[i]);
        else if (j == i + 1)
            out += std::to_string(values[i]) + "," + std::to_string(values[j]);
        else
            out += std::to_string(values[i]) + "-" + std::to_string(values[j]);
        i = j + 1;
    }
    return out;
}

struct TableCells {
    int connected_prefix = 0;          // largest A with k <= A all Connected
    std::vector<int> connected_extra;  // Connected cells beyond the prefix
    std::vector<int> disconnected;
    std::vector<int> unknown;
};

TableCells split_cells(const fano::TableRow& row) {
    TableCells cells;
    int a = 0;
    while (a < row.nonempty_max_k && row.connected[a] == fano::TriState::Connected) ++a;
    cells.connected_prefix = a;
    for (int k = a + 1; k <= row.nonempty_max_k; ++k) {
        switch (row.connected[k - 1]) {
            case fano::TriState::Connected: cells.connected_extra.push_back(k); break;
            case fano::TriState::Disconnected: cells.disconnected.push_back(k); break;
            case fano::TriState::Unknown: cells.unknown.push_back(k); break;
        }
    }
    return cells;
}

int run_classify(const std::string& family_name, int m, int n, int r, int k,
                 const std::string& format) {
    fano::Family family = fano::parse_family(family_name);
    fano::FanoParams p(m, n, r, k);
    if (!fano::is_nonempty(p)) {
        if (format == "json") {
            ordered_json doc;
            doc["schema"] = "fano.classify/1";
            doc["family"] = family_name;
            doc["m"] = m;
            doc["n"] = n;
            doc["r"] = r;
            doc["k"] = k;
            doc["verdict"] = "empty";
            std::cout << doc.dump(2) << "\n";
        } else if (format == "csv") {
            std::cout << "family,m,n,r,k,verdict\n"
                      << family_name << "," << m << "," << n << "," << r << "," << k
                      << ",empty\n";
        } else {
            std::cout << "empty (k >= (r-1)n)\n";
        }
        return 0;
    }
    bool smooth = family == fano::Family::Det ? fano::det_is_smooth(p) : fano::perm_is_smooth(p);
    bool irred =
        family == fano::Family::Det ? fano::det_is_irreducible(p) : fano::perm_is_irreducible(p);
    fano::ConnectivityVerdict conn =
        family == fano::Family::Det ? fano::det_connectivity(p) : fano::perm_connectivity(p);
    std::string smooth_clause = family == fano::Family::Det
                                    ? "smooth iff k > (r-2)n"
                                    : "smooth iff n = 2 or k > (r-2)n+1";
    std::string irred_clause = family == fano::Family::Det
                                   ? "irreducible iff m != n and k > (r-2)n+m-r+1"
                                   : "nonempty permanental Fano schemes are reducible";
    std::string conn_tag = conn.clause + (conn.s ? "(s=" + std::to_string(*conn.s) + ")" : "");
    if (format == "json") {
        ordered_json doc;
        doc["schema"] = "fano.classify/1";
        doc["family"] = family_name;
        doc["m"] = m;
        doc["n"] = n;
        doc["r"] = r;
        doc["k"] = k;
        doc["verdict"] = "nonempty";
        doc["smooth"] = {{"value", smooth}, {"clause", smooth_clause}};
        doc["irreducible"] = {{"value", irred}, {"clause", irred_clause}};
        ordered_json c;
        c["value"] = fano::to_string(conn.state);
        c["clause"] = conn.clause;
        if (conn.s) c["s"] = *conn.s;
        doc["connected"] = c;
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "family,m,n,r,k,smooth,irreducible,connected,clause\n"
                  << family_name << "," << m << "," << n << "," << r << "," << k << ","
                  << (smooth ? "true" : "false") << "," << (irred ? "true" : "false") << ","
                  << fano::to_string(conn.state) << "," << conn_tag << "\n";
    } else {
        std::cout << "smooth:      " << (smooth ? "true" : "false") << "  [" << smooth_clause
                  << "]\n"
                  << "irreducible: " << (irred ? "true" : "false") << "  [" << irred_clause
                  << "]\n"
                  << "connected:   " << fano::to_string(conn.state) << "  [" << conn_tag << "]\n";
    }
    return 0;
}

int run_table(const std::string& family_name, int n_min, int n_max, const std::string& format) {
    fano::Family family = fano::parse_family(family_name);
    auto rows = fano::render_table(family, n_min, n_max);
    if (format == "json") {
        ordered_json doc;
        doc["schema"] = "fano.table/1";
        doc["family"] = family_name;
        auto arr = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json jr;
            jr["n"] = row.n;
            jr["nonempty_max_k"] = row.nonempty_max_k;
            if (row.singular_max_k)
                jr["singular_max_k"] = *row.singular_max_k;
            else
                jr["singular_max_k"] = nullptr;
            auto verdicts = ordered_json::array();
            for (auto v : row.connected) verdicts.push_back(fano::to_string(v));
            jr["connected"] = verdicts;  // entry i is the verdict for k = i+1
            arr.push_back(std::move(jr));
        }
        doc["rows"] = std::move(arr);
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    if (format == "csv") {
        std::cout << "family,n,nonempty_max_k,singular_max_k,connected_max_k,connected_extra,"
                     "disconnected,unknown\n";
        for (const auto& row : rows) {
            TableCells cells = split_cells(row);
            std::cout << family_name << "," << row.n << "," << row.nonempty_max_k << ",";
            if (row.singular_max_k) std::cout << *row.singular_max_k;
            std::cout << "," << (cells.connected_prefix > 0 ? std::to_string(cells.connected_prefix) : "")
                      << ",\"" << compress_list(cells.connected_extra) << "\",\""
                      << compress_list(cells.disconnected) << "\",\""
                      << compress_list(cells.unknown) << "\"\n";
        }
        return 0;
    }
    for (const auto& row : rows) {
        TableCells cells = split_cells(row);
        std::cout << "n = " << row.n << "\n";
        std::cout << "  Non-empty iff k <= " << row.nonempty_max_k << "\n";
        std::cout << "  Singular iff k <= "
                  << (row.singular_max_k ? std::to_string(*row.singular_max_k) : "--") << "\n";
        const char* label = family == fano::Family::Det ? "Connected iff k <= " : "Connected if k <= ";
        std::cout << "  " << label
                  << (cells.connected_prefix > 0 ? std::to_string(cells.connected_prefix) : "--");
        if (!cells.connected_extra.empty())
            std::cout << " or k = " << compress_list(cells.connected_extra);
        std::cout << "\n";
        if (family == fano::Family::Perm && !cells.disconnected.empty())
            std::cout << "  Disconnected if k = " << compress_list(cells.disconnected) << "\n";
        if (!cells.unknown.empty())
            std::cout << "  ? for k = " << compress_list(cells.unknown) << "\n";
    }
    return 0;
}

int run_fixed_points(int m, int n, int r, int k, bool orbits, long cap,
                     const std::string& format) {
    fano::FanoParams p(m, n, r, k);
    fano::Int count = fano::count_fixed_points(p, cap);
    std::vector<fano::OrbitInfo> orbit_list;
    if (orbits) orbit_list = fano::fixed_orbits(p, cap);
    if (format == "json") {
        ordered_json doc;
        doc["schema"] = "fano.fixed-points/1";
        doc["m"] = m;
        doc["n"] = n;
        doc["r"] = r;
        doc["k"] = k;
        doc["count"] = count.str();
        if (orbits) {
            doc["orbit_count"] = orbit_list.size();
            auto arr = ordered_json::array();
            for (const auto& o : orbit_list)
                arr.push_back({{"representative", fano::to_string(o.representative)},
                               {"size", o.size}});
            doc["orbits"] = std::move(arr);
        }
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        if (orbits) {
            std::cout << "representative,size\n";
            for (const auto& o : orbit_list)
                std::cout << fano::to_string(o.representative) << "," << o.size << "\n";
        } else {
            std::cout << "count\n" << count.str() << "\n";
        }
    } else {
        std::cout << "count: " << count.str() << "\n";
        if (orbits) {
            std::cout << "orbits: " << orbit_list.size() << "\n";
            for (const auto& o : orbit_list)
                std::cout << "  " << fano::to_string(o.representative) << "  size " << o.size
                          << "\n";
        }
    }
    return 0;
}

int run_tangent(const std::string& file, const std::string& family_name, int r, int s) {
    fano::Family family = fano::parse_family(family_name);
    fano::LinMatrix M = fano::load_plane_file(file);
    fano::FanoParams p(M.m, M.n, r, M.k);
    fano::CompressedPlane plane = fano::make_compressed_plane(p, s, std::move(M));
    fano::TangentReport report = fano::tangent_report(plane, family);
    ordered_json doc;
    doc["schema"] = "fano.tangent/1";
    doc["family"] = family_name;
    doc["m"] = p.m;
    doc["n"] = p.n;
    doc["r"] = p.r;
    doc["k"] = p.k;
    doc["s"] = s;
    doc["a_dim"] = report.a_dim;
    doc["tangent_dim"] = report.tangent_dim;
    doc["system"] = {{"equations", report.equations}, {"unknowns", report.unknowns}};
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int run_make_witness(const std::string& family_name, int m, int n, int r, int k, int s,
                     const std::string& out_path) {
    fano::Family family = fano::parse_family(family_name);
    fano::CompressedPlane plane =
        family == fano::Family::Det ? fano::witness_det(m, n, r, k, s) : fano::witness_perm(m, n, r, k, s);
    if (out_path.empty())
        std::cout << fano::plane_to_json(plane.matrix);
    else
        fano::save_plane_file(plane.matrix, out_path);
    return 0;
}

int run_membership(const std::string& file, const std::string& family_name, int r) {
    fano::Family family = fano::parse_family(family_name);
    fano::LinMatrix M = fano::load_plane_file(file);
    std::cout << (fano::plane_in_scheme(M, r, family) ? "true" : "false") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::cerr << kVersion << "\n";
    CLI::App app{"exact invariants of Fano schemes of determinantal and permanental loci"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    std::string family, file, out_path;
    int m = 0, n = 0, r = 0, k = 0, s = 0, n_min = 0, n_max = 0, a = 0, b = 0;
    long cap = fano::kDefaultCellCap;
    bool orbits = false, make_witness = false;

    auto* classify = app.add_subcommand("classify", "smoothness/irreducibility/connectedness");
    classify->add_option("family", family)->required();
    classify->add_option("m", m)->required();
    classify->add_option("n", n)->required();
    classify->add_option("r", r)->required();
    classify->add_option("k", k)->required();

    auto* table = app.add_subcommand("table", "square-case summary table over a range of n");
    table->add_option("family", family)->required();
    table->add_option("n_min", n_min)->required();
    table->add_option("n_max", n_max)->required();

    auto* fixed = app.add_subcommand("fixed-points", "torus fixed point census");
    fixed->add_option("m", m)->required();
    fixed->add_option("n", n)->required();
    fixed->add_option("r", r)->required();
    fixed->add_option("k", k)->required();
    fixed->add_flag("--orbits", orbits, "also list row/column permutation orbits");
    fixed->add_option("--cap", cap, "cell cap for the enumeration");

    auto* tangent = app.add_subcommand("tangent", "tangent dimension at a compressed plane");
    tangent->add_option("file", file, "k-plane JSON file");
    tangent->add_option("--family", family)->required();
    tangent->add_option("--s", s)->required();
    tangent->add_option("--r", r, "minor size (required unless --make-witness)");
    tangent->add_flag("--make-witness", make_witness, "emit a deterministic witness plane file");
    tangent->add_option("--m", m);
    tangent->add_option("--n", n);
    tangent->add_option("--k", k);
    tangent->add_option("--out", out_path, "output path for --make-witness");

    auto* degree = app.add_subcommand("degree", "intersection-theoretic degrees");
    degree->require_subcommand(1);
    auto* deg_f1 = degree->add_subcommand("f1", "degree of the scheme of lines, square case");
    deg_f1->add_option("--n", n)->required();
    auto* deg_gr = degree->add_subcommand("grassmannian", "Pluecker degree of Gr(a, b)");
    deg_gr->add_option("--a", a)->required();
    deg_gr->add_option("--b", b)->required();
    auto* deg_comp = degree->add_subcommand("compression", "degree of the compression variety");
    deg_comp->add_option("--m", m)->required();
    deg_comp->add_option("--n", n)->required();
    deg_comp->add_option("--r", r)->required();
    deg_comp->add_option("--s", s)->required();

    auto* membership = app.add_subcommand("membership", "does the k-plane lie on the scheme?");
    membership->add_option("file", file)->required();
    membership->add_option("--r", r)->required();
    membership->add_option("--family", family)->required();

    try {
        app.parse(argc, argv);
        if (classify->parsed()) return run_classify(family, m, n, r, k, format);
        if (table->parsed()) return run_table(family, n_min, n_max, format);
        if (fixed->parsed()) return run_fixed_points(m, n, r, k, orbits, cap, format);
        if (tangent->parsed()) {
            if (make_witness) return run_make_witness(family, m, n, r, k, s, out_path);
            if (file.empty() || r == 0)
                throw fano::DomainError("tangent: need a plane file and --r (or --make-witness)");
            return run_tangent(file, family, r, s);
        }
        if (deg_f1->parsed()) {
            std::cout << fano::f1_degree(n).str() << "\n";
            return 0;
        }
        if (deg_gr->parsed()) {
            std::cout << fano::gr_degree(a, b).str() << "\n";
            return 0;
        }
        if (deg_comp->parsed()) {
            std::cout << fano::compression_degree(m, n, r, s).str() << "\n";
            return 0;
        }
        if (membership->parsed()) return run_membership(file, family, r);
        throw fano::DomainError("no subcommand");
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const fano::InvariantError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const fano::ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const fano::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rootfd/fakedeg.hpp"
#include "rootfd/qpoly.hpp"
#include "rootfd/rootsys.hpp"

namespace {

using fakedeg::TableRow;
using qpoly::IntPoly;
using rootsys::Family;
using rootsys::GroupType;

// canonical enumeration order for table emission and verify --all
std::vector<GroupType> canonical_types(int max_rank, int max_m) {
    std::vector<GroupType> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n, 0});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n, 0});
    for (int n = 4; n <= max_rank; ++n) out.push_back({Family::D, n, 0});
    for (int n = 6; n <= 8 && n <= max_rank; ++n) out.push_back({Family::E, n, 0});
    if (max_rank >= 4) out.push_back({Family::F, 4, 0});
    if (max_rank >= 3) out.push_back({Family::H, 3, 0});
    if (max_rank >= 4) out.push_back({Family::H, 4, 0});
    for (int m = 5; m <= max_m; ++m) out.push_back({Family::I2, 2, m});
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::string stab_text(const std::vector<std::string>& labels) {
    if (labels.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < labels.size(); ++i) s += (i ? "x" : "") + labels[i];
    return s;
}

// "1 + q^{4} + 2q^{6}" for math-mode emission
std::string latex_poly(const IntPoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (int i = 0; i <= f.degree(); ++i) {
        const auto& c = f.coeff(i);
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0)
            s += c.get_str();
        else {
            if (c != 1) s += c.get_str();
            s += i == 1 ? "q" : "q^{" + std::to_string(i) + "}";
        }
    }
    return s;
}

std::string qexp(int k) {
    return k == 1 ? "q" : "q^" + (k < 10 ? std::to_string(k) : "{" + std::to_string(k) + "}");
}
std::string qbracket(int n, int k) {
    return "[" + std::to_string(n) + "]_{" + qexp(k) + "}";
}

// the tabulated quotient in bracket notation, for the latex expected column
std::string quotient_recipe(const GroupType& t, const std::string& label) {
    const int n = t.rank;
    const bool swapped = (t.family == Family::C) != (label == "short");
    switch (t.family) {
        case Family::A: return n == 1 ? "1" : "[" + std::to_string(n) + "]_q";
        case Family::B:
        case Family::C:
            if (swapped) return "1";
            return n == 2 ? "1" : qbracket(n - 1, 2);
        case Family::D:
            return qbracket(2, n - 2) + "[" + std::to_string(n) + "]_q/[2]_q";
        case Family::E:
            if (n == 6) return qbracket(2, 4) + qbracket(3, 3);
            if (n == 7) return "(" + qbracket(2, 6) + "/" + qbracket(2, 2) + ")" + qbracket(7, 2);
            return qbracket(2, 10) + qbracket(4, 6);
        case Family::F: return qbracket(2, 4);
        case Family::H: return n == 3 ? qbracket(3, 2) : qbracket(2, 6) + qbracket(2, 10);
        case Family::I2: return t.bond % 2 ? "[2]_q" : "1";
    }
    return "";
}

std::string gcd_recipe(const GroupType& t) {
    switch (t.family) {
        case Family::B:
        case Family::C: return qbracket(t.rank, 2);
        case Family::F: return qbracket(2, 6);
        case Family::I2:
            if (t.bond % 2 == 0 && (t.bond / 2) % 2 == 0) return qbracket(2, 2);
            return "1";
        default: return "1";
    }
}

struct Row {
    GroupType type;
    int h;
    TableRow data;
};

std::vector<Row> collect_rows(int max_rank, int max_m) {
    std::vector<Row> rows;
    for (const GroupType& t : canonical_types(max_rank, max_m)) {
        auto rs = rootsys::build_root_system(t);
        for (const auto& o : rs.orbits)
            rows.push_back(Row{t, rs.datum.h, fakedeg::table_row(rs, o.label)});
    }
    return rows;
}

void print_table(const std::vector<Row>& rows, const std::string& format) {
    if (format == "csv") {
        std::cout << "type,h,orbit,stabilizer,quotient,gcd\n";
        for (const auto& r : rows)
            std::cout << r.type.label() << ',' << r.h << ',' << r.data.orbit_label << ','
                      << stab_text(r.data.stabilizer) << ',' << r.data.quotient.to_text()
                      << ',' << r.data.gcd.to_text() << '\n';
    } else if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back({{"type", r.type.label()},
                           {"h", r.h},
                           {"orbit", r.data.orbit_label},
                           {"stabilizer", r.data.stabilizer},
                           {"quotient", r.data.quotient.to_json()},
                           {"gcd", r.data.gcd.to_json()},
                           {"matches_expected", r.data.pass}});
        std::cout << arr.dump(2) << '\n';
    } else if (format == "latex") {
        std::cout << "\\begin{tabular}{|c|c|c|c|c|c|c|}\n\\hline\n"
                  << "$W$ & $h$ & orbit & stabilizer & $f^{\\Phi'}/[h]_q$ & expected & "
                     "$\\gcd$ \\\\ \\hline\n";
        for (const auto& r : rows)
            std::cout << '$' << r.type.label() << "$ & $" << r.h << "$ & "
                      << r.data.orbit_label << " & $" << stab_text(r.data.stabilizer)
                      << "$ & $" << latex_poly(r.data.quotient) << "$ & $"
                      << quotient_recipe(r.type, r.data.orbit_label) << "$ & $"
                      << latex_poly(r.data.gcd) << "$ \\\\\n";
        std::cout << "\\hline\n\\end{tabular}\n";
    } else {
        for (const auto& r : rows)
            std::cout << r.type.label() << " | h=" << r.h << " | " << r.data.orbit_label
                      << " | " << stab_text(r.data.stabilizer) << " | "
                      << r.data.quotient.to_text() << " | " << r.data.gcd.to_text()
                      << (r.data.pass ? "" : "  [MISMATCH]") << '\n';
    }
}

int cmd_info(const std::string& spec, const std::string& format) {
    auto rs = rootsys::build_root_system(GroupType::parse(spec));
    const auto& d = rs.datum;
    if (format == "json") {
        std::cout << rs.to_json().dump(2) << '\n';
        return 0;
    }
    std::cout << "type: " << d.type.label() << "\nrank: " << d.rank << "\nh: " << d.h
              << "\ndegrees: " << join(d.degrees) << "\nexponents: " << join(d.exponents)
              << "\ncodegrees: " << join(d.codegrees) << "\nroots: " << rs.nroots
              << "\norder: " << d.group_order.get_str() << '\n';
    for (const auto& o : rs.orbits) {
        std::vector<std::string> stab;
        for (const auto& t : o.stabilizer_type) stab.push_back(t.label());
        std::cout << "orbit " << o.label << ": size " << o.members.size()
                  << ", stabilizer " << stab_text(stab) << '\n';
    }
    return 0;
}

int cmd_fakedeg(const std::string& spec, const std::string& orbit,
                const std::string& format) {
    auto rs = rootsys::build_root_system(GroupType::parse(spec));
    auto sel = fakedeg::select_orbits(rs, orbit);
    const IntPoly f = fakedeg::fakedeg_bfs(rs, sel);
    const IntPoly quot = qpoly::exact_div(f, qpoly::q_int(rs.datum.h));
    const IntPoly gcd =
        qpoly::gcd_primitive(qpoly::q_int(rs.datum.h), rs.datum.codegree_poly());
    if (format == "json") {
        std::cout << nlohmann::json{{"type", rs.datum.type.label()},
                                    {"orbit", orbit},
                                    {"h", rs.datum.h},
                                    {"f", f.to_json()},
                                    {"quotient", quot.to_json()},
                                    {"gcd", gcd.to_json()}}
                         .dump(2)
                  << '\n';
    } else if (format == "csv") {
        std::cout << "type,orbit,h,f,quotient,gcd\n"
                  << rs.datum.type.label() << ',' << orbit << ',' << rs.datum.h << ','
                  << f.to_text() << ',' << quot.to_text() << ',' << gcd.to_text() << '\n';
    } else if (format == "latex") {
        std::cout << '$' << rs.datum.type.label() << "$ & " << orbit << " & $"
                  << latex_poly(f) << "$ & $" << latex_poly(quot) << "$ & $"
                  << latex_poly(gcd) << "$ \\\\\n";
    } else {
        std::cout << "type: " << rs.datum.type.label() << "\norbit: " << orbit
                  << "\nf: " << f.to_text() << "\nf/[h]_q: " << quot.to_text()
                  << "\ngcd: " << gcd.to_text() << '\n';
    }
    return 0;
}

int cmd_verify(const std::string& spec, bool all, int max_rank, int max_m,
               long bfs_bound, const std::string& format) {
    fakedeg::VerifyOptions opts;
    opts.bfs_bound = bfs_bound;
    std::vector<fakedeg::VerificationReport> reports;
    if (all) {
        for (const GroupType& t : canonical_types(max_rank, max_m))
            reports.push_back(fakedeg::verify_all(t, opts));
    } else {
        reports.push_back(fakedeg::verify_all(GroupType::parse(spec), opts));
    }
    bool ok = true;
    if (format == "text") {
        for (const auto& r : reports) {
            std::cout << r.to_text();
            ok = ok && r.all_passed();
        }
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) {
            arr.push_back(r.to_json());
            ok = ok && r.all_passed();
        }
        std::cout << (reports.size() == 1 && !all ? arr[0].dump(2) : arr.dump(2)) << '\n';
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Root systems of finite real reflection groups: fake degrees of the "
                 "reflection action on root orbits, table reproduction, and a full "
                 "verification suite"};
    app.require_subcommand(1);

    std::string type, orbit = "all", format = "text";
    int max_rank = 12, max_m = 30;
    long bfs_bound = 1000000;
    bool all = false;

    auto* info = app.add_subcommand("info", "print Coxeter data and orbit structure");
    info->add_option("type", type, "group type, e.g. E8, B7, I2(14)")->required();
    info->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* fd = app.add_subcommand("fakedeg", "fake degree of a root orbit union");
    fd->add_option("type", type)->required();
    fd->add_option("--orbit", orbit)->check(CLI::IsMember({"all", "long", "short"}));
    fd->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json", "csv", "latex"}));

    auto* tbl = app.add_subcommand("table", "reproduce the quotient/gcd table");
    tbl->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
    tbl->add_option("--max-rank", max_rank, "family rank bound")->check(CLI::Range(1, 64));
    tbl->add_option("--max-m", max_m, "dihedral bond bound")->check(CLI::Range(5, 200));

    auto* ver = app.add_subcommand("verify", "run the verification suite");
    ver->add_option("type", type);
    ver->add_flag("--all", all, "verify every type within the bounds");
    ver->add_option("--max-rank", max_rank)->check(CLI::Range(1, 64));
    ver->add_option("--max-m", max_m)->check(CLI::Range(5, 200));
    ver->add_option("--bfs-bound", bfs_bound, "group enumeration oracle cutoff");
    std::string vformat = "json";
    ver->add_option("--format", vformat)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (info->parsed()) return cmd_info(type, format);
        if (fd->parsed()) return cmd_fakedeg(type, orbit, format);
        if (tbl->parsed()) {
            print_table(collect_rows(max_rank, max_m), format);
            return 0;
        }
        if (!all && type.empty()) {
            std::cerr << "verify: give a type or --all\n";
            return 2;
        }
        return cmd_verify(type, all, max_rank, max_m, bfs_bound, vformat);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

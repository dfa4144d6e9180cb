#include "rootfd/fakedeg.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fakedeg {

using qpoly::divides;
using qpoly::exact_div;
using qpoly::gcd_primitive;
using qpoly::one;
using qpoly::q_int;
using qpoly::q_int_scaled;
using rootsys::CoxeterDatum;
using rootsys::Family;
using rootsys::GroupType;

std::vector<const Orbit*> select_orbits(const RootSystem& rs, const std::string& selector) {
    if (selector == "all") {
        std::vector<const Orbit*> out;
        for (const Orbit& o : rs.orbits) out.push_back(&o);
        return out;
    }
    for (const Orbit& o : rs.orbits)
        if (o.label == selector) return {&o};
    throw std::invalid_argument("no orbit labeled '" + selector + "' in type " +
                                rs.datum.type.label());
}

std::vector<std::pair<std::string, std::vector<const Orbit*>>> all_selectors(
    const RootSystem& rs) {
    std::vector<std::pair<std::string, std::vector<const Orbit*>>> out;
    if (rs.orbits.size() == 1) {
        out.emplace_back("all", select_orbits(rs, "all"));
        return out;
    }
    for (const Orbit& o : rs.orbits) out.emplace_back(o.label, select_orbits(rs, o.label));
    out.emplace_back("all", select_orbits(rs, "all"));
    return out;
}

IntPoly fakedeg_bfs(const RootSystem&, const std::vector<const Orbit*>& sel) {
    IntPoly f;
    for (const Orbit* o : sel)
        for (int d : o->distances) f = f + IntPoly::monomial(d);
    return f;
}

IntPoly fakedeg_bfs(const RootSystem& rs, const std::string& selector) {
    return fakedeg_bfs(rs, select_orbits(rs, selector));
}

IntPoly group_poincare(const CoxeterDatum& datum) {
    IntPoly p = one();
    for (int d : datum.degrees) p = p * q_int(d);
    return p;
}

IntPoly fakedeg_quotient(const RootSystem& rs, const std::vector<const Orbit*>& sel) {
    const IntPoly full = group_poincare(rs.datum);
    IntPoly f;
    for (const Orbit* o : sel) {
        IntPoly par = one();
        for (int d : rootsys::parabolic_degrees(o->stabilizer_type)) par = par * q_int(d);
        f = f + exact_div(full, par);
    }
    return f;
}

IntPoly fakedeg_quotient(const RootSystem& rs, const std::string& selector) {
    return fakedeg_quotient(rs, select_orbits(rs, selector));
}

CrossCheck crosscheck(const RootSystem& rs, const std::string& selector, long bfs_bound,
                      const std::optional<IntPoly>& cached_group_poly) {
    CrossCheck r;
    auto sel = select_orbits(rs, selector);
    r.from_bfs = fakedeg_bfs(rs, sel);
    r.from_quotient = fakedeg_quotient(rs, sel);
    r.pass = r.from_bfs == r.from_quotient;

    std::optional<IntPoly> group = cached_group_poly;
    if (!group && rs.datum.group_order <= bfs_bound) {
        group = rootsys::poincare_bfs(rs, rootsys::all_simple_indices(rs.datum), bfs_bound);
    }
    if (group) {
        IntPoly g;
        for (const Orbit* o : sel)
            g = g + exact_div(*group, rootsys::poincare_bfs(rs, o->stabilizer, bfs_bound));
        r.from_group_bfs = g;
        r.pass = r.pass && g == r.from_bfs;
    }
    return r;
}

bool verify_thm_i(const RootSystem& rs, const std::vector<const Orbit*>& sel) {
    return divides(q_int(rs.datum.h), fakedeg_bfs(rs, sel));
}

ThmIiResult verify_thm_ii(const RootSystem& rs) {
    if (!rs.datum.simply_laced)
        throw std::invalid_argument("simply-laced identity requested for " +
                                    rs.datum.type.label());
    ThmIiResult r;
    r.fake_degree = fakedeg_bfs(rs, "all");
    r.expected = q_int(rs.datum.h) * rs.datum.codegree_poly();
    r.pass = r.fake_degree == r.expected;
    return r;
}

CspResult csp_check(const RootSystem& rs, const std::vector<const Orbit*>& sel) {
    CspResult r;
    const IntPoly f = fakedeg_bfs(rs, sel);
    std::vector<int> members;
    for (const Orbit* o : sel)
        members.insert(members.end(), o->members.begin(), o->members.end());
    for (int m = 0; m < rs.datum.h; ++m) {
        int fixed = rs.fixed_points_of_power(m, members);
        auto val = qpoly::eval_at_root_of_unity(f, rs.datum.h, m);
        bool ok = val.is_integer() && val.integer_value() == fixed;
        r.fixed_counts.push_back(fixed);
        r.eval_matches.push_back(ok);
        if (!ok) r.pass = false;
    }
    return r;
}

namespace {

// canonical labels of an irreducible diagram, flattening the degenerate
// low-rank coincidences (B1 = A1, D2 = A1 x A1, D3 = A3)
void push_component(std::vector<std::string>& out, char fam, int rank) {
    if (rank <= 0) return;
    if (rank == 1) {
        out.push_back("A1");
        return;
    }
    if (fam == 'D') {
        if (rank == 2) {
            out.push_back("A1");
            out.push_back("A1");
            return;
        }
        if (rank == 3) {
            out.push_back("A3");
            return;
        }
    }
    if (fam == 'B' && rank == 2) {
        out.push_back("B2");
        return;
    }
    out.push_back(std::string(1, fam) + std::to_string(rank));
}

struct ExpectedRow {
    IntPoly quotient;
    std::vector<std::string> stabilizer;
};

struct ExpectedTable {
    // keyed by orbit label
    std::map<std::string, ExpectedRow> rows;
    IntPoly gcd;
};

// the tabulated f^{Phi'}/[h]_q recipes, gcd([h]_q, sum q^{d*_i}) values and
// stabilizer types, stored symbolically and expanded on demand.  The D row
// uses [2]_{q^{n-2}}[n]_q/[2]_q; the equivalent published form misprints the
// first factor (it fails already at n = 5), see README.
ExpectedTable expected_for(const CoxeterDatum& d) {
    ExpectedTable t;
    t.gcd = one();
    const int n = d.rank;
    switch (d.type.family) {
        case Family::A: {
            ExpectedRow r{q_int(n), {}};
            push_component(r.stabilizer, 'A', n - 2);
            t.rows["all"] = r;
            break;
        }
        case Family::B:
        case Family::C: {
            ExpectedRow lng{n >= 2 ? q_int_scaled(n - 1, 2) : one(), {}};
            push_component(lng.stabilizer, 'A', 1);
            push_component(lng.stabilizer, 'B', n - 2);
            ExpectedRow sht{one(), {}};
            push_component(sht.stabilizer, 'B', n - 1);
            t.gcd = q_int_scaled(n, 2);
            t.rows["long"] = d.type.family == Family::B ? lng : sht;
            t.rows["short"] = d.type.family == Family::B ? sht : lng;
            break;
        }
        case Family::D: {
            ExpectedRow r{exact_div(q_int_scaled(2, n - 2) * q_int(n), q_int(2)), {}};
            push_component(r.stabilizer, 'A', 1);
            push_component(r.stabilizer, 'D', n - 2);
            t.rows["all"] = r;
            break;
        }
        case Family::E: {
            ExpectedRow r;
            if (n == 6) {
                r.quotient = q_int_scaled(2, 4) * q_int_scaled(3, 3);
                r.stabilizer = {"A5"};
            } else if (n == 7) {
                r.quotient = exact_div(q_int_scaled(2, 6), q_int_scaled(2, 2)) *
                             q_int_scaled(7, 2);
                r.stabilizer = {"D6"};
            } else {
                r.quotient = q_int_scaled(2, 10) * q_int_scaled(4, 6);
                r.stabilizer = {"E7"};
            }
            t.rows["all"] = r;
            break;
        }
        case Family::F: {
            ExpectedRow r{q_int_scaled(2, 4), {"B3"}};
            t.gcd = q_int_scaled(2, 6);
            t.rows["long"] = r;
            t.rows["short"] = r;
            break;
        }
        case Family::H: {
            ExpectedRow r;
            if (n == 3) {
                r.quotient = q_int_scaled(3, 2);
                r.stabilizer = {"A1", "A1"};
            } else {
                r.quotient = q_int_scaled(2, 6) * q_int_scaled(2, 10);
                r.stabilizer = {"H3"};
            }
            t.rows["all"] = r;
            break;
        }
        case Family::I2: {
            const int m = d.type.bond;
            if (m % 2 == 1) {
                t.rows["all"] = ExpectedRow{q_int(2), {}};
            } else {
                ExpectedRow r{one(), {"A1"}};
                t.rows["long"] = r;
                t.rows["short"] = r;
                if ((m / 2) % 2 == 0) t.gcd = q_int_scaled(2, 2);
            }
            break;
        }
    }
    return t;
}

std::vector<std::string> sorted_labels(const std::vector<GroupType>& types) {
    std::vector<std::string> out;
    for (const GroupType& t : types) out.push_back(t.label());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TableRow table_row(const RootSystem& rs, const std::string& orbit_label) {
    TableRow r;
    r.orbit_label = orbit_label;
    const Orbit& o = rs.orbit_labeled(orbit_label);
    r.quotient = exact_div(fakedeg_bfs(rs, {&o}), q_int(rs.datum.h));
    r.gcd = gcd_primitive(q_int(rs.datum.h), rs.datum.codegree_poly());
    r.stabilizer = sorted_labels(o.stabilizer_type);

    const ExpectedTable exp = expected_for(rs.datum);
    auto it = exp.rows.find(orbit_label);
    if (it == exp.rows.end())
        throw std::invalid_argument("no tabulated row for orbit '" + orbit_label +
                                    "' of " + rs.datum.type.label());
    r.expected_quotient = it->second.quotient;
    r.expected_gcd = exp.gcd;
    r.expected_stabilizer = it->second.stabilizer;
    std::sort(r.expected_stabilizer.begin(), r.expected_stabilizer.end());
    r.pass = r.quotient == r.expected_quotient && r.gcd == r.expected_gcd &&
             r.stabilizer == r.expected_stabilizer;
    return r;
}

GcdOneResult verify_prop_gcd_one(const RootSystem& rs) {
    if (rs.orbits.size() != 1)
        throw std::invalid_argument("single-orbit check requested for multi-orbit type " +
                                    rs.datum.type.label());
    GcdOneResult r;
    r.gcd = gcd_primitive(q_int(rs.datum.h), rs.datum.codegree_poly());
    r.gcd_is_one = r.gcd == one();
    r.traces_nonzero = true;
    for (int m = 0; m < rs.datum.h; ++m) {
        r.traces.push_back(rs.trace_repr(m));
        if (rs.trace_is_zero(m)) r.traces_nonzero = false;
    }
    r.pass = r.gcd_is_one && r.traces_nonzero;
    return r;
}

bool verify_prop_doubly_laced(const RootSystem& rs) {
    if (!rs.datum.doubly_laced_at_most)
        throw std::invalid_argument("doubly-laced divisibility requested for " +
                                    rs.datum.type.label());
    const IntPoly cod = rs.datum.codegree_poly();
    for (const auto& [name, sel] : all_selectors(rs))
        if (!divides(cod, fakedeg_bfs(rs, sel))) return false;
    return true;
}

SymAntisym sym_antisym(const RootSystem& rs, const Orbit& orbit) {
    SymAntisym r;
    const IntPoly f = fakedeg_bfs(rs, {&orbit});
    try {
        r.f_plus = exact_div(f, q_int(2));
    } catch (const qpoly::DivisibilityError&) {
        return r;  // pass stays false: (1+q) must divide f
    }
    r.f_minus = IntPoly::monomial(1) * r.f_plus;
    r.pass = r.f_plus + r.f_minus == f;
    return r;
}

FuResult verify_fU(const RootSystem& rs) {
    if (!rs.datum.simply_laced)
        throw std::invalid_argument("f^U identity requested for non-simply-laced " +
                                    rs.datum.type.label());
    FuResult r;
    const SymAntisym sa = sym_antisym(rs, rs.orbits[0]);
    if (!sa.pass) return r;
    const IntPoly epoly = rs.datum.exponent_poly();
    r.f_u = sa.f_minus - epoly;
    const int h = rs.datum.h, l = rs.datum.rank;
    // [2]_q f^U = q^2 [h-2]_q sum q^{e_i}, with [0]_q read as 0 (rank one)
    const IntPoly lhs = q_int(2) * r.f_u;
    const IntPoly rhs = h > 2 ? IntPoly::monomial(2) * q_int(h - 2) * epoly : IntPoly();
    r.pass = lhs == rhs && r.f_u.eval_at_one() == (h - 2) * l / 2;
    return r;
}

bool VerificationReport::all_passed() const {
    for (const Claim& c : claims)
        if (c.status == "fail") return false;
    return true;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const Claim& c : claims) {
        nlohmann::json j{{"id", c.id}, {"ref", c.ref}, {"status", c.status}};
        if (!c.witness.is_null()) j["witness"] = c.witness;
        arr.push_back(std::move(j));
    }
    return nlohmann::json{{"type", type}, {"claims", std::move(arr)}};
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "== " << type << " ==\n";
    for (const Claim& c : claims) {
        os << "  [" << c.status << "]";
        for (size_t k = c.status.size(); k < 4; ++k) os << ' ';
        os << ' ' << c.id << "  -- " << c.ref;
        if (!c.witness.is_null()) os << "  witness: " << c.witness.dump();
        os << '\n';
    }
    return os.str();
}

namespace {

void add(VerificationReport& rep, const std::string& id, const std::string& ref,
         bool pass, nlohmann::json witness = nullptr) {
    rep.claims.push_back(Claim{id, ref, pass ? "pass" : "fail",
                               pass ? nlohmann::json(nullptr) : std::move(witness)});
}

void add_na(VerificationReport& rep, const std::string& id, const std::string& ref) {
    rep.claims.push_back(Claim{id, ref, "na", nullptr});
}

}  // namespace

VerificationReport verify_all(const GroupType& t, const VerifyOptions& opts) {
    VerificationReport rep;
    rep.type = t.label();

    RootSystem rs;
    try {
        rs = rootsys::build_root_system(t);
    } catch (const std::exception& e) {
        add(rep, "structure.build", "root system generation and internal invariants",
            false, nlohmann::json{{"error", e.what()}});
        return rep;
    }
    const CoxeterDatum& d = rs.datum;

    add(rep, "cardinality", "|Phi| = h * rank", rs.nroots == d.h * d.rank,
        nlohmann::json{{"nroots", rs.nroots}, {"h", d.h}, {"rank", d.rank}});

    add(rep, "free_action", "Coxeter element has order h and acts freely on roots",
        rs.coxeter_order == d.h,
        nlohmann::json{{"order", rs.coxeter_order}, {"h", d.h}});

    {
        bool ok = true;
        int sum = 0;
        for (int i = 0; i < d.rank; ++i) {
            sum += d.exponents[i];
            if (d.exponents[i] + d.exponents[d.rank - 1 - i] != d.h) ok = false;
        }
        ok = ok && 2 * sum == d.h * d.rank;
        add(rep, "exponent_duality", "h - e_i = e_{l+1-i} and sum e_i = |Phi+|", ok,
            nlohmann::json{{"exponents", d.exponents}, {"h", d.h}});
    }

    if (d.crystallographic) {
        IntPoly expect;
        for (int e : d.exponents) expect = expect + IntPoly::monomial(1) * q_int(e);
        const IntPoly got = rootsys::height_poly(rs);
        add(rep, "eq3.2", "height generating function equals stacked exponents",
            got == expect,
            nlohmann::json{{"computed", got.to_text()}, {"expected", expect.to_text()}});
    } else {
        add_na(rep, "eq3.2", "height generating function equals stacked exponents");
    }

    if (d.simply_laced) {
        bool ok = true;
        nlohmann::json w = nullptr;
        for (const Orbit& o : rs.orbits)
            for (size_t i = 0; i < o.members.size(); ++i)
                if (rootsys::mv_formula(rs, o.members[i]) != o.distances[i]) {
                    ok = false;
                    w = nlohmann::json{{"root", o.members[i]},
                                       {"bfs", o.distances[i]},
                                       {"formula", rootsys::mv_formula(rs, o.members[i])}};
                }
        add(rep, "lemma3.2", "coset distance equals the height formula", ok, std::move(w));
    } else {
        add_na(rep, "lemma3.2", "coset distance equals the height formula");
    }

    const auto selectors = all_selectors(rs);
    std::optional<IntPoly> group_poly;
    if (d.group_order <= opts.bfs_bound)
        group_poly = rootsys::poincare_bfs(rs, rootsys::all_simple_indices(d),
                                           opts.bfs_bound);

    for (const auto& [name, sel] : selectors) {
        CrossCheck cc = crosscheck(rs, name, opts.bfs_bound, group_poly);
        nlohmann::json w{{"from_bfs", cc.from_bfs.to_text()},
                         {"from_quotient", cc.from_quotient.to_text()}};
        if (cc.from_group_bfs) w["from_group_bfs"] = cc.from_group_bfs->to_text();
        add(rep, "crosscheck." + name,
            "independent fake-degree computations agree", cc.pass, std::move(w));
    }

    for (const auto& [name, sel] : selectors) {
        const IntPoly f = fakedeg_bfs(rs, sel);
        add(rep, "thm1i." + name, "[h]_q divides the fake degree",
            verify_thm_i(rs, sel),
            nlohmann::json{{"f", f.to_text()}, {"h", d.h}});
    }

    if (d.simply_laced) {
        ThmIiResult r = verify_thm_ii(rs);
        add(rep, "thm1ii", "fake degree equals [h]_q times the codegree polynomial",
            r.pass,
            nlohmann::json{{"f", r.fake_degree.to_text()},
                           {"expected", r.expected.to_text()}});
    } else {
        add_na(rep, "thm1ii", "fake degree equals [h]_q times the codegree polynomial");
    }

    for (const auto& [name, sel] : selectors) {
        CspResult r = csp_check(rs, sel);
        add(rep, "lemma2.1." + name,
            "root-of-unity evaluations count Coxeter-power fixed points", r.pass,
            nlohmann::json{{"fixed_counts", r.fixed_counts}});
    }

    for (const Orbit& o : rs.orbits) {
        TableRow r = table_row(rs, o.label);
        add(rep, "table." + o.label, "tabulated quotient, gcd and stabilizer type",
            r.pass,
            nlohmann::json{{"quotient", r.quotient.to_text()},
                           {"expected_quotient", r.expected_quotient.to_text()},
                           {"gcd", r.gcd.to_text()},
                           {"expected_gcd", r.expected_gcd.to_text()},
                           {"stabilizer", r.stabilizer},
                           {"expected_stabilizer", r.expected_stabilizer}});
    }

    if (rs.orbits.size() == 1) {
        GcdOneResult r = verify_prop_gcd_one(rs);
        add(rep, "prop4.1",
            "gcd([h]_q, codegree polynomial) = 1 and all Coxeter-power traces nonzero",
            r.pass, nlohmann::json{{"gcd", r.gcd.to_text()}, {"traces", r.traces}});
    } else {
        add_na(rep, "prop4.1",
               "gcd([h]_q, codegree polynomial) = 1 and all Coxeter-power traces nonzero");
    }

    if (d.doubly_laced_at_most) {
        add(rep, "prop4.2",
            "codegree polynomial divides the fake degree of every orbit union",
            verify_prop_doubly_laced(rs),
            nlohmann::json{{"codegree_poly", d.codegree_poly().to_text()}});
    } else {
        add_na(rep, "prop4.2",
               "codegree polynomial divides the fake degree of every orbit union");
    }

    for (const Orbit& o : rs.orbits) {
        SymAntisym r = sym_antisym(rs, o);
        add(rep, "prop5.1." + o.label,
            "fake degree splits as f+ + q*f+ across the antipodal involution", r.pass,
            nlohmann::json{{"f", fakedeg_bfs(rs, {&o}).to_text()}});
    }

    if (d.simply_laced) {
        FuResult r = verify_fU(rs);
        add(rep, "fU", "[2]_q f^U = q^2 [h-2]_q sum q^{e_i} with f^U(1) = (h-2)l/2",
            r.pass, nlohmann::json{{"f_U", r.f_u.to_text()}});
    } else {
        add_na(rep, "fU", "[2]_q f^U = q^2 [h-2]_q sum q^{e_i} with f^U(1) = (h-2)l/2");
    }

    return rep;
}

}  // namespace fakedeg

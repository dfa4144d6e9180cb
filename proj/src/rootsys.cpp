#include "rootfd/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace rootsys {

using qpoly::Int;
using qpoly::IntPoly;
using scalars::Scalar;

namespace {

struct Edge {
    int a, b, bond;
};

struct Diagram {
    int rank;
    std::vector<Edge> edges;
    std::vector<int> norms;  // empty for non-crystallographic
};

Diagram diagram_for(const GroupType& t) {
    Diagram d;
    d.rank = t.rank;
    const int n = t.rank;
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) d.edges.push_back({i, i + 1, 3});
            d.norms.assign(n, 2);
            break;
        case Family::B:
        case Family::C:
            for (int i = 0; i + 2 < n; ++i) d.edges.push_back({i, i + 1, 3});
            d.edges.push_back({n - 2, n - 1, 4});
            d.norms.assign(n, 2);
            d.norms[n - 1] = 1;  // short simple root last
            break;
        case Family::D:
            for (int i = 0; i + 3 < n; ++i) d.edges.push_back({i, i + 1, 3});
            d.edges.push_back({n - 3, n - 2, 3});
            d.edges.push_back({n - 3, n - 1, 3});
            d.norms.assign(n, 2);
            break;
        case Family::E: {
            // Bourbaki numbering, zero-based: node 1 hangs off node 3
            std::vector<std::pair<int, int>> e = {{0, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}};
            if (n >= 7) e.push_back({5, 6});
            if (n == 8) e.push_back({6, 7});
            for (auto [a, b] : e) d.edges.push_back({a, b, 3});
            d.norms.assign(n, 2);
            break;
        }
        case Family::F:
            d.edges = {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}};
            d.norms = {2, 2, 1, 1};
            break;
        case Family::H:
            d.edges.push_back({0, 1, 5});
            for (int i = 1; i + 1 < n; ++i) d.edges.push_back({i, i + 1, 3});
            break;
        case Family::I2:
            d.edges.push_back({0, 1, t.bond});
            break;
    }
    return d;
}

std::vector<int> degrees_for(const GroupType& t) {
    const int n = t.rank;
    std::vector<int> deg;
    switch (t.family) {
        case Family::A:
            for (int i = 0; i < n; ++i) deg.push_back(i + 2);
            break;
        case Family::B:
        case Family::C:
            for (int i = 0; i < n; ++i) deg.push_back(2 * (i + 1));
            break;
        case Family::D:
            for (int i = 0; i + 1 < n; ++i) deg.push_back(2 * (i + 1));
            deg.push_back(n);
            std::sort(deg.begin(), deg.end());
            break;
        case Family::E:
            if (n == 6) deg = {2, 5, 6, 8, 9, 12};
            if (n == 7) deg = {2, 6, 8, 10, 12, 14, 18};
            if (n == 8) deg = {2, 8, 12, 14, 18, 20, 24, 30};
            break;
        case Family::F:
            deg = {2, 6, 8, 12};
            break;
        case Family::H:
            deg = (n == 3) ? std::vector<int>{2, 6, 10} : std::vector<int>{2, 12, 20, 30};
            break;
        case Family::I2:
            deg = {2, t.bond};
            break;
    }
    return deg;
}

bool is_crystallographic(Family f) {
    return f == Family::A || f == Family::B || f == Family::C || f == Family::D ||
           f == Family::E || f == Family::F;
}

}  // namespace

GroupType GroupType::parse(const std::string& spec, int max_i2_bond) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(std::toupper(c));
    if (s.empty()) throw std::invalid_argument("empty type spec");

    auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("cannot parse type spec '" + spec +
                                     "'; expected e.g. A5, B7, E8, H3, I2(14)");
    };

    GroupType t;
    if (s.size() >= 4 && s.compare(0, 3, "I2(") == 0 && s.back() == ')') {
        std::string num = s.substr(3, s.size() - 4);
        if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit)) throw bad();
        int m = std::stoi(num);
        if (m < 3) throw std::invalid_argument("I2(m) requires m >= 3");
        if (m > max_i2_bond)
            throw std::invalid_argument("I2(" + std::to_string(m) + ") exceeds the bond ceiling " +
                                        std::to_string(max_i2_bond));
        if (m == 3) return {Family::A, 2, 0};
        if (m == 4) return {Family::B, 2, 0};
        return {Family::I2, 2, m};
    }

    if (s.size() < 2 || !std::all_of(s.begin() + 1, s.end(), ::isdigit)) throw bad();
    int n = std::stoi(s.substr(1));
    switch (s[0]) {
        case 'A':
            if (n < 1) throw std::invalid_argument("A requires rank >= 1");
            t = {Family::A, n, 0};
            break;
        case 'B':
            if (n < 2) throw std::invalid_argument("B requires rank >= 2");
            t = {Family::B, n, 0};
            break;
        case 'C':
            if (n < 2) throw std::invalid_argument("C requires rank >= 2");
            t = {Family::C, n, 0};
            break;
        case 'D':
            if (n < 4) throw std::invalid_argument("D requires rank >= 4");
            t = {Family::D, n, 0};
            break;
        case 'E':
            if (n < 6 || n > 8) throw std::invalid_argument("E requires rank 6, 7 or 8");
            t = {Family::E, n, 0};
            break;
        case 'F':
            if (n != 4) throw std::invalid_argument("F requires rank 4");
            t = {Family::F, 4, 0};
            break;
        case 'H':
            if (n < 3 || n > 4) throw std::invalid_argument("H requires rank 3 or 4");
            t = {Family::H, n, 0};
            break;
        default:
            throw bad();
    }
    return t;
}

std::string GroupType::label() const {
    switch (family) {
        case Family::A: return "A" + std::to_string(rank);
        case Family::B: return "B" + std::to_string(rank);
        case Family::C: return "C" + std::to_string(rank);
        case Family::D: return "D" + std::to_string(rank);
        case Family::E: return "E" + std::to_string(rank);
        case Family::F: return "F4";
        case Family::H: return "H" + std::to_string(rank);
        case Family::I2: return "I2(" + std::to_string(bond) + ")";
    }
    return "?";
}

IntPoly CoxeterDatum::codegree_poly() const {
    IntPoly p;
    for (int d : codegrees) p = p + IntPoly::monomial(d, 1);
    return p;
}

IntPoly CoxeterDatum::exponent_poly() const {
    IntPoly p;
    for (int e : exponents) p = p + IntPoly::monomial(e, 1);
    return p;
}

CoxeterDatum build_datum(const GroupType& t) {
    CoxeterDatum d;
    d.type = t;
    d.rank = t.rank;
    const Diagram dia = diagram_for(t);

    d.coxeter.assign(d.rank, std::vector<int>(d.rank, 2));
    for (int i = 0; i < d.rank; ++i) d.coxeter[i][i] = 1;
    d.max_bond = d.rank > 1 ? 2 : 1;
    for (const Edge& e : dia.edges) {
        d.coxeter[e.a][e.b] = d.coxeter[e.b][e.a] = e.bond;
        d.max_bond = std::max(d.max_bond, e.bond);
    }
    d.crystallographic = is_crystallographic(t.family);
    d.simply_laced = d.max_bond <= 3;
    d.doubly_laced_at_most = d.max_bond <= 4;

    if (d.crystallographic) {
        d.simple_norms = dia.norms;
        d.cartan_int.assign(d.rank, std::vector<int>(d.rank, 0));
        for (int i = 0; i < d.rank; ++i) d.cartan_int[i][i] = 2;
        for (const Edge& e : dia.edges) {
            if (e.bond == 3) {
                d.cartan_int[e.a][e.b] = d.cartan_int[e.b][e.a] = -1;
            } else {  // bond 4: -1 from the long side, -2 from the short side
                int lng = dia.norms[e.a] > dia.norms[e.b] ? e.a : e.b;
                int sht = lng == e.a ? e.b : e.a;
                d.cartan_int[lng][sht] = -1;
                d.cartan_int[sht][lng] = -2;
            }
        }
    }

    d.degrees = degrees_for(t);
    d.h = d.degrees.back();
    d.group_order = 1;
    for (int deg : d.degrees) {
        d.exponents.push_back(deg - 1);
        d.codegrees.push_back(deg - 2);
        d.group_order *= deg;
    }

    // classical-table validations that need no root list
    long esum = 0;
    for (int i = 0; i < d.rank; ++i) {
        esum += d.exponents[i];
        if (d.h - d.exponents[i] != d.exponents[d.rank - 1 - i])
            throw StructuralError(t.label() + ": exponent duality violated");
    }
    if (2 * esum != static_cast<long>(d.h) * d.rank)
        throw StructuralError(t.label() + ": sum of exponents != h*l/2");
    return d;
}

// ---------------------------------------------------------------------------
// generation over a generic coordinate ring

namespace {

struct IntOps {
    using El = int;
    static El zero() { return 0; }
    static El one() { return 1; }
    static bool is_zero(El x) { return x == 0; }
    static int sign(El x) { return (x > 0) - (x < 0); }
    static El add(El a, El b) { return a + b; }
    static El sub(El a, El b) { return a - b; }
    static El mul(El a, El b) { return a * b; }
    static El neg(El a) { return -a; }
};

struct ScOps {
    scalars::FieldPtr f;
    using El = Scalar;
    El zero() const { return Scalar::zero(f); }
    El one() const { return Scalar::one(f); }
    static bool is_zero(const El& x) { return x.is_zero(); }
    static int sign(const El& x) { return x.sign(); }
    static El add(const El& a, const El& b) { return a + b; }
    static El sub(const El& a, const El& b) { return a - b; }
    static El mul(const El& a, const El& b) { return a * b; }
    static El neg(const El& a) { return -a; }
};

template <class Ops>
struct BuildResult {
    using El = typename Ops::El;
    std::vector<std::vector<El>> coords;
    std::vector<std::vector<int>> tables;  // [i][r]
    std::vector<bool> positive;
    std::vector<bool> dominant;
    std::vector<El> traces;  // of c^m on V, m = 0..h-1
    std::vector<int> neg_of;
};

template <class Ops>
BuildResult<Ops> generate(const CoxeterDatum& d, const std::vector<std::vector<typename Ops::El>>& cartan,
                          Ops ops) {
    using El = typename Ops::El;
    const int l = d.rank;
    BuildResult<Ops> out;

    auto reflect = [&](int i, const std::vector<El>& c) {
        El p = ops.zero();
        for (int j = 0; j < l; ++j) p = ops.add(p, ops.mul(cartan[i][j], c[j]));
        std::vector<El> r = c;
        r[i] = ops.sub(r[i], p);
        return r;
    };

    std::map<std::vector<El>, int> index;
    auto add_root = [&](std::vector<El> c) -> int {
        auto it = index.find(c);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(out.coords.size());
        index.emplace(c, id);
        out.coords.push_back(std::move(c));
        return id;
    };

    for (int i = 0; i < l; ++i) {
        std::vector<El> e(l, ops.zero());
        e[i] = ops.one();
        add_root(std::move(e));
    }
    for (size_t head = 0; head < out.coords.size(); ++head)
        for (int i = 0; i < l; ++i) add_root(reflect(i, out.coords[head]));

    const int n = static_cast<int>(out.coords.size());
    if (n != d.h * l)
        throw StructuralError(d.type.label() + ": closure produced " + std::to_string(n) +
                              " roots, expected h*l = " + std::to_string(d.h * l));

    out.tables.assign(l, std::vector<int>(n));
    for (int i = 0; i < l; ++i)
        for (int r = 0; r < n; ++r) out.tables[i][r] = index.at(reflect(i, out.coords[r]));

    out.positive.assign(n, false);
    out.dominant.assign(n, false);
    out.neg_of.assign(n, -1);
    for (int r = 0; r < n; ++r) {
        bool all_nonneg = true, all_nonpos = true;
        for (const El& c : out.coords[r]) {
            int s = ops.sign(c);
            if (s < 0) all_nonneg = false;
            if (s > 0) all_nonpos = false;
        }
        if (all_nonneg == all_nonpos)
            throw StructuralError(d.type.label() + ": mixed-sign root coordinates");
        out.positive[r] = all_nonneg;

        bool dom = true;
        for (int i = 0; i < l && dom; ++i) {
            El p = ops.zero();
            for (int j = 0; j < l; ++j) p = ops.add(p, ops.mul(cartan[i][j], out.coords[r][j]));
            if (ops.sign(p) < 0) dom = false;
        }
        out.dominant[r] = dom;

        std::vector<El> negated;
        for (const El& c : out.coords[r]) negated.push_back(ops.neg(c));
        out.neg_of[r] = index.at(negated);
    }

    // trace of powers of the Coxeter element on V: coordinates transform by
    // S_i = I except row i, where (S_i)_{ij} = delta_{ij} - A_{ij}; applying
    // s_l first gives the matrix product S_1 S_2 ... S_l
    auto matmul = [&](const std::vector<std::vector<El>>& a, const std::vector<std::vector<El>>& b) {
        std::vector<std::vector<El>> r(l, std::vector<El>(l, ops.zero()));
        for (int i = 0; i < l; ++i)
            for (int k = 0; k < l; ++k)
                for (int j = 0; j < l; ++j)
                    r[i][j] = ops.add(r[i][j], ops.mul(a[i][k], b[k][j]));
        return r;
    };
    std::vector<std::vector<El>> cox(l, std::vector<El>(l, ops.zero()));
    for (int i = 0; i < l; ++i) cox[i][i] = ops.one();
    for (int i = 0; i < l; ++i) {
        std::vector<std::vector<El>> s(l, std::vector<El>(l, ops.zero()));
        for (int a = 0; a < l; ++a) s[a][a] = ops.one();
        for (int j = 0; j < l; ++j) s[i][j] = ops.sub(s[i][j], cartan[i][j]);
        cox = matmul(cox, s);
    }
    std::vector<std::vector<El>> pw(l, std::vector<El>(l, ops.zero()));
    for (int i = 0; i < l; ++i) pw[i][i] = ops.one();
    for (int m = 0; m < d.h; ++m) {
        El tr = ops.zero();
        for (int i = 0; i < l; ++i) tr = ops.add(tr, pw[i][i]);
        out.traces.push_back(tr);
        pw = matmul(pw, cox);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// parabolic classification

namespace {

GroupType classify_component(const CoxeterDatum& d, const std::vector<int>& nodes) {
    const int r = static_cast<int>(nodes.size());
    auto bond = [&](int a, int b) { return d.coxeter[nodes[a]][nodes[b]]; };

    if (r == 1) return {Family::A, 1, 0};
    if (r == 2) {
        int m = bond(0, 1);
        if (m == 3) return {Family::A, 2, 0};
        if (m == 4) return {Family::B, 2, 0};
        return {Family::I2, 2, m};
    }

    std::vector<std::vector<int>> adj(r);
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            if (bond(a, b) >= 3) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }

    std::vector<int> deg3;
    for (int a = 0; a < r; ++a) {
        if (adj[a].size() > 3)
            throw StructuralError("unclassifiable parabolic component: node degree > 3");
        if (adj[a].size() == 3) deg3.push_back(a);
    }

    if (deg3.empty()) {
        // a path; walk it from an endpoint and record the bond sequence
        int start = -1;
        for (int a = 0; a < r; ++a)
            if (adj[a].size() == 1) start = a;
        if (start < 0) throw StructuralError("unclassifiable parabolic component: cycle");
        std::vector<int> order = {start};
        int prev = -1, cur = start;
        while (static_cast<int>(order.size()) < r) {
            int nxt = -1;
            for (int b : adj[cur])
                if (b != prev) nxt = b;
            if (nxt < 0) throw StructuralError("unclassifiable parabolic component: broken path");
            order.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        std::vector<int> bonds;
        for (int i = 0; i + 1 < r; ++i) bonds.push_back(bond(order[i], order[i + 1]));
        int n3 = 0, n4 = 0, n5 = 0;
        for (int b : bonds) (b == 3 ? n3 : b == 4 ? n4 : n5)++;
        if (n4 == 0 && n5 == 0) return {Family::A, r, 0};
        if (n4 == 1 && n5 == 0) {
            if (bonds.front() == 4 || bonds.back() == 4) return {Family::B, r, 0};
            if (r == 4 && bonds[1] == 4) return {Family::F, 4, 0};
        }
        if (n5 == 1 && n4 == 0 && (bonds.front() == 5 || bonds.back() == 5) && (r == 3 || r == 4))
            return {Family::H, r, 0};
        throw StructuralError("unclassifiable parabolic component: bad path bonds");
    }

    if (deg3.size() != 1)
        throw StructuralError("unclassifiable parabolic component: multiple branch nodes");
    for (int a = 0; a < r; ++a)
        for (int b : adj[a])
            if (bond(a, b) != 3)
                throw StructuralError("unclassifiable parabolic component: branched multi-bond");

    // leg lengths from the branch node
    std::vector<int> legs;
    int center = deg3[0];
    for (int b : adj[center]) {
        int len = 1, prev = center, cur = b;
        for (;;) {
            int nxt = -1;
            for (int x : adj[cur])
                if (x != prev) nxt = x;
            if (nxt < 0) break;
            prev = cur;
            cur = nxt;
            ++len;
        }
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1) return {Family::D, legs[2] + 3, 0};
    if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4)
        return {Family::E, legs[2] + 4, 0};
    throw StructuralError("unclassifiable parabolic component: bad leg profile");
}

}  // namespace

std::vector<GroupType> classify_parabolic(const CoxeterDatum& datum, const std::vector<int>& J) {
    for (int i : J)
        if (i < 0 || i >= datum.rank) throw std::invalid_argument("classify_parabolic: bad index");
    std::vector<GroupType> out;
    std::vector<bool> seen(datum.rank, false);
    for (int i : J) {
        if (seen[i]) continue;
        // flood the component of i within J
        std::vector<int> comp = {i};
        seen[i] = true;
        for (size_t head = 0; head < comp.size(); ++head)
            for (int j : J)
                if (!seen[j] && datum.coxeter[comp[head]][j] >= 3) {
                    seen[j] = true;
                    comp.push_back(j);
                }
        out.push_back(classify_component(datum, comp));
    }
    std::sort(out.begin(), out.end(),
              [](const GroupType& a, const GroupType& b) { return a.label() < b.label(); });
    return out;
}

std::vector<int> parabolic_degrees(const std::vector<GroupType>& components) {
    std::vector<int> deg;
    for (const GroupType& t : components) {
        auto d = degrees_for(t);
        deg.insert(deg.end(), d.begin(), d.end());
    }
    std::sort(deg.begin(), deg.end());
    return deg;
}

std::vector<int> all_simple_indices(const CoxeterDatum& d) {
    std::vector<int> J(d.rank);
    std::iota(J.begin(), J.end(), 0);
    return J;
}

// ---------------------------------------------------------------------------
// RootSystem

int Orbit::distance_of(int root_index) const {
    auto it = std::lower_bound(members.begin(), members.end(), root_index);
    if (it == members.end() || *it != root_index)
        throw std::invalid_argument("Orbit::distance_of: root not in orbit");
    return distances[it - members.begin()];
}

const Orbit& RootSystem::orbit_labeled(const std::string& label) const {
    for (const Orbit& o : orbits)
        if (o.label == label) return o;
    throw std::invalid_argument("no orbit labeled '" + label + "' in " + datum.type.label());
}

std::vector<int> RootSystem::coxeter_power(int m) const {
    m = ((m % coxeter_order) + coxeter_order) % coxeter_order;
    std::vector<int> p(nroots);
    std::iota(p.begin(), p.end(), 0);
    for (int k = 0; k < m; ++k)
        for (int r = 0; r < nroots; ++r) p[r] = coxeter_perm[p[r]];
    return p;
}

int RootSystem::fixed_points_of_power(int m, const std::vector<int>& root_subset) const {
    auto p = coxeter_power(m);
    int cnt = 0;
    for (int r : root_subset)
        if (p[r] == r) ++cnt;
    return cnt;
}

bool RootSystem::trace_is_zero(int m) const {
    m = ((m % datum.h) + datum.h) % datum.h;
    if (datum.crystallographic) return traces_int_[m] == 0;
    return traces_sc_[m].is_zero();
}

std::string RootSystem::trace_repr(int m) const {
    m = ((m % datum.h) + datum.h) % datum.h;
    if (datum.crystallographic) return std::to_string(traces_int_[m]);
    return traces_sc_[m].to_string();
}

namespace {

template <class Ops>
void fill_common(RootSystem& rs, const CoxeterDatum& d, const BuildResult<Ops>& b) {
    const int n = static_cast<int>(b.coords.size());
    rs.nroots = n;
    rs.positive = b.positive;
    rs.simple_tables = b.tables;
    rs.neg_of = b.neg_of;

    // orbits: connected components of the simple-reflection graph
    std::vector<int> orbit_of(n, -1);
    std::vector<std::vector<int>> members;
    for (int r = 0; r < n; ++r) {
        if (orbit_of[r] >= 0) continue;
        int id = static_cast<int>(members.size());
        members.emplace_back();
        std::deque<int> queue = {r};
        orbit_of[r] = id;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            members[id].push_back(x);
            for (int i = 0; i < d.rank; ++i) {
                int y = b.tables[i][x];
                if (orbit_of[y] < 0) {
                    orbit_of[y] = id;
                    queue.push_back(y);
                }
            }
        }
    }

    for (auto& m : members) {
        std::sort(m.begin(), m.end());
        Orbit o;
        o.members = std::move(m);

        for (int r : o.members)
            if (b.dominant[r]) {
                if (o.dominant >= 0)
                    throw StructuralError(d.type.label() + ": two dominant roots in one orbit");
                o.dominant = r;
            }
        if (o.dominant < 0)
            throw StructuralError(d.type.label() + ": orbit without dominant root");

        for (int i = 0; i < d.rank; ++i)
            if (b.tables[i][o.dominant] == o.dominant) o.stabilizer.push_back(i);
        o.stabilizer_type = classify_parabolic(d, o.stabilizer);

        // orbit-stabilizer check: |orbit| * |W_J| = |W|
        Int wj = 1;
        for (int deg : parabolic_degrees(o.stabilizer_type)) wj *= deg;
        if (Int(static_cast<long>(o.members.size())) * wj != d.group_order)
            throw StructuralError(d.type.label() +
                                  ": orbit-stabilizer count mismatch (stabilizer not parabolic?)");

        // BFS distances from the dominant representative
        std::map<int, int> dist;
        dist[o.dominant] = 0;
        std::deque<int> queue = {o.dominant};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int i = 0; i < d.rank; ++i) {
                int y = b.tables[i][x];
                if (y != x && !dist.count(y)) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if (dist.size() != o.members.size())
            throw StructuralError(d.type.label() + ": orbit member unreachable from dominant");
        for (int r : o.members) o.distances.push_back(dist.at(r));
        rs.orbits.push_back(std::move(o));
    }

    // coxeter element c = s_1 s_2 ... s_l, rightmost factor applied first
    rs.coxeter_perm.assign(n, 0);
    for (int r = 0; r < n; ++r) {
        int x = r;
        for (int i = d.rank - 1; i >= 0; --i) x = b.tables[i][x];
        rs.coxeter_perm[r] = x;
    }
    {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        int order = 0;
        do {
            for (int r = 0; r < n; ++r) p[r] = rs.coxeter_perm[p[r]];
            ++order;
        } while (!std::is_sorted(p.begin(), p.end()) && order <= d.h + 1);
        std::vector<int> q(n);
        std::iota(q.begin(), q.end(), 0);
        if (p != q || order != d.h)
            throw StructuralError(d.type.label() + ": Coxeter element order " +
                                  std::to_string(order) + " != h = " + std::to_string(d.h) +
                                  (p != q ? " (not identity)" : ""));
        rs.coxeter_order = order;
        // free action: every cycle has length exactly h
        std::vector<bool> vis(n, false);
        for (int r = 0; r < n; ++r) {
            if (vis[r]) continue;
            int len = 0, x = r;
            do {
                vis[x] = true;
                x = rs.coxeter_perm[x];
                ++len;
            } while (x != r);
            if (len != d.h)
                throw StructuralError(d.type.label() + ": Coxeter cycle of length " +
                                      std::to_string(len) + " != h");
        }
    }
}

void assign_labels(RootSystem& rs) {
    if (rs.orbits.size() == 1) {
        rs.orbits[0].label = "all";
        return;
    }
    const CoxeterDatum& d = rs.datum;
    if (d.crystallographic) {
        // label by squared length of the dominant member, via the symmetrized
        // Gram form 2(a,a) = sum c_i c_j A_ij norm_i
        auto sqnorm2 = [&](int r) {
            long s = 0;
            for (int i = 0; i < d.rank; ++i)
                for (int j = 0; j < d.rank; ++j)
                    s += static_cast<long>(rs.int_coords[r][i]) * rs.int_coords[r][j] *
                         d.cartan_int[i][j] * d.simple_norms[i];
            return s;
        };
        long n0 = sqnorm2(rs.orbits[0].dominant), n1 = sqnorm2(rs.orbits[1].dominant);
        if (n0 == n1) throw StructuralError(d.type.label() + ": equal-length orbits");
        bool first_long = n0 > n1;
        if (d.type.family == Family::C) first_long = !first_long;  // C swaps the labels
        rs.orbits[0].label = first_long ? "long" : "short";
        rs.orbits[1].label = first_long ? "short" : "long";
    } else {
        // I2(m), m even: equal-length orbits; by convention the orbit of the
        // first simple root is "long"
        bool first_has_s1 =
            std::binary_search(rs.orbits[0].members.begin(), rs.orbits[0].members.end(), 0);
        rs.orbits[0].label = first_has_s1 ? "long" : "short";
        rs.orbits[1].label = first_has_s1 ? "short" : "long";
    }
    // long before short, deterministically
    std::sort(rs.orbits.begin(), rs.orbits.end(),
              [](const Orbit& a, const Orbit& b) { return a.label < b.label; });
}

}  // namespace

RootSystem build_root_system(const CoxeterDatum& datum) {
    RootSystem rs;
    rs.datum = datum;
    const int l = datum.rank;

    if (datum.crystallographic) {
        std::vector<std::vector<int>> cartan = datum.cartan_int;
        auto b = generate(datum, cartan, IntOps{});
        rs.int_coords = b.coords;
        fill_common(rs, datum, b);
        rs.heights.resize(rs.nroots);
        for (int r = 0; r < rs.nroots; ++r)
            rs.heights[r] = std::accumulate(rs.int_coords[r].begin(), rs.int_coords[r].end(), 0);
        rs.traces_int_.assign(b.traces.begin(), b.traces.end());
    } else {
        rs.field = scalars::make_field(datum.max_bond);
        ScOps ops{rs.field};
        std::vector<std::vector<Scalar>> cartan(l, std::vector<Scalar>(l, ops.zero()));
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j)
                cartan[i][j] = i == j ? Scalar::from_rational(rs.field, 2)
                                      : -Scalar::two_cos(rs.field, datum.coxeter[i][j]);
        auto b = generate(datum, cartan, ops);
        rs.scalar_coords = b.coords;
        fill_common(rs, datum, b);
        rs.traces_sc_ = std::move(b.traces);
    }
    assign_labels(rs);
    return rs;
}

int mv_formula(const RootSystem& rs, int root_index) {
    if (!rs.datum.simply_laced)
        throw std::invalid_argument("mv_formula: requires a simply-laced type");
    const int ht0 = rs.datum.h - 1;
    int ht = rs.heights[root_index];
    return rs.positive[root_index] ? ht0 - ht : ht0 - ht - 1;
}

IntPoly height_poly(const RootSystem& rs) {
    if (!rs.datum.crystallographic)
        throw std::invalid_argument("height_poly: requires a crystallographic type");
    IntPoly p;
    for (int r = 0; r < rs.nroots; ++r)
        if (rs.positive[r]) p = p + IntPoly::monomial(rs.heights[r], 1);
    return p;
}

namespace {

struct PermHash {
    size_t operator()(const std::vector<uint16_t>& v) const {
        size_t h = 1469598103934665603ull;
        for (uint16_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

IntPoly poincare_bfs(const RootSystem& rs, const std::vector<int>& J, long bound) {
    Int size = 1;
    for (int deg : parabolic_degrees(classify_parabolic(rs.datum, J))) size *= deg;
    if (size > bound)
        throw OracleBoundExceeded("poincare_bfs: |W_J| = " + size.get_str() +
                                  " exceeds the bound " + std::to_string(bound));

    const int n = rs.nroots;
    std::vector<uint16_t> identity(n);
    for (int r = 0; r < n; ++r) identity[r] = static_cast<uint16_t>(r);

    std::unordered_set<std::vector<uint16_t>, PermHash> seen;
    seen.insert(identity);
    std::vector<std::vector<uint16_t>> frontier = {identity};
    std::vector<Int> counts = {1};
    while (!frontier.empty()) {
        std::vector<std::vector<uint16_t>> next;
        for (const auto& g : frontier)
            for (int i : J) {
                // right multiplication: (g s_i)(r) = g(s_i(r))
                std::vector<uint16_t> h(n);
                for (int r = 0; r < n; ++r) h[r] = g[rs.simple_tables[i][r]];
                if (seen.insert(h).second) next.push_back(std::move(h));
            }
        if (next.empty()) break;
        counts.push_back(static_cast<long>(next.size()));
        frontier = std::move(next);
    }
    if (Int(static_cast<long>(seen.size())) != size)
        throw StructuralError("poincare_bfs: enumerated " + std::to_string(seen.size()) +
                              " elements, expected " + size.get_str());
    return IntPoly(std::move(counts));
}

nlohmann::json RootSystem::to_json() const {
    nlohmann::json j;
    j["type"] = datum.type.label();
    j["rank"] = datum.rank;
    j["h"] = datum.h;
    j["degrees"] = datum.degrees;
    j["exponents"] = datum.exponents;
    j["codegrees"] = datum.codegrees;
    j["roots"] = nlohmann::json::array();
    for (int r = 0; r < nroots; ++r) {
        nlohmann::json root;
        if (datum.crystallographic) {
            root["coords"] = int_coords[r];
            root["height"] = heights[r];
        } else {
            nlohmann::json cs = nlohmann::json::array();
            for (const Scalar& c : scalar_coords[r]) cs.push_back(c.to_json());
            root["coords"] = cs;
        }
        root["positive"] = static_cast<bool>(positive[r]);
        j["roots"].push_back(std::move(root));
    }
    j["orbits"] = nlohmann::json::array();
    for (const Orbit& o : orbits) {
        nlohmann::json jo;
        jo["label"] = o.label;
        jo["members"] = o.members;
        jo["dominant"] = o.dominant;
        jo["stabilizer"] = o.stabilizer;
        jo["stabilizer_type"] = nlohmann::json::array();
        for (const GroupType& t : o.stabilizer_type) jo["stabilizer_type"].push_back(t.label());
        jo["distances"] = o.distances;
        j["orbits"].push_back(std::move(jo));
    }
    return j;
}

}  // namespace rootsys

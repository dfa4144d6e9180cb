#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rootfd/qpoly.hpp"
#include "rootfd/scalars.hpp"

// Root systems of the irreducible finite real reflection groups: generation
// from Cartan data, positivity, heights, orbit structure with dominant
// representatives and parabolic stabilizers, Coxeter elements, and
// minimal-coset-length distances.
namespace rootsys {

struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// the group-BFS oracle refuses groups larger than the configured bound
struct OracleBoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Family { A, B, C, D, E, F, H, I2 };

struct GroupType {
    Family family = Family::A;
    int rank = 1;
    int bond = 0;  // I2 only

    // "A5", "E8", "I2(14)"; case-insensitive; I2(3)/I2(4) canonicalize to
    // A2/B2; C is B with swapped long/short labels
    static GroupType parse(const std::string& spec, int max_i2_bond = 60);
    std::string label() const;
    bool operator==(const GroupType& o) const = default;
};

struct CoxeterDatum {
    GroupType type;
    int rank = 0;
    std::vector<std::vector<int>> coxeter;     // m_ij, m_ii = 1
    std::vector<std::vector<int>> cartan_int;  // crystallographic types only
    std::vector<int> simple_norms;             // squared lengths, crystallographic only
    std::vector<int> degrees, exponents, codegrees;
    int h = 0;
    int max_bond = 0;
    bool crystallographic = false;
    bool simply_laced = false;
    bool doubly_laced_at_most = false;
    qpoly::Int group_order;  // prod degrees

    qpoly::IntPoly codegree_poly() const;  // sum q^{d*_i}
    qpoly::IntPoly exponent_poly() const;  // sum q^{e_i}
};

CoxeterDatum build_datum(const GroupType& t);

// connected components of the sub-diagram on J, classified against the
// finite-type catalog (D3 -> A3, I2(3) -> A2 and so on)
std::vector<GroupType> classify_parabolic(const CoxeterDatum& datum,
                                          const std::vector<int>& J);
std::vector<int> parabolic_degrees(const std::vector<GroupType>& components);

struct Orbit {
    std::vector<int> members;          // root indices, sorted
    int dominant = -1;                 // root index
    std::vector<int> stabilizer;       // simple indices J with s_i(dom) = dom
    std::vector<GroupType> stabilizer_type;
    std::vector<int> distances;        // parallel to members; BFS from dominant
    std::string label;                 // "all" | "long" | "short"

    int distance_of(int root_index) const;
};

class RootSystem {
public:
    CoxeterDatum datum;
    int nroots = 0;

    // coordinates over the simple roots; exactly one of the two is populated
    std::vector<std::vector<int>> int_coords;
    std::vector<std::vector<scalars::Scalar>> scalar_coords;
    scalars::FieldPtr field;  // non-crystallographic only

    std::vector<bool> positive;
    std::vector<int> heights;               // crystallographic only
    std::vector<int> neg_of;                // index of the negated root
    std::vector<std::vector<int>> simple_tables;  // [i][r] = index of s_i(r)
    std::vector<Orbit> orbits;

    std::vector<int> coxeter_perm;  // c = s_1 s_2 ... s_l, rightmost applied first
    int coxeter_order = 0;

    const Orbit& orbit_labeled(const std::string& label) const;
    // applies the permutation power: c^m as a permutation of root indices
    std::vector<int> coxeter_power(int m) const;
    int fixed_points_of_power(int m, const std::vector<int>& root_subset) const;

    // trace of c^m on V, exact; integer for crystallographic types
    bool trace_is_zero(int m) const;
    std::string trace_repr(int m) const;

    nlohmann::json to_json() const;

private:
    friend RootSystem build_root_system(const CoxeterDatum&);
    std::vector<long> traces_int_;            // crystallographic
    std::vector<scalars::Scalar> traces_sc_;  // non-crystallographic
};

RootSystem build_root_system(const CoxeterDatum& datum);
inline RootSystem build_root_system(const GroupType& t) {
    return build_root_system(build_datum(t));
}

// ht(alpha_0) - ht(alpha), minus one more on the negative side; simply-laced only
int mv_formula(const RootSystem& rs, int root_index);

// sum over positive roots of q^{ht(alpha)}; crystallographic only
qpoly::IntPoly height_poly(const RootSystem& rs);

// length generating function of W_J by explicit element enumeration;
// throws OracleBoundExceeded when |W_J| > bound
qpoly::IntPoly poincare_bfs(const RootSystem& rs, const std::vector<int>& J,
                            long bound = 1000000);

std::vector<int> all_simple_indices(const CoxeterDatum& d);

}  // namespace rootsys

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rootfd/qpoly.hpp"
#include "rootfd/rootsys.hpp"

// Fake-degree polynomials of the reflection action on root orbits, computed
// by independent methods (orbit BFS distances, degree quotients, explicit
// group enumeration), plus checkers for every polynomial identity,
// divisibility, gcd and table claim.
namespace fakedeg {

using qpoly::IntPoly;
using rootsys::Orbit;
using rootsys::RootSystem;

// "all" is the union of every orbit; "long"/"short" pick one orbit and are
// valid only when the type has two
std::vector<const Orbit*> select_orbits(const RootSystem& rs, const std::string& selector);
// every nonempty union of orbits, keyed "long", "short", "all"
std::vector<std::pair<std::string, std::vector<const Orbit*>>> all_selectors(
    const RootSystem& rs);

// sum over selected orbits of sum_alpha q^{d(alpha_0, alpha)}
IntPoly fakedeg_bfs(const RootSystem& rs, const std::vector<const Orbit*>& sel);
IntPoly fakedeg_bfs(const RootSystem& rs, const std::string& selector);

// prod_i [d_i]_q for the full group
IntPoly group_poincare(const rootsys::CoxeterDatum& datum);
// per orbit, the exact quotient of the group Poincare product by the
// stabilizer's, summed over the selection
IntPoly fakedeg_quotient(const RootSystem& rs, const std::vector<const Orbit*>& sel);
IntPoly fakedeg_quotient(const RootSystem& rs, const std::string& selector);

struct CrossCheck {
    bool pass = false;
    IntPoly from_bfs, from_quotient;
    std::optional<IntPoly> from_group_bfs;  // only when |W| fits the oracle bound
};
CrossCheck crosscheck(const RootSystem& rs, const std::string& selector,
                      long bfs_bound = 1000000,
                      const std::optional<IntPoly>& cached_group_poly = std::nullopt);

// [h]_q divides f^{Phi'}
bool verify_thm_i(const RootSystem& rs, const std::vector<const Orbit*>& sel);

struct ThmIiResult {
    bool pass = false;
    IntPoly fake_degree, expected;  // expected = [h]_q * sum q^{d*_i}
};
ThmIiResult verify_thm_ii(const RootSystem& rs);

struct CspResult {
    bool pass = true;
    // per m: fixed-point count of c^m vs the evaluation f(zeta_h^m)
    std::vector<int> fixed_counts;
    std::vector<bool> eval_matches;
};
CspResult csp_check(const RootSystem& rs, const std::vector<const Orbit*>& sel);

struct TableRow {
    std::string orbit_label;
    IntPoly quotient, expected_quotient;
    IntPoly gcd, expected_gcd;
    std::vector<std::string> stabilizer, expected_stabilizer;
    bool pass = false;
};
TableRow table_row(const RootSystem& rs, const std::string& orbit_label);

struct GcdOneResult {
    bool pass = false;
    IntPoly gcd;
    std::vector<std::string> traces;
    bool gcd_is_one = false, traces_nonzero = false;
};
// single-orbit types only
GcdOneResult verify_prop_gcd_one(const RootSystem& rs);

// at-most-doubly-laced types: sum q^{d*_i} divides f for every nonempty union
bool verify_prop_doubly_laced(const RootSystem& rs);

struct SymAntisym {
    bool pass = false;
    IntPoly f_plus, f_minus;
};
SymAntisym sym_antisym(const RootSystem& rs, const Orbit& orbit);

struct FuResult {
    bool pass = false;
    IntPoly f_u;
};
// simply-laced: [2]_q * f^U = q^2 [h-2]_q sum q^{e_i}, and f^U(1) = (h-2)l/2
FuResult verify_fU(const RootSystem& rs);

struct Claim {
    std::string id;
    std::string ref;     // human-readable provenance of the claim
    std::string status;  // "pass" | "fail" | "na"
    nlohmann::json witness;  // polynomials or counterexample data on failure
};

struct VerificationReport {
    std::string type;
    std::vector<Claim> claims;
    bool all_passed() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

struct VerifyOptions {
    long bfs_bound = 1000000;
};
VerificationReport verify_all(const rootsys::GroupType& t, const VerifyOptions& opts = {});

}  // namespace fakedeg

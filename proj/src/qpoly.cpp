#include "rootfd/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace qpoly {

namespace {
const Int kZero = 0;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int v) {
    IntPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

IntPoly IntPoly::monomial(int e, Int c) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(e + 1, kZero);
        p.c_[e] = std::move(c);
    }
    return p;
}

const Int& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

Int IntPoly::eval_at_one() const {
    Int s = 0;
    for (const Int& c : c_) s += c;
    return s;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), kZero);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), kZero);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> r(c_);
    for (Int& c : r) c = -c;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, kZero);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::inflate(int k) const {
    if (k < 1) throw std::invalid_argument("inflate: k must be >= 1");
    if (is_zero()) return IntPoly();
    std::vector<Int> r((c_.size() - 1) * k + 1, kZero);
    for (size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return IntPoly(std::move(r));
}

std::string IntPoly::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (first) {
            if (a < 0) out << "-";
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        Int mag = abs(a);
        if (i == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            out << "q";
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

nlohmann::json IntPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const Int& c : c_) {
        if (c.fits_slong_p())
            arr.push_back(static_cast<long>(c.get_si()));
        else
            arr.push_back(c.get_str());
    }
    return nlohmann::json{{"coeffs", arr}};
}

IntPoly one() { return IntPoly::constant(1); }

IntPoly q_int(int n) {
    if (n < 1) throw std::invalid_argument("q_int: n must be >= 1");
    return IntPoly(std::vector<Int>(n, 1));
}

IntPoly q_int_scaled(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("q_int_scaled: n, k must be >= 1");
    return q_int(n).inflate(k);
}

IntPoly exact_div(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
    if (f.is_zero()) return IntPoly();
    if (f.degree() < g.degree())
        throw DivisibilityError("exact_div: degree of dividend below divisor");

    // long division over Q; quotient must come out integral with zero remainder
    std::vector<mpq_class> rem(f.coeffs().begin(), f.coeffs().end());
    const int dg = g.degree();
    const mpq_class lead(g.coeff(dg));
    std::vector<mpq_class> quot(f.degree() - dg + 1, mpq_class(0));
    for (int i = f.degree(); i >= dg; --i) {
        mpq_class c = rem[i] / lead;
        quot[i - dg] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) rem[i - dg + j] -= c * mpq_class(g.coeff(j));
    }
    for (int i = 0; i < dg; ++i)
        if (rem[i] != 0) throw DivisibilityError("exact_div: nonzero remainder");
    std::vector<Int> out;
    out.reserve(quot.size());
    for (mpq_class& c : quot) {
        c.canonicalize();
        if (c.get_den() != 1) throw DivisibilityError("exact_div: non-integer quotient");
        out.push_back(c.get_num());
    }
    return IntPoly(std::move(out));
}

bool divides(const IntPoly& g, const IntPoly& f) {
    try {
        exact_div(f, g);
        return true;
    } catch (const DivisibilityError&) {
        return false;
    }
}

namespace {

// remainder of a by b over Q; b nonzero
std::vector<mpq_class> rat_mod(std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    const int db = static_cast<int>(b.size()) - 1;
    const mpq_class& lead = b.back();
    while (static_cast<int>(a.size()) - 1 >= db) {
        mpq_class c = a.back() / lead;
        int shift = static_cast<int>(a.size()) - 1 - db;
        for (int j = 0; j <= db; ++j) a[shift + j] -= c * b[j];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

}  // namespace

IntPoly gcd_primitive(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("gcd_primitive: both inputs zero");
    std::vector<mpq_class> a(f.coeffs().begin(), f.coeffs().end());
    std::vector<mpq_class> b(g.coeffs().begin(), g.coeffs().end());
    while (!b.empty()) {
        auto r = rat_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    // normalize: clear denominators, divide by content, positive leading coeff
    Int den_lcm = 1;
    for (mpq_class& c : a) {
        c.canonicalize();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    std::vector<Int> z;
    z.reserve(a.size());
    for (const mpq_class& c : a) z.push_back(Int(c * mpq_class(den_lcm)));
    Int content = 0;
    for (const Int& c : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (z.back() < 0) content = -content;
    for (Int& c : z) c /= content;
    return IntPoly(std::move(z));
}

IntPoly cyclotomic(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1");
    // Phi_d for each divisor d of n, in increasing order
    std::vector<int> divs;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) divs.push_back(d);
    std::vector<IntPoly> phi;
    for (size_t k = 0; k < divs.size(); ++k) {
        int d = divs[k];
        IntPoly num = IntPoly::monomial(d, 1) - one();  // q^d - 1
        for (size_t j = 0; j < k; ++j)
            if (d % divs[j] == 0) num = exact_div(num, phi[j]);
        phi.push_back(std::move(num));
    }
    return phi.back();
}

Int RootOfUnityValue::integer_value() const {
    if (!is_integer()) throw std::logic_error("RootOfUnityValue: not an integer");
    return rep.coeff(0);
}

RootOfUnityValue eval_at_root_of_unity(const IntPoly& f, int n, long m) {
    if (n < 1) throw std::invalid_argument("eval_at_root_of_unity: n must be >= 1");
    // substitute exponents e -> e*m mod n, i.e. reduce modulo q^n - 1
    std::vector<Int> folded(n, Int(0));
    for (int e = 0; e <= f.degree(); ++e) {
        long r = (static_cast<long>(e) * m) % n;
        if (r < 0) r += n;
        folded[r] += f.coeff(e);
    }
    IntPoly red{std::move(folded)};
    // reduce modulo Phi_n (monic, so division stays integral)
    const IntPoly phi = cyclotomic(n);
    std::vector<Int> r(red.coeffs());
    const int dp = phi.degree();
    while (static_cast<int>(r.size()) - 1 >= dp) {
        Int c = r.back();
        int shift = static_cast<int>(r.size()) - 1 - dp;
        for (int j = 0; j <= dp; ++j) r[shift + j] -= c * phi.coeff(j);
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return RootOfUnityValue{IntPoly(std::move(r))};
}

IntPoly palindromic_descend(const IntPoly& P) {
    const int deg = P.degree();
    if (deg < 0 || deg % 2 != 0)
        throw std::invalid_argument("palindromic_descend: degree must be even");
    const int d = deg / 2;
    for (int i = 0; i <= deg; ++i)
        if (P.coeff(i) != P.coeff(deg - i))
            throw std::invalid_argument("palindromic_descend: input not palindromic");

    // peel leading coefficients against x^d * (x + 1/x)^k; rem is symmetric,
    // indexed by exponent offset from x^d: rem[j] = coeff of x^{d +- j}
    std::vector<Int> rem(d + 1);
    for (int j = 0; j <= d; ++j) rem[j] = P.coeff(d + j);
    std::vector<Int> psi(d + 1, Int(0));
    for (int k = d; k >= 0; --k) {
        Int c = rem[k];
        psi[k] = c;
        if (c == 0) continue;
        // (x + 1/x)^k = sum_j binom(k, j) x^{k - 2j}; rem tracks the
        // nonnegative offsets only, symmetry covers the rest
        Int binom = 1;
        for (int j = 0; k - 2 * j >= 0; ++j) {
            rem[k - 2 * j] -= c * binom;
            binom = binom * (k - j) / (j + 1);
        }
    }
    for (int j = 0; j <= d; ++j)
        if (rem[j] != 0) throw std::logic_error("palindromic_descend: nonzero residue");
    return IntPoly(std::move(psi));
}

}  // namespace qpoly

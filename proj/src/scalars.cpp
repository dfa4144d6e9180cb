#include "rootfd/scalars.hpp"

#include <sstream>

namespace scalars {

namespace {

std::vector<Rat> to_rat(const qpoly::IntPoly& p) {
    std::vector<Rat> v;
    v.reserve(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) v.emplace_back(p.coeff(i));
    return v;
}

Rat eval(const std::vector<Rat>& p, const Rat& x) {
    Rat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<Rat> derivative(const std::vector<Rat>& p) {
    std::vector<Rat> d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    return d;
}

std::vector<Rat> negmod(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r = a;
    while (!r.empty() && r.back() == 0) r.pop_back();
    const size_t db = b.size() - 1;
    while (!r.empty() && r.size() - 1 >= db) {
        Rat c = r.back() / b.back();
        size_t shift = r.size() - 1 - db;
        for (size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.size() <= db) break;
    }
    for (Rat& c : r) c = -c;
    return r;
}

}  // namespace

int sturm_sign_changes(const std::vector<std::vector<Rat>>& chain, const Rat& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        Rat v = eval(p, x);
        int s = sgn(v);
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
    }
    return changes;
}

int sturm_roots_in(const FieldSpec& spec, const Rat& a, const Rat& b) {
    return sturm_sign_changes(spec.sturm, a) - sturm_sign_changes(spec.sturm, b);
}

FieldPtr make_field(int M) {
    if (M < 3) throw std::invalid_argument("make_field: bond must be >= 3");
    auto spec = std::make_shared<FieldSpec>();
    spec->bond = M;
    spec->modulus = qpoly::palindromic_descend(qpoly::cyclotomic(2 * M));
    spec->degree = spec->modulus.degree();

    // Sturm chain
    std::vector<Rat> f = to_rat(spec->modulus);
    spec->sturm.push_back(f);
    std::vector<Rat> g = derivative(f);
    while (!g.empty()) {
        spec->sturm.push_back(g);
        auto r = negmod(f, g);
        f = std::move(g);
        g = std::move(r);
    }

    // isolate the largest root inside (-2, 2); shrink from the left until
    // exactly one root remains
    Rat lo(-2), hi(2);
    while (sturm_roots_in(*spec, lo, hi) > 1) {
        Rat mid = (lo + hi) / 2;
        if (sturm_roots_in(*spec, mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    if (sturm_roots_in(*spec, lo, hi) != 1)
        throw std::logic_error("make_field: root isolation failed");
    spec->iso_lo = lo;
    spec->iso_hi = hi;
    return spec;
}

Scalar::Scalar(FieldPtr spec, std::vector<Rat> coords)
    : spec_(std::move(spec)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != spec_->degree)
        throw std::invalid_argument("Scalar: coordinate length mismatch");
    for (Rat& c : coords_) c.canonicalize();
}

Scalar Scalar::from_rational(FieldPtr spec, Rat v) {
    std::vector<Rat> c(spec->degree, Rat(0));
    c[0] = std::move(v);
    return Scalar(std::move(spec), std::move(c));
}

Scalar Scalar::generator(FieldPtr spec) {
    std::vector<Rat> c(spec->degree, Rat(0));
    if (spec->degree == 1) {
        // linear modulus y - r: the generator is the rational root itself
        c[0] = -Rat(spec->modulus.coeff(0));
    } else {
        c[1] = 1;
    }
    return Scalar(std::move(spec), std::move(c));
}

Scalar Scalar::two_cos(FieldPtr spec, int k) {
    if (k == 2) return zero(std::move(spec));
    if (k == 3) return one(std::move(spec));
    if (k == spec->bond) return generator(std::move(spec));
    throw std::invalid_argument(
        "two_cos: bond " + std::to_string(k) + " unsupported; a single irreducible type "
        "only mixes bonds 2 and 3 with the maximum bond M=" + std::to_string(spec->bond));
}

void Scalar::check_same_field(const Scalar& o) const {
    if (spec_ != o.spec_ && (spec_->bond != o.spec_->bond))
        throw std::invalid_argument("Scalar: mixed field specs");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    std::vector<Rat> c(coords_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return Scalar(spec_, std::move(c));
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    std::vector<Rat> c(coords_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return Scalar(spec_, std::move(c));
}

Scalar Scalar::operator-() const {
    std::vector<Rat> c(coords_);
    for (Rat& x : c) x = -x;
    return Scalar(spec_, std::move(c));
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    const int d = spec_->degree;
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) prod[i + j] += coords_[i] * o.coords_[j];
    // reduce modulo the monic modulus
    for (int i = 2 * d - 2; i >= d; --i) {
        Rat c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < d; ++j) prod[i - d + j] -= c * Rat(spec_->modulus.coeff(j));
    }
    prod.resize(d);
    return Scalar(spec_, std::move(prod));
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return coords_ == o.coords_;
}

bool Scalar::is_zero() const {
    for (const Rat& c : coords_)
        if (c != 0) return false;
    return true;
}

int Scalar::sign() const {
    if (is_zero()) return 0;
    if (spec_->degree == 1) {
        // rational fast path: value is coords_[0] (y itself is rational and the
        // power basis stops at 1)
        return sgn(coords_[0]);
    }
    // interval evaluation at a shrinking enclosure of y
    Rat lo = spec_->iso_lo, hi = spec_->iso_hi;
    for (;;) {
        // Horner with interval arithmetic
        Rat vlo = 0, vhi = 0;
        for (int i = spec_->degree - 1; i >= 0; --i) {
            Rat a = vlo * lo, b = vlo * hi, c = vhi * lo, d = vhi * hi;
            Rat nlo = std::min(std::min(a, b), std::min(c, d));
            Rat nhi = std::max(std::max(a, b), std::max(c, d));
            vlo = nlo + coords_[i];
            vhi = nhi + coords_[i];
        }
        if (vlo > 0) return 1;
        if (vhi < 0) return -1;
        // refine: the modulus changes sign across (lo, hi) and the enclosed
        // root is irrational, so the midpoint is never a root
        Rat mid = (lo + hi) / 2;
        const auto& mod = spec_->sturm.front();
        if (sgn(eval(mod, mid)) == sgn(eval(mod, lo)))
            lo = mid;
        else
            hi = mid;
        if (sturm_roots_in(*spec_, lo, hi) != 1)
            throw std::logic_error("Scalar::sign: isolation lost during refinement");
    }
}

std::string Scalar::to_string() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) out << ", ";
        out << coords_[i].get_str();
    }
    out << "]";
    return out.str();
}

nlohmann::json Scalar::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rat& c : coords_) arr.push_back(c.get_str());
    return nlohmann::json{{"coords", arr}, {"bond", spec_->bond}};
}

}  // namespace scalars

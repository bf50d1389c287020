#include "d21a/scalar.hpp"

#include <utility>

namespace d21a {

Rat rat_from_string(const std::string& s) {
    try {
        Rat q(s);
        if (q.get_den() == 0) throw parse_error("zero denominator in rational '" + s + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed rational '" + s + "'");
    }
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out = rat_to_string(re_);
    if (im_ != 0) {
        std::string istr;
        if (im_ == 1)
            istr = "i";
        else if (im_ == -1)
            istr = "-i";
        else
            istr = rat_to_string(im_) + "*i";
        if (!out.empty() && istr[0] != '-') out += "+";
        out += istr;
    }
    return out;
}

// ---- APoly ----

void APoly::normalize() {
    while (!coeff_.empty() && coeff_.back().is_zero()) coeff_.pop_back();
}

APoly APoly::param() { return monomial(1, GaussianRational(1)); }

APoly APoly::monomial(std::size_t deg, GaussianRational c) {
    APoly p;
    if (c.is_zero()) return p;
    p.coeff_.assign(deg + 1, GaussianRational());
    p.coeff_[deg] = std::move(c);
    return p;
}

const GaussianRational& APoly::leading() const {
    static const GaussianRational zero;
    return coeff_.empty() ? zero : coeff_.back();
}

APoly APoly::operator-() const {
    APoly r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
}

APoly operator+(const APoly& a, const APoly& b) {
    APoly r = a;
    if (r.coeff_.size() < b.coeff_.size()) r.coeff_.resize(b.coeff_.size());
    for (std::size_t k = 0; k < b.coeff_.size(); ++k) r.coeff_[k] += b.coeff_[k];
    r.normalize();
    return r;
}

APoly operator-(const APoly& a, const APoly& b) {
    APoly r = a;
    if (r.coeff_.size() < b.coeff_.size()) r.coeff_.resize(b.coeff_.size());
    for (std::size_t k = 0; k < b.coeff_.size(); ++k) r.coeff_[k] -= b.coeff_[k];
    r.normalize();
    return r;
}

APoly operator*(const APoly& a, const APoly& b) {
    APoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeff_.assign(a.coeff_.size() + b.coeff_.size() - 1, GaussianRational());
    for (std::size_t j = 0; j < a.coeff_.size(); ++j) {
        if (a.coeff_[j].is_zero()) continue;
        for (std::size_t k = 0; k < b.coeff_.size(); ++k)
            r.coeff_[j + k] += a.coeff_[j] * b.coeff_[k];
    }
    r.normalize();
    return r;
}

APoly APoly::scaled(const GaussianRational& c) const {
    APoly r;
    if (c.is_zero()) return r;
    r.coeff_ = coeff_;
    for (auto& x : r.coeff_) x *= c;
    return r;
}

APoly APoly::conj() const {
    APoly r = *this;
    for (auto& c : r.coeff_) c = c.conj();
    return r;
}

GaussianRational APoly::eval(const Rat& x) const {
    GaussianRational acc;
    for (std::size_t k = coeff_.size(); k-- > 0;) {
        acc = acc * GaussianRational(x) + coeff_[k];
    }
    return acc;
}

void APoly::divrem(const APoly& num, const APoly& den, APoly& q, APoly& r) {
    if (den.is_zero()) throw arithmetic_error("polynomial division by zero");
    q = APoly();
    r = num;
    int dd = den.degree();
    while (!r.is_zero() && r.degree() >= dd) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - dd);
        GaussianRational c = r.leading() / den.leading();
        APoly t = APoly::monomial(shift, c);
        q = q + t;
        r = r - t * den;
    }
}

APoly APoly::gcd(APoly x, APoly y) {
    while (!y.is_zero()) {
        APoly q, r;
        divrem(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

APoly APoly::monic() const {
    if (is_zero()) return *this;
    return scaled(GaussianRational(1) / leading());
}

// ---- Scalar ----

Scalar::Scalar(APoly num, APoly den) {
    if (den.is_zero()) throw arithmetic_error("scalar with zero denominator");
    if (num.is_zero()) {
        num_ = APoly();
        den_ = APoly(GaussianRational(1));
        return;
    }
    if (den.degree() == 0) {
        // constant denominator: just rescale
        num_ = num.scaled(GaussianRational(1) / den.leading());
        den_ = APoly(GaussianRational(1));
        return;
    }
    APoly g = APoly::gcd(num, den);
    if (g.degree() > 0) {
        APoly q, r;
        APoly::divrem(num, g, q, r);
        num = std::move(q);
        APoly::divrem(den, g, q, r);
        den = std::move(q);
    }
    GaussianRational lead = den.leading();
    num_ = num.scaled(GaussianRational(1) / lead);
    den_ = den.scaled(GaussianRational(1) / lead);
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

namespace {
bool is_one_poly(const APoly& p) { return p.degree() == 0 && p.leading().is_one(); }
} // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (is_one_poly(a.den_) && is_one_poly(b.den_)) {
        Scalar r;
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
        return r;
    }
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (is_one_poly(a.den_) && is_one_poly(b.den_)) {
        Scalar r;
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_;
        return r;
    }
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw arithmetic_error("division by the zero scalar");
    if (a.is_zero()) return Scalar();
    return Scalar(a.num_ * b.den_, a.den_ * b.num_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw arithmetic_error("inverse of the zero scalar");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(unsigned e) const {
    Scalar acc(1);
    Scalar base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

Scalar Scalar::conj() const {
    // Conjugation fixes a, so canonical form is preserved up to the monic
    // normalization of the denominator (its leading 1 is real).
    Scalar r;
    r.num_ = num_.conj();
    r.den_ = den_.conj();
    return r;
}

GaussianRational Scalar::eval_at(const Rat& x) const {
    GaussianRational d = den_.eval(x);
    if (d.is_zero()) throw pole_error("pole at a = " + rat_to_string(x));
    return num_.eval(x) / d;
}

Scalar pochhammer(const Scalar& x, unsigned k) {
    Scalar acc(1);
    for (unsigned j = 0; j < k; ++j) acc = acc * (x + Scalar(static_cast<long>(j)));
    return acc;
}

Scalar factorial_scalar(unsigned k) {
    Rat acc(1);
    for (unsigned j = 2; j <= k; ++j) acc *= j;
    return Scalar(acc);
}

} // namespace d21a

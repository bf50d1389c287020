#include "d21a/superpoly.hpp"

#include <algorithm>

#include "d21a/errors.hpp"

namespace d21a {

bool mono_mul(const Mono& m, const Mono& n, Mono& out, int& sign) {
    if ((m.e3 & n.e3) || (m.e4 & n.e4)) return false;
    out.d1 = m.d1 + n.d1;
    out.d2 = m.d2 + n.d2;
    out.e3 = m.e3 | n.e3;
    out.e4 = m.e4 | n.e4;
    // Reordering ... z4^{m.e4} z3^{n.e3} ... costs one swap of odd generators.
    sign = (m.e4 & n.e3) ? -1 : 1;
    return true;
}

SuperPoly SuperPoly::monomial(const Mono& m, Scalar c) {
    SuperPoly p;
    if (!c.is_zero()) p.terms_[m] = std::move(c);
    return p;
}

SuperPoly SuperPoly::gen(int i) {
    Mono m;
    switch (i) {
        case 1: m.d1 = 1; break;
        case 2: m.d2 = 1; break;
        case 3: m.e3 = 1; break;
        case 4: m.e4 = 1; break;
        default: throw structure_error("generator index out of range");
    }
    return monomial(m);
}

int SuperPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
    return d;
}

int SuperPoly::parity() const {
    int p = -1;
    for (const auto& [m, c] : terms_) {
        int mp = m.parity();
        if (p == -1)
            p = mp;
        else if (p != mp)
            return -1;
    }
    return p;
}

Scalar SuperPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void SuperPoly::add_term(const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SuperPoly SuperPoly::operator-() const {
    SuperPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

SuperPoly operator+(const SuperPoly& p, const SuperPoly& q) {
    SuperPoly r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, c);
    return r;
}

SuperPoly operator-(const SuperPoly& p, const SuperPoly& q) {
    SuperPoly r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, -c);
    return r;
}

SuperPoly operator*(const SuperPoly& p, const SuperPoly& q) {
    SuperPoly r;
    for (const auto& [m, cm] : p.terms_) {
        for (const auto& [n, cn] : q.terms_) {
            Mono out;
            int sign;
            if (!mono_mul(m, n, out, sign)) continue;
            Scalar c = cm * cn;
            if (sign < 0) c = -c;
            r.add_term(out, c);
        }
    }
    return r;
}

SuperPoly SuperPoly::scaled(const Scalar& c) const {
    SuperPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, cm] : terms_) r.add_term(m, cm * c);
    return r;
}

SuperPoly SuperPoly::conj() const {
    SuperPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = c.conj();
    return r;
}

SuperPoly SuperPoly::homogeneous_part(unsigned d) const {
    SuperPoly r;
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) r.terms_[m] = c;
    return r;
}

SuperPoly partial(int i, const SuperPoly& p) {
    SuperPoly r;
    for (const auto& [m, c] : p.terms()) {
        Mono n = m;
        switch (i) {
            case 1:
                if (m.d1 == 0) continue;
                n.d1 -= 1;
                r.add_term(n, c * Scalar(static_cast<long>(m.d1)));
                break;
            case 2:
                if (m.d2 == 0) continue;
                n.d2 -= 1;
                r.add_term(n, c * Scalar(static_cast<long>(m.d2)));
                break;
            case 3:
                if (m.e3 == 0) continue;
                n.e3 = 0;
                r.add_term(n, c);
                break;
            case 4: {
                if (m.e4 == 0) continue;
                n.e4 = 0;
                // d4 passes z3 first when present.
                r.add_term(n, m.e3 ? -c : c);
                break;
            }
            default: throw structure_error("derivative index out of range");
        }
    }
    return r;
}

namespace {

std::string mono_str(const Mono& m, const char* base) {
    std::string s;
    auto app = [&](int idx, unsigned e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += base + std::to_string(idx);
        if (e > 1) s += "^" + std::to_string(e);
    };
    app(1, m.d1);
    app(2, m.d2);
    app(3, m.e3);
    app(4, m.e4);
    return s.empty() ? "1" : s;
}

} // namespace

std::string SuperPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*" + mono_str(m, "z");
    }
    return out;
}

// ---- ExpPoly ----

void ExpPoly::add_summand(Key mu, const SuperPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = summands_.try_emplace(std::move(mu), p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) summands_.erase(it);
    }
}

ExpPoly ExpPoly::operator-() const {
    ExpPoly r;
    for (const auto& [mu, p] : summands_) r.summands_[mu] = -p;
    return r;
}

ExpPoly operator+(const ExpPoly& f, const ExpPoly& g) {
    ExpPoly r = f;
    for (const auto& [mu, p] : g.summands_) r.add_summand(mu, p);
    return r;
}

ExpPoly operator-(const ExpPoly& f, const ExpPoly& g) {
    ExpPoly r = f;
    for (const auto& [mu, p] : g.summands_) r.add_summand(mu, -p);
    return r;
}

ExpPoly ExpPoly::scaled(const Scalar& c) const {
    ExpPoly r;
    if (c.is_zero()) return r;
    for (const auto& [mu, p] : summands_) r.add_summand(mu, p.scaled(c));
    return r;
}

ExpPoly ExpPoly::poly_mul(const SuperPoly& p) const {
    ExpPoly r;
    for (const auto& [mu, q] : summands_) r.add_summand(mu, p * q);
    return r;
}

ExpPoly exp_partial(int i, const ExpPoly& f) {
    ExpPoly r;
    for (const auto& [mu, p] : f.summands()) {
        SuperPoly dp = partial(i, p);
        if (i == 1) dp += p.scaled(Scalar(mu.first));
        if (i == 2) dp += p.scaled(Scalar(mu.second));
        r.add_summand(mu, dp);
    }
    return r;
}

std::string ExpPoly::str() const {
    if (summands_.empty()) return "0";
    std::string out;
    for (const auto& [mu, p] : summands_) {
        if (!out.empty()) out += " + ";
        out += "[" + p.str() + "]*exp(" + rat_to_string(mu.first) + "*x1+" + rat_to_string(mu.second) + "*x2)";
    }
    return out;
}

} // namespace d21a

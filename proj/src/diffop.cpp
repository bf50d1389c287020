#include "d21a/diffop.hpp"

#include <array>
#include <vector>

#include "d21a/errors.hpp"

namespace d21a {

namespace {

// Symbols of the odd Weyl factor, in normal-order rank.
enum OddSym : int { Z3 = 0, Z4 = 1, D3 = 2, D4 = 3 };

struct OddTerm {
    int sign;
    std::uint8_t e3, e4, r3, r4;
};

// Normal-orders a word in {z3, z4, d3, d4} using
//   d3 z3 = 1 - z3 d3,  d4 z4 = 1 - z4 d4,
// all other distinct pairs anticommute, and odd squares vanish.
void normalize_word(std::vector<int> word, int sign, std::vector<OddTerm>& out) {
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        int x = word[i], y = word[i + 1];
        if (x == y) return; // square of an odd symbol
        if (x < y) continue;
        // Out of order: swap, plus a contraction for matching d/z pairs.
        if ((x == D3 && y == Z3) || (x == D4 && y == Z4)) {
            std::vector<int> contracted = word;
            contracted.erase(contracted.begin() + static_cast<long>(i),
                             contracted.begin() + static_cast<long>(i) + 2);
            normalize_word(std::move(contracted), sign, out);
        }
        std::swap(word[i], word[i + 1]);
        normalize_word(std::move(word), -sign, out);
        return;
    }
    OddTerm t{sign, 0, 0, 0, 0};
    for (int s : word) {
        switch (s) {
            case Z3: t.e3 = 1; break;
            case Z4: t.e4 = 1; break;
            case D3: t.r3 = 1; break;
            case D4: t.r4 = 1; break;
        }
    }
    out.push_back(t);
}

Scalar falling_factorial(std::uint32_t n, std::uint32_t k) {
    Rat acc(1);
    for (std::uint32_t j = 0; j < k; ++j) acc *= static_cast<long>(n - j);
    return Scalar(acc);
}

Scalar binom(std::uint32_t n, std::uint32_t k) {
    Rat acc(1);
    for (std::uint32_t j = 1; j <= k; ++j) acc *= Rat(static_cast<long>(n - k + j), static_cast<long>(j));
    return Scalar(acc);
}

} // namespace

DiffOp DiffOp::term(const Mono& m, const DiffIndex& d, Scalar c) {
    DiffOp op;
    op.add_term(m, d, c);
    return op;
}

DiffOp DiffOp::mult(const SuperPoly& p) {
    DiffOp op;
    for (const auto& [m, c] : p.terms()) op.add_term(m, DiffIndex{}, c);
    return op;
}

DiffOp DiffOp::deriv(int i) {
    DiffIndex d;
    switch (i) {
        case 1: d.q1 = 1; break;
        case 2: d.q2 = 1; break;
        case 3: d.r3 = 1; break;
        case 4: d.r4 = 1; break;
        default: throw structure_error("derivative index out of range");
    }
    return term(Mono{}, d);
}

int DiffOp::parity() const {
    int p = -1;
    for (const auto& [key, c] : terms_) {
        int tp = (key.first.parity() + key.second.parity()) & 1;
        if (p == -1)
            p = tp;
        else if (p != tp)
            return -1;
    }
    return p;
}

void DiffOp::split_parity(DiffOp& even, DiffOp& odd) const {
    even = DiffOp();
    odd = DiffOp();
    for (const auto& [key, c] : terms_) {
        int tp = (key.first.parity() + key.second.parity()) & 1;
        (tp ? odd : even).terms_[key] = c;
    }
}

void DiffOp::add_term(const Mono& m, const DiffIndex& d, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(m, d);
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOp DiffOp::operator-() const {
    DiffOp r;
    for (const auto& [key, c] : terms_) r.terms_[key] = -c;
    return r;
}

DiffOp operator+(const DiffOp& d, const DiffOp& e) {
    DiffOp r = d;
    for (const auto& [key, c] : e.terms_) r.add_term(key.first, key.second, c);
    return r;
}

DiffOp operator-(const DiffOp& d, const DiffOp& e) {
    DiffOp r = d;
    for (const auto& [key, c] : e.terms_) r.add_term(key.first, key.second, -c);
    return r;
}

DiffOp DiffOp::scaled(const Scalar& c) const {
    DiffOp r;
    if (c.is_zero()) return r;
    for (const auto& [key, t] : terms_) r.add_term(key.first, key.second, t * c);
    return r;
}

SuperPoly DiffOp::apply(const SuperPoly& p) const {
    SuperPoly out;
    for (const auto& [key, c] : terms_) {
        const auto& [m, d] = key;
        SuperPoly q = p;
        if (d.r4) q = partial(4, q);
        if (d.r3) q = partial(3, q);
        for (std::uint32_t j = 0; j < d.q2 && !q.is_zero(); ++j) q = partial(2, q);
        for (std::uint32_t j = 0; j < d.q1 && !q.is_zero(); ++j) q = partial(1, q);
        if (q.is_zero()) continue;
        out += (SuperPoly::monomial(m) * q).scaled(c);
    }
    return out;
}

ExpPoly DiffOp::apply_exp(const ExpPoly& f) const {
    ExpPoly out;
    for (const auto& [key, c] : terms_) {
        const auto& [m, d] = key;
        for (const auto& [mu, p] : f.summands()) {
            SuperPoly q = p;
            if (d.r4) q = partial(4, q);
            if (d.r3) q = partial(3, q);
            for (std::uint32_t j = 0; j < d.q2; ++j) q = partial(2, q) + q.scaled(Scalar(mu.second));
            for (std::uint32_t j = 0; j < d.q1; ++j) q = partial(1, q) + q.scaled(Scalar(mu.first));
            if (q.is_zero()) continue;
            out.add_summand(mu, (SuperPoly::monomial(m) * q).scaled(c));
        }
    }
    return out;
}

DiffOp compose(const DiffOp& d, const DiffOp& e) {
    DiffOp out;
    for (const auto& [k1, c1] : d.terms()) {
        const auto& [m1, i1] = k1;
        for (const auto& [k2, c2] : e.terms()) {
            const auto& [m2, i2] = k2;
            // Normal-order i1 past m2. Even variables are independent Weyl pairs;
            // the odd factor is handled by word rewriting.
            std::vector<OddTerm> odd;
            {
                std::vector<int> word;
                if (i1.r3) word.push_back(D3);
                if (i1.r4) word.push_back(D4);
                if (m2.e3) word.push_back(Z3);
                if (m2.e4) word.push_back(Z4);
                normalize_word(std::move(word), 1, odd);
            }
            for (std::uint32_t j1 = 0; j1 <= std::min(i1.q1, m2.d1); ++j1) {
                Scalar w1 = binom(i1.q1, j1) * falling_factorial(m2.d1, j1);
                for (std::uint32_t j2 = 0; j2 <= std::min(i1.q2, m2.d2); ++j2) {
                    Scalar w12 = w1 * binom(i1.q2, j2) * falling_factorial(m2.d2, j2);
                    for (const OddTerm& t : odd) {
                        // Monomial part accumulated so far: m1 * (evens of m2 minus contractions) * odd part.
                        Mono mid{m2.d1 - j1, m2.d2 - j2, t.e3, t.e4};
                        Mono mono;
                        int s1;
                        if (!mono_mul(m1, mid, mono, s1)) continue;
                        // Remaining derivatives of the first factor, then those of the second.
                        DiffIndex left{i1.q1 - j1, i1.q2 - j2, t.r3, t.r4};
                        if ((left.r3 & i2.r3) || (left.r4 & i2.r4)) continue;
                        int s2 = (left.r4 & i2.r3) ? -1 : 1;
                        DiffIndex idx{left.q1 + i2.q1, left.q2 + i2.q2,
                                      static_cast<std::uint8_t>(left.r3 | i2.r3),
                                      static_cast<std::uint8_t>(left.r4 | i2.r4)};
                        Scalar coeff = c1 * c2 * w12;
                        int sign = t.sign * s1 * s2;
                        if (sign < 0) coeff = -coeff;
                        out.add_term(mono, idx, coeff);
                    }
                }
            }
        }
    }
    return out;
}

DiffOp supercommutator(const DiffOp& d, const DiffOp& e) {
    std::array<DiffOp, 2> dp, ep;
    d.split_parity(dp[0], dp[1]);
    e.split_parity(ep[0], ep[1]);
    DiffOp out;
    for (int pd = 0; pd < 2; ++pd) {
        for (int pe = 0; pe < 2; ++pe) {
            if (dp[pd].is_zero() || ep[pe].is_zero()) continue;
            DiffOp de = compose(dp[pd], ep[pe]);
            DiffOp ed = compose(ep[pe], dp[pd]);
            out += (pd & pe) ? de + ed : de - ed;
        }
    }
    return out;
}

std::string DiffOp::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
        const auto& [m, d] = key;
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")";
        auto app = [&](const char* sym, unsigned e) {
            if (e == 0) return;
            out += "*";
            out += sym;
            if (e > 1) out += "^" + std::to_string(e);
        };
        app("z1", m.d1);
        app("z2", m.d2);
        app("z3", m.e3);
        app("z4", m.e4);
        app("D1", d.q1);
        app("D2", d.q2);
        app("D3", d.r3);
        app("D4", d.r4);
    }
    return out;
}

} // namespace d21a

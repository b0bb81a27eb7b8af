// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mwx/surfaces.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mwx/elim.hpp"

namespace mwx {

RatFunc::RatFunc(QPoly n, QPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero_poly()) throw degenerate_error("rational function with zero denominator");
    const QPoly g = gcd_monic(num, den);
    if (g.degree() > 0) {
        num = divexact(num, g);
        den = divexact(den, g);
    }
    const Rat lc = den.lc();
    if (lc != 1) {
        den = den.scaled(Rat(1) / lc);
        num = num.scaled(Rat(1) / lc);
    }
    if (num.is_zero_poly()) den = QPoly{Rat(1)};
}

QPoly RatFunc::polynomial() const {
    MWX_CHECK(is_polynomial(), "rational function is not polynomial");
    return num.scaled(Rat(1) / den.coeff(0));
}

Rat RatFunc::eval(const Rat& t) const {
    const Rat d = den.eval(t);
    if (is_zero(d)) throw degenerate_error("pole of a rational function");
    return num.eval(t) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
}
RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num * b.num, a.den * b.den); }
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero_fn()) throw degenerate_error("division by the zero function");
    return RatFunc(a.num * b.den, a.den * b.num);
}
RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num = -r.num;
    return r;
}

WeierstrassCurve WeierstrassCurve::family(const WeierstrassData& w) {
    WeierstrassCurve c;
    const QPoly t = QPoly::x();
    const QPoly p{w.p(0), w.p(1), w.p(2)};
    c.a4 = p;
    if (w.cs == Case::E6) {
        c.a1 = t;
        c.a6 = QPoly{w.q(0), w.q(1), w.q(2), Rat(1)};
    } else if (w.cs == Case::E7) {
        c.a1 = t;
        c.a6 = QPoly{w.q(0), w.q(1), w.q(2), w.q(3), Rat(-1)};
    } else {
        c.a2 = t * t;
        c.a6 = QPoly{w.q(0), w.q(1), w.q(2), w.q(3), w.q(4), Rat(1)};
    }
    return c;
}

QPoly WeierstrassCurve::b2() const { return a1 * a1 + a2.scaled(Rat(4)); }
QPoly WeierstrassCurve::b4() const { return a4.scaled(Rat(2)) + a1 * a3; }
QPoly WeierstrassCurve::b6() const { return a3 * a3 + a6.scaled(Rat(4)); }
QPoly WeierstrassCurve::b8() const {
    return a1 * a1 * a6 + (a2 * a6).scaled(Rat(4)) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
}
QPoly WeierstrassCurve::c4() const { return b2() * b2() - b4().scaled(Rat(24)); }
QPoly WeierstrassCurve::c6() const {
    return -(b2() * b2() * b2()) + (b2() * b4()).scaled(Rat(36)) - b6().scaled(Rat(216));
}
QPoly WeierstrassCurve::disc() const {
    const QPoly B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -(B2 * B2 * B8) - (B4 * B4 * B4).scaled(Rat(8)) - (B6 * B6).scaled(Rat(27)) +
           (B2 * B4 * B6).scaled(Rat(9));
}

SectionRat SectionRat::from_poly(const SectionPoly& s) {
    SectionRat r;
    r.infinity = s.infinity;
    if (!s.infinity) {
        r.x = RatFunc(s.x);
        r.y = RatFunc(s.y);
    }
    return r;
}

bool SectionRat::operator==(const SectionRat& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
}

bool verify_section(const WeierstrassCurve& c, const SectionPoly& s) {
    if (s.infinity) return true;
    const QPoly lhs = s.y * s.y + c.a1 * s.x * s.y + c.a3 * s.y;
    const QPoly rhs = s.x * s.x * s.x + c.a2 * s.x * s.x + c.a4 * s.x + c.a6;
    return lhs == rhs;
}

bool verify_section_rat(const WeierstrassCurve& c, const SectionRat& s) {
    if (s.infinity) return true;
    const RatFunc a1{c.a1}, a2{c.a2}, a3{c.a3}, a4{c.a4}, a6{c.a6};
    const RatFunc lhs = s.y * s.y + a1 * s.x * s.y + a3 * s.y;
    const RatFunc rhs = s.x * s.x * s.x + a2 * s.x * s.x + a4 * s.x + a6;
    return lhs == rhs;
}

SectionPoly complete_section_y(const WeierstrassCurve& c, const QPoly& x) {
    // y^2 + (a1 x + a3) y - (x^3 + a2 x^2 + a4 x + a6) = 0.
    const QPoly b = c.a1 * x + c.a3;
    const QPoly rhs = x * x * x + c.a2 * x * x + c.a4 * x + c.a6;
    const QPoly d = b * b + rhs.scaled(Rat(4));
    const QPoly s = poly_sqrt(d); // throws when x is not a section abscissa
    const QPoly y = (s - b).scaled(Rat(1, 2));
    SectionPoly out = SectionPoly::affine(x, y);
    MWX_CHECK(verify_section(c, out), "completed section fails the curve equation");
    return out;
}

SectionRat point_negate(const WeierstrassCurve& c, const SectionRat& p) {
    if (p.infinity) return p;
    SectionRat r = p;
    r.y = -(p.y + RatFunc(c.a1) * p.x + RatFunc(c.a3));
    return r;
}

SectionRat point_add(const WeierstrassCurve& c, const SectionRat& p, const SectionRat& q) {
    if (p.infinity) return q;
    if (q.infinity) return p;
    const RatFunc a1{c.a1}, a2{c.a2}, a3{c.a3}, a4{c.a4};
    RatFunc m;
    if (p.x == q.x) {
        if (point_negate(c, p).y == q.y) return SectionRat::zero();
        // tangent slope
        const RatFunc num = RatFunc::constant(Rat(3)) * p.x * p.x + RatFunc::constant(Rat(2)) * a2 * p.x + a4 - a1 * p.y;
        const RatFunc den = p.y + p.y + a1 * p.x + a3;
        m = num / den;
    } else {
        m = (q.y - p.y) / (q.x - p.x);
    }
    const RatFunc x3 = m * m + a1 * m - a2 - p.x - q.x;
    const RatFunc y3 = m * (p.x - x3) - p.y - a1 * x3 - a3;
    SectionRat r;
    r.infinity = false;
    r.x = x3;
    r.y = y3;
    return r;
}

SectionRat point_multiply(const WeierstrassCurve& c, long n, const SectionRat& p) {
    SectionRat base = n < 0 ? point_negate(c, p) : p;
    unsigned long k = static_cast<unsigned long>(n < 0 ? -n : n);
    SectionRat acc = SectionRat::zero();
    while (k) {
        if (k & 1) acc = point_add(c, acc, base);
        base = point_add(c, base, base);
        k >>= 1;
    }
    return acc;
}

std::optional<int> torsion_order(const WeierstrassCurve& c, const SectionRat& s) {
    SectionRat acc = SectionRat::zero();
    for (int n = 1; n <= 12; ++n) {
        acc = point_add(c, acc, s);
        if (acc.infinity) return n;
    }
    return std::nullopt;
}

namespace {

// t -> 1/u on a rational function, i.e. f(1/u) written with polynomial
// numerator and denominator.
RatFunc invert_parameter(const RatFunc& f) {
    const int d = std::max(f.num.degree(), f.den.degree());
    return RatFunc(f.num.reversed(d), f.den.reversed(d));
}

} // namespace

std::pair<Rat, int> specialize_at_infinity(Case cs, const SectionRat& s) {
    if (s.infinity) return {Rat(1), 0}; // the zero section lands at the identity
    const RatFunc u = RatFunc(QPoly::x());
    const RatFunc xt = invert_parameter(s.x) * u * u;   // x(1/u) u^2
    const RatFunc yt = invert_parameter(s.y) * u * u * u; // y(1/u) u^3
    auto value_at0 = [&](const RatFunc& f) {
        if (is_zero(f.den.eval(Rat(0)))) throw degenerate_error("section meets the zero section at t=infinity");
        return f.num.eval(Rat(0)) / f.den.eval(Rat(0));
    };
    const Rat x0 = value_at0(xt), y0 = value_at0(yt);

    if (cs == Case::E8) {
        const RatFunc w = (yt + xt) / (yt - xt);
        const Rat v = value_at0(w);
        if (is_zero(v)) throw degenerate_error("specialization hit the node");
        return {v, 0};
    }
    if (cs == Case::E7) {
        if (!(is_zero(x0) && is_zero(y0))) {
            if (is_zero(y0)) throw degenerate_error("specialization hit the node");
            return {(y0 + x0) / y0, 0};
        }
        // Far component of the I_2 fiber: the limit of y/t^2.
        const RatFunc w = yt / u;
        return {value_at0(w), 1};
    }
    // E6: the 27 special sections hit one fixed non-identity component of
    // the I_3 fiber and specialize to -1/lim(x/t).
    if (!(is_zero(x0) && is_zero(y0)))
        throw degenerate_error("E6 specialization: section lands outside the covered component");
    const RatFunc w = xt / u;
    const Rat a = value_at0(w);
    if (is_zero(a)) throw degenerate_error("E6 specialization: vanishing slope");
    return {Rat(-1) / a, 1};
}

// --- fibers -----------------------------------------------------------------

namespace {

struct Triple {
    int vc4, vc6, vd; // -1 means +infinity
};

std::string classify(const Triple& t, bool* minimal) {
    const int a = t.vc4 < 0 ? 1 << 20 : t.vc4;
    const int b = t.vc6 < 0 ? 1 << 20 : t.vc6;
    const int d = t.vd;
    *minimal = !(a >= 4 && b >= 6 && d >= 12);
    if (d == 0) return "I0";
    if (a == 0) return "I" + std::to_string(d);
    if (d == 2) return "II";
    if (d == 3) return "III";
    if (d == 4) return "IV";
    if (d == 6) return "I0*";
    if (a == 2 && b == 3 && d > 6) return "I" + std::to_string(d - 6) + "*";
    if (d == 8) return "IV*";
    if (d == 9) return "III*";
    if (d == 10) return "II*";
    throw internal_error("Kodaira classification fell through: (" + std::to_string(t.vc4) + "," +
                         std::to_string(t.vc6) + "," + std::to_string(d) + ")");
}

int euler_of(const std::string& k) {
    if (k == "I0") return 0;
    if (k == "II") return 2;
    if (k == "III") return 3;
    if (k == "IV") return 4;
    if (k == "IV*") return 8;
    if (k == "III*") return 9;
    if (k == "II*") return 10;
    if (k.back() == '*') return 6 + std::stoi(k.substr(1, k.size() - 2));
    return std::stoi(k.substr(1)); // I_n
}

std::string lattice_of(const std::string& k) {
    if (k == "I0" || k == "I1" || k == "II") return "0";
    if (k == "III") return "A_1";
    if (k == "IV") return "A_2";
    if (k == "IV*") return "E_6";
    if (k == "III*") return "E_7";
    if (k == "II*") return "E_8";
    if (k.back() == '*') return "D_" + std::to_string(4 + std::stoi(k.substr(1, k.size() - 2)));
    return "A_" + std::to_string(std::stoi(k.substr(1)) - 1);
}

// Multiplicity of the factor f in g (f nonconstant, g nonzero).
int valuation_along(const QPoly& g, const QPoly& f) {
    if (g.is_zero_poly()) return -1; // +infinity
    int v = 0;
    QPoly h = g;
    while (true) {
        auto [q, r] = divrem(h, f);
        if (!r.is_zero_poly()) return v;
        h = std::move(q);
        ++v;
    }
}

// Pairwise-coprime refinement of a set of monic squarefree polynomials.
std::vector<QPoly> gcd_free_basis(std::vector<QPoly> in) {
    std::vector<QPoly> basis;
    for (auto f : in) {
        std::vector<QPoly> queue{std::move(f)};
        while (!queue.empty()) {
            QPoly cur = queue.back();
            queue.pop_back();
            if (cur.degree() < 1) continue;
            bool split = false;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                const QPoly g = gcd_monic(cur, basis[i]);
                if (g.degree() < 1) continue;
                if (g.degree() < basis[i].degree()) {
                    const QPoly rest = divexact(basis[i], g);
                    basis[i] = g;
                    basis.push_back(rest);
                }
                const QPoly left = divexact(cur, g);
                if (left.degree() >= 1) queue.push_back(left);
                split = true;
                break;
            }
            if (!split) basis.push_back(cur);
        }
    }
    std::sort(basis.begin(), basis.end(), [](const QPoly& a, const QPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i) {
            if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
        }
        return false;
    });
    return basis;
}

} // namespace

int lattice_root_count(const std::string& symbol) {
    if (symbol == "0" || symbol.empty() || symbol == "-") return 0;
    int total = 0;
    std::size_t pos = 0;
    while (pos < symbol.size()) {
        const char fam = symbol[pos];
        MWX_CHECK(fam == 'A' || fam == 'D' || fam == 'E', "bad lattice symbol " + symbol);
        std::size_t q = pos + 1;
        if (q < symbol.size() && symbol[q] == '_') ++q;
        std::size_t end = q;
        while (end < symbol.size() && std::isdigit(symbol[end])) ++end;
        const int n = std::stoi(symbol.substr(q, end - q));
        int count = 0;
        if (fam == 'A') count = n * (n + 1);
        else if (fam == 'D') count = 2 * n * (n - 1);
        else count = n == 6 ? 72 : n == 7 ? 126 : 240;
        // exponent: ^k repeats the summand
        int rep = 1;
        if (end < symbol.size() && symbol[end] == '^') {
            std::size_t e2 = end + 1;
            std::size_t e3 = e2;
            while (e3 < symbol.size() && std::isdigit(symbol[e3])) ++e3;
            rep = std::stoi(symbol.substr(e2, e3 - e2));
            end = e3;
        }
        total += count * rep;
        while (end < symbol.size() && (symbol[end] == '+' || symbol[end] == ' ')) ++end;
        pos = end;
    }
    return total;
}

FiberReport fiber_configuration(const WeierstrassCurve& c) {
    const QPoly D = c.disc();
    if (D.is_zero_poly()) throw input_error("discriminant vanishes identically: not an elliptic surface");
    const QPoly C4 = c.c4(), C6 = c.c6();

    // Places: the gcd-free refinement of the squarefree factors of Delta
    // against those of c4 and c6. No root-finding anywhere.
    std::vector<QPoly> parts;
    for (const auto& [f, m] : squarefree_decomposition(D)) parts.push_back(f);
    if (!C4.is_zero_poly())
        for (const auto& [f, m] : squarefree_decomposition(C4)) parts.push_back(gcd_monic(f, D));
    if (!C6.is_zero_poly())
        for (const auto& [f, m] : squarefree_decomposition(C6)) parts.push_back(gcd_monic(f, D));
    std::vector<QPoly> places;
    for (auto& f : gcd_free_basis(std::move(parts)))
        if (f.degree() >= 1) places.push_back(f);

    FiberReport rep;
    for (const auto& pl : places) {
        Triple tr{valuation_along(C4, pl), valuation_along(C6, pl), valuation_along(D, pl)};
        if (tr.vd == 0) continue;
        FiberPlace fp;
        fp.place = poly_to_string(pl);
        fp.vc4 = tr.vc4;
        fp.vc6 = tr.vc6;
        fp.vdisc = tr.vd;
        fp.kodaira = classify(tr, &fp.minimal);
        fp.euler = euler_of(fp.kodaira) * pl.degree();
        fp.lattice = lattice_of(fp.kodaira);
        fp.root_count = lattice_root_count(fp.lattice) * pl.degree();
        if (pl.degree() > 1 && fp.lattice != "0") {
            // A place of degree d > 1 contributes d copies of the lattice.
            fp.lattice += "^" + std::to_string(pl.degree());
        }
        rep.euler_sum += fp.euler;
        rep.all_minimal = rep.all_minimal && fp.minimal;
        rep.fibers.push_back(std::move(fp));
    }

    // The place at t = infinity through t = 1/u, x = X/u^(2k), y = Y/u^(3k).
    int k = 1;
    auto need = [&](const QPoly& a, int wt) { return a.is_zero_poly() ? 1 : (a.degree() + wt - 1) / wt; };
    k = std::max({1, need(c.a1, 1), need(c.a2, 2), need(c.a3, 3), need(c.a4, 4), need(c.a6, 6)});
    const int vd_inf = 12 * k - D.degree();
    const int vc4_inf = C4.is_zero_poly() ? -1 : 4 * k - C4.degree();
    const int vc6_inf = C6.is_zero_poly() ? -1 : 6 * k - C6.degree();
    if (vd_inf > 0) {
        Triple tr{vc4_inf, vc6_inf, vd_inf};
        FiberPlace fp;
        fp.place = "t=inf";
        fp.at_infinity = true;
        fp.vc4 = tr.vc4;
        fp.vc6 = tr.vc6;
        fp.vdisc = tr.vd;
        fp.kodaira = classify(tr, &fp.minimal);
        fp.euler = euler_of(fp.kodaira);
        fp.lattice = lattice_of(fp.kodaira);
        fp.root_count = lattice_root_count(fp.lattice);
        rep.euler_sum += fp.euler;
        rep.all_minimal = rep.all_minimal && fp.minimal;
        rep.fibers.push_back(std::move(fp));
    }
    return rep;
}

int FiberReport::new_root_count(bool exclude_infinity) const {
    int total = 0;
    for (const auto& f : fibers)
        if (!(exclude_infinity && f.at_infinity)) total += f.root_count;
    return total;
}

std::string FiberReport::to_table() const {
    std::ostringstream os;
    os << "place | type | v(c4) v(c6) v(D) | lattice | roots\n";
    for (const auto& f : fibers) {
        os << f.place << " | " << f.kodaira << " | "
           << (f.vc4 < 0 ? std::string("inf") : std::to_string(f.vc4)) << " "
           << (f.vc6 < 0 ? std::string("inf") : std::to_string(f.vc6)) << " " << f.vdisc << " | "
           << f.lattice << " | " << f.root_count << "\n";
    }
    os << "euler sum " << euler_sum << (all_minimal ? "" : " (non-minimal place present)") << "\n";
    return os.str();
}

GenericityReport genericity_report(const WeierstrassData& w) {
    GenericityReport rep;
    const WeierstrassCurve c = WeierstrassCurve::family(w);
    const QPoly D = c.disc();
    rep.disc_t = resultant_sylvester(D, D.derivative()) / D.lc();

    if (w.cs == Case::E7) rep.weyl_denominator = build_psi(w).eval(Rat(1));
    else if (w.cs == Case::E8) rep.weyl_denominator = build_phi(w).eval(Rat(1));
    else throw input_error("genericity report covers E7 and E8");
    rep.weyl_nonzero = !is_zero(rep.weyl_denominator);

    if (rep.weyl_nonzero) {
        // disc_t factors as (additive indicator)^3 times the Weyl
        // denominator, so with the second factor nonzero the first
        // vanishes exactly with disc_t.
        rep.additive_free = !is_zero(rep.disc_t);
        rep.note = rep.additive_free ? "only multiplicative singular fibers"
                                     : "additive degeneration locus";
    } else {
        // Reducible-multiplicative locus: read the additive indicator off
        // the fiber types instead.
        bool additive = false;
        for (const auto& f : fiber_configuration(c).fibers) {
            const std::string& k = f.kodaira;
            const bool mult = k.size() > 1 && k[0] == 'I' && std::isdigit(k[1]) && k.back() != '*';
            if (!mult && k != "I0") additive = true;
        }
        rep.additive_free = !additive;
        rep.note = "reducible fiber present; additive flag from the fiber table";
    }
    return rep;
}

int multiplicative_independence(const std::vector<Rat>& values) {
    // Exponent matrix over the primes appearing in the values, sign as -1.
    std::vector<Int> primes;
    auto prime_index = [&](const Int& p) {
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (primes[i] == p) return i;
        primes.push_back(p);
        return primes.size() - 1;
    };
    std::vector<std::map<std::size_t, long>> rows;
    for (const auto& v : values) {
        if (is_zero(v)) throw input_error("multiplicative independence of zero");
        std::map<std::size_t, long> row;
        if (v < 0) row[prime_index(Int(-1))] = 1;
        for (const auto& [p, e] : factor_small(num(v))) row[prime_index(p)] += e;
        for (const auto& [p, e] : factor_small(den(v))) row[prime_index(p)] -= e;
        rows.push_back(std::move(row));
    }
    // Dense exponent matrix, fraction-free rank. The -1 row has order two,
    // but over Z it still only contributes when no other row uses it; rank
    // over Q of the exponent matrix is the standard independence measure.
    const std::size_t ncol = primes.size();
    std::vector<std::vector<Rat>> m;
    for (const auto& row : rows) {
        std::vector<Rat> r(ncol, Rat(0));
        for (const auto& [j, e] : row) r[j] = Rat(e);
        m.push_back(std::move(r));
    }
    int rank = 0;
    std::size_t col = 0;
    for (std::size_t row = 0; row < m.size() && col < ncol; ++col) {
        std::size_t piv = row;
        while (piv < m.size() && is_zero(m[piv][col])) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || is_zero(m[i][col])) continue;
            const Rat f = m[i][col] / m[row][col];
            for (std::size_t j = col; j < ncol; ++j) m[i][j] -= f * m[row][j];
        }
        ++rank;
        ++row;
    }
    return rank;
}

} // namespace mwx

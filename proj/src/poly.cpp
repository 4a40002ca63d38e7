#include "geolab/poly.hpp"

#include <algorithm>
#include <iterator>

#include "geolab/errors.hpp"

namespace geolab {

int mono_degree(const Mono& m) {
    int d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
}

int mono_deg_in(const Mono& m, int var) {
    for (auto& [v, e] : m)
        if (v == var) return e;
    return 0;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i; ++j;
        }
    }
    return out;
}

bool mono_divides(const Mono& a, const Mono& b) {
    for (auto& [v, e] : a)
        if (mono_deg_in(b, v) < e) return false;
    return true;
}

Mono mono_div(const Mono& b, const Mono& a) {
    Mono out;
    std::size_t j = 0;
    for (auto& [v, e] : b) {
        int sub = 0;
        while (j < a.size() && a[j].first < v) ++j;
        if (j < a.size() && a[j].first == v) sub = a[j].second;
        int rem = e - sub;
        if (rem < 0) throw InternalError("mono_div: not divisible");
        if (rem > 0) out.emplace_back(v, rem);
    }
    return out;
}

bool GrlexLess::operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    // Same total degree: lexicographic on exponent vectors, earlier
    // variables more significant, missing exponents read as zero.
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            if (a[i].second != b[j].second) return a[i].second < b[j].second;
            ++i; ++j;
        } else if (a[i].first < b[j].first) {
            return false; // a has positive exponent where b has zero
        } else {
            return true;
        }
    }
    if (i < a.size()) return false;
    if (j < b.size()) return true;
    return false;
}

GaussRat Poly::constant_value() const {
    if (t_.empty()) return GaussRat(0);
    if (!is_constant()) throw InternalError("constant_value of non-constant polynomial");
    return t_.begin()->second;
}

int Poly::deg_in(int var) const {
    int d = 0;
    for (auto& [m, c] : t_) d = std::max(d, mono_deg_in(m, var));
    return d;
}

int Poly::max_var() const {
    int v = -1;
    for (auto& [m, c] : t_)
        if (!m.empty()) v = std::max(v, m.back().first);
    return v;
}

const Mono& Poly::leading_mono() const {
    if (t_.empty()) throw InternalError("leading term of zero polynomial");
    return t_.rbegin()->first;
}

const GaussRat& Poly::leading_coeff() const {
    if (t_.empty()) throw InternalError("leading term of zero polynomial");
    return t_.rbegin()->second;
}

void Poly::add_term(const Mono& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out;
    for (auto& [m, c] : t_) out.t_.emplace(m, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (auto& [ma, ca] : a.t_)
        for (auto& [mb, cb] : b.t_)
            out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
}

Poly& Poly::mul_coeff(const GaussRat& c) {
    if (c.is_zero()) { t_.clear(); return *this; }
    for (auto& [m, v] : t_) v *= c;
    return *this;
}

Poly Poly::pow(int n) const {
    if (n < 0) throw InternalError("Poly::pow with negative exponent");
    Poly out(GaussRat(1));
    Poly base = *this;
    while (n > 0) {
        if (n & 1) out = out * base;
        base = base * base;
        n >>= 1;
    }
    return out;
}

Poly Poly::derivative(int var) const {
    Poly out;
    for (auto& [m, c] : t_) {
        int e = mono_deg_in(m, var);
        if (e == 0) continue;
        Mono dm;
        for (auto& [v, k] : m) {
            if (v == var) {
                if (k > 1) dm.emplace_back(v, k - 1);
            } else {
                dm.emplace_back(v, k);
            }
        }
        out.add_term(dm, c * GaussRat(e));
    }
    return out;
}

Poly Poly::conj() const {
    Poly out;
    for (auto& [m, c] : t_) out.t_.emplace(m, c.conj());
    return out;
}

GaussRat Poly::eval(const std::vector<GaussRat>& point) const {
    GaussRat acc(0);
    for (auto& [m, c] : t_) {
        GaussRat term = c;
        for (auto& [v, e] : m) {
            if (static_cast<std::size_t>(v) >= point.size())
                throw InternalError("eval point has too few coordinates");
            for (int k = 0; k < e; ++k) term *= point[static_cast<std::size_t>(v)];
        }
        acc += term;
    }
    return acc;
}

bool Poly::operator<(const Poly& o) const {
    auto i = t_.rbegin();
    auto j = o.t_.rbegin();
    GrlexLess less;
    for (; i != t_.rend() && j != o.t_.rend(); ++i, ++j) {
        if (less(i->first, j->first)) return true;
        if (less(j->first, i->first)) return false;
        if (i->second != j->second) return i->second < j->second;
    }
    return i == t_.rend() && j != o.t_.rend();
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const Mono& m = it->first;
        const GaussRat& c = it->second;

        std::string mono;
        for (auto& [v, e] : m) {
            if (!mono.empty()) mono += "*";
            if (static_cast<std::size_t>(v) >= names.size())
                throw InternalError("variable index outside chart");
            mono += names[static_cast<std::size_t>(v)];
            if (e > 1) mono += "^" + std::to_string(e);
        }

        bool negative = false;
        std::string body;
        if (c.im() == 0) {
            mpq_class a = c.re();
            if (a < 0) { negative = true; a = -a; }
            if (mono.empty()) body = a.get_str();
            else if (a == 1) body = mono;
            else body = a.get_str() + "*" + mono;
        } else if (c.re() == 0) {
            mpq_class b = c.im();
            if (b < 0) { negative = true; b = -b; }
            std::string coeff = (b == 1) ? "i" : b.get_str() + "*i";
            body = mono.empty() ? coeff : coeff + "*" + mono;
        } else {
            std::string coeff = "(" + c.str() + ")";
            body = mono.empty() ? coeff : coeff + "*" + mono;
        }

        if (first) {
            out += negative ? "-" + body : body;
            first = false;
        } else {
            out += negative ? " - " + body : " + " + body;
        }
    }
    return out;
}

namespace {

Poly normalize_monic(const Poly& p) {
    if (p.is_zero()) return p;
    Poly out = p;
    out.mul_coeff(p.leading_coeff().inverse());
    return out;
}

// Coefficient of v^k when p is read as a univariate polynomial in v.
Poly coeff_in(const Poly& p, int v, int k) {
    Poly out;
    for (auto& [m, c] : p.terms()) {
        if (mono_deg_in(m, v) != k) continue;
        Mono rest;
        for (auto& [var, e] : m)
            if (var != v) rest.emplace_back(var, e);
        out.add_term(rest, c);
    }
    return out;
}

Poly times_var_pow(const Poly& p, int v, int k) {
    if (k == 0) return p;
    return p * Poly::variable(v).pow(k);
}

// Pseudo-remainder of f by g with respect to v, with the standard
// lc(g)^(deg f - deg g + 1) multiplier folded in.
Poly prem(const Poly& f, const Poly& g, int v) {
    int dg = g.deg_in(v);
    Poly lcg = coeff_in(g, v, dg);
    Poly r = f;
    int e = f.deg_in(v) - dg + 1;
    while (!r.is_zero() && r.deg_in(v) >= dg) {
        int dr = r.deg_in(v);
        Poly lcr = coeff_in(r, v, dr);
        r = lcg * r - times_var_pow(lcr * g, v, dr - dg);
        --e;
    }
    for (; e > 0; --e) r = r * lcg;
    return r;
}

Poly content_in(const Poly& p, int v) {
    Poly c;
    for (int k = 0; k <= p.deg_in(v); ++k) {
        Poly ck = coeff_in(p, v, k);
        if (ck.is_zero()) continue;
        c = gcd(c, ck);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

// Exponent-wise minimum over all terms: the monomial content.
Mono monomial_content(const Poly& p) {
    Mono m = p.terms().begin()->first;
    for (auto& [t, c] : p.terms()) {
        if (m.empty()) break;
        Mono next;
        for (auto& [v, e] : m) {
            int o = mono_deg_in(t, v);
            int k = std::min(e, o);
            if (k > 0) next.emplace_back(v, k);
        }
        m = std::move(next);
    }
    return m;
}

Poly strip_mono(const Poly& p, const Mono& m) {
    if (m.empty()) return p;
    Poly out;
    for (auto& [t, c] : p.terms()) out.add_term(mono_div(t, m), c);
    return out;
}

std::vector<int> vars_of(const Poly& p) {
    std::vector<int> vars;
    for (auto& [t, c] : p.terms())
        for (auto& [v, e] : t)
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    return vars;
}

// Monic Euclid for polynomials in a single shared variable.
Poly gcd_univariate(Poly a, Poly b, int v) {
    while (!b.is_zero()) {
        // a mod b by leading-term elimination in v.
        int db = b.deg_in(v);
        GaussRat lb = coeff_in(b, v, db).constant_value();
        while (!a.is_zero() && a.deg_in(v) >= db) {
            int da = a.deg_in(v);
            GaussRat la = coeff_in(a, v, da).constant_value();
            Poly t = times_var_pow(b, v, da - db);
            t.mul_coeff(la / lb);
            a -= t;
        }
        std::swap(a, b);
    }
    return normalize_monic(a);
}

// Degree in v of gcd(a, b) after substituting small values for the other
// variables; -1 when no usable specialization was found. A result of 0 is
// a sound certificate that the primitive parts are coprime.
int specialized_gcd_degree(const Poly& a, const Poly& b, int v,
                           const std::vector<int>& others) {
    int da = a.deg_in(v), db = b.deg_in(v);
    Poly la = coeff_in(a, v, da);
    Poly lb = coeff_in(b, v, db);
    int max_var = std::max(a.max_var(), b.max_var());
    std::vector<GaussRat> point(static_cast<std::size_t>(max_var + 1), GaussRat(0));
    for (unsigned long attempt = 0; attempt < 8; ++attempt) {
        unsigned long state = 0x9e3779b97f4a7c15ULL + attempt * 0xbf58476d1ce4e5b9ULL;
        for (int o : others) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            point[static_cast<std::size_t>(o)] = GaussRat(static_cast<long>((state >> 33) % 19) - 9);
        }
        if (la.eval(point).is_zero() || lb.eval(point).is_zero()) continue;
        Poly ua, ub;
        for (int k = 0; k <= da; ++k)
            ua.add_term(k > 0 ? Mono{{v, k}} : Mono{}, coeff_in(a, v, k).eval(point));
        for (int k = 0; k <= db; ++k)
            ub.add_term(k > 0 ? Mono{{v, k}} : Mono{}, coeff_in(b, v, k).eval(point));
        return gcd_univariate(ua, ub, v).deg_in(v);
    }
    return -1;
}

// Subresultant pseudo-remainder sequence; returns the last nonzero
// remainder up to content in v.
Poly subresultant_prs(Poly pa, Poly pb, int v) {
    Poly g(GaussRat(1)), h(GaussRat(1));
    while (true) {
        int delta = pa.deg_in(v) - pb.deg_in(v);
        Poly r = prem(pa, pb, v);
        if (r.is_zero()) return pb;
        Poly divisor = g * h.pow(delta);
        pa = pb;
        pb = divexact(r, divisor);
        g = coeff_in(pa, v, pa.deg_in(v));
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = divexact(g.pow(delta), h.pow(delta - 1));
        }
    }
}

} // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalize_monic(b);
    if (b.is_zero()) return normalize_monic(a);
    if (a.is_constant() || b.is_constant()) return Poly(GaussRat(1));
    if (a == b) return normalize_monic(a);

    // Split off the monomial part: variables are prime, so the monomial
    // content factors out of the gcd independently.
    Mono ma = monomial_content(a);
    Mono mb = monomial_content(b);
    Mono mg;
    {
        for (auto& [v, e] : ma) {
            int o = mono_deg_in(mb, v);
            int k = std::min(e, o);
            if (k > 0) mg.emplace_back(v, k);
        }
    }
    Poly a0 = strip_mono(a, ma);
    Poly b0 = strip_mono(b, mb);
    Poly mono_part;
    mono_part.add_term(mg, GaussRat(1));

    if (a0.is_constant() || b0.is_constant())
        return normalize_monic(mono_part);

    std::vector<int> va = vars_of(a0), vb = vars_of(b0);
    std::vector<int> shared;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(shared));
    if (shared.empty()) return normalize_monic(mono_part);

    int v = shared.back();
    if (va.size() == 1 && vb.size() == 1)
        return normalize_monic(mono_part * gcd_univariate(a0, b0, v));

    Poly ca = content_in(a0, v);
    Poly cb = content_in(b0, v);
    Poly c = gcd(ca, cb);
    Poly pa = divexact(a0, ca);
    Poly pb = divexact(b0, cb);

    std::vector<int> pvars = vars_of(pa * pb);
    std::vector<int> others;
    for (int o : pvars)
        if (o != v) others.push_back(o);
    int sdeg = specialized_gcd_degree(pa, pb, v, others);
    if (sdeg == 0) return normalize_monic(mono_part * c);

    if (pa.deg_in(v) < pb.deg_in(v)) std::swap(pa, pb);
    Poly last = subresultant_prs(pa, pb, v);
    Poly gv = divexact(last, content_in(last, v));
    return normalize_monic(mono_part * c * gv);
}

Poly divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw InternalError("divexact by zero");
    if (a.is_zero()) return Poly();
    if (b.is_constant()) {
        Poly out = a;
        out.mul_coeff(b.constant_value().inverse());
        return out;
    }
    Poly q;
    Poly r = a;
    while (!r.is_zero()) {
        const Mono& mr = r.leading_mono();
        const Mono& mb = b.leading_mono();
        if (!mono_divides(mb, mr))
            throw InternalError("divexact: division is not exact");
        Mono mq = mono_div(mr, mb);
        GaussRat cq = r.leading_coeff() / b.leading_coeff();
        Poly t;
        t.add_term(mq, cq);
        q += t;
        r -= t * b;
    }
    return q;
}

} // namespace geolab

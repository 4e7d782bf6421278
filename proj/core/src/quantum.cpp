#include "ncg/quantum.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncg {

namespace {

NCPoly word(std::initializer_list<int> gens, const Scalar& c = Scalar(1)) {
    Word w;
    for (int g : gens) w += char(g);
    return NCPoly::word(w, c);
}

void rule(Presentation& p, int hi, int lo, const NCPoly& rhs) { p.add_rule(std::size_t(hi), std::size_t(lo), rhs); }

Scalar lam() { return Scalar::param(quantum_params(), "lam"); }

int count(const Word& w, char g) { return int(std::count(w.begin(), w.end(), g)); }

bool is_odd_name(const std::string& n) { return n == "xi" || n == "eta"; }

CheckReport zero_check(const std::string& id, const std::string& anchor, const Presentation& pres, const NCPoly& r) {
    return make_check(id, anchor, r.is_zero(), pres.str(r));
}

}  // namespace

const ParamList& quantum_params() {
    static const ParamList p = make_params({"p", "q", "lam"});
    return p;
}

Scalar qpow(int e) { return Scalar::param(quantum_params(), "q", e); }
Scalar ppow(int e) { return Scalar::param(quantum_params(), "p", e); }

Presentation manin_plane() {
    Presentation m({"x", "y"}, quantum_params());
    rule(m, 1, 0, word({0, 1}, qpow(-1)));
    return m;
}

Presentation quantum_plane_forms() {
    enum { x, y, xi, eta };
    Presentation f({"x", "y", "xi", "eta"}, quantum_params());
    rule(f, y, x, word({x, y}, qpow(-1)));
    rule(f, xi, x, word({x, xi}, qpow(-2)));
    rule(f, eta, x, word({x, eta}, qpow(-1)) + word({y, xi}, qpow(-2) - Scalar(1)));
    rule(f, xi, y, word({y, xi}, qpow(-1)));
    rule(f, eta, y, word({y, eta}, qpow(-2)));
    rule(f, eta, xi, word({xi, eta}, -qpow(1)));
    rule(f, xi, xi, NCPoly());
    rule(f, eta, eta, NCPoly());
    return f;
}

Presentation exterior_pair(const Scalar& p) {
    Presentation e({"xi", "eta"}, quantum_params());
    rule(e, 0, 0, NCPoly());
    rule(e, 1, 1, NCPoly());
    rule(e, 1, 0, word({0, 1}, -p));
    return e;
}

Presentation combine(const Presentation& a, const Presentation& b) {
    std::vector<std::string> names = a.names();
    names.insert(names.end(), b.names().begin(), b.names().end());
    Presentation c(names, a.params());
    const int na = int(a.size());
    for (const auto& [lhs, rhs] : a.rules()) c.add_rule(std::size_t(lhs[0]), std::size_t(lhs[1]), rhs);
    for (const auto& [lhs, rhs] : b.rules()) {
        NCPoly shifted;
        for (const auto& [w, k] : rhs.terms()) {
            Word s = w;
            for (auto& ch : s) ch = char(ch + na);
            shifted.add(s, k);
        }
        c.add_rule(std::size_t(lhs[0] + na), std::size_t(lhs[1] + na), shifted);
    }
    for (int j = 0; j < int(b.size()); ++j)
        for (int i = 0; i < na; ++i) rule(c, na + j, i, word({i, na + j}));
    return c;
}

Presentation specialize(const Presentation& pres, const std::map<std::string, GaussRat>& point) {
    Presentation s(pres.names(), pres.params());
    for (const auto& [lhs, rhs] : pres.rules()) {
        NCPoly r = rhs.map_coefficients([&](const Scalar& c) {
            Scalar v = c;
            for (const auto& [name, value] : point) v = v.substitute(name, value);
            return v;
        });
        s.set_rule_unchecked(std::size_t(lhs[0]), std::size_t(lhs[1]), r);
    }
    return s;
}

NCPoly substitute(const NCPoly& e, const std::vector<NCPoly>& images, const Presentation& target) {
    NCPoly out;
    for (const auto& [w, c] : e.terms()) {
        NCPoly t(Scalar(1));
        for (char g : w) t = target.multiply(t, images.at(std::size_t(g)));
        out += c * t;
    }
    return out;
}

void PairPoly::add(const Word& l, const Word& r, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(l, r);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

QuantumGroup::QuantumGroup(const Scalar& p)
    : p_(p.with_params(quantum_params())), alg_({"a", "b", "c", "d"}, quantum_params()) {
    if (!p_.is_unit()) throw std::invalid_argument("QuantumGroup: p must be a unit");
    enum { a, b, c, d };
    rule(alg_, b, a, word({a, b}, p_.inverse()));
    rule(alg_, c, a, word({a, c}, qpow(-1)));
    rule(alg_, d, a, word({a, d}) + word({b, c}, qpow(-1) - p_));
    rule(alg_, c, b, word({b, c}, p_ * qpow(-1)));
    rule(alg_, d, b, word({b, d}, qpow(-1)));
    rule(alg_, d, c, word({c, d}, p_.inverse()));
}

QuantumGroup QuantumGroup::generic() { return QuantumGroup(ppow(1)); }
QuantumGroup QuantumGroup::sl_q() { return QuantumGroup(qpow(-1)); }
QuantumGroup QuantumGroup::equal_pq() { return QuantumGroup(qpow(1)); }

NCPoly QuantumGroup::entry(int i, int j) const { return alg_.gen(std::size_t(2 * i + j)); }

NCPoly QuantumGroup::det() const { return alg_.normal_form(word({0, 3}) - word({1, 2}, p_)); }

NCPoly QuantumGroup::det_alt() const { return alg_.normal_form(word({3, 0}) - word({1, 2}, qpow(-1))); }

std::vector<std::pair<std::string, NCPoly>> QuantumGroup::relations() const {
    enum { a, b, c, d };
    return {
        {"ac = q ca", word({a, c}) - word({c, a}, qpow(1))},
        {"bd = q db", word({b, d}) - word({d, b}, qpow(1))},
        {"ad = da + q cb - q^-1 bc", word({a, d}) - word({d, a}) - word({c, b}, qpow(1)) + word({b, c}, qpow(-1))},
        {"bc = (q/p) cb", word({b, c}) - word({c, b}, qpow(1) * p_.inverse())},
        {"ab = p ba", word({a, b}) - word({b, a}, p_)},
        {"cd = p dc", word({c, d}) - word({d, c}, p_)},
    };
}

NCPoly QuantumGroup::twist(const NCPoly& p, int k) const {
    if (k == 0) return p;
    NCPoly out;
    const Scalar ratio = qpow(1) * p_.inverse();
    for (const auto& [w, c] : p.terms()) out.add(w, c * ratio.pow(k * (count(w, 1) - count(w, 2))));
    return out;
}

NCPoly QuantumGroup::det_power(int k) const { return alg_.power(det(), unsigned(k)); }

Localized QuantumGroup::local(const NCPoly& p, int k) const {
    Localized l;
    NCPoly n = alg_.normal_form(p);
    if (k < 0) {
        n = alg_.multiply(n, det_power(-k));
        k = 0;
    }
    if (!n.is_zero()) l.parts[k] = n;
    return l;
}

Localized QuantumGroup::add(const Localized& a, const Localized& b, const Scalar& cb) const {
    Localized r = a;
    for (const auto& [k, p] : b.parts) {
        NCPoly& slot = r.parts[k];
        slot += cb * p;
        if (slot.is_zero()) r.parts.erase(k);
    }
    return r;
}

Localized QuantumGroup::mul(const Localized& a, const Localized& b) const {
    Localized r;
    for (const auto& [k, p] : a.parts)
        for (const auto& [l, q] : b.parts) {
            Localized t;
            NCPoly prod = alg_.multiply(p, twist(q, k));
            if (!prod.is_zero()) t.parts[k + l] = prod;
            r = add(r, t);
        }
    return r;
}

bool QuantumGroup::equal(const Localized& a, const Localized& b) const {
    int m = 0;
    for (const auto& [k, p] : a.parts) m = std::max(m, k);
    for (const auto& [k, p] : b.parts) m = std::max(m, k);
    auto clear = [&](const Localized& l) {
        NCPoly s;
        for (const auto& [k, p] : l.parts) s += alg_.multiply(p, det_power(m - k));
        return s;
    };
    return clear(a) == clear(b);
}

std::string QuantumGroup::str(const Localized& l) const {
    if (l.parts.empty()) return "0";
    std::string s;
    for (const auto& [k, p] : l.parts) {
        if (!s.empty()) s += " + ";
        s += k == 0 ? alg_.str(p) : "(" + alg_.str(p) + ")*D^-" + std::to_string(k);
    }
    return s;
}

PairPoly QuantumGroup::tensor(const NCPoly& l, const NCPoly& r) const {
    PairPoly out;
    NCPoly nl = alg_.normal_form(l), nr = alg_.normal_form(r);
    for (const auto& [wl, cl] : nl.terms())
        for (const auto& [wr, cr] : nr.terms()) out.add(wl, wr, cl * cr);
    return out;
}

PairPoly QuantumGroup::pair_mul(const PairPoly& a, const PairPoly& b) const {
    PairPoly out;
    for (const auto& [k1, c1] : a.terms)
        for (const auto& [k2, c2] : b.terms) {
            NCPoly l = alg_.normal_form(k1.first + k2.first);
            NCPoly r = alg_.normal_form(k1.second + k2.second);
            for (const auto& [wl, cl] : l.terms())
                for (const auto& [wr, cr] : r.terms()) out.add(wl, wr, c1 * c2 * cl * cr);
        }
    return out;
}

PairPoly QuantumGroup::coproduct(const NCPoly& e) const {
    // Delta(M^i_j) = sum_k M^i_k (x) M^k_j
    std::array<PairPoly, 4> img;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                PairPoly t = tensor(entry(i, k), entry(k, j));
                for (const auto& [key, c] : t.terms) img[2 * i + j].add(key.first, key.second, c);
            }
    PairPoly out;
    for (const auto& [w, c] : e.terms()) {
        PairPoly t;
        t.add(Word(), Word(), Scalar(1));
        for (char g : w) t = pair_mul(t, img[std::size_t(g)]);
        for (const auto& [key, v] : t.terms) out.add(key.first, key.second, c * v);
    }
    return out;
}

Scalar QuantumGroup::counit(const NCPoly& e) const {
    Scalar s;
    for (const auto& [w, c] : e.terms())
        if (count(w, 1) == 0 && count(w, 2) == 0) s += c;
    return s;
}

Localized QuantumGroup::antihom(const NCPoly& e, const std::array<Localized, 4>& images,
                                const Localized& det_image) const {
    (void)det_image;
    Localized out;
    const NCPoly n = alg_.normal_form(e);
    for (const auto& [w, c] : n.terms()) {
        Localized t = local(NCPoly(Scalar(1)));
        for (char g : w) t = mul(images[std::size_t(g)], t);
        out = add(out, t, c);
    }
    return out;
}

Localized QuantumGroup::antipode(const NCPoly& e) const {
    const Localized dinv = local(NCPoly(Scalar(1)), 1);
    std::array<Localized, 4> img = {
        mul(dinv, local(entry(1, 1))),
        mul(dinv, local(-qpow(-1) * entry(0, 1))),
        mul(dinv, local(-qpow(1) * entry(1, 0))),
        mul(dinv, local(entry(0, 0))),
    };
    return antihom(e, img, local(det()));
}

Localized QuantumGroup::antipode(const Localized& e) const {
    // S(P D^-k) = S(D^-k) S(P) = D^k S(P)
    Localized out;
    for (const auto& [k, p] : e.parts) out = add(out, mul(local(det_power(k)), antipode(p)));
    return out;
}

NCPoly QuantumGroup::antipode_inverse_candidate(std::size_t generator) const {
    const Scalar pq = p_ * qpow(1);
    const Scalar f[4] = {Scalar(1), pq, pq.inverse(), Scalar(1)};
    return alg_.multiply(det(), f[generator] * alg_.gen(generator));
}

Localized QuantumGroup::antipode_inverse(const NCPoly& e) const {
    const Localized dinv = local(NCPoly(Scalar(1)), 1);
    std::array<Localized, 4> img = {
        mul(dinv, local(entry(1, 1))),
        mul(dinv, local(-p_ * entry(0, 1))),
        mul(dinv, local(-p_.inverse() * entry(1, 0))),
        mul(dinv, local(entry(0, 0))),
    };
    return antihom(e, img, local(det()));
}

Localized QuantumGroup::antipode_inverse(const Localized& e) const {
    Localized out;
    for (const auto& [k, p] : e.parts) out = add(out, mul(local(det_power(k)), antipode_inverse(p)));
    return out;
}

ScalarMatrix r_hat() {
    ScalarMatrix r(4, 4);
    r(0, 0) = qpow(1);
    r(1, 1) = qpow(1) - qpow(-1);
    r(1, 2) = Scalar(1);
    r(2, 1) = Scalar(1);
    r(3, 3) = qpow(1);
    return r;
}

ScalarMatrix sigma_matrix() {
    ScalarMatrix s(4, 4);
    s(0, 0) = qpow(-2);           // xi xi -> q^-2 xi xi
    s(2, 1) = qpow(-1);           // xi eta -> q^-1 eta xi
    s(1, 2) = qpow(-1);           // eta xi -> q^-1 xi eta - (1 - q^-2) eta xi
    s(2, 2) = qpow(-2) - Scalar(1);
    s(3, 3) = qpow(-2);
    return s;
}

std::vector<NCPoly> rtt_components(const QuantumGroup& g) {
    const ScalarMatrix r = r_hat();
    std::vector<NCPoly> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int m = 0; m < 2; ++m)
                for (int n = 0; n < 2; ++n) {
                    NCPoly s;
                    for (int k = 0; k < 2; ++k)
                        for (int l = 0; l < 2; ++l) {
                            s += r(2 * i + j, 2 * k + l) * concat(g.entry(k, m), g.entry(l, n));
                            s -= r(2 * k + l, 2 * m + n) * concat(g.entry(i, k), g.entry(j, l));
                        }
                    out.push_back(g.algebra().normal_form(s));
                }
    return out;
}

std::vector<NCPoly> braid_relation_families() {
    const ScalarMatrix r = r_hat();
    std::vector<NCPoly> out;
    // x^i -> generator i, xi^i -> generator 2 + i
    auto fam = [&](int first, int second, const Scalar& sign_q, bool swap) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                NCPoly s = word({first + i, second + j});
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) {
                        int u = swap ? second + k : first + k;
                        int v = swap ? first + l : second + l;
                        s += (sign_q * r(2 * i + j, 2 * k + l)) * word({u, v});
                    }
                out.push_back(s);
            }
    };
    fam(0, 0, -qpow(-1), false);
    fam(0, 2, -qpow(1), true);
    fam(2, 2, qpow(1), false);
    return out;
}

QuantumPlane::QuantumPlane() : forms_(quantum_plane_forms()) {}

NCPoly QuantumPlane::coord(int k) const { return forms_.gen(std::size_t(k)); }
NCPoly QuantumPlane::diff(int k) const { return forms_.gen(std::size_t(2 + k)); }

NCPoly QuantumPlane::theta() const {
    return forms_.normal_form(concat(coord(0), diff(1)) - qpow(1) * concat(coord(1), diff(0)));
}

NCPoly QuantumPlane::d(const NCPoly& f) const {
    NCPoly out;
    for (const auto& [w, c] : f.terms()) {
        for (char g : w)
            if (g > 1) throw std::invalid_argument("QuantumPlane::d expects a polynomial in x, y");
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            Word t = w.substr(0, pos) + char(w[pos] + 2) + w.substr(pos + 1);
            out += c * forms_.normal_form(t);
        }
    }
    return out;
}

std::map<int, NCPoly> QuantumPlane::move_left(int form, const NCPoly& g) const {
    std::map<int, NCPoly> out;
    NCPoly n = forms_.normal_form(concat(diff(form), g));
    for (const auto& [w, c] : n.terms()) {
        if (w.empty() || w.back() < 2) throw std::logic_error("move_left: lost the form factor");
        Word coeff = w.substr(0, w.size() - 1);
        for (char ch : coeff)
            if (ch > 1) throw std::logic_error("move_left: form inside coefficient");
        out[w.back() - 2].add(coeff, c);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

QuantumPlane::Tensor QuantumPlane::one_form(const NCPoly& alpha) const {
    Tensor t;
    NCPoly n = forms_.normal_form(alpha);
    for (const auto& [w, c] : n.terms()) {
        if (w.empty() || w.back() < 2) throw std::invalid_argument("one_form: term without a form factor");
        Word coeff = w.substr(0, w.size() - 1);
        for (char ch : coeff)
            if (ch > 1) throw std::invalid_argument("one_form: not a one-form");
        t.terms[{w.back() - 2}].add(coeff, c);
    }
    return add(Tensor{}, t);
}

QuantumPlane::Tensor QuantumPlane::basis(const Index& idx) const {
    Tensor t;
    t.terms[idx] = NCPoly(Scalar(1));
    return t;
}

QuantumPlane::Tensor QuantumPlane::add(const Tensor& a, const Tensor& b, const Scalar& cb) const {
    Tensor r = a;
    for (const auto& [k, c] : b.terms) {
        NCPoly& slot = r.terms[k];
        slot += cb * c;
    }
    for (auto it = r.terms.begin(); it != r.terms.end();) it = it->second.is_zero() ? r.terms.erase(it) : std::next(it);
    return r;
}

QuantumPlane::Tensor QuantumPlane::left_mul(const NCPoly& f, const Tensor& t) const {
    Tensor r;
    for (const auto& [k, c] : t.terms) r.terms[k] = forms_.multiply(f, c);
    return add(Tensor{}, r);
}

QuantumPlane::Tensor QuantumPlane::right_mul(const Tensor& t, const NCPoly& g) const {
    Tensor out;
    for (const auto& [idx, c] : t.terms) {
        // cur: indices already passed (rightmost part) -> coefficient still to be moved left
        std::map<Index, NCPoly> cur{{Index{}, g}};
        for (std::size_t pos = idx.size(); pos-- > 0;) {
            std::map<Index, NCPoly> next;
            for (const auto& [suffix, h] : cur)
                for (const auto& [k, h2] : move_left(idx[pos], h)) {
                    Index key{k};
                    key.insert(key.end(), suffix.begin(), suffix.end());
                    next[key] += h2;
                }
            cur = std::move(next);
        }
        Tensor piece;
        for (const auto& [key, h] : cur) piece.terms[key] = forms_.multiply(c, h);
        out = add(out, piece);
    }
    return out;
}

QuantumPlane::Tensor QuantumPlane::tensor(const Tensor& a, const Tensor& b) const {
    Tensor out;
    for (const auto& [ib, cb] : b.terms) {
        Tensor moved = right_mul(a, cb);
        Tensor piece;
        for (const auto& [ia, ca] : moved.terms) {
            Index key = ia;
            key.insert(key.end(), ib.begin(), ib.end());
            piece.terms[key] = ca;
        }
        out = add(out, piece);
    }
    return out;
}

QuantumPlane::Tensor QuantumPlane::sigma(const Tensor& t, std::size_t pos) const {
    const ScalarMatrix s = sigma_matrix();
    Tensor out;
    for (const auto& [idx, c] : t.terms) {
        if (pos + 1 >= idx.size()) throw std::invalid_argument("sigma: position out of range");
        int col = 2 * idx[pos] + idx[pos + 1];
        for (int row = 0; row < 4; ++row) {
            if (s(std::size_t(row), std::size_t(col)).is_zero()) continue;
            Index key = idx;
            key[pos] = row / 2;
            key[pos + 1] = row % 2;
            Tensor piece;
            piece.terms[key] = s(std::size_t(row), std::size_t(col)) * c;
            out = add(out, piece);
        }
    }
    return out;
}

QuantumPlane::Tensor QuantumPlane::connection(const Tensor& one) const {
    Tensor tt = tensor(one_form(theta()), one_form(theta()));
    Tensor out;
    for (const auto& [idx, c] : one.terms) {
        if (idx.size() != 1) throw std::invalid_argument("connection: expects a one-form");
        int k = idx[0];
        if (!c.is_zero() && c.degree() > 0) out = add(out, tensor(one_form(d(c)), basis(idx)));
        out = add(out, left_mul(forms_.multiply(c, lam() * coord(k)), tt));
    }
    return out;
}

QuantumPlane::Tensor QuantumPlane::prolonged_connection(const Tensor& two) const {
    Tensor out;
    for (const auto& [idx, c] : two.terms) {
        if (idx.size() != 2) throw std::invalid_argument("prolonged_connection: expects a two-tensor");
        if (c.degree() > 0) out = add(out, tensor(one_form(d(c)), basis(idx)));
        Tensor da = connection(basis({idx[0]}));
        Tensor db = connection(basis({idx[1]}));
        Tensor inner = add(tensor(da, basis({idx[1]})), sigma(tensor(basis({idx[0]}), db), 0));
        out = add(out, left_mul(c, inner));
    }
    return out;
}

QuantumPlane::Tensor QuantumPlane::wedge_first_two(const Tensor& t) const {
    Tensor out;
    for (const auto& [idx, c] : t.terms) {
        if (idx.size() < 2) throw std::invalid_argument("wedge_first_two: rank below 2");
        if (idx[0] == idx[1]) continue;
        Index key = idx;
        key[0] = 0;
        key[1] = 1;
        Tensor piece;
        piece.terms[key] = idx[0] == 0 ? c : -qpow(1) * c;
        out = add(out, piece);
    }
    return out;
}

std::string QuantumPlane::str(const Tensor& t) const {
    if (t.terms.empty()) return "0";
    std::string s;
    for (const auto& [idx, c] : t.terms) {
        if (!s.empty()) s += " + ";
        s += "(" + forms_.str(c) + ")";
        for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "(x)" : "*") + std::string(idx[k] ? "eta" : "xi");
    }
    return s;
}

Scalar QuantumPlane::curvature_prefactor() { return (Scalar(1) + qpow(-2)) * (Scalar(1) + qpow(-4)); }

std::array<std::array<NCPoly, 2>, 2> QuantumPlane::curvature_data() const {
    const Scalar f = lam() * curvature_prefactor();
    enum { x, y };
    return {{{f * word({x, y}, qpow(2)), f * word({x, x}, -qpow(1))},
             {f * word({y, y}, qpow(2)), f * word({x, y}, Scalar(-1))}}};
}

bool is_root_of_unity(const GaussRat& q) {
    GaussRat p(1);
    for (int k = 1; k <= 24; ++k) {
        p *= q;
        if (p == GaussRat(1)) return true;
    }
    return false;
}

// ---------------------------------------------------------------- checks

std::vector<CheckReport> quantum_rewrite_checks() {
    std::vector<CheckReport> out;
    auto confl = [&](const std::string& id, const Presentation& p) {
        ConfluenceReport r = p.confluence();
        std::string w;
        if (!r.confluent)
            w = p.str(r.failures[0].overlap) + ": " + p.str(r.failures[0].left) + " vs " + p.str(r.failures[0].right);
        CheckReport c = make_check(id, "critical pairs of length three", r.confluent, w);
        c.params.emplace_back("pairs", std::to_string(r.pairs_checked));
        out.push_back(c);
    };
    QuantumGroup g = QuantumGroup::generic();
    confl("manin-confluence", manin_plane());
    confl("glpq-confluence", g.algebra());
    confl("forms-confluence", quantum_plane_forms());
    confl("glpq-manin-confluence", combine(g.algebra(), manin_plane()));
    confl("glpq-exterior-confluence", combine(g.algebra(), exterior_pair(g.p())));

    Presentation m = manin_plane();
    out.push_back(make_check("manin-normal-order-yx", "yx reduces to q^-1 xy",
                             m.normal_form(m.parse("yx")) == m.parse("q^-1*xy"), m.str(m.normal_form(m.parse("yx")))));
    const Presentation& a = g.algebra();
    out.push_back(make_check("glpq-normal-order-ba", "ba reduces to p^-1 ab",
                             a.normal_form(a.parse("ba")) == a.parse("p^-1*ab"), a.str(a.normal_form(a.parse("ba")))));
    out.push_back(make_check("glpq-normal-order-da", "da reduces to ad + (q^-1 - p) bc",
                             a.normal_form(a.parse("da")) == a.parse("ad + (q^-1 - p)*bc"),
                             a.str(a.normal_form(a.parse("da")))));

    Presentation bad = g.algebra();
    bad.remove_rule(3, 0);
    bad.set_rule_unchecked(0, 3, bad.parse("da - (q^-1 - p)*bc"));
    ConfluenceReport br = bad.confluence();
    bool witnessed = false;
    for (const auto& f : br.failures) witnessed = witnessed || bad.str(f.overlap) == "dba";
    out.push_back(make_check("glpq-reversed-rule-detected", "confluence checker rejects ad -> da",
                             !br.confluent && witnessed, "no failure at dba"));
    return out;
}

std::vector<CheckReport> covariance_checks() {
    std::vector<CheckReport> out;
    QuantumGroup g = QuantumGroup::generic();
    enum { a, b, c, d };
    // images of the plane coordinates under the coaction, inside the combined algebra
    auto coact = [&](const Presentation& comb, int base) {
        std::vector<NCPoly> img;
        img.push_back(concat(comb.gen(std::size_t(a)), comb.gen(std::size_t(base))) +
                      concat(comb.gen(std::size_t(b)), comb.gen(std::size_t(base + 1))));
        img.push_back(concat(comb.gen(std::size_t(c)), comb.gen(std::size_t(base))) +
                      concat(comb.gen(std::size_t(d)), comb.gen(std::size_t(base + 1))));
        return img;
    };

    Presentation gm = combine(g.algebra(), manin_plane());
    auto xm = coact(gm, 4);
    Presentation m = manin_plane();
    out.push_back(zero_check("coaction-preserves-manin", "x'y' - q y'x' = 0", gm,
                             substitute(m.parse("xy - q*yx"), xm, gm)));
    {
        std::vector<NCPoly> unit_point = {NCPoly(Scalar(1)), NCPoly(), NCPoly(), NCPoly(Scalar(1)), m.gen(std::size_t(0)),
                                          m.gen(std::size_t(1))};
        std::vector<NCPoly> xs;
        for (const auto& e : xm) xs.push_back(substitute(e, unit_point, m));
        out.push_back(make_check("coaction-counit-point", "a = d = 1, b = c = 0 gives the identity",
                                 xs[0] == m.gen(std::size_t(0)) && xs[1] == m.gen(std::size_t(1)),
                                 m.str(xs[0]) + ", " + m.str(xs[1])));
    }

    Presentation ge = combine(g.algebra(), exterior_pair(g.p()));
    auto xe = coact(ge, 4);
    const NCPoly xi = ge.gen(std::size_t(4)), eta = ge.gen(std::size_t(5));
    NCPoly xi_eta = ge.multiply(xe[0], xe[1]);
    NCPoly eta_xi = ge.multiply(xe[1], xe[0]);
    out.push_back(zero_check("coaction-preserves-exterior", "xi'eta' + p^-1 eta'xi' = 0", ge,
                             xi_eta + g.p().inverse() * eta_xi));
    out.push_back(zero_check("coaction-xi-square", "xi'^2 = 0", ge, ge.multiply(xe[0], xe[0])));
    out.push_back(zero_check("coaction-eta-square", "eta'^2 = 0", ge, ge.multiply(xe[1], xe[1])));
    NCPoly det = substitute(g.det(), {ge.gen(std::size_t(0)), ge.gen(std::size_t(1)), ge.gen(std::size_t(2)),
                                      ge.gen(std::size_t(3))},
                            ge);
    out.push_back(zero_check("area-element-transforms-by-det", "xi'eta' = D xi eta", ge,
                             xi_eta - ge.multiply(det, concat(xi, eta))));

    // the full differential calculus under the coaction, for both choices of p
    Presentation forms = quantum_plane_forms();
    const std::vector<std::pair<std::string, NCPoly>> rels = {
        {"xy = q yx", forms.parse("xy - q*yx")},
        {"x xi = q^2 xi x", forms.parse("x xi - q^2*xi x")},
        {"x eta = q eta x + (q^2 - 1) xi y", forms.parse("x eta - q*eta x - (q^2 - 1)*xi y")},
        {"y xi = q xi y", forms.parse("y xi - q*xi y")},
        {"y eta = q^2 eta y", forms.parse("y eta - q^2*eta y")},
        {"xi^2 = 0", forms.parse("xi xi")},
        {"eta^2 = 0", forms.parse("eta eta")},
        {"eta xi + q xi eta = 0", forms.parse("eta xi + q*xi eta")},
    };
    for (const auto& [label, grp] : {std::make_pair(std::string("p-equals-q"), QuantumGroup::equal_pq()),
                                     std::make_pair(std::string("sl-q"), QuantumGroup::sl_q())}) {
        Presentation gf = combine(grp.algebra(), forms);
        auto xx = coact(gf, 4);
        auto xf = coact(gf, 6);
        std::vector<NCPoly> img = {gf.gen(std::size_t(0)), gf.gen(std::size_t(1)), gf.gen(std::size_t(2)),
                                   gf.gen(std::size_t(3)), xx[0], xx[1], xf[0], xf[1]};
        std::vector<NCPoly> forms_img = {xx[0], xx[1], xf[0], xf[1]};
        std::string witness;
        for (const auto& [name, rel] : rels) {
            NCPoly r = substitute(rel, forms_img, gf);
            if (!r.is_zero() && witness.empty()) witness = name + ": " + gf.str(r);
        }
        (void)img;
        CheckReport rep = make_check("coaction-preserves-forms-" + label, "coacted x, xi obey the same relations",
                                     witness.empty(), witness);
        rep.params.emplace_back("p", grp.p().str());
        out.push_back(rep);
    }
    return out;
}

std::vector<CheckReport> qdet_checks(const QuantumGroup& g) {
    std::vector<CheckReport> out;
    const Presentation& A = g.algebra();
    const NCPoly D = g.det();
    const Scalar q = qpow(1);
    out.push_back(zero_check("qdet-two-forms-agree", "ad - p bc = da - q^-1 bc", A, D - g.det_alt()));
    out.push_back(zero_check("qdet-commutes-with-a", "[D, a] = 0", A, A.commutator(D, g.entry(0, 0))));
    out.push_back(zero_check("qdet-commutes-with-d", "[D, d] = 0", A, A.commutator(D, g.entry(1, 1))));
    out.push_back(zero_check("qdet-b-commutation", "Db = (p/q) bD", A,
                             A.multiply(D, g.entry(0, 1)) - (g.p() * q.inverse()) * A.multiply(g.entry(0, 1), D)));
    out.push_back(zero_check("qdet-c-commutation", "Dc = (q/p) cD", A,
                             A.multiply(D, g.entry(1, 0)) - (q * g.p().inverse()) * A.multiply(g.entry(1, 0), D)));
    Scalar eps = g.counit(D);
    out.push_back(make_check("qdet-counit", "eps(D) = 1", eps == Scalar(1), eps.str()));
    const Localized one = g.local(NCPoly(Scalar(1)));
    const Localized dinv = g.local(NCPoly(Scalar(1)), 1);
    const Localized dl = g.local(D);
    out.push_back(make_check("qdet-inverse", "D^-1 D = 1 = D D^-1",
                             g.equal(g.mul(dinv, dl), one) && g.equal(g.mul(dl, dinv), one),
                             g.str(g.mul(dinv, dl))));
    bool ad_ok = true;
    for (int k : {0, 3}) {
        NCPoly x = A.gen(std::size_t(k));
        ad_ok = ad_ok && g.equal(g.mul(dinv, g.local(x)), g.mul(g.local(x), dinv));
    }
    out.push_back(make_check("qdet-inverse-commutes-with-a-d", "D^-1 commutes with a and d", ad_ok));
    Localized lhs = g.mul(g.local(g.entry(0, 1)), dinv);
    Localized rhs = g.mul(dinv, g.local((g.p() * q.inverse()) * g.entry(0, 1)));
    Localized lhs_c = g.mul(g.local(g.entry(1, 0)), dinv);
    Localized rhs_c = g.mul(dinv, g.local((q * g.p().inverse()) * g.entry(1, 0)));
    out.push_back(make_check("qdet-inverse-b-c-commutation", "b D^-1 = (p/q) D^-1 b, c D^-1 = (q/p) D^-1 c",
                             g.equal(lhs, rhs) && g.equal(lhs_c, rhs_c), g.str(lhs) + " vs " + g.str(rhs)));
    // the twist used for localization is the conjugation by D on every generator
    bool twist_ok = true;
    for (std::size_t k = 0; k < 4; ++k) {
        NCPoly x = A.gen(k);
        twist_ok = twist_ok && A.multiply(g.twist(x, -1), D) == A.multiply(D, x);
    }
    out.push_back(make_check("qdet-localization-twist", "D x D^-1 agrees with the localization rule", twist_ok));
    return out;
}

std::vector<CheckReport> hopf_checks(const QuantumGroup& g) {
    std::vector<CheckReport> out;
    const Presentation& A = g.algebra();
    {
        std::string w;
        for (const auto& [name, rel] : g.relations())
            if (w.empty() && !g.coproduct(rel).is_zero()) w = name;
        out.push_back(make_check("coproduct-algebra-map", "Delta of every defining relation vanishes", w.empty(), w));
    }
    {
        std::string w;
        for (const auto& [name, rel] : g.relations())
            if (w.empty() && !g.counit(rel).is_zero()) w = name;
        out.push_back(make_check("counit-algebra-map", "eps of every defining relation vanishes", w.empty(), w));
    }
    {
        bool ok = true;
        for (std::size_t k = 0; k < 4; ++k) {
            PairPoly cp = g.coproduct(A.gen(k));
            NCPoly left, right;
            for (const auto& [key, c] : cp.terms) {
                left += (c * g.counit(NCPoly::word(key.first))) * NCPoly::word(key.second);
                right += (c * g.counit(NCPoly::word(key.second))) * NCPoly::word(key.first);
            }
            ok = ok && left == A.gen(k) && right == A.gen(k);
        }
        out.push_back(make_check("counit-axiom", "(eps x id) Delta = id = (id x eps) Delta on generators", ok));
    }
    out.push_back(make_check("coproduct-det", "Delta(D) = D (x) D", g.coproduct(g.det()) == g.tensor(g.det(), g.det())));

    const Localized one = g.local(NCPoly(Scalar(1)));
    std::array<std::array<Localized, 2>, 2> S, M;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            S[i][j] = g.antipode(g.entry(i, j));
            M[i][j] = g.local(g.entry(i, j));
        }
    auto matrix_check = [&](bool s_first) {
        std::string w;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Localized s;
                for (int k = 0; k < 2; ++k)
                    s = g.add(s, s_first ? g.mul(S[i][k], M[k][j]) : g.mul(M[i][k], S[k][j]));
                Localized target = i == j ? one : Localized{};
                if (w.empty() && !g.equal(s, target))
                    w = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + g.str(s);
            }
        return w;
    };
    std::string w1 = matrix_check(true), w2 = matrix_check(false);
    out.push_back(make_check("antipode-left-inverse", "S(M) M = 1", w1.empty(), w1));
    out.push_back(make_check("antipode-right-inverse", "M S(M) = 1", w2.empty(), w2));
    {
        Localized sd = g.antipode(g.det());
        out.push_back(make_check("antipode-det", "S(D) = D^-1", g.equal(sd, g.local(NCPoly(Scalar(1)), 1)), g.str(sd)));
        Localized sdi = g.antipode(g.local(NCPoly(Scalar(1)), 1));
        bool is_d = g.equal(sdi, g.local(g.det()));
        CheckReport r = make_check("antipode-det-inverse", "S(D^-1) = D (printed as S(D))", is_d, g.str(sdi));
        out.push_back(r);
    }
    {
        // printed right-hand form (d, b/p; -p c, a) D^-1
        const Localized dinv = g.local(NCPoly(Scalar(1)), 1);
        Localized printed_b = g.mul(g.local(g.p().inverse() * g.entry(0, 1)), dinv);
        Localized printed_c = g.mul(g.local(-g.p() * g.entry(1, 0)), dinv);
        bool c_ok = g.equal(printed_c, S[1][0]);
        bool b_ok = g.equal(printed_b, S[0][1]);
        bool b_neg = g.equal(g.mul(g.local(-g.p().inverse() * g.entry(0, 1)), dinv), S[0][1]);
        CheckReport r = make_check("antipode-right-form", "S(M) written with D^-1 on the right", b_ok && c_ok,
                                   std::string("c entry ") + (c_ok ? "agrees" : "differs") + "; b entry " +
                                       (b_ok ? "agrees" : b_neg ? "agrees only as -b/p D^-1" : "differs"));
        if (!r.passed() && c_ok && b_neg) r.status = CheckStatus::Warn;
        out.push_back(r);
    }
    {
        Localized s2 = g.antipode(g.antipode(g.entry(0, 1)));
        out.push_back(make_check("antipode-not-involutive", "S^2 differs from the identity",
                                 !g.equal(s2, g.local(g.entry(0, 1))), g.str(s2)));
    }
    {
        std::string w;
        for (std::size_t k = 0; k < 4 && w.empty(); ++k) {
            Localized back = g.antipode(g.antipode_inverse_candidate(k));
            if (!g.equal(back, g.local(A.gen(k)))) w = "S(S'(" + A.name(k) + ")) = " + g.str(back);
        }
        CheckReport r = make_check("antipode-inverse-printed", "printed inverse antipode undoes S", w.empty(), w);
        if (!r.passed()) r.status = CheckStatus::Warn;
        out.push_back(r);
    }
    {
        std::string w;
        for (std::size_t k = 0; k < 4 && w.empty(); ++k) {
            Localized a = g.antipode(g.antipode_inverse(A.gen(k)));
            Localized b = g.antipode_inverse(g.antipode(A.gen(k)));
            if (!g.equal(a, g.local(A.gen(k))) || !g.equal(b, g.local(A.gen(k))))
                w = A.name(k) + ": " + g.str(a) + " / " + g.str(b);
        }
        out.push_back(make_check("antipode-inverse-derived", "S S^-1 = S^-1 S = id on generators", w.empty(), w));
    }
    return out;
}

std::vector<CheckReport> rtt_checks() {
    std::vector<CheckReport> out;
    for (const auto& [label, grp] : {std::make_pair(std::string("sl-q"), QuantumGroup::sl_q()),
                                     std::make_pair(std::string("p-equals-q"), QuantumGroup::equal_pq())}) {
        auto comps = rtt_components(grp);
        std::string w;
        int zero = 0;
        for (std::size_t k = 0; k < comps.size(); ++k) {
            if (comps[k].is_zero()) {
                ++zero;
                continue;
            }
            if (w.empty())
                w = "(" + std::to_string(k / 8 + 1) + "," + std::to_string(k / 4 % 2 + 1) + "," +
                    std::to_string(k / 2 % 2 + 1) + "," + std::to_string(k % 2 + 1) + "): " + grp.algebra().str(comps[k]);
        }
        CheckReport r = make_check("rtt-" + label, "R a a = a a R, all 16 components", w.empty(), w);
        r.params.emplace_back("p", grp.p().str());
        r.params.emplace_back("zero_components", std::to_string(zero));
        out.push_back(r);
    }

    Presentation forms = quantum_plane_forms();
    auto fam = braid_relation_families();
    std::string w;
    for (std::size_t k = 0; k < fam.size(); ++k) {
        NCPoly r = forms.normal_form(fam[k]);
        if (!r.is_zero() && w.empty()) w = "family " + std::to_string(k / 4 + 1) + " entry " + std::to_string(k % 4) + ": " + forms.str(r);
    }
    // rank of the families at a generic rational point must equal the number of rules
    std::vector<Word> words;
    for (char i = 0; i < 4; ++i)
        for (char j = 0; j < 4; ++j) words.push_back(Word{i, j});
    ScalarMatrix mat(fam.size(), words.size());
    std::map<std::string, GaussRat> pt{{"q", GaussRat(2)}, {"p", GaussRat(3)}, {"lam", GaussRat(1)}};
    for (std::size_t r = 0; r < fam.size(); ++r)
        for (std::size_t c = 0; c < words.size(); ++c) mat(r, c) = Scalar(fam[r].coefficient(words[c]).evaluate_at(pt));
    std::size_t rank = solve_linear(mat, ScalarMatrix(mat.rows(), 1)).rank;
    bool ok = w.empty() && rank == forms.rules().size();
    CheckReport fr = make_check("braid-families-give-forms-relations", "relation families from the braid matrix",
                                ok, w.empty() ? "rank " + std::to_string(rank) : w);
    out.push_back(fr);

    ScalarMatrix classical = r_hat().map([](const Scalar& s) { return Scalar(s.evaluate_at({{"q", GaussRat(1)}})); });
    ScalarMatrix flip(4, 4);
    flip(0, 0) = flip(1, 2) = flip(2, 1) = flip(3, 3) = Scalar(1);
    out.push_back(make_check("braid-classical-limit", "R at q = 1 is the flip", classical == flip, classical.str()));
    return out;
}

std::vector<CheckReport> sigma_checks(const QuantumPlane& qp) {
    std::vector<CheckReport> out;
    const ScalarMatrix s = sigma_matrix();
    const ScalarMatrix qr = qpow(1) * r_hat();
    const ScalarMatrix id = ScalarMatrix::identity(4);
    out.push_back(make_check("sigma-inverts-qR", "sigma (q R) = (q R) sigma = 1", s * qr == id && qr * s == id,
                             (s * qr).str()));

    using T = QuantumPlane::Tensor;
    auto b = [&](int i, int j) { return qp.basis({i, j}); };
    auto eig = [&](const T& v, const Scalar& lambda) { return qp.sigma(v) == qp.add(T{}, v, lambda) && !v.is_zero(); };
    bool triple = eig(b(0, 0), qpow(-2)) && eig(b(1, 1), qpow(-2)) && eig(qp.add(b(1, 0), b(0, 1), qpow(1)), qpow(-2));
    bool single = eig(qp.add(b(0, 1), b(1, 0), -qpow(1)), Scalar(-1));
    out.push_back(make_check("sigma-eigenvectors", "q^-2 on three vectors, -1 on one", triple && single));

    // printed images of the basis, independent of the matrix
    {
        bool ok = qp.sigma(b(0, 0)) == qp.add(T{}, b(0, 0), qpow(-2)) &&
                  qp.sigma(b(0, 1)) == qp.add(T{}, b(1, 0), qpow(-1)) &&
                  qp.sigma(b(1, 0)) == qp.add(qp.add(T{}, b(0, 1), qpow(-1)), b(1, 0), qpow(-2) - Scalar(1)) &&
                  qp.sigma(b(1, 1)) == qp.add(T{}, b(1, 1), qpow(-2));
        out.push_back(make_check("sigma-basis-images", "sigma on xi, eta tensors", ok));
    }

    // module map: sigma(T f) = sigma(T) f for monomials f
    {
        std::string w;
        const Presentation& F = qp.forms();
        for (const char* f : {"x", "y", "xy", "yy", "xxy"}) {
            NCPoly fp = F.parse(f);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    T lhs = qp.sigma(qp.right_mul(b(i, j), fp));
                    T rhs = qp.right_mul(qp.sigma(b(i, j)), fp);
                    if (!(lhs == rhs) && w.empty())
                        w = std::string(f) + " on (" + std::to_string(i) + "," + std::to_string(j) + "): " +
                            qp.str(qp.add(lhs, rhs, Scalar(-1)));
                }
            // middle linearity
            T l = qp.sigma(qp.tensor(qp.one_form(concat(qp.diff(0), fp)), qp.basis({1})));
            T r = qp.sigma(qp.tensor(qp.basis({0}), qp.one_form(concat(fp, qp.diff(1)))));
            if (!(l == r) && w.empty()) w = std::string("middle ") + f;
        }
        out.push_back(make_check("sigma-bimodule-map", "sigma commutes with right multiplication", w.empty(), w));
    }

    // relations with the canonical one-form
    const T th = qp.one_form(qp.theta());
    const T xi = qp.basis({0}), eta = qp.basis({1});
    struct Rel {
        std::string id, anchor;
        T lhs, rhs;
    };
    const Scalar q = qpow(1);
    std::vector<Rel> rels = {
        {"sigma-xi-theta", "sigma(xi (x) theta) = q^-3 theta (x) xi", qp.sigma(qp.tensor(xi, th)),
         qp.add(T{}, qp.tensor(th, xi), qpow(-3))},
        {"sigma-theta-xi", "sigma(theta (x) xi) = q xi (x) theta - (1 - q^-1) theta (x) xi",
         qp.sigma(qp.tensor(th, xi)), qp.add(qp.add(T{}, qp.tensor(xi, th), q), qp.tensor(th, xi), qpow(-1) - Scalar(1))},
        {"sigma-eta-theta", "sigma(eta (x) theta) = q^-3 theta (x) eta", qp.sigma(qp.tensor(eta, th)),
         qp.add(T{}, qp.tensor(th, eta), qpow(-3))},
        {"sigma-theta-eta", "sigma(theta (x) eta) = q eta (x) theta - (1 - q^-2) theta (x) eta",
         qp.sigma(qp.tensor(th, eta)), qp.add(qp.add(T{}, qp.tensor(eta, th), q), qp.tensor(th, eta), qpow(-2) - Scalar(1))},
        {"sigma-theta-theta", "sigma(theta (x) theta) = q^-2 theta (x) theta", qp.sigma(qp.tensor(th, th)),
         qp.add(T{}, qp.tensor(th, th), qpow(-2))},
    };
    rels.push_back({"sigma-theta-xi-q2", "sigma(theta (x) xi) = q xi (x) theta - (1 - q^-2) theta (x) xi",
                    qp.sigma(qp.tensor(th, xi)),
                    qp.add(qp.add(T{}, qp.tensor(xi, th), q), qp.tensor(th, xi), qpow(-2) - Scalar(1))});
    for (const auto& r : rels) {
        CheckReport c = make_check(r.id, r.anchor, r.lhs == r.rhs, "difference " + qp.str(qp.add(r.lhs, r.rhs, Scalar(-1))));
        // the printed (1 - q^-1) coefficient is a known suspect; its failure is reported, not fatal
        if (r.id == "sigma-theta-xi" && !c.passed()) c.status = CheckStatus::Warn;
        out.push_back(c);
    }
    return out;
}

std::vector<CheckReport> connection_checks(const QuantumPlane& qp) {
    std::vector<CheckReport> out;
    const Presentation& F = qp.forms();
    const NCPoly th = qp.theta();
    const Scalar q = qpow(1);
    out.push_back(zero_check("theta-squared", "theta^2 = 0", F, F.multiply(th, th)));
    for (int k = 0; k < 2; ++k) {
        std::string n = k ? "y" : "x";
        out.push_back(zero_check("theta-commutes-" + n, n + " theta = q theta " + n, F,
                                 F.multiply(qp.coord(k), th) - q * F.multiply(th, qp.coord(k))));
        // the printed exponent is checked as stated; the reversed order is what the rules give
        std::string m = k ? "eta" : "xi";
        out.push_back(zero_check("theta-commutes-" + m, m + " theta = -q^3 theta " + m, F,
                                 F.multiply(qp.diff(k), th) + qpow(3) * F.multiply(th, qp.diff(k))));
        out.push_back(zero_check("theta-commutes-" + m + "-reversed", "theta " + m + " = -q^3 " + m + " theta", F,
                                 F.multiply(th, qp.diff(k)) + qpow(3) * F.multiply(qp.diff(k), th)));
    }

    using T = QuantumPlane::Tensor;
    {
        std::string w;
        for (int k = 0; k < 2; ++k)
            for (const char* g : {"x", "y", "xy", "yy"}) {
                NCPoly gp = F.parse(g);
                T lhs = qp.connection(qp.one_form(concat(qp.diff(k), gp)));
                T rhs = qp.add(qp.sigma(qp.tensor(qp.basis({k}), qp.one_form(qp.d(gp)))),
                               qp.right_mul(qp.connection(qp.basis({k})), gp));
                if (!(lhs == rhs) && w.empty())
                    w = std::string(k ? "eta" : "xi") + " " + g + ": " + qp.str(qp.add(lhs, rhs, Scalar(-1)));
            }
        out.push_back(make_check("connection-twisted-leibniz", "D(xi f) = sigma(xi (x) df) + (D xi) f", w.empty(), w));
    }
    {
        bool ok = true;
        for (int k = 0; k < 2; ++k) ok = ok && qp.wedge_first_two(qp.connection(qp.basis({k}))).is_zero();
        out.push_back(make_check("connection-torsion-free", "the antisymmetric part of D xi^k vanishes", ok));
    }

    const Scalar pref = QuantumPlane::curvature_prefactor();
    auto at = [&](const Scalar& s, const GaussRat& v) { return s.evaluate_at({{"q", v}}); };
    const GaussRat i = GaussRat::i();
    for (const auto& [label, v] : {std::make_pair(std::string("i"), i), std::make_pair(std::string("-i"), -i)}) {
        GaussRat val = at(pref, v);
        CheckReport r = make_check("curvature-prefactor-q-" + label, "prefactor vanishes at q = " + label, val.is_zero(),
                                   val.str());
        r.params.emplace_back("q", label);
        r.params.emplace_back("value", val.str());
        out.push_back(r);
    }
    {
        Scalar t = pref.deflate("q", 2);  // t = q^2
        for (const auto& [label, v] : {std::make_pair(std::string("i"), i), std::make_pair(std::string("-i"), -i)}) {
            GaussRat val = at(t, v);
            CheckReport r = make_check("curvature-prefactor-q2-" + label, "prefactor vanishes at q^2 = " + label,
                                       val.is_zero(), val.str());
            r.params.emplace_back("q^2", label);
            r.params.emplace_back("value", val.str());
            out.push_back(r);
        }
    }
    {
        GaussRat val = at(pref, GaussRat(1));
        CheckReport r = make_check("curvature-prefactor-q-1", "prefactor is nonzero at q = 1", val == GaussRat(4), val.str());
        r.params.emplace_back("q", "1");
        r.params.emplace_back("value", val.str());
        out.push_back(r);
    }

    // experimental: D^2 through the sigma-twisted prolongation, compared with the displayed curvature
    {
        auto curv = qp.curvature_data();
        std::string w;
        for (int k = 0; k < 2; ++k) {
            T d2 = qp.wedge_first_two(qp.prolonged_connection(qp.connection(qp.basis({k}))));
            T expected;
            for (int j = 0; j < 2; ++j) {
                T piece;
                piece.terms[{0, 1, j}] = -curv[k][j];
                expected = qp.add(expected, piece);
            }
            if (!(d2 == expected) && w.empty()) w = "k=" + std::to_string(k) + ": D^2 = " + qp.str(d2);
        }
        CheckReport r = make_check("curvature-prolongation-experimental",
                                   "D^2 from the sigma-twisted prolongation vs the displayed curvature", w.empty(), w);
        if (!r.passed()) r.status = CheckStatus::Warn;
        out.push_back(r);
    }
    {
        CheckReport r = make_check("bianchi-recorded", "Bianchi identity (recorded only, not computed)", true);
        r.status = CheckStatus::Warn;
        r.witness = "no-op";
        out.push_back(r);
    }
    return out;
}

std::vector<CheckReport> specialization_checks() {
    std::vector<CheckReport> out;
    const std::map<std::string, GaussRat> pt{{"q", GaussRat(1)}, {"p", GaussRat(1)}};
    QuantumGroup g = QuantumGroup::generic();
    const std::vector<std::pair<std::string, Presentation>> shipped = {
        {"manin", manin_plane()},
        {"glpq", g.algebra()},
        {"forms", quantum_plane_forms()},
        {"glpq-exterior", combine(g.algebra(), exterior_pair(g.p()))},
    };
    for (const auto& [name, pres] : shipped) {
        Presentation s = specialize(pres, pt);
        std::string w;
        for (const auto& [lhs, rhs] : s.rules()) {
            Word swapped{lhs[1], lhs[0]};
            bool odd = is_odd_name(s.name(std::size_t(lhs[0]))) && is_odd_name(s.name(std::size_t(lhs[1])));
            NCPoly expect = odd ? (lhs[0] == lhs[1] ? NCPoly() : -NCPoly::word(swapped)) : NCPoly::word(swapped);
            if (rhs != expect && w.empty()) w = s.str(lhs) + " -> " + s.str(rhs);
        }
        out.push_back(make_check("classical-limit-" + name, "q = p = 1 leaves only (graded) swaps", w.empty(), w));
    }
    return out;
}

std::vector<CheckReport> quantum_evaluation_checks(const GaussRat& q) {
    std::vector<CheckReport> out;
    if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
    const std::map<std::string, GaussRat> pt{{"q", q}};
    GaussRat val = QuantumPlane::curvature_prefactor().evaluate_at(pt);
    CheckReport pr;
    pr.id = "curvature-prefactor-at-point";
    pr.anchor = "(1 + q^-2)(1 + q^-4) at the requested q";
    pr.params = {{"q", q.str()}, {"value", val.str()}};
    pr.status = CheckStatus::Pass;
    out.push_back(pr);

    ScalarMatrix s = sigma_matrix().map([&](const Scalar& c) { return Scalar(c.evaluate_at(pt)); });
    ScalarMatrix qr = (qpow(1) * r_hat()).map([&](const Scalar& c) { return Scalar(c.evaluate_at(pt)); });
    CheckReport inv = make_check("sigma-inverts-qR-at-point", "sigma (q R) = 1 at the requested q",
                                 s * qr == ScalarMatrix::identity(4), (s * qr).str());
    inv.params = {{"q", q.str()}};
    if (inv.passed() && is_root_of_unity(q)) {
        inv.status = CheckStatus::Warn;
        inv.witness = "q is a root of unity";
    }
    out.push_back(inv);
    return out;
}

}  // namespace ncg

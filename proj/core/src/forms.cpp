#include "ncg/forms.hpp"

#include <sstream>

namespace ncg {

int wedge_sign(Mask a, Mask b) {
    if (a & b) return 0;
    int swaps = 0;
    while (b) {
        int y = __builtin_ctz(b);
        b &= b - 1;
        swaps += __builtin_popcount(a >> (y + 1));
    }
    return (swaps & 1) ? -1 : 1;
}

Form Form::zero_form(const Mat& f) {
    Form r(f.rows());
    r.add(0, f);
    return r;
}

Form Form::generator(std::size_t n, std::size_t leg, const Mat& coeff) {
    Form r(n);
    r.add(Mask(1) << leg, coeff);
    return r;
}

Form Form::monomial(Mask mask, const Mat& coeff) {
    Form r(coeff.rows());
    r.add(mask, coeff);
    return r;
}

int Form::degree() const {
    if (terms_.empty()) return -1;
    int p = degree_of(terms_.begin()->first);
    for (const auto& t : terms_)
        if (degree_of(t.first) != p) throw std::logic_error("form is not homogeneous");
    return p;
}

const Mat* Form::component(Mask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? nullptr : &it->second;
}

Mat Form::coefficient(Mask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Mat(n_, n_) : it->second;
}

void Form::add(Mask mask, const Mat& coeff) {
    if (n_ == 0) n_ = coeff.rows();
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(mask, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

Form& Form::operator+=(const Form& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

Form Form::operator-() const {
    Form r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Form operator*(const Scalar& s, const Form& f) {
    Form r(f.n_);
    for (const auto& [m, c] : f.terms_) r.add(m, s * c);
    return r;
}

Form operator*(const Mat& a, const Form& f) {
    Form r(a.rows());
    for (const auto& [m, c] : f.terms_) r.add(m, a * c);
    return r;
}

Form operator*(const Form& f, const Mat& a) {
    Form r(f.n_);
    for (const auto& [m, c] : f.terms_) r.add(m, c * a);
    return r;
}

Form Form::homogeneous_part(int p) const {
    Form r(n_);
    for (const auto& [m, c] : terms_)
        if (degree_of(m) == p) r.terms_.emplace(m, c);
    return r;
}

std::string Form::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        os << (first ? "" : " + ") << c.str();
        for (int k = 0; k < 32; ++k)
            if (m & (Mask(1) << k)) os << " t" << k;
        first = false;
    }
    return os.str();
}

Form wedge(const Form& a, const Form& b) {
    Form r(a.n() ? a.n() : b.n());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            int s = wedge_sign(ma, mb);
            if (s == 0) continue;
            Mat p = ca * cb;
            if (s < 0) p = -p;
            r.add(ma | mb, p);
        }
    return r;
}

CentralForm Calculus::d_monomial(Mask mask) const {
    CentralForm out;
    Mask lower = 0;
    int j = 0;
    for (Mask rest = mask; rest; ++j) {
        int k = __builtin_ctz(rest);
        rest &= rest - 1;
        Mask upper = rest;
        for (const auto& [m2, c] : d_generators_[k]) {
            int s1 = wedge_sign(lower, m2);
            if (s1 == 0) continue;
            int s2 = wedge_sign(lower | m2, upper);
            if (s2 == 0) continue;
            int s = s1 * s2 * ((j & 1) ? -1 : 1);
            GaussRat v = s > 0 ? c : -c;
            Mask key = lower | m2 | upper;
            auto it = out.find(key);
            if (it == out.end())
                out.emplace(key, v);
            else {
                it->second += v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
        lower |= Mask(1) << k;
    }
    return out;
}

Form Calculus::d(const Form& w) const {
    Form r(n_);
    for (const auto& [m, f] : w.terms()) {
        for (std::size_t leg = 0; leg < legs(); ++leg) {
            Mask g = Mask(1) << leg;
            if (m & g) continue;
            Mat df = partial(leg, f);
            if (df.is_zero()) continue;
            if (wedge_sign(g, m) < 0) df = -df;
            r.add(g | m, df);
        }
        for (const auto& [m2, c] : d_monomial(m)) r.add(m2, Scalar(c) * f);
    }
    return r;
}

Mat Calculus::apply(const Derivation& x, const Mat& f) const {
    Mat r(n_, n_);
    for (std::size_t k = 0; k < x.components.size(); ++k) {
        if (x.components[k].is_zero()) continue;
        r += x.components[k] * partial(k, f);
    }
    return r;
}

Form Calculus::interior(const Derivation& x, const Form& w) const {
    Form r(n_);
    for (const auto& [m, f] : w.terms()) {
        if (m == 0) throw std::invalid_argument("interior product of a 0-form");
        int j = 0;
        for (Mask rest = m; rest; ++j) {
            int k = __builtin_ctz(rest);
            rest &= rest - 1;
            if (std::size_t(k) >= x.components.size() || x.components[k].is_zero()) continue;
            Mat v = f * x.components[k];
            if (j & 1) v = -v;
            r.add(m & ~(Mask(1) << k), v);
        }
    }
    return r;
}

Form Calculus::lie(const Derivation& x, const Form& w) const {
    Form r(n_);
    Form dw = d(w);
    if (!dw.is_zero()) r += interior(x, dw);
    Form positive(n_);
    for (const auto& [m, f] : w.terms())
        if (m != 0) positive.add(m, f);
    if (!positive.is_zero()) r += d(interior(x, positive));
    return r;
}

Mat Calculus::evaluate2(const Form& w, const Derivation& x, const Derivation& y) const {
    Form once = interior(x, w.homogeneous_part(2));
    Form twice = interior(y, once);
    return twice.coefficient(0);
}

Derivation Calculus::basis_field(std::size_t leg) const {
    Derivation x;
    x.components.assign(legs(), Mat(n_, n_));
    x.components[leg] = Mat::identity(n_);
    return x;
}

Mat Calculus::leibniz_defect(const Derivation& x, const Mat& f, const Mat& g) const {
    return apply(x, f * g) - apply(x, f) * g - f * apply(x, g);
}

}  // namespace ncg

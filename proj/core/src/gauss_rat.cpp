#include "ncg/gauss_rat.hpp"

#include <stdexcept>

namespace ncg {

GaussRat::GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussRat GaussRat::frac(long num, long den, long inum, long iden) {
    if (den == 0 || iden == 0) throw std::domain_error("zero denominator");
    mpq_class r(num, den), m(inum, iden);
    return GaussRat(r, m);
}

GaussRat GaussRat::inverse() const {
    mpq_class n = norm2();
    if (sgn(n) == 0) throw std::domain_error("division by zero");
    return GaussRat(re_ / n, -im_ / n);
}

GaussRat GaussRat::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    GaussRat result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) { return *this *= o.inverse(); }

std::string GaussRat::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = im_.get_str() + "*i";
    if (sgn(re_) == 0) return imag;
    std::string out = "(" + re_.get_str();
    if (sgn(im_) < 0)
        out += " - " + (im_ == -1 ? std::string("i") : mpq_class(-im_).get_str() + "*i");
    else
        out += " + " + imag;
    return out + ")";
}

mpq_class parse_rational(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
    if (sgn(v.get_den()) == 0) throw std::domain_error("zero denominator: " + text);
    v.canonicalize();
    return v;
}

}  // namespace ncg

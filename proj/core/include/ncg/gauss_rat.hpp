#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace ncg {

// Exact complex number re + i*im with both parts in Q.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long v) : re_(v), im_(0) {}
    GaussRat(mpq_class re, mpq_class im = 0);
    static GaussRat frac(long num, long den, long inum = 0, long iden = 1);
    static GaussRat i() { return GaussRat(0, 1); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    GaussRat inverse() const;
    GaussRat pow(long e) const;
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    // "3/2", "-i", "1/2*i", "(1 + 2*i)"
    std::string str() const;

private:
    mpq_class re_;
    mpq_class im_;
};

mpq_class parse_rational(const std::string& text);

}  // namespace ncg

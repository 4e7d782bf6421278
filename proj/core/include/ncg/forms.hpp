#pragma once

#include "ncg/linalg.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace ncg {

using Mat = ScalarMatrix;
using Mask = std::uint32_t;

// Sign of theta^a ^ theta^b against theta^(a|b) in increasing order, 0 if the
// index sets overlap.
int wedge_sign(Mask a, Mask b);
inline int degree_of(Mask m) { return __builtin_popcount(m); }

// Differential form with n x n matrix coefficients written on the left of
// increasing wedge monomials of the 1-form generators. Generators commute
// with matrices.
class Form {
public:
    explicit Form(std::size_t n = 0) : n_(n) {}
    static Form zero_form(const Mat& f);
    static Form generator(std::size_t n, std::size_t leg, const Mat& coeff);
    static Form monomial(Mask mask, const Mat& coeff);

    std::size_t n() const { return n_; }
    const std::map<Mask, Mat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Degree of a homogeneous form; -1 for the zero form, throws if mixed.
    int degree() const;
    const Mat* component(Mask mask) const;
    Mat coefficient(Mask mask) const;

    void add(Mask mask, const Mat& coeff);
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    Form operator-() const;
    friend Form operator*(const Scalar& s, const Form& f);
    friend Form operator*(const Mat& m, const Form& f);
    friend Form operator*(const Form& f, const Mat& m);
    friend bool operator==(const Form& a, const Form& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    Form homogeneous_part(int p) const;
    template <class F>
    Form map_coefficients(F&& f) const {
        Form r(n_);
        for (const auto& [m, c] : terms_) r.add(m, f(c));
        return r;
    }

    std::string str() const;

private:
    std::size_t n_;
    std::map<Mask, Mat> terms_;
};

Form wedge(const Form& a, const Form& b);

// Forms with number coefficients (multiples of the identity), used for the
// differentials of the generators.
using CentralForm = std::map<Mask, GaussRat>;

// A vector field sum_k X^k d_k with matrix coefficients.
struct Derivation {
    std::vector<Mat> components;
};

class Calculus {
public:
    virtual ~Calculus() = default;
    std::size_t legs() const { return d_generators_.size(); }
    std::size_t n() const { return n_; }

    // Action of the basis vector field dual to generator `leg` on a 0-form.
    virtual Mat partial(std::size_t leg, const Mat& f) const = 0;
    const CentralForm& d_generator(std::size_t leg) const { return d_generators_.at(leg); }

    Form d(const Form& w) const;
    CentralForm d_monomial(Mask mask) const;
    Mat apply(const Derivation& x, const Mat& f) const;
    Form interior(const Derivation& x, const Form& w) const;
    Form lie(const Derivation& x, const Form& w) const;
    // w(X, Y) for a 2-form; wedge monomials evaluate as determinants.
    Mat evaluate2(const Form& w, const Derivation& x, const Derivation& y) const;
    Derivation basis_field(std::size_t leg) const;
    // X(fg) - X(f)g - fX(g)
    Mat leibniz_defect(const Derivation& x, const Mat& f, const Mat& g) const;

protected:
    Calculus(std::size_t n, std::vector<CentralForm> d_generators)
        : n_(n), d_generators_(std::move(d_generators)) {}

    std::size_t n_;
    std::vector<CentralForm> d_generators_;
};

}  // namespace ncg

#pragma once

#include "ncg/gauss_rat.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ncg {

constexpr std::size_t kMaxParams = 8;
using Exponents = std::array<std::int32_t, kMaxParams>;
using ParamList = std::shared_ptr<const std::vector<std::string>>;

ParamList make_params(std::vector<std::string> names);

struct ParamMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Laurent polynomial over GaussRat in the parameters of a ParamList. A scalar
// without a list is a plain constant and combines with anything.
class Scalar {
public:
    using Term = std::pair<Exponents, GaussRat>;

    Scalar() = default;
    Scalar(long v) : Scalar(GaussRat(v)) {}
    Scalar(int v) : Scalar(GaussRat(long(v))) {}
    Scalar(GaussRat c);

    static Scalar param(const ParamList& params, std::string_view name, int power = 1);
    static Scalar monomial(const ParamList& params, const Exponents& e, GaussRat c);

    const ParamList& params() const { return params_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussRat constant_term() const;
    // Nonzero GaussRat times a single Laurent monomial.
    bool is_unit() const { return terms_.size() == 1; }

    Scalar inverse() const;
    Scalar pow(int e) const;
    Scalar conj() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    Scalar& operator*=(const GaussRat& c);

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Exact substitution of one parameter. Values may be GaussRat or, when the
    // parameter occurs with negative exponents, a unit Scalar.
    Scalar substitute(std::string_view name, const GaussRat& value) const;
    Scalar substitute(std::string_view name, const Scalar& value) const;
    GaussRat evaluate_at(const std::map<std::string, GaussRat>& point) const;
    // Rewrite every power name^(k*j) as name^j; throws if some exponent is not
    // a multiple of k.
    Scalar deflate(std::string_view name, int k) const;
    Scalar derivative(std::string_view name) const;
    Scalar with_params(const ParamList& params) const;
    int max_degree(std::string_view name) const;

    std::string str() const;
    static Scalar parse(std::string_view text, const ParamList& params);

private:
    static ParamList unify(const ParamList& a, const ParamList& b);
    int index_of(std::string_view name) const;
    void normalize();

    ParamList params_;
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace ncg

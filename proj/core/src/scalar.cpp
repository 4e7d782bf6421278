#include "ncg/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace ncg {

namespace {

std::int32_t checked_add(std::int32_t a, std::int32_t b) {
    std::int32_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

std::int32_t checked_mul(std::int32_t a, std::int32_t b) {
    std::int32_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

bool all_zero(const Exponents& e) {
    return std::all_of(e.begin(), e.end(), [](std::int32_t v) { return v == 0; });
}

}  // namespace

ParamList make_params(std::vector<std::string> names) {
    if (names.size() > kMaxParams) throw std::invalid_argument("too many parameters");
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw std::invalid_argument("duplicate parameter " + names[i]);
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

Scalar::Scalar(GaussRat c) {
    if (!c.is_zero()) terms_.emplace_back(Exponents{}, std::move(c));
}

Scalar Scalar::param(const ParamList& params, std::string_view name, int power) {
    Scalar s;
    s.params_ = params;
    int k = s.index_of(name);
    if (k < 0) throw std::invalid_argument("unknown parameter " + std::string(name));
    Exponents e{};
    e[k] = power;
    s.terms_.emplace_back(e, GaussRat(1));
    return s;
}

Scalar Scalar::monomial(const ParamList& params, const Exponents& e, GaussRat c) {
    Scalar s;
    s.params_ = params;
    std::size_t used = params ? params->size() : 0;
    for (std::size_t k = used; k < kMaxParams; ++k)
        if (e[k] != 0) throw std::invalid_argument("exponent outside parameter list");
    if (!c.is_zero()) s.terms_.emplace_back(e, std::move(c));
    return s;
}

ParamList Scalar::unify(const ParamList& a, const ParamList& b) {
    if (!a) return b;
    if (!b || a == b) return a;
    if (*a == *b) return a;
    throw ParamMismatch("parameter lists differ");
}

int Scalar::index_of(std::string_view name) const {
    if (!params_) return -1;
    for (std::size_t k = 0; k < params_->size(); ++k)
        if ((*params_)[k] == name) return int(k);
    return -1;
}

bool Scalar::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && all_zero(terms_[0].first));
}

GaussRat Scalar::constant_term() const {
    for (const auto& [e, c] : terms_)
        if (all_zero(e)) return c;
    return GaussRat(0);
}

void Scalar::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.second.is_zero(); }),
              out.end());
    terms_ = std::move(out);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    params_ = unify(params_, o.params_);
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
            out.push_back(std::move(*i++));
        } else if (i == terms_.end() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            GaussRat c = i->second + j->second;
            if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Scalar& Scalar::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    r.params_ = Scalar::unify(a.params_, b.params_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e;
            for (std::size_t k = 0; k < kMaxParams; ++k) e[k] = checked_add(ea[k], eb[k]);
            r.terms_.emplace_back(e, ca * cb);
        }
    if (a.terms_.size() > 1 || b.terms_.size() > 1) r.normalize();
    return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::inverse() const {
    if (terms_.size() != 1) throw std::domain_error("scalar is not a unit: " + str());
    Scalar r = *this;
    for (auto& v : r.terms_[0].first) v = checked_mul(v, -1);
    r.terms_[0].second = r.terms_[0].second.inverse();
    return r;
}

Scalar Scalar::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result(1);
    result.params_ = params_;
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Scalar Scalar::conj() const {
    Scalar r = *this;
    for (auto& t : r.terms_) t.second = t.second.conj();
    return r;
}

Scalar Scalar::substitute(std::string_view name, const GaussRat& value) const {
    int k = index_of(name);
    if (k < 0) return *this;
    Scalar r;
    r.params_ = params_;
    for (const auto& [e, c] : terms_) {
        if (e[k] < 0 && value.is_zero()) throw std::domain_error("division by zero substituting " + std::string(name));
        Exponents e2 = e;
        e2[k] = 0;
        r.terms_.emplace_back(e2, c * value.pow(e[k]));
    }
    r.normalize();
    return r;
}

Scalar Scalar::substitute(std::string_view name, const Scalar& value) const {
    int k = index_of(name);
    if (k < 0) return *this;
    Scalar r;
    r.params_ = unify(params_, value.params_);
    for (const auto& [e, c] : terms_) {
        Exponents e2 = e;
        e2[k] = 0;
        Scalar t = monomial(params_, e2, c);
        r += t * value.pow(e[k]);
    }
    return r;
}

GaussRat Scalar::evaluate_at(const std::map<std::string, GaussRat>& point) const {
    GaussRat sum(0);
    for (const auto& [e, c] : terms_) {
        GaussRat v = c;
        for (std::size_t k = 0; k < kMaxParams; ++k) {
            if (e[k] == 0) continue;
            const std::string& name = (*params_)[k];
            auto it = point.find(name);
            if (it == point.end()) throw std::invalid_argument("missing value for parameter " + name);
            if (e[k] < 0 && it->second.is_zero())
                throw std::domain_error("division by zero evaluating " + name);
            v *= it->second.pow(e[k]);
        }
        sum += v;
    }
    return sum;
}

Scalar Scalar::deflate(std::string_view name, int k) const {
    int idx = index_of(name);
    if (idx < 0 || k == 1) return *this;
    if (k <= 0) throw std::invalid_argument("deflate factor must be positive");
    Scalar r = *this;
    for (auto& t : r.terms_) {
        if (t.first[idx] % k != 0)
            throw std::domain_error("exponent of " + std::string(name) + " not divisible");
        t.first[idx] /= k;
    }
    return r;
}

Scalar Scalar::derivative(std::string_view name) const {
    int k = index_of(name);
    Scalar r;
    r.params_ = params_;
    if (k < 0) return r;
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0) continue;
        Exponents e2 = e;
        e2[k] -= 1;
        r.terms_.emplace_back(e2, c * GaussRat(long(e[k])));
    }
    r.normalize();
    return r;
}

Scalar Scalar::with_params(const ParamList& params) const {
    if (!params_ || params_ == params) {
        Scalar r = *this;
        r.params_ = params;
        return r;
    }
    Scalar r;
    r.params_ = params;
    for (const auto& [e, c] : terms_) {
        Exponents e2{};
        for (std::size_t k = 0; k < params_->size(); ++k) {
            if (e[k] == 0) continue;
            auto it = std::find(params->begin(), params->end(), (*params_)[k]);
            if (it == params->end()) throw ParamMismatch("parameter " + (*params_)[k] + " not in target list");
            e2[it - params->begin()] = e[k];
        }
        r.terms_.emplace_back(e2, c);
    }
    r.normalize();
    return r;
}

int Scalar::max_degree(std::string_view name) const {
    int k = index_of(name);
    int best = 0;
    if (k < 0) return 0;
    for (const auto& t : terms_) best = std::max(best, int(t.first[k]));
    return best;
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t k = 0; k < kMaxParams; ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (*params_)[k];
            if (e[k] != 1) mono += "^" + std::to_string(e[k]);
        }
        bool negative = c.is_real() ? sgn(c.re()) < 0 : (sgn(c.re()) == 0 && sgn(c.im()) < 0);
        GaussRat mag = negative ? -c : c;
        std::string coef;
        if (!(mag.is_one() && !mono.empty())) coef = mag.str();
        std::string term = coef;
        if (!mono.empty()) term += (coef.empty() ? "" : "*") + mono;
        if (first)
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

namespace {

class ScalarParser {
public:
    ScalarParser(std::string_view text, const ParamList& params) : s_(text), params_(params) {}

    Scalar run() {
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("scalar parse error at " + std::to_string(pos_) + ": " + what + " in '" +
                                    std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    long integer() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        long v = std::stol(std::string(s_.substr(start, pos_ - start)));
        return neg ? -v : v;
    }
    Scalar expr() {
        skip();
        Scalar acc;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }
    Scalar term() {
        Scalar acc = factor();
        while (true) {
            if (eat('*'))
                acc *= factor();
            else if (eat('/'))
                acc *= factor().inverse();
            else
                break;
        }
        return acc;
    }
    Scalar factor() {
        skip();
        if (eat('-')) return -factor();
        Scalar base;
        if (eat('(')) {
            base = expr();
            if (!eat(')')) fail("expected )");
        } else if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            base = Scalar(GaussRat(mpq_class(std::string(s_.substr(start, pos_ - start)))));
        } else if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (name == "i") {
                base = Scalar(GaussRat::i());
            } else {
                if (!params_ || std::find(params_->begin(), params_->end(), name) == params_->end())
                    fail("unknown parameter " + name);
                base = Scalar::param(params_, name);
            }
        } else {
            fail("unexpected character");
        }
        if (eat('^')) base = base.pow(int(integer()));
        return base;
    }

    std::string_view s_;
    ParamList params_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text, const ParamList& params) {
    Scalar s = ScalarParser(text, params).run();
    if (params && !s.params_) s.params_ = params;
    return s;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace ncg

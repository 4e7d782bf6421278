#pragma once

#include "ncg/scalar.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ncg {

// A word in the free algebra; each char holds a generator index.
using Word = std::string;

// Degree first, then lexicographic on generator indices.
struct DegLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] != b[k]) return static_cast<unsigned char>(a[k]) < static_cast<unsigned char>(b[k]);
        return false;
    }
};

// Linear combination of words with Scalar coefficients (scalars are central).
class NCPoly {
public:
    NCPoly() = default;
    NCPoly(const Scalar& c) { add(Word(), c); }
    static NCPoly word(Word w, const Scalar& c = Scalar(1));

    const std::map<Word, Scalar, DegLex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const Word& w) const;
    int degree() const;

    void add(const Word& w, const Scalar& c);
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const Scalar& s);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const Scalar& s, NCPoly a) { return a *= s; }
    NCPoly operator-() const;
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    // Concatenation product without any reduction.
    friend NCPoly concat(const NCPoly& a, const NCPoly& b);

    template <class F>
    NCPoly map_coefficients(F&& f) const {
        NCPoly r;
        for (const auto& [w, c] : terms_) r.add(w, f(c));
        return r;
    }

private:
    std::map<Word, Scalar, DegLex> terms_;
};

struct CriticalPair {
    Word overlap;
    NCPoly left, right;  // normal forms of (ab)c and a(bc)
};

struct ConfluenceReport {
    bool confluent = true;
    std::size_t pairs_checked = 0;
    std::vector<CriticalPair> failures;
};

// Algebra given by generators and rewrite rules on adjacent pairs. A rule
// (hi, lo) -> rhs replaces the word "hi lo" and every word of rhs must be
// smaller in DegLex, which makes reduction terminate.
class Presentation {
public:
    Presentation(std::vector<std::string> names, ParamList params);
    Presentation(const Presentation& o);
    Presentation& operator=(const Presentation& o);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t k) const { return names_.at(k); }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(std::string_view name) const;
    const ParamList& params() const { return params_; }
    NCPoly gen(std::string_view name) const;
    NCPoly gen(std::size_t k) const { return NCPoly::word(Word(1, char(k))); }

    void add_rule(std::size_t hi, std::size_t lo, NCPoly rhs);
    // Replace a rule without the order check, for exercising the confluence checker.
    void set_rule_unchecked(std::size_t hi, std::size_t lo, NCPoly rhs);
    void remove_rule(std::size_t hi, std::size_t lo);
    const NCPoly* rule(std::size_t hi, std::size_t lo) const;
    std::vector<std::pair<Word, NCPoly>> rules() const;

    NCPoly normal_form(const Word& w) const;
    NCPoly normal_form(const NCPoly& p) const;
    NCPoly multiply(const NCPoly& a, const NCPoly& b) const;
    NCPoly commutator(const NCPoly& a, const NCPoly& b) const;
    NCPoly power(const NCPoly& a, unsigned k) const;
    bool is_normal(const Word& w) const;

    ConfluenceReport confluence() const;

    std::string str(const Word& w) const;
    std::string str(const NCPoly& p) const;
    // Unreduced parse: words as juxtaposed generator names (longest match),
    // parameters by name, "^" powers, "*", "+", "-", parentheses, rationals, i.
    NCPoly parse(std::string_view text) const;

    // {"generators": [...], "params": [...], "rules": [{"lhs": "yx", "rhs": [["q^-1", "xy"], ...]}]}
    static Presentation from_json(const std::string& text);

private:
    void clear_cache() const;

    std::vector<std::string> names_;
    ParamList params_;
    std::vector<std::optional<NCPoly>> rules_;
    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<Word, NCPoly> cache_;
};

}  // namespace ncg

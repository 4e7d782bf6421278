#include "ncg/rewrite.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ncg {

NCPoly NCPoly::word(Word w, const Scalar& c) {
    NCPoly p;
    p.add(w, c);
    return p;
}

Scalar NCPoly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

int NCPoly::degree() const { return terms_.empty() ? -1 : int(terms_.rbegin()->first.size()); }

void NCPoly::add(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly concat(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) r.add(wa + wb, ca * cb);
    return r;
}

Presentation::Presentation(std::vector<std::string> names, ParamList params)
    : names_(std::move(names)), params_(std::move(params)), rules_(names_.size() * names_.size()) {
    if (names_.size() > 127) throw std::invalid_argument("too many generators");
    for (const auto& n : names_)
        if (n.empty()) throw std::invalid_argument("empty generator name");
}

Presentation::Presentation(const Presentation& o) : names_(o.names_), params_(o.params_), rules_(o.rules_) {}

Presentation& Presentation::operator=(const Presentation& o) {
    if (this != &o) {
        names_ = o.names_;
        params_ = o.params_;
        rules_ = o.rules_;
        clear_cache();
    }
    return *this;
}

int Presentation::index_of(std::string_view name) const {
    for (std::size_t k = 0; k < names_.size(); ++k)
        if (names_[k] == name) return int(k);
    return -1;
}

NCPoly Presentation::gen(std::string_view name) const {
    int k = index_of(name);
    if (k < 0) throw std::invalid_argument("unknown generator " + std::string(name));
    return gen(std::size_t(k));
}

void Presentation::add_rule(std::size_t hi, std::size_t lo, NCPoly rhs) {
    Word lhs{char(hi), char(lo)};
    for (const auto& [w, c] : rhs.terms())
        if (!DegLex()(w, lhs))
            throw std::invalid_argument("rule " + str(lhs) + " -> " + str(rhs) + " does not decrease the word order");
    set_rule_unchecked(hi, lo, std::move(rhs));
}

void Presentation::set_rule_unchecked(std::size_t hi, std::size_t lo, NCPoly rhs) {
    if (hi >= size() || lo >= size()) throw std::out_of_range("rule on unknown generator");
    rules_[hi * size() + lo] = std::move(rhs);
    clear_cache();
}

void Presentation::remove_rule(std::size_t hi, std::size_t lo) {
    rules_.at(hi * size() + lo).reset();
    clear_cache();
}

const NCPoly* Presentation::rule(std::size_t hi, std::size_t lo) const {
    const auto& r = rules_[hi * size() + lo];
    return r ? &*r : nullptr;
}

std::vector<std::pair<Word, NCPoly>> Presentation::rules() const {
    std::vector<std::pair<Word, NCPoly>> out;
    for (std::size_t hi = 0; hi < size(); ++hi)
        for (std::size_t lo = 0; lo < size(); ++lo)
            if (const NCPoly* r = rule(hi, lo)) out.emplace_back(Word{char(hi), char(lo)}, *r);
    return out;
}

void Presentation::clear_cache() const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cache_.clear();
}

bool Presentation::is_normal(const Word& w) const {
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (rule(std::size_t(w[k]), std::size_t(w[k + 1]))) return false;
    return true;
}

NCPoly Presentation::normal_form(const Word& w) const {
    std::size_t pos = w.size();
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (rule(std::size_t(w[k]), std::size_t(w[k + 1]))) {
            pos = k;
            break;
        }
    if (pos == w.size()) return NCPoly::word(w);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
    }
    const NCPoly& r = *rule(std::size_t(w[pos]), std::size_t(w[pos + 1]));
    NCPoly out;
    Word prefix = w.substr(0, pos), suffix = w.substr(pos + 2);
    for (const auto& [u, c] : r.terms()) {
        NCPoly sub = normal_form(prefix + u + suffix);
        out += c * sub;
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cache_.emplace(w, out);
    return out;
}

NCPoly Presentation::normal_form(const NCPoly& p) const {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) out += c * normal_form(w);
    return out;
}

NCPoly Presentation::multiply(const NCPoly& a, const NCPoly& b) const { return normal_form(concat(a, b)); }

NCPoly Presentation::commutator(const NCPoly& a, const NCPoly& b) const {
    return normal_form(concat(a, b) - concat(b, a));
}

NCPoly Presentation::power(const NCPoly& a, unsigned k) const {
    NCPoly r(Scalar(1));
    for (unsigned j = 0; j < k; ++j) r = multiply(r, a);
    return r;
}

ConfluenceReport Presentation::confluence() const {
    ConfluenceReport rep;
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const NCPoly* r1 = rule(a, b);
            if (!r1) continue;
            for (std::size_t c = 0; c < n; ++c) {
                const NCPoly* r2 = rule(b, c);
                if (!r2) continue;
                ++rep.pairs_checked;
                NCPoly left = normal_form(concat(*r1, gen(c)));
                NCPoly right = normal_form(concat(gen(a), *r2));
                if (left != right) {
                    rep.confluent = false;
                    rep.failures.push_back({Word{char(a), char(b), char(c)}, left, right});
                }
            }
        }
    return rep;
}

std::string Presentation::str(const Word& w) const {
    std::string s;
    for (char c : w) s += names_.at(std::size_t(c));
    return s;
}

std::string Presentation::str(const NCPoly& p) const {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        std::string term;
        if (w.empty()) {
            term = c.str();
            if (!first && !c.is_unit()) term = "(" + term + ")";
        } else if (c == Scalar(1)) {
            term = str(w);
        } else if (c == Scalar(-1)) {
            term = "-" + str(w);
        } else {
            std::string cs = c.str();
            bool simple = c.is_unit() && cs.find(' ') == std::string::npos;
            term = (simple ? cs : "(" + cs + ")") + "*" + str(w);
        }
        if (first)
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
        first = false;
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(const Presentation& p, std::string_view text) : p_(p), s_(text) {
        for (std::size_t k = 0; k < p.size(); ++k) tokens_.push_back({p.name(k), int(k)});
        if (p.params())
            for (const auto& name : *p.params()) tokens_.push_back({name, -1});
        if (p.index_of("i") < 0) tokens_.push_back({"i", -2});
        std::sort(tokens_.begin(), tokens_.end(),
                  [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
    }

    NCPoly run() {
        NCPoly v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at " + std::to_string(pos_) + ": " + what + " in '" + std::string(s_) + "'");
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
    bool at_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }
    long integer() {
        skip();
        bool neg = eat('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        long v = std::stol(std::string(s_.substr(start, pos_ - start)));
        return neg ? -v : v;
    }
    NCPoly expr() {
        NCPoly acc;
        bool neg = eat('-');
        if (!neg) eat('+');
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
    NCPoly term() {
        NCPoly acc = factor();
        while (true) {
            if (eat('*')) {
                acc = concat(acc, factor());
            } else if (eat('/')) {
                NCPoly d = factor();
                if (d.degree() != 0) fail("division by a non-scalar");
                acc = concat(acc, NCPoly(d.coefficient(Word()).inverse()));
            } else if (at_factor()) {
                acc = concat(acc, factor());
            } else {
                break;
            }
        }
        return acc;
    }
    NCPoly factor() {
        skip();
        if (eat('-')) return -factor();
        NCPoly base;
        int gen = -3;
        if (eat('(')) {
            base = expr();
            if (!eat(')')) fail("expected )");
        } else if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            base = NCPoly(Scalar(GaussRat(parse_rational(std::string(s_.substr(start, pos_ - start))))));
        } else {
            std::string_view matched;
            for (const auto& [name, id] : tokens_)
                if (s_.substr(pos_, name.size()) == name) {
                    pos_ += name.size();
                    gen = id;
                    matched = name;
                    break;
                }
            if (gen == -3) fail("unknown symbol");
            if (gen >= 0)
                base = p_.gen(std::size_t(gen));
            else if (gen == -1)
                base = NCPoly(Scalar::param(p_.params(), matched, 1));
            else
                base = NCPoly(Scalar(GaussRat::i()));
        }
        if (eat('^')) {
            long e = integer();
            if (e < 0) {
                if (base.degree() != 0) fail("negative power of a non-scalar");
                return NCPoly(base.coefficient(Word()).pow(e));
            }
            NCPoly r(Scalar(1));
            for (long k = 0; k < e; ++k) r = concat(r, base);
            return r;
        }
        return base;
    }
    const Presentation& p_;
    std::string_view s_;
    std::size_t pos_ = 0;
    std::vector<std::pair<std::string, int>> tokens_;
};

}  // namespace

NCPoly Presentation::parse(std::string_view text) const { return PolyParser(*this, text).run(); }

Presentation Presentation::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<std::string> names = j.at("generators").get<std::vector<std::string>>();
    ParamList params;
    if (j.contains("params")) params = make_params(j.at("params").get<std::vector<std::string>>());
    Presentation p(names, params);
    if (!j.contains("rules")) return p;
    for (const auto& r : j.at("rules")) {
        NCPoly lhs = p.parse(r.at("lhs").get<std::string>());
        if (lhs.terms().size() != 1 || lhs.degree() != 2 || lhs.terms().begin()->second != Scalar(1))
            throw std::invalid_argument("rule left side must be a word of two generators");
        const Word& w = lhs.terms().begin()->first;
        NCPoly rhs;
        for (const auto& t : r.at("rhs")) {
            Scalar c = Scalar::parse(t.at(0).get<std::string>(), params);
            NCPoly word = t.at(1).get<std::string>().empty() ? NCPoly(Scalar(1)) : p.parse(t.at(1).get<std::string>());
            rhs += c * word;
        }
        p.add_rule(std::size_t(w[0]), std::size_t(w[1]), std::move(rhs));
    }
    return p;
}

}  // namespace ncg

#include "ordwalk/ordinal.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ordwalk {

Ordinal Ordinal::nat(std::uint64_t n) {
    Ordinal r;
    if (n > 0) r.terms_.push_back({Ordinal(), n});
    return r;
}

Ordinal Ordinal::omega() {
    return omega_pow(nat(1));
}

Ordinal Ordinal::omega_pow(const Ordinal& e, std::uint64_t c) {
    Ordinal r;
    if (c > 0) r.terms_.push_back({e, c});
    return r;
}

bool Ordinal::is_finite() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_zero());
}

std::optional<std::uint64_t> Ordinal::as_nat() const {
    if (terms_.empty()) return 0;
    if (is_finite()) return terms_[0].second;
    return std::nullopt;
}

Ordinal::Kind Ordinal::kind() const {
    if (terms_.empty()) return Kind::zero;
    return terms_.back().first.is_zero() ? Kind::successor : Kind::limit;
}

Ordinal Ordinal::pred() const {
    if (kind() != Kind::successor) throw std::domain_error("pred: not a successor");
    Ordinal r = *this;
    if (r.terms_.back().second > 1)
        r.terms_.back().second -= 1;
    else
        r.terms_.pop_back();
    return r;
}

int cmp(const Ordinal& a, const Ordinal& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
        int c = cmp(ta[i].first, tb[i].first);
        if (c != 0) return c;
        if (ta[i].second != tb[i].second) return ta[i].second < tb[i].second ? -1 : 1;
    }
    if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
    return 0;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool operator==(const Ordinal& a, const Ordinal& b) {
    return cmp(a, b) == 0;
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const Ordinal& lead = b.terms()[0].first;
    Ordinal r;
    std::size_t i = 0;
    while (i < a.terms().size() && cmp(a.terms()[i].first, lead) > 0)
        r.terms_.push_back(a.terms()[i++]);
    std::uint64_t carry = 0;
    if (i < a.terms().size() && a.terms()[i].first == lead)
        carry = a.terms()[i].second;
    for (std::size_t j = 0; j < b.terms().size(); ++j) {
        auto term = b.terms()[j];
        if (j == 0) {
            if (term.second > std::numeric_limits<std::uint64_t>::max() - carry)
                throw std::overflow_error("ordinal coefficient overflow");
            term.second += carry;
        }
        r.terms_.push_back(term);
    }
    return r;
}

Ordinal Ordinal::fundamental(std::uint64_t k) const {
    if (kind() != Kind::limit) throw std::domain_error("fundamental: not a limit");
    // a = delta + w^e * c with e > 0; peel one copy of w^e off the tail.
    Ordinal delta = *this;
    Ordinal e = delta.terms_.back().first;
    if (delta.terms_.back().second > 1)
        delta.terms_.back().second -= 1;
    else
        delta.terms_.pop_back();
    if (e.kind() == Kind::limit)
        return delta + omega_pow(e.fundamental(k));
    return delta + omega_pow(e.pred(), k);
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    std::optional<std::uint64_t> nat() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return std::nullopt;
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::uint64_t d = static_cast<std::uint64_t>(s[pos] - '0');
            if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) return std::nullopt;
            v = v * 10 + d;
            ++pos;
        }
        return v;
    }
    std::optional<Ordinal> ord() {
        auto t = term();
        if (!t) return std::nullopt;
        Ordinal r = *t;
        while (eat('+')) {
            t = term();
            if (!t) return std::nullopt;
            r = r + *t;
        }
        return r;
    }
    std::optional<Ordinal> term() {
        skip_ws();
        if (pos < s.size() && s[pos] == 'w') {
            ++pos;
            Ordinal e = Ordinal::nat(1);
            if (eat('^')) {
                auto a = atom();
                if (!a) return std::nullopt;
                e = *a;
            }
            std::uint64_t c = 1;
            if (eat('*')) {
                auto n = nat();
                if (!n) return std::nullopt;
                c = *n;
            }
            return Ordinal::omega_pow(e, c);
        }
        auto n = nat();
        if (!n) return std::nullopt;
        return Ordinal::nat(*n);
    }
    std::optional<Ordinal> atom() {
        skip_ws();
        if (eat('(')) {
            auto r = ord();
            if (!r || !eat(')')) return std::nullopt;
            return r;
        }
        auto n = nat();
        if (!n) return std::nullopt;
        return Ordinal::nat(*n);
    }
};

} // namespace

std::optional<Ordinal> Ordinal::parse(std::string_view sv) {
    Parser p{sv};
    auto r = p.ord();
    if (!r) return std::nullopt;
    p.skip_ws();
    if (p.pos != sv.size()) return std::nullopt;
    return r;
}

std::string Ordinal::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << '+';
        first = false;
        if (e.is_zero()) {
            out << c;
            continue;
        }
        out << 'w';
        if (!(e == nat(1))) {
            out << '^';
            if (e.is_finite())
                out << e.str();
            else
                out << '(' << e.str() << ')';
        }
        if (c > 1) out << '*' << c;
    }
    return out.str();
}

bool is_nondecreasing(const OrdTuple& t) {
    for (std::size_t i = 1; i < t.size(); ++i)
        if (cmp(t[i - 1], t[i]) > 0) return false;
    return true;
}

bool is_strictly_increasing(const OrdTuple& t) {
    for (std::size_t i = 1; i < t.size(); ++i)
        if (cmp(t[i - 1], t[i]) >= 0) return false;
    return true;
}

OrdTuple delete_coord(const OrdTuple& t, std::size_t i) {
    OrdTuple r;
    r.reserve(t.size() - 1);
    for (std::size_t k = 0; k < t.size(); ++k)
        if (k != i) r.push_back(t[k]);
    return r;
}

std::string tuple_str(const OrdTuple& t) {
    std::string r = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) r += ",";
        r += t[i].str();
    }
    r += ")";
    return r;
}

} // namespace ordwalk

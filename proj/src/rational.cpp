#include "iwa/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace iwa {

std::string rat_str(const mpq_class& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

namespace {

// One signed rational, e.g. "-3/4" or "12".
mpq_class parse_rat(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos, ++digits;
    if (digits == 0) throw ParseError("expected digits in rational literal: '" + s + "'");
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t den_digits = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos, ++den_digits;
        if (den_digits == 0) throw ParseError("expected denominator digits: '" + s + "'");
    }
    mpq_class q(s.substr(start, pos - start));
    if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace

GScalar GScalar::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty Gaussian-rational literal");

    // Pure imaginary shorthands: "i", "-i", "+i".
    auto tail_is_i = [&](const std::string& u) { return !u.empty() && u.back() == 'i'; };

    size_t pos = 0;
    if (s == "i" || s == "+i") return GScalar::i();
    if (s == "-i") return -GScalar::i();

    bool first_imag = false;
    mpq_class first;
    if ((s[0] == 'i') || ((s[0] == '+' || s[0] == '-') && s.size() > 1 && s[1] == 'i')) {
        // handled above unless followed by more text, which the grammar does not allow
        throw ParseError("malformed literal: '" + text + "'");
    }
    first = parse_rat(s, pos);
    if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        first_imag = true;
    }
    if (pos == s.size()) return first_imag ? GScalar(mpq_class(0), first) : GScalar(first);

    if (first_imag) throw ParseError("imaginary part must come last: '" + text + "'");
    if (s[pos] != '+' && s[pos] != '-') throw ParseError("malformed literal: '" + text + "'");
    if (s.substr(pos) == "+i") return GScalar(first, mpq_class(1));
    if (s.substr(pos) == "-i") return GScalar(first, mpq_class(-1));
    mpq_class second = parse_rat(s, pos);
    if (pos >= s.size() || s[pos] != 'i' || pos + 1 != s.size())
        throw ParseError("imaginary part must end with 'i': '" + text + "'");
    (void)tail_is_i;
    return GScalar(first, second);
}

std::string GScalar::str() const {
    if (im_ == 0) return rat_str(re_);
    std::string out;
    if (re_ != 0) out += rat_str(re_);
    std::string im = rat_str(im_);
    if (re_ != 0 && im[0] != '-') out += "+";
    if (im == "1")
        out += "i";
    else if (im == "-1")
        out += "-i";
    else
        out += im + "i";
    return out;
}

std::ostream& operator<<(std::ostream& os, const GScalar& z) { return os << z.str(); }

}  // namespace iwa

#include "iwa/io.hpp"

#include <algorithm>
#include <cctype>

namespace iwa {

namespace {

int covector_index(const std::string& name) {
    static const char* names[6] = {"al", "be", "ga", "al~", "be~", "ga~"};
    for (int i = 0; i < 6; ++i)
        if (name == names[i]) return i;
    throw ParseError("unknown covector name '" + name + "'");
}

std::string strip_ws(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

}  // namespace

ParamPoint parse_param_point(const std::string& text) {
    std::string s = strip_ws(text);
    ParamPoint t;
    if (s.empty() || s == "0") return t;
    if (s.front() == '{') {
        Json j = Json::parse(s);
        for (auto& [key, value] : j.items()) {
            int idx = param_index(key);
            if (idx >= 6) throw ParseError("conjugate variables are derived, set '" +
                                           param_name(idx - 6) + "' instead");
            t.t[idx] = GScalar::parse(value.get<std::string>());
        }
        return t;
    }
    size_t pos = 0;
    while (pos < s.size()) {
        size_t eq = s.find('=', pos);
        if (eq == std::string::npos) throw ParseError("expected key=value in '" + text + "'");
        std::string key = s.substr(pos, eq - pos);
        size_t comma = s.find(',', eq);
        std::string value =
            s.substr(eq + 1, (comma == std::string::npos ? s.size() : comma) - eq - 1);
        int idx = param_index(key);
        if (idx >= 6) throw ParseError("conjugate variables are derived, set '" +
                                       param_name(idx - 6) + "' instead");
        t.t[idx] = GScalar::parse(value);
        pos = comma == std::string::npos ? s.size() : comma + 1;
    }
    return t;
}

Json param_point_json(const ParamPoint& t) {
    Json j;
    for (int i = 0; i < 6; ++i) j[param_name(i)] = t.t[i].str();
    return j;
}

std::string scalar_str(const GScalar& z) { return z.str(); }

FormQ parse_form_expr(const std::string& text) {
    std::string s = strip_ws(text);
    if (s.empty()) return {};
    FormQ total;
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') sign = -sign;
            ++pos;
        }
        if (pos >= s.size()) throw ParseError("dangling sign in form expression");
        // Optional coefficient: parenthesized literal or bare literal.
        GScalar coeff(1);
        if (s[pos] == '(') {
            size_t close = s.find(')', pos);
            if (close == std::string::npos) throw ParseError("unbalanced parenthesis");
            coeff = GScalar::parse(s.substr(pos + 1, close - pos - 1));
            pos = close + 1;
            if (pos < s.size() && s[pos] == '*') ++pos;
        } else if (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == 'i') {
            size_t end = pos;
            while (end < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '/' ||
                    s[end] == 'i'))
                ++end;
            coeff = GScalar::parse(s.substr(pos, end - pos));
            pos = end;
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        // Optional wedge monomial.
        FormQ term = FormQ::monomial(0, GScalar(sign) * coeff);
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
            size_t end = pos;
            while (end < s.size() && (std::isalpha(static_cast<unsigned char>(s[end])) ||
                                      s[end] == '~'))
                ++end;
            if (end == pos) throw ParseError("unexpected character in form expression");
            term = wedge(term, FormQ::covector(covector_index(s.substr(pos, end - pos))));
            pos = end;
            if (pos < s.size() && s[pos] == '^') ++pos;
        }
        total += term;
    }
    return total;
}

Json form_json(const FormQ& u) {
    static const char* names[6] = {"al", "be", "ga", "al~", "be~", "ga~"};
    Json terms = Json::array();
    for (const auto& [m, c] : u.coeffs()) {
        std::string mono;
        for (int i = 0; i < 6; ++i)
            if (m & (1u << i)) {
                if (!mono.empty()) mono += "^";
                mono += names[i];
            }
        Json term;
        term["monomial"] = mono;
        term["coeff"] = c.str();
        terms.push_back(term);
    }
    return terms;
}

}  // namespace iwa

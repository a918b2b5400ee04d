#include "plinear/cli/poly_text.hpp"

#include <algorithm>
#include <cctype>

#include "plinear/errors.hpp"

namespace plinear {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars)
    {
        if (vars_.empty())
            throw Error("parse_poly: no variables declared");
    }

    IntLaurent parse()
    {
        IntLaurent r = expr();
        skip();
        if (pos_ != s_.size())
            throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        return r;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    IntLaurent expr()
    {
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        IntLaurent r = term();
        if (negate)
            r = -r;
        while (true) {
            char c = peek();
            if (c != '+' && c != '-')
                return r;
            ++pos_;
            IntLaurent t = term();
            if (c == '+')
                r += t;
            else
                r -= t;
        }
    }

    IntLaurent term()
    {
        IntLaurent r = factor();
        while (peek() == '*') {
            ++pos_;
            r = r * factor();
        }
        return r;
    }

    IntLaurent factor()
    {
        IntLaurent b = base();
        if (peek() != '^')
            return b;
        ++pos_;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        const std::size_t at = pos_;
        Integer e = integer();
        if (e > 1000000)
            throw ParseError("exponent too large", at);
        const auto k = static_cast<std::uint64_t>(e.get_ui());
        if (!neg)
            return lp_pow(b, k);
        if (b.size() != 1 || abs(b.terms().begin()->second) != 1)
            throw ParseError("negative exponent needs a unit monomial", at);
        const auto& [ex, c] = *b.terms().begin();
        Integer sign = (c < 0 && k % 2 == 1) ? Integer(-1) : Integer(1);
        return IntLaurent::monomial(ex.scaled(-static_cast<std::int64_t>(k)), sign);
    }

    IntLaurent base()
    {
        char c = peek();
        const std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            IntLaurent r = expr();
            if (peek() != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer v = integer();
            if (peek() == '/') {
                if (v != 1)
                    throw ParseError("only 1/var division is supported", pos_);
                ++pos_;
                skip();
                const std::size_t vat = pos_;
                if (pos_ >= s_.size() || !ident_start(s_[pos_]))
                    throw ParseError("expected variable after '1/'", vat);
                ExpVec e(vars_.size());
                e[variable(vat)] = -1;
                return IntLaurent::monomial(e, 1);
            }
            return IntLaurent::constant(vars_.size(), v);
        }
        if (ident_start(c)) {
            ExpVec e(vars_.size());
            e[variable(at)] = 1;
            return IntLaurent::monomial(e, 1);
        }
        if (c == '\0')
            throw ParseError("unexpected end of input", pos_);
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    Integer integer()
    {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            throw ParseError("expected integer", start);
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    std::size_t variable(std::size_t at)
    {
        std::size_t end = at;
        while (end < s_.size() && ident_char(s_[end]))
            ++end;
        std::string name(s_.substr(at, end - at));
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end())
            throw ParseError("undeclared variable '" + name + "'", at);
        pos_ = end;
        return static_cast<std::size_t>(it - vars_.begin());
    }

    std::string_view s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

} // namespace

IntLaurent parse_poly(std::string_view text, const std::vector<std::string>& vars)
{
    return Parser(text, vars).parse();
}

std::string format_poly(const IntLaurent& a, const std::vector<std::string>& vars)
{
    if (a.is_zero())
        return "0";
    std::string s;
    const auto& terms = a.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const ExpVec& e = it->first;
        Integer c = it->second;
        const bool neg = c < 0;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        c = abs(c);
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars.at(i);
            if (e[i] != 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            s += c.get_str();
        else if (c == 1)
            s += mono;
        else
            s += c.get_str() + "*" + mono;
    }
    return s;
}

std::vector<std::string> parse_var_list(std::string_view text)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string name(text.substr(start, end - start));
        name.erase(0, name.find_first_not_of(' '));
        name.erase(name.find_last_not_of(' ') + 1);
        if (name.empty() || !ident_start(name[0]) ||
            !std::all_of(name.begin(), name.end(), ident_char))
            throw Error("invalid variable name '" + name + "'");
        if (std::find(out.begin(), out.end(), name) != out.end())
            throw Error("duplicate variable '" + name + "'");
        out.push_back(std::move(name));
        start = end + 1;
    }
    if (out.empty() || out.size() > ExpVec::kMaxVars)
        throw Error("between 1 and 8 variables are required");
    return out;
}

} // namespace plinear

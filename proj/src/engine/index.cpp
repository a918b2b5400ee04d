#include "plinear/engine/index.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "plinear/errors.hpp"

namespace plinear {

BigIndex parse_index(std::string_view text)
{
    std::size_t a = 0, b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1])))
        --b;
    if (a == b)
        throw ParseError("empty index", a);
    for (std::size_t i = a; i < b; ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("index must be a non-negative decimal integer", i);
    return BigIndex(std::string(text.substr(a, b - a)));
}

std::vector<BigIndex> parse_multi_index(std::string_view text)
{
    std::vector<BigIndex> out;
    std::size_t start = 0;
    while (true) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos)
            end = text.size();
        try {
            out.push_back(parse_index(text.substr(start, end - start)));
        } catch (const ParseError& e) {
            throw ParseError("invalid index component " + std::to_string(out.size() + 1),
                             start + e.offset());
        }
        if (end == text.size())
            break;
        start = end + 1;
    }
    return out;
}

std::vector<std::uint64_t> base_p_digits(const BigIndex& n, std::uint64_t p)
{
    if (sgn(n) < 0)
        throw Error("base_p_digits: negative index");
    std::vector<std::uint64_t> d;
    BigIndex q = n;
    const BigIndex pz(static_cast<unsigned long>(p));
    do {
        BigIndex r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), pz.get_mpz_t());
        d.push_back(r.get_ui());
    } while (sgn(q) != 0);
    return d;
}

std::vector<std::vector<std::int64_t>> base_p_digit_vectors(const std::vector<BigIndex>& k,
                                                             std::uint64_t p)
{
    std::vector<std::vector<std::uint64_t>> comps;
    std::size_t len = 1;
    for (const auto& x : k) {
        comps.push_back(base_p_digits(x, p));
        len = std::max(len, comps.back().size());
    }
    std::vector<std::vector<std::int64_t>> out(len, std::vector<std::int64_t>(k.size(), 0));
    for (std::size_t j = 0; j < k.size(); ++j)
        for (std::size_t i = 0; i < comps[j].size(); ++i)
            out[i][j] = static_cast<std::int64_t>(comps[j][i]);
    return out;
}

} // namespace plinear

#include "plinear/engine/sequences.hpp"

#include <cctype>

#include "plinear/errors.hpp"

namespace plinear {

namespace {

std::int64_t parse_param(std::string_view text, std::string_view prefix)
{
    std::string_view rest = text.substr(prefix.size());
    if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')')
        throw Error("expected " + std::string(prefix) + "(<int>)");
    std::string_view num = rest.substr(1, rest.size() - 2);
    std::int64_t v = 0;
    for (char c : num) {
        if (!std::isdigit(static_cast<unsigned char>(c)) || v > 1000)
            throw Error("bad parameter in '" + std::string(text) + "'");
        v = v * 10 + (c - '0');
    }
    return v;
}

IntLaurent var(std::size_t n, std::size_t i, std::int64_t e = 1)
{
    ExpVec v(n);
    v[i] = e;
    return IntLaurent::monomial(v, 1);
}

} // namespace

SequenceSpec parse_sequence_spec(std::string_view text)
{
    SequenceSpec s;
    if (text == "apery")
        s.name = SequenceName::Apery;
    else if (text == "apery-prime")
        s.name = SequenceName::AperyPrime;
    else if (text == "central-binomial")
        s.name = SequenceName::CentralBinomial;
    else if (text == "power-of-2")
        s.name = SequenceName::PowerOf2;
    else if (text.starts_with("franel")) {
        s.name = SequenceName::Franel;
        s.param = parse_param(text, "franel");
        if (s.param < 1)
            throw Error("franel exponent must be at least 1");
    } else if (text.starts_with("multinomial-square")) {
        s.name = SequenceName::MultinomialSquare;
        s.param = parse_param(text, "multinomial-square");
        if (s.param < 1)
            throw Error("multinomial-square needs at least one part");
    } else
        throw Error("unknown sequence '" + std::string(text) + "'");
    return s;
}

std::string to_string(const SequenceSpec& s)
{
    switch (s.name) {
    case SequenceName::Apery:
        return "apery";
    case SequenceName::AperyPrime:
        return "apery-prime";
    case SequenceName::Franel:
        return "franel(" + std::to_string(s.param) + ")";
    case SequenceName::CentralBinomial:
        return "central-binomial";
    case SequenceName::MultinomialSquare:
        return "multinomial-square(" + std::to_string(s.param) + ")";
    case SequenceName::PowerOf2:
        return "power-of-2";
    case SequenceName::CustomCt:
        return "custom-ct";
    case SequenceName::CustomRat:
        return "custom-rat";
    }
    return "?";
}

SequenceSpec custom_ct_sequence(const IntLaurent& g, const IntLaurent& q)
{
    SequenceSpec s;
    s.name = SequenceName::CustomCt;
    s.primary = g;
    s.numerator = q;
    return s;
}

SequenceSpec custom_rat_sequence(const IntLaurent& P, const IntLaurent& Q)
{
    SequenceSpec s;
    s.name = SequenceName::CustomRat;
    s.primary = P;
    s.numerator = Q;
    return s;
}

std::vector<Integer> apery_numbers(std::int64_t K)
{
    std::vector<Integer> out;
    for (std::int64_t k = 0; k <= K; ++k) {
        Integer B = 1, sum = 1;
        for (std::int64_t m = 0; m < k; ++m) {
            B *= (k - m) * (k + m + 1);
            B /= (m + 1) * (m + 1);
            sum += B * B;
        }
        out.push_back(sum);
    }
    return out;
}

std::vector<Rational> apery_prime_numbers(std::int64_t K)
{
    std::vector<Rational> H{Rational(0)};
    for (std::int64_t j = 1; j <= 2 * K; ++j)
        H.push_back(H.back() + Rational(1, j));
    std::vector<Rational> out;
    for (std::int64_t k = 0; k <= K; ++k) {
        Integer B = 1;
        Rational sum = 0;
        for (std::int64_t m = 0; m < k; ++m) {
            B *= (k - m) * (k + m + 1);
            B /= (m + 1) * (m + 1);
            sum += Rational(B * B) * 2 * (H[k + m + 1] - H[k - m - 1]);
        }
        sum.canonicalize();
        out.push_back(sum);
    }
    return out;
}

std::vector<Rational> apery_harmonic_tail_numbers(std::int64_t K)
{
    std::vector<Rational> H{Rational(0)};
    for (std::int64_t j = 1; j <= K; ++j)
        H.push_back(H.back() + Rational(1, j));
    std::vector<Rational> out;
    for (std::int64_t k = 0; k <= K; ++k) {
        Integer B = 1;
        Rational sum = H[k];
        for (std::int64_t m = 0; m < k; ++m) {
            B *= (k - m) * (k + m + 1);
            B /= (m + 1) * (m + 1);
            sum += Rational(B * B) * (H[k] - H[m + 1]);
        }
        sum.canonicalize();
        out.push_back(sum);
    }
    return out;
}

std::vector<Integer> franel_numbers(std::int64_t ell, std::int64_t K)
{
    std::vector<Integer> out;
    for (std::int64_t k = 0; k <= K; ++k) {
        Integer b = 1, sum = 0, pw;
        for (std::int64_t m = 0; m <= k; ++m) {
            mpz_pow_ui(pw.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(ell));
            sum += pw;
            b = b * (k - m) / (m + 1);
        }
        out.push_back(sum);
    }
    return out;
}

std::vector<Integer> multinomial_square_numbers(std::int64_t parts, std::int64_t K)
{
    std::vector<std::vector<Integer>> binsq(K + 1);
    for (std::int64_t k = 0; k <= K; ++k)
        for (std::int64_t m = 0; m <= k; ++m) {
            Integer b = binomial(k, m);
            binsq[k].push_back(b * b);
        }
    std::vector<Integer> a(K + 1, 1);
    for (std::int64_t n = 2; n <= parts; ++n) {
        std::vector<Integer> next(K + 1, 0);
        for (std::int64_t k = 0; k <= K; ++k)
            for (std::int64_t m = 0; m <= k; ++m)
                next[k] += binsq[k][m] * a[k - m];
        a = std::move(next);
    }
    return a;
}

IntLaurent apery_laurent()
{
    const std::size_t n = 3;
    IntLaurent x = var(n, 0), y = var(n, 1), z = var(n, 2), one = IntLaurent::constant(n, 1);
    return (x + y) * (z + one) * (x + y + z) * (y + z + one) * var(n, 0, -1) * var(n, 1, -1) *
           var(n, 2, -1);
}

IntLaurent franel_laurent(std::int64_t ell)
{
    if (ell < 2)
        throw Error("constant-term form of franel(l) needs l >= 2");
    const auto n = static_cast<std::size_t>(ell - 1);
    IntLaurent one = IntLaurent::constant(n, 1), g = one;
    ExpVec all(n);
    for (std::size_t i = 0; i < n; ++i) {
        g = g * (one + var(n, i));
        all[i] = -1;
    }
    return g * (one + IntLaurent::monomial(all, 1));
}

IntLaurent multinomial_square_laurent(std::int64_t parts)
{
    if (parts < 2)
        throw Error("constant-term form of multinomial-square(n) needs n >= 2");
    const auto n = static_cast<std::size_t>(parts - 1);
    IntLaurent a = IntLaurent::constant(n, 1), b = a;
    for (std::size_t i = 0; i < n; ++i) {
        a += var(n, i);
        b += var(n, i, -1);
    }
    return a * b;
}

IntLaurent central_binomial_laurent()
{
    return var(1, 0) + IntLaurent::constant(1, 2) + var(1, 0, -1);
}

IntLaurent apery_denominator()
{
    const std::size_t n = 4;
    IntLaurent one = IntLaurent::constant(n, 1);
    return (one - var(n, 0) - var(n, 1)) * (one - var(n, 2) - var(n, 3)) -
           IntLaurent::monomial(ExpVec{1, 1, 1, 1}, 1);
}

std::vector<Rational> sequence_values(const SequenceSpec& s, std::int64_t K, const OracleCaps& caps)
{
    if (K < 0)
        throw Error("sequence_values: negative bound");
    auto lift = [](const std::vector<Integer>& v) {
        return std::vector<Rational>(v.begin(), v.end());
    };
    switch (s.name) {
    case SequenceName::Apery:
        return lift(apery_numbers(K));
    case SequenceName::AperyPrime:
        return apery_prime_numbers(K);
    case SequenceName::Franel:
        return lift(franel_numbers(s.param, K));
    case SequenceName::MultinomialSquare:
        return lift(multinomial_square_numbers(s.param, K));
    case SequenceName::CentralBinomial: {
        std::vector<Rational> out;
        for (std::int64_t k = 0; k <= K; ++k)
            out.emplace_back(binomial(2 * k, k));
        return out;
    }
    case SequenceName::PowerOf2: {
        std::vector<Rational> out;
        for (std::int64_t k = 0; k <= K; ++k)
            out.emplace_back(ipow(Integer(2), static_cast<unsigned long>(k)));
        return out;
    }
    case SequenceName::CustomCt:
        return lift(ct_sequence(s.primary, s.numerator, K, caps));
    case SequenceName::CustomRat: {
        const std::size_t n = s.primary.nvars();
        if (static_cast<std::int64_t>(n) * K > caps.series_degree)
            throw CapExceeded("series oracle limited to total degree " +
                              std::to_string(caps.series_degree));
        const auto S = inverse_series(s.primary, std::vector<std::int64_t>(n, K), caps);
        std::vector<Rational> out;
        for (std::int64_t k = 0; k <= K; ++k) {
            const ExpVec diag(std::vector<std::int64_t>(n, k));
            Rational sum = 0;
            for (const auto& [e, c] : s.numerator.terms()) {
                ExpVec d = diag - e;
                if (d.non_negative())
                    sum += Rational(c) * S.at(d);
            }
            out.push_back(sum);
        }
        return out;
    }
    }
    throw Error("sequence_values: unknown sequence");
}

std::vector<Integer> integer_sequence(const SequenceSpec& s, std::int64_t K, const OracleCaps& caps)
{
    std::vector<Integer> out;
    for (const auto& q : sequence_values(s, K, caps)) {
        if (q.get_den() != 1)
            throw Error(to_string(s) + " is not an integer sequence");
        out.push_back(q.get_num());
    }
    return out;
}

} // namespace plinear

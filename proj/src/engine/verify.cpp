#include "plinear/engine/verify.hpp"

#include <json.hpp>
#include <sstream>

#include "plinear/engine/evaluate.hpp"
#include "plinear/errors.hpp"

namespace plinear {

namespace {

std::string join(const std::vector<std::int64_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string ct_state_label(const CTScheme& s, std::size_t i)
{
    return "state (" + std::to_string(s.states[i].ell) + "," + s.states[i].u.to_string() + ")";
}

/// First position where a and b differ, or a.size().
std::size_t mismatch_at(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return i;
    return a.size();
}

template <typename F>
void for_each_in_box(std::size_t n, std::int64_t bound, F&& fn)
{
    ExpVec k(n);
    while (true) {
        fn(k);
        std::size_t i = n;
        while (true) {
            if (i == 0)
                return;
            --i;
            if (k[i] < bound) {
                ++k[i];
                break;
            }
            k[i] = 0;
        }
    }
}

} // namespace

void Report::fail(Failure f)
{
    ++failure_count;
    if (failures.size() < kMaxRecorded)
        failures.push_back(std::move(f));
}

void Report::merge(const Report& other)
{
    checked += other.checked;
    for (const auto& f : other.failures)
        fail(f);
    failure_count += other.failure_count - other.failures.size();
}

std::string Report::text() const
{
    std::ostringstream os;
    os << title << "\n";
    os << "checked: " << checked << "\n";
    if (ok())
        os << "result: PASS\n";
    else
        os << "result: FAIL (" << failure_count << " failures)\n";
    for (const auto& f : failures) {
        os << "failure: k=" << f.k << " l=" << f.l << " lhs=" << f.lhs << " rhs=" << f.rhs;
        if (!f.note.empty())
            os << " (" << f.note << ")";
        os << "\n";
    }
    return os.str();
}

std::string Report::json() const
{
    nlohmann::json j;
    j["checked"] = checked;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : failures) {
        nlohmann::json e{{"k", f.k}, {"l", f.l}, {"lhs", f.lhs}, {"rhs", f.rhs}};
        if (!f.note.empty())
            e["note"] = f.note;
        j["failures"].push_back(e);
    }
    j["failure_count"] = failure_count;
    j["title"] = title;
    return j.dump();
}

Report verify_scheme(const CTScheme& s, std::int64_t kmax, const OracleCaps& caps)
{
    Report rep;
    rep.title = "verify ct scheme p=" + std::to_string(s.p) + " r=" + std::to_string(s.r) +
                " states=" + std::to_string(s.size()) + " kmax=" + std::to_string(kmax);
    const std::uint64_t m = s.modulus.value();
    const auto vectors = ct_state_vectors_mod(s, kmax, caps);
    const auto target = ct_sequence_mod(s.source.primary, s.source.numerator, kmax, m, caps);
    const auto pp = static_cast<std::int64_t>(s.p);

    for (std::int64_t N = 0; N <= kmax; ++N) {
        const std::int64_t k = N / pp, l = N % pp;
        const auto rhs = s.digit_matrices[static_cast<std::size_t>(l)].apply(vectors[k]);
        const auto& lhs = vectors[N];
        ++rep.checked;
        if (std::size_t i = mismatch_at(lhs, rhs); i < lhs.size())
            rep.fail({std::to_string(k), std::to_string(l), std::to_string(lhs[i]), std::to_string(rhs[i]),
                      ct_state_label(s, i)});
    }
    for (std::int64_t N = 0; N <= kmax; ++N) {
        const Residue v = eval_ct(s, BigIndex(static_cast<long>(N)));
        ++rep.checked;
        if (v.value() != target[N])
            rep.fail({std::to_string(N), "-", std::to_string(v.value()), std::to_string(target[N]),
                      "eval against target sequence"});
    }
    return rep;
}

Report verify_scheme(const RatScheme& s, std::int64_t kmax, const OracleCaps& caps)
{
    Report rep;
    rep.title = "verify rat scheme p=" + std::to_string(s.p) + " r=" + std::to_string(s.r) +
                " states=" + std::to_string(s.size()) + " kmax=" + std::to_string(kmax);
    const std::uint64_t m = s.modulus.value();
    const std::size_t n = s.n;
    const std::vector<std::int64_t> bounds(n, kmax);
    const auto S = inverse_series_mod(lp_pow(s.source.primary, static_cast<std::uint64_t>(s.rho)), bounds, m, caps);
    const auto T = inverse_series_mod(s.source.primary, bounds, m, caps);
    const auto pp = static_cast<std::int64_t>(s.p);

    auto state = [&](const ExpVec& k) {
        std::vector<std::uint64_t> v;
        v.reserve(s.size());
        for (const auto& u : s.states) {
            ExpVec d = k - u;
            v.push_back(d.non_negative() ? S.at(d) : 0);
        }
        return v;
    };

    for_each_in_box(n, kmax, [&](const ExpVec& N) {
        ExpVec k(n), l(n);
        for (std::size_t i = 0; i < n; ++i) {
            k[i] = N[i] / pp;
            l[i] = N[i] % pp;
        }
        const auto lhs = state(N);
        const auto rhs = s.digit_matrix(l).apply(state(k));
        ++rep.checked;
        if (std::size_t i = mismatch_at(lhs, rhs); i < lhs.size())
            rep.fail({k.to_string(), l.to_string(), std::to_string(lhs[i]), std::to_string(rhs[i]),
                      "state " + s.states[i].to_string()});

        std::uint64_t want = 0;
        for (const auto& [w, c] : s.source.numerator.terms()) {
            ExpVec d = N - w;
            if (d.non_negative())
                want = add_mod(want, mul_mod(mod_floor_u64(c, m), T.at(d), m), m);
        }
        std::vector<BigIndex> idx;
        for (auto x : N)
            idx.emplace_back(static_cast<long>(x));
        const Residue got = eval_rat(s, idx);
        ++rep.checked;
        if (got.value() != want)
            rep.fail({N.to_string(), "-", std::to_string(got.value()), std::to_string(want),
                      "eval against series coefficient"});
    });
    return rep;
}

Report lucas_check(const SequenceSpec& seq, std::uint64_t p, std::int64_t kmax, const OracleCaps& caps)
{
    if (!is_prime(p))
        throw Error("lucas_check: " + std::to_string(p) + " is not prime");
    Report rep;
    rep.title = "lucas " + to_string(seq) + " p=" + std::to_string(p) + " kmax=" + std::to_string(kmax);
    const auto values = sequence_values(seq, kmax, caps);
    std::vector<std::uint64_t> a;
    for (const auto& v : values)
        a.push_back(rational_mod(v, p));
    for (std::int64_t N = 0; N <= kmax; ++N) {
        const auto digits = base_p_digits(BigIndex(static_cast<long>(N)), p);
        std::uint64_t prod = 1 % p;
        std::vector<std::int64_t> ds;
        for (auto d : digits) {
            prod = mul_mod(prod, a[d], p);
            ds.push_back(static_cast<std::int64_t>(d));
        }
        ++rep.checked;
        if (prod != a[N])
            rep.fail({std::to_string(N), join(ds), std::to_string(a[N]), std::to_string(prod),
                      "digit product"});
    }
    return rep;
}

Report gessel_check(std::uint64_t p, std::int64_t kmax)
{
    if (!is_prime(p))
        throw Error("gessel_check: " + std::to_string(p) + " is not prime");
    if (p == 2)
        throw Error("gessel_check: p = 2 is not supported (harmonic denominators)");
    Report rep;
    rep.title = "gessel p=" + std::to_string(p) + " kmax=" + std::to_string(kmax);
    const std::uint64_t m = p * p;
    const auto pp = static_cast<std::int64_t>(p);
    const auto A = apery_numbers(kmax * pp + pp - 1);
    const auto Ap = apery_prime_numbers(pp - 1);
    std::vector<std::uint64_t> a, ap;
    for (const auto& v : A)
        a.push_back(mod_floor_u64(v, m));
    for (const auto& v : Ap)
        ap.push_back(rational_mod(v, m));
    for (std::int64_t k = 0; k <= kmax; ++k)
        for (std::int64_t l = 0; l < pp; ++l) {
            const std::uint64_t lhs = a[k * pp + l];
            std::uint64_t rhs = mul_mod(a[l], a[k], m);
            std::uint64_t t = mul_mod(p % m, ap[l], m);
            t = mul_mod(t, static_cast<std::uint64_t>(k) % m, m);
            rhs = add_mod(rhs, mul_mod(t, a[k], m), m);
            ++rep.checked;
            if (lhs != rhs)
                rep.fail({std::to_string(k), std::to_string(l), std::to_string(lhs), std::to_string(rhs), ""});
        }
    return rep;
}

Report two_state_power_check(std::uint64_t p, std::int64_t kmax)
{
    if (!is_prime(p) || p == 2)
        throw Error("two_state_power_check: p must be an odd prime");
    Report rep;
    rep.title = "power-of-2 two-state p=" + std::to_string(p) + " kmax=" + std::to_string(kmax);
    const std::uint64_t m = p * p;
    Integer alpha = (ipow(Integer(2), static_cast<unsigned long>(p - 1)) - 1) / Integer(static_cast<unsigned long>(p));
    const std::uint64_t al = mod_floor_u64(alpha, p);
    auto a = [&](std::uint64_t N) { return pow_mod(2, N, m); };
    auto b = [&](std::uint64_t N) { return mul_mod(N % m, pow_mod(2, N, m), m); };
    for (std::int64_t k = 0; k <= kmax; ++k)
        for (std::uint64_t l = 0; l < p; ++l) {
            const std::uint64_t N = static_cast<std::uint64_t>(k) * p + l;
            const std::uint64_t ak = a(static_cast<std::uint64_t>(k)), bk = b(static_cast<std::uint64_t>(k));
            const std::uint64_t two_l = pow_mod(2, l, m);
            std::uint64_t ra = add_mod(mul_mod(two_l, ak, m), mul_mod(mul_mod(p * al % m, two_l, m), bk, m), m);
            std::uint64_t rb = add_mod(mul_mod(mul_mod(l % m, two_l, m), ak, m),
                                       mul_mod(mul_mod(p % m, mul_mod(two_l, (1 + l * al) % m, m), m), bk, m), m);
            rep.checked += 2;
            if (a(N) != ra)
                rep.fail({std::to_string(k), std::to_string(l), std::to_string(a(N)), std::to_string(ra), "a = 2^k"});
            if (b(N) != rb)
                rep.fail({std::to_string(k), std::to_string(l), std::to_string(b(N)), std::to_string(rb), "b = k 2^k"});
        }
    return rep;
}

Report verify_hasse_witt(const IntLaurent& g, std::uint64_t p, std::int64_t K, const OracleCaps& caps)
{
    const HasseWitt hw = build_hasse_witt(g, p);
    const auto& pts = hw.points.points;
    Report rep;
    rep.title = "hasse-witt p=" + std::to_string(p) + " points=" + std::to_string(pts.size()) +
                " K=" + std::to_string(K);
    std::vector<ExpVec> targets;
    for (const auto& u : pts)
        targets.push_back(-u);
    const auto F = power_coeff_table_mod(g, targets, K, p, caps);
    for (std::int64_t N = 0; N <= K; ++N) {
        const auto d = static_cast<std::size_t>(N % static_cast<std::int64_t>(p));
        const auto j = static_cast<std::size_t>(N / static_cast<std::int64_t>(p));
        for (std::size_t iu = 0; iu < pts.size(); ++iu) {
            std::uint64_t rhs = 0;
            for (std::size_t iv = 0; iv < pts.size(); ++iv)
                rhs = add_mod(rhs, mul_mod(hw.H[iu][iv].coeff(d).value(), F[j][iv], p), p);
            ++rep.checked;
            if (F[N][iu] != rhs)
                rep.fail({std::to_string(N), pts[iu].to_string(), std::to_string(F[N][iu]), std::to_string(rhs),
                          "coefficient of t^" + std::to_string(N) + " in F_u"});
        }
    }
    return rep;
}

} // namespace plinear

#include "plinear/scheme/scheme_io.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "plinear/cli/poly_text.hpp"
#include "plinear/errors.hpp"

namespace plinear {

using nlohmann::json;

namespace {

std::string digit_key(const ExpVec& l)
{
    std::string s;
    for (std::size_t i = 0; i < l.size(); ++i)
        s += (i ? "," : "") + std::to_string(l[i]);
    return s;
}

json matrix_json(const ResidueMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json common_fields(const char* kind, std::uint64_t p, unsigned r, std::int64_t rho, std::size_t n,
                   const Modulus& mod, const std::vector<std::uint64_t>& init,
                   const std::vector<std::int64_t>& extraction, const SchemeSource& src)
{
    json j;
    j["kind"] = kind;
    j["version"] = kSchemeFormatVersion;
    j["p"] = p;
    j["r"] = r;
    j["rho"] = rho;
    j["n"] = n;
    j["modulus"] = mod.value();
    j["vars"] = src.vars;
    j["init"] = init;
    j["extraction"] = extraction;
    return j;
}

[[noreturn]] void bad(const std::string& what)
{
    throw SchemeFormatError("scheme file: " + what);
}

const json& field(const json& j, const char* key)
{
    auto it = j.find(key);
    if (it == j.end())
        bad(std::string("missing field '") + key + "'");
    return *it;
}

template <typename T>
T get(const json& j, const char* key)
{
    try {
        return field(j, key).get<T>();
    } catch (const json::exception&) {
        bad(std::string("field '") + key + "' has the wrong type");
    }
}

std::uint64_t residue_entry(const json& v, std::uint64_t m, const char* what)
{
    if (!v.is_number_unsigned())
        bad(std::string(what) + " entries must be non-negative integers");
    const auto x = v.get<std::uint64_t>();
    if (x >= m)
        bad(std::string(what) + " entry " + std::to_string(x) + " is not below the modulus " +
            std::to_string(m));
    return x;
}

ResidueMatrix read_matrix(const json& rows, std::size_t S, std::uint64_t m, const char* what)
{
    if (!rows.is_array() || rows.size() != S)
        bad(std::string(what) + " must have " + std::to_string(S) + " rows");
    ResidueMatrix out(S, S, m);
    for (std::size_t i = 0; i < S; ++i) {
        if (!rows[i].is_array() || rows[i].size() != S)
            bad(std::string(what) + " row " + std::to_string(i) + " has the wrong length");
        for (std::size_t j = 0; j < S; ++j)
            out(i, j) = residue_entry(rows[i][j], m, what);
    }
    return out;
}

ExpVec read_vec(const json& v, std::size_t n, const char* what)
{
    if (!v.is_array() || v.size() != n)
        bad(std::string(what) + " must have " + std::to_string(n) + " components");
    ExpVec e(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!v[i].is_number_integer())
            bad(std::string(what) + " components must be integers");
        e[i] = v[i].get<std::int64_t>();
    }
    return e;
}

struct Header {
    std::uint64_t p;
    unsigned r;
    std::int64_t rho;
    std::size_t n;
    Modulus mod;
    std::vector<std::string> vars;
    std::vector<std::uint64_t> init;
    std::vector<std::int64_t> extraction;
};

Header read_header(const json& j)
{
    if (get<int>(j, "version") != kSchemeFormatVersion)
        bad("unsupported version " + field(j, "version").dump());
    Header h;
    h.p = get<std::uint64_t>(j, "p");
    h.r = get<unsigned>(j, "r");
    h.rho = get<std::int64_t>(j, "rho");
    h.n = get<std::size_t>(j, "n");
    try {
        h.mod = Modulus(h.p, h.r);
    } catch (const Error& e) {
        bad(e.what());
    }
    if (get<std::uint64_t>(j, "modulus") != h.mod.value())
        bad("modulus does not equal p^r");
    if (h.rho < 1 || h.rho - (h.rho + static_cast<std::int64_t>(h.p) - 1) / static_cast<std::int64_t>(h.p) <
                         static_cast<std::int64_t>(h.r) - 1)
        bad("rho does not satisfy rho - ceil(rho/p) >= r - 1");
    h.vars = get<std::vector<std::string>>(j, "vars");
    if (h.n == 0 || h.n > ExpVec::kMaxVars || h.vars.size() != h.n)
        bad("variable list does not match n");
    const json& init = field(j, "init");
    if (!init.is_array())
        bad("init must be an array");
    for (const auto& v : init)
        h.init.push_back(residue_entry(v, h.mod.value(), "init"));
    h.extraction = get<std::vector<std::int64_t>>(j, "extraction");
    return h;
}

IntLaurent read_poly(const json& src, const char* key, const std::vector<std::string>& vars)
{
    try {
        return parse_poly(get<std::string>(src, key), vars);
    } catch (const SchemeFormatError&) {
        throw;
    } catch (const Error& e) {
        bad(std::string("source '") + key + "': " + e.what());
    }
}

CTScheme read_ct(const json& j)
{
    Header h = read_header(j);
    CTScheme s;
    s.p = h.p;
    s.r = h.r;
    s.rho = h.rho;
    s.n = h.n;
    s.modulus = h.mod;
    const json& states = field(j, "states");
    if (!states.is_array() || states.empty())
        bad("states must be a nonempty array");
    for (const auto& st : states) {
        ExpVec e = read_vec(st, h.n + 1, "ct state");
        ExpVec u(h.n);
        for (std::size_t i = 0; i < h.n; ++i)
            u[i] = e[i + 1];
        if (e[0] < 0 || e[0] >= h.rho)
            bad("state t-shift outside [0, rho)");
        s.states.push_back({e[0], u});
    }
    if (!std::is_sorted(s.states.begin(), s.states.end()) ||
        std::adjacent_find(s.states.begin(), s.states.end()) != s.states.end())
        bad("states are not in canonical order");
    if (s.states.size() % static_cast<std::size_t>(h.rho) != 0)
        bad("state count is not a multiple of rho");
    const std::size_t S = s.states.size();

    const json& matrix = field(j, "matrix");
    if (!matrix.is_array() || matrix.size() != S)
        bad("matrix must have " + std::to_string(S) + " rows");
    s.digit_matrices.assign(h.p, ResidueMatrix(S, S, h.mod.value()));
    for (std::size_t i = 0; i < S; ++i) {
        if (!matrix[i].is_array() || matrix[i].size() != S)
            bad("matrix row " + std::to_string(i) + " has the wrong length");
        for (std::size_t k = 0; k < S; ++k) {
            const json& poly = matrix[i][k];
            if (!poly.is_array() || poly.size() > h.p)
                bad("matrix entries must be coefficient lists of length at most p");
            for (std::size_t d = 0; d < poly.size(); ++d)
                s.digit_matrices[d](i, k) = residue_entry(poly[d], h.mod.value(), "matrix");
        }
    }
    if (h.init.size() != S || h.extraction.size() != S)
        bad("init and extraction must have one entry per state");
    s.init = std::move(h.init);
    s.extraction = std::move(h.extraction);
    const json& src = field(j, "source");
    s.source = {h.vars, read_poly(src, "g", h.vars), read_poly(src, "q", h.vars)};
    return s;
}

RatScheme read_rat(const json& j)
{
    Header h = read_header(j);
    RatScheme s;
    s.p = h.p;
    s.r = h.r;
    s.rho = h.rho;
    s.n = h.n;
    s.modulus = h.mod;
    const json& states = field(j, "states");
    if (!states.is_array() || states.empty())
        bad("states must be a nonempty array");
    for (const auto& st : states) {
        ExpVec u = read_vec(st, h.n, "rat state");
        if (!u.non_negative())
            bad("rational states must be non-negative");
        s.states.push_back(u);
    }
    if (!std::is_sorted(s.states.begin(), s.states.end()) ||
        std::adjacent_find(s.states.begin(), s.states.end()) != s.states.end())
        bad("states are not in canonical order");
    const std::size_t S = s.states.size();
    if (h.init.size() != S || h.extraction.size() != S)
        bad("init and extraction must have one entry per state");
    s.init = std::move(h.init);
    s.extraction = std::move(h.extraction);
    const json& src = field(j, "source");
    s.source = {h.vars, read_poly(src, "P", h.vars), read_poly(src, "Q", h.vars)};

    const json& dm = field(j, "digit_matrices");
    if (!dm.is_object())
        bad("digit_matrices must be an object");
    for (const auto& [key, rows] : dm.items()) {
        std::vector<std::int64_t> comps;
        std::stringstream ss(key);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit) || part.size() > 18)
                bad("digit key '" + key + "' is malformed");
            comps.push_back(std::stoll(part));
        }
        if (comps.size() != h.n)
            bad("digit key '" + key + "' has the wrong arity");
        for (auto c : comps)
            if (c >= static_cast<std::int64_t>(h.p))
                bad("digit key '" + key + "' has a component >= p");
        s.seed_digit_matrix(ExpVec(comps), read_matrix(rows, S, h.mod.value(), "digit matrix"));
    }
    return s;
}

} // namespace

std::string scheme_to_json(const CTScheme& s)
{
    json j = common_fields("ct", s.p, s.r, s.rho, s.n, s.modulus, s.init, s.extraction, s.source);
    json states = json::array();
    for (const auto& st : s.states) {
        json e = json::array({st.ell});
        for (auto x : st.u)
            e.push_back(x);
        states.push_back(std::move(e));
    }
    j["states"] = std::move(states);
    json matrix = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < s.size(); ++k) {
            std::size_t deg = 0;
            for (std::size_t d = 0; d < s.digit_matrices.size(); ++d)
                if (s.digit_matrices[d](i, k) != 0)
                    deg = d + 1;
            json poly = json::array();
            for (std::size_t d = 0; d < deg; ++d)
                poly.push_back(s.digit_matrices[d](i, k));
            row.push_back(std::move(poly));
        }
        matrix.push_back(std::move(row));
    }
    j["matrix"] = std::move(matrix);
    j["source"] = {{"g", format_poly(s.source.primary, s.source.vars)},
                   {"q", format_poly(s.source.numerator, s.source.vars)}};
    return j.dump() + "\n";
}

std::string scheme_to_json(const RatScheme& s)
{
    json j = common_fields("rat", s.p, s.r, s.rho, s.n, s.modulus, s.init, s.extraction, s.source);
    json states = json::array();
    for (const auto& u : s.states)
        states.push_back(u.to_vector());
    j["states"] = std::move(states);
    json dm = json::object();
    for (const auto& [l, m] : s.memoized())
        dm[digit_key(l)] = matrix_json(m);
    j["digit_matrices"] = std::move(dm);
    j["source"] = {{"P", format_poly(s.source.primary, s.source.vars)},
                   {"Q", format_poly(s.source.numerator, s.source.vars)}};
    return j.dump() + "\n";
}

std::string scheme_to_json(const AnyScheme& s)
{
    return std::visit([](const auto& x) { return scheme_to_json(x); }, s);
}

AnyScheme scheme_from_json(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        bad("top level must be an object");
    const auto kind = get<std::string>(j, "kind");
    if (kind == "ct")
        return read_ct(j);
    if (kind == "rat")
        return read_rat(j);
    bad("unknown kind '" + kind + "'");
}

void save_scheme(const AnyScheme& s, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot open " + path.string() + " for writing");
    out << scheme_to_json(s);
    if (!out)
        throw Error("failed writing " + path.string());
}

AnyScheme load_scheme(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return scheme_from_json(ss.str());
}

} // namespace plinear

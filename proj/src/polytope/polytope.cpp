#include "plinear/polytope/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "plinear/errors.hpp"
#include "plinear/polytope/fourier_motzkin.hpp"

namespace plinear {

namespace {

// Rank of a small integer matrix, by exact rational elimination.
std::size_t rank_of(std::vector<std::vector<Rational>> rows, std::size_t ncols)
{
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && sgn(rows[piv][col]) == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (sgn(rows[r][col]) == 0)
                continue;
            Rational f = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < ncols; ++c)
                rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::int64_t det(const std::vector<std::vector<std::int64_t>>& m)
{
    const std::size_t k = m.size();
    if (k == 0)
        return 1;
    if (k == 1)
        return m[0][0];
    if (k == 2)
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    std::int64_t s = 0;
    for (std::size_t j = 0; j < k; ++j) {
        if (m[0][j] == 0)
            continue;
        std::vector<std::vector<std::int64_t>> minor;
        for (std::size_t i = 1; i < k; ++i) {
            std::vector<std::int64_t> row;
            for (std::size_t c = 0; c < k; ++c)
                if (c != j)
                    row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        std::int64_t d = m[0][j] * det(minor);
        s += (j % 2 == 0) ? d : -d;
    }
    return s;
}

// Normal to the hyperplane spanned by n-1 difference vectors in Z^n
// (generalized cross product).
std::vector<std::int64_t> cross(const std::vector<std::vector<std::int64_t>>& diffs, std::size_t n)
{
    std::vector<std::int64_t> normal(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<std::int64_t>> minor;
        for (const auto& d : diffs) {
            std::vector<std::int64_t> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != i)
                    row.push_back(d[c]);
            minor.push_back(std::move(row));
        }
        std::int64_t v = det(minor);
        normal[i] = (i % 2 == 0) ? v : -v;
    }
    return normal;
}

bool make_primitive(std::vector<std::int64_t>& a)
{
    std::int64_t g = 0;
    for (auto v : a)
        g = std::gcd(g, v);
    if (g == 0)
        return false;
    for (auto& v : a)
        v /= g;
    return true;
}

// Visit every k-subset of [0, n) in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f)
{
    if (k > n)
        return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

Rational dot(const std::vector<std::int64_t>& a, const std::vector<Rational>& x)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += Rational(static_cast<long>(a[i])) * x[i];
    return s;
}

Rational random_unit(std::mt19937_64& rng, bool allow_zero)
{
    std::uniform_int_distribution<long> d(allow_zero ? 0 : 1, 1000);
    Rational r(d(rng), 1000);
    r.canonicalize();
    return r;
}

} // namespace

Polytope::Polytope(std::size_t nvars, std::vector<ExpVec> vertices, std::vector<Facet> facets)
    : n_(nvars), vertices_(std::move(vertices)), facets_(std::move(facets)), lo_(nvars), hi_(nvars)
{
    if (vertices_.empty())
        throw Error("polytope without vertices");
    for (std::size_t i = 0; i < n_; ++i) {
        lo_[i] = hi_[i] = vertices_[0][i];
        for (const auto& v : vertices_) {
            lo_[i] = std::min(lo_[i], v[i]);
            hi_[i] = std::max(hi_[i], v[i]);
        }
    }
}

bool Polytope::in_orthant() const noexcept
{
    return std::all_of(lo_.begin(), lo_.end(), [](std::int64_t v) { return v >= 0; });
}

std::string to_string(RegionKind kind)
{
    return kind == RegionKind::InteriorDilation ? "interior-dilation" : "box-closure";
}

bool LatticePointSet::contains(const ExpVec& e) const
{
    return std::binary_search(points.begin(), points.end(), e);
}

std::size_t LatticePointSet::index_of(const ExpVec& e) const
{
    auto it = std::lower_bound(points.begin(), points.end(), e);
    if (it == points.end() || !(*it == e))
        return points.size();
    return static_cast<std::size_t>(it - points.begin());
}

Polytope newton_polytope(const std::vector<ExpVec>& support)
{
    if (support.empty())
        throw Error("newton_polytope: empty support");
    const std::size_t n = support[0].size();
    std::vector<ExpVec> pts(support.begin(), support.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<std::vector<Rational>> diffs;
    for (const auto& q : pts) {
        std::vector<Rational> row(n);
        for (std::size_t i = 0; i < n; ++i)
            row[i] = static_cast<long>(q[i] - pts[0][i]);
        diffs.push_back(std::move(row));
    }
    if (rank_of(diffs, n) < n)
        throw NotFullDimensional("Newton polytope of " + std::to_string(pts.size()) +
                                 " points is not full-dimensional in R^" + std::to_string(n));

    std::set<Facet> facets;
    for_each_subset(pts.size(), n, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::vector<std::int64_t>> d;
        for (std::size_t k = 1; k < idx.size(); ++k) {
            std::vector<std::int64_t> row(n);
            for (std::size_t i = 0; i < n; ++i)
                row[i] = pts[idx[k]][i] - pts[idx[0]][i];
            d.push_back(std::move(row));
        }
        auto a = cross(d, n);
        if (!make_primitive(a))
            return;
        const std::int64_t c = dot(a, pts[idx[0]]);
        bool above = false, below = false;
        for (const auto& q : pts) {
            std::int64_t v = dot(a, q);
            above = above || v > c;
            below = below || v < c;
        }
        if (above && below)
            return;
        if (above) {
            for (auto& x : a)
                x = -x;
            facets.insert({a, -c});
        } else {
            facets.insert({a, c});
        }
    });

    std::vector<ExpVec> vertices;
    for (const auto& q : pts) {
        std::vector<std::vector<Rational>> tight;
        for (const auto& f : facets) {
            if (dot(f.normal, q) == f.offset) {
                std::vector<Rational> row(n);
                for (std::size_t i = 0; i < n; ++i)
                    row[i] = static_cast<long>(f.normal[i]);
                tight.push_back(std::move(row));
            }
        }
        if (rank_of(tight, n) == n)
            vertices.push_back(q);
    }
    return Polytope(n, std::move(vertices), std::vector<Facet>(facets.begin(), facets.end()));
}

bool membership(const Polytope& poly, const ExpVec& point, std::int64_t rho, bool strict)
{
    for (const auto& f : poly.facets()) {
        std::int64_t v = dot(f.normal, point);
        std::int64_t bound = rho * f.offset;
        if (strict ? v >= bound : v > bound)
            return false;
    }
    return true;
}

bool membership(const Polytope& poly, const std::vector<Rational>& point, std::int64_t rho,
                bool strict)
{
    for (const auto& f : poly.facets()) {
        Rational v = dot(f.normal, point);
        Rational bound = Rational(static_cast<long>(rho * f.offset));
        if (strict ? v >= bound : v > bound)
            return false;
    }
    return true;
}

LatticePointSet dilated_interior_points(const Polytope& poly, std::int64_t rho)
{
    if (rho < 1)
        throw Error("dilated_interior_points: rho must be positive");
    const std::size_t n = poly.nvars();
    LatticePointSet out{RegionKind::InteriorDilation, rho, {}};
    ExpVec lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = rho * poly.min_coord(i);
        hi[i] = rho * poly.max_coord(i);
    }
    ExpVec k = lo;
    while (true) {
        if (membership(poly, k, rho, true))
            out.points.push_back(k);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (k[i] < hi[i]) {
                ++k[i];
                break;
            }
            k[i] = lo[i];
            if (i == 0)
                return out;
        }
    }
}

bool box_closure_contains(const Polytope& poly, const std::vector<Rational>& point,
                          std::int64_t rho, bool strict)
{
    const std::size_t n = poly.nvars();
    for (const auto& y : point)
        if (sgn(y) < 0)
            return false;
    if (membership(poly, point, rho, strict))
        return true;
    std::vector<LinearConstraint> sys;
    for (const auto& f : poly.facets()) {
        LinearConstraint c;
        for (auto v : f.normal)
            c.a.emplace_back(static_cast<long>(v));
        c.b = static_cast<long>(rho * f.offset);
        c.strict = strict;
        sys.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < n; ++i) {
        LinearConstraint c;
        c.a.assign(n, Rational(0));
        c.a[i] = -1;
        c.b = -point[i];
        sys.push_back(std::move(c));
    }
    return fm_feasible(std::move(sys), n);
}

LatticePointSet box_closure_points(const Polytope& poly, std::int64_t rho)
{
    if (rho < 1)
        throw Error("box_closure_points: rho must be positive");
    if (!poly.in_orthant())
        throw Error("box_closure_points: polytope leaves the non-negative orthant");
    const std::size_t n = poly.nvars();
    LatticePointSet out{RegionKind::BoxClosure, rho, {}};
    ExpVec hi(n);
    for (std::size_t i = 0; i < n; ++i)
        hi[i] = rho * poly.max_coord(i);
    ExpVec y(n);
    std::vector<Rational> q(n);
    while (true) {
        for (std::size_t i = 0; i < n; ++i)
            q[i] = static_cast<long>(y[i]);
        if (box_closure_contains(poly, q, rho, true))
            out.points.push_back(y);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (y[i] < hi[i]) {
                ++y[i];
                break;
            }
            y[i] = 0;
            if (i == 0)
                return out;
        }
    }
}

std::vector<Rational> sample_point(const Polytope& poly, std::int64_t scale, bool interior,
                                   std::mt19937_64& rng)
{
    const auto& verts = poly.vertices();
    std::vector<Rational> w(verts.size());
    Rational total = 0;
    for (auto& x : w) {
        x = random_unit(rng, !interior);
        total += x;
    }
    if (sgn(total) == 0) {
        w[0] = 1;
        total = 1;
    }
    std::vector<Rational> p(poly.nvars(), Rational(0));
    for (std::size_t v = 0; v < verts.size(); ++v)
        for (std::size_t i = 0; i < poly.nvars(); ++i)
            p[i] += w[v] / total * Rational(static_cast<long>(verts[v][i] * scale));
    return p;
}

MinkowskiCheck minkowski_property_check(const Polytope& poly, RegionKind mu, std::int64_t a,
                                        std::int64_t b, std::size_t samples, std::mt19937_64& rng)
{
    if (a < 1 || b < 1)
        throw Error("minkowski_property_check: a and b must be positive");
    const std::size_t n = poly.nvars();
    MinkowskiCheck out;
    auto dominated = [&](std::vector<Rational> z, bool allow_zero) {
        for (auto& x : z)
            x *= random_unit(rng, allow_zero);
        return z;
    };
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<Rational> x = sample_point(poly, a, true, rng);
        std::vector<Rational> y = sample_point(poly, b, false, rng);
        bool inside;
        std::vector<Rational> sum(n);
        if (mu == RegionKind::InteriorDilation) {
            for (std::size_t i = 0; i < n; ++i)
                sum[i] = x[i] + y[i];
            inside = membership(poly, sum, a + b, true);
        } else {
            x = dominated(std::move(x), false);
            y = dominated(std::move(y), true);
            for (std::size_t i = 0; i < n; ++i)
                sum[i] = x[i] + y[i];
            inside = box_closure_contains(poly, sum, a + b, true);
        }
        ++out.samples;
        if (!inside) {
            out.ok = false;
            out.counterexample = "x+y = (";
            for (std::size_t i = 0; i < n; ++i)
                out.counterexample += (i ? "," : "") + sum[i].get_str();
            out.counterexample += ")";
            return out;
        }
    }
    return out;
}

} // namespace plinear

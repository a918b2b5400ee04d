#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "plinear/ring/exp_vec.hpp"
#include "plinear/ring/integer.hpp"

namespace plinear {

/// Half-space <normal, x> <= offset. The normal is primitive and points
/// outward.
struct Facet {
    std::vector<std::int64_t> normal;
    std::int64_t offset = 0;

    friend bool operator==(const Facet&, const Facet&) = default;
    friend auto operator<=>(const Facet&, const Facet&) = default;
};

/// Full-dimensional lattice polytope in R^n with both representations.
class Polytope {
public:
    Polytope(std::size_t nvars, std::vector<ExpVec> vertices, std::vector<Facet> facets);

    std::size_t nvars() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return n_; }
    const std::vector<ExpVec>& vertices() const noexcept { return vertices_; }
    const std::vector<Facet>& facets() const noexcept { return facets_; }

    /// Per-coordinate minimum and maximum over the vertices.
    std::int64_t min_coord(std::size_t i) const noexcept { return lo_[i]; }
    std::int64_t max_coord(std::size_t i) const noexcept { return hi_[i]; }

    /// True when every vertex has non-negative coordinates.
    bool in_orthant() const noexcept;

private:
    std::size_t n_;
    std::vector<ExpVec> vertices_;
    std::vector<Facet> facets_;
    std::vector<std::int64_t> lo_, hi_;
};

/// The two state regions used by the scheme builders.
enum class RegionKind { InteriorDilation, BoxClosure };

std::string to_string(RegionKind kind);

/// Sorted, duplicate-free lattice points of rho*Delta° or rho*B(Delta°).
struct LatticePointSet {
    RegionKind kind = RegionKind::InteriorDilation;
    std::int64_t rho = 1;
    std::vector<ExpVec> points;

    std::size_t size() const noexcept { return points.size(); }
    bool contains(const ExpVec& e) const;
    /// Position in the sorted list, or size() if absent.
    std::size_t index_of(const ExpVec& e) const;
};

/// Convex hull of a nonempty support set. Throws NotFullDimensional when
/// the hull has empty interior in R^n.
Polytope newton_polytope(const std::vector<ExpVec>& support);

/// All k in Z^n with <a,k> < rho*c for every facet.
LatticePointSet dilated_interior_points(const Polytope& poly, std::int64_t rho);

/// All lattice y >= 0 dominated by some point of rho*Delta° (the box
/// closure, using rho*B(Delta°) = B(rho*Delta°)). Requires the polytope to
/// lie in the non-negative orthant.
LatticePointSet box_closure_points(const Polytope& poly, std::int64_t rho);

/// <a,point> < rho*c (strict) or <= rho*c for every facet.
bool membership(const Polytope& poly, const std::vector<Rational>& point, std::int64_t rho,
                bool strict);
bool membership(const Polytope& poly, const ExpVec& point, std::int64_t rho, bool strict);

/// point in rho*B(Delta°) (strict) or rho*B(Delta) (non-strict): point >= 0
/// and some z >= point satisfies the facet inequalities.
bool box_closure_contains(const Polytope& poly, const std::vector<Rational>& point,
                          std::int64_t rho, bool strict);

struct MinkowskiCheck {
    bool ok = true;
    std::size_t samples = 0;
    std::string counterexample;
};

/// Samples x in a*mu, y in b*closure(mu) and asserts x + y in (a+b)*mu for
/// mu = Delta° or B(Delta°).
MinkowskiCheck minkowski_property_check(const Polytope& poly, RegionKind mu, std::int64_t a,
                                        std::int64_t b, std::size_t samples, std::mt19937_64& rng);

/// Random point of scale*Delta (closed) or its interior, as exact rationals.
std::vector<Rational> sample_point(const Polytope& poly, std::int64_t scale, bool interior,
                                   std::mt19937_64& rng);

} // namespace plinear

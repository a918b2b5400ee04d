#include "plinear/cartier/cartier.hpp"

namespace plinear {

std::int64_t choose_rho(std::uint64_t p, unsigned r)
{
    if (!is_prime(p))
        throw Error("choose_rho: " + std::to_string(p) + " is not prime");
    if (r == 0)
        throw Error("choose_rho: r must be positive");
    const auto pp = static_cast<std::int64_t>(p);
    std::int64_t rho = 1;
    while (rho - ceil_div(rho, pp) < static_cast<std::int64_t>(r) - 1)
        ++rho;
    return rho;
}

StateRegion::StateRegion(RegionKind kind_, Polytope polytope_, std::int64_t rho_)
    : kind(kind_), polytope(std::move(polytope_)), rho(rho_)
{
    dilations.resize(static_cast<std::size_t>(rho) + 1);
    for (std::int64_t j = 1; j <= rho; ++j)
        dilations[j] = kind == RegionKind::InteriorDilation ? dilated_interior_points(polytope, j)
                                                            : box_closure_points(polytope, j);
    points = dilations[rho];
}

} // namespace plinear

#include "plinear/ring/laurent_poly.hpp"

namespace plinear {

TLaurent one_minus_t(const IntLaurent& g)
{
    TLaurent f(g.nvars());
    f.add_term(ExpVec(g.nvars()), TPoly<Integer>::constant(1));
    for (const auto& [e, c] : g.terms())
        f.add_term(e, TPoly<Integer>::monomial(-c, 1));
    return f;
}

} // namespace plinear

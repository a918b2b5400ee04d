#include "plinear/polytope/fourier_motzkin.hpp"

#include <map>
#include <utility>

namespace plinear {

namespace {

// Scale so the first nonzero coefficient has absolute value 1.
void normalize(LinearConstraint& c)
{
    for (const auto& x : c.a) {
        if (sgn(x) != 0) {
            Rational s = abs(x);
            for (auto& y : c.a)
                y /= s;
            c.b /= s;
            return;
        }
    }
}

// Keep only the tightest bound per normalized direction.
class ConstraintSet {
public:
    // Returns false when a constant constraint is violated.
    bool add(LinearConstraint c)
    {
        bool all_zero = true;
        for (const auto& x : c.a)
            all_zero = all_zero && sgn(x) == 0;
        if (all_zero)
            return c.strict ? sgn(c.b) > 0 : sgn(c.b) >= 0;
        normalize(c);
        auto [it, inserted] = best_.try_emplace(c.a, std::make_pair(c.b, c.strict));
        if (!inserted) {
            auto& [b, strict] = it->second;
            if (c.b < b || (c.b == b && c.strict && !strict)) {
                b = c.b;
                strict = c.strict;
            }
        }
        return true;
    }

    std::vector<LinearConstraint> take()
    {
        std::vector<LinearConstraint> out;
        out.reserve(best_.size());
        for (auto& [a, bs] : best_)
            out.push_back({a, bs.first, bs.second});
        best_.clear();
        return out;
    }

private:
    std::map<std::vector<Rational>, std::pair<Rational, bool>> best_;
};

} // namespace

bool fm_feasible(std::vector<LinearConstraint> system, std::size_t nvars)
{
    ConstraintSet set;
    for (auto& c : system) {
        c.a.resize(nvars);
        if (!set.add(std::move(c)))
            return false;
    }
    system = set.take();

    std::vector<bool> eliminated(nvars, false);
    for (std::size_t step = 0; step < nvars; ++step) {
        // Eliminate the variable with the fewest generated combinations.
        std::size_t best = nvars;
        std::size_t best_cost = 0;
        for (std::size_t j = 0; j < nvars; ++j) {
            if (eliminated[j])
                continue;
            std::size_t pos = 0, neg = 0;
            for (const auto& c : system) {
                pos += sgn(c.a[j]) > 0;
                neg += sgn(c.a[j]) < 0;
            }
            if (best == nvars || pos * neg < best_cost) {
                best = j;
                best_cost = pos * neg;
            }
        }
        const std::size_t j = best;
        eliminated[j] = true;

        std::vector<const LinearConstraint*> pos, neg;
        for (const auto& c : system) {
            int s = sgn(c.a[j]);
            if (s > 0)
                pos.push_back(&c);
            else if (s < 0)
                neg.push_back(&c);
            else if (!set.add(c))
                return false;
        }
        for (const auto* P : pos) {
            for (const auto* N : neg) {
                // |N_j| * P + P_j * N cancels variable j.
                Rational wp = -N->a[j];
                Rational wn = P->a[j];
                LinearConstraint c;
                c.a.resize(nvars);
                for (std::size_t i = 0; i < nvars; ++i)
                    c.a[i] = wp * P->a[i] + wn * N->a[i];
                c.a[j] = 0;
                c.b = wp * P->b + wn * N->b;
                c.strict = P->strict || N->strict;
                if (!set.add(std::move(c)))
                    return false;
            }
        }
        system = set.take();
    }
    return true;
}

} // namespace plinear

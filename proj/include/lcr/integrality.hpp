#pragma once

#include <map>

#include "lcr/ideals.hpp"

namespace lcr {

/// (R0, *, 1l) or (R1, #, 1#) of a left commutative rng.
struct ComponentRing {
    FiniteAbelianGroup group;
    Subset carrier;
    Table product;
    Elem identity = 0;
    int grade = 0;

    Elem mul(Elem a, Elem b) const { return product(a, b); }

    /// u^k with u^0 = identity.
    Elem power(Elem u, std::size_t k) const
    {
        Elem acc = identity;
        for (std::size_t i = 0; i < k; ++i)
            acc = mul(acc, u);
        return acc;
    }
};

/// Monic relation u^n + a1 u^(n-1) + ... + an = 0.
struct IntegralWitness {
    std::size_t degree = 0;
    std::vector<Elem> coefficients; // a1 .. an

    bool operator==(const IntegralWitness&) const = default;
};

inline ComponentRing component_ring(const LcRng& r, int grade)
{
    ComponentRing c{r.group(), grade == 0 ? r.r0() : r.r1(),
                    grade == 0 ? r.mul_table() : r.local_table(),
                    grade == 0 ? r.left_identity() : r.local_identity(), grade};
    const auto xs = c.carrier.elements();
    auto bad = detail::first_triple(xs, xs, xs, [&](Elem a, Elem b, Elem d) {
        return !c.carrier.contains(c.mul(a, b)) || c.mul(a, b) != c.mul(b, a) ||
               c.mul(c.mul(a, b), d) != c.mul(a, c.mul(b, d)) || c.mul(c.identity, a) != a;
    });
    if (bad)
        throw std::logic_error("component ring " + std::to_string(grade) +
                               " is not a commutative unital ring at (" + join(*bad) + ")");
    return c;
}

/// Evaluates u^n + a1 u^(n-1) + ... + an in the ambient ring. The constant
/// term is an itself, so no identity is needed in the coefficient set.
inline Elem evaluate_monic(const ComponentRing& ring, Elem u, const IntegralWitness& w)
{
    Elem acc = ring.power(u, w.degree);
    for (std::size_t i = 1; i <= w.degree; ++i) {
        const Elem a = w.coefficients[i - 1];
        acc = ring.group.add(acc, i == w.degree ? a : ring.mul(a, ring.power(u, w.degree - i)));
    }
    return acc;
}

/// Least-degree monic relation for u with coefficients in `coeffs`. Walks the
/// chain of spans {c0 + c1 u + ... + c(k-1) u^(k-1)} and stops at the first k
/// whose power u^k has its negative in the span. Does not require coeffs to
/// contain the identity.
inline std::optional<IntegralWitness> find_monic_relation(const ComponentRing& ring, const Subset& coeffs,
                                                          Elem u, std::size_t max_degree)
{
    const auto cs = coeffs.elements();
    // span element -> (c0, c1, ..., c(k-1)), coefficient of u^i at position i
    std::map<Elem, std::vector<Elem>> span;
    for (Elem c : cs)
        span.try_emplace(c, std::vector<Elem>{c});
    for (std::size_t k = 1; k <= max_degree; ++k) {
        const Elem target = ring.group.neg(ring.power(u, k));
        if (auto it = span.find(target); it != span.end()) {
            IntegralWitness w{k, std::vector<Elem>(k)};
            // a_j multiplies u^(k-j)
            for (std::size_t j = 1; j <= k; ++j)
                w.coefficients[j - 1] = it->second[k - j];
            return w;
        }
        const Elem uk = ring.power(u, k);
        std::map<Elem, std::vector<Elem>> next;
        for (const auto& [v, coef] : span) {
            for (Elem c : cs) {
                const Elem term = ring.mul(c, uk);
                const Elem sum = ring.group.add(v, term);
                if (!next.count(sum)) {
                    auto extended = coef;
                    extended.push_back(c);
                    next.emplace(sum, std::move(extended));
                }
            }
        }
        span = std::move(next);
    }
    return std::nullopt;
}

/// Least-degree monic relation over a unital subring S of the ambient ring.
inline std::optional<IntegralWitness> integral_witness(const ComponentRing& ambient, const Subset& s, Elem u,
                                                       std::size_t max_degree)
{
    if (!s.contains(ambient.identity))
        throw Error(ErrorCode::SubringNotUnital,
                    "identity " + std::to_string(ambient.identity) + " of component " +
                        std::to_string(ambient.grade) + " is not in {" + s.to_string() + "}");
    if (!s.subset_of(ambient.carrier) || !ambient.carrier.contains(u))
        throw std::invalid_argument("integral_witness: arguments outside the component carrier");
    return find_monic_relation(ambient, s, u, max_degree);
}

/// The 0- and 1-part of a subrng S of U: S1l and S n halo.
inline std::pair<Subset, Subset> subrng_components(const LcRng& u, const Subset& s)
{
    Subset s0(u.order());
    s.for_each([&](Elem x) { s0.insert(u.comp0(x)); });
    return {s0, s & u.halo()};
}

struct GradedIntegrality {
    std::optional<IntegralWitness> w0;
    std::optional<IntegralWitness> w1;

    bool integral() const { return w0 && w1; }
};

inline GradedIntegrality graded_witnesses(const LcRng& u, const Subset& s, Elem x, std::size_t max_degree = 0)
{
    if (max_degree == 0)
        max_degree = u.order();
    const auto [s0, s1] = subrng_components(u, s);
    return {integral_witness(component_ring(u, 0), s0, u.comp0(x), max_degree),
            integral_witness(component_ring(u, 1), s1, u.comp1(x), max_degree)};
}

/// Both components of x satisfy monic relations over the matching component
/// of S (products * and # respectively).
inline bool is_graded_integral(const LcRng& u, const Subset& s, Elem x, std::size_t max_degree = 0)
{
    return graded_witnesses(u, s, x, max_degree).integral();
}

/// Evaluates (x0 u1)^#n + (x0 a1) # (x0 u1)^#(n-1) + ... + x0^n an, the
/// relation obtained by multiplying w's relation for u1 on the left by x0^n.
/// Returns whether it vanishes.
inline bool push_down_check(const LcRng& u, Elem x0, Elem u1, const IntegralWitness& w)
{
    const std::size_t n = w.degree;
    const Elem xu = u.mul(x0, u1);
    Elem acc = u.local_power(xu, n);
    for (std::size_t i = 1; i <= n; ++i) {
        const Elem scaled = u.mul(u.mul_power(x0, i), w.coefficients[i - 1]);
        const Elem term = i == n ? scaled : u.local(scaled, u.local_power(xu, n - i));
        acc = u.add(acc, term);
    }
    return acc == 0;
}

} // namespace lcr

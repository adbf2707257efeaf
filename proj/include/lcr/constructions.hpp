#pragma once

#include <functional>

#include "lcr/lcrng.hpp"

namespace lcr {

/// A commutative unital ring given by tables. Used raw and, after
/// validate_comm_ring, as a checked ingredient.
struct FiniteCommRing {
    Table add;
    Table mul;
    Elem one = 0;

    std::size_t order() const { return add.order(); }
    bool operator==(const FiniteCommRing&) const = default;
};

inline Validation<FiniteCommRing> validate_comm_ring(const FiniteCommRing& ring)
{
    Validation<FiniteCommRing> out;
    auto group = validate_group(ring.add);
    if (!group) {
        out.violations = std::move(group.violations);
        return out;
    }
    const auto& g = *group.value;
    const std::size_t n = g.order();
    if (ring.mul.order() != n)
        throw Error(ErrorCode::ShapeMismatch, "mul table must have order " + std::to_string(n));
    detail::ViolationLog log;
    if (!ring.mul.total() || ring.one >= n) {
        log.add({"mul-closure", {}, "every product entry and the identity must be elements"});
        out.violations = std::move(log.items());
        return out;
    }
    const auto xs = all_elements(n);
    const Table& m = ring.mul;
    log.record("mul-commutativity", detail::first_pair(xs, xs, [&](Elem a, Elem b) { return m(a, b) != m(b, a); }));
    log.record("mul-associativity", detail::first_triple(xs, xs, xs, [&](Elem a, Elem b, Elem c) {
                   return m(m(a, b), c) != m(a, m(b, c));
               }));
    log.record("distributivity", detail::first_triple(xs, xs, xs, [&](Elem a, Elem b, Elem c) {
                   return m(a, g.add(b, c)) != g.add(m(a, b), m(a, c));
               }));
    log.record("identity", detail::first_single(xs, [&](Elem a) { return m(ring.one, a) != a; }));
    if (!log.empty()) {
        out.violations = std::move(log.items());
        return out;
    }
    out.value = ring;
    return out;
}

/// Integers mod n, element k at index k.
inline FiniteCommRing zmod(std::size_t n)
{
    if (n == 0 || n > max_order)
        throw Error(ErrorCode::OrderTooLarge, "zmod(" + std::to_string(n) + ")");
    FiniteCommRing r{Table(n), Table(n), static_cast<Elem>(1 % n)};
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            r.add(a, b) = static_cast<Elem>((a + b) % n);
            r.mul(a, b) = static_cast<Elem>((a * b) % n);
        }
    }
    return r;
}

/// A x B with (a, b) at index a + |A| b.
inline FiniteCommRing product_ring(const FiniteCommRing& a, const FiniteCommRing& b)
{
    const std::size_t na = a.order(), nb = b.order();
    if (na * nb > max_order)
        throw Error(ErrorCode::OrderTooLarge, "product of order " + std::to_string(na * nb));
    auto idx = [&](Elem x, Elem y) { return static_cast<Elem>(x + na * y); };
    FiniteCommRing r{Table(na * nb), Table(na * nb), idx(a.one, b.one)};
    for (Elem x = 0; x < na * nb; ++x) {
        for (Elem y = 0; y < na * nb; ++y) {
            const Elem xa = x % na, xb = x / na, ya = y % na, yb = y / na;
            r.add(x, y) = idx(a.add(xa, ya), b.add(xb, yb));
            r.mul(x, y) = idx(a.mul(xa, ya), b.mul(xb, yb));
        }
    }
    return r;
}

/// phi as an index map A -> B.
struct RingHom {
    std::vector<Elem> map;

    Elem operator()(Elem a) const { return map[a]; }
    bool operator==(const RingHom&) const = default;
};

inline Check is_ring_hom(const FiniteCommRing& a, const FiniteCommRing& b, const RingHom& phi)
{
    if (phi.map.size() != a.order())
        return Check::fail("domain", {});
    const auto xs = all_elements(a.order());
    if (auto w = detail::first_single(xs, [&](Elem x) { return phi(x) >= b.order(); }))
        return Check::fail("codomain", *w);
    if (auto w = detail::first_pair(xs, xs, [&](Elem x, Elem y) { return phi(a.add(x, y)) != b.add(phi(x), phi(y)); }))
        return Check::fail("additive", *w);
    if (auto w = detail::first_pair(xs, xs, [&](Elem x, Elem y) { return phi(a.mul(x, y)) != b.mul(phi(x), phi(y)); }))
        return Check::fail("multiplicative", *w);
    if (phi(a.one) != b.one)
        return Check::fail("unital", {a.one});
    return Check::pass();
}

inline RingHom identity_hom(const FiniteCommRing& a) { return {all_elements(a.order())}; }

/// Z/m -> Z/k, k dividing m.
inline RingHom reduction_hom(std::size_t m, std::size_t k)
{
    if (k == 0 || m % k != 0)
        throw Error(ErrorCode::NonUnitalHom, "no reduction from Z/" + std::to_string(m) + " to Z/" + std::to_string(k));
    RingHom phi{std::vector<Elem>(m)};
    for (Elem a = 0; a < m; ++a)
        phi.map[a] = static_cast<Elem>(a % k);
    return phi;
}

/// A1 x A2 -> A1.
inline RingHom first_projection(const FiniteCommRing& a1, const FiniteCommRing& a2)
{
    RingHom phi{std::vector<Elem>(a1.order() * a2.order())};
    for (Elem x = 0; x < phi.map.size(); ++x)
        phi.map[x] = static_cast<Elem>(x % a1.order());
    return phi;
}

/// psi after phi.
inline RingHom compose(const RingHom& psi, const RingHom& phi)
{
    RingHom out{phi.map};
    for (auto& e : out.map)
        e = psi(e);
    return out;
}

/// Every unital ring hom A -> B, ordered by the images of A's generators.
inline std::vector<RingHom> ring_homs(const FiniteCommRing& a, const FiniteCommRing& b)
{
    auto ga = validate_group(a.add);
    if (!ga)
        throw Error(ErrorCode::ShapeMismatch, "domain is not an abelian group");
    const auto gens = generators(*ga.value);
    const auto coords = coordinates(*ga.value, gens);
    std::vector<RingHom> out;
    std::vector<Elem> images(gens.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == gens.size()) {
            RingHom phi{std::vector<Elem>(a.order())};
            for (Elem x = 0; x < a.order(); ++x) {
                Elem acc = 0;
                for (std::size_t k = 0; k < gens.size(); ++k)
                    for (std::size_t c = 0; c < coords[x][k]; ++c)
                        acc = b.add(acc, images[k]);
                phi.map[x] = acc;
            }
            if (is_ring_hom(a, b, phi))
                out.push_back(std::move(phi));
            return;
        }
        for (Elem v = 0; v < b.order(); ++v) {
            images[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

/// A x B with (a, b)(a', b') = (a a', phi(a) b'), additive halo {0} x B
/// carrying B's product, and left identity (1, 0). Index (a, b) -> a + |A| b.
inline RawLcRng semidirect_null(const FiniteCommRing& a, const FiniteCommRing& b, const RingHom& phi)
{
    if (b.order() <= 1)
        throw Error(ErrorCode::ZeroB, "the halo ring B must be nonzero");
    if (auto c = is_ring_hom(a, b, phi); !c)
        throw Error(ErrorCode::NonUnitalHom, "phi fails " + c.clause + " at (" + join(c.witness) + ")");
    const std::size_t na = a.order(), nb = b.order(), n = na * nb;
    if (n > max_order)
        throw Error(ErrorCode::OrderTooLarge, "order " + std::to_string(n));
    auto idx = [&](Elem x, Elem y) { return static_cast<Elem>(x + na * y); };
    RawLcRng raw{Table(n), Table(n), Table(n, undefined), idx(a.one, 0)};
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            const Elem xa = x % na, xb = x / na, ya = y % na, yb = y / na;
            raw.add(x, y) = idx(a.add(xa, ya), b.add(xb, yb));
            raw.mul(x, y) = idx(a.mul(xa, ya), b.mul(phi(xa), yb));
            if (xa == 0 && ya == 0)
                raw.local_mul(x, y) = idx(0, b.mul(xb, yb));
        }
    }
    return raw;
}

/// Group on Z/d1 x ... x Z/dk, mixed radix with the first factor fastest.
inline FiniteAbelianGroup cyclic_product_group(const std::vector<std::size_t>& orders)
{
    FiniteCommRing acc = zmod(1);
    bool first = true;
    for (std::size_t d : orders) {
        acc = first ? zmod(d) : product_ring(acc, zmod(d));
        first = false;
    }
    return *validate_group(acc.add).value;
}

/// Structure-preserving bijection respecting the designated left identities.
/// Searches additive isomorphisms through the images of a generating set.
inline std::optional<std::vector<Elem>> find_isomorphism(const LcRng& a, const LcRng& b)
{
    const std::size_t n = a.order();
    if (b.order() != n || a.halo().size() != b.halo().size())
        return std::nullopt;
    const auto gens = generators(a.group());
    const auto coords = coordinates(a.group(), gens);
    std::vector<Elem> images(gens.size(), 0);
    std::optional<std::vector<Elem>> found;

    auto try_map = [&]() {
        std::vector<Elem> f(n);
        std::vector<bool> hit(n, false);
        for (Elem x = 0; x < n; ++x) {
            Elem acc = 0;
            for (std::size_t k = 0; k < gens.size(); ++k)
                acc = b.add(acc, b.group().multiple(static_cast<long long>(coords[x][k]), images[k]));
            if (hit[acc])
                return false;
            hit[acc] = true;
            f[x] = acc;
        }
        if (f[a.left_identity()] != b.left_identity())
            return false;
        for (Elem x = 0; x < n; ++x) {
            for (Elem y = 0; y < n; ++y) {
                if (f[a.add(x, y)] != b.add(f[x], f[y]) || f[a.mul(x, y)] != b.mul(f[x], f[y]))
                    return false;
                if (a.halo().contains(x) && a.halo().contains(y) && f[a.local(x, y)] != b.local(f[x], f[y]))
                    return false;
            }
        }
        found = std::move(f);
        return true;
    };

    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == gens.size())
            return try_map();
        const std::size_t ord = a.group().element_order(gens[i]);
        for (Elem v = 0; v < n; ++v) {
            if (b.group().element_order(v) != ord)
                continue;
            images[i] = v;
            if (rec(i + 1))
                return true;
        }
        return false;
    };
    rec(0);
    return found;
}

inline bool are_isomorphic(const LcRng& a, const LcRng& b) { return find_isomorphism(a, b).has_value(); }

struct EnumerateOptions {
    bool dedup = true;
    /// Upper bound on the number of product-table candidates examined.
    std::size_t max_candidates = 1'000'000;
};

struct Census {
    std::vector<LcRng> structures;
    std::size_t candidates = 0;
    bool truncated = false;
};

namespace detail {

// Calls visit(table) for every bilinear map on the subgroup spanned by gens,
// given by free choices of the generator products in `values`. Stops when
// visit returns false.
template <class Visit>
bool for_each_bilinear(const FiniteAbelianGroup& g, const Subset& carrier, const std::vector<Elem>& gens,
                       bool symmetric, Visit&& visit)
{
    const std::size_t n = g.order();
    const std::size_t r = gens.size();
    const auto coords = coordinates(g, gens);
    const auto xs = carrier.elements();
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = symmetric ? i : 0; j < r; ++j)
            slots.emplace_back(i, j);

    // values compatible with both generator orders
    std::vector<std::vector<Elem>> domain(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) {
        const auto oi = g.element_order(gens[slots[s].first]);
        const auto oj = g.element_order(gens[slots[s].second]);
        for (Elem v : xs)
            if (g.multiple(static_cast<long long>(oi), v) == 0 && g.multiple(static_cast<long long>(oj), v) == 0)
                domain[s].push_back(v);
    }

    std::vector<Elem> value(r * r, 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t s) -> bool {
        if (s == slots.size()) {
            Table t(n, undefined);
            for (Elem x : xs) {
                for (Elem y : xs) {
                    Elem acc = 0;
                    for (std::size_t i = 0; i < r; ++i)
                        for (std::size_t j = 0; j < r; ++j)
                            acc = g.add(acc, g.multiple(static_cast<long long>(coords[x][i] * coords[y][j]),
                                                        value[i * r + j]));
                    t(x, y) = acc;
                }
            }
            return visit(t);
        }
        const auto [i, j] = slots[s];
        for (Elem v : domain[s]) {
            value[i * r + j] = v;
            if (symmetric)
                value[j * r + i] = v;
            if (!rec(s + 1))
                return false;
        }
        return true;
    };
    return rec(0);
}

} // namespace detail

/// Census of left commutative rngs on the additive group G, |G| <= 16.
/// Products are enumerated as bilinear maps through a generating set;
/// each candidate is fully validated.
inline Census enumerate_lcrngs(const FiniteAbelianGroup& g, const EnumerateOptions& options = {})
{
    const std::size_t n = g.order();
    if (n > 16)
        throw Error(ErrorCode::OrderTooLarge, "census is limited to order 16, got " + std::to_string(n));
    Census census;
    if (options.max_candidates == 0) {
        census.truncated = true;
        return census;
    }
    const Subset all = Subset::full(n);
    const auto xs = all_elements(n);

    detail::for_each_bilinear(g, all, generators(g), false, [&](const Table& mul) {
        if (census.candidates >= options.max_candidates) {
            census.truncated = true;
            return false;
        }
        ++census.candidates;
        const bool ring_like = !detail::first_triple(xs, xs, xs, [&](Elem x, Elem y, Elem z) {
            const Elem xy = mul(x, y);
            return mul(xy, z) != mul(x, mul(y, z)) || mul(xy, z) != mul(mul(y, x), z);
        });
        if (!ring_like)
            return true;
        for (Elem e = 0; e < n; ++e) {
            bool left_unit = true;
            for (Elem x = 0; x < n && left_unit; ++x)
                left_unit = mul(e, x) == x;
            if (!left_unit)
                continue;
            Subset halo(n);
            for (Elem x = 0; x < n; ++x)
                if (mul(x, e) == 0)
                    halo.insert(x);
            if (halo.size() <= 1)
                continue;
            detail::for_each_bilinear(g, halo, generators(g, halo), true, [&](const Table& local) {
                auto v = validate_lcrng(RawLcRng{g.table(), mul, local, e});
                if (!v)
                    return true;
                if (options.dedup && std::any_of(census.structures.begin(), census.structures.end(),
                                                 [&](const LcRng& s) { return are_isomorphic(s, *v.value); }))
                    return true;
                census.structures.push_back(std::move(*v.value));
                return true;
            });
        }
        return true;
    });
    return census;
}

} // namespace lcr

#pragma once

#include <array>
#include <string_view>

#include "lcr/kernel.hpp"

namespace lcr {

/// Unvalidated tables of a candidate left commutative rng. The local product
/// table carries `undefined` outside halo x halo.
struct RawLcRng {
    Table add;
    Table mul;
    Table local_mul;
    Elem left_identity = 0;

    std::size_t order() const { return add.order(); }
    bool operator==(const RawLcRng&) const = default;
};

/// Axioms checked by validate_lcrng, in the order they are reported.
inline constexpr std::array<std::string_view, 16> lcrng_axioms{
    "mul-closure",
    "left-distributivity",
    "right-distributivity",
    "mul-associativity",
    "left-commutativity",
    "left-identity",
    "two-sided-identity-exists",
    "empty-halo",
    "local-mul-outside-halo",
    "local-mul-undefined",
    "local-mul-closure",
    "local-mul-commutativity",
    "local-mul-associativity",
    "local-mul-distributivity",
    "no-local-identity",
    "local-triassociativity",
};

/// A validated finite left commutative rng with its fixed left identity.
class LcRng {
public:
    std::size_t order() const { return group_.order(); }
    const FiniteAbelianGroup& group() const { return group_; }
    const Table& mul_table() const { return mul_; }
    const Table& local_table() const { return local_; }

    Elem add(Elem a, Elem b) const { return group_.add(a, b); }
    Elem neg(Elem a) const { return group_.neg(a); }
    Elem sub(Elem a, Elem b) const { return group_.sub(a, b); }
    Elem mul(Elem a, Elem b) const { return mul_(a, b); }
    /// The local product; only meaningful on halo x halo.
    Elem local(Elem a, Elem b) const { return local_(a, b); }

    Elem left_identity() const { return left_identity_; }
    Elem local_identity() const { return local_identity_; }

    /// Additive halo {x : x * 1l = 0}.
    const Subset& halo() const { return halo_; }
    /// R1l, the 0-part of the grading.
    const Subset& r0() const { return r0_; }
    const Subset& r1() const { return halo_; }

    /// The epsilon-components a1l and a - a1l.
    Elem comp0(Elem a) const { return mul(a, left_identity_); }
    Elem comp1(Elem a) const { return sub(a, comp0(a)); }

    /// k-fold product power x * ... * x, k >= 1.
    Elem mul_power(Elem x, std::size_t k) const
    {
        Elem acc = x;
        for (std::size_t i = 1; i < k; ++i)
            acc = mul(acc, x);
        return acc;
    }

    /// k-fold local power, k >= 1; x must lie in the halo.
    Elem local_power(Elem x, std::size_t k) const
    {
        Elem acc = x;
        for (std::size_t i = 1; i < k; ++i)
            acc = local(acc, x);
        return acc;
    }

    RawLcRng raw() const { return {group_.table(), mul_, local_, left_identity_}; }

    bool operator==(const LcRng& o) const { return raw() == o.raw(); }

private:
    friend Validation<LcRng> validate_lcrng(const RawLcRng& raw);

    FiniteAbelianGroup group_;
    Table mul_;
    Table local_;
    Elem left_identity_ = 0;
    Elem local_identity_ = 0;
    Subset halo_;
    Subset r0_;
};

/// Exhaustive check of every left commutative rng axiom. Each failing axiom
/// is reported once, with its first failing tuple in row-major order.
inline Validation<LcRng> validate_lcrng(const RawLcRng& raw)
{
    Validation<LcRng> out;
    auto group = validate_group(raw.add);
    if (!group) {
        out.violations = std::move(group.violations);
        return out;
    }
    const FiniteAbelianGroup& g = *group.value;
    const std::size_t n = g.order();
    if (raw.mul.order() != n || raw.local_mul.order() != n)
        throw Error(ErrorCode::ShapeMismatch, "product tables must have order " + std::to_string(n));

    detail::ViolationLog log;
    const auto xs = all_elements(n);
    const Table& mul = raw.mul;
    const Table& loc = raw.local_mul;
    const Elem e = raw.left_identity;

    if (e >= n) {
        log.add({"left-identity", {e}, "designated left identity out of range"});
        out.violations = std::move(log.items());
        return out;
    }
    log.record("mul-closure", detail::first_pair(xs, xs, [&](Elem a, Elem b) { return mul(a, b) >= n; }),
               "product entry is not an element");
    if (!log.empty()) {
        out.violations = std::move(log.items());
        return out;
    }

    log.record("left-distributivity", detail::first_triple(xs, xs, xs, [&](Elem x, Elem y, Elem z) {
                   return mul(x, g.add(y, z)) != g.add(mul(x, y), mul(x, z));
               }));
    log.record("right-distributivity", detail::first_triple(xs, xs, xs, [&](Elem x, Elem y, Elem z) {
                   return mul(g.add(y, z), x) != g.add(mul(y, x), mul(z, x));
               }));
    log.record("mul-associativity", detail::first_triple(xs, xs, xs, [&](Elem x, Elem y, Elem z) {
                   return mul(mul(x, y), z) != mul(x, mul(y, z));
               }));
    log.record("left-commutativity", detail::first_triple(xs, xs, xs, [&](Elem x, Elem y, Elem z) {
                   return mul(mul(x, y), z) != mul(mul(y, x), z);
               }));
    log.record("left-identity", detail::first_single(xs, [&](Elem x) { return mul(e, x) != x; }),
               "1l * x != x");
    log.record("two-sided-identity-exists", detail::first_single(xs, [&](Elem c) {
                   for (Elem x = 0; x < n; ++x)
                       if (mul(c, x) != x || mul(x, c) != x)
                           return false;
                   return true;
               }));

    Subset halo(n);
    for (Elem x = 0; x < n; ++x)
        if (mul(x, e) == 0)
            halo.insert(x);
    if (halo.size() == 1)
        log.add({"empty-halo", {}, "halo is {0}"});

    const auto hs = halo.elements();
    auto in_halo2 = [&](Elem a, Elem b) { return halo.contains(a) && halo.contains(b); };
    const std::size_t before_local = log.items().size();
    log.record("local-mul-outside-halo", detail::first_pair(xs, xs, [&](Elem a, Elem b) {
                   return !in_halo2(a, b) && loc(a, b) != undefined;
               }));
    log.record("local-mul-undefined",
               detail::first_pair(hs, hs, [&](Elem a, Elem b) { return loc(a, b) == undefined; }));
    log.record("local-mul-closure", detail::first_pair(hs, hs, [&](Elem a, Elem b) {
                   return loc(a, b) != undefined && !halo.contains(loc(a, b));
               }));
    const bool local_table_ok = log.items().size() == before_local;

    if (local_table_ok) {
        log.record("local-mul-commutativity",
                   detail::first_pair(hs, hs, [&](Elem a, Elem b) { return loc(a, b) != loc(b, a); }));
        log.record("local-mul-associativity", detail::first_triple(hs, hs, hs, [&](Elem a, Elem b, Elem c) {
                       return loc(loc(a, b), c) != loc(a, loc(b, c));
                   }));
        log.record("local-mul-distributivity", detail::first_triple(hs, hs, hs, [&](Elem a, Elem b, Elem c) {
                       return loc(a, g.add(b, c)) != g.add(loc(a, b), loc(a, c));
                   }));
    }

    Elem local_identity = undefined;
    if (local_table_ok) {
        for (Elem c : hs) {
            bool unit = true;
            for (Elem a : hs)
                unit = unit && loc(c, a) == a && loc(a, c) == a;
            if (unit) {
                local_identity = c;
                break;
            }
        }
        if (local_identity == undefined)
            log.add({"no-local-identity", {}, "halo ring has no identity"});

        log.record("local-triassociativity", detail::first_triple(xs, hs, hs, [&](Elem x, Elem a, Elem b) {
                       const Elem xa = mul(x, a);
                       if (!halo.contains(xa))
                           return true;
                       return loc(xa, b) != mul(x, loc(a, b));
                   }), "(x a) # b != x (a # b)");
    }

    if (!log.empty()) {
        out.violations = std::move(log.items());
        return out;
    }

    LcRng r;
    r.group_ = g;
    r.mul_ = raw.mul;
    r.local_ = raw.local_mul;
    r.left_identity_ = e;
    r.local_identity_ = local_identity;
    r.halo_ = halo;
    r.r0_ = Subset(n);
    for (Elem x = 0; x < n; ++x)
        r.r0_.insert(mul(x, e));
    out.value = std::move(r);
    return out;
}

/// Every e with e * x = x for all x; includes the designated left identity.
inline Subset left_identities(const LcRng& r)
{
    Subset out(r.order());
    for (Elem c = 0; c < r.order(); ++c) {
        bool ok = true;
        for (Elem x = 0; x < r.order() && ok; ++x)
            ok = r.mul(c, x) == x;
        if (ok)
            out.insert(c);
    }
    return out;
}

/// R = R0 (+) R1 with per-element components.
struct Decomposition {
    Subset r0;
    Subset r1;
    std::vector<Elem> comp0;
    std::vector<Elem> comp1;
};

inline Decomposition decompose(const LcRng& r)
{
    const std::size_t n = r.order();
    Decomposition d{r.r0(), r.r1(), std::vector<Elem>(n), std::vector<Elem>(n)};
    std::set<std::pair<Elem, Elem>> pairs;
    for (Elem a = 0; a < n; ++a) {
        d.comp0[a] = r.comp0(a);
        d.comp1[a] = r.comp1(a);
        if (!d.r0.contains(d.comp0[a]) || !d.r1.contains(d.comp1[a]) ||
            r.add(d.comp0[a], d.comp1[a]) != a)
            throw Error(ErrorCode::DecompositionNotDirect,
                        "element " + std::to_string(a) + " does not split");
        pairs.emplace(d.comp0[a], d.comp1[a]);
    }
    if ((d.r0 & d.r1).size() != 1 || d.r0.size() * d.r1.size() != n || pairs.size() != n)
        throw Error(ErrorCode::DecompositionNotDirect, "R0 and R1 do not form a direct sum");
    return d;
}

/// The commutative product xy + yx - (yx)1l.
inline Elem induced_product(const LcRng& r, Elem x, Elem y)
{
    const Elem yx = r.mul(y, x);
    return r.sub(r.add(r.mul(x, y), yx), r.mul(yx, r.left_identity()));
}

inline Table induced_product_table(const LcRng& r)
{
    Table t(r.order());
    for (Elem x = 0; x < r.order(); ++x)
        for (Elem y = 0; y < r.order(); ++y)
            t(x, y) = induced_product(r, x, y);
    return t;
}

} // namespace lcr

#pragma once

#include <array>
#include <functional>

#include "lcr/lcrng.hpp"

namespace lcr {

/// Unvalidated tables of a ring (R, +, bullet) with auxiliary products
/// rarrow and larrow.
struct RawHlRing {
    Table add;
    Table bullet;
    Table rarrow;
    Table larrow;
    Elem sigma = 0;

    std::size_t order() const { return add.order(); }
    bool operator==(const RawHlRing&) const = default;
};

inline constexpr std::array<std::string_view, 14> hlring_axioms{
    "tables-total",
    "bullet-left-distributivity",
    "bullet-right-distributivity",
    "bullet-associativity",
    "sigma-identity",
    "bullet-decomposition",
    "rarrow-bullet-larrow",
    "rarrow-absorbs-bullet",
    "larrow-absorbs-bullet",
    "rarrow-left-distributivity",
    "rarrow-right-distributivity",
    "larrow-left-distributivity",
    "larrow-right-distributivity",
    "arrow-associativity",
};

class HlRing {
public:
    std::size_t order() const { return group_.order(); }
    const FiniteAbelianGroup& group() const { return group_; }

    Elem add(Elem a, Elem b) const { return group_.add(a, b); }
    Elem sub(Elem a, Elem b) const { return group_.sub(a, b); }
    Elem bullet(Elem a, Elem b) const { return raw_.bullet(a, b); }
    Elem rarrow(Elem a, Elem b) const { return raw_.rarrow(a, b); }
    Elem larrow(Elem a, Elem b) const { return raw_.larrow(a, b); }
    Elem sigma() const { return raw_.sigma; }

    /// {x : sigma rarrow x = 0}
    const Subset& halo() const { return halo_; }

    const RawHlRing& raw() const { return raw_; }

    bool operator==(const HlRing& o) const { return raw_ == o.raw_; }

private:
    friend Validation<HlRing> validate_hlring(const RawHlRing& raw);

    FiniteAbelianGroup group_;
    RawHlRing raw_;
    Subset halo_;
};

inline Validation<HlRing> validate_hlring(const RawHlRing& raw)
{
    Validation<HlRing> out;
    auto group = validate_group(raw.add);
    if (!group) {
        out.violations = std::move(group.violations);
        return out;
    }
    const FiniteAbelianGroup& g = *group.value;
    const std::size_t n = g.order();
    if (raw.bullet.order() != n || raw.rarrow.order() != n || raw.larrow.order() != n)
        throw Error(ErrorCode::ShapeMismatch, "product tables must have order " + std::to_string(n));

    detail::ViolationLog log;
    if (!raw.bullet.total() || !raw.rarrow.total() || !raw.larrow.total() || raw.sigma >= n) {
        log.add({"tables-total", {}, "every product entry and sigma must be an element"});
        out.violations = std::move(log.items());
        return out;
    }
    const auto xs = all_elements(n);
    const Table& b = raw.bullet;
    const Table& ra = raw.rarrow;
    const Table& la = raw.larrow;
    const Elem s = raw.sigma;

    log.record("bullet-left-distributivity", detail::first_triple(xs, xs, xs, [&](Elem x, Elem y, Elem z) {
                   return b(x, g.add(y, z)) != g.add(b(x, y), b(x, z));
               }));
    log.record("bullet-right-distributivity", detail::first_triple(xs, xs, xs, [&](Elem x, Elem y, Elem z) {
                   return b(g.add(y, z), x) != g.add(b(y, x), b(z, x));
               }));
    log.record("bullet-associativity", detail::first_triple(xs, xs, xs, [&](Elem x, Elem y, Elem z) {
                   return b(b(x, y), z) != b(x, b(y, z));
               }));
    log.record("sigma-identity",
               detail::first_single(xs, [&](Elem x) { return b(s, x) != x || b(x, s) != x; }));
    log.record("bullet-decomposition", detail::first_pair(xs, xs, [&](Elem x, Elem y) {
                   return b(x, y) != g.sub(g.add(ra(x, y), la(x, y)), ra(la(x, s), y));
               }), "x bullet y != x -> y + x <- y - (x <- sigma) -> y");
    log.record("rarrow-bullet-larrow", detail::first_triple(xs, xs, xs, [&](Elem x, Elem y, Elem z) {
                   return b(ra(x, y), z) != b(x, la(y, z));
               }));
    log.record("rarrow-absorbs-bullet", detail::first_triple(xs, xs, xs, [&](Elem x, Elem y, Elem z) {
                   return ra(x, b(y, z)) != ra(ra(x, y), z);
               }));
    log.record("larrow-absorbs-bullet", detail::first_triple(xs, xs, xs, [&](Elem x, Elem y, Elem z) {
                   return la(b(x, y), z) != la(la(x, y), z);
               }));
    for (const auto& [name, t] : {std::pair{"rarrow", &ra}, std::pair{"larrow", &la}}) {
        const Table& m = *t;
        log.record(std::string(name) + "-left-distributivity",
                   detail::first_triple(xs, xs, xs, [&](Elem x, Elem y, Elem z) {
                       return m(x, g.add(y, z)) != g.add(m(x, y), m(x, z));
                   }));
        log.record(std::string(name) + "-right-distributivity",
                   detail::first_triple(xs, xs, xs, [&](Elem x, Elem y, Elem z) {
                       return m(g.add(y, z), x) != g.add(m(y, x), m(z, x));
                   }));
    }
    // Follows from the axioms above; a failure means the input cannot satisfy them.
    log.record("arrow-associativity", detail::first_triple(xs, xs, xs, [&](Elem x, Elem y, Elem z) {
                   return ra(ra(x, y), z) != ra(x, ra(y, z)) || la(la(x, y), z) != la(x, la(y, z));
               }), "rarrow or larrow is not associative");

    if (!log.empty()) {
        out.violations = std::move(log.items());
        return out;
    }
    HlRing h;
    h.group_ = g;
    h.raw_ = raw;
    h.halo_ = Subset(n);
    for (Elem x = 0; x < n; ++x)
        if (ra(s, x) == 0)
            h.halo_.insert(x);
    out.value = std::move(h);
    return out;
}

inline Subset hl_halo(const HlRing& h) { return h.halo(); }

/// x -> y - y <- x lies in the halo for every pair. The raw form reads the
/// halo off the rarrow table, so it also works on tables that fail validation.
inline Check is_hl_commutative(const RawHlRing& raw)
{
    auto group = validate_group(raw.add);
    if (!group)
        throw Error(ErrorCode::ShapeMismatch, "addition table is not an abelian group");
    const FiniteAbelianGroup& g = *group.value;
    const auto xs = all_elements(raw.order());
    auto in_halo = [&](Elem x) { return raw.rarrow(raw.sigma, x) == 0; };
    if (auto w = detail::first_pair(xs, xs, [&](Elem x, Elem y) {
            return !in_halo(g.sub(raw.rarrow(x, y), raw.larrow(y, x)));
        }))
        return Check::fail("commutator-outside-halo", *w);
    return Check::pass();
}

inline Check is_hl_commutative(const HlRing& h) { return is_hl_commutative(h.raw()); }

/// The bridge: sigma = 1l, x -> y = y x, x <- y = x y, bullet = induced product.
inline RawHlRing bridge_tables(const LcRng& r)
{
    const std::size_t n = r.order();
    RawHlRing raw{r.group().table(), induced_product_table(r), Table(n), Table(n), r.left_identity()};
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            raw.rarrow(x, y) = r.mul(y, x);
            raw.larrow(x, y) = r.mul(x, y);
        }
    }
    return raw;
}

inline HlRing from_lcrng(const LcRng& r)
{
    auto v = validate_hlring(bridge_tables(r));
    if (!v) {
        std::string detail;
        for (const auto& viol : v.violations)
            detail += "\n  " + viol.to_string();
        throw Error(ErrorCode::BridgeAxiomFailure, "bridged tables fail:" + detail);
    }
    return std::move(*v.value);
}

/// An identity lhs(x, y, z) == rhs(x, y, z) over all triples.
struct TripleIdentity {
    std::string name;
    std::function<Elem(const RawHlRing&, Elem, Elem, Elem)> lhs;
    std::function<Elem(const RawHlRing&, Elem, Elem, Elem)> rhs;
};

struct IdentityStatus {
    std::string name;
    bool holds = true;
    Witness witness;
};

/// The five dialgebra identities with x <- y as the left-pointing product and
/// x -> y as the right-pointing one.
inline std::vector<TripleIdentity> dialgebra_identities()
{
    using H = const RawHlRing&;
    return {
        {"(x<-y)<-z = x<-(y<-z)", [](H h, Elem x, Elem y, Elem z) { return h.larrow(h.larrow(x, y), z); },
         [](H h, Elem x, Elem y, Elem z) { return h.larrow(x, h.larrow(y, z)); }},
        {"(x<-y)<-z = x<-(y->z)", [](H h, Elem x, Elem y, Elem z) { return h.larrow(h.larrow(x, y), z); },
         [](H h, Elem x, Elem y, Elem z) { return h.larrow(x, h.rarrow(y, z)); }},
        {"(x->y)<-z = x->(y<-z)", [](H h, Elem x, Elem y, Elem z) { return h.larrow(h.rarrow(x, y), z); },
         [](H h, Elem x, Elem y, Elem z) { return h.rarrow(x, h.larrow(y, z)); }},
        {"(x<-y)->z = x->(y->z)", [](H h, Elem x, Elem y, Elem z) { return h.rarrow(h.larrow(x, y), z); },
         [](H h, Elem x, Elem y, Elem z) { return h.rarrow(x, h.rarrow(y, z)); }},
        {"(x->y)->z = x->(y->z)", [](H h, Elem x, Elem y, Elem z) { return h.rarrow(h.rarrow(x, y), z); },
         [](H h, Elem x, Elem y, Elem z) { return h.rarrow(x, h.rarrow(y, z)); }},
    };
}

/// Evaluates each identity over all triples. Works on unvalidated tables so a
/// failing row can be inspected on inputs that do not pass validation.
inline std::vector<IdentityStatus> diassociativity_report(const RawHlRing& h,
                                                          const std::vector<TripleIdentity>& identities)
{
    const auto xs = all_elements(h.order());
    std::vector<IdentityStatus> out;
    for (const auto& id : identities) {
        auto w = detail::first_triple(xs, xs, xs, [&](Elem x, Elem y, Elem z) {
            return id.lhs(h, x, y, z) != id.rhs(h, x, y, z);
        });
        out.push_back({id.name, !w.has_value(), w.value_or(Witness{})});
    }
    return out;
}

inline std::vector<IdentityStatus> diassociativity_report(const RawHlRing& h)
{
    return diassociativity_report(h, dialgebra_identities());
}

inline std::vector<IdentityStatus> diassociativity_report(const HlRing& h) { return diassociativity_report(h.raw()); }

} // namespace lcr

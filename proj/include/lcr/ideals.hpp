#pragma once

#include "lcr/lcrng.hpp"

namespace lcr {

enum class IdealKind { ideal, subrng };
enum class Primality { unknown, yes, no };

/// Whether a subrng's halo part must contain the local identity.
enum class SubrngMode { strict, lenient };

/// A graded subgroup I = I0 (+) I1 with Ie = I n Re.
struct GradedIdeal {
    Subset carrier;
    Subset i0;
    Subset i1;
    IdealKind kind = IdealKind::ideal;
    Primality is_prime = Primality::unknown;

    bool operator==(const GradedIdeal&) const = default;
};

struct Spectrum {
    std::vector<GradedIdeal> primes;
};

inline Check check_subgroup(const LcRng& r, const Subset& s)
{
    if (!s.contains(0))
        return Check::fail("contains-zero", {0});
    for (Elem x : s.elements())
        for (Elem y : s.elements())
            if (!s.contains(r.sub(x, y)))
                return Check::fail("subgroup", {x, y});
    return Check::pass();
}

/// IR in I, RI in I, and I n halo an ideal of the halo ring.
inline Check is_ideal(const LcRng& r, const Subset& s)
{
    if (auto c = check_subgroup(r, s); !c)
        return c;
    const auto is = s.elements();
    const auto rs = all_elements(r.order());
    if (auto w = detail::first_pair(is, rs, [&](Elem i, Elem x) { return !s.contains(r.mul(i, x)); }))
        return Check::fail("IR", *w);
    if (auto w = detail::first_pair(rs, is, [&](Elem x, Elem i) { return !s.contains(r.mul(x, i)); }))
        return Check::fail("RI", *w);
    const auto ih = (s & r.halo()).elements();
    const auto hs = r.halo().elements();
    if (auto w = detail::first_pair(ih, hs, [&](Elem a, Elem b) { return !s.contains(r.local(a, b)); }))
        return Check::fail("halo-ideal", *w);
    return Check::pass();
}

/// 1l in S, SS in S, S n halo a subring of the halo ring; strict mode also
/// requires the local identity in S.
inline Check is_subrng(const LcRng& r, const Subset& s, SubrngMode mode = SubrngMode::strict)
{
    if (auto c = check_subgroup(r, s); !c)
        return c;
    if (!s.contains(r.left_identity()))
        return Check::fail("left-identity", {r.left_identity()});
    const auto ss = s.elements();
    if (auto w = detail::first_pair(ss, ss, [&](Elem a, Elem b) { return !s.contains(r.mul(a, b)); }))
        return Check::fail("SS", *w);
    const auto sh = (s & r.halo()).elements();
    if (auto w = detail::first_pair(sh, sh, [&](Elem a, Elem b) { return !s.contains(r.local(a, b)); }))
        return Check::fail("halo-subring", *w);
    if (mode == SubrngMode::strict && !s.contains(r.local_identity()))
        return Check::fail("local-identity", {r.local_identity()});
    return Check::pass();
}

/// (I n R0, I n R1), verifying that I respects the grading.
inline std::pair<Subset, Subset> ideal_components(const LcRng& r, const Subset& carrier)
{
    for (Elem a : carrier.elements())
        if (!carrier.contains(r.comp0(a)) || !carrier.contains(r.comp1(a)))
            throw Error(ErrorCode::GradingViolation,
                        "element " + std::to_string(a) + " of {" + carrier.to_string() +
                            "} has a component outside the subset");
    return {carrier & r.r0(), carrier & r.r1()};
}

inline GradedIdeal make_graded(const LcRng& r, const Subset& carrier, IdealKind kind = IdealKind::ideal)
{
    auto [i0, i1] = ideal_components(r, carrier);
    return {carrier, i0, i1, kind, Primality::unknown};
}

/// Componentwise primality:
///   x0 y_e in I  =>  x0 in I0 or y_e in I_e   (e = 0, 1)
///   x1 # y1 in I1 =>  x1 in I1 or y1 in I1
/// Witnesses are (e, x, y), with e = 2 standing for the local-product clause.
inline Check is_huliu_prime(const LcRng& r, const Subset& p)
{
    if (p == Subset::full(r.order()))
        return Check::fail("proper", {});
    const auto r0 = r.r0().elements();
    for (Elem eps : {Elem{0}, Elem{1}}) {
        const auto ys = (eps == 0 ? r.r0() : r.r1()).elements();
        if (auto w = detail::first_pair(r0, ys, [&](Elem x, Elem y) {
                return p.contains(r.mul(x, y)) && !p.contains(x) && !p.contains(y);
            }))
            return Check::fail(eps == 0 ? "graded-product-0" : "graded-product-1", {eps, (*w)[0], (*w)[1]});
    }
    const auto r1 = r.r1().elements();
    if (auto w = detail::first_pair(r1, r1, [&](Elem x, Elem y) {
            return p.contains(r.local(x, y)) && !p.contains(x) && !p.contains(y);
        }))
        return Check::fail("local-product", {2, (*w)[0], (*w)[1]});
    return Check::pass();
}

inline Check is_huliu_prime(const LcRng& r, const GradedIdeal& p) { return is_huliu_prime(r, p.carrier); }

/// The same primality condition phrased on the complement of I:
///   x0, y0 outside I       =>  x0 y0 outside I
///   x0 outside I, y1 outside I =>  x0 y1 outside I
///   x1, y1 outside I       =>  x1 # y1 outside I
inline Check complement_closed(const LcRng& r, const Subset& q)
{
    if (q == Subset::full(r.order()))
        return Check::fail("proper", {});
    const auto out0 = (r.r0() & q.complement()).elements();
    const auto out1 = (r.r1() & q.complement()).elements();
    if (auto w = detail::first_pair(out0, out0, [&](Elem x, Elem y) { return q.contains(r.mul(x, y)); }))
        return Check::fail("complement-00", *w);
    if (auto w = detail::first_pair(out0, out1, [&](Elem x, Elem y) { return q.contains(r.mul(x, y)); }))
        return Check::fail("complement-01", *w);
    if (auto w = detail::first_pair(out1, out1, [&](Elem x, Elem y) { return q.contains(r.local(x, y)); }))
        return Check::fail("complement-11", *w);
    return Check::pass();
}

inline std::vector<GradedIdeal> enumerate_ideals(const LcRng& r)
{
    std::vector<GradedIdeal> out;
    for (const auto& s : enumerate_subgroups(r.group())) {
        if (!is_ideal(r, s))
            continue;
        GradedIdeal gi = make_graded(r, s);
        gi.is_prime = is_huliu_prime(r, s) ? Primality::yes : Primality::no;
        out.push_back(std::move(gi));
    }
    return out;
}

inline std::vector<GradedIdeal> enumerate_subrngs(const LcRng& r, SubrngMode mode = SubrngMode::strict)
{
    std::vector<GradedIdeal> out;
    for (const auto& s : enumerate_subgroups(r.group()))
        if (is_subrng(r, s, mode))
            out.push_back(make_graded(r, s, IdealKind::subrng));
    return out;
}

inline Spectrum spectrum(const LcRng& r)
{
    Spectrum sp;
    for (auto& gi : enumerate_ideals(r))
        if (gi.is_prime == Primality::yes)
            sp.primes.push_back(std::move(gi));
    return sp;
}

} // namespace lcr

#pragma once

// Catalog structures and brute-force oracles shared by the test suites. The
// oracles work from raw tables and never call the library's predicates.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lcr/lcr.hpp"

namespace lcr::testing {

inline LcRng must(const RawLcRng& raw)
{
    auto v = validate_lcrng(raw);
    if (!v)
        throw std::runtime_error("catalog structure failed validation: " + v.violations.front().to_string());
    return *v.value;
}

/// Z2 x| Z2 with the identity hom: 0=(0,0) 1=(1,0) 2=(0,1) 3=(1,1).
inline LcRng r4() { return must(semidirect_null(zmod(2), zmod(2), identity_hom(zmod(2)))); }

/// Z4 x| Z2 with reduction; index a + 4b.
inline LcRng r8() { return must(semidirect_null(zmod(4), zmod(2), reduction_hom(4, 2))); }

/// (Z2 x Z2) x| Z2 with the first projection; index a + 4b, a = a1 + 2 a2.
inline LcRng u8()
{
    return must(semidirect_null(product_ring(zmod(2), zmod(2)), zmod(2), first_projection(zmod(2), zmod(2))));
}

/// Z6 x| Z3 with reduction.
inline LcRng r18() { return must(semidirect_null(zmod(6), zmod(3), reduction_hom(6, 3))); }

/// (Z2 x Z2) x| (Z2 x Z2) with the identity hom.
inline LcRng u16()
{
    const auto a = product_ring(zmod(2), zmod(2));
    return must(semidirect_null(a, a, identity_hom(a)));
}

/// Z2 x| (Z2 x Z2) through the diagonal 1 -> (1,1). The map is not onto, so
/// the local-product clause of primality is not implied by the others here.
inline LcRng d8() { return must(semidirect_null(zmod(2), product_ring(zmod(2), zmod(2)), RingHom{{0, 3}})); }

/// diagonal(Z2 x Z2) (+) Z2 inside u8.
inline Subset u8_diagonal() { return Subset::of(8, {0, 3, 4, 7}); }

struct Named {
    std::string name;
    LcRng ring;
};

inline std::vector<Named> catalog() { return {{"r4", r4()}, {"r8", r8()}, {"u8", u8()}, {"r18", r18()}}; }

/// The catalog plus structures that exercise clauses the catalog cannot.
inline std::vector<Named> extended_catalog()
{
    auto all = catalog();
    all.push_back({"u16", u16()});
    all.push_back({"d8", d8()});
    return all;
}

inline Subset set(std::size_t n, std::initializer_list<Elem> xs) { return Subset::of(n, xs); }

inline std::vector<Subset> carriers(const std::vector<GradedIdeal>& xs)
{
    std::vector<Subset> out;
    for (const auto& x : xs)
        out.push_back(x.carrier);
    return out;
}

// ---- oracles -------------------------------------------------------------

/// All subgroups by scanning every subset (n <= 12).
inline std::vector<Subset> oracle_subgroups(const Table& add)
{
    const std::size_t n = add.order();
    std::vector<Subset> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        if (!(bits & 1))
            continue;
        bool closed = true;
        for (Elem a = 0; a < n && closed; ++a)
            for (Elem b = 0; b < n && closed; ++b)
                if (((bits >> a) & 1) && ((bits >> b) & 1))
                    closed = (bits >> add(a, b)) & 1;
        if (closed)
            out.push_back(Subset::from_bits(n, bits));
    }
    return out;
}

struct RawView {
    const RawLcRng& raw;

    std::size_t n() const { return raw.order(); }
    Elem add(Elem a, Elem b) const { return raw.add(a, b); }
    Elem mul(Elem a, Elem b) const { return raw.mul(a, b); }
    Elem loc(Elem a, Elem b) const { return raw.local_mul(a, b); }
    Elem e() const { return raw.left_identity; }
    bool in_r0(Elem x) const { return mul(x, e()) == x; }
    bool in_r1(Elem x) const { return mul(x, e()) == 0; }
    Elem neg(Elem x) const
    {
        for (Elem y = 0; y < n(); ++y)
            if (add(x, y) == 0)
                return y;
        return undefined;
    }
};

/// Ideal by definition: subgroup, absorbs products on both sides, halo part
/// absorbs local products by the halo.
inline bool oracle_is_ideal(const RawLcRng& raw, std::uint64_t bits)
{
    RawView v{raw};
    auto in = [&](Elem x) { return (bits >> x) & 1; };
    if (!in(0))
        return false;
    for (Elem a = 0; a < v.n(); ++a) {
        for (Elem b = 0; b < v.n(); ++b) {
            if (in(a) && in(b) && !in(v.add(a, v.neg(b))))
                return false;
            if (in(a) && (!in(v.mul(a, b)) || !in(v.mul(b, a))))
                return false;
            if (in(a) && v.in_r1(a) && v.in_r1(b) && !in(v.loc(a, b)))
                return false;
        }
    }
    return true;
}

/// Prime by definition over all tuples of elements, with grade membership
/// decided by x1l = x and x1l = 0.
inline bool oracle_is_prime(const RawLcRng& raw, std::uint64_t bits)
{
    RawView v{raw};
    auto in = [&](Elem x) { return (bits >> x) & 1; };
    if (bits == Subset::full(v.n()).bits())
        return false;
    for (Elem x = 0; x < v.n(); ++x) {
        for (Elem y = 0; y < v.n(); ++y) {
            if (v.in_r0(x) && (v.in_r0(y) || v.in_r1(y)) && in(v.mul(x, y)) && !in(x) && !in(y))
                return false;
            if (v.in_r1(x) && v.in_r1(y) && in(v.loc(x, y)) && !in(x) && !in(y))
                return false;
        }
    }
    return true;
}

inline std::vector<Subset> oracle_spectrum(const RawLcRng& raw)
{
    std::vector<Subset> out;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << raw.order()); bits += 2)
        if (oracle_is_ideal(raw, bits) && oracle_is_prime(raw, bits))
            out.push_back(Subset::from_bits(raw.order(), bits));
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

/// Least degree k <= max_k with a monic relation over S, by trying every
/// coefficient vector in S^k.
inline std::optional<std::size_t> oracle_min_degree(const ComponentRing& ring, const Subset& s, Elem u,
                                                    std::size_t max_k)
{
    const auto cs = s.elements();
    for (std::size_t k = 1; k <= max_k; ++k) {
        std::vector<std::size_t> pick(k, 0);
        while (true) {
            // u^k + c1 u^(k-1) + ... + ck
            Elem acc = 0;
            for (std::size_t i = 0; i <= k; ++i) {
                Elem pw = ring.identity;
                for (std::size_t j = 0; j < k - i; ++j)
                    pw = ring.mul(pw, u);
                Elem term = i == 0 ? pw : (i == k ? cs[pick[i - 1]] : ring.mul(cs[pick[i - 1]], pw));
                acc = ring.group.add(acc, term);
            }
            if (acc == 0)
                return k;
            std::size_t d = 0;
            while (d < k && ++pick[d] == cs.size())
                pick[d++] = 0;
            if (d == k)
                break;
        }
    }
    return std::nullopt;
}

/// Isomorphism by trying every permutation fixing 0 (n <= 8).
inline bool oracle_isomorphic(const LcRng& a, const LcRng& b)
{
    const std::size_t n = a.order();
    if (b.order() != n)
        return false;
    std::vector<Elem> perm = all_elements(n);
    do {
        if (perm[a.left_identity()] != b.left_identity())
            continue;
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x) {
            for (Elem y = 0; y < n && ok; ++y) {
                ok = perm[a.add(x, y)] == b.add(perm[x], perm[y]) && perm[a.mul(x, y)] == b.mul(perm[x], perm[y]);
                const bool ha = a.halo().contains(x) && a.halo().contains(y);
                const bool hb = b.halo().contains(perm[x]) && b.halo().contains(perm[y]);
                ok = ok && ha == hb && (!ha || perm[a.local(x, y)] == b.local(perm[x], perm[y]));
            }
        }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return false;
}

/// Re-evaluates a reported violation at its witness directly from the raw
/// tables. True when the witness really exhibits the failure.
inline bool witness_confirms(const RawLcRng& raw, const Violation& v)
{
    RawView r{raw};
    const auto& w = v.witness;
    const std::size_t n = r.n();
    auto in_halo = [&](Elem x) { return r.mul(x, r.e()) == 0; };
    auto halo = [&] {
        std::vector<Elem> hs;
        for (Elem x = 0; x < n; ++x)
            if (in_halo(x))
                hs.push_back(x);
        return hs;
    };
    const std::string& a = v.axiom;
    if (a == "add-closure")
        return raw.add(w[0], w[1]) >= n;
    if (a == "zero-neutral")
        return r.add(0, w[0]) != w[0] || r.add(w[0], 0) != w[0];
    if (a == "add-commutativity")
        return r.add(w[0], w[1]) != r.add(w[1], w[0]);
    if (a == "add-associativity")
        return r.add(r.add(w[0], w[1]), w[2]) != r.add(w[0], r.add(w[1], w[2]));
    if (a == "add-inverse") {
        for (Elem y = 0; y < n; ++y)
            if (r.add(w[0], y) == 0 && r.add(y, w[0]) == 0)
                return false;
        return true;
    }
    if (a == "mul-closure")
        return r.mul(w[0], w[1]) >= n;
    if (a == "left-distributivity")
        return r.mul(w[0], r.add(w[1], w[2])) != r.add(r.mul(w[0], w[1]), r.mul(w[0], w[2]));
    if (a == "right-distributivity")
        return r.mul(r.add(w[1], w[2]), w[0]) != r.add(r.mul(w[1], w[0]), r.mul(w[2], w[0]));
    if (a == "mul-associativity")
        return r.mul(r.mul(w[0], w[1]), w[2]) != r.mul(w[0], r.mul(w[1], w[2]));
    if (a == "left-commutativity")
        return r.mul(r.mul(w[0], w[1]), w[2]) != r.mul(r.mul(w[1], w[0]), w[2]);
    if (a == "left-identity")
        return r.mul(r.e(), w[0]) != w[0];
    if (a == "two-sided-identity-exists") {
        for (Elem x = 0; x < n; ++x)
            if (r.mul(w[0], x) != x || r.mul(x, w[0]) != x)
                return false;
        return true;
    }
    if (a == "empty-halo")
        return halo().size() == 1;
    if (a == "local-mul-outside-halo")
        return !(in_halo(w[0]) && in_halo(w[1])) && r.loc(w[0], w[1]) != undefined;
    if (a == "local-mul-undefined")
        return in_halo(w[0]) && in_halo(w[1]) && r.loc(w[0], w[1]) == undefined;
    if (a == "local-mul-closure")
        return in_halo(w[0]) && in_halo(w[1]) && !in_halo(r.loc(w[0], w[1]));
    if (a == "local-mul-commutativity")
        return r.loc(w[0], w[1]) != r.loc(w[1], w[0]);
    if (a == "local-mul-associativity")
        return r.loc(r.loc(w[0], w[1]), w[2]) != r.loc(w[0], r.loc(w[1], w[2]));
    if (a == "local-mul-distributivity")
        return r.loc(w[0], r.add(w[1], w[2])) != r.add(r.loc(w[0], w[1]), r.loc(w[0], w[2]));
    if (a == "no-local-identity") {
        const auto hs = halo();
        for (Elem c : hs) {
            bool unit = true;
            for (Elem x : hs)
                unit = unit && r.loc(c, x) == x && r.loc(x, c) == x;
            if (unit)
                return false;
        }
        return true;
    }
    if (a == "local-triassociativity") {
        const Elem xa = r.mul(w[0], w[1]);
        return !in_halo(xa) || r.loc(xa, w[2]) != r.mul(w[0], r.loc(w[1], w[2]));
    }
    return false;
}

/// Single-entry mutations of a valid structure: product entries, local
/// product entries (on and off the halo) and addition entries away from 0.
inline std::vector<RawLcRng> mutations(const LcRng& r, std::size_t count, std::uint32_t seed)
{
    std::mt19937 rng(seed);
    const std::size_t n = r.order();
    const auto hs = r.halo().elements();
    std::vector<RawLcRng> out;
    while (out.size() < count) {
        RawLcRng m = r.raw();
        const auto kind = out.size() % 4;
        auto pick = [&](std::size_t k) { return static_cast<Elem>(std::uniform_int_distribution<std::size_t>(0, k - 1)(rng)); };
        if (kind == 0 || kind == 1) {
            const Elem i = pick(n), j = pick(n);
            const Elem v = static_cast<Elem>((m.mul(i, j) + 1 + pick(n - 1)) % n);
            m.mul(i, j) = v;
        } else if (kind == 2) {
            const Elem i = hs[pick(hs.size())], j = hs[pick(hs.size())];
            const Elem cur = m.local_mul(i, j);
            Elem v = hs[pick(hs.size())];
            if (v == cur)
                v = undefined;
            m.local_mul(i, j) = v;
            if (out.size() % 8 == 6) {
                // define an entry off the halo instead
                m = r.raw();
                Elem x = pick(n);
                while (r.halo().contains(x))
                    x = pick(n);
                m.local_mul(x, hs[pick(hs.size())]) = 0;
            }
        } else {
            const Elem i = 1 + pick(n - 1), j = 1 + pick(n - 1);
            m.add(i, j) = static_cast<Elem>((m.add(i, j) + 1 + pick(n - 1)) % n);
        }
        out.push_back(std::move(m));
    }
    return out;
}

/// Random null-action structures: A = Z/m or a product, B = a quotient.
inline RawLcRng random_semidirect(std::mt19937& rng)
{
    static const std::vector<std::pair<std::size_t, std::size_t>> cyclic{
        {2, 2}, {3, 3}, {4, 2}, {4, 4}, {6, 2}, {6, 3}, {8, 2}, {8, 4}, {9, 3}, {5, 5}};
    const auto pick = std::uniform_int_distribution<std::size_t>(0, cyclic.size() + 2)(rng);
    if (pick < cyclic.size()) {
        const auto [m, k] = cyclic[pick];
        return semidirect_null(zmod(m), zmod(k), reduction_hom(m, k));
    }
    if (pick == cyclic.size())
        return semidirect_null(product_ring(zmod(2), zmod(3)), zmod(3), RingHom{{0, 0, 1, 1, 2, 2}});
    if (pick == cyclic.size() + 1)
        return semidirect_null(zmod(2), product_ring(zmod(2), zmod(2)), RingHom{{0, 3}});
    const auto a = product_ring(zmod(2), zmod(2));
    return semidirect_null(a, a, identity_hom(a));
}

} // namespace lcr::testing

#pragma once

#include "lcr/integrality.hpp"

namespace lcr {

/// A subrng R of U, carried both as a subset of U and as a standalone
/// structure on the indices of R (listed in ascending order).
struct SubrngPair {
    LcRng ambient;
    Subset sub;
    LcRng restricted;
    std::vector<Elem> embedding; // restricted index -> ambient index

    Subset lift(const Subset& s) const
    {
        Subset out(ambient.order());
        s.for_each([&](Elem x) { out.insert(embedding[x]); });
        return out;
    }

    Subset lower(const Subset& s) const
    {
        Subset out(restricted.order());
        for (Elem i = 0; i < embedding.size(); ++i)
            if (s.contains(embedding[i]))
                out.insert(i);
        return out;
    }
};

/// Restriction of U's tables to S, relabelled 0..|S|-1.
inline Validation<LcRng> restrict_to(const LcRng& u, const Subset& s)
{
    const auto elems = s.elements();
    std::vector<Elem> index(u.order(), undefined);
    for (Elem i = 0; i < elems.size(); ++i)
        index[elems[i]] = i;
    const std::size_t m = elems.size();
    RawLcRng raw{Table(m), Table(m), Table(m, undefined), index[u.left_identity()]};
    auto relabel = [&](Elem x) { return x == undefined ? undefined : index[x]; };
    for (Elem i = 0; i < m; ++i) {
        for (Elem j = 0; j < m; ++j) {
            raw.add(i, j) = relabel(u.add(elems[i], elems[j]));
            raw.mul(i, j) = relabel(u.mul(elems[i], elems[j]));
            raw.local_mul(i, j) = relabel(u.local(elems[i], elems[j]));
        }
    }
    return validate_lcrng(raw);
}

/// Builds the pair after checking that S is a subrng and that U is graded
/// integral over it.
inline SubrngPair embed_check(const LcRng& u, const Subset& s, SubrngMode mode = SubrngMode::strict)
{
    if (s.universe() != u.order())
        throw Error(ErrorCode::ShapeMismatch, "subset universe does not match the structure order");
    if (auto c = is_subrng(u, s, mode); !c)
        throw Error(ErrorCode::NotASubrng, "{" + s.to_string() + "} fails " + c.clause + " at (" +
                                               join(c.witness) + ")");

    const auto [s0, s1] = subrng_components(u, s);
    const ComponentRing u0 = component_ring(u, 0);
    const ComponentRing u1 = component_ring(u, 1);
    for (Elem x = 0; x < u.order(); ++x) {
        if (!find_monic_relation(u0, s0, u.comp0(x), u.order()))
            throw Error(ErrorCode::NotGradedIntegral, "component " + std::to_string(u.comp0(x)) + " of " +
                                                          std::to_string(x) + " has no monic relation over {" +
                                                          s0.to_string() + "}");
        if (!find_monic_relation(u1, s1, u.comp1(x), u.order()))
            throw Error(ErrorCode::NotGradedIntegral, "component " + std::to_string(u.comp1(x)) + " of " +
                                                          std::to_string(x) + " has no monic relation over {" +
                                                          s1.to_string() + "}");
    }

    auto restricted = restrict_to(u, s);
    if (!restricted)
        throw Error(ErrorCode::NotASubrng, "{" + s.to_string() + "} is not a left commutative rng: " +
                                               restricted.violations.front().to_string());
    return {u, s, std::move(*restricted.value), s.elements()};
}

/// Prime ideals of the subrng, as subsets of the ambient carrier.
inline std::vector<GradedIdeal> sub_spectrum(const SubrngPair& pair)
{
    std::vector<GradedIdeal> out;
    for (const auto& p : spectrum(pair.restricted).primes) {
        GradedIdeal lifted{pair.lift(p.carrier), pair.lift(p.i0), pair.lift(p.i1), IdealKind::ideal, Primality::yes};
        out.push_back(std::move(lifted));
    }
    return out;
}

namespace detail {

inline void require_prime_of_sub(const SubrngPair& pair, const Subset& p)
{
    if (!p.subset_of(pair.sub))
        throw Error(ErrorCode::PNotPrime, "{" + p.to_string() + "} is not contained in the subrng");
    const Subset low = pair.lower(p);
    if (!is_ideal(pair.restricted, low))
        throw Error(ErrorCode::PNotPrime, "{" + p.to_string() + "} is not an ideal of the subrng");
    if (auto c = is_huliu_prime(pair.restricted, low); !c)
        throw Error(ErrorCode::PNotPrime, "{" + p.to_string() + "} fails " + c.clause);
}

} // namespace detail

/// T = { J ideal of U : J n R in p }.
inline std::vector<GradedIdeal> t_set(const SubrngPair& pair, const Subset& p)
{
    detail::require_prime_of_sub(pair, p);
    std::vector<GradedIdeal> out;
    for (auto& j : enumerate_ideals(pair.ambient))
        if ((j.carrier & pair.sub).subset_of(p))
            out.push_back(std::move(j));
    return out;
}

/// Inclusion-maximal members of T.
inline std::vector<GradedIdeal> maximal_in_t(const SubrngPair& pair, const Subset& p)
{
    auto t = t_set(pair, p);
    std::vector<GradedIdeal> out;
    for (const auto& j : t) {
        const bool dominated = std::any_of(t.begin(), t.end(), [&](const GradedIdeal& k) {
            return k.carrier != j.carrier && j.carrier.subset_of(k.carrier);
        });
        if (!dominated)
            out.push_back(j);
    }
    return out;
}

/// All q in spec(U) with q n R = p, canonically ordered.
inline std::vector<GradedIdeal> lying_over_witnesses(const SubrngPair& pair, const Subset& p)
{
    std::vector<GradedIdeal> out;
    for (auto& q : spectrum(pair.ambient).primes)
        if ((q.carrier & pair.sub) == p)
            out.push_back(std::move(q));
    return out;
}

namespace detail {

inline std::string table_dump(const Table& t)
{
    std::ostringstream os;
    for (const auto& row : t.rows()) {
        os << "    ";
        for (Elem e : row)
            os << (e == undefined ? std::string("-") : std::to_string(e)) << ' ';
        os << '\n';
    }
    return os.str();
}

inline std::string pair_dump(const SubrngPair& pair, const Subset& p)
{
    std::ostringstream os;
    os << "subrng {" << pair.sub.to_string() << "}, p = {" << p.to_string() << "}\n";
    os << "  add:\n" << table_dump(pair.ambient.group().table());
    os << "  mul:\n" << table_dump(pair.ambient.mul_table());
    os << "  local_mul:\n" << table_dump(pair.ambient.local_table());
    os << "  left identity " << pair.ambient.left_identity() << '\n';
    os << "  spectrum of U:";
    for (const auto& q : spectrum(pair.ambient).primes)
        os << " {" << q.carrier.to_string() << '}';
    os << '\n';
    return os.str();
}

} // namespace detail

/// Some q in spec(U) with q n R = p: the canonically least witness. Every
/// maximal element of T that is prime and lies over p must be among the
/// witnesses; a missing witness raises NoWitness with a full dump.
inline GradedIdeal lying_over(const SubrngPair& pair, const Subset& p)
{
    const auto maximal = maximal_in_t(pair, p);
    auto witnesses = lying_over_witnesses(pair, p);
    for (const auto& q : maximal) {
        const bool qualifies = (q.carrier & pair.sub) == p && q.is_prime == Primality::yes;
        const bool listed = std::any_of(witnesses.begin(), witnesses.end(),
                                        [&](const GradedIdeal& w) { return w.carrier == q.carrier; });
        if (qualifies && !listed)
            throw std::logic_error("maximal element {" + q.carrier.to_string() +
                                   "} lies over p but is missing from the spectrum scan");
    }
    if (witnesses.empty())
        throw Error(ErrorCode::NoWitness, "no prime of U lies over p\n" + detail::pair_dump(pair, p));
    return witnesses.front();
}

struct MaximalCheck {
    GradedIdeal q;
    bool lies_over = false;
    bool prime = false;
    bool complement_closed = false;

    bool ok() const { return lies_over && prime && complement_closed; }
};

struct LyingOverRow {
    GradedIdeal p;
    std::vector<GradedIdeal> witnesses;
    std::vector<MaximalCheck> maximal;

    bool witnessed() const { return !witnesses.empty(); }
    bool maximal_ok() const
    {
        return std::all_of(maximal.begin(), maximal.end(), [](const MaximalCheck& m) { return m.ok(); });
    }
};

struct LyingOverReport {
    std::vector<LyingOverRow> rows;
    /// Every prime of R has a prime of U lying over it.
    bool pass = true;
    /// Every maximal element of every T-set lies over p and is prime.
    bool maximal_ok = true;
};

inline LyingOverReport verify_lying_over_all(const SubrngPair& pair)
{
    LyingOverReport report;
    for (auto& p : sub_spectrum(pair)) {
        LyingOverRow row{p, lying_over_witnesses(pair, p.carrier), {}};
        for (auto& q : maximal_in_t(pair, p.carrier)) {
            MaximalCheck m{q, (q.carrier & pair.sub) == p.carrier,
                           static_cast<bool>(is_huliu_prime(pair.ambient, q.carrier)),
                           static_cast<bool>(complement_closed(pair.ambient, q.carrier))};
            row.maximal.push_back(std::move(m));
        }
        report.pass = report.pass && row.witnessed();
        report.maximal_ok = report.maximal_ok && row.maximal_ok();
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace lcr

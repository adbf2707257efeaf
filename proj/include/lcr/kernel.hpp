#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "lcr/error.hpp"

namespace lcr {

/// Elements of a finite carrier are indices 0..n-1; the additive zero is
/// always index 0.
using Elem = std::uint32_t;

/// Marks an undefined entry of a partial table.
inline constexpr Elem undefined = std::numeric_limits<Elem>::max();

/// Subsets are 64-bit masks, so every carrier is bounded by this order.
inline constexpr std::size_t max_order = 64;

using Witness = std::vector<Elem>;

inline std::string join(std::span<const Elem> xs, char sep = ',')
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

/// One failed axiom with the first failing tuple in row-major order.
struct Violation {
    std::string axiom;
    Witness witness;
    std::string detail;

    std::string to_string() const
    {
        std::string out = axiom + " fails at (" + join(witness) + ")";
        if (!detail.empty())
            out += ": " + detail;
        return out;
    }

    bool operator==(const Violation&) const = default;
};

/// Outcome of a validator: a value when every axiom holds, violations otherwise.
template <class T>
struct Validation {
    std::optional<T> value;
    std::vector<Violation> violations;

    explicit operator bool() const { return value.has_value(); }

    bool has_violation(std::string_view axiom) const
    {
        return std::any_of(violations.begin(), violations.end(),
                           [&](const Violation& v) { return v.axiom == axiom; });
    }

    const Violation* find(std::string_view axiom) const
    {
        for (const auto& v : violations)
            if (v.axiom == axiom)
                return &v;
        return nullptr;
    }
};

/// Result of a yes/no predicate. On failure, names the violated clause and
/// the witness tuple.
struct Check {
    bool holds = true;
    std::string clause;
    Witness witness;

    explicit operator bool() const { return holds; }

    static Check pass() { return {}; }
    static Check fail(std::string clause, Witness witness)
    {
        return {false, std::move(clause), std::move(witness)};
    }
};

class Table {
public:
    Table() = default;

    explicit Table(std::size_t order, Elem fill = 0) : order_(order), data_(order * order, fill) {}

    static Table from_rows(const std::vector<std::vector<Elem>>& rows)
    {
        Table t(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size())
                throw Error(ErrorCode::NonSquareTable, "row " + std::to_string(i) + " has " +
                                                           std::to_string(rows[i].size()) +
                                                           " entries, expected " +
                                                           std::to_string(rows.size()));
            std::copy(rows[i].begin(), rows[i].end(), t.data_.begin() + i * t.order_);
        }
        return t;
    }

    std::size_t order() const { return order_; }

    Elem operator()(Elem i, Elem j) const { return data_[i * order_ + j]; }
    Elem& operator()(Elem i, Elem j) { return data_[i * order_ + j]; }

    bool defined(Elem i, Elem j) const { return (*this)(i, j) != undefined; }

    /// True when every entry is a valid element index.
    bool total() const
    {
        return std::all_of(data_.begin(), data_.end(), [&](Elem e) { return e < order_; });
    }

    std::vector<std::vector<Elem>> rows() const
    {
        std::vector<std::vector<Elem>> out(order_);
        for (std::size_t i = 0; i < order_; ++i)
            out[i].assign(data_.begin() + i * order_, data_.begin() + (i + 1) * order_);
        return out;
    }

    bool operator==(const Table&) const = default;

private:
    std::size_t order_ = 0;
    std::vector<Elem> data_;
};

/// Membership flags over a carrier 0..n-1 with n <= 64.
class Subset {
public:
    Subset() = default;

    explicit Subset(std::size_t universe) : universe_(universe)
    {
        if (universe > max_order)
            throw Error(ErrorCode::OrderTooLarge, "subset universe " + std::to_string(universe));
    }

    static Subset of(std::size_t universe, std::span<const Elem> elems)
    {
        Subset s(universe);
        for (Elem e : elems)
            s.insert(e);
        return s;
    }

    static Subset of(std::size_t universe, std::initializer_list<Elem> elems)
    {
        return of(universe, std::span<const Elem>(elems.begin(), elems.size()));
    }

    static Subset full(std::size_t universe)
    {
        Subset s(universe);
        s.bits_ = universe == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << universe) - 1);
        return s;
    }

    static Subset from_bits(std::size_t universe, std::uint64_t bits)
    {
        Subset s(universe);
        s.bits_ = bits & full(universe).bits_;
        return s;
    }

    std::size_t universe() const { return universe_; }
    std::uint64_t bits() const { return bits_; }
    std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool empty() const { return bits_ == 0; }

    bool contains(Elem e) const { return e < universe_ && ((bits_ >> e) & 1u); }

    void insert(Elem e)
    {
        if (e >= universe_)
            throw Error(ErrorCode::ShapeMismatch, "element " + std::to_string(e) +
                                                      " outside carrier of order " +
                                                      std::to_string(universe_));
        bits_ |= std::uint64_t{1} << e;
    }

    void erase(Elem e)
    {
        if (e < universe_)
            bits_ &= ~(std::uint64_t{1} << e);
    }

    bool subset_of(const Subset& other) const { return (bits_ & ~other.bits_) == 0; }

    Subset operator&(const Subset& o) const { return from_bits(universe_, bits_ & o.bits_); }
    Subset operator|(const Subset& o) const { return from_bits(universe_, bits_ | o.bits_); }
    Subset complement() const { return from_bits(universe_, ~bits_); }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::uint64_t b = bits_; b; b &= b - 1)
            f(static_cast<Elem>(std::countr_zero(b)));
    }

    std::vector<Elem> elements() const
    {
        std::vector<Elem> out;
        out.reserve(size());
        for_each([&](Elem e) { out.push_back(e); });
        return out;
    }

    /// Comma-separated ascending indices, the format used on the command line.
    std::string to_string() const
    {
        auto xs = elements();
        return join(xs);
    }

    bool operator==(const Subset&) const = default;

private:
    std::uint64_t bits_ = 0;
    std::size_t universe_ = 0;
};

/// Canonical order for reports: by cardinality, then lexicographic on the
/// ascending member lists.
inline bool canonical_less(const Subset& a, const Subset& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    auto xs = a.elements();
    auto ys = b.elements();
    return std::lexicographical_compare(xs.begin(), xs.end(), ys.begin(), ys.end());
}

inline std::vector<Elem> all_elements(std::size_t n)
{
    std::vector<Elem> xs(n);
    std::iota(xs.begin(), xs.end(), Elem{0});
    return xs;
}

namespace detail {

// First failing tuple in row-major order over the given element lists.
template <class Fails>
std::optional<Witness> first_single(std::span<const Elem> xs, Fails&& fails)
{
    for (Elem x : xs)
        if (fails(x))
            return Witness{x};
    return std::nullopt;
}

template <class Fails>
std::optional<Witness> first_pair(std::span<const Elem> xs, std::span<const Elem> ys,
                                  Fails&& fails)
{
    for (Elem x : xs)
        for (Elem y : ys)
            if (fails(x, y))
                return Witness{x, y};
    return std::nullopt;
}

template <class Fails>
std::optional<Witness> first_triple(std::span<const Elem> xs, std::span<const Elem> ys,
                                    std::span<const Elem> zs, Fails&& fails)
{
    for (Elem x : xs)
        for (Elem y : ys)
            for (Elem z : zs)
                if (fails(x, y, z))
                    return Witness{x, y, z};
    return std::nullopt;
}

class ViolationLog {
public:
    void record(std::string axiom, const std::optional<Witness>& w, std::string detail = {})
    {
        if (w)
            items_.push_back({std::move(axiom), *w, std::move(detail)});
    }

    void add(Violation v) { items_.push_back(std::move(v)); }

    bool empty() const { return items_.empty(); }
    std::vector<Violation>& items() { return items_; }

private:
    std::vector<Violation> items_;
};

} // namespace detail

/// A validated finite abelian group with zero pinned at index 0.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;

    std::size_t order() const { return add_.order(); }
    const Table& table() const { return add_; }

    Elem add(Elem a, Elem b) const { return add_(a, b); }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add_(a, neg_[b]); }

    /// k-fold sum a + ... + a (k may be negative).
    Elem multiple(long long k, Elem a) const
    {
        if (k < 0)
            return multiple(-k, neg(a));
        Elem acc = 0;
        for (long long i = 0; i < k; ++i)
            acc = add(acc, a);
        return acc;
    }

    /// Additive order of an element.
    std::size_t element_order(Elem a) const
    {
        std::size_t k = 1;
        for (Elem acc = a; acc != 0; acc = add(acc, a))
            ++k;
        return k;
    }

    bool operator==(const FiniteAbelianGroup& o) const { return add_ == o.add_; }

private:
    friend Validation<FiniteAbelianGroup> validate_group(const Table& add);

    Table add_;
    std::vector<Elem> neg_;
};

/// Checks the abelian-group axioms exhaustively. Zero must sit at index 0.
inline Validation<FiniteAbelianGroup> validate_group(const Table& add)
{
    const std::size_t n = add.order();
    if (n == 0)
        throw Error(ErrorCode::NonSquareTable, "empty addition table");
    if (n > max_order)
        throw Error(ErrorCode::OrderTooLarge, "order " + std::to_string(n) + " exceeds " +
                                                  std::to_string(max_order));

    Validation<FiniteAbelianGroup> out;
    detail::ViolationLog log;
    const auto xs = all_elements(n);

    log.record("add-closure", detail::first_pair(xs, xs, [&](Elem a, Elem b) { return add(a, b) >= n; }));
    if (!log.empty()) {
        out.violations = std::move(log.items());
        return out;
    }

    bool zero_neutral = true;
    for (Elem i = 0; i < n; ++i)
        zero_neutral = zero_neutral && add(0, i) == i && add(i, 0) == i;
    if (!zero_neutral) {
        for (Elem e = 1; e < n; ++e) {
            bool neutral = true;
            for (Elem i = 0; i < n && neutral; ++i)
                neutral = add(e, i) == i && add(i, e) == i;
            if (neutral)
                throw Error(ErrorCode::ZeroNotAtIndexZero,
                            "neutral element is index " + std::to_string(e));
        }
        log.record("zero-neutral", detail::first_single(xs, [&](Elem i) {
                       return add(0, i) != i || add(i, 0) != i;
                   }));
    }

    log.record("add-commutativity",
               detail::first_pair(xs, xs, [&](Elem a, Elem b) { return add(a, b) != add(b, a); }),
               "not commutative");
    log.record("add-associativity", detail::first_triple(xs, xs, xs, [&](Elem a, Elem b, Elem c) {
                   return add(add(a, b), c) != add(a, add(b, c));
               }));

    std::vector<Elem> neg(n, undefined);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n && neg[a] == undefined; ++b)
            if (add(a, b) == 0 && add(b, a) == 0)
                neg[a] = b;
    log.record("add-inverse", detail::first_single(xs, [&](Elem a) { return neg[a] == undefined; }),
               "missing additive inverse");

    if (!log.empty()) {
        out.violations = std::move(log.items());
        return out;
    }
    FiniteAbelianGroup g;
    g.add_ = add;
    g.neg_ = std::move(neg);
    out.value = std::move(g);
    return out;
}

/// Smallest subgroup containing the seed.
inline Subset subgroup_closure(const FiniteAbelianGroup& g, const Subset& seed)
{
    Subset closed = seed;
    closed.insert(0);
    std::vector<Elem> frontier = closed.elements();
    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (Elem x : frontier) {
            for (Elem y : closed.elements()) {
                const Elem s = g.add(x, y);
                if (!closed.contains(s)) {
                    closed.insert(s);
                    next.push_back(s);
                }
            }
        }
        frontier = std::move(next);
    }
    return closed;
}

inline bool is_subgroup(const FiniteAbelianGroup& g, const Subset& s)
{
    if (!s.contains(0))
        return false;
    bool ok = true;
    s.for_each([&](Elem x) {
        s.for_each([&](Elem y) { ok = ok && s.contains(g.sub(x, y)); });
    });
    return ok;
}

/// Greedy generating set of the subgroup `within`, scanned in index order.
inline std::vector<Elem> generators(const FiniteAbelianGroup& g, const Subset& within)
{
    std::vector<Elem> gens;
    Subset span(g.order());
    span.insert(0);
    within.for_each([&](Elem x) {
        if (!span.contains(x)) {
            gens.push_back(x);
            span.insert(x);
            span = subgroup_closure(g, span);
        }
    });
    return gens;
}

inline std::vector<Elem> generators(const FiniteAbelianGroup& g)
{
    return generators(g, Subset::full(g.order()));
}

/// One coefficient vector per element of span(gens), found breadth-first.
/// Entry x is empty when x is not in the span.
inline std::vector<std::vector<std::size_t>> coordinates(const FiniteAbelianGroup& g,
                                                         std::span<const Elem> gens)
{
    std::vector<std::vector<std::size_t>> coords(g.order());
    std::vector<bool> seen(g.order(), false);
    coords[0].assign(gens.size(), 0);
    seen[0] = true;
    std::vector<Elem> frontier{0};
    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (Elem x : frontier) {
            for (std::size_t i = 0; i < gens.size(); ++i) {
                const Elem y = g.add(x, gens[i]);
                if (!seen[y]) {
                    seen[y] = true;
                    coords[y] = coords[x];
                    ++coords[y][i];
                    next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    return coords;
}

/// All subgroups, each once, in canonical order. Built by closing generator
/// sets one element at a time.
inline std::vector<Subset> enumerate_subgroups(const FiniteAbelianGroup& g)
{
    const std::size_t n = g.order();
    std::set<std::uint64_t> seen;
    std::vector<Subset> found;
    std::vector<Subset> frontier{subgroup_closure(g, Subset(n))};
    seen.insert(frontier.front().bits());
    while (!frontier.empty()) {
        std::vector<Subset> next;
        for (const auto& h : frontier) {
            for (Elem x = 0; x < n; ++x) {
                if (h.contains(x))
                    continue;
                Subset seed = h;
                seed.insert(x);
                Subset k = subgroup_closure(g, seed);
                if (seen.insert(k.bits()).second)
                    next.push_back(k);
            }
            found.push_back(h);
        }
        frontier = std::move(next);
    }
    std::sort(found.begin(), found.end(), canonical_less);
    return found;
}

} // namespace lcr

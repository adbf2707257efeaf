#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcr/constructions.hpp"
#include "lcr/format.hpp"
#include "lcr/hlring.hpp"
#include "lcr/ideals.hpp"
#include "lcr/integrality.hpp"
#include "lcr/lyingover.hpp"

namespace lcr::cli {

/// Exit codes: pass, algebraic failure or violation, input error.
enum Exit : int { pass = 0, violation = 1, input_error = 2 };

namespace detail {

// Collects report lines; any violation line forces a failing verdict.
class Report {
public:
    Report(std::ostream& out, bool csv) : out_(out), csv_(csv) {}

    bool csv() const { return csv_; }

    void echo(const std::vector<std::string>& args)
    {
        if (csv_)
            return;
        out_ << "command:";
        for (const auto& a : args)
            out_ << ' ' << a;
        out_ << '\n';
    }

    void line(const std::string& text)
    {
        if (!csv_)
            out_ << text << '\n';
    }

    void violation(const std::string& text)
    {
        failed_ = true;
        if (!csv_)
            out_ << "violation: " << text << '\n';
    }

    void row(const std::string& text)
    {
        if (csv_)
            out_ << text << '\n';
    }

    void fail() { failed_ = true; }

    int finish()
    {
        if (!csv_)
            out_ << "verdict: " << (failed_ ? "FAIL" : "PASS") << '\n';
        return failed_ ? violation_exit : pass;
    }

private:
    static constexpr int violation_exit = Exit::violation;
    std::ostream& out_;
    bool csv_;
    bool failed_ = false;
};

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Usage, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw Error(ErrorCode::Usage, "cannot write " + path);
    f << text;
}

inline Subset parse_subset(const std::string& text, std::size_t order)
{
    Subset s(order);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || v >= order)
            throw Error(ErrorCode::Usage, "bad subset entry \"" + item + "\" for order " + std::to_string(order));
        s.insert(static_cast<Elem>(v));
    }
    return s;
}

inline std::string braces(const Subset& s) { return "{" + s.to_string() + "}"; }

inline std::string components(const GradedIdeal& gi) { return gi.i0.to_string() + "|" + gi.i1.to_string(); }

inline std::string primality(Primality p)
{
    return p == Primality::yes ? "yes" : p == Primality::no ? "no" : "unknown";
}

struct RingSpec {
    FiniteCommRing ring;
    std::vector<std::size_t> factors;
    std::string text;
};

// "zmod:4" or "zmod:2*zmod:2"
inline RingSpec parse_ring_spec(const std::string& text)
{
    RingSpec spec{zmod(1), {}, text};
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, '*')) {
        if (item.rfind("zmod:", 0) != 0)
            throw Error(ErrorCode::Usage, "ring spec \"" + item + "\" must look like zmod:<n>");
        std::size_t n = 0;
        try {
            n = std::stoul(item.substr(5));
        } catch (const std::exception&) {
            throw Error(ErrorCode::Usage, "ring spec \"" + item + "\" has no modulus");
        }
        if (n == 0)
            throw Error(ErrorCode::Usage, "modulus must be positive");
        spec.ring = spec.factors.empty() ? zmod(n) : product_ring(spec.ring, zmod(n));
        spec.factors.push_back(n);
    }
    if (spec.factors.empty())
        throw Error(ErrorCode::Usage, "empty ring spec");
    return spec;
}

inline RingHom resolve_hom(const RingSpec& a, const RingSpec& b, const std::string& mode)
{
    if (mode == "identity") {
        if (a.factors != b.factors)
            throw Error(ErrorCode::Usage, "identity hom needs equal rings");
        return identity_hom(a.ring);
    }
    if (mode == "search") {
        auto homs = ring_homs(a.ring, b.ring);
        if (homs.empty())
            throw Error(ErrorCode::NonUnitalHom, "no unital hom " + a.text + " -> " + b.text);
        return homs.front();
    }
    if (mode == "reduction" || (mode == "auto" && a.factors.size() == 1 && b.factors.size() == 1)) {
        if (a.factors.size() != 1 || b.factors.size() != 1)
            throw Error(ErrorCode::Usage, "reduction needs zmod:m -> zmod:k");
        return reduction_hom(a.factors[0], b.factors[0]);
    }
    if (mode == "proj1" || mode == "auto") {
        if (a.factors == b.factors && mode == "auto")
            return identity_hom(a.ring);
        if (a.factors.size() < 2)
            throw Error(ErrorCode::Usage, "proj1 needs a product ring as A");
        const FiniteCommRing first = zmod(a.factors[0]);
        FiniteCommRing rest = zmod(a.factors[1]);
        for (std::size_t i = 2; i < a.factors.size(); ++i)
            rest = product_ring(rest, zmod(a.factors[i]));
        const RingHom proj = first_projection(first, rest);
        RingSpec first_spec{first, {a.factors[0]}, "zmod:" + std::to_string(a.factors[0])};
        return compose(resolve_hom(first_spec, b, "auto"), proj);
    }
    throw Error(ErrorCode::Usage, "unknown hom \"" + mode + "\"");
}

struct Options {
    std::string file;
    std::string format = "text";
    std::string subset;
    bool has_subset = false;
    bool lenient = false;
    std::size_t max_degree = 0;
    std::optional<Elem> element;
    std::string family = "semidirect";
    std::string a_spec;
    std::string b_spec;
    std::string hom = "auto";
    std::string name;
    std::string output;
    std::string group;
    bool no_dedup = false;
    std::size_t max_candidates = 1'000'000;
    std::string emit_dir;
    bool require_commutative = false;
};

inline StructureFile load(const Options& o) { return parse_structure(read_file(o.file)); }

// Parses and validates an lcrng file; on violations prints them and returns nullopt.
inline std::optional<LcRng> load_lcrng(const Options& o, Report& rep, StructureFile* file_out = nullptr)
{
    StructureFile f = load(o);
    if (f.kind() != "lcrng")
        throw Error(ErrorCode::Usage, "expected kind \"lcrng\", got \"" + f.kind() + "\"");
    auto v = validate_lcrng(std::get<RawLcRng>(f.payload));
    if (file_out)
        *file_out = f;
    if (!v) {
        for (const auto& viol : v.violations)
            rep.violation(viol.to_string());
        return std::nullopt;
    }
    return std::move(*v.value);
}

template <class Names>
void print_axioms(Report& rep, const Names& names, const std::vector<Violation>& violations)
{
    for (auto name : names) {
        const auto it = std::find_if(violations.begin(), violations.end(),
                                     [&](const Violation& v) { return v.axiom == name; });
        rep.line("check " + std::string(name) + ": " + (it == violations.end() ? "ok" : "FAILED"));
        rep.row(std::string(name) + ";" + (it == violations.end() ? "ok" : "failed") + ";" +
                (it == violations.end() ? "" : join(it->witness)));
    }
    for (const auto& v : violations)
        rep.violation(v.to_string());
}

inline int cmd_verify(const Options& o, Report& rep)
{
    StructureFile f = load(o);
    rep.line("structure: " + f.name + " (" + f.kind() + ", order " + std::to_string(f.order()) + ")");
    if (f.kind() == "lcrng") {
        auto v = validate_lcrng(std::get<RawLcRng>(f.payload));
        print_axioms(rep, lcrng_axioms, v.violations);
        if (v) {
            rep.line("halo: " + braces(v.value->halo()));
            rep.line("local identity: " + std::to_string(v.value->local_identity()));
            rep.line("left identities: " + braces(left_identities(*v.value)));
        }
    } else if (f.kind() == "hlring") {
        auto v = validate_hlring(std::get<RawHlRing>(f.payload));
        print_axioms(rep, hlring_axioms, v.violations);
        if (v)
            rep.line("halo: " + braces(v.value->halo()));
    } else {
        auto v = validate_comm_ring(std::get<FiniteCommRing>(f.payload));
        const std::array<std::string_view, 4> names{"mul-commutativity", "mul-associativity", "distributivity",
                                                    "identity"};
        print_axioms(rep, names, v.violations);
    }
    return rep.finish();
}

inline int cmd_decompose(const Options& o, Report& rep)
{
    auto r = load_lcrng(o, rep);
    if (!r)
        return rep.finish();
    const Decomposition d = decompose(*r);
    rep.line("R0: " + braces(d.r0));
    rep.line("R1: " + braces(d.r1));
    rep.row("element;comp0;comp1");
    for (Elem a = 0; a < r->order(); ++a) {
        rep.line(std::to_string(a) + " = " + std::to_string(d.comp0[a]) + " + " + std::to_string(d.comp1[a]));
        rep.row(std::to_string(a) + ";" + std::to_string(d.comp0[a]) + ";" + std::to_string(d.comp1[a]));
    }
    return rep.finish();
}

inline void ideal_rows(Report& rep, const std::vector<GradedIdeal>& ideals)
{
    rep.row("subset;is_prime;components");
    for (const auto& gi : ideals) {
        rep.line(braces(gi.carrier) + "  I0 = " + braces(gi.i0) + "  I1 = " + braces(gi.i1) +
                 "  prime: " + primality(gi.is_prime));
        rep.row(gi.carrier.to_string() + ";" + primality(gi.is_prime) + ";" + components(gi));
    }
}

inline int cmd_ideals(const Options& o, Report& rep)
{
    auto r = load_lcrng(o, rep);
    if (!r)
        return rep.finish();
    if (!o.has_subset) {
        const auto ideals = enumerate_ideals(*r);
        rep.line("ideals: " + std::to_string(ideals.size()));
        ideal_rows(rep, ideals);
        return rep.finish();
    }
    const Subset s = parse_subset(o.subset, r->order());
    const Check ideal = is_ideal(*r, s);
    const Check sub = is_subrng(*r, s, o.lenient ? SubrngMode::lenient : SubrngMode::strict);
    rep.line("subset: " + braces(s));
    rep.line(std::string("subrng (") + (o.lenient ? "lenient" : "strict") + "): " +
             (sub ? "yes" : "no, " + sub.clause + " at (" + join(sub.witness) + ")"));
    if (!ideal) {
        rep.violation("not an ideal: " + ideal.clause + " at (" + join(ideal.witness) + ")");
    } else {
        GradedIdeal gi = make_graded(*r, s);
        gi.is_prime = is_huliu_prime(*r, s) ? Primality::yes : Primality::no;
        ideal_rows(rep, {gi});
    }
    return rep.finish();
}

inline int cmd_spectrum(const Options& o, Report& rep)
{
    auto r = load_lcrng(o, rep);
    if (!r)
        return rep.finish();
    const auto sp = spectrum(*r);
    rep.line("primes: " + std::to_string(sp.primes.size()));
    ideal_rows(rep, sp.primes);
    return rep.finish();
}

inline std::string witness_text(const std::optional<IntegralWitness>& w)
{
    return w ? std::to_string(w->degree) + ";" + join(w->coefficients) : std::string("none;");
}

inline int cmd_integral(const Options& o, Report& rep)
{
    auto u = load_lcrng(o, rep);
    if (!u)
        return rep.finish();
    if (!o.has_subset)
        throw Error(ErrorCode::Usage, "integral needs --subset");
    const Subset s = parse_subset(o.subset, u->order());
    const auto mode = o.lenient ? SubrngMode::lenient : SubrngMode::strict;
    if (auto c = is_subrng(*u, s, mode); !c)
        throw Error(ErrorCode::NotASubrng, braces(s) + " fails " + c.clause + " at (" + join(c.witness) + ")");
    const std::size_t max_degree = o.max_degree ? o.max_degree : u->order();
    std::vector<Elem> targets;
    if (o.element) {
        if (*o.element >= u->order())
            throw Error(ErrorCode::Usage, "element out of range");
        targets.push_back(*o.element);
    } else {
        targets = all_elements(u->order());
    }
    rep.row("element;degree0;coefficients0;degree1;coefficients1");
    for (Elem x : targets) {
        const auto w = graded_witnesses(*u, s, x, max_degree);
        rep.row(std::to_string(x) + ";" + witness_text(w.w0) + ";" + witness_text(w.w1));
        auto describe = [](const std::optional<IntegralWitness>& wi) {
            return wi ? "degree " + std::to_string(wi->degree) + " coefficients (" + join(wi->coefficients) + ")"
                      : std::string("none");
        };
        if (w.integral())
            rep.line(std::to_string(x) + ": comp0 " + describe(w.w0) + "; comp1 " + describe(w.w1));
        else
            rep.violation("element " + std::to_string(x) + " is not graded integral within degree " +
                          std::to_string(max_degree) + " (comp0 " + describe(w.w0) + ", comp1 " + describe(w.w1) + ")");
    }
    return rep.finish();
}

inline std::string ideal_list(const std::vector<GradedIdeal>& xs, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? sep : "") + xs[i].carrier.to_string();
    return out;
}

inline int cmd_lying_over(const Options& o, Report& rep)
{
    auto u = load_lcrng(o, rep);
    if (!u)
        return rep.finish();
    if (!o.has_subset)
        throw Error(ErrorCode::Usage, "lying-over needs --subset");
    const Subset s = parse_subset(o.subset, u->order());
    const SubrngPair pair = embed_check(*u, s, o.lenient ? SubrngMode::lenient : SubrngMode::strict);
    const LyingOverReport report = verify_lying_over_all(pair);
    rep.line("subrng: " + braces(s));
    rep.row("p;lying_over;maximal;maximal_ok");
    for (const auto& row : report.rows) {
        std::vector<GradedIdeal> maxes;
        for (const auto& m : row.maximal)
            maxes.push_back(m.q);
        rep.row(row.p.carrier.to_string() + ";" + ideal_list(row.witnesses, "|") + ";" + ideal_list(maxes, "|") +
                ";" + (row.maximal_ok() ? "yes" : "no"));
        rep.line("p = " + braces(row.p.carrier) + ": lying over by " +
                 (row.witnesses.empty() ? std::string("none") : "{" + ideal_list(row.witnesses, "}, {") + "}"));
        for (const auto& m : row.maximal)
            rep.line("  maximal in T: " + braces(m.q.carrier) + " lies over p: " + (m.lies_over ? "yes" : "no") +
                     ", prime: " + (m.prime ? "yes" : "no") + ", complement closed: " +
                     (m.complement_closed ? "yes" : "no"));
        if (!row.witnessed())
            rep.violation("no prime of U lies over " + braces(row.p.carrier));
        for (const auto& m : row.maximal)
            if (!m.ok())
                rep.violation("maximal element " + braces(m.q.carrier) + " of T for " + braces(row.p.carrier) +
                              " does not lie over p as a prime");
    }
    return rep.finish();
}

inline int cmd_construct(const Options& o, std::ostream& out)
{
    const RingSpec a = parse_ring_spec(o.a_spec);
    if (o.family == "ring") {
        const std::string name = o.name.empty() ? a.text : o.name;
        write_output(o.output, emit_structure(make_file(name, a.ring)), out);
        return pass;
    }
    if (o.family != "semidirect")
        throw Error(ErrorCode::Usage, "unknown family \"" + o.family + "\"");
    if (o.b_spec.empty())
        throw Error(ErrorCode::Usage, "semidirect needs --b");
    const RingSpec b = parse_ring_spec(o.b_spec);
    const RingHom phi = resolve_hom(a, b, o.hom);
    auto v = validate_lcrng(semidirect_null(a.ring, b.ring, phi));
    if (!v)
        throw std::logic_error("semidirect_null produced an invalid structure: " + v.violations.front().to_string());
    StructureFile f = make_file(o.name.empty() ? "semidirect(" + a.text + "," + b.text + ")" : o.name, *v.value);
    f.metadata["family"] = "semidirect_null";
    f.metadata["a"] = a.text;
    f.metadata["b"] = b.text;
    f.metadata["hom"] = phi.map;
    write_output(o.output, emit_structure(f), out);
    return pass;
}

inline int cmd_enumerate(const Options& o, Report& rep)
{
    std::vector<std::size_t> orders;
    {
        std::stringstream ss(o.group);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t v = 0;
            try {
                v = std::stoul(item);
            } catch (const std::exception&) {
                v = 0;
            }
            if (v == 0)
                throw Error(ErrorCode::Usage, "bad cyclic factor \"" + item + "\"");
            orders.push_back(v);
        }
    }
    if (orders.empty())
        throw Error(ErrorCode::Usage, "enumerate needs --group, e.g. 2,2");
    std::size_t n = 1;
    for (auto d : orders)
        n *= d;
    if (n > 16)
        throw Error(ErrorCode::OrderTooLarge, "census is limited to order 16, got " + std::to_string(n));
    const auto g = cyclic_product_group(orders);
    const Census census = enumerate_lcrngs(g, {!o.no_dedup, o.max_candidates});
    rep.row("index;left_identity;halo;local_identity;left_identities");
    for (std::size_t i = 0; i < census.structures.size(); ++i) {
        const auto& r = census.structures[i];
        rep.line("structure " + std::to_string(i) + ": left identity " + std::to_string(r.left_identity()) +
                 ", halo " + braces(r.halo()) + ", local identity " + std::to_string(r.local_identity()) +
                 ", left identities " + braces(left_identities(r)));
        rep.row(std::to_string(i) + ";" + std::to_string(r.left_identity()) + ";" + r.halo().to_string() + ";" +
                std::to_string(r.local_identity()) + ";" + left_identities(r).to_string());
        if (!o.emit_dir.empty()) {
            std::filesystem::create_directories(o.emit_dir);
            const auto path = std::filesystem::path(o.emit_dir) / ("lcrng_" + std::to_string(i) + ".json");
            write_output(path.string(), emit_structure(make_file("census " + o.group + " #" + std::to_string(i), r)),
                         std::cout);
        }
    }
    rep.line("census: " + std::to_string(census.structures.size()) + " structures from " +
             std::to_string(census.candidates) + " product candidates" + (census.truncated ? " (truncated)" : ""));
    return rep.finish();
}

inline int cmd_bridge(const Options& o, std::ostream& out, Report& rep)
{
    StructureFile f;
    auto r = load_lcrng(o, rep, &f);
    if (!r)
        return rep.finish();
    const HlRing h = from_lcrng(*r);
    write_output(o.output, emit_structure(make_file(o.name.empty() ? "bridge(" + f.name + ")" : o.name, h)), out);
    return pass;
}

inline int cmd_hl_verify(const Options& o, Report& rep)
{
    StructureFile f = load(o);
    if (f.kind() != "hlring")
        throw Error(ErrorCode::Usage, "expected kind \"hlring\", got \"" + f.kind() + "\"");
    auto v = validate_hlring(std::get<RawHlRing>(f.payload));
    print_axioms(rep, hlring_axioms, v.violations);
    if (!v)
        return rep.finish();
    const HlRing& h = *v.value;
    rep.line("halo: " + braces(hl_halo(h)));
    const Check comm = is_hl_commutative(h);
    const std::string comm_text = comm ? "yes" : "no, " + comm.clause + " at (" + join(comm.witness) + ")";
    if (!comm && o.require_commutative)
        rep.violation("not Hu-Liu commutative: " + comm.clause + " at (" + join(comm.witness) + ")");
    else
        rep.line("hu-liu commutative: " + comm_text);
    rep.row("identity;holds;witness");
    for (const auto& s : diassociativity_report(h)) {
        rep.line("identity " + s.name + ": " + (s.holds ? "holds" : "fails at (" + join(s.witness) + ")"));
        rep.row(s.name + ";" + (s.holds ? "yes" : "no") + ";" + join(s.witness));
    }
    return rep.finish();
}

} // namespace detail

/// Runs the workbench with argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    using namespace detail;
    CLI::App app{"Finite left commutative rng workbench"};
    app.require_subcommand(1);
    Options o;

    auto with_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "csv"}));
        return sub;
    };
    auto with_file = [&](CLI::App* sub) {
        sub->add_option("file", o.file, "Structure file (JSON)")->required();
        return with_format(sub);
    };
    auto with_subset = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--subset", o.subset, "Comma-separated ascending indices");
        if (required)
            opt->required();
        sub->add_flag("--lenient", o.lenient, "Do not require the local identity in a subrng");
        return sub;
    };

    auto* verify = with_file(app.add_subcommand("verify", "Check every axiom of a structure file"));
    auto* decompose_cmd = with_file(app.add_subcommand("decompose", "Grading R = R0 + R1 and element components"));
    auto* ideals = with_subset(with_file(app.add_subcommand("ideals", "List ideals, or test one subset")), false);
    auto* spectrum_cmd = with_file(app.add_subcommand("spectrum", "Hu-Liu prime ideals"));
    auto* integral = with_subset(with_file(app.add_subcommand("integral", "Graded integrality over a subrng")), true);
    integral->add_option("--max-degree", o.max_degree, "Largest degree searched (default: order)");
    integral->add_option("--element", o.element, "Check a single element");
    auto* lying = with_subset(with_file(app.add_subcommand("lying-over", "Replay lying-over for a subrng")), true);
    auto* construct = with_format(app.add_subcommand("construct", "Build a structure file"));
    construct->add_option("--family", o.family, "semidirect or ring")->check(CLI::IsMember({"semidirect", "ring"}));
    construct->add_option("--a", o.a_spec, "Ring A, e.g. zmod:4 or zmod:2*zmod:2")->required();
    construct->add_option("--b", o.b_spec, "Ring B (semidirect)");
    construct->add_option("--hom", o.hom, "auto, identity, reduction, proj1 or search");
    construct->add_option("--name", o.name, "Structure name");
    construct->add_option("-o,--output", o.output, "Output path (default stdout)");
    auto* enumerate = with_format(app.add_subcommand("enumerate", "Census of structures on a group"));
    enumerate->add_option("--group", o.group, "Cyclic factor orders, e.g. 2,2")->required();
    enumerate->add_flag("--no-dedup", o.no_dedup, "Keep isomorphic copies");
    enumerate->add_option("--max-candidates", o.max_candidates, "Bound on product candidates");
    enumerate->add_option("--emit-dir", o.emit_dir, "Write each structure as JSON into this directory");
    auto* bridge = with_file(app.add_subcommand("bridge", "Hu-Liu ring of a left commutative rng"));
    bridge->add_option("--name", o.name, "Structure name");
    bridge->add_option("-o,--output", o.output, "Output path (default stdout)");
    auto* hl_verify = with_file(app.add_subcommand("hl-verify", "Check a ring with Hu-Liu product"));
    hl_verify->add_flag("--require-commutative", o.require_commutative, "Treat non-commutativity as a violation");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? pass : input_error;
    }
    const auto chosen = app.get_subcommands();
    const auto* subset_opt = chosen.front()->get_option_no_throw("--subset");
    o.has_subset = subset_opt && subset_opt->count() > 0;

    Report rep(out, o.format == "csv");
    try {
        auto* sub = chosen.front();
        if (sub == construct)
            return cmd_construct(o, out);
        if (sub == bridge)
            return cmd_bridge(o, out, rep);
        rep.echo(args);
        if (sub == verify)
            return cmd_verify(o, rep);
        if (sub == decompose_cmd)
            return cmd_decompose(o, rep);
        if (sub == ideals)
            return cmd_ideals(o, rep);
        if (sub == spectrum_cmd)
            return cmd_spectrum(o, rep);
        if (sub == integral)
            return cmd_integral(o, rep);
        if (sub == lying)
            return cmd_lying_over(o, rep);
        if (sub == enumerate)
            return cmd_enumerate(o, rep);
        if (sub == hl_verify)
            return cmd_hl_verify(o, rep);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        if (e.code() == ErrorCode::NoWitness || e.code() == ErrorCode::BridgeAxiomFailure)
            return violation;
        return input_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return violation;
    }
    return input_error;
}

} // namespace lcr::cli

#include "hilbkit/cli.hpp"

#include "hilbkit/borel.hpp"
#include "hilbkit/degeneration.hpp"
#include "hilbkit/error.hpp"
#include "hilbkit/gin.hpp"
#include "hilbkit/hilbert.hpp"
#include "hilbkit/parser.hpp"
#include "hilbkit/strata.hpp"
#include "hilbkit/tangent.hpp"
#include "hilbkit/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace hilbkit {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string order = "degrevlex";
    bool json = false;
    std::uint64_t seed = 0x4e2d1u;
    std::string ideal_file, text;
    bool allow_inhomogeneous = false;
    int upto = 7;
    std::string hp;
    std::string stratum;
    int count = 1;
    int r5_case = 0;
    bool alpha_zero = false, alpha_nonzero = false, normalized = false;
    std::string at = "0";
    std::vector<int> weights;
    std::vector<std::string> only;
    std::string report_file;
    bool no_timings = false;
    std::optional<int> truncation;
};

std::string read_input(const Options& o)
{
    if (!o.ideal_file.empty() && !o.text.empty())
        throw InvalidInput("give either --ideal or --text");
    if (!o.text.empty())
        return o.text;
    if (o.ideal_file.empty())
        throw InvalidInput("an ideal is required (--ideal FILE or --text TEXT)");
    std::ifstream in(o.ideal_file);
    if (!in)
        throw InvalidInput("cannot read " + o.ideal_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Ideal input_ideal(const Options& o)
{
    ParseOptions p;
    p.allow_inhomogeneous = o.allow_inhomogeneous;
    IdealDocument doc = parse_ideal(read_input(o), p);
    if (doc.generators.empty())
        throw InvalidInput("no generators");
    if (o.allow_inhomogeneous)
        for (const auto& g : doc.generators)
            if (!g.is_homogeneous())
                throw InvalidInput("this command needs homogeneous generators");
    return to_ideal(doc);
}

MonomialOrder parse_order(const std::string& name)
{
    if (name == "degrevlex" || name == "grevlex")
        return MonomialOrder::degrevlex();
    if (name == "lex")
        return MonomialOrder::lex();
    throw InvalidInput("unknown order '" + name + "' (lex or degrevlex)");
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps)
{
    std::vector<std::string> out;
    for (const auto& p : ps)
        out.push_back(p.to_string());
    return out;
}

std::string tuple(const std::vector<Polynomial>& ps)
{
    std::string s = "(";
    for (std::size_t i = 0; i < ps.size(); ++i)
        s += (i ? ", " : "") + ps[i].to_string();
    return s + ")";
}

void lines(std::ostream& out, const std::vector<Polynomial>& ps)
{
    for (const auto& p : ps)
        out << p.to_string() << "\n";
}

// Names B<reg>, with a letter suffix when a regularity repeats.
std::vector<std::string> borel_names(const std::vector<Ideal>& ideals)
{
    std::map<int, int> seen, total;
    std::vector<int> regs;
    for (const auto& I : ideals) {
        regs.push_back(regularity(I));
        ++total[regs.back()];
    }
    std::vector<std::string> out;
    for (int r : regs) {
        std::string name = "B" + std::to_string(r);
        if (total[r] > 1)
            name += static_cast<char>('a' + seen[r]++);
        out.push_back(name);
    }
    return out;
}

int run(const std::string& cmd, const Options& o, std::ostream& out)
{
    if (cmd == "hf") {
        auto v = hilbert_function_table(input_ideal(o), o.upto).values;
        if (o.json) {
            out << json{{"hilbert_function", v}}.dump() << "\n";
        } else {
            for (std::size_t i = 0; i < v.size(); ++i)
                out << (i ? " " : "") << v[i];
            out << "\n";
        }
        return kExitOk;
    }
    if (cmd == "hp") {
        std::string hp = quotient_hilbert_polynomial(input_ideal(o)).to_string();
        out << (o.json ? json{{"quotient_hilbert_polynomial", hp}}.dump() : hp) << "\n";
        return kExitOk;
    }
    if (cmd == "reg") {
        int r = regularity(input_ideal(o));
        out << (o.json ? json{{"regularity", r}}.dump() : std::to_string(r)) << "\n";
        return kExitOk;
    }
    if (cmd == "gb") {
        auto basis = input_ideal(o).groebner_basis(parse_order(o.order));
        if (o.json)
            out << json{{"order", o.order}, {"basis", strings(basis)}}.dump() << "\n";
        else
            lines(out, basis);
        return kExitOk;
    }
    if (cmd == "gin") {
        std::mt19937_64 rng(o.seed);
        GinResult g = generic_initial_ideal(input_ideal(o), rng);
        auto gens = minimal_generators(g.gin);
        if (o.json)
            out << json{{"gin", strings(gens)}, {"trials", g.trials}, {"coefficient_bound", g.coefficient_bound}}.dump()
                << "\n";
        else
            lines(out, gens);
        return kExitOk;
    }
    if (cmd == "sat") {
        auto gens = minimal_generators(saturate_irrelevant(input_ideal(o)));
        if (o.json)
            out << json{{"saturation", strings(gens)}}.dump() << "\n";
        else
            lines(out, gens);
        return kExitOk;
    }
    if (cmd == "classify") {
        StratumReport r = classify(input_ideal(o));
        std::vector<std::string> certain, unknown;
        for (const auto& c : r.components)
            (c.membership == Membership::Certain ? certain : unknown).push_back(c.component);
        if (o.json) {
            out << json{{"regularity", r.regularity}, {"stratum", stratum_name(r.stratum)}, {"components", certain}}.dump()
                << "\n";
        } else {
            out << "regularity: " << r.regularity << "\nstratum: " << stratum_name(r.stratum) << "\n";
            for (const auto& c : certain)
                out << "lies on: " << c << "\n";
            for (const auto& c : unknown)
                out << "undetermined: " << c << "\n";
        }
        return kExitOk;
    }
    if (cmd == "tangent") {
        TangentOptions t;
        t.truncation = o.truncation;
        TangentReport r = tangent_dimension(input_ideal(o), t);
        if (o.json)
            out << json{{"dimension", r.dimension},
                        {"truncation", r.truncation},
                        {"unknowns", r.unknowns},
                        {"constraints", r.constraint_count},
                        {"warning", r.warning}}
                       .dump()
                << "\n";
        else
            out << r.dimension << (r.warning ? "  (warning: not a saturated ideal with polynomial 4n)" : "") << "\n";
        return kExitOk;
    }
    if (cmd == "borel-enum" || cmd == "lex-point") {
        HilbertPolynomial p = parse_hilbert_polynomial(o.hp);
        std::vector<Ideal> ideals = cmd == "lex-point" ? std::vector<Ideal>{lex_ideal(p)} : enumerate_borel_ideals(p);
        auto names = cmd == "lex-point" ? std::vector<std::string>{"lex"} : borel_names(ideals);
        if (o.json) {
            json arr = json::array();
            for (std::size_t i = 0; i < ideals.size(); ++i)
                arr.push_back({{"name", names[i]},
                               {"generators", strings(minimal_generators(ideals[i]))},
                               {"regularity", regularity(ideals[i])}});
            out << json{{"ideals", arr}}.dump() << "\n";
        } else {
            for (std::size_t i = 0; i < ideals.size(); ++i)
                out << names[i] << ": " << tuple(minimal_generators(ideals[i])) << "\n";
        }
        return kExitOk;
    }
    if (cmd == "sample") {
        Stratum s = parse_stratum(o.stratum);
        SampleOptions so;
        if (o.r5_case)
            so.r5_case = o.r5_case;
        if (o.alpha_zero && o.alpha_nonzero)
            throw InvalidInput("--alpha-zero and --alpha-nonzero exclude each other");
        if (o.alpha_zero || o.alpha_nonzero)
            so.r5_alpha_zero = o.alpha_zero;
        so.r5_normalized = o.normalized;
        std::mt19937_64 rng(o.seed);
        json arr = json::array();
        for (int i = 0; i < o.count; ++i) {
            auto gens = minimal_generators(sample_stratum(s, rng, so));
            if (o.json)
                arr.push_back(strings(gens));
            else
                out << format_generators(gens) << (i + 1 < o.count ? "\n" : "");
        }
        if (o.json)
            out << json{{"stratum", stratum_name(s)}, {"samples", arr}}.dump() << "\n";
        return kExitOk;
    }
    if (cmd == "limit") {
        if (o.at != "0" && o.at != "inf")
            throw InvalidInput("--at takes 0 or inf");
        LimitPoint at = o.at == "0" ? LimitPoint::Zero : LimitPoint::Infinity;
        LimitResult r;
        if (!o.weights.empty()) {
            r = weight_limit_report(input_ideal(o), o.weights, at);
        } else {
            ParseOptions p;
            p.allow_parameter = true;
            r = family_limit_report(to_family(parse_ideal(read_input(o), p)), at);
        }
        auto gens = minimal_generators(r.limit);
        if (o.json)
            out << json{{"limit", strings(gens)},
                        {"special_fiber", strings(minimal_generators(r.special))},
                        {"generic_hilbert_polynomial", r.generic_hp.to_string()}}
                       .dump()
                << "\n";
        else
            lines(out, gens);
        return kExitOk;
    }
    if (cmd == "dims") {
        auto table = dimension_table();
        if (o.json) {
            json arr = json::array();
            for (const auto& e : table)
                arr.push_back({{"name", e.name}, {"value", e.value}, {"terms", e.terms}, {"derivation", e.derivation}});
            out << json{{"dimensions", arr}}.dump() << "\n";
        } else {
            for (const auto& e : table) {
                out << e.name << " " << e.value << " =";
                for (std::size_t i = 0; i < e.terms.size(); ++i)
                    out << (i ? " + " : " ") << e.terms[i];
                out << "   " << e.derivation << "\n";
            }
        }
        return kExitOk;
    }
    if (cmd == "verify-paper") {
        VerifyConfig cfg;
        cfg.seed = o.seed;
        cfg.only = o.only;
        VerificationReport rep = verify_paper(cfg);
        if (!o.report_file.empty()) {
            std::ofstream f(o.report_file);
            if (!f)
                throw InvalidInput("cannot write " + o.report_file);
            f << rep.to_json(!o.no_timings) << "\n";
        }
        out << (o.json ? rep.to_json(!o.no_timings) + "\n" : rep.to_text());
        return rep.failed() == 0 ? kExitOk : kExitCheckFailed;
    }
    throw InvalidInput("unknown command '" + cmd + "'");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations on Hilbert schemes of space curves", "hilbkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--order", o.order, "monomial order: degrevlex or lex");
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_option("--seed", o.seed, "seed for every random choice");

    auto with_ideal = [&](CLI::App* sub) {
        sub->add_option("--ideal", o.ideal_file, "file with generators");
        sub->add_option("--text", o.text, "generators inline");
        sub->add_flag("--allow-inhomogeneous", o.allow_inhomogeneous, "accept inhomogeneous input when parsing");
        return sub;
    };
    with_ideal(app.add_subcommand("hf", "dim I_n for n = 0..upto"))->add_option("--upto", o.upto, "largest degree");
    with_ideal(app.add_subcommand("hp", "quotient Hilbert polynomial"));
    with_ideal(app.add_subcommand("reg", "Castelnuovo-Mumford regularity"));
    with_ideal(app.add_subcommand("gb", "reduced Groebner basis"));
    with_ideal(app.add_subcommand("gin", "generic initial ideal (degrevlex)"));
    with_ideal(app.add_subcommand("sat", "saturation by (x,y,z,t)"));
    with_ideal(app.add_subcommand("classify", "regularity stratum and components"));
    with_ideal(app.add_subcommand("tangent", "tangent space dimension"))
        ->add_option("--truncation", o.truncation, "degree d of I_{>=d}");
    app.add_subcommand("borel-enum", "saturated Borel ideals with a Hilbert polynomial")
        ->add_option("--hp", o.hp, "polynomial in n, e.g. 4*n")
        ->required();
    app.add_subcommand("lex-point", "saturated lexicographic ideal")
        ->add_option("--hp", o.hp, "polynomial in n")
        ->required();
    auto* sample = app.add_subcommand("sample", "random ideals of a stratum");
    sample->add_option("--stratum", o.stratum, "V, R3', R4, R5 or R6")->required();
    sample->add_option("--count", o.count, "number of samples")->check(CLI::Range(1, 10000));
    sample->add_option("--case", o.r5_case, "R5 case, 1 or 2")->check(CLI::Range(1, 2));
    sample->add_flag("--alpha-zero", o.alpha_zero, "R5 case 2 without the x*w^4 term");
    sample->add_flag("--alpha-nonzero", o.alpha_nonzero, "R5 case 2 with the x*w^4 term");
    sample->add_flag("--normalized", o.normalized, "R5 case 2 in the coordinates l = x");
    auto* limit = with_ideal(app.add_subcommand("limit", "flat limit of a family in the parameter a"));
    limit->add_option("--at", o.at, "0 or inf");
    limit->add_option("--weights", o.weights, "torus weights; the input is then an ideal")->delimiter(',')->expected(4);
    app.add_subcommand("dims", "parameter counts of the strata");
    auto* verify = app.add_subcommand("verify-paper", "run the reproduction checklist");
    verify->add_option("--only", o.only, "groups to run")->delimiter(',');
    verify->add_option("--report", o.report_file, "write the JSON report to a file");
    verify->add_flag("--no-timings", o.no_timings, "leave timings out of the JSON report");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return run(cmd, o, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CheckFailure& e) {
        err << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}

}  // namespace hilbkit

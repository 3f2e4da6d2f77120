#include "gl11/cli.hpp"

#include "gl11/characters.hpp"
#include "gl11/errors.hpp"
#include "gl11/fusion.hpp"
#include "gl11/kz.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace gl11::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

Json summands_json(const FormalSum &sum) {
    Json arr = Json::array();
    for (const auto &[label, mult] : sum.terms())
        arr.push_back({{"label", render(label)}, {"multiplicity", mult}});
    return arr;
}

Json fin_json(const FinMultiset &s) {
    Json arr = Json::array();
    for (const auto &[label, mult] : s)
        arr.push_back({{"label", label.str()}, {"multiplicity", mult}});
    return arr;
}

Json series_json(const JacobiSeries &s) {
    Json arr = Json::array();
    for (const auto &[e, c] : s.terms())
        arr.push_back({{"q", e.q.str()}, {"z", e.z.str()}, {"y", e.y.str()}, {"coeff", c}});
    return arr;
}

Json labels_json(const std::vector<ModuleLabel> &ls, std::int64_t m_range) {
    Json arr = Json::array();
    std::int64_t m = -m_range;
    for (const auto &l : ls)
        arr.push_back({{"m", m++}, {"label", render(l)}});
    return arr;
}

Json check(const std::string &name, bool ok) {
    return {{"check", name}, {"status", ok ? "pass" : "fail"}};
}

Json kz_report(double tol) {
    Json checks = Json::array();
    bool all = true;
    auto add = [&](Json c) {
        all = all && c["status"] == "pass";
        checks.push_back(std::move(c));
    };

    const SecondOrderOde ode = eliminate_to_second_order(build_first_order_system());
    add(check("eliminate_to_second_order", ode == main_equation_reference()));
    add(check("delta_zero_is_hypergeometric",
              ode.substitute(Param::Delta, Rational(0)) == hypergeometric_reference()));
    add(check("verify_vanish1", verify_vanish1().holds));
    add(check("check_transform", check_transform()));

    const double bound = std::max(10 * tol, 1e-8);
    for (const auto &x : {Rational(1, 10), Rational(1, 3), Rational(2, 5), Rational(1, 2),
                          Rational(7, 10)}) {
        const Hyp2f1Result r = hyp2f1(x.to_double(), 1.0, tol);
        const double cf = closed_form(x);
        Json c = check("rigidity_constant", std::abs(r.value - cf) < bound);
        c["x"] = x.str();
        c["value"] = r.value;
        c["closed_form"] = cf;
        c["n2_term_bound"] = r.n2_term_bound;
        add(std::move(c));
    }

    double worst = 0;
    for (const auto &x : {Rational(1, 3), Rational(2, 5), Rational(3, 4)})
        for (const auto &d : {Rational(-1), Rational(-1, 3), Rational(0), Rational(1, 2),
                              Rational(1)})
            for (double z : {0.1, 0.25, 0.5, 0.75, 0.9})
                worst = std::max(worst, ode_residual(x, d, z));
    Json res = check("ode_residual", worst < 1e-10);
    res["residual"] = worst;
    add(std::move(res));

    return {{"status", all ? "pass" : "fail"}, {"tol", tol}, {"checks", checks}};
}

struct Options {
    std::string a, b, label, ext = "sl21-neg-half", cutoff = "2", z_window, action,
                                 batch_file;
    std::int64_t m_range = 3;
    double tol = 1e-12;
    bool json = true;
    bool projective = false;
};

Json dispatch(CLI::App &app, const Options &o,
              const std::vector<std::string> &args, std::ostream &err);

} // namespace

FinLabel parse_fin_label(std::string_view text) {
    const std::string t = trim(text);
    const auto open = t.find('(');
    if (open == std::string::npos || t.size() < open + 2 || t.back() != ')')
        throw ParseError("malformed finite label '" + t + "'");
    const std::string kind = t.substr(0, open);
    const std::string body = t.substr(open + 1, t.size() - open - 2);
    const auto semi = body.find(';');
    const Rational n = Rational::parse(trim(body.substr(0, semi)));
    const std::optional<Rational> e =
        semi == std::string::npos
            ? std::nullopt
            : std::optional<Rational>(Rational::parse(trim(body.substr(semi + 1))));
    if (kind == "v") {
        if (!e)
            throw ParseError("finite Verma label needs e: '" + t + "'");
        return FinLabel::verma(n, *e);
    }
    if (kind != "a" && kind != "p")
        throw ParseError("unknown finite label kind '" + kind + "'");
    if (e && !e->is_zero())
        throw ParseError("finite label '" + t + "' must have e = 0");
    return kind == "a" ? FinLabel::atypical(n) : FinLabel::projective(n);
}

ExtensionSpec parse_extension(std::string_view text) {
    const std::string t = trim(text);
    if (t == "sl21-neg-half")
        return ExtensionSpec::sl21_minus_half();
    if (t == "sl21-level1")
        return ExtensionSpec::sl21_level1();
    if (t.rfind("custom:", 0) == 0) {
        const std::string body = t.substr(7);
        const auto comma = body.find(',');
        if (comma == std::string::npos)
            throw ParseError("custom extension needs 'custom:<a>,<b>'");
        const Rational a = Rational::parse(trim(body.substr(0, comma)));
        const Rational b = Rational::parse(trim(body.substr(comma + 1)));
        if (!b.is_integer())
            throw ParseError("custom extension b must be an integer");
        return ExtensionSpec::custom(a, b.to_int64());
    }
    throw ParseError("unknown extension '" + t + "'");
}

namespace {

Json dispatch(CLI::App &app, const Options &o, const std::vector<std::string> &,
              std::ostream &err) {
    auto used = [&](const char *name) { return app.got_subcommand(name); };

    if (used("fuse")) {
        const ModuleLabel a = parse_label(o.a), b = parse_label(o.b);
        return {{"summands", summands_json(fuse(a, b))}};
    }
    if (used("kdec")) {
        const ModuleLabel l = parse_label(o.label);
        return {{"label", render(l)}, {"factors", summands_json(k_decompose(l))}};
    }
    if (used("char")) {
        const ModuleLabel l = parse_label(o.label);
        const Rational cutoff = Rational::parse(o.cutoff);
        JacobiSeries s;
        if (l.kind() == ModuleLabel::Kind::Typical || l.kind() == ModuleLabel::Kind::Verma) {
            s = char_verma(l.n(), l.ehat(), cutoff);
        } else if (l.kind() == ModuleLabel::Kind::Atypical && l.ell() == 0) {
            Rational lo = l.n() - cutoff - Rational(2), hi = l.n() + cutoff + Rational(1);
            if (!o.z_window.empty()) {
                const auto comma = o.z_window.find(',');
                if (comma == std::string::npos)
                    throw ParseError("--z-window expects '<lo>,<hi>'");
                lo = Rational::parse(trim(o.z_window.substr(0, comma)));
                hi = Rational::parse(trim(o.z_window.substr(comma + 1)));
            }
            s = char_atypical0(l.n(), cutoff, lo, hi);
        } else {
            throw Undetermined("no character formula for " + render(l));
        }
        Json j{{"label", render(l)}};
        j["q_limit"] = s.q_limit() ? Json(s.q_limit()->str()) : Json(nullptr);
        j["terms"] = series_json(s);
        return j;
    }
    if (used("induce")) {
        const ModuleLabel l = parse_label(o.label);
        const ExtensionSpec e = parse_extension(o.ext);
        for (const auto &w : e.warnings())
            err << "warning: " << w << "\n";
        const auto summands = o.projective ? induced_projective_cover(l, e, o.m_range)
                                           : induce(l, e, o.m_range);
        Json j{{"label", render(l)}, {"extension", e.name()}, {"m_range", o.m_range}};
        j["summands"] = labels_json(summands, o.m_range);
        if (l.is_simple() && !o.projective) {
            const WeightGrowth g = weight_growth(l, e);
            j["weight_growth"] = {{"quadratic_coeff", g.quadratic_coeff.str()},
                                  {"linear_coeff", g.linear_coeff.str()},
                                  {"linear_coeff_negative", g.linear_coeff_negative.str()},
                                  {"classification", to_string(g.classification)}};
        }
        return j;
    }
    if (used("monodromy")) {
        const ModuleLabel l = parse_label(o.label);
        const ExtensionSpec e = parse_extension(o.ext);
        Json arr = Json::array();
        bool integral = true;
        for (std::int64_t m = -o.m_range; m <= o.m_range; ++m) {
            const Rational x = monodromy_exponent(l, e.generator_of(m));
            integral = integral && x.is_integer();
            arr.push_back({{"m", m}, {"generator", render(e.generator_of(m))},
                           {"exponent", x.str()}});
        }
        return {{"label", render(l)}, {"extension", e.name()}, {"exponents", arr},
                {"integral", integral}};
    }
    if (used("local")) {
        const ModuleLabel l = parse_label(o.label);
        const ExtensionSpec e = parse_extension(o.ext);
        Json j{{"label", render(l)}, {"extension", e.name()}, {"local", is_local(l, e)}};
        j["closed_form"] = e.kind() == ExtensionSpec::Kind::Custom
                               ? Json(nullptr)
                               : Json(is_local_closed_form(l, e));
        return j;
    }
    if (used("kz")) {
        if (o.action != "verify")
            throw ParseError("unknown kz action '" + o.action + "'");
        if (!(o.tol > 0))
            throw ParseError("--tol must be positive");
        return kz_report(o.tol);
    }
    if (used("oracle")) {
        const FinLabel a = parse_fin_label(o.a), b = parse_fin_label(o.b);
        const Gl11MatrixModule m = tensor(realize(a), realize(b));
        return {{"a", a.str()}, {"b", b.str()}, {"dimension", m.dimension()},
                {"summands", fin_json(decompose(m))}};
    }
    throw ParseError("no subcommand given");
}

std::vector<std::string> split_words(const std::string &line) {
    std::istringstream in(line);
    std::vector<std::string> words;
    for (std::string w; in >> w;)
        words.push_back(w);
    return words;
}

int run_batch(const std::string &file, std::ostream &out, std::ostream &err) {
    std::ifstream f;
    std::istream *in = &std::cin;
    if (file != "-") {
        f.open(file);
        if (!f)
            throw ParseError("cannot open batch file '" + file + "'");
        in = &f;
    }
    Json results = Json::array();
    int worst = 0;
    for (std::string line; std::getline(*in, line);) {
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        std::ostringstream sub_out;
        const int code = run(split_words(t), sub_out, err);
        Json entry{{"command", t}, {"exit", code}};
        entry["result"] = sub_out.str().empty() ? Json(nullptr) : Json::parse(sub_out.str());
        results.push_back(std::move(entry));
        worst = std::max(worst, code);
    }
    out << results.dump(2) << "\n";
    return worst;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact label, character and KZ computations for affine gl(1|1)", "gl11"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "JSON output (the only format)");

    auto *fuse_cmd = app.add_subcommand("fuse", "Fusion product of two labels");
    fuse_cmd->add_option("a", o.a, "Left label, e.g. A(1;0)")->required();
    fuse_cmd->add_option("b", o.b, "Right label, e.g. V(1/4;1/2)")->required();

    auto *char_cmd = app.add_subcommand("char", "Character of V, Verma0 or A(n;0)");
    char_cmd->add_option("label", o.label)->required();
    char_cmd->add_option("--cutoff", o.cutoff, "q window above the lowest weight");
    char_cmd->add_option("--z-window", o.z_window, "z range '<lo>,<hi>' for A(n;0)");

    auto *induce_cmd = app.add_subcommand("induce", "Summands of the induced module");
    induce_cmd->add_option("label", o.label)->required();
    induce_cmd->add_option("--ext", o.ext, "sl21-neg-half | sl21-level1 | custom:<a>,<b>");
    induce_cmd->add_option("--m-range", o.m_range)->check(CLI::NonNegativeNumber);
    induce_cmd->add_flag("--projective", o.projective, "Induce the projective cover");

    auto *mono_cmd = app.add_subcommand("monodromy", "Monodromy exponents against g_m");
    mono_cmd->add_option("label", o.label)->required();
    mono_cmd->add_option("--ext", o.ext);
    mono_cmd->add_option("--m-range", o.m_range)->check(CLI::NonNegativeNumber);

    auto *local_cmd = app.add_subcommand("local", "Locality for an extension");
    local_cmd->add_option("label", o.label)->required();
    local_cmd->add_option("--ext", o.ext);

    auto *kz_cmd = app.add_subcommand("kz", "KZ equation checks");
    kz_cmd->add_option("action", o.action, "verify")->required();
    kz_cmd->add_option("--tol", o.tol);

    auto *oracle_cmd = app.add_subcommand("oracle", "Decompose a tensor product of finite modules");
    oracle_cmd->add_option("a", o.a, "e.g. v(1/4;1/2)")->required();
    oracle_cmd->add_option("b", o.b, "e.g. a(0)")->required();

    auto *kdec_cmd = app.add_subcommand("kdec", "Composition factors");
    kdec_cmd->add_option("label", o.label)->required();

    auto *batch_cmd = app.add_subcommand("batch", "Run one command per line ('-' = stdin)");
    batch_cmd->add_option("file", o.batch_file)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    auto fail = [&](int code, const std::string &msg) {
        err << "error: " << msg << "\n";
        out << Json{{"error", msg}, {"exit", code}}.dump(2) << "\n";
        return code;
    };
    try {
        if (app.got_subcommand(batch_cmd))
            return run_batch(o.batch_file, out, err);
        out << dispatch(app, o, args, err).dump(2) << "\n";
        return 0;
    } catch (const Undetermined &e) {
        return fail(1, e.what());
    } catch (const ParseError &e) {
        return fail(2, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(2, e.what());
    } catch (const std::domain_error &e) {
        return fail(1, e.what());
    } catch (const std::exception &e) {
        return fail(3, e.what());
    }
}

} // namespace gl11::cli

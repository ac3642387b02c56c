#include "commands.hpp"

#include "stripllt/chromatic.hpp"
#include "stripllt/errors.hpp"
#include "stripllt/json_io.hpp"
#include "stripllt/llt.hpp"
#include "stripllt/structure.hpp"
#include "stripllt/sweep.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

namespace sllt::cli {

namespace {

struct Options {
    std::string strip, strip_b, alpha, beta, graph, a, b, basis, format = "json", report = "strict,nesting,ncp";
    std::optional<int> vars;
    int max_rows = 3, max_len = 3, max_offset = 4;
    long budget = 100000;
    bool check_oracle = false, printed_sign = false, quasisym = false, timing = false;
};

struct Outcome {
    Json result;
    int code = Ok;
};

Json read_json_arg(const std::string& arg) {
    std::string text = arg;
    if (arg.empty() || arg.front() != '{') {
        std::ifstream in(arg);
        if (!in)
            fail(ErrorKind::Parse, "cannot read " + arg);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
    }
}

Json expansion_result(const BasisExpansion& e) {
    Json r = to_json(e);
    r["display"] = display_json(e);
    return r;
}

Json strip_pairs(const std::vector<std::pair<HorizontalStrip, HorizontalStrip>>& v, std::size_t limit) {
    Json a = Json::array();
    for (std::size_t t = 0; t < v.size() && t < limit; ++t)
        a.push_back({to_string(v[t].first), to_string(v[t].second)});
    return a;
}

Outcome cmd_llt(const Options& o) {
    HorizontalStrip s = parse_strip(o.strip);
    SymFunc g = llt_poly(s, o.vars.value_or(s.n()));
    if (o.basis.empty())
        return {to_json(g)};
    return {expansion_result(to_basis(g, parse_basis(o.basis)))};
}

Outcome cmd_verify(const Options& o) {
    if (o.max_rows < 1 || o.max_len < 1 || o.max_offset < 0)
        fail(ErrorKind::PreconditionViolated, "family bounds must be positive");
    VerifyReport rep = verify_family(enumerate_strips(o.max_rows, o.max_len, o.max_offset));
    Json r = {{"strips", rep.strips},
              {"buckets", rep.buckets},
              {"mismatches", rep.mismatches.size()},
              {"mismatch_examples", strip_pairs(rep.mismatches, 10)},
              {"converse_failures", rep.converse.size()},
              {"converse_examples", strip_pairs(rep.converse, 10)}};
    return {r, rep.mismatches.empty() ? Ok : PropertyViolation};
}

Outcome cmd_pi(const Options& o) { return {to_json(pi_graph(parse_strip(o.strip)))}; }

Outcome cmd_iso(const Options& o) {
    WeightedGraph g = wgraph_from_json(read_json_arg(o.a));
    WeightedGraph h = wgraph_from_json(read_json_arg(o.b));
    auto perm = is_isomorphic(g, h);
    Json r = {{"isomorphic", perm.has_value()}};
    if (perm)
        r["permutation"] = *perm;
    return {r};
}

Outcome cmd_chromatic(const Options& o) {
    SymFunc f(1, 0);
    if (o.quasisym) {
        HorizontalStrip s = parse_strip(o.strip);
        f = chrom_quasisym(gamma_graph(s), o.vars.value_or(s.n()));
    } else {
        VertexWeightedGraph g = underlying_graph(wgraph_from_json(read_json_arg(o.graph)));
        f = extended_chromatic(g, o.vars.value_or(g.total_weight()));
    }
    if (o.basis.empty())
        return {to_json(f)};
    return {expansion_result(to_basis(f, parse_basis(o.basis)))};
}

Outcome cmd_compose(const Options& o) {
    Composition a = parse_composition(o.alpha);
    Json r;
    if (!o.strip.empty()) {
        r["strip"] = to_string(strip_compose(a, parse_strip(o.strip)));
        return {r};
    }
    Composition b = parse_composition(o.beta);
    r["concat"] = to_string(concat(a, b));
    r["near_concat"] = to_string(near_concat(a, b));
    r["compose"] = to_string(compose(a, b));
    r["multiset_equal"] = multiset_equal(a, b);
    return {r};
}

Outcome cmd_analyze(const Options& o) {
    HorizontalStrip s = parse_strip(o.strip);
    std::set<std::string> want;
    std::stringstream ss(o.report);
    for (std::string item; std::getline(ss, item, ',');)
        want.insert(item);
    Json r = Json::object();
    for (const auto& item : want) {
        if (item == "strict") {
            Json pairs = Json::array(), seqs = Json::array();
            for (auto [i, j] : strict_pairs(s))
                pairs.push_back({i, j});
            for (const auto& q : strict_sequences(s))
                seqs.push_back({{"indices", q.indices}, {"witness", q.witness}});
            r["strict_pairs"] = pairs;
            r["strict_sequences"] = seqs;
        } else if (item == "nesting") {
            r["nesting"] = is_nesting(s);
        } else if (item == "ncp") {
            Json paths = Json::array();
            for (int i = 1; i <= s.n(); ++i)
                for (int j = i + 1; j <= s.n(); ++j)
                    if (auto p = find_minimal_ncp(s, i, j))
                        paths.push_back(p->indices);
            r["minimal_ncps"] = paths;
        } else if (item == "prec") {
            Json rel = Json::array();
            for (int i = 1; i <= s.n(); ++i)
                for (int j = 1; j <= s.n(); ++j)
                    if (i != j && prec(s, i, j))
                        rel.push_back({i, j});
            r["prec"] = rel;
        } else {
            fail(ErrorKind::Parse, "unknown report item '" + item + "'");
        }
    }
    return {r};
}

Outcome cmd_path_llt(const Options& o) {
    Composition a = parse_composition(o.alpha);
    BasisExpansion e = path_llt_h_expansion(a, o.printed_sign ? PathSign::Printed : PathSign::Corrected);
    Json r = expansion_result(e);
    int code = Ok;
    if (o.check_oracle) {
        HorizontalStrip s = strip_of_composition(a);
        const int k = a.size();
        bool ok = evaluate(e, k) == llt_poly(s, k);
        r["oracle_agrees"] = ok;
        if (!ok)
            code = PropertyViolation;
    }
    return {r, code};
}

Outcome cmd_witness(const Options& o) {
    HorizontalStrip cur = parse_strip(o.strip);
    auto w = similarity_witness(cur, parse_strip(o.strip_b), o.budget);
    Json r = {{"found", w.has_value()}};
    if (w) {
        Json moves = Json::array(), states = Json::array();
        for (const auto& m : *w) {
            cur = apply_move(cur, m);
            moves.push_back(to_string(m));
            states.push_back(to_string(cur));
        }
        r["moves"] = moves;
        r["states"] = states;
    }
    return {r};
}

void print_text(const Json& result, std::ostream& out) {
    if (result.contains("display")) {
        const auto& c = result["coeffs"];
        for (const auto& t : c) {
            std::string key = partition_string(t["partition"].get<Partition>());
            out << basis_char(parse_basis(result["basis"].get<std::string>())) << key << "  "
                << result["display"][key].get<std::string>() << "\n";
        }
        if (c.empty())
            out << "0\n";
        return;
    }
    out << result.dump(2) << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"horizontal-strip LLT polynomials and weighted graphs", "stripllt"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Options o;

    auto fmt = [&](CLI::App* c) {
        c->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
        c->add_flag("--timing", o.timing, "add elapsed_ms to the report");
    };
    auto basis = [&](CLI::App* c) { c->add_option("--basis", o.basis)->check(CLI::IsMember({"m", "s", "h", "e", "p"})); };

    auto* llt = app.add_subcommand("llt", "LLT polynomial of a strip");
    llt->add_option("--strip", o.strip)->required();
    llt->add_option("--vars", o.vars)->check(CLI::Range(1, 64));
    basis(llt);
    fmt(llt);

    auto* verify = app.add_subcommand("verify", "compare LLT polynomials within weighted-graph isomorphism classes");
    verify->add_option("--max-rows", o.max_rows);
    verify->add_option("--max-len", o.max_len);
    verify->add_option("--max-offset", o.max_offset);
    fmt(verify);

    auto* pi = app.add_subcommand("pi", "weighted graph of a strip");
    pi->add_option("--strip", o.strip)->required();
    fmt(pi);

    auto* iso = app.add_subcommand("iso", "weighted graph isomorphism");
    iso->add_option("--a", o.a, "graph JSON file or literal")->required();
    iso->add_option("--b", o.b, "graph JSON file or literal")->required();
    fmt(iso);

    auto* chrom = app.add_subcommand("chromatic", "extended chromatic or chromatic quasisymmetric function");
    chrom->add_option("--graph", o.graph, "graph JSON file or literal");
    chrom->add_option("--strip", o.strip, "unicellular strip, with --quasisym");
    chrom->add_flag("--quasisym", o.quasisym);
    chrom->add_option("--vars", o.vars)->check(CLI::Range(1, 64));
    basis(chrom);
    fmt(chrom);

    auto* comp = app.add_subcommand("compose", "composition calculus");
    comp->add_option("--alpha", o.alpha)->required();
    comp->add_option("--beta", o.beta);
    comp->add_option("--strip", o.strip, "compose alpha with this strip");
    fmt(comp);

    auto* analyze = app.add_subcommand("analyze", "structural predicates of a strip");
    analyze->add_option("--strip", o.strip)->required();
    analyze->add_option("--report", o.report, "comma list of strict, nesting, ncp, prec");
    fmt(analyze);

    auto* path = app.add_subcommand("path-llt", "h-expansion of the LLT polynomial of a path strip");
    path->add_option("--alpha", o.alpha)->required();
    path->add_flag("--check-oracle", o.check_oracle);
    path->add_flag("--printed-sign", o.printed_sign);
    fmt(path);

    auto* witness = app.add_subcommand("witness", "search for a sequence of similarity moves");
    witness->add_option("--a", o.strip)->required();
    witness->add_option("--b", o.strip_b)->required();
    witness->add_option("--budget", o.budget);
    fmt(witness);

    std::vector<std::string> store{"stripllt"};
    store.insert(store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : store)
        argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << Json{{"error", {{"kind", kind_name(ErrorKind::Parse)}, {"message", e.what()}}}}.dump() << "\n";
        return ParseError;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    Json inputs = Json::object();
    for (const CLI::Option* opt : sub->get_options()) {
        if (opt->get_name() == "--help" || opt->count() == 0)
            continue;
        std::string key = opt->get_name().substr(2);
        if (opt->get_expected_min() == 0)
            inputs[key] = true;
        else
            inputs[key] = opt->as<std::string>();
    }

    const auto t0 = std::chrono::steady_clock::now();
    Outcome res;
    try {
        if (name == "llt")
            res = cmd_llt(o);
        else if (name == "verify")
            res = cmd_verify(o);
        else if (name == "pi")
            res = cmd_pi(o);
        else if (name == "iso")
            res = cmd_iso(o);
        else if (name == "chromatic") {
            if (o.quasisym == o.strip.empty() || o.quasisym == !o.graph.empty())
                fail(ErrorKind::Parse, "chromatic needs --graph, or --quasisym with --strip");
            res = cmd_chromatic(o);
        } else if (name == "compose") {
            if (o.beta.empty() == o.strip.empty())
                fail(ErrorKind::Parse, "compose needs exactly one of --beta and --strip");
            res = cmd_compose(o);
        } else if (name == "analyze")
            res = cmd_analyze(o);
        else if (name == "path-llt")
            res = cmd_path_llt(o);
        else
            res = cmd_witness(o);
    } catch (const Error& e) {
        err << Json{{"error", {{"kind", kind_name(e.kind())}, {"message", e.what()}}}}.dump() << "\n";
        return e.kind() == ErrorKind::Parse ? ParseError : PreconditionError;
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);

    if (o.format == "text") {
        print_text(res.result, out);
    } else {
        Json report = {{"command", name}, {"inputs", inputs}, {"result", res.result}, {"version", kVersion}};
        if (o.timing)
            report["elapsed_ms"] = ms.count();
        out << report.dump(2) << "\n";
    }
    return res.code;
}

} // namespace sllt::cli

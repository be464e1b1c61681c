#include "qalg/cli.hpp"

#include "qalg/presentations.hpp"
#include "qalg/quotient_engine.hpp"
#include "qalg/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace qalg::cli {

namespace {

std::string type_name(const nlohmann::json& j)
{
    return std::string(j.type_name());
}

}  // namespace

Complex parse_complex_json(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw InputError("complex must be a JSON object, got " + type_name(doc));
    for (const auto& [key, value] : doc.items())
        if (key != "n" && key != "facets" && key != "schema")
            throw InputError("unknown key \"" + key + "\"");
    if (doc.contains("schema") && doc["schema"] != 1)
        throw InputError("unsupported schema " + doc["schema"].dump());
    if (!doc.contains("n"))
        throw InputError("missing key \"n\"");
    if (!doc["n"].is_number_integer())
        throw InputError("\"n\" must be an integer, got " + doc["n"].dump());
    const auto n64 = doc["n"].get<long long>();
    if (n64 < 1 || n64 > kMaxNodes)
        throw InputError("n=" + std::to_string(n64) + " outside 1.." + std::to_string(kMaxNodes));
    const int n = static_cast<int>(n64);
    std::vector<std::vector<int>> facets;
    if (doc.contains("facets")) {
        const auto& fs = doc["facets"];
        if (!fs.is_array())
            throw InputError("\"facets\" must be an array, got " + type_name(fs));
        for (std::size_t k = 0; k < fs.size(); ++k) {
            const auto& f = fs[k];
            if (!f.is_array())
                throw InputError("facet " + std::to_string(k) + " must be an array, got " + f.dump());
            if (f.empty())
                throw InputError("facet " + std::to_string(k) + " is empty");
            std::vector<int> elems;
            for (const auto& v : f) {
                if (!v.is_number_integer())
                    throw InputError("facet " + std::to_string(k) + " has non-integer vertex " + v.dump());
                const auto x = v.get<long long>();
                if (x < 1)
                    throw InputError("vertex " + std::to_string(x) + " is not positive");
                if (x > n)
                    throw InputError("vertex " + std::to_string(x) + " exceeds n=" + std::to_string(n));
                elems.push_back(static_cast<int>(x));
            }
            facets.push_back(std::move(elems));
        }
    } else {
        throw InputError("missing key \"facets\"");
    }
    return closure(facets, n);
}

Complex parse_complex_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read complex file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_complex_json(buf.str());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

NodeSet parse_node_set(const std::string& text, int n)
{
    std::string body = text;
    if (!body.empty() && body.front() == '{') {
        if (body.back() != '}')
            throw InputError("unbalanced braces in set \"" + text + "\"");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> elems;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos)
            continue;
        const auto last = item.find_last_not_of(" \t");
        const std::string tok = item.substr(first, last - first + 1);
        if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 3)
            throw InputError("bad vertex \"" + tok + "\" in set \"" + text + "\"");
        elems.push_back(std::stoi(tok));
    }
    return NodeSet(n, elems);
}

namespace {

enum class Which { QF, Graph };

Presentation select_presentation(const Complex& c, Which which)
{
    if (which == Which::QF)
        return qF_presentation(c);
    return graph_presentation(Graph(c));
}

struct Options {
    std::string complex_path;
    int n = 0;
    std::string family;
    std::string a_set;
    std::string b_set;
    int i = 0;
    int j = 0;
    int max_degree = 2;
    std::string presentation = "qF";
    std::string poly;
    std::string checks;
    std::string format = "text";
    bool timing = false;
};

Which which_of(const std::string& s)
{
    if (s == "qF")
        return Which::QF;
    if (s == "graph")
        return Which::Graph;
    throw InputError("unknown presentation '" + s + "' (expected qF or graph)");
}

int cmd_closure(const Options& o, std::ostream& out)
{
    const Complex c = parse_complex_file(o.complex_path);
    for (const auto& f : c.faces())
        out << f.str() << '\n';
    return kExitOk;
}

int cmd_relations(const Options& o, std::ostream& out)
{
    if (o.family == "theorem") {
        Graph g = o.complex_path.empty() ? Graph::complete(o.n) : Graph(parse_complex_file(o.complex_path));
        for (const auto& r : theorem_relations(g))
            out << r.str() << '\n';
        return kExitOk;
    }
    if (o.n == 0)
        throw InputError("--n is required for family " + o.family);
    check_universe(o.n);
    const NodeSet a = parse_node_set(o.a_set, o.n);
    Polynomial p;
    if (o.family == "1")
        p = rel_additive(a, o.i, o.j);
    else if (o.family == "2")
        p = rel_multiplicative(a, o.i, o.j);
    else if (o.family == "4")
        p = rel_4(a, o.i, o.j);
    else if (o.family == "5")
        p = rel_5(a, o.i, o.j);
    else if (o.family == "9")
        p = rel_9(a, parse_node_set(o.b_set, o.n), o.i, o.j);
    else if (o.family == "10")
        p = rel_10(a, o.i, o.j);
    else
        throw InputError("unknown relation family '" + o.family + "' (expected 1, 2, 4, 5, 9, 10 or theorem)");
    out << p.str() << '\n';
    return kExitOk;
}

int cmd_hilbert(const Options& o, std::ostream& out)
{
    const Complex c = parse_complex_file(o.complex_path);
    const Presentation p = select_presentation(c, which_of(o.presentation));
    const auto dims = graded_dimension(p, o.max_degree);
    Json doc{{"schema", 1}, {"label", p.label()}, {"dims", dims}};
    out << doc.dump() << '\n';
    return kExitOk;
}

int cmd_membership(const Options& o, std::ostream& out)
{
    const Complex c = parse_complex_file(o.complex_path);
    const Presentation p = select_presentation(c, which_of(o.presentation));
    Polynomial q;
    try {
        q = parse_polynomial(o.poly, c.universe());
    } catch (const InputError& e) {
        throw InputError(std::string("--poly: ") + e.what());
    }
    if (!q.is_homogeneous())
        throw InputError("--poly must be homogeneous (split it into graded components)");
    if (q.degree() > o.max_degree)
        throw InputError("--poly has degree " + std::to_string(q.degree()) + " above --max-degree " +
                         std::to_string(o.max_degree));
    const TruncatedIdealBasis basis(p, std::max(q.degree(), 0));
    const bool member = basis.contains(q);
    out << (member ? "member" : "non-member") << '\n';
    out << "remainder: " << basis.reduce(q).str() << '\n';
    return member ? kExitOk : kExitFailure;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    RunConfig config;
    if (!o.complex_path.empty()) {
        config.complex = parse_complex_file(o.complex_path);
        config.n = config.complex->universe();
    } else if (o.n != 0) {
        config.n = o.n;
    }
    config.max_degree = o.max_degree;
    std::stringstream ss(o.checks);
    std::string name;
    while (std::getline(ss, name, ','))
        if (!name.empty())
            config.checks.push_back(name);
    if (o.format != "text" && o.format != "json")
        throw InputError("unknown format '" + o.format + "' (expected text or json)");
    const VerificationReport report = run_all(config);
    if (o.format == "json")
        out << report.to_json(o.timing).dump(2) << '\n';
    else
        out << report.to_text(o.timing);
    return report.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Noncommutative algebras of complexes and graphs: presentations, Hilbert tables, ideal membership "
                 "and identity checks",
                 "qalg"};
    app.require_subcommand(1);
    Options o;

    auto* closure_cmd = app.add_subcommand("closure", "Print the faces of a complex");
    closure_cmd->add_option("--complex", o.complex_path, "Complex JSON file")->required();

    auto* rel = app.add_subcommand("relations", "Print one relation in canonical form");
    rel->add_option("--family", o.family, "1, 2, 4, 5, 9, 10 or theorem")->required();
    rel->add_option("--n", o.n, "Number of nodes");
    rel->add_option("--A", o.a_set, "Node set A (A' for family 9), e.g. \"1,3\" or \"\"");
    rel->add_option("--B", o.b_set, "Node set B' (family 9)");
    rel->add_option("--i", o.i, "Index i");
    rel->add_option("--j", o.j, "Index j");
    rel->add_option("--complex", o.complex_path, "Graph JSON file (family theorem)");

    auto* hil = app.add_subcommand("hilbert", "Graded dimensions of Q(F) or of the graph presentation");
    hil->add_option("--complex", o.complex_path, "Complex JSON file")->required();
    hil->add_option("--max-degree", o.max_degree, "Highest degree")->required()->check(CLI::Range(0, 12));
    hil->add_option("--presentation", o.presentation, "qF or graph");

    auto* mem = app.add_subcommand("membership", "Test membership in the two-sided ideal");
    mem->add_option("--complex", o.complex_path, "Complex JSON file")->required();
    mem->add_option("--poly", o.poly, "Homogeneous polynomial expression")->required();
    mem->add_option("--max-degree", o.max_degree, "Highest admissible degree")->required()->check(CLI::Range(0, 12));
    mem->add_option("--presentation", o.presentation, "qF or graph");

    auto* ver = app.add_subcommand("verify", "Run the identity and theorem checks");
    auto* vc = ver->add_option("--complex", o.complex_path, "Complex JSON file");
    ver->add_option("--n", o.n, "Number of nodes (without --complex)")->excludes(vc);
    ver->add_option("--checks", o.checks, "Comma-separated check names (default: all)");
    ver->add_option("--max-degree", o.max_degree, "Degree bound")->check(CLI::Range(0, 12));
    ver->add_option("--format", o.format, "text or json");
    ver->add_flag("--timing", o.timing, "Report wall-clock milliseconds per entry");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*closure_cmd)
            return cmd_closure(o, out);
        if (*rel)
            return cmd_relations(o, out);
        if (*hil)
            return cmd_hilbert(o, out);
        if (*mem)
            return cmd_membership(o, out);
        return cmd_verify(o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::length_error& e) {
        err << "error: resource bound hit: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace qalg::cli

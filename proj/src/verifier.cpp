#include "qalg/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>

namespace qalg {

namespace {

constexpr std::size_t kMaxListedFailures = 5;

template <class F>
ReportEntry timed(std::string name, Json params, F&& body)
{
    ReportEntry entry;
    entry.check = std::move(name);
    entry.params = std::move(params);
    const auto start = std::chrono::steady_clock::now();
    try {
        body(entry);
    } catch (const std::length_error& e) {
        entry.pass = false;
        entry.witness = Json{{"bound_hit", e.what()}};
    }
    entry.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return entry;
}

/// Every (A, i, j) with i != j and i, j outside A.
template <class F>
void for_each_triple(int n, F&& f)
{
    const NodeSet::Mask full = NodeSet::full_mask(n);
    for (NodeSet::Mask m = 0; m <= full; ++m) {
        const NodeSet a = NodeSet::from_mask(n, m);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j && !a.contains(i) && !a.contains(j))
                    f(a, i, j);
    }
}

Json triple_json(const NodeSet& a, int i, int j) { return Json{{"A", a.str()}, {"i", i}, {"j", j}}; }

/// Degree-1 presentation carrying only the additive relations.
Presentation additive_presentation(int n, std::vector<Polynomial> extra = {})
{
    std::vector<Polynomial> rels;
    for_each_triple(n, [&](const NodeSet& a, int i, int j) { rels.push_back(rel_additive(a, i, j)); });
    for (auto& p : extra)
        rels.push_back(std::move(p));
    return Presentation("additive relations n=" + std::to_string(n), n, z_alphabet(n), std::move(rels));
}

Json complex_json(const Complex& c)
{
    Json facets = Json::array();
    for (const auto& f : c.facets())
        facets.push_back(f.elements());
    return Json{{"n", c.universe()}, {"facets", facets}};
}

Json dims_json(const std::vector<std::uint64_t>& dims) { return Json(dims); }

}  // namespace

std::uint64_t multiset_count(int n, int e)
{
    // C(n+e-1, e), computed incrementally; exact for the small sizes used here.
    std::uint64_t r = 1;
    for (int k = 1; k <= e; ++k)
        r = r * static_cast<std::uint64_t>(n + k - 1) / static_cast<std::uint64_t>(k);
    return r;
}

std::string to_string(PairReading r)
{
    switch (r) {
    case PairReading::NonEdge:
        return "non_edge";
    case PairReading::InstanceGuard:
        return "instance_guard";
    case PairReading::ProofSound:
        return "proof_sound";
    }
    return "?";
}

std::optional<std::pair<int, int>> qualifying_indices(const Complex& c, const NodeSet& a, const NodeSet& b,
                                                      PairReading reading)
{
    const int n = c.universe();
    for (int i : a.elements())
        for (int j : b.elements()) {
            if (i == j)
                continue;
            bool ok = false;
            switch (reading) {
            case PairReading::NonEdge:
                ok = !c.is_face(NodeSet(n, {i, j}));
                break;
            case PairReading::InstanceGuard: {
                ok = true;
                const NodeSet pool = a.without(i) | b.without(j);
                for (const auto& e : subsets(pool))
                    if (c.is_face(e.with(i).with(j))) {
                        ok = false;
                        break;
                    }
                break;
            }
            case PairReading::ProofSound:
                ok = true;
                for (int x : b.elements())
                    if (x != i && c.is_face(NodeSet(n, {i, x})))
                        ok = false;
                for (int y : a.elements())
                    if (y != j && c.is_face(NodeSet(n, {y, j})))
                        ok = false;
                break;
            }
            if (ok)
                return std::pair{i, j};
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

ReportEntry check_basis_lemma(int n)
{
    return timed("basis_lemma", Json{{"n", n}}, [&](ReportEntry& entry) {
        const std::uint64_t expected = (std::uint64_t{1} << n) - 1;
        const auto z_dims = graded_dimension(qn_presentation(n, GeneratorForm::Z), 1);
        const auto u_dims = graded_dimension(qn_presentation(n, GeneratorForm::U), 1);

        // The u's written in z must be independent modulo the additive span.
        std::vector<Polynomial> us;
        for (const auto& g : u_alphabet(n)) {
            const NodeSet a = NodeSet::from_mask(n, g.set_mask());
            us.push_back(u_in_z(a, a.min_element()));
        }
        const std::size_t additive_rank = TruncatedIdealBasis(additive_presentation(n), 1).slice(1).rank();
        const std::size_t joint_rank = TruncatedIdealBasis(additive_presentation(n, us), 1).slice(1).rank();
        const bool independent = joint_rank == additive_rank + expected;

        // u -> z -> u is exact for every choice of i; z -> u -> z is exact
        // when u(D+i) is written back through the same index i.
        bool round_trip = true;
        Json broken = Json::array();
        const auto z_to_u = z_to_u_map(n);
        for (const auto& g : u_alphabet(n)) {
            const NodeSet a = NodeSet::from_mask(n, g.set_mask());
            for (int i : a.elements()) {
                const Polynomial back = substitute(u_in_z(a, i), z_to_u);
                if (back != Polynomial(g, n)) {
                    round_trip = false;
                    if (broken.size() < kMaxListedFailures)
                        broken.push_back(Json{{"u", g.str()}, {"i", i}, {"got", back.str()}});
                }
            }
        }
        for (const auto& g : z_alphabet(n)) {
            const NodeSet a = NodeSet::from_mask(n, g.set_mask());
            const int i = g.index();
            SubstitutionMap via_i;
            for (const auto& d : subsets(a)) {
                const NodeSet s = d.with(i);
                via_i.emplace(Generator::u(s), u_in_z(s, i));
            }
            const Polynomial back = substitute(z_in_u(a, i), via_i);
            if (back != Polynomial(g, n)) {
                round_trip = false;
                if (broken.size() < kMaxListedFailures)
                    broken.push_back(Json{{"z", g.str()}, {"got", back.str()}});
            }
        }

        entry.pass = z_dims[1] == expected && u_dims[1] == expected && independent && round_trip;
        entry.witness = Json{{"expected", expected},
                             {"z_form_dims", dims_json(z_dims)},
                             {"u_form_dims", dims_json(u_dims)},
                             {"additive_rank", additive_rank},
                             {"independent", independent},
                             {"round_trip", round_trip}};
        if (!broken.empty())
            entry.witness["round_trip_failures"] = broken;
    });
}

ReportEntry check_eq3_welldefined(int n)
{
    return timed("eq3_welldefined", Json{{"n", n}}, [&](ReportEntry& entry) {
        const TruncatedIdealBasis additive(additive_presentation(n), 1);
        std::size_t instances = 0;
        Json failures = Json::array();
        for (const auto& g : u_alphabet(n)) {
            const NodeSet a = NodeSet::from_mask(n, g.set_mask());
            if (a.size() < 2)
                continue;
            const auto elems = a.elements();
            for (std::size_t x = 0; x < elems.size(); ++x)
                for (std::size_t y = x + 1; y < elems.size(); ++y) {
                    ++instances;
                    const Polynomial diff = u_in_z(a, elems[x]) - u_in_z(a, elems[y]);
                    if (!additive.contains(diff) && failures.size() < kMaxListedFailures)
                        failures.push_back(Json{{"A", a.str()},
                                                {"i", elems[x]},
                                                {"i_prime", elems[y]},
                                                {"remainder", additive.reduce(diff).str()}});
                }
        }
        entry.pass = failures.empty();
        entry.witness = Json{{"instances", instances}, {"failures", failures}};
    });
}

ReportEntry check_corollary(int n)
{
    return timed("corollary", Json{{"n", n}}, [&](ReportEntry& entry) {
        const auto z_to_u = z_to_u_map(n);
        std::size_t instances = 0;
        Json failures = Json::array();
        auto fail = [&](const NodeSet& a, int i, int j, const char* what, const Polynomial& residual) {
            if (failures.size() < kMaxListedFailures) {
                Json f = triple_json(a, i, j);
                f["identity"] = what;
                f["residual"] = residual.str();
                failures.push_back(std::move(f));
            }
        };
        for_each_triple(n, [&](const NodeSet& a, int i, int j) {
            ++instances;
            const Polynomial add_image = substitute(rel_additive(a, i, j), z_to_u);
            if (!add_image.is_zero())
                fail(a, i, j, "additive image vanishes", add_image);
            const Polynomial r4 = rel_4(a, i, j);
            const Polynomial mul_residual = substitute(rel_multiplicative(a, i, j), z_to_u) - r4;
            if (!mul_residual.is_zero())
                fail(a, i, j, "multiplicative image equals rel_4", mul_residual);
            const Polynomial r5_residual = rel_5(a, i, j) + r4;
            if (!r5_residual.is_zero())
                fail(a, i, j, "rel_5 equals -rel_4", r5_residual);
        });
        entry.pass = failures.empty();
        entry.witness = Json{{"instances", instances}, {"failures", failures}};
    });
}

ReportEntry check_identity_11(int n)
{
    return timed("identity_11", Json{{"n", n}}, [&](ReportEntry& entry) {
        std::size_t instances = 0;
        Json failures = Json::array();
        for_each_triple(n, [&](const NodeSet& a, int i, int j) {
            for (int k : a.elements()) {
                ++instances;
                const Polynomial residual = identity_11_residual(a, i, j, k);
                if (!residual.is_zero() && failures.size() < kMaxListedFailures) {
                    Json f = triple_json(a, i, j);
                    f["k"] = k;
                    f["residual"] = residual.str();
                    failures.push_back(std::move(f));
                }
            }
        });
        entry.pass = failures.empty();
        entry.witness = Json{{"instances", instances}, {"failures", failures}};
    });
}

ReportEntry check_proposition(const Complex& c, int degree_bound)
{
    Json params = complex_json(c);
    params["degree_bound"] = degree_bound;
    return timed("proposition", std::move(params), [&](ReportEntry& entry) {
        if (degree_bound < 2)
            throw InputError("proposition check needs degree_bound >= 2");
        const int n = c.universe();
        const TruncatedIdealBasis ideal(qF_presentation(c), degree_bound);
        const auto alphabet = ideal.presentation().alphabet();

        Json readings = Json::object();
        std::vector<std::pair<std::uint32_t, std::uint32_t>> non_edge_pairs, guard_pairs;
        bool non_edge_ok = true;
        for (PairReading reading : {PairReading::NonEdge, PairReading::InstanceGuard, PairReading::ProofSound}) {
            std::size_t pairs = 0, failing = 0, rel9_failing = 0, sub_failing = 0, unstable = 0;
            Json listed = Json::array();
            for (const auto& a : c.faces())
                for (const auto& b : c.faces()) {
                    const auto ij = qualifying_indices(c, a, b, reading);
                    if (!ij)
                        continue;
                    ++pairs;
                    if (reading == PairReading::NonEdge)
                        non_edge_pairs.emplace_back(a.mask(), b.mask());
                    if (reading == PairReading::InstanceGuard)
                        guard_pairs.emplace_back(a.mask(), b.mask());
                    const auto [i, j] = *ij;
                    const Polynomial comm = commutator(Polynomial::u(a), Polynomial::u(b));
                    const bool member = ideal.contains(comm);
                    if (!member) {
                        ++failing;
                        if (listed.size() < kMaxListedFailures)
                            listed.push_back(Json{{"A", a.str()},
                                                  {"B", b.str()},
                                                  {"i", i},
                                                  {"j", j},
                                                  {"remainder", ideal.reduce(comm).str()}});
                    } else if (degree_bound >= 3) {
                        for (const auto& g : alphabet) {
                            const Polynomial x(g, n);
                            if (!ideal.contains(x * comm) || !ideal.contains(comm * x))
                                ++unstable;
                        }
                    }
                    // Intermediate relations (9) and (8) of the inductive argument.
                    for (const auto& ap : subsets(a.without(i)))
                        for (const auto& bp : subsets(b.without(j))) {
                            if (!ideal.contains(rel_9(ap, bp, i, j)))
                                ++rel9_failing;
                            if (!ideal.contains(commutator(Polynomial::u(ap.with(i)), Polynomial::u(bp.with(j)))))
                                ++sub_failing;
                        }
                }
            const bool ok = failing == 0 && rel9_failing == 0 && sub_failing == 0 && unstable == 0;
            if (reading == PairReading::NonEdge)
                non_edge_ok = ok;
            readings[to_string(reading)] = Json{{"pairs", pairs},
                                                {"failing_pairs", failing},
                                                {"rel_9_failures", rel9_failing},
                                                {"sub_commutator_failures", sub_failing},
                                                {"stability_failures", unstable},
                                                {"pass", ok},
                                                {"failures", listed}};
        }
        entry.pass = non_edge_ok;
        entry.witness = Json{{"reading", to_string(PairReading::NonEdge)},
                             {"readings_agree", non_edge_pairs == guard_pairs},
                             {"readings", readings}};
    });
}

ReportEntry check_theorem(const Graph& g)
{
    return timed("theorem", complex_json(g.as_complex()), [&](ReportEntry& entry) {
        const int n = g.universe();
        const Complex c = g.as_complex();
        const TruncatedIdealBasis qf(qF_presentation(c), 2);
        const TruncatedIdealBasis gp(graph_presentation(g), 2);
        Json failures = Json::array();
        auto note = [&](Json f) {
            if (failures.size() < kMaxListedFailures)
                failures.push_back(std::move(f));
        };

        // (a) the relations hold in Q(F)
        std::size_t relations = 0, relations_failing = 0;
        for (const auto& r : theorem_relation_instances(g)) {
            ++relations;
            if (!qf.contains(r.poly)) {
                ++relations_failing;
                note(Json{{"part", "relation"},
                          {"family", r.family},
                          {"indices", r.indices},
                          {"remainder", qf.reduce(r.poly).str()}});
            }
        }

        // (b) the one-step expansion of R(A,i,j) is an identity
        std::size_t expansions = 0, expansions_failing = 0;
        // (d) R(A,i,j) follows from the graph relations alone
        std::size_t inductions = 0, inductions_failing = 0;
        for_each_triple(n, [&](const NodeSet& a, int i, int j) {
            for (int k : a.elements()) {
                ++expansions;
                const Polynomial residual = identity_11_residual(a, i, j, k);
                if (!residual.is_zero()) {
                    ++expansions_failing;
                    note(Json{{"part", "identity_11"}, {"A", a.str()}, {"i", i}, {"j", j}, {"k", k},
                              {"residual", residual.str()}});
                }
            }
            ++inductions;
            const Polynomial r = restrict_to_graph(rel_10(a, i, j), g);
            if (!gp.contains(r)) {
                ++inductions_failing;
                note(Json{{"part", "induction"}, {"A", a.str()}, {"i", i}, {"j", j},
                          {"remainder", gp.reduce(r).str()}});
            }
        });

        // (c) the three-index relation (12) holds in Q(F)
        std::size_t triples = 0, triples_failing = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k) {
                    if (i == j || j == k || i == k)
                        continue;
                    ++triples;
                    const Polynomial p = rel_12(n, i, j, k);
                    if (!qf.contains(p)) {
                        ++triples_failing;
                        note(Json{{"part", "eq12"}, {"i", i}, {"j", j}, {"k", k}, {"remainder", qf.reduce(p).str()}});
                    }
                }

        entry.pass = relations_failing + expansions_failing + triples_failing + inductions_failing == 0;
        entry.witness = Json{{"relations", relations},
                             {"relations_failing", relations_failing},
                             {"identity_11", expansions},
                             {"identity_11_failing", expansions_failing},
                             {"eq12", triples},
                             {"eq12_failing", triples_failing},
                             {"induction", inductions},
                             {"induction_failing", inductions_failing},
                             {"failures", failures}};
    });
}

ReportEntry check_presentation_equivalence(const Graph& g, int d)
{
    Json params = complex_json(g.as_complex());
    params["max_degree"] = d;
    return timed("presentation_equivalence", std::move(params), [&](ReportEntry& entry) {
        const auto qf = graded_dimension(qF_presentation(g.as_complex()), d);
        const auto gp = graded_dimension(graph_presentation(g), d);
        entry.pass = qf == gp;
        entry.witness = Json{{"qF", dims_json(qf)},
                             {"graph", dims_json(gp)},
                             {"certified_up_to_degree", d}};
    });
}

ReportEntry check_commutative_case(int n, int d)
{
    return timed("commutative_case", Json{{"n", n}, {"max_degree", d}}, [&](ReportEntry& entry) {
        const auto dims = graded_dimension(qF_presentation(closure(std::vector<NodeSet>{}, n)), d);
        std::vector<std::uint64_t> expected;
        for (int e = 0; e <= d; ++e)
            expected.push_back(multiset_count(n, e));
        entry.pass = dims == expected;
        entry.witness = Json{{"dims", dims_json(dims)}, {"expected", dims_json(expected)}};
    });
}

// ---------------------------------------------------------------------------

bool VerificationReport::passed() const
{
    return std::all_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.pass; });
}

Json VerificationReport::to_json(bool with_timing) const
{
    Json list = Json::array();
    for (const auto& e : entries)
        list.push_back(Json{{"check", e.check},
                            {"params", e.params},
                            {"pass", e.pass},
                            {"witness", e.witness},
                            {"millis", with_timing ? e.millis : 0.0}});
    return Json{{"schema", 1}, {"pass", passed()}, {"entries", list}};
}

std::string VerificationReport::to_text(bool with_timing) const
{
    std::ostringstream out;
    for (const auto& e : entries) {
        out << (e.pass ? "PASS " : "FAIL ") << e.check << ' ' << e.params.dump();
        if (with_timing)
            out << " (" << static_cast<long long>(e.millis) << " ms)";
        out << '\n';
        if (!e.pass)
            out << "  witness: " << e.witness.dump() << '\n';
    }
    const auto failed = std::count_if(entries.begin(), entries.end(), [](const ReportEntry& e) { return !e.pass; });
    out << (passed() ? "all " : "") << entries.size() - failed << "/" << entries.size() << " checks passed\n";
    return out.str();
}

const std::vector<std::string>& known_checks()
{
    static const std::vector<std::string> names = {
        "basis_lemma", "commutative_case", "corollary", "eq3_welldefined",
        "identity_11", "presentation_equivalence", "proposition", "theorem",
    };
    return names;
}

VerificationReport run_all(const RunConfig& config)
{
    check_universe(config.n);
    if (config.max_degree < 0)
        throw InputError("max degree must be non-negative");
    std::vector<std::string> names = config.checks.empty() ? known_checks() : config.checks;
    for (const auto& name : names)
        if (std::find(known_checks().begin(), known_checks().end(), name) == known_checks().end())
            throw InputError("unknown check '" + name + "'");
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());

    const Complex complex = config.complex ? *config.complex : Graph::complete(config.n).as_complex();
    const int n = complex.universe();
    const int d = config.max_degree;

    auto run_one = [complex, n, d](const std::string& name) -> ReportEntry {
        if (name == "basis_lemma")
            return check_basis_lemma(n);
        if (name == "eq3_welldefined")
            return check_eq3_welldefined(n);
        if (name == "corollary")
            return check_corollary(n);
        if (name == "identity_11")
            return check_identity_11(n);
        if (name == "commutative_case")
            return check_commutative_case(n, d);
        if (name == "proposition")
            return check_proposition(complex, std::max(d, 2));
        if (complex.dimension() > 1) {
            ReportEntry e;
            e.check = name;
            e.params = complex_json(complex);
            e.witness = Json{{"error", "complex of dimension " + std::to_string(complex.dimension()) +
                                           " is not a graph"}};
            return e;
        }
        const Graph g(complex);
        if (name == "theorem")
            return check_theorem(g);
        return check_presentation_equivalence(g, d);
    };

    std::vector<std::future<ReportEntry>> jobs;
    for (const auto& name : names)
        jobs.push_back(std::async(std::launch::async, run_one, name));
    VerificationReport report;
    for (auto& job : jobs)
        report.entries.push_back(job.get());
    std::stable_sort(report.entries.begin(), report.entries.end(), [](const ReportEntry& a, const ReportEntry& b) {
        if (a.check != b.check)
            return a.check < b.check;
        return a.params.dump() < b.params.dump();
    });
    return report;
}

}  // namespace qalg

#pragma once

#include "qalg/complexes.hpp"
#include "qalg/presentations.hpp"
#include "qalg/quotient_engine.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qalg {

using Json = nlohmann::ordered_json;

struct ReportEntry {
    std::string check;
    Json params;
    bool pass = false;
    /// Dimension table, failing instances with their remainders, counts.
    Json witness;
    double millis = 0;
};

struct VerificationReport {
    std::vector<ReportEntry> entries;

    bool passed() const;
    /// {"schema":1,"pass":...,"entries":[{check,params,pass,witness,millis},...]}
    Json to_json(bool with_timing = true) const;
    std::string to_text(bool with_timing = true) const;
};

/// Which pairs (A,B) of faces the commutator-vanishing check applies to.
enum class PairReading {
    /// Some i in A, j in B, i != j, with {i,j} not a face.
    NonEdge,
    /// Some i in A, j in B with E+{i,j} not a face for every E inside (A-i)+(B-j).
    InstanceGuard,
    /// Some i in A, j in B with {i,b} not a face for every b in B other than i,
    /// and {a,j} not a face for every a in A other than j. Exactly what lets
    /// the full relation (5) over A'+B' collapse to the partial sum (9).
    ProofSound,
};

std::string to_string(PairReading r);

/// The witness pair (i,j) for (A,B) under `reading`, if any.
std::optional<std::pair<int, int>> qualifying_indices(const Complex& c, const NodeSet& a, const NodeSet& b,
                                                      PairReading reading);

ReportEntry check_basis_lemma(int n);
ReportEntry check_eq3_welldefined(int n);
ReportEntry check_corollary(int n);
ReportEntry check_identity_11(int n);
ReportEntry check_proposition(const Complex& c, int degree_bound = 2);
ReportEntry check_theorem(const Graph& g);
ReportEntry check_presentation_equivalence(const Graph& g, int d);
ReportEntry check_commutative_case(int n, int d);

/// Binomial coefficient C(n+e-1, e): commutative monomials of degree e in n variables.
std::uint64_t multiset_count(int n, int e);

struct RunConfig {
    /// Empty means every known check.
    std::vector<std::string> checks;
    int n = 3;
    int max_degree = 2;
    /// Complex for proposition/theorem/presentation_equivalence; the complete
    /// graph on n nodes when absent.
    std::optional<Complex> complex;
};

const std::vector<std::string>& known_checks();

/// Runs the named checks (concurrently), entries sorted by check name then
/// params. Throws InputError for an unknown check name.
VerificationReport run_all(const RunConfig& config);

}  // namespace qalg

#pragma once

#include "bk/coloring.hpp"
#include "bk/enumerate.hpp"
#include "bk/graph.hpp"
#include "bk/invariants.hpp"
#include "bk/patterns.hpp"
#include "bk/recolor.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bk {

// One knob block for every harness entry point; the CLI loads it from JSON
// and echoes it back into report headers so runs stay reproducible.
struct RunConfig {
    std::uint64_t seed = 1;
    int jobs = 1;
    std::uint64_t solver_node_budget = kDefaultNodeBudget;
    std::uint64_t canonical_node_budget = kCanonicalNodeBudget;
    std::uint64_t extend_states = 100'000;
    int dense_t = 3;
    int min_delta = 9; // degree threshold of the inequality's hypothesis

    // samplers
    int multipartite_count = 200;
    int multipartite_min_parts = 10;
    int multipartite_max_parts = 12;
    int multipartite_max_part_size = 3;

    int line_graph_count = 200;
    int base_min = 10;
    int base_max = 12;
    double base_edge_probability = 0.5;

    int random_count = 100;
    int random_min = 12;
    int random_max = 14;
    double random_edge_probability = 0.88;

    // give up on a family after attempt_factor * count draws
    int attempt_factor = 60;
};

nlohmann::json run_config_to_json(const RunConfig& cfg);
RunConfig run_config_from_json(const nlohmann::json& j); // unknown keys rejected

// Everything the toolkit can say about one graph. omega / chi / inequality
// stay empty when a solver ran out of budget; complete says which case
// applies. critical means: hypothesis met, inequality failed. That line is
// the whole point of the harness.
struct ConjectureReport {
    std::string graph_id; // graph6
    int n = 0;
    int delta = 0;
    std::optional<int> omega;
    std::optional<int> chi;
    ClassMembership memberships;
    std::optional<bool> inequality_holds; // chi <= max(omega, delta - 1)
    bool hypothesis_met = false;          // delta >= min_delta and in a claimed class
    bool critical = false;
    std::vector<int> clique_witness;
    std::optional<std::vector<int>> chi_witness;
    bool complete = true;
    std::string error;

    // recolor drill, filled by the samplers when omega <= delta - 1
    std::string recolor_route = "skipped"; // extension | fallback | missing | skipped
    std::optional<std::vector<int>> recolor_witness;
    std::string recolor_trace; // JSON array of moves, extension route only

    double omega_seconds = 0, chi_seconds = 0, classify_seconds = 0;
    std::uint64_t omega_nodes = 0, chi_nodes = 0;
};

ConjectureReport verify_graph(const Graph& g, const RunConfig& cfg = {});

// Hypothesis scan for the structural lemma: a candidate is connected, not
// complete, has delta >= min_delta and chi > max(delta - 1, omega). For
// candidates the two conclusions are checked outright: chi = delta > omega,
// and every single-vertex deletion drops chi by exactly one.
struct LemmaReport {
    std::string graph_id;
    int n = 0;
    int delta = 0;
    bool connected = false;
    bool complete_graph = false;
    std::optional<int> omega;
    std::optional<int> chi;
    bool candidate = false;
    bool chi_equals_delta = false;   // candidate only
    bool omega_below_chi = false;    // candidate only
    std::vector<int> deletion_chis;  // candidate only, indexed by deleted vertex
    bool deletions_drop = false;     // candidate only: all chi(G-u) == chi-1
    bool complete = true;
    std::string error;
};

LemmaReport lemma_check(const Graph& g, const RunConfig& cfg = {});

struct SweepSummary {
    int n_max = 0;
    std::vector<std::uint64_t> classes_per_order; // [n] = isomorphism classes seen
    std::uint64_t graphs = 0;
    std::uint64_t connected_graphs = 0;
    std::uint64_t brooks_violations = 0;
    std::uint64_t inequality_failures = 0; // no hypothesis filter; small graphs do this
    std::uint64_t critical_reports = 0;
    std::uint64_t incomplete_reports = 0;
    std::uint64_t inclusion_violations = 0;
    std::uint64_t detector_checks = 0;
    std::uint64_t detector_mismatches = 0;
    std::map<std::string, std::uint64_t> class_counts;
};

// Every isomorphism class up to n_max, verified and cross-checked: Brooks
// exceptions, the freeness inclusion lattice, and (n <= 7) the backtracking
// detector against the brute-force reference.
SweepSummary sweep_enumerated(int n_max, const RunConfig& cfg = {},
                              std::vector<ConjectureReport>* reports = nullptr);

struct SampleSummary {
    std::uint64_t requested = 0;
    std::uint64_t produced = 0;
    std::uint64_t shortfall = 0;
    std::map<std::string, std::uint64_t> family_produced;
    std::map<std::string, std::uint64_t> family_attempts;
    std::uint64_t hypothesis_met = 0;
    std::uint64_t critical_reports = 0;
    std::uint64_t incomplete_reports = 0;
    std::uint64_t recolor_attempted = 0; // instances with omega <= delta - 1
    std::uint64_t recolor_extension = 0;
    std::uint64_t recolor_fallback = 0;
    std::uint64_t recolor_missing = 0; // no witness at all; must stay zero
};

// Seeded generators for graphs that actually meet the hypothesis: complete
// multipartite (dense neighborhoods), line graphs of random bases (claw- and
// chair-free), and rejection-filtered dense G(n, p). Each kept instance gets
// the full verify treatment plus the delete-and-recolor drill.
SampleSummary sample_families(const RunConfig& cfg,
                              std::vector<ConjectureReport>* reports = nullptr);

// C5[K3]: the inequality fails (chi = 8 > 7 = max(omega, delta - 1)) while
// the graph sits in all four claimed classes; only delta = 8 < 9 keeps it
// from being a counterexample, witnessing that the degree threshold cannot
// move below 9. Throws logic_error if any of that stops holding.
ConjectureReport sharpness_witness(const RunConfig& cfg = {});

// JSON records render color values 1-based; the in-memory API is 0-based
std::vector<int> colors_1based(std::vector<int> assignment);

nlohmann::json membership_json(const ClassMembership& m);
nlohmann::json report_to_json(const ConjectureReport& r);
nlohmann::json lemma_report_to_json(const LemmaReport& r);
nlohmann::json sweep_summary_to_json(const SweepSummary& s);
nlohmann::json sample_summary_to_json(const SampleSummary& s);

// graph6 id, or a hash-based stand-in for the two orders graph6 cannot hold
std::string graph_id_of(const Graph& g);

} // namespace bk

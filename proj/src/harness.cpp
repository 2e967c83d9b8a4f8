#include "bk/harness.hpp"

#include "bk/errors.hpp"
#include "bk/families.hpp"
#include "bk/graph6.hpp"
#include "bk/prng.hpp"
#include "bk/reference.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace bk {

namespace {

using json = nlohmann::json;
using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

// dynamic work queue; results land by index so emission order never depends
// on scheduling
template <typename F>
void parallel_for(int count, int jobs, F&& body)
{
    jobs = std::max(1, std::min(jobs, count));
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::atomic<int> next{0};
    std::mutex err_mutex;
    std::exception_ptr err;
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(err_mutex);
                    if (!err)
                        err = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (err)
        std::rethrow_exception(err);
}

int max_degree_vertex(const Graph& g)
{
    int u = 0;
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) > g.degree(u))
            u = v;
    return u;
}

} // namespace

std::string graph_id_of(const Graph& g)
{
    if (g.vertex_count() <= kGraph6MaxVertices)
        return write_graph6(g);
    // graph6 short form tops out at 62; fall back to a content digest
    std::uint64_t h = 0x9e3779b97f4a7c15ULL * (g.vertex_count() + 1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        h ^= g.neighbors(v).bits() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "order%d:%016llx", g.vertex_count(),
                  static_cast<unsigned long long>(h));
    return buf;
}

json run_config_to_json(const RunConfig& c)
{
    return json{
        {"seed", c.seed},
        {"jobs", c.jobs},
        {"solver_node_budget", c.solver_node_budget},
        {"canonical_node_budget", c.canonical_node_budget},
        {"extend_states", c.extend_states},
        {"dense_t", c.dense_t},
        {"min_delta", c.min_delta},
        {"multipartite_count", c.multipartite_count},
        {"multipartite_min_parts", c.multipartite_min_parts},
        {"multipartite_max_parts", c.multipartite_max_parts},
        {"multipartite_max_part_size", c.multipartite_max_part_size},
        {"line_graph_count", c.line_graph_count},
        {"base_min", c.base_min},
        {"base_max", c.base_max},
        {"base_edge_probability", c.base_edge_probability},
        {"random_count", c.random_count},
        {"random_min", c.random_min},
        {"random_max", c.random_max},
        {"random_edge_probability", c.random_edge_probability},
        {"attempt_factor", c.attempt_factor},
    };
}

RunConfig run_config_from_json(const json& j)
{
    RunConfig c;
    json known = run_config_to_json(c);
    for (auto& [key, value] : j.items()) {
        if (!known.contains(key))
            throw std::invalid_argument("config: unknown key '" + key + "'");
    }

    auto get_u64 = [&](const char* key, std::uint64_t& out) {
        if (j.contains(key))
            out = j.at(key).get<std::uint64_t>();
    };
    auto get_int = [&](const char* key, int& out) {
        if (j.contains(key))
            out = j.at(key).get<int>();
    };
    auto get_double = [&](const char* key, double& out) {
        if (j.contains(key))
            out = j.at(key).get<double>();
    };

    get_u64("seed", c.seed);
    get_int("jobs", c.jobs);
    get_u64("solver_node_budget", c.solver_node_budget);
    get_u64("canonical_node_budget", c.canonical_node_budget);
    get_u64("extend_states", c.extend_states);
    get_int("dense_t", c.dense_t);
    get_int("min_delta", c.min_delta);
    get_int("multipartite_count", c.multipartite_count);
    get_int("multipartite_min_parts", c.multipartite_min_parts);
    get_int("multipartite_max_parts", c.multipartite_max_parts);
    get_int("multipartite_max_part_size", c.multipartite_max_part_size);
    get_int("line_graph_count", c.line_graph_count);
    get_int("base_min", c.base_min);
    get_int("base_max", c.base_max);
    get_double("base_edge_probability", c.base_edge_probability);
    get_int("random_count", c.random_count);
    get_int("random_min", c.random_min);
    get_int("random_max", c.random_max);
    get_double("random_edge_probability", c.random_edge_probability);
    get_int("attempt_factor", c.attempt_factor);

    if (c.jobs < 1)
        throw std::invalid_argument("config: jobs must be at least 1");
    if (c.dense_t < 0)
        throw std::invalid_argument("config: dense_t must be nonnegative");
    if (!(c.base_edge_probability >= 0.0 && c.base_edge_probability <= 1.0)
        || !(c.random_edge_probability >= 0.0 && c.random_edge_probability <= 1.0))
        throw std::invalid_argument("config: edge probabilities must lie in [0, 1]");
    if (c.multipartite_count < 0 || c.line_graph_count < 0 || c.random_count < 0)
        throw std::invalid_argument("config: sample counts must be nonnegative");
    if (c.multipartite_min_parts < 1 || c.multipartite_min_parts > c.multipartite_max_parts
        || c.multipartite_max_part_size < 1)
        throw std::invalid_argument("config: bad multipartite part bounds");
    if (c.base_min < 1 || c.base_min > c.base_max || c.base_max > kMaxVertices)
        throw std::invalid_argument("config: bad line graph base bounds");
    if (c.random_min < 1 || c.random_min > c.random_max || c.random_max > kMaxVertices)
        throw std::invalid_argument("config: bad random order bounds");
    if (c.attempt_factor < 1)
        throw std::invalid_argument("config: attempt_factor must be at least 1");
    return c;
}

ConjectureReport verify_graph(const Graph& g, const RunConfig& cfg)
{
    ConjectureReport r;
    r.graph_id = graph_id_of(g);
    r.n = g.vertex_count();
    r.delta = degree_profile(g).max_degree;

    auto t0 = clock_type::now();
    r.memberships = classify_graph(g, cfg.dense_t);
    r.classify_seconds = seconds_since(t0);

    try {
        t0 = clock_type::now();
        CliqueResult q = max_clique(g, cfg.solver_node_budget);
        r.omega_seconds = seconds_since(t0);
        r.omega_nodes = q.stats.nodes;
        r.omega = q.omega;
        for (int v : q.witness)
            r.clique_witness.push_back(v);

        t0 = clock_type::now();
        ChromaticResult c = chromatic_number(g, cfg.solver_node_budget);
        r.chi_seconds = seconds_since(t0);
        r.chi_nodes = c.stats.nodes;
        r.chi = c.chi;
        r.chi_witness = c.witness.assignment();
    } catch (const BudgetExceeded& e) {
        r.complete = false;
        r.error = e.what();
    }

    r.hypothesis_met = r.delta >= cfg.min_delta && r.memberships.in_claimed_class();
    if (r.complete) {
        r.inequality_holds = *r.chi <= std::max(*r.omega, r.delta - 1);
        r.critical = r.hypothesis_met && !*r.inequality_holds;
    }
    return r;
}

LemmaReport lemma_check(const Graph& g, const RunConfig& cfg)
{
    LemmaReport r;
    r.graph_id = graph_id_of(g);
    r.n = g.vertex_count();
    r.delta = degree_profile(g).max_degree;
    r.connected = is_connected(g);
    r.complete_graph = is_complete_graph(g);

    try {
        r.omega = max_clique(g, cfg.solver_node_budget).omega;
        r.chi = chromatic_number(g, cfg.solver_node_budget).chi;
        r.candidate = r.connected && !r.complete_graph && r.delta >= cfg.min_delta
                      && *r.chi > std::max(r.delta - 1, *r.omega);
        if (r.candidate) {
            r.chi_equals_delta = (*r.chi == r.delta);
            r.omega_below_chi = (*r.omega < *r.chi);
            r.deletions_drop = true;
            for (int u = 0; u < r.n; ++u) {
                Graph h = induced_subgraph(g, g.vertices() - VertexSet::single(u));
                int hchi = chromatic_number(h, cfg.solver_node_budget).chi;
                r.deletion_chis.push_back(hchi);
                if (hchi != *r.chi - 1)
                    r.deletions_drop = false;
            }
        }
    } catch (const BudgetExceeded& e) {
        r.complete = false;
        r.error = e.what();
    }
    return r;
}

SweepSummary sweep_enumerated(int n_max, const RunConfig& cfg, std::vector<ConjectureReport>* reports)
{
    if (n_max < 1 || n_max > kEnumerationCap)
        throw std::invalid_argument("sweep: n_max must lie in [1, " + std::to_string(kEnumerationCap)
                                    + "]");

    SweepSummary s;
    s.n_max = n_max;
    s.classes_per_order.assign(n_max + 1, 0);

    for (int n = 1; n <= n_max; ++n) {
        std::vector<Graph> reps = enumerate_graphs(n, kEnumerationCap, cfg.canonical_node_budget);
        s.classes_per_order[n] = reps.size();

        std::vector<ConjectureReport> batch(reps.size());
        parallel_for(static_cast<int>(reps.size()), cfg.jobs,
                     [&](int i) { batch[i] = verify_graph(reps[i], cfg); });

        for (std::size_t i = 0; i < reps.size(); ++i) {
            const Graph& g = reps[i];
            ConjectureReport& r = batch[i];
            ++s.graphs;

            if (!r.complete) {
                ++s.incomplete_reports;
                if (reports)
                    reports->push_back(std::move(r));
                continue;
            }

            if (is_connected(g)) {
                ++s.connected_graphs;
                if (!(*r.chi <= r.delta || is_complete_graph(g) || is_odd_cycle(g)))
                    ++s.brooks_violations;
            }
            if (!*r.inequality_holds)
                ++s.inequality_failures;
            if (r.critical)
                ++s.critical_reports;

            const ClassMembership& m = r.memberships;
            bool violated = false;
            if (m.free(Pattern::claw) && !m.free(Pattern::chair))
                violated = true;
            if (m.free(Pattern::three_k1) && m.free(Pattern::p3_plus_k1)
                && m.free(Pattern::k2_plus_2k1) && !m.free(Pattern::p4_plus_k1))
                violated = true;
            if (m.free(Pattern::p4) && !m.free(Pattern::p5))
                violated = true;
            if (m.free(Pattern::p4) && !m.free(Pattern::p4_plus_k1))
                violated = true;
            if (violated)
                ++s.inclusion_violations;

            if (n <= 7) {
                for (Pattern p : kAllPatterns) {
                    ++s.detector_checks;
                    bool fast = !m.free(p);
                    bool ref = reference::has_induced(g, pattern_graph(p));
                    if (fast != ref)
                        ++s.detector_mismatches;
                }
            }

            for (Pattern p : kAllPatterns)
                if (m.free(p))
                    ++s.class_counts[std::string(pattern_name(p)) + "-free"];
            if (m.dense3)
                ++s.class_counts["dense3"];
            if (m.dense3_max_degree)
                ++s.class_counts["dense3_maxdeg"];
            if (m.in_claimed_class())
                ++s.class_counts["claimed_any"];

            if (reports)
                reports->push_back(std::move(r));
        }
    }
    return s;
}

namespace {

struct Instance {
    Graph g;
    std::string family;
};

} // namespace

SampleSummary sample_families(const RunConfig& cfg, std::vector<ConjectureReport>* reports)
{
    SampleSummary s;
    s.requested = static_cast<std::uint64_t>(cfg.multipartite_count) + cfg.line_graph_count
                  + cfg.random_count;
    std::vector<Instance> instances;

    {
        SplitMix64 rng(derive_seed(cfg.seed, 1));
        std::uint64_t attempts = 0;
        std::uint64_t produced = 0;
        std::uint64_t cap = std::uint64_t(cfg.attempt_factor) * cfg.multipartite_count;
        while (produced < std::uint64_t(cfg.multipartite_count) && attempts < cap) {
            ++attempts;
            int parts = cfg.multipartite_min_parts
                        + static_cast<int>(rng.next_below(cfg.multipartite_max_parts
                                                          - cfg.multipartite_min_parts + 1));
            std::vector<int> sizes(parts);
            int total = 0;
            for (int& x : sizes) {
                x = 1 + static_cast<int>(rng.next_below(cfg.multipartite_max_part_size));
                total += x;
            }
            if (total > kGraph6MaxVertices)
                continue;
            Graph g = complete_multipartite(sizes);
            if (degree_profile(g).max_degree < cfg.min_delta)
                continue;
            instances.push_back({std::move(g), "multipartite"});
            ++produced;
        }
        s.family_attempts["multipartite"] = attempts;
        s.family_produced["multipartite"] = produced;
    }

    {
        SplitMix64 rng(derive_seed(cfg.seed, 2));
        std::uint64_t attempts = 0;
        std::uint64_t produced = 0;
        std::uint64_t cap = std::uint64_t(cfg.attempt_factor) * cfg.line_graph_count;
        while (produced < std::uint64_t(cfg.line_graph_count) && attempts < cap) {
            ++attempts;
            int nb = cfg.base_min + static_cast<int>(rng.next_below(cfg.base_max - cfg.base_min + 1));
            Graph base = random_graph(nb, cfg.base_edge_probability, rng.next());
            if (base.edge_count() == 0 || base.edge_count() > kGraph6MaxVertices)
                continue;
            Graph lg = line_graph(base);
            if (degree_profile(lg).max_degree < cfg.min_delta)
                continue;
            instances.push_back({std::move(lg), "line_graph"});
            ++produced;
        }
        s.family_attempts["line_graph"] = attempts;
        s.family_produced["line_graph"] = produced;
    }

    {
        SplitMix64 rng(derive_seed(cfg.seed, 3));
        std::uint64_t attempts = 0;
        std::uint64_t produced = 0;
        std::uint64_t cap = std::uint64_t(cfg.attempt_factor) * cfg.random_count;
        while (produced < std::uint64_t(cfg.random_count) && attempts < cap) {
            ++attempts;
            int n = cfg.random_min + static_cast<int>(rng.next_below(cfg.random_max - cfg.random_min + 1));
            Graph g = random_graph(n, cfg.random_edge_probability, rng.next());
            if (degree_profile(g).max_degree < cfg.min_delta)
                continue;
            if (!classify_graph(g, cfg.dense_t).in_claimed_class())
                continue;
            instances.push_back({std::move(g), "random"});
            ++produced;
        }
        s.family_attempts["random"] = attempts;
        s.family_produced["random"] = produced;
    }

    s.produced = instances.size();
    s.shortfall = s.requested - s.produced;

    std::vector<ConjectureReport> batch(instances.size());
    parallel_for(static_cast<int>(instances.size()), cfg.jobs, [&](int i) {
        const Graph& g = instances[i].g;
        ConjectureReport r = verify_graph(g, cfg);

        // the recolor drill: rebuild a (delta - 1)-coloring after deleting a
        // max-degree vertex, preferring the structured extension moves
        if (r.complete && *r.omega <= r.delta - 1) {
            int u = max_degree_vertex(g);
            ExtendOptions opt{cfg.extend_states, cfg.solver_node_budget};
            try {
                RecolorOutcome rc = delete_and_recolor(g, u, r.delta - 1, opt);
                if (rc.coloring) {
                    Coloring& w = *rc.coloring;
                    if (!w.total() || !is_proper(g, w) || w.palette() != r.delta - 1)
                        throw std::logic_error("recolor witness failed verification");
                    r.recolor_witness = w.assignment();
                    r.recolor_route = rc.route == RecolorOutcome::Route::extension ? "extension"
                                                                                   : "fallback";
                    if (rc.route == RecolorOutcome::Route::extension)
                        r.recolor_trace = move_trace_json(rc.trace);
                } else {
                    r.recolor_route = "missing";
                }
            } catch (const BudgetExceeded& e) {
                r.recolor_route = "missing";
                r.error += std::string(r.error.empty() ? "" : "; ") + "recolor: " + e.what();
            }
        }
        batch[i] = std::move(r);
    });

    for (std::size_t i = 0; i < batch.size(); ++i) {
        ConjectureReport& r = batch[i];
        if (!r.complete)
            ++s.incomplete_reports;
        if (r.hypothesis_met)
            ++s.hypothesis_met;
        if (r.critical)
            ++s.critical_reports;
        if (r.recolor_route != "skipped") {
            ++s.recolor_attempted;
            if (r.recolor_route == "extension")
                ++s.recolor_extension;
            else if (r.recolor_route == "fallback")
                ++s.recolor_fallback;
            else
                ++s.recolor_missing;
        }
        if (reports)
            reports->push_back(std::move(r));
    }
    return s;
}

ConjectureReport sharpness_witness(const RunConfig& cfg)
{
    Graph g = lexicographic_product(cycle(5), complete(3));
    ConjectureReport r = verify_graph(g, cfg);
    const ClassMembership& m = r.memberships;
    bool ok = r.complete && r.n == 15 && r.delta == 8 && *r.omega == 6 && *r.chi == 8
              && !*r.inequality_holds && m.free(Pattern::p4_plus_k1) && m.free(Pattern::p5)
              && m.free(Pattern::chair) && m.dense3;
    if (!ok)
        throw std::logic_error("sharpness witness failed its structural checks");
    return r;
}

json membership_json(const ClassMembership& m)
{
    json flags;
    json witnesses = json::object();
    for (Pattern p : kAllPatterns) {
        flags[std::string(pattern_name(p)) + "-free"] = m.free(p);
        if (const auto& w = m.witness_of(p))
            witnesses[std::string(pattern_name(p))] = *w;
    }
    flags["dense3"] = m.dense3;
    flags["dense3_maxdeg"] = m.dense3_max_degree;
    json out{{"flags", flags}};
    if (!witnesses.empty())
        out["witnesses"] = witnesses;
    if (m.dense_violation) {
        std::vector<int> excess;
        for (int v : m.dense_violation->excess)
            excess.push_back(v);
        out["dense_violation"] = {{"u", m.dense_violation->u},
                                  {"v", m.dense_violation->v},
                                  {"excess", excess}};
    }
    return out;
}

std::vector<int> colors_1based(std::vector<int> assignment)
{
    for (int& c : assignment)
        if (c >= 0)
            ++c; // uncolored sentinel stays negative
    return assignment;
}

json report_to_json(const ConjectureReport& r)
{
    json j{
        {"graph_id", r.graph_id},
        {"n", r.n},
        {"delta", r.delta},
        {"omega", r.omega ? json(*r.omega) : json(nullptr)},
        {"chi", r.chi ? json(*r.chi) : json(nullptr)},
        {"memberships", membership_json(r.memberships)},
        {"inequality_holds", r.inequality_holds ? json(*r.inequality_holds) : json(nullptr)},
        {"hypothesis_met", r.hypothesis_met},
        {"critical", r.critical},
        {"clique_witness", r.clique_witness},
        {"complete", r.complete},
        {"timing",
         {{"classify_seconds", r.classify_seconds},
          {"omega_seconds", r.omega_seconds},
          {"chi_seconds", r.chi_seconds},
          {"omega_nodes", r.omega_nodes},
          {"chi_nodes", r.chi_nodes}}},
    };
    if (r.chi_witness)
        j["chi_witness"] = colors_1based(*r.chi_witness);
    if (!r.error.empty())
        j["error"] = r.error;
    j["recolor_route"] = r.recolor_route;
    if (r.recolor_witness)
        j["recolor_witness"] = colors_1based(*r.recolor_witness);
    if (!r.recolor_trace.empty())
        j["recolor_trace"] = json::parse(r.recolor_trace);
    return j;
}

json lemma_report_to_json(const LemmaReport& r)
{
    json j{
        {"graph_id", r.graph_id},
        {"n", r.n},
        {"delta", r.delta},
        {"connected", r.connected},
        {"complete_graph", r.complete_graph},
        {"omega", r.omega ? json(*r.omega) : json(nullptr)},
        {"chi", r.chi ? json(*r.chi) : json(nullptr)},
        {"candidate", r.candidate},
        {"complete", r.complete},
    };
    if (r.candidate) {
        j["chi_equals_delta"] = r.chi_equals_delta;
        j["omega_below_chi"] = r.omega_below_chi;
        j["deletion_chis"] = r.deletion_chis;
        j["deletions_drop"] = r.deletions_drop;
    }
    if (!r.error.empty())
        j["error"] = r.error;
    return j;
}

json sweep_summary_to_json(const SweepSummary& s)
{
    return json{
        {"n_max", s.n_max},
        {"classes_per_order", s.classes_per_order},
        {"graphs", s.graphs},
        {"connected_graphs", s.connected_graphs},
        {"brooks_violations", s.brooks_violations},
        {"inequality_failures", s.inequality_failures},
        {"critical_reports", s.critical_reports},
        {"incomplete_reports", s.incomplete_reports},
        {"inclusion_violations", s.inclusion_violations},
        {"detector_checks", s.detector_checks},
        {"detector_mismatches", s.detector_mismatches},
        {"class_counts", s.class_counts},
    };
}

json sample_summary_to_json(const SampleSummary& s)
{
    return json{
        {"requested", s.requested},
        {"produced", s.produced},
        {"shortfall", s.shortfall},
        {"family_produced", s.family_produced},
        {"family_attempts", s.family_attempts},
        {"hypothesis_met", s.hypothesis_met},
        {"critical_reports", s.critical_reports},
        {"incomplete_reports", s.incomplete_reports},
        {"recolor_attempted", s.recolor_attempted},
        {"recolor_extension", s.recolor_extension},
        {"recolor_fallback", s.recolor_fallback},
        {"recolor_missing", s.recolor_missing},
    };
}

} // namespace bk

#include "groundedq/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <charconv>
#include <climits>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <set>

#include "groundedq/bijections.hpp"
#include "groundedq/crystal.hpp"
#include "groundedq/decomp.hpp"
#include "groundedq/grounded.hpp"
#include "groundedq/identities.hpp"
#include "groundedq/qfunc.hpp"
#include "groundedq/report.hpp"

namespace gq {

using nlohmann::json;

int max_order_cap() {
    const char* env = std::getenv("GROUNDEDQ_MAX_ORDER");
    if (!env || !*env) return 64;
    int v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [p, ec] = std::from_chars(env, end, v);
    if (ec != std::errc{} || p != end || v < 0) throw usage_error(std::string("bad GROUNDEDQ_MAX_ORDER: ") + env);
    return v;
}

namespace {

// --- JSON shapes -----------------------------------------------------------

json jint(const Int& x) {
    if (x >= LLONG_MIN && x <= LLONG_MAX) return x.convert_to<long long>();
    return x.str();
}

json series_json(const Series& s) {
    json c = json::array();
    for (const auto& x : s.coeffs()) c.push_back(jint(x));
    return {{"order", s.order()}, {"coeffs", c}};
}

json grounded_json(const GroundedPartition& g) {
    json parts = json::array();
    for (const auto& p : g.parts) parts.push_back({{"v", p.v}, {"c", std::string(1, colour_char(p.c))}});
    return {{"level", g.level}, {"ground", std::string(1, colour_char(g.ground))}, {"parts", parts}};
}

json coloured_json(const ColouredSeq& s) {
    json a = json::array();
    for (const auto& p : s) a.push_back({{"v", p.v}, {"c", std::string(1, colour_char(p.c))}});
    return a;
}

json over_json(const std::vector<OverPart>& s) {
    json a = json::array();
    for (const auto& p : s) a.push_back({{"v", p.v}, {"over", p.over}});
    return a;
}

json partition_json(const Partition& p) { return json(p); }

json stage(const std::string& name, json value) { return {{"name", name}, {"value", std::move(value)}}; }

json passes_json(const std::vector<InversePass>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back({{"m", p.m}, {"s", p.s}, {"j", p.j}, {"g", p.g}, {"i", p.i}});
    return a;
}

// --- run reports -------------------------------------------------------------

// Streams one JSON line per check as it completes, then a summary line.
class Run {
public:
    Run(std::string command, std::ostream& out, std::ostream& err)
        : cmd_(std::move(command)), out_(out), err_(err), t0_(std::chrono::steady_clock::now()) {}

    void check(const std::string& name, bool pass, const std::string& detail = "",
               const std::string& mismatch = "") {
        json j = {{"check", name}, {"pass", pass}};
        if (!detail.empty()) j["detail"] = detail;
        if (!pass && !mismatch.empty()) j["first_mismatch"] = mismatch;
        out_ << j.dump() << "\n" << std::flush;
        ++n_;
        if (!pass) ++failed_;
    }
    void line(const json& j) { out_ << j.dump() << "\n" << std::flush; }

    int finish() {
        out_ << json{{"command", cmd_}, {"checks", n_}, {"failed", failed_}, {"pass", failed_ == 0}}.dump() << "\n";
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
        err_ << "wall time " << s << " s\n";
        return failed_ ? kExitFail : kExitPass;
    }

private:
    std::string cmd_;
    std::ostream& out_;
    std::ostream& err_;
    std::chrono::steady_clock::time_point t0_;
    int n_ = 0, failed_ = 0;
};

std::string series_mismatch(const Series& a, const Series& b) {
    auto m = first_mismatch(a, b);
    if (!m) return "";
    return "q^" + std::to_string(*m) + ": " + a[*m].str() + " vs " + b[*m].str();
}

// --- argument checks ---------------------------------------------------------

int ground_of(int level, const std::string& g) {
    if (g.size() != 1) throw usage_error("ground must be one letter: " + g);
    const int c = colour_index(g[0]);
    if (c > level) throw usage_error("ground " + g + " is not a colour at level " + std::to_string(level));
    return c;
}

void capped(const char* what, int v) {
    if (v < 0) throw usage_error(std::string(what) + " must be nonnegative");
    const int cap = max_order_cap();
    if (v > cap)
        throw usage_error(std::string(what) + " " + std::to_string(v) + " exceeds GROUNDEDQ_MAX_ORDER=" +
                          std::to_string(cap));
}

void check_product(Run& run, int n, int i, int order) {
    const Series e = enumeration_gf(n, i, order), p = grounded_product_gf(n, i, order);
    run.check("product level " + std::to_string(n) + " ground " + colour_char(i) + " order " + std::to_string(order),
              e == p, "", series_mismatch(e, p));
}

void check_identity(Run& run, const std::string& name, int order) {
    const auto r = verify_identity(name, order);
    std::string mm;
    if (r.first_mismatch)
        mm = "q^" + std::to_string(r.first_mismatch->first) + " t^" + std::to_string(r.first_mismatch->second);
    if (!r.detail.empty() && !r.equal) mm += (mm.empty() ? "" : "; ") + r.detail;
    run.check("identity " + name + " order " + std::to_string(order), r.equal, r.equal ? r.detail : "", mm);
}

void check_iso(Run& run, Model a, Model b, int rank) {
    const auto r = verify_isomorphism(a, b, rank);
    std::string counts;
    for (int c : r.rank_counts_a) counts += (counts.empty() ? "" : ",") + std::to_string(c);
    run.check(std::string("isomorphism ") + model_name(a) + ":" + model_name(b) + " rank " + std::to_string(rank),
              r.pass, "rank counts " + counts, r.failures.empty() ? "" : r.failures.front());
}

void check_decomp(Run& run, const std::string& variant, int order, int w) {
    const auto r = verify_decomposition(variant, order, w);
    const std::string mm = r.failures.empty() ? r.series_detail : r.failures.front();
    const std::string tag = "decomposition " + variant;
    run.check(tag + " series order " + std::to_string(order), r.series_equal, "", r.series_detail);
    run.check(tag + " strings weight " + std::to_string(w), r.strings_ok,
              std::to_string(r.rows.size()) + " strings", mm);
    run.check(tag + " reconstruction weight " + std::to_string(w), r.reconstruction_ok, "", mm);
}

// --- bijections ---------------------------------------------------------------

bool all_odd(const Overpartition& p) {
    for (auto& x : p)
        if (x.v % 2 == 0) return false;
    return true;
}

bool even_distinct_ok(const Partition& p) {
    for (size_t i = 1; i < p.size(); ++i)
        if (p[i] % 2 == 0 && p[i] == p[i - 1]) return false;
    return true;
}

json trace_p2b_forward(const GroundedPartition& g) {
    const auto t = p2b_forward_trace(g);
    return {{"map", "p2b"},
            {"direction", "forward"},
            {"stages",
             {stage("input", grounded_json(t.input)), stage("step1.p_min", grounded_json(t.p_min)),
              stage("step1.loose", partition_json(t.loose)), stage("step2.p1", coloured_json(t.p1)),
              stage("step3.p2", coloured_json(t.p2)), stage("step4.result", over_json(t.result))}}};
}

json trace_p2b_inverse(const Overpartition& l) {
    const auto t = p2b_inverse_trace(l);
    return {{"map", "p2b"},
            {"direction", "inverse"},
            {"stages",
             {stage("input", over_json(t.input)), stage("step1.p_s", coloured_json(t.p_s)),
              stage("step2.heights", json(t.heights)), stage("step3.passes", passes_json(t.passes)),
              stage("step3.p_min", grounded_json(t.p_min)), stage("step4.loose", partition_json(t.loose)),
              stage("step4.result", grounded_json(t.result))}}};
}

json trace_p2a_forward(const GroundedPartition& g) {
    const auto t = p2a_forward_trace(g);
    return {{"map", "p2a"},
            {"direction", "forward"},
            {"stages",
             {stage("input", grounded_json(t.input)), stage("step1.bar_notation", over_json(t.barred)),
              stage("step2.p_min", over_json(t.p_min)), stage("step2.loose", partition_json(t.loose)),
              stage("step3.p1", over_json(t.p1)), stage("step4.p2", over_json(t.p2)),
              stage("step4.result", partition_json(t.result))}}};
}

json trace_p2a_inverse(const Partition& p) {
    const auto t = p2a_inverse_trace(p);
    return {{"map", "p2a"},
            {"direction", "inverse"},
            {"stages",
             {stage("input", partition_json(t.input)), stage("step1.p_s", over_json(t.p_s)),
              stage("step2.heights", json(t.heights)), stage("step3.passes", passes_json(t.passes)),
              stage("step3.p_min", over_json(t.p_min)), stage("step4.loose", partition_json(t.loose)),
              stage("step4.bar_notation", over_json(t.barred)), stage("step4.result", grounded_json(t.result))}}};
}

std::vector<Overpartition> odd_overpartitions_upto(int w) {
    std::vector<Overpartition> v;
    for (int n = 0; n <= w; ++n)
        for (int k = 0; k <= n; ++k)
            for (auto& p : enumerate_odd_overpartitions(n, k)) v.push_back(p);
    return v;
}

std::vector<Partition> distinct_even_upto(int w) {
    std::vector<Partition> v;
    for (int n = 0; n <= w; ++n)
        for (int k = 0; k <= n; ++k)
            for (auto& p : enumerate_distinct_even(n, k)) v.push_back(p);
    return v;
}

int count_odd(const Partition& p) {
    int c = 0;
    for (int x : p) c += x % 2;
    return c;
}

// Roundtrip and preservation checks over a whole domain; per-element errors
// are caught and counted, they never stop the run.
template <class Elem, class F>
void sweep(Run& run, const std::string& name, const std::vector<Elem>& xs, F f) {
    int bad = 0;
    std::string first;
    for (const auto& x : xs) {
        std::string why;
        try {
            why = f(x);
        } catch (const std::exception& e) {
            why = e.what();
        }
        if (!why.empty() && !bad++) first = why;
    }
    run.check(name, bad == 0, std::to_string(xs.size()) + " elements", first);
}

int bijection_cmd(const std::string& map, const std::string& dir, const std::string& input, bool trace,
                  std::optional<int> max_weight, const std::string& echo, std::ostream& out, std::ostream& err) {
    const bool p2b = map == "p2b";
    const int ground = colour_index(p2b ? 'b' : 'a');
    auto parse_domain = [&](const std::string& s) {
        GroundedPartition g = parse_grounded(s, 2, ground);
        if (!validate(g)) throw usage_error("not an element of P_{2," + std::string(p2b ? "b" : "a") + "}: " + s);
        return g;
    };
    auto parse_over = [&](const std::string& s) {
        Overpartition l = parse_overpartition(s);
        if (!is_overpartition(l) || !all_odd(l)) throw usage_error("not an odd overpartition: " + s);
        return l;
    };
    auto parse_e = [&](const std::string& s) {
        Partition p = parse_partition(s);
        if (!is_partition(p) || !even_distinct_ok(p)) throw usage_error("even parts not distinct: " + s);
        return p;
    };

    if (dir != "roundtrip") {
        if (input.empty() && !max_weight) throw usage_error("give --input or --max-weight");
        if (max_weight) capped("max weight", *max_weight);
        auto emit = [&](const json& traced, const std::string& a, const std::string& b) {
            if (trace)
                out << traced.dump() << "\n";
            else
                out << a << " -> " << b << "\n";
        };
        if (dir == "forward") {
            std::vector<GroundedPartition> xs;
            if (!input.empty())
                xs.push_back(parse_domain(input));
            else
                xs = enumerate(2, ground, *max_weight);
            for (auto& g : xs) {
                if (p2b)
                    emit(trace ? trace_p2b_forward(g) : json(), to_string(g), to_string(p2b_forward(g)));
                else
                    emit(trace ? trace_p2a_forward(g) : json(), to_string(g), to_string(p2a_forward(g)));
            }
        } else if (p2b) {
            std::vector<Overpartition> xs;
            if (!input.empty())
                xs.push_back(parse_over(input));
            else
                xs = odd_overpartitions_upto(*max_weight);
            for (auto& l : xs) emit(trace ? trace_p2b_inverse(l) : json(), to_string(l), to_string(p2b_inverse(l)));
        } else {
            std::vector<Partition> xs;
            if (!input.empty())
                xs.push_back(parse_e(input));
            else
                xs = distinct_even_upto(*max_weight);
            for (auto& p : xs) emit(trace ? trace_p2a_inverse(p) : json(), to_string(p), to_string(p2a_inverse(p)));
        }
        return kExitPass;
    }

    const int w = max_weight.value_or(16);
    capped("max weight", w);
    Run run(echo, out, err);
    std::vector<GroundedPartition> dom;
    if (!input.empty())
        dom.push_back(parse_domain(input));
    else
        dom = enumerate(2, ground, w);
    if (p2b) {
        sweep(run, "p2b inverse(forward(g)) = g, weight and odd-count preserved", dom,
              [](const GroundedPartition& g) -> std::string {
                  const Overpartition l = p2b_forward(g);
                  if (!is_overpartition(l) || !all_odd(l)) return "image not an odd overpartition at " + to_string(g);
                  if (weight(l) != weight(g)) return "weight changes at " + to_string(g);
                  if (static_cast<int>(l.size()) != stats(g).odd_count) return "odd count changes at " + to_string(g);
                  if (p2b_inverse(l) != g) return "roundtrip fails at " + to_string(g);
                  return "";
              });
        if (input.empty())
            sweep(run, "p2b forward(inverse(l)) = l", odd_overpartitions_upto(w),
                  [](const Overpartition& l) -> std::string {
                      const GroundedPartition g = p2b_inverse(l);
                      if (!validate(g)) return "inverse image not grounded at " + to_string(l);
                      return p2b_forward(g) == l ? "" : "roundtrip fails at " + to_string(l);
                  });
    } else {
        sweep(run, "p2a inverse(forward(g)) = g, weight and odd-count preserved", dom,
              [](const GroundedPartition& g) -> std::string {
                  const Partition p = p2a_forward(g);
                  if (!is_partition(p) || !even_distinct_ok(p)) return "image has repeated even parts at " + to_string(g);
                  if (weight(p) != weight(g)) return "weight changes at " + to_string(g);
                  if (count_odd(p) != stats(g).odd_count) return "odd count changes at " + to_string(g);
                  if (p2a_inverse(p) != g) return "roundtrip fails at " + to_string(g);
                  return "";
              });
        if (input.empty())
            sweep(run, "p2a forward(inverse(p)) = p", distinct_even_upto(w), [](const Partition& p) -> std::string {
                const GroundedPartition g = p2a_inverse(p);
                if (!validate(g)) return "inverse image not grounded at " + to_string(p);
                return p2a_forward(g) == p ? "" : "roundtrip fails at " + to_string(p);
            });
    }
    return run.finish();
}

// --- crystal -------------------------------------------------------------------

json graph_json(const CrystalGraph& g) {
    json ranks = json::array(), edges = json::array();
    for (auto& r : g.ranks) ranks.push_back(r);
    for (auto& e : g.edges) edges.push_back({e.src, e.dst, arrow_name(e.colour)});
    return {{"model", model_name(g.model)}, {"max_rank", g.max_rank}, {"labels", g.labels},
            {"ranks", ranks},             {"edges", edges}};
}

std::string join_args(int argc, const char* const* argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) s += (i > 1 ? " " : "") + std::string(argv[i]);
    return s;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    const std::string echo = join_args(argc, argv);
    CLI::App app{"Grounded partitions: enumeration, q-series identities, bijections and crystal graphs"};
    app.name("groundedq");
    app.require_subcommand(1);

    int level = 2, order = 0, max_weight = 0, max_rank = 0;
    std::string ground, name, variant, model, pair, dot, input, map, dir;
    bool as_json = false, as_csv = false, track_odd = false, trace = false;
    std::optional<int> opt_weight, opt_order;

    auto* en = app.add_subcommand("enumerate", "list grounded partitions");
    en->add_option("--level", level, "level n")->required()->check(CLI::Range(1, kMaxLevel));
    en->add_option("--ground", ground, "ground colour letter")->required();
    en->add_option("--max-weight", max_weight, "largest weight")->required();
    auto* fj = en->add_flag("--json", as_json, "JSON array");
    en->add_flag("--csv", as_csv, "CSV rows")->excludes(fj);

    auto* gf = app.add_subcommand("gf", "weight generating function by enumeration");
    gf->add_option("--level", level)->required()->check(CLI::Range(1, kMaxLevel));
    gf->add_option("--ground", ground)->required();
    gf->add_option("--order", order)->required();
    gf->add_flag("--track-odd", track_odd, "also track the number of odd parts (t)");

    auto* ver = app.add_subcommand("verify", "verification runs");
    ver->require_subcommand(1);
    auto* vp = ver->add_subcommand("product", "enumeration against the product formula");
    vp->add_option("--level", level)->required()->check(CLI::Range(1, kMaxLevel));
    vp->add_option("--ground", ground)->required();
    vp->add_option("--order", order)->required();
    auto* vi = ver->add_subcommand("identity", "one catalogue identity");
    vi->add_option("--name", name)->required();
    vi->add_option("--order", order)->required();
    auto* vr = ver->add_subcommand("report", "all checks plus the display comparisons");

    auto* bij = app.add_subcommand("bijection", "the two bijections");
    bij->add_option("map", map)->required()->check(CLI::IsMember({"p2b", "p2a"}));
    bij->add_option("direction", dir)->required()->check(CLI::IsMember({"forward", "inverse", "roundtrip"}));
    bij->add_option("--input", input, "a single element");
    bij->add_flag("--trace", trace, "JSON trace with stage names");
    bij->add_option("--max-weight", opt_weight);

    auto* cr = app.add_subcommand("crystal", "crystal graphs");
    cr->require_subcommand(1);
    auto* cg = cr->add_subcommand("generate", "BFS graph as JSON");
    cg->add_option("--model", model)->required()->check(CLI::IsMember({"word1", "partition1", "pairs2", "grounded2"}));
    cg->add_option("--max-rank", max_rank)->required();
    cg->add_option("--dot", dot, "also write DOT to FILE ('-' writes DOT instead of JSON)");
    auto* ci = cr->add_subcommand("verify-iso", "check an isomorphism");
    ci->add_option("--pair", pair)->required()->check(CLI::IsMember({"word1:partition1", "grounded2:pairs2"}));
    ci->add_option("--max-rank", max_rank)->required();

    auto* dc = app.add_subcommand("decomp", "blue-string decompositions");
    dc->require_subcommand(1);
    auto* ds = dc->add_subcommand("strings", "strings as CSV");
    auto* dv = dc->add_subcommand("verify", "decomposition checks");
    for (auto* s : {ds, dv}) {
        s->add_option("--variant", variant)->required()->check(CLI::IsMember(decomp_variants()));
        s->add_option("--max-weight", max_weight)->required();
    }
    ds->add_option("--order", opt_order);
    dv->add_option("--order", order)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*en) {
            const int c = ground_of(level, ground);
            capped("max weight", max_weight);
            const auto xs = enumerate(level, c, max_weight);
            if (as_json) {
                json a = json::array();
                for (auto& g : xs) a.push_back(grounded_json(g));
                out << a.dump() << "\n";
            } else if (as_csv) {
                out << "weight,odd,colours,partition\n";
                for (auto& g : xs) {
                    const auto st = stats(g);
                    out << st.weight << "," << st.odd_count << "," << st.colour_word << "," << to_compact(g) << "\n";
                }
            } else {
                for (auto& g : xs) out << to_string(g) << "\n";
            }
            return kExitPass;
        }
        if (*gf) {
            const int c = ground_of(level, ground);
            capped("order", order);
            if (!track_odd) {
                out << series_json(enumeration_gf(level, c, order)).dump() << "\n";
            } else {
                const BiSeries b = enumeration_odd_gf(level, c, {order, order});
                json rows = json::array();
                for (auto& r : b.rows()) {
                    json row = json::array();
                    for (auto& x : r) row.push_back(jint(x));
                    rows.push_back(row);
                }
                out << json{{"order", order}, {"t_order", order}, {"coeffs", rows}}.dump() << "\n";
            }
            return kExitPass;
        }
        if (*vp) {
            const int c = ground_of(level, ground);
            capped("order", order);
            Run run(echo, out, err);
            check_product(run, level, c, order);
            return run.finish();
        }
        if (*vi) {
            capped("order", order);
            const auto& names = identity_names();
            if (std::find(names.begin(), names.end(), name) == names.end())
                throw usage_error("unknown identity: " + name);
            Run run(echo, out, err);
            check_identity(run, name, order);
            return run.finish();
        }
        if (*vr) {
            Run run(echo, out, err);
            for (int n = 1; n <= kMaxLevel; ++n)
                for (int i = 0; i <= n; ++i) check_product(run, n, i, 24);
            for (const auto& id : identity_names())
                if (id.rfind("decomp", 0) != 0) check_identity(run, id, is_bivariate_identity(id) ? 20 : 30);
            check_iso(run, Model::word1, Model::partition1, 14);
            check_iso(run, Model::grounded2, Model::pairs2, 12);
            for (const auto& v : decomp_variants()) check_decomp(run, v, 30, 14);
            for (int l : {1, 2}) {
                const auto r = verify_pivot_gfs(l, 8);
                run.check("pivot gfs level " + std::to_string(l) + " n+k <= 8", r.pass,
                          std::to_string(r.cases) + " cases", r.failures.empty() ? "" : r.failures.front());
            }
            for (const auto& d : display_checks())
                run.line({{"display", d.id}, {"kind", d.kind}, {"claim", d.claim},
                          {"displayed", d.displayed}, {"computed", d.computed}, {"note", d.note}});
            return run.finish();
        }
        if (*bij) return bijection_cmd(map, dir, input, trace, opt_weight, echo, out, err);
        if (*cg) {
            capped("max rank", max_rank);
            const CrystalGraph g = generate_graph(parse_model(model), max_rank);
            if (dot == "-") {
                out << to_dot(g);
                return kExitPass;
            }
            if (!dot.empty()) {
                std::ofstream f(dot);
                if (!f) throw usage_error("cannot write " + dot);
                f << to_dot(g);
            }
            out << graph_json(g).dump() << "\n";
            return kExitPass;
        }
        if (*ci) {
            capped("max rank", max_rank);
            const auto colon = pair.find(':');
            Run run(echo, out, err);
            check_iso(run, parse_model(pair.substr(0, colon)), parse_model(pair.substr(colon + 1)), max_rank);
            return run.finish();
        }
        if (*ds) {
            capped("max weight", max_weight);
            if (opt_order) capped("order", *opt_order);
            out << strings_csv(decomp_strings(variant, max_weight));
            return kExitPass;
        }
        if (*dv) {
            capped("max weight", max_weight);
            capped("order", order);
            Run run(echo, out, err);
            check_decomp(run, variant, order, max_weight);
            return run.finish();
        }
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

}  // namespace gq

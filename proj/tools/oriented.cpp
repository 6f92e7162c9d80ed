// Command-line front end: point-set ingestion, solvers, oracles, the three
// numerical experiments, JSON reports and SVG figures.

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "oriented/experiments.hpp"
#include "oriented/geometry.hpp"
#include "oriented/io.hpp"
#include "oriented/oracle.hpp"
#include "oriented/sector.hpp"
#include "oriented/segment.hpp"
#include "oriented/semidisk.hpp"
#include "oriented/svg.hpp"

namespace {

using namespace oriented;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBadFlags = 3;
constexpr int kExitDegenerate = 4;

int thread_cap() {
    const char* env = std::getenv("ORIENTED_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    if (n == 0) return static_cast<int>(std::thread::hardware_concurrency());
    return std::max(1, n);
}

/// Deterministic parallel map: results land in sample order regardless of
/// scheduling.
template <class F>
void parallel_for(int count, F&& fn) {
    int workers = std::min(thread_cap(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) fn(i);
        });
    for (auto& t : pool) t.join();
}

double angle_of(Point v) { return std::atan2(v.y, v.x); }

struct ReportDocument {
    std::string shape;
    std::string objective;
    std::vector<std::pair<std::string, double>> parameters;
    double value = 0.0;
    std::vector<std::size_t> support;
    std::optional<std::size_t> winning_edge;
    std::string construction;
    std::vector<std::pair<std::string, double>> tolerances;
    bool degenerate = false;
    std::optional<double> resolution_bound;
    std::optional<bool> edge_aligned;

    std::string to_json() const {
        JsonWriter w;
        w.begin_object();
        w.key("shape");
        w.value(shape);
        w.key("objective");
        w.value(objective);
        w.key("parameters");
        w.begin_object();
        for (const auto& [k, v] : parameters) {
            w.key(k);
            w.value(v);
        }
        w.end_object();
        w.key("value");
        w.value(value);
        w.key("support_vertices");
        w.begin_array();
        for (std::size_t s : support) w.value(s);
        w.end_array();
        w.key("winning_edge");
        if (winning_edge)
            w.value(*winning_edge);
        else
            w.null();
        w.key("construction");
        w.value(construction);
        w.key("tolerances");
        w.begin_object();
        for (const auto& [k, v] : tolerances) {
            w.key(k);
            w.value(v);
        }
        w.end_object();
        w.key("degenerate");
        w.value(degenerate);
        if (resolution_bound) {
            w.key("resolution_bound");
            w.value(*resolution_bound);
        }
        if (edge_aligned) {
            w.key("edge_aligned");
            w.value(*edge_aligned);
        }
        w.end_object();
        return w.str() + "\n";
    }
};

void fill_params(ReportDocument& doc, const Circle& c) {
    doc.parameters = {{"center_x", c.center.x}, {"center_y", c.center.y},
                      {"radius", c.radius}};
}
void fill_params(ReportDocument& doc, const Semidisk& sd) {
    doc.parameters = {{"center_x", sd.center.x},
                      {"center_y", sd.center.y},
                      {"radius", sd.radius},
                      {"normal_angle", angle_of(sd.inward_normal)}};
}
void fill_params(ReportDocument& doc, const CircularSegment& seg) {
    doc.parameters = {{"center_x", seg.center.x},
                      {"center_y", seg.center.y},
                      {"radius", seg.radius},
                      {"chord_normal_angle", angle_of(seg.chord_normal)},
                      {"chord_offset", seg.chord_offset},
                      {"theta", seg.theta()}};
}
void fill_params(ReportDocument& doc, const Sector& sec) {
    doc.parameters = {{"apex_x", sec.apex.x},
                      {"apex_y", sec.apex.y},
                      {"radius", sec.radius},
                      {"axis_angle", angle_of(sec.axis)},
                      {"half_angle", sec.half_angle}};
}

void emit(const ReportDocument& doc, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << doc.to_json();
    } else {
        std::ofstream out(output_path);
        out << doc.to_json();
    }
}

void emit_svg(const std::string& path, const Hull& hull, const ContainerVariant& c,
              const std::vector<std::size_t>& support) {
    std::ofstream out(path);
    out << render_svg(hull, c, support);
}

Objective parse_objective(const std::string& s) {
    return s == "perimeter" ? Objective::Perimeter : Objective::Area;
}

struct SolveArgs {
    std::string shape;
    std::string objective = "area";
    std::string input;
    std::string format;
    std::string output;
    std::string svg;
};

int run_solve(const SolveArgs& a) {
    std::vector<Point> pts = load_points(a.input, a.format);
    Hull hull = convex_hull(pts);

    ReportDocument doc;
    doc.shape = a.shape;
    doc.tolerances = {{"containment_rel", 1e-9},
                      {"claim_midpoint_rel", 1e-7},
                      {"search_step_rel", 1e-10}};

    ContainerVariant container;
    if (a.shape == "circle") {
        Circle c = min_enclosing_circle(hull);
        doc.objective = "radius";
        doc.value = c.radius;
        doc.construction = "welzl";
        for (std::size_t i = 0; i < hull.size(); ++i)
            if (dist(hull.vertices[i], c.center) >= c.radius * (1.0 - 1e-9))
                doc.support.push_back(i);
        fill_params(doc, c);
        container = c;
    } else if (a.shape == "semidisk") {
        SolveReport<Semidisk> r = smallest_semidisk(hull);
        doc.objective = "radius";
        doc.value = r.value;
        doc.construction = r.construction;
        doc.support = r.support;
        if (r.has_winning_edge) doc.winning_edge = r.winning_edge;
        doc.degenerate = r.degenerate;
        fill_params(doc, r.container);
        container = r.container;
    } else if (a.shape == "segment") {
        Objective obj = parse_objective(a.objective);
        SolveReport<CircularSegment> r = smallest_segment(hull, obj);
        doc.objective = objective_name(obj);
        doc.value = r.value;
        doc.construction = r.construction;
        doc.support = r.support;
        if (r.has_winning_edge) doc.winning_edge = r.winning_edge;
        doc.degenerate = r.degenerate;
        fill_params(doc, r.container);
        container = r.container;
    } else {  // sector
        Objective obj = parse_objective(a.objective);
        SolveReport<Sector> r = smallest_sector(hull, obj);
        doc.objective = objective_name(obj);
        doc.value = r.value;
        doc.construction = r.construction;
        doc.support = r.support;
        doc.degenerate = r.degenerate;
        fill_params(doc, r.container);
        container = r.container;
    }

    emit(doc, a.output);
    if (!a.svg.empty()) emit_svg(a.svg, hull, container, doc.support);
    return kExitOk;
}

struct OracleArgs {
    SolveArgs base;
    int direction_steps = 3600;
    int refine_rounds = 3;
    std::uint64_t seed = 0;
};

int run_oracle(const OracleArgs& a) {
    std::vector<Point> pts = load_points(a.base.input, a.base.format);
    Hull hull = convex_hull(pts);
    OracleConfig cfg{a.direction_steps, a.refine_rounds, a.seed};

    ReportDocument doc;
    doc.shape = a.base.shape;
    doc.construction = "oracle";
    doc.tolerances = {{"containment_rel", 1e-9}};

    ContainerVariant container;
    if (a.base.shape == "circle") {
        Circle c = oracle_circle(hull);
        doc.objective = "radius";
        doc.value = c.radius;
        doc.resolution_bound = 0.0;
        fill_params(doc, c);
        container = c;
    } else if (a.base.shape == "semidisk") {
        OracleResult<Semidisk> r = oracle_semidisk(hull, cfg);
        doc.objective = "radius";
        doc.value = r.value;
        doc.resolution_bound = r.resolution_bound;
        doc.edge_aligned = r.edge_aligned;
        doc.degenerate = r.degenerate;
        fill_params(doc, r.container);
        container = r.container;
    } else if (a.base.shape == "segment") {
        Objective obj = parse_objective(a.base.objective);
        OracleResult<CircularSegment> r = oracle_segment(hull, obj, cfg);
        doc.objective = objective_name(obj);
        doc.value = r.value;
        doc.resolution_bound = r.resolution_bound;
        doc.edge_aligned = r.edge_aligned;
        fill_params(doc, r.container);
        container = r.container;
    } else {
        Objective obj = parse_objective(a.base.objective);
        OracleResult<Sector> r = oracle_sector(hull, obj, cfg);
        doc.objective = objective_name(obj);
        doc.value = r.value;
        doc.resolution_bound = r.resolution_bound;
        doc.degenerate = r.degenerate;
        fill_params(doc, r.container);
        container = r.container;
    }

    emit(doc, a.base.output);
    if (!a.base.svg.empty()) emit_svg(a.base.svg, hull, container, doc.support);
    return kExitOk;
}

int run_experiment_lemma3(const std::string& out_dir, double range_deg, double step_deg) {
    std::filesystem::create_directories(out_dir);
    ApexSweepResult res = apex_sweep(range_deg, step_deg);

    std::ofstream csv(out_dir + "/lemma3.csv");
    csv << "apex_angle_deg,u_area,u_perimeter,r_area,r_perimeter,theta_area,theta_perimeter\n";
    for (const ApexSweepRow& row : res.rows) {
        const ApexSweepPoint& p = row.point;
        csv << JsonWriter::number(row.apex_angle_deg) << ',' << JsonWriter::number(p.u_area)
            << ',' << JsonWriter::number(p.u_perimeter) << ','
            << JsonWriter::number(p.r_area) << ',' << JsonWriter::number(p.r_perimeter)
            << ',' << JsonWriter::number(p.theta_area) << ','
            << JsonWriter::number(p.theta_perimeter) << '\n';
    }

    // overlay chart: chord-midpoint offsets vs apex angle
    {
        std::ofstream svg(out_dir + "/lemma3.svg");
        double umax = 1e-12;
        for (const ApexSweepRow& r : res.rows)
            umax = std::max({umax, std::abs(r.point.u_area), std::abs(r.point.u_perimeter)});
        auto px = [&](double a) { return 60.0 + 700.0 * a / range_deg; };
        auto py = [&](double u) { return 740.0 - 680.0 * (u / umax); };
        svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
               "viewBox=\"0 0 800 800\">\n<rect width=\"800\" height=\"800\" "
               "fill=\"white\"/>\n";
        svg << "<line x1=\"60\" y1=\"740\" x2=\"760\" y2=\"740\" stroke=\"black\"/>\n";
        svg << "<line x1=\"60\" y1=\"60\" x2=\"60\" y2=\"740\" stroke=\"black\"/>\n";
        for (int pass = 0; pass < 2; ++pass) {
            svg << "<polyline fill=\"none\" stroke=\""
                << (pass == 0 ? "#1f77b4" : "#d62728") << "\" stroke-width=\"2\" points=\"";
            for (const ApexSweepRow& r : res.rows) {
                double u = pass == 0 ? r.point.u_area : r.point.u_perimeter;
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px(r.apex_angle_deg), py(u));
                svg << buf;
            }
            svg << "\"/>\n";
        }
        svg << "<text x=\"80\" y=\"40\" fill=\"#1f77b4\">u_area</text>\n";
        svg << "<text x=\"180\" y=\"40\" fill=\"#d62728\">u_perimeter</text>\n";
        svg << "</svg>\n";
    }

    std::cout << "onset_area_deg=" << JsonWriter::number(res.onset_area_deg)
              << " onset_perimeter_deg=" << JsonWriter::number(res.onset_perimeter_deg)
              << " max_midpoint_separation=" << JsonWriter::number(res.max_separation)
              << "\n";
    return kExitOk;
}

int run_experiment_remark(const std::string& out_dir, int steps) {
    std::filesystem::create_directories(out_dir);
    CrossoverResult res = remark_crossover(steps);

    std::ofstream csv(out_dir + "/remark.csv");
    csv << "lambda,circle_area,semidisk_area\n";
    for (const CrossoverRow& r : res.rows)
        csv << JsonWriter::number(r.lambda) << ',' << JsonWriter::number(r.circle_area)
            << ',' << JsonWriter::number(r.semidisk_area) << '\n';

    std::cout << "lambda_star=" << JsonWriter::number(res.lambda_star)
              << " area_gap=" << JsonWriter::number(res.area_gap_at_star) << "\n";
    return kExitOk;
}

int run_experiment_q3(const std::string& out_dir, int samples, std::uint64_t seed) {
    std::filesystem::create_directories(out_dir);
    Q3Result res = q3_search(samples, seed);

    JsonWriter w;
    w.begin_object();
    w.key("samples");
    w.value(res.samples);
    w.key("max_angle");
    w.value(res.max_angle);
    w.key("witness");
    if (res.witness) {
        const Q3Instance& inst = *res.witness;
        w.begin_object();
        w.key("seed");
        w.value(static_cast<std::size_t>(inst.seed));
        w.key("points");
        w.begin_array();
        for (Point p : inst.points) {
            w.begin_array();
            w.value(p.x);
            w.value(p.y);
            w.end_array();
        }
        w.end_array();
        w.key("edge_area");
        w.value(inst.edge_area);
        w.key("edge_perimeter");
        w.value(inst.edge_perimeter);
        w.key("chord_angle");
        w.value(inst.chord_angle);
        w.key("oracle_confirmed");
        w.value(inst.oracle_confirmed);
        w.end_object();
    } else {
        w.null();
    }
    w.key("instances_found");
    w.value(res.instances.size());
    w.end_object();

    std::ofstream out(out_dir + "/q3.json");
    out << w.str() << "\n";
    std::cout << w.str() << "\n";
    return kExitOk;
}

struct FuzzArgs {
    std::string shape;
    std::string objective = "area";
    int samples = 100;
    std::uint64_t seed = 0;
    double tolerance = 1e-6;
};

int run_fuzz(const FuzzArgs& a) {
    std::mt19937_64 rng(a.seed);
    std::uniform_int_distribution<int> npts(4, 12);
    struct Sample {
        std::uint64_t seed;
        int n;
    };
    std::vector<Sample> plan;
    plan.reserve(static_cast<std::size_t>(a.samples));
    for (int i = 0; i < a.samples; ++i) plan.push_back({rng(), npts(rng)});

    std::vector<std::string> failures(static_cast<std::size_t>(a.samples));
    Objective obj = parse_objective(a.objective);

    parallel_for(a.samples, [&](int i) {
        Hull h = random_hull(plan[i].seed, plan[i].n, HullFamily::UniformDisk);
        std::string fail;
        try {
            if (a.shape == "circle") {
                Circle fast = min_enclosing_circle(h);
                Circle slow = oracle_circle(h);
                if (std::abs(fast.radius - slow.radius) > a.tolerance)
                    fail = "radius mismatch " + JsonWriter::number(fast.radius) + " vs " +
                           JsonWriter::number(slow.radius);
            } else if (a.shape == "semidisk") {
                SolveReport<Semidisk> r = smallest_semidisk(h);
                OracleResult<Semidisk> o = oracle_semidisk(h, {720, 3, 0});
                if (!contains(r.container, h)) fail = "containment";
                else if (r.value > o.value + o.resolution_bound + a.tolerance)
                    fail = "worse than oracle";
                else if (h.size() >= 3 && (!check_lemma1(r.container, h) ||
                                           !check_lemma2(r.container, h)))
                    fail = "lemma check";
            } else if (a.shape == "segment") {
                if (h.size() < 3) return;
                SolveReport<CircularSegment> r = smallest_segment(h, obj);
                OracleResult<CircularSegment> o = oracle_segment(h, obj, {360, 3, 0});
                if (!segment_contains(r.container, h)) fail = "containment";
                else if (r.value > o.value + o.resolution_bound + a.tolerance * o.value)
                    fail = "worse than oracle";
            } else {  // sector
                SolveReport<Sector> r = smallest_sector(h, obj);
                OracleResult<Sector> o = oracle_sector(h, obj, {2048, 3, 0});
                if (!sector_contains(r.container, h)) fail = "containment";
                else if (r.value > o.value * (1.0 + 1e-2) + o.resolution_bound)
                    fail = "worse than oracle";
            }
        } catch (const std::exception& e) {
            fail = std::string("exception: ") + e.what();
        }
        failures[static_cast<std::size_t>(i)] = fail;
    });

    int bad = 0;
    for (int i = 0; i < a.samples; ++i)
        if (!failures[static_cast<std::size_t>(i)].empty()) {
            ++bad;
            std::cerr << "fuzz sample " << i << " (hull seed " << plan[i].seed
                      << "): " << failures[static_cast<std::size_t>(i)] << "\n";
        }
    std::cout << "fuzz: " << (a.samples - bad) << "/" << a.samples << " passed\n";
    return bad == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal oriented convex containers of planar point sets"};
    app.require_subcommand(1);

    const std::vector<std::string> shapes{"circle", "semidisk", "segment", "sector"};
    const std::vector<std::string> objectives{"area", "perimeter"};

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "compute a minimal container");
    solve->add_option("--shape", solve_args.shape, "container shape")
        ->required()
        ->check(CLI::IsMember(shapes));
    solve->add_option("--objective", solve_args.objective, "objective for segment/sector")
        ->check(CLI::IsMember(objectives));
    solve->add_option("--input", solve_args.input, "point-set file")->required();
    solve->add_option("--format", solve_args.format, "csv or json (default: by extension)")
        ->check(CLI::IsMember({"csv", "json"}));
    solve->add_option("--output", solve_args.output, "write JSON report here");
    solve->add_option("--svg", solve_args.svg, "render the result as SVG");

    OracleArgs oracle_args;
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force reference solver");
    oracle->add_option("--shape", oracle_args.base.shape, "container shape")
        ->required()
        ->check(CLI::IsMember(shapes));
    oracle->add_option("--objective", oracle_args.base.objective, "objective")
        ->check(CLI::IsMember(objectives));
    oracle->add_option("--input", oracle_args.base.input, "point-set file")->required();
    oracle->add_option("--format", oracle_args.base.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    oracle->add_option("--output", oracle_args.base.output, "write JSON report here");
    oracle->add_option("--svg", oracle_args.base.svg, "render the result as SVG");
    oracle->add_option("--direction-steps", oracle_args.direction_steps, "orientation grid");
    oracle->add_option("--refine-rounds", oracle_args.refine_rounds, "refinement rounds");
    oracle->add_option("--seed", oracle_args.seed, "rng seed");

    std::string exp_kind, exp_out;
    int exp_samples = 100, exp_steps = 32;
    std::uint64_t exp_seed = 0;
    double exp_range_deg = 80.0, exp_step_deg = 0.25;
    bool exp_seed_given = false;
    CLI::App* experiment = app.add_subcommand("experiment", "run a numerical experiment");
    experiment->add_option("kind", exp_kind, "lemma3, remark or q3")
        ->required()
        ->check(CLI::IsMember({"lemma3", "remark", "q3"}));
    experiment->add_option("--out", exp_out, "output directory")->required();
    experiment->add_option("--samples", exp_samples, "random samples (q3)");
    experiment->add_option("--seed", exp_seed, "rng seed (q3)")
        ->each([&](const std::string&) { exp_seed_given = true; });
    experiment->add_option("--steps", exp_steps, "family steps (remark)");
    experiment->add_option("--range-deg", exp_range_deg, "apex sweep range (lemma3)");
    experiment->add_option("--step-deg", exp_step_deg, "apex sweep step (lemma3)");

    FuzzArgs fuzz_args;
    bool fuzz_seed_given = false;
    CLI::App* fuzz = app.add_subcommand("fuzz", "differential fuzzing against the oracles");
    fuzz->add_option("--shape", fuzz_args.shape, "container shape")
        ->required()
        ->check(CLI::IsMember(shapes));
    fuzz->add_option("--objective", fuzz_args.objective, "objective")
        ->check(CLI::IsMember(objectives));
    fuzz->add_option("--samples", fuzz_args.samples, "number of random hulls");
    fuzz->add_option("--seed", fuzz_args.seed, "rng seed")
        ->each([&](const std::string&) { fuzz_seed_given = true; });
    fuzz->add_option("--tolerance", fuzz_args.tolerance, "differential tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadFlags;
    }

    try {
        if (*solve) return run_solve(solve_args);
        if (*oracle) return run_oracle(oracle_args);
        if (*experiment) {
            if (exp_kind == "lemma3")
                return run_experiment_lemma3(exp_out, exp_range_deg, exp_step_deg);
            if (exp_kind == "remark") return run_experiment_remark(exp_out, exp_steps);
            if (!exp_seed_given) {
                std::cerr << "error: experiment q3 requires an explicit --seed\n";
                return kExitBadFlags;
            }
            return run_experiment_q3(exp_out, exp_samples, exp_seed);
        }
        if (*fuzz) {
            if (!fuzz_seed_given) {
                std::cerr << "error: fuzz requires an explicit --seed\n";
                return kExitBadFlags;
            }
            return run_fuzz(fuzz_args);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const NoCrossover& e) {
        std::cerr << "error: no crossover: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitBadFlags;
}

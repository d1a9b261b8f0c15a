// nsenum: normal surface enumeration and solution-set conversion.
//
// Subcommands:
//   validate     check a gluing file describes a compact triangulation
//   enumerate    vertex normal surfaces in standard or quad coordinates
//   convert      translate a solution set between coordinate systems
//   bench        compare direct enumeration against the quad pipeline

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "nsurf/convert.hpp"
#include "nsurf/enumerate.hpp"
#include "nsurf/oracle.hpp"

using namespace nsurf;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

struct LoadedTriangulation {
    Triangulation tri;
    Skeleton skel;
};

// Exit codes: parse problems exit 1; triangulations that are not
// compact-valid (ideal vertices, reversed self-identified edges) exit 2.
LoadedTriangulation load_valid(const std::string& path) {
    Triangulation tri;
    try {
        tri = parse_triangulation(read_file(path));
    } catch (const ParseError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        std::exit(1);
    }
    try {
        Skeleton skel = build_skeleton(tri);
        ValidationReport rep = validate_compact(tri, skel);
        if (!rep.isCompact) {
            for (const auto& f : rep.failures) std::cerr << path << ": " << f << "\n";
            std::cerr << path << ": not a compact triangulation\n";
            std::exit(2);
        }
        return {std::move(tri), std::move(skel)};
    } catch (const InvalidEdgeError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        std::exit(2);
    }
}

// Runs f(control) on a worker thread, cancelling after timeoutSecs.
// Returns false when the run was cancelled.
template <typename F>
bool run_with_timeout(double timeoutSecs, F&& f) {
    std::atomic<bool> cancel{false};
    std::mutex m;
    std::condition_variable cv;
    bool done = false;
    std::exception_ptr error;

    std::thread worker([&] {
        try {
            f(RunControl{&cancel});
        } catch (const Cancelled&) {
        } catch (...) {
            error = std::current_exception();
        }
        std::lock_guard lock(m);
        done = true;
        cv.notify_all();
    });

    bool finished;
    {
        std::unique_lock lock(m);
        finished = cv.wait_for(lock, std::chrono::duration<double>(timeoutSecs),
                               [&] { return done; });
        if (!finished) cancel.store(true);
        cv.wait(lock, [&] { return done; });
    }
    worker.join();
    if (error) std::rethrow_exception(error);
    return finished && !cancel.load();
}

int cmd_validate(const std::string& path) {
    Triangulation tri;
    try {
        tri = parse_triangulation(read_file(path));
    } catch (const ParseError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        Skeleton skel = build_skeleton(tri);
        ValidationReport rep = validate_compact(tri, skel);
        std::cout << "tetrahedra: " << tri.tets << "\n";
        std::cout << "vertex classes: " << skel.vertexClassCount
                  << ", edge classes: " << skel.edgeClassCount
                  << ", boundary faces: " << skel.boundaryFaces.size() << "\n";
        for (int v = 0; v < skel.vertexClassCount; ++v) {
            const auto& info = rep.perVertex[v];
            std::cout << "vertex " << v << ": link euler characteristic " << info.eulerChar
                      << (info.boundary ? ", with boundary" : ", closed") << "\n";
        }
        for (const auto& f : rep.failures) std::cout << "failure: " << f << "\n";
        std::cout << (rep.isCompact ? "compact" : "not compact") << "\n";
        return rep.isCompact ? 0 : 2;
    } catch (const InvalidEdgeError& e) {
        std::cout << "failure: " << e.what() << "\n";
        std::cout << "not compact\n";
        return 2;
    }
}

int cmd_enumerate(const std::string& path, const std::string& coords, const std::string& algorithm,
                  const std::string& outPath, const std::string& tracePath, double timeoutSecs) {
    if (algorithm == "via-quad" && coords != "std") {
        std::cerr << "--algorithm via-quad applies only to --coords std\n";
        return 1;
    }
    if (!tracePath.empty() && algorithm != "via-quad") {
        std::cerr << "--trace-out applies only to --algorithm via-quad\n";
        return 1;
    }
    auto [tri, skel] = load_valid(path);

    SolutionSet result;
    ConversionTrace trace;
    bool finished = false;
    try {
        if (algorithm == "via-quad") {
            finished = run_with_timeout(timeoutSecs, [&](RunControl run) {
                ConvertOptions opt;
                opt.run = run;
                opt.trace = &trace;
                result = enumerate_std_via_quad(tri, skel, opt);
            });
        } else {
            const MatchingSystem m = coords == "std" ? standard_matching_system(tri, skel)
                                                     : quad_matching_system(tri, skel);
            finished = run_with_timeout(
                timeoutSecs, [&](RunControl run) { result = enumerate_solution_set(m, run); });
        }
    } catch (const std::exception& e) {
        std::cerr << "enumeration failed: " << e.what() << "\n";
        return 1;
    }
    if (!finished) {
        std::cerr << "enumeration timed out after " << timeoutSecs << "s\n";
        return 1;
    }

    write_output(outPath, write_solution_set(result));
    if (!tracePath.empty()) write_output(tracePath, write_trace_csv(trace));
    return 0;
}

int cmd_convert(const std::string& path, const std::string& setPath, const std::string& direction,
                const std::string& outPath, const std::string& tracePath, double timeoutSecs) {
    if (!tracePath.empty() && direction != "quad2std") {
        std::cerr << "--trace-out applies only to quad2std conversions\n";
        return 1;
    }
    auto [tri, skel] = load_valid(path);

    SolutionSet input;
    try {
        input = parse_solution_set(read_file(setPath));
    } catch (const ParseError& e) {
        std::cerr << setPath << ": " << e.what() << "\n";
        return 1;
    }

    const Coords expected = direction == "std2quad" ? Coords::Standard : Coords::Quad;
    if (input.space != expected || input.tets != tri.tets) {
        std::cerr << setPath << ": solution set does not match direction " << direction
                  << " for this triangulation\n";
        return 1;
    }

    SolutionSet result;
    ConversionTrace trace;
    bool finished = false;
    try {
        if (direction == "std2quad") {
            const MatchingSystem mstd = standard_matching_system(tri, skel);
            for (const NormalVector& v : input.rays)
                if (!is_admissible(v, mstd)) {
                    std::cerr << setPath << ": ray not admissible: " << to_string(v) << "\n";
                    return 1;
                }
            finished = run_with_timeout(
                timeoutSecs, [&](RunControl) { result = std_to_quad(input, tri); });
        } else {
            const MatchingSystem mstd = standard_matching_system(tri, skel);
            finished = run_with_timeout(timeoutSecs, [&](RunControl run) {
                ConvertOptions opt;
                opt.run = run;
                opt.trace = &trace;
                result = quad_to_std(input, tri, skel, mstd, opt);
            });
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    if (!finished) {
        std::cerr << "conversion timed out after " << timeoutSecs << "s\n";
        return 1;
    }

    write_output(outPath, write_solution_set(result));
    if (!tracePath.empty()) write_output(tracePath, write_trace_csv(trace));
    return 0;
}

struct BenchRecord {
    std::string input;
    int tets = 0;
    std::size_t quadSize = 0;
    std::size_t stdSize = 0;
    double directSecs = 0;
    bool directCensored = false;
    double pipelineSecs = 0;
    bool pipelineCensored = false;
    double directPeakRatio = 0;
    double convertPeakRatio = 0;
};

std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << "# nsenum bench v1; times in seconds, censored runs hit the timeout\n";
    out << "input,n,quad_size,std_size,direct_secs,direct_censored,pipeline_secs,"
           "pipeline_censored,speedup,direct_peak_ratio,convert_peak_ratio\n";
    for (const auto& r : records) {
        out << r.input << ',' << r.tets << ',' << r.quadSize << ',' << r.stdSize << ',';
        out << std::fixed << std::setprecision(6) << r.directSecs << ',' << (r.directCensored ? 1 : 0)
            << ',' << r.pipelineSecs << ',' << (r.pipelineCensored ? 1 : 0) << ',';
        if (!r.directCensored && !r.pipelineCensored && r.pipelineSecs > 0)
            out << std::setprecision(2) << r.directSecs / r.pipelineSecs;
        out << ',' << std::setprecision(3) << r.directPeakRatio << ',' << r.convertPeakRatio
            << "\n";
    }
    return out.str();
}

BenchRecord bench_one(const std::string& path, double timeoutSecs) {
    BenchRecord rec;
    rec.input = std::filesystem::path(path).filename().string();

    Triangulation tri = parse_triangulation(read_file(path));
    Skeleton skel = build_skeleton(tri);
    rec.tets = tri.tets;

    const MatchingSystem mstd = standard_matching_system(tri, skel);

    auto now = [] { return std::chrono::steady_clock::now(); };
    auto secs = [](auto a, auto b) { return std::chrono::duration<double>(b - a).count(); };

    {
        SolutionSet direct;
        EnumStats stats;
        auto t0 = now();
        bool ok = run_with_timeout(timeoutSecs, [&](RunControl run) {
            direct = enumerate_solution_set(mstd, run, &stats);
        });
        rec.directSecs = secs(t0, now());
        rec.directCensored = !ok;
        if (ok) {
            rec.stdSize = direct.rays.size();
            if (stats.finalList > 0)
                rec.directPeakRatio =
                    static_cast<double>(stats.peakList) / static_cast<double>(stats.finalList);
        }
    }

    {
        SolutionSet viaQuad;
        ConversionTrace trace;
        EnumStats quadStats;
        auto t0 = now();
        bool ok = run_with_timeout(timeoutSecs, [&](RunControl run) {
            ConvertOptions opt;
            opt.run = run;
            opt.trace = &trace;
            viaQuad = enumerate_std_via_quad(tri, skel, opt, &quadStats);
        });
        rec.pipelineSecs = secs(t0, now());
        rec.pipelineCensored = !ok;
        if (ok) {
            rec.quadSize = quadStats.finalList;
            rec.stdSize = viaQuad.rays.size();
            rec.convertPeakRatio = trace.max_list_ratio();
        }
    }
    return rec;
}

int cmd_bench(const std::string& dir, double timeoutSecs, int jobs, const std::string& outPath) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".glu")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());

    std::vector<BenchRecord> records(files.size());
    std::vector<std::string> errors(files.size());
    std::atomic<std::size_t> nextIdx{0};
    auto workerFn = [&] {
        for (;;) {
            std::size_t i = nextIdx.fetch_add(1);
            if (i >= files.size()) return;
            try {
                records[i] = bench_one(files[i], timeoutSecs);
            } catch (const std::exception& e) {
                errors[i] = e.what();
                records[i].input = std::filesystem::path(files[i]).filename().string();
            }
        }
    };

    if (jobs <= 1) {
        workerFn();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(workerFn);
        for (auto& th : pool) th.join();
    }

    std::vector<BenchRecord> ok;
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (!errors[i].empty())
            std::cerr << files[i] << ": " << errors[i] << "\n";
        else
            ok.push_back(records[i]);
    }
    write_output(outPath, bench_csv(ok));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"normal surface enumeration in standard and quadrilateral coordinates"};
    app.require_subcommand(1);

    std::string path, setPath, outPath, tracePath;
    std::string coords = "std", algorithm = "direct", direction;
    double timeoutSecs = 300.0;
    int jobs = 1;

    CLI::App* validate = app.add_subcommand("validate", "check a gluing file");
    validate->add_option("file", path, "gluing file")->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate vertex normal surfaces");
    enumerate->add_option("file", path, "gluing file")->required();
    enumerate->add_option("--coords", coords, "coordinate system")
        ->check(CLI::IsMember({"std", "quad"}));
    enumerate->add_option("--algorithm", algorithm, "enumeration route")
        ->check(CLI::IsMember({"direct", "via-quad"}));
    enumerate->add_option("-o,--out", outPath, "output file (default stdout)");
    enumerate->add_option("--trace-out", tracePath, "conversion trace CSV (via-quad only)");
    enumerate->add_option("--timeout-secs", timeoutSecs, "cancel after this many seconds");

    CLI::App* convert = app.add_subcommand("convert", "convert a solution set");
    convert->add_option("file", path, "gluing file")->required();
    convert->add_option("set", setPath, "solution set file")->required();
    convert->add_option("--direction", direction, "conversion direction")
        ->required()
        ->check(CLI::IsMember({"std2quad", "quad2std"}));
    convert->add_option("-o,--out", outPath, "output file (default stdout)");
    convert->add_option("--trace-out", tracePath, "conversion trace CSV (quad2std only)");
    convert->add_option("--timeout-secs", timeoutSecs, "cancel after this many seconds");

    CLI::App* bench = app.add_subcommand("bench", "compare direct and via-quad enumeration");
    bench->add_option("dir", path, "directory of .glu files")->required();
    bench->add_option("--timeout-secs", timeoutSecs, "per-run timeout");
    bench->add_option("--jobs", jobs, "parallel bench workers")->check(CLI::PositiveNumber);
    bench->add_option("-o,--out", outPath, "output CSV (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(path);
        if (enumerate->parsed())
            return cmd_enumerate(path, coords, algorithm, outPath, tracePath, timeoutSecs);
        if (convert->parsed())
            return cmd_convert(path, setPath, direction, outPath, tracePath, timeoutSecs);
        if (bench->parsed()) return cmd_bench(path, timeoutSecs, jobs, outPath);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}

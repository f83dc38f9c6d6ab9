#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pfh/json_io.hpp"
#include "pfh/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitBudget = 3;
constexpr int kExitGenericity = 4;

constexpr std::uint64_t kDefaultSeed = 20240801;

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(output_path);
        out << text << "\n";
    }
}

int cmd_hilbert(long n, long t, std::optional<long> dim, const std::string& format,
                const std::string& output_path) {
    pfh::ProblemShape shape{n, t};
    pfh::Json report = pfh::series_report_json(shape, dim);
    if (format == "json") {
        emit(report.dump(2), output_path);
        return kExitPass;
    }
    std::ostringstream ss;
    ss << "n = " << n << ", t = " << t << "\n";
    ss << "h-vector     : " << report["hn"].dump() << "\n";
    ss << "multiplicity : " << report["multiplicity"].get<std::string>() << "\n";
    ss << "HN(z)        : " << pfh::hn_numerator_from_formula(shape).str() << "\n";
    ss << "Betti table  :\n";
    for (const auto& row : report["betti"]) {
        ss << "  N=" << row["N"] << ":";
        for (const auto& s : row["summands"])
            ss << "  (" << s["xdeg"] << "," << s["ydeg"] << ")^" << s["mult"].get<std::string>();
        ss << "\n";
    }
    if (dim) {
        pfh::HilbertSeries hs =
            pfh::hilbert_series(shape, {pfh::IntPolynomial::constant(1), *dim});
        ss << "HS numerator : " << hs.numerator.str() << "  over (1-z)^" << hs.denom_power << "\n";
    }
    emit(ss.str(), output_path);
    return kExitPass;
}

int cmd_pfaffians(const std::string& file, long n, long t, int dim, std::uint64_t seed,
                  const std::string& format, const std::string& output_path) {
    std::optional<pfh::AlmostAlternatingMatrix> rho;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "cannot open matrix file: " << file << "\n";
            return kExitBadArguments;
        }
        pfh::Json j = pfh::Json::parse(in);
        rho = pfh::matrix_from_json(j);
    } else {
        rho = pfh::random_generic_instance({n, t}, dim, seed);
    }
    auto gens = pfh::ideal_generators(*rho);
    pfh::Json report = pfh::generators_json(*rho, gens);
    if (format == "json") {
        emit(report.dump(2), output_path);
        return kExitPass;
    }
    std::ostringstream ss;
    std::map<long, long> per_degree;
    for (const auto& rec : gens.records) ++per_degree[rec.degree];
    auto names = pfh::default_var_names(rho->ambient_dim());
    for (const auto& rec : gens.records) {
        ss << "S = {";
        for (size_t i = 0; i < rec.column_subset.size(); ++i)
            ss << (i ? "," : "") << rec.column_subset[i];
        ss << "}  degree " << rec.degree << (rec.is_zero ? "  [zero]" : "") << "\n    "
           << rec.pfaffian.str(names) << "\n";
    }
    ss << gens.records.size() << " generators;";
    for (const auto& [d, c] : per_degree) ss << "  degree " << d << ": " << c;
    emit(ss.str(), output_path);
    return kExitPass;
}

int cmd_verify(const std::string& suite, const pfh::SweepRanges& ranges,
               const std::string& format, const std::string& output_path) {
    auto reports = pfh::run_suite(suite, ranges);
    long total_cases = 0, total_failures = 0;
    double total_seconds = 0.0;
    pfh::Json j;
    j["suite"] = suite;
    pfh::Json arr = pfh::Json::array();
    std::ostringstream ss;
    for (const auto& r : reports) {
        total_cases += r.cases;
        total_failures += r.failures;
        total_seconds += r.seconds;
        pfh::Json item;
        item["name"] = r.name;
        item["cases"] = r.cases;
        item["failures"] = r.failures;
        if (!r.passed()) item["first_counterexample"] = r.first_counterexample;
        item["seconds"] = r.seconds;
        arr.push_back(item);
        ss << (r.passed() ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.cases << " cases";
        if (!r.passed())
            ss << ", " << r.failures << " failures, first: " << r.first_counterexample;
        ss << ")\n";
    }
    j["sweeps"] = arr;
    j["cases"] = total_cases;
    j["failures"] = total_failures;
    j["seconds"] = total_seconds;
    ss << (total_failures == 0 ? "PASS" : "FAIL") << "  total: " << total_cases << " cases, "
       << total_failures << " failures";
    emit(format == "json" ? j.dump(2) : ss.str(), output_path);
    return total_failures == 0 ? kExitPass : kExitCounterexample;
}

int cmd_oracle(long n, long t, int dim, std::uint64_t seed, int max_redraws,
               const std::string& format, const std::string& output_path) {
    pfh::OracleReport report = pfh::oracle_check({n, t}, dim, seed, max_redraws);
    if (format == "json") {
        emit(pfh::oracle_report_json(report).dump(2), output_path);
    } else {
        std::ostringstream ss;
        ss << "shape (" << n << "," << t << ")  dim " << dim << "  seed " << seed << "\n"
           << "codim " << report.codim << "  redraws " << report.redraws << "\n"
           << "Groebner Hilbert numerator: " << report.hilbert_numerator.str() << "\n"
           << (report.matches_theorem ? "MATCH" : "MISMATCH")
           << " against (1-z)^t * hn(n,t)";
        emit(ss.str(), output_path);
    }
    return report.matches_theorem ? kExitPass : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert series, Pfaffian ideal generators, and verification sweeps for "
                 "quotients by ideals of almost alternating matrices"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string output_path;
    app.add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    app.add_option("--output", output_path, "write the report to a file instead of stdout");

    long n = 0, t = 0;
    std::optional<long> hilbert_dim;
    auto* hilbert = app.add_subcommand("hilbert", "closed-form h-vector, multiplicity, HN, Betti table");
    hilbert->add_option("--n", n)->required();
    hilbert->add_option("--t", t)->required();
    hilbert->add_option("--d", hilbert_dim, "ambient polynomial ring dimension");

    std::string matrix_file;
    int dim = 4;
    std::uint64_t seed = kDefaultSeed;
    auto* pfaffians = app.add_subcommand("pfaffians", "generators of J(rho)");
    pfaffians->add_option("--file", matrix_file, "matrix JSON file");
    pfaffians->add_option("--n", n);
    pfaffians->add_option("--t", t);
    pfaffians->add_option("--dim", dim, "ambient dimension for generated instances");
    pfaffians->add_option("--seed", seed);

    std::string suite = "all";
    pfh::SweepRanges ranges;
    auto* verify = app.add_subcommand("verify", "run verification sweeps");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"identities", "series", "resolution", "all"}));
    verify->add_option("--max-n", ranges.max_n);
    verify->add_option("--max-t", ranges.max_t);
    verify->add_option("--max-alpha", ranges.alpha_max);
    verify->add_option("--max-i", ranges.i_max);

    int oracle_dim = 4, max_redraws = 5;
    auto* oracle = app.add_subcommand("oracle", "Groebner-basis check of the closed form");
    oracle->add_option("--n", n)->required();
    oracle->add_option("--t", t)->required();
    oracle->add_option("--dim", oracle_dim)->required();
    oracle->add_option("--seed", seed);
    oracle->add_option("--max-redraws", max_redraws);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArguments;
    }

    try {
        if (hilbert->parsed()) return cmd_hilbert(n, t, hilbert_dim, format, output_path);
        if (pfaffians->parsed()) {
            if (matrix_file.empty() && (n == 0 || t == 0)) {
                std::cerr << "pfaffians: provide --file or --n/--t\n";
                return kExitBadArguments;
            }
            return cmd_pfaffians(matrix_file, n, t, dim, seed, format, output_path);
        }
        if (verify->parsed()) return cmd_verify(suite, ranges, format, output_path);
        if (oracle->parsed())
            return cmd_oracle(n, t, oracle_dim, seed, max_redraws, format, output_path);
    } catch (const pfh::GenericityError& e) {
        std::cerr << e.what() << "\n";
        return kExitGenericity;
    } catch (const pfh::ResourceError& e) {
        std::cerr << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitBadArguments;
    }
    return kExitBadArguments;
}

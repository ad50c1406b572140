#include "orthoserie/mrs.hpp"
#include "orthoserie/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using namespace orthoserie;

namespace {

std::string cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("ORTHOSERIE_CACHE")) return env;
    return "cache";
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open output file " + out_path);
        os << text;
    }
}

// Cached recurrence table under <cache>/<weight>/<N>.json; rebuilds when the
// discretization parameters differ.
RecurrenceTable cached_table(const WeightSpec& spec, int N, const std::string& cache,
                             const DiscretizationConfig& disc) {
    const fs::path path = fs::path(cache) / spec.descriptor() / (std::to_string(N) + ".json");
    if (fs::exists(path)) {
        std::ifstream is(path, std::ios::binary);
        std::stringstream buf;
        buf << is.rdbuf();
        try {
            RecurrenceTable t = table_from_json(buf.str());
            if (t.meta().weight == spec.descriptor() && t.meta().disc == disc && t.N() == N)
                return t;
        } catch (const std::exception&) {
            // fall through to rebuild on any parse problem
        }
    }
    RecurrenceTable t = recurrence_table(spec, N, disc);
    fs::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    os << table_to_json(t);
    return t;
}

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stod(tok));
    if (v.empty()) throw std::invalid_argument("empty list");
    return v;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> v;
    for (double d : parse_doubles(s)) v.push_back(static_cast<int>(d));
    return v;
}

std::string rule_to_json(const GaussRule& rule, const std::string& weight) {
    nlohmann::json j;
    j["weight"] = weight;
    j["n"] = rule.n;
    j["nodes"] = rule.nodes;
    j["weights"] = rule.weights;
    return j.dump(2);
}

std::string rule_to_csv(const GaussRule& rule) {
    std::ostringstream os;
    os << "node,weight\n";
    for (int i = 0; i < rule.n; ++i)
        os << fmt17(rule.nodes[i]) << ',' << fmt17(rule.weights[i]) << '\n';
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthoserie: orthogonal expansions for exponential weights"};
    app.require_subcommand(1);

    std::string weight_s, f_s, out_path, format = "json", cache_flag;
    std::string x_csv = "1", n_csv = "8,16,32,64,128";
    double t_value = 1.0, x_value = 0.0, t_point = 1.0;
    int N = 32, n = 8;
    unsigned long long seed = 42;
    TheoremConstants consts;

    app.add_option("--cache", cache_flag, "cache directory (default $ORTHOSERIE_CACHE or ./cache)");
    app.add_option("--seed", seed, "seed for randomized checks")->capture_default_str();

    auto* mrs_cmd = app.add_subcommand("mrs", "print the MRS number a_t");
    mrs_cmd->add_option("--weight", weight_s)->required();
    mrs_cmd->add_option("--t", t_value)->required();

    auto* recur_cmd = app.add_subcommand("recur", "build and cache a recurrence table");
    recur_cmd->add_option("--weight", weight_s)->required();
    recur_cmd->add_option("--N", N)->required();
    recur_cmd->add_option("--out", out_path);

    auto* nodes_cmd = app.add_subcommand("nodes", "print a Gauss rule");
    nodes_cmd->add_option("--weight", weight_s)->required();
    nodes_cmd->add_option("--n", n)->required();
    nodes_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    nodes_cmd->add_option("--out", out_path);

    auto* expand_cmd = app.add_subcommand("expand", "print expansion coefficients");
    expand_cmd->add_option("--weight", weight_s)->required();
    expand_cmd->add_option("--f", f_s)->required();
    expand_cmd->add_option("--N", N)->required();
    expand_cmd->add_option("--out", out_path);

    auto* kernel_cmd = app.add_subcommand("kernel", "print K_n(x,t)");
    kernel_cmd->add_option("--weight", weight_s)->required();
    kernel_cmd->add_option("--n", n)->required();
    kernel_cmd->add_option("--x", x_value)->required();
    kernel_cmd->add_option("--t", t_point)->required();

    auto* conv_cmd = app.add_subcommand("converge", "run a convergence experiment");
    conv_cmd->add_option("--weight", weight_s)->required();
    conv_cmd->add_option("--f", f_s)->required();
    conv_cmd->add_option("--x", x_csv, "comma-separated x values")->required();
    conv_cmd->add_option("--n", n_csv, "comma-separated n values")->required();
    conv_cmd->add_option("--delta", consts.delta)->capture_default_str();
    conv_cmd->add_option("--d", consts.d)->capture_default_str();
    conv_cmd->add_option("--c", consts.c)->capture_default_str();
    conv_cmd->add_option("--C", consts.C)->capture_default_str();
    conv_cmd->add_option("--c1", consts.c1)->capture_default_str();
    conv_cmd->add_flag("--split-form", consts.split_form, "swap the k-sum for the wide+narrow window split");
    std::string conv_format = "csv";
    conv_cmd->add_option("--format", conv_format)->check(CLI::IsMember({"json", "csv"}));
    conv_cmd->add_option("--out", out_path);

    auto* lemma_cmd = app.add_subcommand("verify-lemmas", "run the lemma equivalence suite");
    lemma_cmd->add_option("--weight", weight_s)->required();
    lemma_cmd->add_option("--n", n_csv, "comma-separated n values")->required();
    double bracket = 20.0;
    lemma_cmd->add_option("--bracket", bracket)->capture_default_str();
    lemma_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    lemma_cmd->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const std::string cache = cache_dir(cache_flag);

        if (*mrs_cmd) {
            const WeightSpec spec = parse_weight(weight_s);
            std::cout << fmt17(mrs_number(spec, t_value).a_t) << '\n';
            return 0;
        }
        if (*recur_cmd) {
            const WeightSpec spec = parse_weight(weight_s);
            emit(table_to_json(cached_table(spec, N, cache, {})), out_path);
            return 0;
        }
        if (*nodes_cmd) {
            const WeightSpec spec = parse_weight(weight_s);
            const RecurrenceTable table = cached_table(spec, n, cache, {});
            const GaussRule rule = gauss_rule(table, n);
            emit(format == "csv" ? rule_to_csv(rule) : rule_to_json(rule, spec.descriptor()),
                 out_path);
            return 0;
        }
        if (*expand_cmd) {
            const WeightSpec spec = parse_weight(weight_s);
            const BVFunction f = parse_bv(f_s);
            const RecurrenceTable table = cached_table(spec, N, cache, {});
            const GaussRule rule = gauss_rule(table, N);
            emit(coeffs_to_json(coefficients(table, spec, &rule, f, N)), out_path);
            return 0;
        }
        if (*kernel_cmd) {
            const WeightSpec spec = parse_weight(weight_s);
            const RecurrenceTable table = cached_table(spec, n, cache, {});
            std::cout << fmt17(kernel(table, spec, n, x_value, t_point)) << '\n';
            return 0;
        }
        if (*conv_cmd) {
            const WeightSpec spec = parse_weight(weight_s);
            const BVFunction f = parse_bv(f_s);
            const ConvergenceReport rep = convergence_experiment(
                spec, f, parse_doubles(x_csv), parse_ints(n_csv), consts);
            emit(conv_format == "json" ? convergence_to_json(rep) : convergence_to_csv(rep),
                 out_path);
            return 0;
        }
        if (*lemma_cmd) {
            const WeightSpec spec = parse_weight(weight_s);
            LemmaConfig config;
            config.bracket = bracket;
            config.seed = seed;
            const LemmaReport rep = lemma_suite(spec, parse_ints(n_csv), config);
            emit(format == "csv" ? lemmas_to_csv(rep) : lemmas_to_json(rep), out_path);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

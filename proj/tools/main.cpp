// cyclic-split: command-line front end to libcyclic.
//
// Exit codes: 0 success, 1 a numerical check failed, 2 usage or input error.

#include "cyclic/cyclic.h"
#include "handles.hpp"
#include "report.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <array>
#include <cmath>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace cli {
namespace {

constexpr double kSplitTolerance = 1e-8;
constexpr double kUnitarityTolerance = 1e-10;

using json = nlohmann::ordered_json;

json to_json(cyc_complex z) { return json::array({z.re + 0.0, z.im + 0.0}); }

const std::map<std::string, cyc_axis> kAxisNames{{"X", CYC_AXIS_X}, {"Y", CYC_AXIS_Y}, {"Z", CYC_AXIS_Z}};

struct AlgebraChoice {
    CLI::Option* spin_opt = nullptr;
    int two_j = 1;
    std::vector<double> kappa;

    void add_to(CLI::App* sub)
    {
        auto* so3 = sub->add_flag("--so3", "real 3x3 rotation generators, kappa = 1 (default)");
        spin_opt = sub->add_option("--spin", two_j, "spin matrices of size TWO_J+1, kappa = i")->type_name("TWO_J");
        so3->excludes(spin_opt);
        sub->add_option("--kappa", kappa, "rescale the generators to this structure constant")
            ->expected(1, 2)
            ->type_name("RE [IM]");
    }

    std::string label() const { return spin_opt->count() ? fmt::format("spin two_j={}", two_j) : "so3"; }

    RepHandle build() const
    {
        RepHandle rep = spin_opt->count() ? make_spin(two_j) : make_so3();
        if (kappa.empty())
            return rep;
        const complex target(kappa[0], kappa.size() > 1 ? kappa[1] : 0.0);
        return with_kappa(rep.get(), target);
    }
};

void add_output(CLI::App* sub, OutputOptions& out)
{
    sub->add_option("--format", out.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("-o,--output", out.path, "output file (relative paths honour CYCLIC_SPLIT_OUTPUT_DIR)");
}

std::vector<std::pair<cyc_axis, cyc_complex>> factors_of(const cyc_sequence* seq)
{
    std::vector<std::pair<cyc_axis, cyc_complex>> out(cyc_sequence_length(seq));
    for (std::size_t k = 0; k < out.size(); ++k)
        check(cyc_sequence_factor(seq, k, &out[k].first, &out[k].second));
    return out;
}

// ---------------------------------------------------------------- split

struct SplitConfig {
    AlgebraChoice algebra;
    OutputOptions output;
    double a = 0, b = 0, c = 0;
    CLI::Option* c_opt = nullptr;
    CLI::Option* variant_opt = nullptr;
    std::string variant = "t2r1";
    cyc_axis conj = CYC_AXIS_Z;
    cyc_axis inner = CYC_AXIS_X;
};

int run_split(const SplitConfig& cfg)
{
    const RepHandle rep = cfg.algebra.build();
    const cyc_complex kappa = cyc_rep_kappa(rep.get());
    const bool three = cfg.c_opt->count() > 0 || cfg.variant_opt->count() > 0;
    const std::array<double, 3> v{cfg.a, cfg.b, cfg.c};

    cyc_complex p{}, q{}, r{};
    cyc_sequence* raw = nullptr;
    int variant = -1;
    if (three) {
        check(cyc_variant_parse(cfg.variant.c_str(), &variant));
        check(cyc_split_three(kappa, to_c(v[0]), to_c(v[1]), to_c(v[2]), variant, &p, &q, &r, &raw));
    } else {
        if (v[cfg.conj] != 0)
            throw UsageError(fmt::format("two-term split about {} needs a zero {} coefficient", axis_name(cfg.conj),
                                         axis_name(cfg.conj)));
        const double along_next = v[(cfg.conj + 1) % 3];
        const double along_prev = v[(cfg.conj + 2) % 3];
        check(cyc_split_two(kappa, to_c(along_next), to_c(along_prev), cfg.conj, cfg.inner, &p, &q, &raw));
    }
    const SeqHandle seq(raw);

    double residual = 0;
    check(cyc_residual(rep.get(), to_c(v[0]), to_c(v[1]), to_c(v[2]), seq.get(), &residual));
    int printed_differs = 0;
    double printed_residual = 0;
    if (three)
        check(cyc_printed_form_residual(rep.get(), to_c(v[0]), to_c(v[1]), to_c(v[2]), variant, &printed_differs,
                                        &printed_residual));

    Report report;
    report.header = {"quantity", "axis", "re", "im"};
    auto scalar = [&](const char* name, cyc_complex z) { report.rows.push_back({name, "", z.re, z.im}); };
    scalar("p", p);
    scalar("q", q);
    if (three)
        scalar("r", r);
    const auto factors = factors_of(seq.get());
    for (std::size_t k = 0; k < factors.size(); ++k)
        report.rows.push_back({fmt::format("factor{}", k + 1), axis_name(factors[k].first),
                               factors[k].second.re, factors[k].second.im});
    report.rows.push_back({"residual", "", residual, 0.0});
    if (printed_differs)
        report.rows.push_back({"printed_form_residual", "", printed_residual, 0.0});

    json& doc = report.json;
    doc["representation"] = cfg.algebra.label();
    doc["kappa"] = to_json(kappa);
    doc["variant"] = three ? json(cyc_variant_name(variant)) : json(nullptr);
    doc["p"] = to_json(p);
    doc["q"] = to_json(q);
    if (three)
        doc["r"] = to_json(r);
    doc["factors"] = json::array();
    for (const auto& [axis, coefficient] : factors)
        doc["factors"].push_back({{"axis", axis_name(axis)}, {"coefficient", to_json(coefficient)}});
    doc["residual"] = residual;
    if (printed_differs)
        doc["printed_form_residual"] = printed_residual;

    emit(report, cfg.output);
    if (residual > kSplitTolerance) {
        std::cerr << fmt::format("residual {:.3g} exceeds {:g}\n", residual, kSplitTolerance);
        return kVerificationFailed;
    }
    return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyConfig {
    OutputOptions output;
    int draws = 100;
    std::uint64_t seed = 20240611;
    std::string corrupt;
};

int run_verify(const VerifyConfig& cfg)
{
    const int n_variants = cyc_variant_count();
    int corrupt = -1;
    if (!cfg.corrupt.empty())
        check(cyc_variant_parse(cfg.corrupt.c_str(), &corrupt));
    if (cfg.draws == 0)
        std::cerr << "warning: --draws 0 checks nothing; reporting a vacuous pass\n";

    std::vector<std::pair<std::string, RepHandle>> reps;
    reps.emplace_back("so3", make_so3());
    for (int two_j = 1; two_j <= 3; ++two_j)
        reps.emplace_back(fmt::format("spin two_j={}", two_j), make_spin(two_j));

    std::mt19937_64 engine(cfg.seed);
    std::uniform_real_distribution<double> coefficient(-5.0, 5.0);
    std::vector<double> worst(static_cast<std::size_t>(n_variants), 0.0);
    std::vector<std::string> failures;

    for (const auto& [label, rep] : reps) {
        const cyc_complex kappa = cyc_rep_kappa(rep.get());
        for (int draw = 0; draw < cfg.draws; ++draw) {
            const double a = coefficient(engine), b = coefficient(engine), c = coefficient(engine);
            for (int id = 0; id < n_variants; ++id) {
                cyc_sequence* raw = nullptr;
                check(cyc_split_three(kappa, to_c(a), to_c(b), to_c(c), id, nullptr, nullptr, nullptr, &raw));
                SeqHandle seq(raw);
                if (id == corrupt) {
                    // Debug aid: flip the outer conjugation pair.
                    auto f = factors_of(seq.get());
                    std::vector<cyc_axis> axes;
                    std::vector<cyc_complex> coefficients;
                    for (std::size_t k = 0; k < f.size(); ++k) {
                        const bool outer = k == 0 || k + 1 == f.size();
                        axes.push_back(f[k].first);
                        coefficients.push_back(outer ? cyc_complex{-f[k].second.re, -f[k].second.im} : f[k].second);
                    }
                    check(cyc_sequence_create(kappa, axes.data(), coefficients.data(), axes.size(), &raw));
                    seq.reset(raw);
                }
                double residual = 0;
                check(cyc_residual(rep.get(), to_c(a), to_c(b), to_c(c), seq.get(), &residual));
                worst[static_cast<std::size_t>(id)] = std::max(worst[static_cast<std::size_t>(id)], residual);
                if (!(residual <= kSplitTolerance))
                    failures.push_back(fmt::format("{} on {}: a={:.17g} b={:.17g} c={:.17g} seed={} draw={} "
                                                   "residual={:.3g}",
                                                   cyc_variant_name(id), label, a, b, c, cfg.seed, draw, residual));
            }
        }
    }

    Report report;
    report.header = {"variant", "max_residual", "status"};
    json& doc = report.json;
    doc["seed"] = cfg.seed;
    doc["draws"] = cfg.draws;
    doc["tolerance"] = kSplitTolerance;
    doc["variants"] = json::array();
    for (int id = 0; id < n_variants; ++id) {
        const double w = worst[static_cast<std::size_t>(id)];
        const char* status = w <= kSplitTolerance ? "ok" : "FAIL";
        report.rows.push_back({cyc_variant_name(id), w, status});
        doc["variants"].push_back({{"variant", cyc_variant_name(id)}, {"max_residual", w}, {"status", status}});
    }
    doc["failures"] = failures;
    emit(report, cfg.output);

    if (failures.empty())
        return kOk;
    const std::size_t shown = std::min<std::size_t>(failures.size(), 20);
    for (std::size_t k = 0; k < shown; ++k)
        std::cerr << "FAIL " << failures[k] << '\n';
    if (failures.size() > shown)
        std::cerr << fmt::format("... {} failures in total\n", failures.size());
    return kVerificationFailed;
}

// ---------------------------------------------------------------- bch

struct BchConfig {
    OutputOptions output;
    double a = 0.1, b = 0.1;
    bool commuting = false;
    int max_degree = 8;
    int two_j = 1;
};

int run_bch(const BchConfig& cfg)
{
    if (cfg.max_degree < 1)
        throw UsageError("--max-degree must be at least 1");
    const RepHandle rep = make_spin(cfg.two_j);
    const std::size_t n = cyc_rep_dim(rep.get()) * cyc_rep_dim(rep.get());
    auto generator = [&](cyc_axis axis, double scale) {
        std::vector<cyc_complex> m(n);
        check(cyc_rep_generator(rep.get(), axis, m.data()));
        for (auto& z : m)
            z = to_c(complex(0, scale) * from_c(z));
        return m;
    };
    const auto x = generator(cfg.commuting ? CYC_AXIS_Z : CYC_AXIS_X, cfg.a);
    const auto y = generator(cfg.commuting ? CYC_AXIS_Z : CYC_AXIS_Y, cfg.b);

    std::vector<int> degrees;
    for (int d = 1; d <= cfg.max_degree; ++d)
        degrees.push_back(d);
    std::vector<double> errors(degrees.size());
    check(cyc_bch_truncation_curve(cyc_rep_dim(rep.get()), x.data(), y.data(), degrees.data(), degrees.size(),
                                   errors.data()));

    Report report;
    report.header = {"degree", "error"};
    report.json["rows"] = json::array();
    for (std::size_t k = 0; k < degrees.size(); ++k) {
        report.rows.push_back({static_cast<long>(degrees[k]), errors[k]});
        report.json["rows"].push_back({{"degree", degrees[k]}, {"error", errors[k]}});
    }
    emit(report, cfg.output);
    return kOk;
}

// ---------------------------------------------------------------- rabi

struct RabiConfig {
    OutputOptions output;
    double omega = 1, Omega = 1, lambda = 0.1;
    int two_j = 1;
    std::string m_from, m_to;
    double t_start = 0, t_stop = 10;
    int t_count = 101;
    std::vector<double> times;
    CLI::Option* times_opt = nullptr;
};

/// "-1/2", "0.5", "3" -> 2m.
int parse_two_m(const std::string& text)
{
    double value = 0;
    try {
        std::size_t used = 0;
        if (const auto slash = text.find('/'); slash != std::string::npos) {
            const double num = std::stod(text.substr(0, slash), &used);
            if (used != slash)
                throw std::invalid_argument(text);
            const std::string den_text = text.substr(slash + 1);
            const double den = std::stod(den_text, &used);
            if (used != den_text.size() || den == 0)
                throw std::invalid_argument(text);
            value = num / den;
        } else {
            value = std::stod(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
        }
    } catch (const std::logic_error&) {
        throw UsageError("not a number: " + text);
    }
    const double twice = 2 * value;
    if (!std::isfinite(twice) || std::abs(twice - std::round(twice)) > 1e-9)
        throw UsageError("m must be an integer or half-integer: " + text);
    return static_cast<int>(std::lround(twice));
}

std::vector<double> time_grid(const RabiConfig& cfg)
{
    if (cfg.times_opt->count())
        return cfg.times;
    std::vector<double> grid;
    if (cfg.t_count == 1)
        grid.push_back(cfg.t_start);
    for (int k = 0; cfg.t_count > 1 && k < cfg.t_count; ++k)
        grid.push_back(k + 1 == cfg.t_count ? cfg.t_stop
                                            : cfg.t_start + (cfg.t_stop - cfg.t_start) * k / (cfg.t_count - 1));
    return grid;
}

int run_rabi(const RabiConfig& cfg)
{
    const cyc_rabi_params params{cfg.omega, cfg.Omega, cfg.lambda, cfg.two_j};
    const int from = cfg.m_from.empty() ? -cfg.two_j : parse_two_m(cfg.m_from);
    const int to = cfg.m_to.empty() ? cfg.two_j : parse_two_m(cfg.m_to);
    const std::vector<double> grid = time_grid(cfg);
    std::vector<double> probability(grid.size()), defect(grid.size());
    check(cyc_rabi_sweep(&params, grid.data(), grid.size(), from, to, probability.data(), defect.data()));

    double worst = 0;
    for (double d : defect)
        worst = std::max(worst, d);

    Report report;
    report.header = {"t", "probability"};
    json& doc = report.json;
    doc["omega"] = cfg.omega;
    doc["Omega"] = cfg.Omega;
    doc["lambda"] = cfg.lambda;
    doc["two_j"] = cfg.two_j;
    doc["two_m_from"] = from;
    doc["two_m_to"] = to;
    doc["rows"] = json::array();
    for (std::size_t k = 0; k < grid.size(); ++k) {
        report.rows.push_back({grid[k], probability[k]});
        doc["rows"].push_back({{"t", grid[k]}, {"probability", probability[k]}});
    }
    report.trailer.push_back({"max_unitarity_defect", worst});
    doc["max_unitarity_defect"] = worst;
    emit(report, cfg.output);
    if (worst > kUnitarityTolerance) {
        std::cerr << fmt::format("unitarity defect {:.3g} exceeds {:g}\n", worst, kUnitarityTolerance);
        return kVerificationFailed;
    }
    return kOk;
}

// ---------------------------------------------------------------- variants

int run_variants(const OutputOptions& output)
{
    Report report;
    report.header = {"variant", "first_axis", "first_zeroed", "center_axis"};
    report.json["variants"] = json::array();
    for (int id = 0; id < cyc_variant_count(); ++id) {
        cyc_sequence* raw = nullptr;
        check(cyc_split_three({1, 0}, {1, 0}, {1, 0}, {1, 0}, id, nullptr, nullptr, nullptr, &raw));
        const SeqHandle seq(raw);
        const auto f = factors_of(seq.get());
        const char* name = cyc_variant_name(id);
        report.rows.push_back({name, axis_name(f[0].first), axis_name(f[1].first), axis_name(f[2].first)});
        report.json["variants"].push_back({{"variant", name},
                                           {"first_axis", axis_name(f[0].first)},
                                           {"first_zeroed", axis_name(f[1].first)},
                                           {"center_axis", axis_name(f[2].first)}});
    }
    emit(report, output);
    return kOk;
}

} // namespace
} // namespace cli

int main(int argc, char** argv)
{
    using namespace cli;
    CLI::App app{"Factor exponentials of 3-cyclic Lie algebra elements into single-generator exponentials",
                 "cyclic-split"};
    app.require_subcommand(1);

    SplitConfig split;
    auto* split_cmd = app.add_subcommand("split", "factor e^{aX+bY+cZ} and report the residual");
    split.algebra.add_to(split_cmd);
    split_cmd->add_option("-a", split.a, "X coefficient");
    split_cmd->add_option("-b", split.b, "Y coefficient");
    split.c_opt = split_cmd->add_option("-c", split.c, "Z coefficient (selects the five-factor form)");
    split.variant_opt = split_cmd->add_option("--variant", split.variant, "five-factor ordering t2r1..t3r8");
    split_cmd->add_option("--conj", split.conj, "conjugating axis of the three-factor form")
        ->transform(CLI::CheckedTransformer(kAxisNames, CLI::ignore_case));
    split_cmd->add_option("--inner", split.inner, "middle axis of the three-factor form")
        ->transform(CLI::CheckedTransformer(kAxisNames, CLI::ignore_case));
    add_output(split_cmd, split.output);

    VerifyConfig verify;
    auto* verify_cmd = app.add_subcommand("verify", "randomized residual check of all twelve orderings");
    verify_cmd->add_option("--draws", verify.draws, "coefficient draws per representation")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", verify.seed, "random seed");
    verify_cmd->add_option("--corrupt-variant", verify.corrupt, "debug: break one ordering to exercise failure");
    add_output(verify_cmd, verify.output);

    BchConfig bch;
    auto* bch_cmd = app.add_subcommand("bch", "truncation error of the Dynkin series by degree");
    bch_cmd->add_option("-a", bch.a, "X = i a Jx");
    bch_cmd->add_option("-b", bch.b, "Y = i b Jy");
    bch_cmd->add_flag("--commuting", bch.commuting, "use X = i a Jz, Y = i b Jz instead");
    bch_cmd->add_option("--max-degree", bch.max_degree, "highest degree, at most 10");
    bch_cmd->add_option("--spin", bch.two_j, "spin matrices of size TWO_J+1")->type_name("TWO_J");
    add_output(bch_cmd, bch.output);

    RabiConfig rabi;
    auto* rabi_cmd = app.add_subcommand("rabi", "transition probability of a driven spin over a time grid");
    rabi_cmd->add_option("--omega", rabi.omega, "carrier angular frequency");
    rabi_cmd->add_option("--Omega", rabi.Omega, "Larmor angular frequency");
    rabi_cmd->add_option("--lambda", rabi.lambda, "drive strength");
    rabi_cmd->add_option("--spin", rabi.two_j, "spin matrices of size TWO_J+1")->type_name("TWO_J");
    rabi_cmd->add_option("--m-from", rabi.m_from, "initial m (default -J)");
    rabi_cmd->add_option("--m-to", rabi.m_to, "final m (default +J)");
    rabi_cmd->add_option("--t-start", rabi.t_start, "first time");
    rabi_cmd->add_option("--t-stop", rabi.t_stop, "last time");
    rabi_cmd->add_option("--t-count", rabi.t_count, "number of evenly spaced times")->check(CLI::NonNegativeNumber);
    rabi.times_opt = rabi_cmd->add_option("--times", rabi.times, "explicit comma-separated time grid")->delimiter(',');
    add_output(rabi_cmd, rabi.output);

    OutputOptions variants_output;
    auto* variants_cmd = app.add_subcommand("variants", "list the twelve five-factor orderings");
    add_output(variants_cmd, variants_output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (split_cmd->parsed())
            return run_split(split);
        if (verify_cmd->parsed())
            return run_verify(verify);
        if (bch_cmd->parsed())
            return run_bch(bch);
        if (rabi_cmd->parsed())
            return run_rabi(rabi);
        return run_variants(variants_output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}

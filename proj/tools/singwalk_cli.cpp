// Command-line front end: exact counting, series evaluation, sequence
// generation, identity verification and branching-walk simulation.

#include "CLI11.hpp"
#include "json.hpp"

#include "singwalk/funceq.hpp"
#include "singwalk/green.hpp"
#include "singwalk/model.hpp"
#include "singwalk/oracle.hpp"
#include "singwalk/segments.hpp"
#include "singwalk/sequences.hpp"
#include "singwalk/transfer.hpp"
#include "singwalk/verify.hpp"

#include <cstdio>
#include <functional>
#include <future>
#include <iostream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace singwalk;

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

std::string endpoint_key(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

// |t| <= 1/2 gate shared by every evaluation subcommand.
Rational parse_t_or_refuse(const std::string& text) {
    const Rational t = Rational::from_string(text);
    if (t.abs() > Rational(1, 2)) {
        const std::string msg = "error: t = " + t.to_string() +
                                " is outside the admissible interval [-1/2, 1/2] (the coefficient series of Q "
                                "have poles accumulating at t = 1/2, so evaluation beyond it is refused)";
        std::cerr << msg << "\n";
        json record;
        record["error"] = "t_out_of_range";
        record["t"] = t.to_string();
        record["message"] = msg;
        std::cout << record.dump() << "\n";
        std::exit(1);
    }
    return t;
}

std::pair<int, int> parse_endpoint(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--endpoint expects 'i,j'");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

std::vector<std::pair<int, int>> parse_targets(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t semi = text.find(';', pos);
        if (semi == std::string::npos) semi = text.size();
        out.push_back(parse_endpoint(text.substr(pos, semi - pos)));
        pos = semi + 1;
    }
    if (out.empty()) throw CLI::ValidationError("--targets expects 'i,j[;i,j...]'");
    return out;
}

int run_count(const std::string& model, int n, const std::string& endpoint, const std::string& format) {
    const ModelSpec& m = ModelSpec::get(model.at(0));
    const CountTable table = count_walks(m, n);
    std::vector<Integer> values;
    for (int len = 0; len <= n; ++len) values.push_back(Integer(0));
    if (!endpoint.empty()) {
        const auto [i, j] = parse_endpoint(endpoint);
        values = table.endpoint_counts(i, j);
    } else {
        for (int len = 0; len <= n; ++len) values[static_cast<std::size_t>(len)] = table.total(len);
    }
    if (format == "json") {
        json out;
        out["model"] = std::string(1, m.letter());
        out["n"] = n;
        if (!endpoint.empty()) out["endpoint"] = endpoint;
        json counts = json::array();
        for (const auto& v : values) counts.push_back(v.get_str());
        out["counts"] = counts;
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n,count\n";
        for (std::size_t len = 0; len < values.size(); ++len) std::cout << len << "," << values[len].get_str() << "\n";
    } else {
        for (const auto& v : values) std::cout << v.get_str() << "\n";
    }
    return 0;
}

int run_series(const std::string& model, const std::string& t_text, int k_max, int formal_order,
               const std::string& format) {
    const ModelSpec& m = ModelSpec::get(model.at(0));
    if (k_max < 0) throw CLI::ValidationError("--kmax must be nonnegative");
    if (formal_order < 0) throw CLI::ValidationError("--formal-order must be nonnegative");
    const Rational t = parse_t_or_refuse(t_text);
    if (formal_order > 0) {
        const auto rows = endpoint_vectors_formal(m, k_max, static_cast<std::size_t>(formal_order));
        json coeffs;
        for (int k = 0; k <= k_max; ++k)
            for (int idx = 0; idx <= k; ++idx) {
                json arr = json::array();
                for (std::size_t d = 0; d < rows[k][idx].order(); ++d)
                    arr.push_back(rows[k][idx].coeff(d).numerator().get_str());
                coeffs[endpoint_key(k - idx, idx)] = arr;
            }
        json out;
        out["model"] = std::string(1, m.letter());
        out["kmax"] = k_max;
        out["formal_order"] = formal_order;
        out["coefficients"] = coeffs;
        std::cout << out.dump() << "\n";
        return 0;
    }
    const QTruncation q(m, t, k_max);
    if (format == "plain") {
        for (int k = 0; k <= k_max; ++k)
            for (int idx = 0; idx <= k; ++idx)
                std::cout << endpoint_key(k - idx, idx) << " " << q.row(k)[idx].to_string() << "\n";
    } else if (format == "csv") {
        std::cout << "i,j,coefficient\n";
        for (int k = 0; k <= k_max; ++k)
            for (int idx = 0; idx <= k; ++idx)
                std::cout << (k - idx) << "," << idx << "," << q.row(k)[idx].to_string() << "\n";
    } else {
        json coeffs;
        for (int k = 0; k <= k_max; ++k)
            for (int idx = 0; idx <= k; ++idx) coeffs[endpoint_key(k - idx, idx)] = q.row(k)[idx].to_string();
        json out;
        out["model"] = std::string(1, m.letter());
        out["t"] = t.to_string();
        out["kmax"] = k_max;
        out["coefficients"] = coeffs;
        std::cout << out.dump() << "\n";
    }
    return 0;
}

int run_segment(int k, const std::string& t_text, const std::string& format) {
    const Rational t = parse_t_or_refuse(t_text);
    const auto f = f_matrix_by_inversion(static_cast<unsigned>(k) + 1, t);
    if (format == "plain") {
        for (std::size_t i = 0; i < f.rows(); ++i) {
            for (std::size_t j = 0; j < f.cols(); ++j) std::cout << (j ? " " : "") << f.at(i, j).to_string();
            std::cout << "\n";
        }
        return 0;
    }
    if (format == "csv") {
        std::cout << "i,j,value\n";
        for (std::size_t i = 0; i < f.rows(); ++i)
            for (std::size_t j = 0; j < f.cols(); ++j)
                std::cout << i << "," << j << "," << f.at(i, j).to_string() << "\n";
        return 0;
    }
    json rows = json::array();
    for (std::size_t i = 0; i < f.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < f.cols(); ++j) row.push_back(f.at(i, j).to_string());
        rows.push_back(row);
    }
    json out;
    out["k"] = k;
    out["t"] = t.to_string();
    out["w_matrix"] = rows;
    std::cout << out.dump() << "\n";
    return 0;
}

int run_seq(const std::string& kind_name, int n, const std::string& format) {
    const SequenceKind kind = sequence_kind_from_name(kind_name);
    if (n <= 0) throw CLI::ValidationError("--n must be positive");
    const unsigned last = static_cast<unsigned>(n) - 1;
    SequenceCache cache{kind, {}};
    switch (kind) {
        case SequenceKind::bernoulli: cache = bernoulli(last); break;
        case SequenceKind::tangent: cache = tangent_numbers(last); break;
        case SequenceKind::euler_secant: cache = euler_secant(last); break;
        case SequenceKind::median_genocchi: cache = median_genocchi(last); break;
        case SequenceKind::dellac: cache = dellac(last); break;
    }
    if (format == "json") {
        json arr = json::array();
        for (const auto& v : cache.values) arr.push_back(v.to_string());
        json out;
        out["kind"] = kind_name;
        out["values"] = arr;
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n,value\n";
        for (std::size_t i = 0; i < cache.values.size(); ++i)
            std::cout << i << "," << cache.values[i].to_string() << "\n";
    } else {
        for (const auto& v : cache.values) std::cout << v.to_string() << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, const std::string& model, const std::string& v_text, int order,
               unsigned threads, std::uint64_t seed, const std::string& format) {
    const char only_model = model.empty() ? 0 : model.at(0);
    if (only_model) ModelSpec::get(only_model);  // validate early
    if (order < 4) throw CLI::ValidationError("--order must be at least 4");
    std::vector<Rational> vs = {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3)};
    if (!v_text.empty()) vs = {Rational::from_string(v_text)};

    const std::size_t n = static_cast<std::size_t>(order);
    std::vector<std::pair<std::string, std::function<std::vector<CheckResult>()>>> jobs;
    if (suite == "oracle" || suite == "all")
        jobs.emplace_back("oracle", [=] { return suite_oracle(std::min(order / 2, 10), n); });
    if (suite == "segments" || suite == "all")
        jobs.emplace_back("segments", [=] {
            return suite_segments(static_cast<unsigned>(std::min(order, 24)), static_cast<unsigned>(order),
                                  {Rational(1, 3), Rational(-1, 2), Rational(2, 5), Rational(1, 2)});
        });
    if (suite == "sequences" || suite == "all")
        jobs.emplace_back("sequences", [=] {
            return suite_sequences(static_cast<unsigned>(std::max(order, 12)), std::max(order, 12), n);
        });
    if (suite == "funceq" || suite == "all") {
        // one independent job per model: these parallelize cleanly
        std::vector<char> letters = {'A', 'B', 'C', 'D', 'E'};
        if (only_model) letters = {only_model};
        for (char letter : letters)
            jobs.emplace_back(std::string("funceq ") + letter, [=] {
                return suite_funceq(std::min(order, 10), n, std::min(order / 4, 6), n, n, n, vs, letter);
            });
    }
    if (suite == "green" || suite == "all")
        jobs.emplace_back("green", [=] { return suite_green(5, 6, seed); });
    if (jobs.empty()) throw CLI::ValidationError("unknown suite '" + suite + "'");

    std::vector<std::vector<CheckResult>> results(jobs.size());
    if (threads > 1) {
        std::vector<std::future<std::vector<CheckResult>>> futures;
        for (auto& [name, job] : jobs) futures.push_back(std::async(std::launch::async, job));
        for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i].second();
    }

    bool all_ok = true;
    json records = json::array();
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        for (const auto& r : results[i]) {
            all_ok = all_ok && r.pass;
            if (format == "json") {
                json rec;
                rec["suite"] = jobs[i].first;
                rec["name"] = r.name;
                rec["pass"] = r.pass;
                if (!r.detail.empty()) rec["detail"] = r.detail;
                records.push_back(rec);
            } else {
                std::cout << (r.pass ? "PASS: " : "FAIL: ") << "[" << jobs[i].first << "] " << r.name;
                if (!r.pass && !r.detail.empty()) std::cout << " (" << r.detail << ")";
                std::cout << "\n";
            }
        }
    }
    if (format == "json") {
        json out;
        out["suite"] = suite;
        out["order"] = order;
        out["all_pass"] = all_ok;
        out["checks"] = records;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (all_ok ? "all identities verified" : "verification FAILED") << "\n";
    }
    return all_ok ? 0 : 1;
}

int run_simulate(const std::string& model, const std::string& offspring_text, const std::string& targets_text,
                 std::uint64_t ancestors, std::uint64_t seed, int horizon, std::uint64_t cap, unsigned threads) {
    BrwConfig cfg;
    cfg.model = &ModelSpec::get(model.at(0));
    cfg.offspring = OffspringDist::from_string(offspring_text);
    cfg.ancestors = ancestors;
    cfg.seed = seed;
    cfg.horizon = horizon;
    cfg.population_cap = cap;
    cfg.threads = threads;
    const auto targets = parse_targets(targets_text);

    int sum_max = 0;
    for (const auto& [i, j] : targets) sum_max = std::max(sum_max, i + j);
    const QTruncation q = q_half(*cfg.model, sum_max);
    const CountTable table = count_walks(*cfg.model, horizon);
    const Rational green_t = Rational(cfg.model->step_count()) / Rational(2);

    const auto estimates = brw_simulate(cfg, targets);

    json out;
    out["model"] = std::string(1, cfg.model->letter());
    out["offspring"] = offspring_text;
    out["ancestors"] = ancestors;
    out["seed"] = seed;
    out["horizon"] = horizon;
    json arr = json::array();
    for (const auto& e : estimates) {
        const Rational exact = q.coeff(e.target.first, e.target.second);
        const auto partial = green_exact_partial(*cfg.model, e.target.first, e.target.second, green_t, horizon, &table);
        json rec;
        rec["target"] = endpoint_key(e.target.first, e.target.second);
        rec["estimate"] = fmt_double(e.estimate);
        rec["std_error"] = fmt_double(e.std_error);
        rec["exact"] = exact.to_string();
        rec["z"] = fmt_double(e.std_error > 0.0 ? (e.estimate - exact.to_double()) / e.std_error : 0.0);
        rec["horizon_tail"] = fmt_double(partial.gap.to_double());
        rec["censored_lineages"] = e.censored_lineages;
        arr.push_back(rec);
    }
    out["results"] = arr;
    std::cout << out.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration, evaluation and verification of the five singular quarter-plane walk models"};
    app.require_subcommand(1);

    std::string model = "A", format = "plain", endpoint, t_text = "1/2", kind = "bernoulli";
    std::string suite = "all", verify_model, v_text, offspring = "1:1/2,2:1/2", targets = "1,1;2,0";
    int n = 10, k_max = 8, k = 1, formal_order = 0, order = 16, horizon = 60;
    std::uint64_t seed = 0, ancestors = 100000, cap = 1000000;
    unsigned threads = 1;

    auto* count = app.add_subcommand("count", "walk counts by exact dynamic programming");
    count->add_option("--model", model, "model letter A..E")->required();
    count->add_option("--n", n, "maximum walk length")->required();
    count->add_option("--endpoint", endpoint, "fixed endpoint 'i,j' (default: totals per length)");
    count->add_option("--format", format, "plain|json|csv");

    auto* series = app.add_subcommand("series", "coefficients of Q(x,y,t) by transfer products");
    series->add_option("--model", model, "model letter A..E")->required();
    series->add_option("--t", t_text, "rational t, |t| <= 1/2 (e.g. 1/2, -1/3, 0.4)")->required();
    series->add_option("--kmax", k_max, "largest total degree i+j")->required();
    series->add_option("--formal-order", formal_order, "emit t-expansions to this order instead of values");
    series->add_option("--format", format, "plain|json|csv");

    auto* segment = app.add_subcommand("segment", "segment walk matrix W_k = F_{k+1} at rational t");
    segment->add_option("--k", k, "segment index (points (k,0)..(0,k))")->required();
    segment->add_option("--t", t_text, "rational t, |t| <= 1/2")->required();
    segment->add_option("--format", format, "plain|json|csv");

    auto* seq = app.add_subcommand("seq", "special sequences (exact, dual-route checked)");
    seq->add_option("--kind", kind, "bernoulli|tangent|euler_secant|median_genocchi|dellac")->required();
    seq->add_option("--n", n, "number of leading terms to print")->required();
    seq->add_option("--format", format, "plain|json|csv");

    auto* verify = app.add_subcommand("verify", "identity suites with per-check PASS/FAIL lines");
    verify->add_option("--suite", suite, "oracle|segments|sequences|funceq|green|all");
    verify->add_option("--model", verify_model, "restrict funceq checks to one model");
    verify->add_option("--v", v_text, "use a single v = p/q for the difference equations");
    verify->add_option("--order", order, "series truncation order");
    verify->add_option("--threads", threads, "run suites concurrently");
    verify->add_option("--seed", seed, "seed for the randomized checks");
    verify->add_option("--format", format, "plain|json");

    auto* simulate = app.add_subcommand("simulate", "branching random walk killed at the boundary");
    simulate->add_option("--model", model, "model letter A..E")->required();
    simulate->add_option("--offspring", offspring, "offspring law, e.g. '1:1/2,2:1/2' (mean must be #S/2)");
    simulate->add_option("--targets", targets, "visit targets 'i,j[;i,j...]'");
    simulate->add_option("--ancestors", ancestors, "number of independent ancestors");
    simulate->add_option("--seed", seed, "base seed (per-ancestor substreams)");
    simulate->add_option("--horizon", horizon, "maximum generations");
    simulate->add_option("--cap", cap, "population cap per ancestor");
    simulate->add_option("--threads", threads, "worker threads (result is thread-count independent)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) return run_count(model, n, endpoint, format);
        if (series->parsed()) return run_series(model, t_text, k_max, formal_order, format);
        if (segment->parsed()) return run_segment(k, t_text, format);
        if (seq->parsed()) return run_seq(kind, n, format);
        if (verify->parsed()) return run_verify(suite, verify_model, v_text, order, threads, seed, format);
        if (simulate->parsed())
            return run_simulate(model, offspring, targets, ancestors, seed, horizon, cap, threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        json record;
        record["error"] = "invalid_request";
        record["message"] = e.what();
        std::cout << record.dump() << "\n";
        return 1;
    }
    return 0;
}

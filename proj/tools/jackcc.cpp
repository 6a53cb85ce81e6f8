#include "jackcc/config.hpp"
#include "jackcc/errors.hpp"
#include "jackcc/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace jackcc;

namespace {

struct Globals {
    std::string format = "text";
    std::string out;
    int threads = 1;
    int max_n = 0;   // 0: not given
    bool timing = false;
};

std::optional<std::string> out_path(const Globals & g)
{
    if (g.out.empty())
        return std::nullopt;
    return g.out;
}

std::string label(const Partition & lambda, const std::vector<Partition> & others)
{
    std::string out = "a^(" + lambda.to_string() + ")_{";
    for (std::size_t i = 0; i < others.size(); ++i)
        out += (i ? ",(" : "(") + others[i].to_string() + ")";
    return out + "}";
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Exact Jack connection coefficients and good-matching counts"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", g.out, "Write output to this file instead of stdout");
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--max-n", g.max_n, "Largest degree (suite range for verify)")->check(CLI::PositiveNumber);

    int n = 0;
    std::string lambda_text;

    auto * partitions = app.add_subcommand("partitions", "List the partitions of n in reverse-lexicographic order");
    partitions->add_option("n,--n", n, "Degree")->required()->check(CLI::NonNegativeNumber);

    auto * jack = app.add_subcommand("jack", "Power-sum coefficients of J_lambda, or the whole table of degree n");
    auto * jack_lambda = jack->add_option("--lambda", lambda_text, "Partition, e.g. 3,1");
    auto * jack_n = jack->add_option("--n", n, "Degree of the full table")->check(CLI::PositiveNumber);
    jack_lambda->excludes(jack_n);

    std::vector<std::string> with;
    auto * connect = app.add_subcommand("connect", "a^lambda_{mu,nu,...} from the Cauchy sum");
    connect->add_option("--lambda", lambda_text, "Partition")->required();
    connect->add_option("--with", with, "Further partition (repeat)")->required()->allow_extra_args(false);

    bool beta = false;
    auto * connect_nn = app.add_subcommand("connect-nn", "a^lambda_{(n),(n)} by the recurrence, or the table for degree n");
    auto * nn_lambda = connect_nn->add_option("--lambda", lambda_text, "Partition");
    auto * nn_n = connect_nn->add_option("--n", n, "Degree of the table")->check(CLI::PositiveNumber);
    nn_lambda->excludes(nn_n);
    connect_nn->add_flag("--beta", beta, "Show the polynomial in b = a - 1");

    int l = 2, r = 0;
    auto * connect_lr = app.add_subcommand("connect-lr", "a^{l,r}_lambda from the operator tower");
    connect_lr->add_option("--lambda", lambda_text, "Partition")->required();
    connect_lr->add_option("--l", l, "Number of long cycles")->check(CLI::PositiveNumber);
    connect_lr->add_option("--r", r, "Number of transpositions")->check(CLI::NonNegativeNumber);

    bool weights = false, bipartite_only = false;
    long limit = -1;
    auto * matchings = app.add_subcommand("matchings", "Good matchings of the canonical lambda-graph");
    matchings->add_option("--lambda", lambda_text, "Partition")->required();
    matchings->add_flag("--weights", weights, "Compute the weight statistic");
    matchings->add_flag("--bipartite-only", bipartite_only, "Keep bipartite matchings only");
    matchings->add_option("--limit", limit, "Print at most K matchings")->check(CLI::NonNegativeNumber);

    std::string suite;
    auto * verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_flag("--timing", g.timing, "Report elapsed time");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    } catch (const CLI::ParseError & e) {
        app.exit(e);
        return 2;
    }

    try {
        if (g.max_n > 0 && g.max_n > degree_bound())
            set_degree_bound(g.max_n);
        Format format = parse_format(g.format);
        auto path = out_path(g);

        if (*partitions) {
            emit(PartitionList{n, generate_partitions(n)}, format, path);
            return 0;
        }
        if (*jack) {
            if (!lambda_text.empty()) {
                Partition lambda = Partition::parse(lambda_text);
                emit(JackRow{lambda, jack_table(lambda.size())->row(lambda)}, format, path);
            } else if (n > 0) {
                emit(*jack_table(n), format, path);
            } else {
                throw std::invalid_argument("jack needs --lambda or --n");
            }
            return 0;
        }
        if (*connect) {
            Partition lambda = Partition::parse(lambda_text);
            ConnectionQuery q{lambda, {}};
            for (auto const & w : with)
                q.others.push_back(Partition::parse(w));
            emit(CoeffReport{label(lambda, q.others), make_result(a_cauchy(q))}, format, path);
            return 0;
        }
        if (*connect_nn) {
            if (!lambda_text.empty()) {
                Partition lambda = Partition::parse(lambda_text);
                Partition row = Partition::single_row(lambda.size());
                check_degree(lambda.size(), "recurrence");
                emit(CoeffReport{label(lambda, {row, row}), make_result(a_nn_recurrence(lambda)), beta}, format, path);
            } else if (n > 0) {
                check_degree(n, "recurrence table");
                NnTable t{n, {}};
                for (auto const & lambda : generate_partitions(n))
                    t.rows.emplace_back(lambda, a_nn_recurrence(lambda));
                emit(t, format, path);
            } else {
                throw std::invalid_argument("connect-nn needs --lambda or --n");
            }
            return 0;
        }
        if (*connect_lr) {
            Partition lambda = Partition::parse(lambda_text);
            std::string name = "a^(" + lambda.to_string() + ")_{l=" + std::to_string(l) + ",r=" + std::to_string(r) + "}";
            emit(CoeffReport{name, make_result(a_lr(lambda, l, r))}, format, path);
            return 0;
        }
        if (*matchings) {
            Partition lambda = Partition::parse(lambda_text);
            MatchingListing m{enumerate_good(lambda, {.compute_weights = weights, .threads = g.threads}), weights};
            if (bipartite_only)
                std::erase_if(m.set.entries, [](auto const & e) { return !e.bipartite; });
            if (limit >= 0 && static_cast<long>(m.set.entries.size()) > limit)
                m.set.entries.resize(limit);
            emit(m, format, path);
            return 0;
        }
        if (*verify) {
            int max_n = g.max_n > 0 ? g.max_n : default_max_n(suite);
            VerificationReport report = run_suite(suite, max_n, g.threads);
            write_output(render(report, format, {.timing = g.timing}), path);
            return report.passed() ? 0 : 1;
        }
    } catch (const std::invalid_argument & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

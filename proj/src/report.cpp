#include "jackcc/report.hpp"

#include "jackcc/config.hpp"
#include "jackcc/errors.hpp"
#include "jackcc/serialize.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <thread>

namespace jackcc {

Format parse_format(std::string_view name)
{
    if (name == "text")
        return Format::text;
    if (name == "json")
        return Format::json;
    if (name == "csv")
        return Format::csv;
    throw UnsupportedFormat("unknown format \"" + std::string(name) + "\"");
}

namespace {

const char * const superscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
const char * const subscripts[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};

std::string digits(long value, const char * const table[])
{
    std::string out;
    for (char ch : std::to_string(value))
        out += table[ch - '0'];
    return out;
}

std::string power(std::string_view var, int d)
{
    if (d == 0)
        return "";
    std::string out(var);
    if (d > 1)
        out += digits(d, superscripts);
    return out;
}

} // namespace

std::string pretty(const AlphaPoly & p, std::string_view var)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        BigRational c = p.coefficient(d);
        if (c == 0)
            continue;
        bool neg = c < 0;
        if (neg)
            c = -c;
        if (neg)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (d == 0 || c != 1)
            out += c.get_str();
        out += power(var, d);
    }
    return out;
}

namespace {

std::vector<BigInt> divisors(BigInt m)
{
    std::vector<BigInt> out;
    if (m < 0)
        m = -m;
    for (BigInt d = 1; d * d <= m; ++d) {
        if (m % d != 0)
            continue;
        out.push_back(d);
        if (d * d != m)
            out.push_back(m / d);
    }
    return out;
}

std::string linear_factor(const BigRational & root, std::string_view var)
{
    // q*var - p for root p/q
    std::string out = "(";
    if (root.get_den() != 1)
        out += root.get_den().get_str();
    out += var;
    if (root > 0)
        out += "-" + BigRational(root.get_num()).get_str();
    else
        out += "+" + BigRational(-root.get_num()).get_str();
    return out + ")";
}

} // namespace

std::string pretty_factored(const AlphaPoly & p, std::string_view var)
{
    if (p.is_zero())
        return "0";
    BigInt lcm = 1;
    for (auto const & c : p.coefficients())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    BigInt content = 0;
    for (auto const & c : p.coefficients())
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), BigInt(c.get_num() * (lcm / c.get_den())).get_mpz_t());
    BigRational scalar(content, lcm);
    scalar.canonicalize();
    if (p.leading() < 0)
        scalar = -scalar;
    AlphaPoly rest = p * BigRational(1 / scalar);

    int zero_roots = 0;
    while (rest.coefficient(0) == 0) {
        rest = exact_div(rest, AlphaPoly::variable());
        ++zero_roots;
    }

    std::map<BigRational, int, std::greater<>> roots;
    BigInt constant = rest.coefficient(0).get_num();
    BigInt lead = rest.leading().get_num();
    if (rest.degree() > 0 && abs(constant) < 1000000 && abs(lead) < 1000000) {
        for (auto const & a : divisors(constant)) {
            for (auto const & b : divisors(lead)) {
                for (int sign : {1, -1}) {
                    BigRational root(sign * a, b);
                    root.canonicalize();
                    if (roots.contains(root))
                        continue;
                    int mult = 0;
                    AlphaPoly factor = AlphaPoly::from_coefficients({-BigRational(root.get_num()), BigRational(root.get_den())});
                    while (rest.degree() > 0 && rest.eval(root) == 0) {
                        rest = exact_div(rest, factor);
                        ++mult;
                    }
                    if (mult)
                        roots[root] = mult;
                }
            }
        }
    }

    std::string factors = power(var, zero_roots);
    for (auto const & [root, mult] : roots) {
        factors += linear_factor(root, var);
        if (mult > 1)
            factors += digits(mult, superscripts);
    }
    if (rest.degree() > 0)
        factors += "(" + pretty(rest, var) + ")";
    else
        scalar *= rest.coefficient(0);

    if (factors.empty())
        return scalar.get_str();
    if (scalar == 1)
        return factors;
    if (scalar == -1)
        return "-" + factors;
    return scalar.get_str() + factors;
}

std::string coefficient_label(std::string_view symbol, const Partition & lambda)
{
    std::string out(symbol);
    if (lambda.length() == 1)
        out += digits(lambda[0], superscripts);
    else
        out += "^(" + lambda.to_string() + ")";
    int n = lambda.size();
    if (n < 10)
        out += digits(n, subscripts) + digits(n, subscripts);
    else
        out += "_{" + std::to_string(n) + "," + std::to_string(n) + "}";
    return out;
}

bool VerificationReport::passed() const
{
    return failures() == 0;
}

std::size_t VerificationReport::failures() const
{
    std::size_t bad = 0;
    for (auto const & c : checks)
        bad += !c.pass;
    return bad;
}

namespace {

using Task = std::function<std::vector<Check>()>;

std::vector<Check> run_tasks(const std::vector<Task> & tasks, int threads)
{
    std::vector<std::vector<Check>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    int count = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
    if (count == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < count; ++t)
            pool.emplace_back(worker);
    }
    for (auto const & e : errors)
        if (e)
            std::rethrow_exception(e);
    std::vector<Check> out;
    for (auto & r : results)
        for (auto & c : r)
            out.push_back(std::move(c));
    return out;
}

std::string paren(const Partition & p)
{
    return "(" + p.to_string() + ")";
}

std::string show(const RatFunc & f)
{
    if (f.is_polynomial())
        return pretty(f.num());
    return "(" + pretty(f.num()) + ")/(" + pretty(f.den()) + ")";
}

Check from_sides(const IdentitySides & s)
{
    return {s.name, s.holds(), show(s.lhs), show(s.rhs)};
}

Check from_count(const CountCheck & c)
{
    return {c.name, c.holds(), std::to_string(c.lhs), std::to_string(c.rhs)};
}

std::vector<Task> matchings_jack_tasks(int max_n)
{
    std::vector<Task> tasks;
    for (int n = 1; n <= max_n; ++n) {
        for (auto const & lambda : generate_partitions(n)) {
            tasks.push_back([lambda, n] {
                auto set = enumerate_good(lambda);
                std::vector<BigRational> coeffs;
                bool zero_iff_bipartite = true;
                for (auto const & e : set.entries) {
                    if (e.weight >= static_cast<int>(coeffs.size()))
                        coeffs.resize(e.weight + 1, BigRational(0));
                    coeffs[e.weight] += 1;
                    zero_iff_bipartite &= (e.weight == 0) == e.bipartite;
                }
                AlphaPoly dist = AlphaPoly::from_coefficients(std::move(coeffs));
                AlphaPoly expected = substitute_beta(a_nn_recurrence(lambda));
                bool positive = expected.has_integer_coefficients() && expected.degree() <= n - 1;
                for (auto const & c : expected.coefficients())
                    positive &= c >= 0;
                BigRational top = dist.coefficient(n - 1);
                BigRational fact(factorial(n - 1));
                return std::vector<Check>{
                    {paren(lambda) + ": " + pretty(expected, "β"), dist == expected, pretty(dist, "β"),
                     pretty(expected, "β")},
                    {paren(lambda) + ": weight 0 iff bipartite", zero_iff_bipartite, "", ""},
                    {paren(lambda) + ": [β^" + std::to_string(n - 1) + "] = " + fact.get_str(), top == fact, top.get_str(),
                     fact.get_str()},
                    {paren(lambda) + ": nonnegative integer coefficients, degree ≤ " + std::to_string(n - 1), positive,
                     pretty(expected, "β"), ""},
                };
            });
        }
    }
    return tasks;
}

std::vector<Task> triple_tasks(int max_n)
{
    std::vector<Task> tasks;
    for (int n = 1; n <= max_n; ++n) {
        jack_table(n);
        lr_generating_vector(n, 2, 0);
        for (auto const & lambda : generate_partitions(n)) {
            tasks.push_back([lambda, n] {
                Partition row = Partition::single_row(n);
                RatFunc rec = a_nn_recurrence(lambda);
                RatFunc cauchy = a_cauchy(lambda, row, row);
                RatFunc lr = a_lr(lambda, 2, 0);
                return std::vector<Check>{
                    {paren(lambda) + ": Cauchy sum = recurrence", cauchy == rec, show(cauchy), show(rec)},
                    {paren(lambda) + ": operator readout = recurrence", lr == rec, show(lr), show(rec)},
                };
            });
        }
    }
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
        auto parts = generate_partitions(n);
        for (auto const & lambda : parts) {
            tasks.push_back([lambda, parts] {
                std::vector<Check> out;
                for (auto const & mu : parts) {
                    for (auto const & nu : parts) {
                        RatFunc v = a_cauchy(lambda, mu, nu);
                        out.push_back({"a^" + paren(lambda) + "_{" + paren(mu) + paren(nu) + "} is a polynomial",
                                       v.is_polynomial(), show(v), ""});
                    }
                }
                return out;
            });
        }
    }
    return tasks;
}

std::vector<Task> thm_rec_tasks(int max_n)
{
    std::vector<Task> tasks;
    for (int n = 1; n <= max_n; ++n) {
        jack_table(n);
        jack_table(n + 1);
        for (auto const & lambda : generate_partitions(n + 1))
            for (auto const & nu : generate_partitions(n))
                tasks.push_back([lambda, nu] { return std::vector<Check>{from_sides(thm_rec_sides(lambda, nu))}; });
    }
    return tasks;
}

std::vector<Task> i_indep_tasks(int max_n)
{
    std::vector<Task> tasks;
    for (int n = 2; n <= max_n; ++n) {
        for (auto const & lambda : generate_partitions(n)) {
            tasks.push_back([lambda] {
                auto parts = lambda.distinct_parts();
                AlphaPoly first = recurrence_bracket(lambda, parts.front());
                std::vector<Check> out;
                for (int k : parts) {
                    AlphaPoly other = recurrence_bracket(lambda, k);
                    out.push_back({paren(lambda) + ": part " + std::to_string(k) + " vs part " + std::to_string(parts.front()),
                                   other == first, pretty(other), pretty(first)});
                }
                return out;
            });
        }
        for (auto const & mu : generate_partitions(n - 1)) {
            tasks.push_back([mu] {
                std::vector<Check> out;
                for (auto const & s : remark_identity_sides(mu))
                    out.push_back(from_sides(s));
                return out;
            });
        }
    }
    return tasks;
}

std::vector<Task> orthogonality_tasks(int max_n)
{
    std::vector<Task> tasks;
    for (int n = 1; n <= max_n; ++n) {
        auto table = jack_table(n);
        auto parts = generate_partitions(n);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            tasks.push_back([table, parts, i, n] {
                const Partition & lambda = parts[i];
                const PSumVector & j = table->row(lambda);
                std::vector<Check> out;
                for (std::size_t k = i; k < parts.size(); ++k) {
                    RatFunc ip = inner_product(j, table->row(parts[k]));
                    RatFunc expected = k == i ? RatFunc(hooks(lambda).j) : RatFunc();
                    std::string shown = expected.is_zero() ? "0" : pretty_factored(expected.num());
                    out.push_back({"⟨J" + paren(lambda) + ",J" + paren(parts[k]) + "⟩ = " + shown, ip == expected, show(ip),
                                   show(expected)});
                }
                RatFunc ones = table->theta(lambda, Partition::single_column(n));
                out.push_back({"θ" + paren(lambda) + " at " + paren(Partition::single_column(n)) + " = 1", ones == RatFunc(1), show(ones), "1"});
                if (n >= 2) {
                    Partition hook = Partition::single_column(n - 2).with_part(2);
                    RatFunc t = table->theta(lambda, hook);
                    AlphaPoly e = eigenvalue(lambda);
                    out.push_back({"θ" + paren(lambda) + " at " + paren(hook) + " = box sum", t == RatFunc(e),
                                   show(t), pretty(e)});
                }
                RatFunc top = table->theta(lambda, Partition::single_row(n));
                AlphaPoly prod = theta_top(lambda);
                out.push_back({"θ" + paren(lambda) + " at " + paren(Partition::single_row(n)) + " = box product", top == RatFunc(prod),
                               show(top), pretty(prod)});
                MonomialVector mono = p_to_m(j);
                RatFunc lead = mono.coeff(lambda);
                AlphaPoly h = hooks(lambda).lower;
                out.push_back({"[m" + paren(lambda) + "]J = h" + paren(lambda), lead == RatFunc(h), show(lead), pretty(h)});
                bool triangular = true;
                for (auto const & [mu, c] : mono.terms())
                    triangular &= lambda.dominates(mu);
                out.push_back({"J" + paren(lambda) + " supported below " + paren(lambda) + " in dominance", triangular, "", ""});
                return out;
            });
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (std::size_t k = i + 1; k < parts.size(); ++k) {
                if (eigenvalue(parts[i]) != eigenvalue(parts[k]))
                    continue;
                tasks.push_back([a = parts[i], b = parts[k], table] {
                    int dim = eigenspace_dimension(a);
                    bool distinct = !(table->row(a) == table->row(b));
                    return std::vector<Check>{{"shared eigenvalue " + paren(a) + "/" + paren(b) + " resolved",
                                               dim >= 2 && distinct, "eigenspace dimension " + std::to_string(dim), ""}};
                });
            }
        }
    }
    return tasks;
}

std::vector<Task> comb_rec_tasks(int max_n)
{
    std::vector<Task> tasks;
    for (int n = 1; n <= max_n; ++n) {
        for (auto const & lambda : generate_partitions(n)) {
            tasks.push_back([lambda] {
                GoodCounts c = good_counts(lambda);
                AlphaPoly a = a_nn_recurrence(lambda);
                BigRational at2 = a.eval(2), at1 = a.eval(1);
                return std::vector<Check>{
                    {coefficient_label("b̃", lambda) + " = " + std::to_string(c.total), at2 == c.total,
                     std::to_string(c.total), at2.get_str()},
                    {coefficient_label("c", lambda) + " = " + std::to_string(c.bipartite), at1 == c.bipartite,
                     std::to_string(c.bipartite), at1.get_str()},
                };
            });
        }
    }
    for (int n = 2; n <= max_n; ++n) {
        for (auto const & lambda : generate_partitions(n)) {
            for (int index = 0; index < lambda.length(); ++index) {
                tasks.push_back([lambda, index] {
                    std::vector<Check> out;
                    for (auto const & c : comb_partition_checks(lambda, index))
                        out.push_back(from_count(c));
                    out.push_back(from_sides(comb_values_b(lambda, index)));
                    out.push_back(from_sides(comb_values_c(lambda, index)));
                    return out;
                });
            }
        }
    }
    return tasks;
}

std::vector<Task> gen_coeff_tasks(int max_n)
{
    std::vector<Task> tasks;
    for (int l : {2, 3})
        for (int n = 1; n <= max_n; ++n)
            for (int r = 0; r <= 2; ++r)
                lr_generating_vector(n, l, r);
    for (int n = 1; n <= max_n; ++n)
        jack_table(n);
    for (int n = 1; n <= max_n; ++n) {
        for (auto const & lambda : generate_partitions(n)) {
            tasks.push_back([lambda, n] {
                std::vector<Check> out;
                for (int l : {2, 3}) {
                    for (int r = 0; r <= 2; ++r) {
                        LrProperties p = lr_properties(lambda, l, r);
                        int bound = (n - 1) * (l - 1) + r;
                        int e = (l - 1) * (n - 1) + r + lambda.length() - 1;
                        std::string tag = paren(lambda) + " l=" + std::to_string(l) + " r=" + std::to_string(r);
                        out.push_back({tag + ": integer polynomial of degree ≤ " + std::to_string(bound) +
                                           ", symmetric about " + std::to_string(e),
                                       p.all(), show(p.scaled), ""});
                        RatFunc op = a_lr(lambda, l, r), cauchy = a_lr_cauchy(lambda, l, r);
                        out.push_back({tag + ": operator readout = Cauchy sum", op == cauchy, show(op), show(cauchy)});
                    }
                }
                return out;
            });
        }
    }
    return tasks;
}

std::vector<Task> thm34_tasks(int max_n)
{
    std::vector<Task> tasks;
    for (int n = 1; n <= max_n; ++n) {
        jack_table(n);
        jack_table(n + 1);
        tasks.push_back([n] {
            std::vector<Check> out;
            for (auto const & s : two_series_sides(n)) {
                Check c = from_sides(s);
                c.description = "n=" + std::to_string(n) + " " + c.description;
                out.push_back(std::move(c));
            }
            return out;
        });
        if (n >= 2) {
            for (auto const & gamma : generate_partitions(n)) {
                tasks.push_back([gamma] {
                    std::vector<Check> out;
                    for (auto const & s : theta_lemma_sides(gamma))
                        out.push_back(from_sides(s));
                    return out;
                });
            }
        }
    }
    return tasks;
}

struct SuiteInfo {
    const char * name;
    int default_max;
    int min_n;
    int extra_degree;   // tables needed beyond max_n
    std::vector<Task> (*tasks)(int);
};

const std::vector<SuiteInfo> & suites()
{
    static const std::vector<SuiteInfo> list = {
        {"matchings-jack", 6, 1, 0, matchings_jack_tasks},
        {"triple", 6, 1, 0, triple_tasks},
        {"thm-rec", 4, 1, 1, thm_rec_tasks},
        {"i-indep", 7, 2, 0, i_indep_tasks},
        {"orthogonality", 6, 1, 0, orthogonality_tasks},
        {"comb-rec", 6, 1, 0, comb_rec_tasks},
        {"gen-coeff", 5, 1, 0, gen_coeff_tasks},
        {"thm34", 5, 1, 1, thm34_tasks},
    };
    return list;
}

const SuiteInfo & find_suite(std::string_view name)
{
    for (auto const & s : suites())
        if (name == s.name)
            return s;
    throw UnknownSuite("unknown suite \"" + std::string(name) + "\"");
}

} // namespace

const std::vector<std::string> & suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (auto const & s : suites())
            out.emplace_back(s.name);
        return out;
    }();
    return names;
}

int default_max_n(std::string_view suite)
{
    return find_suite(suite).default_max;
}

VerificationReport run_suite(std::string_view name, int max_n, int threads)
{
    const SuiteInfo & info = find_suite(name);
    if (max_n < info.min_n)
        throw std::invalid_argument("suite " + std::string(name) + " needs max_n >= " + std::to_string(info.min_n));
    check_degree(max_n + info.extra_degree, "verification suite");
    auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.suite = info.name;
    r.min_n = info.min_n;
    r.max_n = max_n;
    r.checks = run_tasks(info.tasks(max_n), threads);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\n") == std::string_view::npos)
        return std::string(s);
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

namespace {

std::string csv_row(std::initializer_list<std::string_view> fields)
{
    std::string out;
    bool first = true;
    for (auto f : fields) {
        if (!first)
            out += ',';
        first = false;
        out += csv_field(f);
    }
    return out + "\n";
}

std::string dump(const Json & j)
{
    return j.dump(2) + "\n";
}

/* Left-aligned columns separated by two spaces; width counts UTF-8 code points. */
std::string columns(const std::vector<std::vector<std::string>> & rows)
{
    auto width = [](const std::string & s) {
        std::size_t w = 0;
        for (unsigned char ch : s)
            w += (ch & 0xC0) != 0x80;
        return w;
    };
    std::vector<std::size_t> widths;
    for (auto const & row : rows) {
        if (widths.size() < row.size())
            widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], width(row[i]));
    }
    std::string out;
    for (auto const & row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size())
                line += std::string(widths[i] - width(row[i]) + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

std::string format_ms(double ms)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", ms);
    return buf;
}

} // namespace

std::string render(const VerificationReport & r, Format f, const RenderOptions & o)
{
    switch (f) {
    case Format::text: {
        std::string out = "suite " + r.suite + ", n = " + std::to_string(r.min_n) + ".." + std::to_string(r.max_n) + "\n";
        for (auto const & c : r.checks) {
            out += (c.pass ? "PASS  " : "FAIL  ") + c.description + "\n";
            if (!c.pass) {
                if (!c.lhs.empty())
                    out += "      lhs: " + c.lhs + "\n";
                if (!c.rhs.empty())
                    out += "      rhs: " + c.rhs + "\n";
            }
        }
        out += std::to_string(r.checks.size()) + " checks, " + std::to_string(r.failures()) + " failed\n";
        if (o.timing)
            out += "elapsed " + format_ms(r.elapsed_ms) + " ms\n";
        return out;
    }
    case Format::json: {
        Json checks = Json::array();
        for (auto const & c : r.checks)
            checks.push_back(Json{{"description", c.description}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}});
        Json j{{"suite", r.suite}, {"n_range", Json::array({r.min_n, r.max_n})}, {"passed", r.passed()},
               {"checks", std::move(checks)}};
        if (o.timing)
            j["elapsed_ms"] = r.elapsed_ms;
        return dump(j);
    }
    case Format::csv: {
        std::string out = "description,pass,lhs,rhs\n";
        for (auto const & c : r.checks)
            out += csv_row({c.description, c.pass ? "true" : "false", c.lhs, c.rhs});
        return out;
    }
    }
    throw UnsupportedFormat("unsupported format for a report");
}

std::string render(const PartitionList & p, Format f)
{
    switch (f) {
    case Format::text: {
        std::vector<std::vector<std::string>> rows;
        for (auto const & lambda : p.partitions)
            rows.push_back({lambda.to_string(), std::to_string(lambda.length()), z_aut_class(lambda).class_size.get_str()});
        return columns(rows);
    }
    case Format::json: {
        Json list = Json::array();
        for (auto const & lambda : p.partitions)
            list.push_back(lambda.to_string());
        return dump(Json{{"n", p.n}, {"partitions", std::move(list)}});
    }
    case Format::csv: {
        std::string out = "partition,length,class_size\n";
        for (auto const & lambda : p.partitions)
            out += csv_row({lambda.to_string(), std::to_string(lambda.length()),
                            z_aut_class(lambda).class_size.get_str()});
        return out;
    }
    }
    throw UnsupportedFormat("unsupported format for a partition list");
}

std::string render(const JackRow & row, Format f)
{
    switch (f) {
    case Format::text: {
        std::vector<std::vector<std::string>> rows;
        for (auto const & [mu, c] : row.row.terms())
            rows.push_back({"p[" + mu.to_string() + "]", c.to_string()});
        return "J[" + row.lambda.to_string() + "]\n" + columns(rows);
    }
    case Format::json:
        return dump(Json{{"lambda", row.lambda.to_string()}, {"row", to_json(row.row)}});
    case Format::csv: {
        std::string out = "mu,theta\n";
        for (auto const & [mu, c] : row.row.terms())
            out += csv_row({mu.to_string(), c.to_string()});
        return out;
    }
    }
    throw UnsupportedFormat("unsupported format for a Jack row");
}

std::string render(const JackTable & t, Format f)
{
    switch (f) {
    case Format::text: {
        std::string out;
        for (auto const & [lambda, row] : t.rows)
            out += render(JackRow{lambda, row}, Format::text);
        return out;
    }
    case Format::json:
        return dump(to_json(t));
    case Format::csv: {
        std::string out = "lambda,mu,theta\n";
        for (auto const & [lambda, row] : t.rows)
            for (auto const & [mu, c] : row.terms())
                out += csv_row({lambda.to_string(), mu.to_string(), c.to_string()});
        return out;
    }
    }
    throw UnsupportedFormat("unsupported format for a Jack table");
}

std::string render(const CoeffReport & c, Format f)
{
    std::string beta = c.result.beta_form ? c.result.beta_form->to_string("b") : "";
    switch (f) {
    case Format::text: {
        if (c.prefer_beta && c.result.beta_form)
            return c.label + " = " + beta + "  (b = a - 1)\n";
        std::string out = c.label + " = " + c.result.value.to_string() + "\n";
        if (c.result.beta_form)
            out += "  at a = b + 1: " + beta + "\n";
        return out;
    }
    case Format::json: {
        Json j{{"coefficient", c.label}, {"value", to_json(c.result.value)}, {"text", c.result.value.to_string()}};
        j["beta"] = c.result.beta_form ? to_json(*c.result.beta_form) : Json(nullptr);
        return dump(j);
    }
    case Format::csv:
        return "coefficient,value,beta\n" + csv_row({c.label, c.result.value.to_string(), beta});
    }
    throw UnsupportedFormat("unsupported format for a coefficient");
}

std::string render(const NnTable & t, Format f)
{
    switch (f) {
    case Format::text: {
        std::vector<std::vector<std::string>> rows;
        for (auto const & [lambda, p] : t.rows)
            rows.push_back({lambda.to_string(), p.to_string(), substitute_beta(p).to_string("b")});
        return columns(rows);
    }
    case Format::json: {
        Json rows = Json::array();
        for (auto const & [lambda, p] : t.rows)
            rows.push_back(Json{{"lambda", lambda.to_string()}, {"alpha", to_json(p)}, {"beta", to_json(substitute_beta(p))}});
        return dump(Json{{"n", t.n}, {"rows", std::move(rows)}});
    }
    case Format::csv: {
        std::string out = "lambda,alpha,beta\n";
        for (auto const & [lambda, p] : t.rows)
            out += csv_row({lambda.to_string(), p.to_string(), substitute_beta(p).to_string("b")});
        return out;
    }
    }
    throw UnsupportedFormat("unsupported format for an a_nn table");
}

std::string render(const MatchingListing & m, Format f)
{
    auto weight_text = [&](const WeightedMatching & e) { return m.weights ? std::to_string(e.weight) : std::string(); };
    switch (f) {
    case Format::text: {
        std::vector<std::vector<std::string>> rows;
        for (auto const & e : m.set.entries) {
            std::vector<std::string> row{e.matching.to_string()};
            if (m.weights)
                row.push_back("weight " + weight_text(e));
            row.push_back(e.bipartite ? "bipartite" : "");
            rows.push_back(std::move(row));
        }
        std::string body = columns(rows);
        // columns() pads before an empty last field; trim it
        std::string out;
        std::size_t pos = 0;
        while (pos < body.size()) {
            std::size_t end = body.find('\n', pos);
            std::string line = body.substr(pos, end - pos);
            line.erase(line.find_last_not_of(' ') + 1);
            out += line + "\n";
            pos = end + 1;
        }
        return out;
    }
    case Format::json: {
        Json list = Json::array();
        for (auto const & e : m.set.entries) {
            Json j{{"matching", e.matching.to_string()}};
            if (m.weights)
                j["weight"] = e.weight;
            j["bipartite"] = e.bipartite;
            list.push_back(std::move(j));
        }
        return dump(Json{{"lambda", m.set.lambda.to_string()}, {"count", m.set.entries.size()}, {"matchings", std::move(list)}});
    }
    case Format::csv: {
        std::string out = "matching,weight,bipartite\n";
        for (auto const & e : m.set.entries)
            out += csv_row({e.matching.to_string(), weight_text(e), e.bipartite ? "true" : "false"});
        return out;
    }
    }
    throw UnsupportedFormat("unsupported format for matchings");
}

void write_output(const std::string & text, const std::optional<std::string> & path)
{
    if (!path) {
        std::cout << text;
        std::cout.flush();
        if (!std::cout)
            throw IoError("cannot write to standard output");
        return;
    }
    std::ofstream file(*path, std::ios::binary);
    if (!file)
        throw IoError("cannot open " + *path + " for writing");
    file << text;
    file.close();
    if (!file)
        throw IoError("error writing " + *path);
}

} // namespace jackcc

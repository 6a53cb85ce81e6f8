#include "jackcc/partition.hpp"

#include "jackcc/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace jackcc {

namespace {

void validate(const std::vector<int> & parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw InvalidPartition("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw InvalidPartition("partition parts must be weakly decreasing");
    }
}

} // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    validate(parts_);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    std::erase(parts, 0);
    std::ranges::sort(parts, std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text)
{
    auto trimmed = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };
    text = trimmed(text);
    if (text.empty() || text == "-")
        return {};
    std::vector<int> parts;
    while (true) {
        auto comma = text.find(',');
        auto field = trimmed(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
            throw InvalidPartition("cannot parse partition '" + std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

Partition Partition::single_column(int n)
{
    return Partition(std::vector<int>(n, 1));
}

int Partition::multiplicity(int k) const
{
    return static_cast<int>(std::ranges::count(parts_, k));
}

std::vector<int> Partition::distinct_parts() const
{
    std::vector<int> out;
    for (int p : parts_)
        if (out.empty() || out.back() != p)
            out.push_back(p);
    return out;
}

Partition Partition::conjugate() const
{
    std::vector<int> out;
    for (int c = 1; c <= largest(); ++c) {
        int len = 0;
        for (int p : parts_)
            len += p >= c;
        out.push_back(len);
    }
    return Partition(std::move(out));
}

bool Partition::dominates(const Partition & other) const
{
    int a = 0, b = 0;
    int len = std::max(length(), other.length());
    for (int i = 0; i < len; ++i) {
        a += i < length() ? parts_[i] : 0;
        b += i < other.length() ? other.parts_[i] : 0;
        if (a < b)
            return false;
    }
    return true;
}

long Partition::n_statistic() const
{
    long s = 0;
    for (int i = 0; i < length(); ++i)
        s += static_cast<long>(i) * parts_[i];
    return s;
}

Partition Partition::with_parts(std::initializer_list<int> extra) const
{
    std::vector<int> p = parts_;
    p.insert(p.end(), extra.begin(), extra.end());
    return from_unsorted(std::move(p));
}

Partition Partition::without_part(int k) const
{
    auto it = std::ranges::find(parts_, k);
    if (it == parts_.end())
        throw MissingPart("partition " + to_string() + " has no part " + std::to_string(k));
    std::vector<int> p = parts_;
    p.erase(p.begin() + (it - parts_.begin()));
    return Partition(std::move(p));
}

std::vector<int> Partition::parts_without(int k) const
{
    Partition rest = without_part(k);
    return rest.parts_;
}

std::string Partition::to_string() const
{
    if (parts_.empty())
        return "-";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::vector<Partition> generate_partitions(int n)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> cur;
    // Depth-first with non-increasing parts, largest first: yields reverse-lex order.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

BigInt factorial(int n)
{
    BigInt r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

ClassData z_aut_class(const Partition & lambda)
{
    ClassData d{1, 1, 1};
    for (int k : lambda.distinct_parts()) {
        int m = lambda.multiplicity(k);
        BigInt mf = factorial(m);
        BigInt kp;
        mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
        d.aut *= mf;
        d.z *= kp * mf;
    }
    d.class_size = factorial(lambda.size()) / d.z;
    return d;
}

Partition lower_part(const Partition & lambda, int k)
{
    return lambda.without_part(k).with_part(k - 1);
}

Partition raise_part(const Partition & lambda, int k)
{
    return lambda.without_part(k).with_part(k + 1);
}

Partition merge_parts(const Partition & lambda, int k, int j)
{
    return lambda.without_part(k).without_part(j).with_part(k + j - 1);
}

Partition split_part(const Partition & lambda, int k, int j)
{
    return lambda.without_part(k + j + 1).with_parts({k, j});
}

Partition modify(const Partition & lambda, Modification which, std::span<const int> args)
{
    auto need = [&](std::size_t count) {
        if (args.size() != count)
            throw std::invalid_argument("wrong number of arguments for partition modification");
    };
    switch (which) {
    case Modification::down_k:
        need(1);
        return lower_part(lambda, args[0]);
    case Modification::up_k:
        need(1);
        return raise_part(lambda, args[0]);
    case Modification::down_kl:
        need(2);
        return merge_parts(lambda, args[0], args[1]);
    case Modification::up_kl:
        need(2);
        return split_part(lambda, args[0], args[1]);
    }
    throw std::invalid_argument("unknown modification");
}

std::vector<BoxStats> boxes(const Partition & lambda)
{
    std::vector<BoxStats> out;
    Partition conj = lambda.conjugate();
    for (int r = 1; r <= lambda.length(); ++r) {
        for (int c = 1; c <= lambda[r - 1]; ++c) {
            out.push_back(BoxStats{
                .row = r,
                .col = c,
                .arm = lambda[r - 1] - c,
                .leg = conj[c - 1] - r,
                .coarm = c - 1,
                .coleg = r - 1,
            });
        }
    }
    return out;
}

Hooks hooks(const Partition & lambda)
{
    AlphaPoly lower(1), upper(1);
    for (auto const & s : boxes(lambda)) {
        lower *= AlphaPoly::from_coefficients({BigRational(s.leg + 1), BigRational(s.arm)});
        upper *= AlphaPoly::from_coefficients({BigRational(s.leg), BigRational(s.arm + 1)});
    }
    AlphaPoly j = lower * upper;
    return {std::move(lower), std::move(upper), std::move(j)};
}

AlphaPoly eigenvalue(const Partition & lambda)
{
    AlphaPoly sum;
    for (auto const & s : boxes(lambda))
        sum += AlphaPoly::from_coefficients({BigRational(-s.coleg), BigRational(s.coarm)});
    return sum;
}

AlphaPoly theta_top(const Partition & lambda)
{
    AlphaPoly prod(1);
    for (auto const & s : boxes(lambda)) {
        if (s.row == 1 && s.col == 1)
            continue;
        prod *= AlphaPoly::from_coefficients({BigRational(-s.coleg), BigRational(s.coarm)});
    }
    return prod;
}

} // namespace jackcc

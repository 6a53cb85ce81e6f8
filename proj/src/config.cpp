#include "jackcc/config.hpp"

#include "jackcc/errors.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

namespace jackcc {

namespace {

int bound_from_env()
{
    const char * env = std::getenv("JACKCC_MAX_N");
    if (env == nullptr)
        return default_degree_bound;
    int value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec != std::errc() || value < 1)
        return default_degree_bound;
    return value;
}

std::atomic<int> & bound_storage()
{
    static std::atomic<int> bound{bound_from_env()};
    return bound;
}

} // namespace

int degree_bound() { return bound_storage().load(); }

void set_degree_bound(int n) { bound_storage().store(n); }

void check_degree(int n, const char * what)
{
    if (n > degree_bound())
        throw DegreeTooLarge(std::string(what) + ": degree " + std::to_string(n) +
                             " exceeds the configured bound " + std::to_string(degree_bound()));
}

} // namespace jackcc

#include "ptdt/toggle.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "ptdt/errors.hpp"

namespace ptdt {

namespace {

int span(const Partition& a, const Partition& b, const Partition& c) {
    return std::max({a.length(), b.length(), c.length()}) + 1;
}

}  // namespace

Partition toggle_between(const Partition& lambda, const Partition& nu, const Partition& mu) {
    if (!interlaces(lambda, nu) || !interlaces(nu, mu))
        throw domain_error("toggle_between needs λ ≻ ν ≻ µ, got " + lambda.to_string() + ", " +
                           nu.to_string() + ", " + mu.to_string());
    const int len = span(lambda, nu, mu);
    std::vector<int> out(len);
    for (int i = 1; i <= len; ++i) {
        int upper = i == 1 ? lambda.part(1) : std::min(lambda.part(i), mu.part(i - 1));
        int lower = std::max(lambda.part(i + 1), mu.part(i));
        out[i - 1] = upper + lower - nu.part(i);
    }
    return Partition(std::move(out));
}

ToggleResult toggle_pop(const Partition& lambda, const Partition& nu, const Partition& mu) {
    if (!interlaces(nu, lambda) || !interlaces(nu, mu))
        throw domain_error("toggle_pop needs λ ≺ ν ≻ µ, got " + lambda.to_string() + ", " +
                           nu.to_string() + ", " + mu.to_string());
    const int popped = nu.part(1) - std::max(lambda.part(1), mu.part(1));
    const int len = span(lambda, nu, mu);
    std::vector<int> out(len);
    for (int k = 1; k <= len; ++k) {
        out[k - 1] = std::min(lambda.part(k), mu.part(k)) +
                     std::max(lambda.part(k + 1), mu.part(k + 1)) - nu.part(k + 1);
    }
    return {Partition(std::move(out)), popped};
}

Partition toggle_push(const Partition& lambda, const Partition& nu, const Partition& mu, int n) {
    if (n < 0) throw domain_error("toggle_push needs a nonnegative value");
    if (!interlaces(lambda, nu) || !interlaces(mu, nu))
        throw domain_error("toggle_push needs λ ≻ ν ≺ µ, got " + lambda.to_string() + ", " +
                           nu.to_string() + ", " + mu.to_string());
    const int len = span(lambda, nu, mu);
    std::vector<int> out(len + 1);
    out[0] = n + std::max(lambda.part(1), mu.part(1));
    for (int k = 1; k <= len; ++k) {
        out[k] = std::min(lambda.part(k), mu.part(k)) +
                 std::max(lambda.part(k + 1), mu.part(k + 1)) - nu.part(k);
    }
    return Partition(std::move(out));
}

}  // namespace ptdt

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbon/partition.hpp"

namespace ribbon {

struct VerifyOptions {
    int max_n = 6;
    std::optional<int> k_filter;   // restrict to one strip size
    std::optional<int> t_order;    // series truncation order; default n per shape
    int jobs = 1;                  // worker threads over shapes
};

struct VerifyFailure {
    int n = 0;
    Partition shape;
    int k = 0;  // zero for shape-level checks
    std::string check;
    std::string detail;
};

struct VerifyResult {
    long long shapes_checked = 0;
    long long pairs_checked = 0;  // (shape, divisor k) combinations
    std::vector<VerifyFailure> failures;

    bool ok() const { return failures.empty(); }
};

// Runs the whole identity suite over every partition of every n <= max_n
// and every k dividing n: the root-of-unity evaluation of the fake degree
// against the strip statistic, height parity, descent and index transport
// under the quotient map with its roundtrip and bijectivity, the hook and
// content multiset identities, Schur evaluations at roots against direct
// cyclotomic reduction, the Pochhammer evaluation, the principal
// specialization series, the semistandard series identity, the tuple
// series identity and the Murnaghan-Nakayama cross-check. Shapes are
// processed in parallel when jobs > 1; output order is deterministic.
VerifyResult verify_range(const VerifyOptions& options);

}  // namespace ribbon

#pragma once

#include <utility>
#include <vector>

#include "ribbon/partition.hpp"
#include "ribbon/tableaux.hpp"

namespace ribbon {

// A fixed-length sequence of nonnegative integers.
class WeakComposition {
  public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }  // 1-based
    const std::vector<int>& parts() const { return parts_; }
    int sum() const;

    friend bool operator==(const WeakComposition&, const WeakComposition&) = default;

  private:
    std::vector<int> parts_;
};

// Fills the cell holding s in the standard tuple with 1 + d_s + alpha_1 +
// ... + alpha_{s-1}, where d_s counts the descents strictly below s. The
// composition must have length size-1. The result is a semistandard tuple
// with max entry |alpha| + |DES| + 1 and the same idx1.
SemistandardTableauTuple destandardize(const WeakComposition& alpha, const StandardTableauTuple& t);

// Inverse: entries are standardized in increasing value; cells of equal
// value are ordered by ascending (content, component), the unique order
// that creates no descents. Recovers the composition from the fillings.
// Throws std::invalid_argument if the input is not a valid image.
std::pair<WeakComposition, StandardTableauTuple> standardize(const SemistandardTableauTuple& t);

// Checks, as series truncated at t_order, that the descent generating
// function of standard tuples divided by (1-t^k)^{size-1} matches the
// max-entry generating function of semistandard tuples.
bool tuple_series_match(const PartitionTuple& shapes, int k, int t_order);

}  // namespace ribbon

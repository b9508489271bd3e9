#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ribbon {

// A cell of a Young diagram in English notation, rows and columns 1-based.
struct Cell {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Content of a cell: column index minus row index.
constexpr int content(Cell x) { return x.col - x.row; }

// An integer partition: weakly decreasing positive parts. The empty
// partition is a first-class value (no parts). Partitions are immutable
// value objects compared by their part sequence.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Parses "6,5,4,2,2,2"; the empty string is the empty partition.
    // Throws std::invalid_argument on malformed input.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }            // number of cells
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Length of row `row` (1-based); zero beyond the last row.
    int part(int row) const {
        return (row >= 1 && row <= rows()) ? parts_[row - 1] : 0;
    }

    bool contains(const Partition& mu) const;
    std::vector<Cell> cells() const;  // row-major

    // "6,5,4,2,2,2"; empty partition renders as "[]" via display().
    std::string to_string() const;
    std::string display() const;  // "[6,5,4,2,2,2]"

    friend auto operator<=>(const Partition&, const Partition&) = default;

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Hook value of a cell: cells to the right, plus cells below, plus one.
int hook_length(const Partition& p, Cell x);

// One entry per cell; both multisets are returned sorted ascending.
std::vector<int> content_multiset(const Partition& p);
std::vector<int> hook_multiset(const Partition& p);

// A k-tuple of partitions.
class PartitionTuple {
  public:
    PartitionTuple() = default;
    explicit PartitionTuple(std::vector<Partition> components)
        : components_(std::move(components)) {}

    int length() const { return static_cast<int>(components_.size()); }
    int size() const;  // total number of cells
    const Partition& component(int s) const { return components_[s]; }
    const std::vector<Partition>& components() const { return components_; }
    bool all_empty() const;

    std::string display() const;  // "([2,1], [1,1], [2])"

    friend auto operator<=>(const PartitionTuple&, const PartitionTuple&) = default;

  private:
    std::vector<Partition> components_;
};

// The lower-right contour of a Young diagram as a word over {east, north},
// read from the leftmost step of the lowest row. Empty rows are appended so
// that the number of north steps is the smallest multiple of k at least the
// number of rows. North steps sit exactly at positions part(i) + rows' - i.
class EdgeSequence {
  public:
    enum class Step : std::uint8_t { east = 0, north = 1 };

    static EdgeSequence of(const Partition& p, int k);

    const std::vector<Step>& word() const { return word_; }
    int padded_rows() const { return padded_rows_; }
    std::vector<int> north_positions() const;

    // Recovers the partition (inverse of `of`, up to padding).
    Partition decode() const;

  private:
    std::vector<Step> word_;
    int padded_rows_ = 0;
};

// A border strip: connected skew shape without a 2x2 square. `cells` are
// stored in ascending content order, so cells.front() is the tail.
struct BorderStrip {
    std::vector<Cell> cells;

    int size() const { return static_cast<int>(cells.size()); }
    Cell tail() const { return cells.front(); }
    int tail_content() const { return content(cells.front()); }
    int height() const { return cells.front().row - cells.back().row; }
};

// The skew shape big/small, validated to be a border strip.
// Throws std::invalid_argument if it is not one.
BorderStrip strip_between(const Partition& big, const Partition& small);

// All ways of removing a border strip of size k, as (strip, remainder)
// pairs ordered by decreasing tail content.
std::vector<std::pair<BorderStrip, Partition>> removable_strips(const Partition& p, int k);

// Partition left after removing size-k strips as long as possible.
Partition k_core(const Partition& p, int k);

// Component s collects the contour steps with label congruent to s mod k.
PartitionTuple k_quotient(const Partition& p, int k);

// The unique partition with empty k-core and the given k-quotient.
Partition from_quotient(const PartitionTuple& t, int k);

// All partitions of n, in descending lexicographic order of the part
// sequences; partitions_of(0) = { empty }.
std::vector<Partition> partitions_of(int n);

}  // namespace ribbon

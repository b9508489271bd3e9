#pragma once

#include <optional>
#include <vector>

#include "ribbon/partition.hpp"
#include "ribbon/polynomial.hpp"

namespace ribbon {

// Descent set of a tableau-like object together with its major index
// (the sum of the descents). idx1 is populated for tableau tuples only.
struct DescentData {
    std::vector<int> descents;  // ascending
    int maj = 0;
    std::optional<int> idx1;

    int count() const { return static_cast<int>(descents.size()); }
    bool contains(int i) const;
};

// A border strip tableau with all strips of size k, stored as its flag of
// partitions: flag[0] = empty, flag[i]/flag[i-1] a border strip of size k,
// flag.back() = shape. The label grid is derived on demand.
class BorderStripTableau {
  public:
    BorderStripTableau(int k, std::vector<Partition> flag);

    int k() const { return k_; }
    int strip_count() const { return static_cast<int>(strips_.size()); }
    const std::vector<Partition>& flag() const { return flag_; }
    const Partition& shape() const { return flag_.back(); }
    const BorderStrip& strip(int i) const { return strips_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<BorderStrip>& strips() const { return strips_; }

    int height() const;
    int first_strip_height() const;  // zero for the empty tableau

    friend bool operator==(const BorderStripTableau& a, const BorderStripTableau& b) {
        return a.k_ == b.k_ && a.flag_ == b.flag_;
    }

  private:
    int k_;
    std::vector<Partition> flag_;
    std::vector<BorderStrip> strips_;
};

// i is a descent when the tail of strip i+1 lies in a strictly lower row
// than the tail of strip i.
DescentData descents(const BorderStripTableau& b);

// k * |DES(B)| + height of the strip containing 1.
int bst_stat(const BorderStripTableau& b);

// Lazy exhaustive enumeration of BST(shape, k), duplicate-free. The order
// is canonical: depth-first peeling of strips from the full shape down,
// strips tried by decreasing tail content. If k does not divide |shape|
// the stream is empty.
class BstStream {
  public:
    BstStream(Partition shape, int k);
    std::optional<BorderStripTableau> next();

  private:
    struct Frame {
        Partition shape;
        std::vector<std::pair<BorderStrip, Partition>> moves;
        std::size_t next_move = 0;
    };
    BorderStripTableau make_tableau() const;

    int k_;
    bool pending_empty_ = false;
    std::vector<Frame> stack_;
};

std::vector<BorderStripTableau> all_bst(const Partition& shape, int k);
long long count_bst(const Partition& shape, int k);

// Standard Young tableaux are border strip tableaux with strip size 1.
inline std::vector<BorderStripTableau> all_syt(const Partition& shape) { return all_bst(shape, 1); }
inline long long count_syt(const Partition& shape) { return count_bst(shape, 1); }

// Generating polynomial of (maj, number of descents) over SYT(shape).
BiPoly fake_degree(const Partition& shape);

// The constant value of (-1)^height on the nonempty set BST(shape, k);
// +1 for the empty shape. Throws std::domain_error when the k-core is
// nonempty (no border strip tableau exists).
int bst_sign(const Partition& shape, int k);

// A bijective filling of a tuple of Young diagrams with 1..size, strictly
// increasing along rows and columns of every component.
class StandardTableauTuple {
  public:
    StandardTableauTuple(PartitionTuple shapes, std::vector<std::vector<std::vector<int>>> entries);

    const PartitionTuple& shapes() const { return shapes_; }
    int length() const { return shapes_.length(); }
    int size() const { return shapes_.size(); }
    int entry(int component, Cell x) const;
    const std::vector<std::vector<std::vector<int>>>& entries() const { return entries_; }

    // component index and cell of a value in 1..size
    std::pair<int, Cell> locate(int value) const;

    friend bool operator==(const StandardTableauTuple&, const StandardTableauTuple&) = default;

  private:
    PartitionTuple shapes_;
    std::vector<std::vector<std::vector<int>>> entries_;
    std::vector<std::pair<int, Cell>> positions_;  // value-1 -> (component, cell)
};

// Descents of a tuple: with i in component s and i+1 in component t,
// i is a descent when s <= t and c(i) > c(i+1), or s > t and c(i) >= c(i+1).
// idx1 is filled with length-1-s where s is the component containing 1.
DescentData descents(const StandardTableauTuple& t);

int idx1(const StandardTableauTuple& t);

// Lazy exhaustive enumeration of standard fillings of a shape tuple, in
// canonical order (entries placed 1..size; candidate cells ordered by
// component, then row).
class SytTupleStream {
  public:
    explicit SytTupleStream(PartitionTuple shapes);
    std::optional<StandardTableauTuple> next();

  private:
    struct Frame {
        std::vector<std::pair<int, int>> candidates;  // (component, row)
        std::size_t next_candidate = 0;
    };
    bool push_frame();
    StandardTableauTuple make_tuple() const;

    PartitionTuple shapes_;
    int total_;
    bool pending_empty_ = false;
    std::vector<std::vector<int>> partial_;           // current row lengths
    std::vector<std::tuple<int, int, int>> placed_;   // (component, row, col) per entry
    std::vector<Frame> stack_;
};

std::vector<StandardTableauTuple> all_syt_tuples(const PartitionTuple& shapes);
long long count_syt_tuples(const PartitionTuple& shapes);

// The flag correspondence: quotients of the flag of B form a growth chain
// of tuples, adding one cell per step; filling step i with i gives a
// standard tuple on the k-quotient of the shape.
StandardTableauTuple littlewood_map(const BorderStripTableau& b);
BorderStripTableau littlewood_inverse(const StandardTableauTuple& t, int k);

// A tuple of semistandard fillings (rows weakly increase, columns strictly
// increase); a nonempty tuple must contain at least one entry equal to 1.
class SemistandardTableauTuple {
  public:
    SemistandardTableauTuple(PartitionTuple shapes, std::vector<std::vector<std::vector<int>>> entries);

    const PartitionTuple& shapes() const { return shapes_; }
    int length() const { return shapes_.length(); }
    int size() const { return shapes_.size(); }
    int entry(int component, Cell x) const;
    const std::vector<std::vector<std::vector<int>>>& entries() const { return entries_; }

    int max_entry() const;  // zero for the empty tuple

    friend bool operator==(const SemistandardTableauTuple&, const SemistandardTableauTuple&) = default;

  private:
    PartitionTuple shapes_;
    std::vector<std::vector<std::vector<int>>> entries_;
};

// length-1-s for the leftmost component s containing an entry 1.
int idx1(const SemistandardTableauTuple& t);

// Lazy exhaustive enumeration of semistandard tuples with entries at most
// max_entry containing at least one 1, in lexicographic order of the
// row-major component readings.
class SsytTupleStream {
  public:
    SsytTupleStream(PartitionTuple shapes, int max_entry);
    std::optional<SemistandardTableauTuple> next();

  private:
    struct ComponentState {
        std::vector<int> shape;              // row lengths
        std::vector<std::vector<int>> grid;
        bool fill_minimal_from(int row, int col, int max_entry);
        bool advance(int max_entry);
    };
    bool contains_one() const;

    PartitionTuple shapes_;
    int max_entry_;
    bool exhausted_ = false;
    bool started_ = false;
    std::vector<ComponentState> components_;
};

std::vector<SemistandardTableauTuple> all_ssyt_tuples(const PartitionTuple& shapes, int max_entry);

}  // namespace ribbon

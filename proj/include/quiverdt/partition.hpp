#pragma once

#include "quiverdt/dimvec.hpp"

#include <vector>

namespace quiverdt {

// Integer partition with weakly decreasing positive parts; the empty list is
// the zero partition.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                  // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool is_zero() const { return parts_.empty(); }
    int part(int i) const;             // 1-based, 0 past the end
    int multiplicity(int k) const;     // number of parts equal to k
    int max_part() const { return parts_.empty() ? 0 : parts_[0]; }
    Partition dual() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

  private:
    std::vector<int> parts_;
};

// Canonical order: reverse-lexicographic on the part lists, so partitions of
// 3 run (3), (2,1), (1,1,1), and across sizes (2) comes before (1).
bool partition_precedes(const Partition& a, const Partition& b);

// All partitions of n in canonical order.
std::vector<Partition> enumerate_partitions(int n);

// Sum over i,j of min(i,j) * m_i(a) * m_j(b). Symmetric; pairing(a,a) equals
// the sum of squared dual parts.
long pairing(const Partition& a, const Partition& b);

// Tuple of partitions, one per vertex.
class MultiPartition {
  public:
    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> components);

    const std::vector<Partition>& components() const { return components_; }
    const Partition& component(size_t i) const { return components_[i]; }
    size_t arity() const { return components_.size(); }
    DimVector size() const;            // component sizes as a vector
    bool is_zero() const;

    // all components the one-column partition (1,...,1) of v_i
    static MultiPartition all_ones(const DimVector& v);
    // all components the one-row partition (v_i)
    static MultiPartition one_row(const DimVector& v);

    bool operator==(const MultiPartition& o) const { return components_ == o.components_; }
    bool operator!=(const MultiPartition& o) const { return components_ != o.components_; }

  private:
    std::vector<Partition> components_;
};

// Componentwise lexicographic extension of the partition order.
bool multipartition_precedes(const MultiPartition& a, const MultiPartition& b);

// All multipartitions with component sizes v, in canonical order.
std::vector<MultiPartition> enumerate_multipartitions(const DimVector& v);

}  // namespace quiverdt

#include "quiverdt/partition.hpp"

#include "quiverdt/error.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace quiverdt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw input_error("partition part must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw input_error("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1) throw input_error("partition parts are indexed from 1");
    if (i > static_cast<int>(parts_.size())) return 0;
    return parts_[static_cast<size_t>(i) - 1];
}

int Partition::multiplicity(int k) const {
    int c = 0;
    for (int p : parts_)
        if (p == k) ++c;
    return c;
}

Partition Partition::dual() const {
    std::vector<int> d;
    for (int j = 1; j <= max_part(); ++j) {
        int c = 0;
        for (int p : parts_)
            if (p >= j) ++c;
        d.push_back(c);
    }
    return Partition(std::move(d));
}

bool partition_precedes(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

namespace {
void partitions_rec(int n, int maxpart, std::vector<int>& stack,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        stack.push_back(k);
        partitions_rec(n - k, k, stack, out);
        stack.pop_back();
    }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw input_error("enumerate_partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> stack;
    partitions_rec(n, n, stack, out);
    if (n == 0) out.assign(1, Partition());
    return out;
}

long pairing(const Partition& a, const Partition& b) {
    long s = 0;
    for (int i : a.parts())
        for (int j : b.parts()) s += std::min(i, j);
    return s;
}

MultiPartition::MultiPartition(std::vector<Partition> components)
    : components_(std::move(components)) {}

DimVector MultiPartition::size() const {
    DimVector v;
    v.reserve(components_.size());
    for (const auto& p : components_) v.push_back(p.size());
    return v;
}

bool MultiPartition::is_zero() const {
    for (const auto& p : components_)
        if (!p.is_zero()) return false;
    return true;
}

MultiPartition MultiPartition::all_ones(const DimVector& v) {
    std::vector<Partition> c;
    c.reserve(v.size());
    for (int n : v) {
        if (n < 0) throw input_error("dimension vector entry must be nonnegative");
        c.push_back(Partition(std::vector<int>(static_cast<size_t>(n), 1)));
    }
    return MultiPartition(std::move(c));
}

MultiPartition MultiPartition::one_row(const DimVector& v) {
    std::vector<Partition> c;
    c.reserve(v.size());
    for (int n : v) {
        if (n < 0) throw input_error("dimension vector entry must be nonnegative");
        if (n == 0)
            c.push_back(Partition());
        else
            c.push_back(Partition(std::vector<int>{n}));
    }
    return MultiPartition(std::move(c));
}

bool multipartition_precedes(const MultiPartition& a, const MultiPartition& b) {
    if (a.arity() != b.arity())
        throw input_error("comparing multipartitions of different arity");
    for (size_t i = 0; i < a.arity(); ++i) {
        if (a.component(i) != b.component(i))
            return partition_precedes(a.component(i), b.component(i));
    }
    return false;
}

std::vector<MultiPartition> enumerate_multipartitions(const DimVector& v) {
    std::vector<std::vector<Partition>> per_vertex;
    per_vertex.reserve(v.size());
    for (int n : v) {
        if (n < 0) throw input_error("dimension vector entry must be nonnegative");
        per_vertex.push_back(enumerate_partitions(n));
    }
    std::vector<MultiPartition> out;
    std::vector<Partition> current(v.size());
    // odometer over the per-vertex lists, last vertex fastest
    std::vector<size_t> pos(v.size(), 0);
    for (;;) {
        for (size_t i = 0; i < v.size(); ++i) current[i] = per_vertex[i][pos[i]];
        out.push_back(MultiPartition(current));
        size_t i = v.size();
        while (i > 0) {
            --i;
            if (pos[i] + 1 < per_vertex[i].size()) {
                ++pos[i];
                break;
            }
            pos[i] = 0;
            if (i == 0) return out;
        }
        if (v.empty()) return out;
    }
}

}  // namespace quiverdt

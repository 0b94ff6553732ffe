#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace twistlab {

/// Finitely supported real sequence indexed from 1.
///
/// Stored in canonical form: entries sorted by strictly increasing index,
/// exact zeros dropped. This is the carrier for every vector appearing in
/// the library (norm arguments, centralizer outputs, coefficient vectors).
class RealVector {
public:
    struct Entry {
        long long index;  // >= 1
        double value;     // != 0
    };

    RealVector() = default;

    /// Builds from (index, value) pairs; sorts, merges duplicates, drops zeros.
    static RealVector from_entries(std::vector<Entry> entries);

    /// Dense literal, index 1 = first element.
    static RealVector from_dense(const std::vector<double>& values);

    static RealVector basis(long long j, double value = 1.0);

    /// Sum of basis vectors over the given indices (all coefficients 1).
    static RealVector indicator(const std::vector<long long>& indices);

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t support_size() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }
    long long max_index() const { return entries_.empty() ? 0 : entries_.back().index; }

    std::vector<long long> support() const;
    double at(long long index) const;  // 0 if not stored

    double l1_norm() const;
    double l2_norm() const;
    double linf_norm() const;
    double dot(const RealVector& other) const;

    RealVector scaled(double factor) const;
    RealVector plus(const RealVector& other) const;
    RealVector minus(const RealVector& other) const;
    RealVector abs() const;
    RealVector squared() const;  // entrywise square
    RealVector hadamard(const RealVector& multiplier) const;

    /// Keeps only entries whose index satisfies the predicate.
    RealVector filtered(const std::function<bool(long long)>& keep) const;

    /// Entries re-addressed through index -> sigma(index).
    RealVector permuted(const std::function<long long(long long)>& sigma) const;

    bool operator==(const RealVector& other) const;

    std::string to_string() const;

private:
    std::vector<Entry> entries_;
};

}  // namespace twistlab

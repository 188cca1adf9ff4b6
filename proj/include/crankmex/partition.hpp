#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace crankmex {

/// Canonical integer partition: nonincreasing positive parts with n >= 1.
/// Construction sorts the input; the empty partition is rejected.
class Partition {
public:
    explicit Partition(std::vector<int> parts);

    static Partition all_ones(int n);

    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }

    /// 1-based part access, matching the usual lambda_i notation.
    int part(int i) const { return parts_[static_cast<size_t>(i) - 1]; }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

Partition make_partition(std::span<const int> parts);

// Statistics on raw canonical part lists (nonincreasing, positive).
// The span overloads exist so enumeration loops can avoid constructing
// Partition values; the Partition overloads are thin wrappers.
int omega(std::span<const int> parts);
int mu(std::span<const int> parts);
int crank(std::span<const int> parts);
int mex(std::span<const int> parts);
int beta(std::span<const int> parts);
int durfee(std::span<const int> parts, int j = 0);
std::optional<int> j_fixed_point(std::span<const int> parts, int j);
std::optional<int> fixed_point(std::span<const int> parts);
bool has_j_fixed_point(std::span<const int> parts, int j);

inline int omega(const Partition& p) { return omega(std::span<const int>(p.parts())); }
inline int mu(const Partition& p) { return mu(std::span<const int>(p.parts())); }
inline int crank(const Partition& p) { return crank(std::span<const int>(p.parts())); }
inline int mex(const Partition& p) { return mex(std::span<const int>(p.parts())); }
inline int beta(const Partition& p) { return beta(std::span<const int>(p.parts())); }
inline int durfee(const Partition& p, int j = 0) { return durfee(std::span<const int>(p.parts()), j); }
inline std::optional<int> fixed_point(const Partition& p) { return fixed_point(std::span<const int>(p.parts())); }
inline bool has_j_fixed_point(const Partition& p, int j) { return has_j_fixed_point(std::span<const int>(p.parts()), j); }

enum class ClassTag {
    Xe,        // even mex
    Xo,        // odd mex
    F,         // has a fixed point
    Fstar,     // F with the all-ones convention: F*(n,1) = {1^n}, F*(n,k) = F(n,k) for k >= 2
    G,         // no fixed point
    G1,        // no 1-fixed point
    MNeg,      // crank < 0
    MPos,      // crank > 0
    MNonneg,   // crank >= 0
    MNonpos,   // crank <= 0
    MZero,     // crank = 0
    P,         // all partitions
};

std::string class_tag_name(ClassTag tag);

/// Predicate-defined partition family, optionally refined by the number of
/// parts greater than one (for Fstar the refinement is the class parameter
/// rather than beta itself; see class_param).
struct PartitionClassId {
    ClassTag tag;
    std::optional<int> beta_filter;

    auto operator<=>(const PartitionClassId&) const = default;
};

bool member(std::span<const int> parts, const PartitionClassId& cls);
inline bool member(const Partition& p, const PartitionClassId& cls) {
    return member(std::span<const int>(p.parts()), cls);
}

/// The refinement parameter a partition carries for a tag: beta for every tag
/// except Fstar, where 1^n sits at parameter 1 and other members at beta.
/// Empty when the partition is not in the tag's class at any parameter.
std::optional<int> class_param(std::span<const int> parts, ClassTag tag);

/// Streams the partitions of n in decreasing lexicographic order:
/// (n), (n-1,1), ..., (1^n). Single consumer; next() refills `out`.
class PartitionGenerator {
public:
    explicit PartitionGenerator(int n);
    bool next(std::vector<int>& out);

private:
    std::vector<int> current_;
    bool started_ = false;
    bool done_ = false;
};

/// Calls f(parts) for every partition of n in decreasing lexicographic
/// order; the buffer is reused between calls.
template <typename F>
void for_each_partition(int n, F&& f) {
    PartitionGenerator gen(n);
    std::vector<int> buf;
    while (gen.next(buf)) f(std::span<const int>(buf));
}

std::vector<Partition> enumerate_partitions(int n);

/// Exact class cardinalities at fixed n, keyed by (tag, refinement
/// parameter). Counts are filled by a single exhaustive pass.
struct CountTable {
    int n = 0;
    std::map<std::pair<ClassTag, int>, long long> rows;

    long long count(ClassTag tag, int k) const;
    long long total(ClassTag tag) const;
    int max_param(ClassTag tag) const;
};

CountTable count_classes(int n, std::span<const PartitionClassId> classes);

}  // namespace crankmex

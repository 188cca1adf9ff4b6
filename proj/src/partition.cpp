#include "crankmex/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace crankmex {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("empty partition rejected");
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("invalid part: parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::all_ones(int n) {
    return Partition(std::vector<int>(static_cast<size_t>(n), 1));
}

Partition make_partition(std::span<const int> parts) {
    return Partition(std::vector<int>(parts.begin(), parts.end()));
}

int omega(std::span<const int> parts) {
    int w = 0;
    for (int p : parts)
        if (p == 1) ++w;
    return w;
}

int mu(std::span<const int> parts) {
    int w = omega(parts);
    int m = 0;
    for (int p : parts)
        if (p > w) ++m;
    return m;
}

int crank(std::span<const int> parts) {
    int w = omega(parts);
    if (w == 0) return parts.empty() ? 0 : parts[0];
    return mu(parts) - w;
}

int mex(std::span<const int> parts) {
    // parts are nonincreasing, so scan from the tail upward
    int want = 1;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        if (*it == want) ++want;
        else if (*it > want) break;
    }
    return want;
}

int beta(std::span<const int> parts) {
    int b = 0;
    for (int p : parts)
        if (p > 1) ++b;
    return b;
}

int durfee(std::span<const int> parts, int j) {
    int d = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] >= static_cast<int>(i) + 1 + j) d = static_cast<int>(i) + 1;
        else break;
    }
    return d;
}

std::optional<int> j_fixed_point(std::span<const int> parts, int j) {
    // lambda_i nonincreasing and i+j strictly increasing, so at most one index matches
    for (size_t i = 0; i < parts.size(); ++i) {
        int target = static_cast<int>(i) + 1 + j;
        if (parts[i] == target) return static_cast<int>(i) + 1;
        if (parts[i] < target) return std::nullopt;
    }
    return std::nullopt;
}

std::optional<int> fixed_point(std::span<const int> parts) { return j_fixed_point(parts, 0); }

bool has_j_fixed_point(std::span<const int> parts, int j) { return j_fixed_point(parts, j).has_value(); }

std::string class_tag_name(ClassTag tag) {
    switch (tag) {
        case ClassTag::Xe: return "X_e";
        case ClassTag::Xo: return "X_o";
        case ClassTag::F: return "F";
        case ClassTag::Fstar: return "F*";
        case ClassTag::G: return "G";
        case ClassTag::G1: return "G_1";
        case ClassTag::MNeg: return "M_<0";
        case ClassTag::MPos: return "M_>0";
        case ClassTag::MNonneg: return "M_>=0";
        case ClassTag::MNonpos: return "M_<=0";
        case ClassTag::MZero: return "M_0";
        case ClassTag::P: return "P";
    }
    return "?";
}

namespace {

bool in_tag(std::span<const int> parts, ClassTag tag) {
    switch (tag) {
        case ClassTag::Xe: return mex(parts) % 2 == 0;
        case ClassTag::Xo: return mex(parts) % 2 == 1;
        case ClassTag::F: return fixed_point(parts).has_value();
        case ClassTag::Fstar: {
            int b = beta(parts);
            if (b == 0) return true;  // 1^n, the F*(n,1) convention row
            return b >= 2 && fixed_point(parts).has_value();
        }
        case ClassTag::G: return !fixed_point(parts).has_value();
        case ClassTag::G1: return !has_j_fixed_point(parts, 1);
        case ClassTag::MNeg: return crank(parts) < 0;
        case ClassTag::MPos: return crank(parts) > 0;
        case ClassTag::MNonneg: return crank(parts) >= 0;
        case ClassTag::MNonpos: return crank(parts) <= 0;
        case ClassTag::MZero: return crank(parts) == 0;
        case ClassTag::P: return true;
    }
    return false;
}

}  // namespace

std::optional<int> class_param(std::span<const int> parts, ClassTag tag) {
    if (!in_tag(parts, tag)) return std::nullopt;
    if (tag == ClassTag::Fstar) {
        int b = beta(parts);
        return b == 0 ? 1 : b;
    }
    return beta(parts);
}

bool member(std::span<const int> parts, const PartitionClassId& cls) {
    auto param = class_param(parts, cls.tag);
    if (!param) return false;
    return !cls.beta_filter || *cls.beta_filter == *param;
}

PartitionGenerator::PartitionGenerator(int n) {
    if (n < 1) throw std::invalid_argument("invalid n: must be positive");
    current_.reserve(static_cast<size_t>(n));
    current_.push_back(n);
}

bool PartitionGenerator::next(std::vector<int>& out) {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        out = current_;
        return true;
    }
    // Decreasing lexicographic successor: shrink the rightmost part larger
    // than 1 and redistribute the freed amount greedily.
    int h = static_cast<int>(current_.size()) - 1;
    int ones = 0;
    while (h >= 0 && current_[static_cast<size_t>(h)] == 1) {
        ++ones;
        --h;
    }
    if (h < 0) {
        done_ = true;
        return false;  // all ones: last partition
    }
    int r = current_[static_cast<size_t>(h)] - 1;
    int rem = current_[static_cast<size_t>(h)] + ones;
    current_.resize(static_cast<size_t>(h));
    while (rem > r) {
        current_.push_back(r);
        rem -= r;
    }
    if (rem > 0) current_.push_back(rem);
    out = current_;
    return true;
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> result;
    for_each_partition(n, [&](std::span<const int> parts) {
        result.emplace_back(std::vector<int>(parts.begin(), parts.end()));
    });
    return result;
}

long long CountTable::count(ClassTag tag, int k) const {
    auto it = rows.find({tag, k});
    return it == rows.end() ? 0 : it->second;
}

long long CountTable::total(ClassTag tag) const {
    long long sum = 0;
    for (const auto& [key, cnt] : rows)
        if (key.first == tag) sum += cnt;
    return sum;
}

int CountTable::max_param(ClassTag tag) const {
    int best = -1;
    for (const auto& [key, cnt] : rows)
        if (key.first == tag && cnt > 0) best = std::max(best, key.second);
    return best;
}

CountTable count_classes(int n, std::span<const PartitionClassId> classes) {
    CountTable table;
    table.n = n;
    std::vector<ClassTag> tags;
    for (const auto& cls : classes)
        if (std::find(tags.begin(), tags.end(), cls.tag) == tags.end()) tags.push_back(cls.tag);
    for_each_partition(n, [&](std::span<const int> parts) {
        for (ClassTag tag : tags) {
            if (auto k = class_param(parts, tag)) ++table.rows[{tag, *k}];
        }
    });
    return table;
}

}  // namespace crankmex

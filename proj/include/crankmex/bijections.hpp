#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "crankmex/partition.hpp"

namespace crankmex {

enum class Rule {
    Split,           // peel off the staircase (2j+1, ..., 1) realizing an even mex
    RuleI,           // staircase fixed, kappa's (2j+1)-fixed point absorbed
    RuleII,          // staircase shrinks by two parts, kappa grows
    Insert,          // G_1(n-1) -> F(n) insertion of the part d_1+1
    FpToOnes,        // fixed point lambda_i replaced by i ones
    OnesToPart,      // i (or d+1) ones gathered back into one part
    CrankNegToPos,   // the negative-to-positive crank rearrangement
    CrankPosToNeg,   // its inverse
};

const char* rule_name(Rule rule);

/// A state along a bijection: either (staircase parameter j, kappa) during
/// the reduction phase, or a bare partition. kappa may be empty.
struct TraceState {
    std::optional<int> staircase_j;
    std::vector<int> parts;

    bool operator==(const TraceState&) const = default;
};

/// Sum over the whole state, staircase included; constant along any trace.
int state_total(const TraceState& state);

/// Number of parts greater than one in the whole state, staircase included.
int state_beta(const TraceState& state);

struct TraceStep {
    Rule rule;
    TraceState state;

    bool operator==(const TraceStep&) const = default;
};

struct BijectionTrace {
    std::vector<TraceStep> steps;
};

/// The iterative even-mex staircase reduction: splits lambda (even mex 2j+2)
/// into the staircase (2j+1,...,1) and kappa, then applies rules (i)/(ii)
/// until the state is (1) + mu with mu free of 1-fixed points. Returns mu,
/// a partition of n-1 with the same number of parts greater than one.
std::pair<Partition, BijectionTrace> staircase_reduce(const Partition& lambda);

/// G_1(n-1) -> F(n): with d = d_1(mu), decrement the first d parts and
/// insert d+1. All-ones input maps to all ones of n.
Partition g1_insert(const Partition& mu);

/// Composition of staircase_reduce and g1_insert: X_e(n,k) -> F*(n,k+1).
std::pair<Partition, BijectionTrace> even_mex_to_fixed_point(const Partition& lambda);

/// Inverse of even_mex_to_fixed_point, by forward-image tabulation.
Partition fixed_point_to_even_mex(const Partition& phi);

/// Bulk inverse for a fixed n: tabulates the forward map once.
class EvenMexInverse {
public:
    explicit EvenMexInverse(int n);
    Partition operator()(const Partition& phi) const;

private:
    std::map<std::vector<int>, std::vector<int>> table_;
    int n_;
};

/// F(n,k+1) -> M_<0(n,k) for k >= 1: the fixed point lambda_i becomes i ones.
Partition fixed_to_negcrank(const Partition& lambda);

/// Reverse map, two cases (fixed point present or not); identity on 1^n.
Partition negcrank_to_fixed(const Partition& kappa);

/// M_<0(n,k) -> M_>0(n,k+1), n >= 2: the omega ones become a new part and
/// the mu parts above omega each shed one unit into new ones.
Partition neg_to_pos_crank(const Partition& lambda);

/// Exact inverse of neg_to_pos_crank.
Partition pos_to_neg_crank(const Partition& rho);

/// F*(n,k+1) -> M_<0(n,k) including the 1^n convention row (identity there).
Partition fstar_to_negcrank(const Partition& phi);

/// Full chain X_e -> F* -> M_<0 -> M_>0, one trace.
BijectionTrace trace_chain(const Partition& lambda);

}  // namespace crankmex

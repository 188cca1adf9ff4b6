#include "crankmex/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace crankmex {

const char* rule_name(Rule rule) {
    switch (rule) {
        case Rule::Split: return "split";
        case Rule::RuleI: return "rule-i";
        case Rule::RuleII: return "rule-ii";
        case Rule::Insert: return "insert";
        case Rule::FpToOnes: return "fp-to-ones";
        case Rule::OnesToPart: return "ones-to-part";
        case Rule::CrankNegToPos: return "crank-neg-to-pos";
        case Rule::CrankPosToNeg: return "crank-pos-to-neg";
    }
    return "?";
}

namespace {

// staircase (2j+1, 2j, ..., 1) has sum (2j+1)(j+1) and 2j parts greater than one
int staircase_sum(int j) { return (2 * j + 1) * (j + 1); }

void canonicalize(std::vector<int>& parts) {
    parts.erase(std::remove_if(parts.begin(), parts.end(), [](int p) { return p <= 0; }), parts.end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
}

int sum_of(const std::vector<int>& parts) {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

}  // namespace

int state_total(const TraceState& state) {
    int s = sum_of(state.parts);
    if (state.staircase_j) s += staircase_sum(*state.staircase_j);
    return s;
}

int state_beta(const TraceState& state) {
    int b = beta(std::span<const int>(state.parts));
    if (state.staircase_j) b += 2 * *state.staircase_j;
    return b;
}

std::pair<Partition, BijectionTrace> staircase_reduce(const Partition& lambda) {
    int m = mex(lambda);
    if (m % 2 != 0) throw std::domain_error("not in X_e: mex is odd");
    if (lambda.n() < 2) throw std::domain_error("degenerate: the reduction needs n >= 2");

    int j = (m - 2) / 2;
    std::vector<int> kappa = lambda.parts();
    for (int s = 1; s <= 2 * j + 1; ++s) {
        auto it = std::find(kappa.begin(), kappa.end(), s);
        kappa.erase(it);  // mex 2j+2 guarantees one copy of each of 1..2j+1
    }
    canonicalize(kappa);

    BijectionTrace trace;
    trace.steps.push_back({Rule::Split, {j, kappa}});

    const int cap = 2 * lambda.n();
    for (int iter = 0;; ++iter) {
        if (iter > cap) throw std::logic_error("internal error: reduction exceeded its iteration cap");
        if (auto i = j_fixed_point(std::span<const int>(kappa), 2 * j + 1)) {
            // (i): kappa_i = i + 2j+1 is replaced by 2j+2; earlier parts grow by one
            std::vector<int> next;
            next.reserve(kappa.size());
            for (int t = 0; t < *i - 1; ++t) next.push_back(kappa[static_cast<size_t>(t)] + 1);
            next.push_back(2 * j + 2);
            for (size_t t = static_cast<size_t>(*i); t < kappa.size(); ++t) next.push_back(kappa[t]);
            canonicalize(next);
            kappa = std::move(next);
            trace.steps.push_back({Rule::RuleI, {j, kappa}});
            continue;
        }
        if (j == 0) break;  // state is (1) + kappa with kappa in G_1(n-1)
        // (ii): two staircase parts move into kappa
        int d = durfee(std::span<const int>(kappa), 2 * j + 1);
        std::vector<int> next;
        next.reserve(kappa.size() + 2);
        for (int t = 0; t < d; ++t) next.push_back(kappa[static_cast<size_t>(t)] - 1);
        next.push_back(d + 2 * j + 1);
        next.push_back(2 * j);
        for (size_t t = static_cast<size_t>(d); t < kappa.size(); ++t) next.push_back(kappa[t]);
        canonicalize(next);
        kappa = std::move(next);
        --j;
        trace.steps.push_back({Rule::RuleII, {j, kappa}});
    }

    return {Partition(kappa), std::move(trace)};
}

Partition g1_insert(const Partition& mu) {
    if (has_j_fixed_point(mu, 1)) throw std::domain_error("not in G_1: input has a 1-fixed point");
    int d = durfee(mu, 1);
    std::vector<int> out;
    out.reserve(mu.parts().size() + 1);
    for (int t = 0; t < d; ++t) out.push_back(mu.parts()[static_cast<size_t>(t)] - 1);
    out.push_back(d + 1);
    for (size_t t = static_cast<size_t>(d); t < mu.parts().size(); ++t) out.push_back(mu.parts()[t]);
    canonicalize(out);
    return Partition(std::move(out));
}

std::pair<Partition, BijectionTrace> even_mex_to_fixed_point(const Partition& lambda) {
    if (mex(lambda) % 2 != 0) throw std::domain_error("not in X_e: mex is odd");
    if (lambda.n() == 1) {
        // (1) sits on the all-ones convention row
        BijectionTrace trace;
        trace.steps.push_back({Rule::Split, {0, {}}});
        trace.steps.push_back({Rule::Insert, {std::nullopt, lambda.parts()}});
        return {lambda, std::move(trace)};
    }
    auto [mu, trace] = staircase_reduce(lambda);
    Partition phi = g1_insert(mu);
    trace.steps.push_back({Rule::Insert, {std::nullopt, phi.parts()}});
    return {phi, std::move(trace)};
}

EvenMexInverse::EvenMexInverse(int n) : n_(n) {
    for_each_partition(n, [&](std::span<const int> parts) {
        if (mex(parts) % 2 != 0) return;
        Partition lambda = make_partition(parts);
        auto [phi, trace] = even_mex_to_fixed_point(lambda);
        table_.emplace(phi.parts(), lambda.parts());
    });
}

Partition EvenMexInverse::operator()(const Partition& phi) const {
    if (phi.n() != n_) throw std::invalid_argument("inverse table built for a different n");
    auto it = table_.find(phi.parts());
    if (it == table_.end()) throw std::domain_error("not in F*: no even-mex preimage");
    return Partition(it->second);
}

Partition fixed_point_to_even_mex(const Partition& phi) {
    if (!member(phi, {ClassTag::Fstar, std::nullopt})) throw std::domain_error("not in F*");
    return EvenMexInverse(phi.n())(phi);
}

Partition fixed_to_negcrank(const Partition& lambda) {
    auto i = fixed_point(lambda);
    if (!i) throw std::domain_error("not in F: no fixed point");
    if (beta(lambda) <= 1) throw std::domain_error("degenerate class, use F* convention");
    std::vector<int> out = lambda.parts();
    out.erase(std::find(out.begin(), out.end(), *i));
    out.insert(out.end(), static_cast<size_t>(*i), 1);
    canonicalize(out);
    return Partition(std::move(out));
}

Partition negcrank_to_fixed(const Partition& kappa) {
    if (crank(kappa) >= 0) throw std::domain_error("not in M_<0: crank is nonnegative");
    if (beta(kappa) == 0) return kappa;  // 1^n, the F* convention row
    std::vector<int> out = kappa.parts();
    int gather;
    if (auto i = fixed_point(kappa)) {
        gather = *i;  // omega(kappa) >= i by the fixed-point lemma
    } else {
        gather = durfee(kappa) + 1;  // omega(kappa) >= d+1 by the Durfee lemma
    }
    for (int t = 0; t < gather; ++t) out.erase(std::find(out.begin(), out.end(), 1));
    out.push_back(gather);
    canonicalize(out);
    return Partition(std::move(out));
}

Partition neg_to_pos_crank(const Partition& lambda) {
    if (crank(lambda) >= 0) throw std::domain_error("not in M_<0: crank is nonnegative");
    if (lambda.n() < 2) throw std::domain_error("degenerate: n must be at least 2");
    int k = beta(lambda);
    int w = omega(lambda);
    int m = mu(lambda);
    // lambda = (lambda_1, ..., lambda_k, 1^w); the first m parts exceed w
    std::vector<int> out;
    out.reserve(static_cast<size_t>(k + 1 + m));
    for (int t = 0; t < m; ++t) out.push_back(lambda.parts()[static_cast<size_t>(t)] - 1);
    out.push_back(w);
    for (int t = m; t < k; ++t) out.push_back(lambda.parts()[static_cast<size_t>(t)]);
    out.insert(out.end(), static_cast<size_t>(m), 1);
    canonicalize(out);
    return Partition(std::move(out));
}

Partition pos_to_neg_crank(const Partition& rho) {
    if (crank(rho) <= 0) throw std::domain_error("not in M_>0: crank is nonpositive");
    int kp1 = beta(rho);
    if (kp1 == 0) throw std::logic_error("internal error: positive crank forces a part greater than one");
    int v = omega(rho);
    // v+1 <= kp1 because crank > 0 forces mu > omega
    int ell = rho.part(v + 1);
    std::vector<int> out;
    out.reserve(static_cast<size_t>(kp1 - 1 + ell));
    for (int t = 0; t < v; ++t) out.push_back(rho.parts()[static_cast<size_t>(t)] + 1);
    for (int t = v + 1; t < kp1; ++t) out.push_back(rho.parts()[static_cast<size_t>(t)]);
    out.insert(out.end(), static_cast<size_t>(ell), 1);
    canonicalize(out);
    return Partition(std::move(out));
}

Partition fstar_to_negcrank(const Partition& phi) {
    if (beta(phi) == 0) return phi;  // 1^n <-> 1^n
    return fixed_to_negcrank(phi);
}

BijectionTrace trace_chain(const Partition& lambda) {
    auto [phi, trace] = even_mex_to_fixed_point(lambda);
    Partition kappa = fstar_to_negcrank(phi);
    trace.steps.push_back({Rule::FpToOnes, {std::nullopt, kappa.parts()}});
    Partition rho = neg_to_pos_crank(kappa);
    trace.steps.push_back({Rule::CrankNegToPos, {std::nullopt, rho.parts()}});
    return trace;
}

}  // namespace crankmex

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace crankmex {

/// Outcome of one verification suite. A failing suite always carries at
/// least one counterexample; notes record flagged-but-expected anomalies.
struct VerifyReport {
    std::string suite;
    std::vector<std::pair<std::string, long long>> parameters;
    bool pass = true;
    std::vector<std::string> counterexamples;
    std::vector<std::string> notes;
    double elapsed_ms = 0.0;
};

nlohmann::json to_json(const VerifyReport& report);

struct VerifyBudget {
    int nmax = 28;
    int qmax = 30;
    int zmax = 10;
};

/// The refined count equalities x_e(n,k) = f*(n,k+1) = m_<0(n,k) = m_>0(n,k+1)
/// for 2 <= n <= nmax, the crank-mex equality x_o(n) = m_>=0(n), the
/// unrefined x_e = f = m_<0 = m_>0 chain, and the basic statistic invariants.
VerifyReport verify_theorem1(int nmax);

/// Exhaustive bijectivity of the three maps on all partitions of n <= nmax:
/// class- and beta-correctness, injectivity, surjectivity, round trips,
/// per-step trace bookkeeping, the two crank lemmas, the crank +-1 lists
/// at n=7, and the non-negation witness at n=8.
VerifyReport verify_bijections(int nmax);

/// Series equalities of the four direct generating functions against E(z,q)
/// and z*E(z,q) on the window, plus coefficient-vs-enumeration reports.
VerifyReport verify_gf(const VerifyBudget& budget);

/// The finite identity chain: auxiliary zero identity, rewritten goal,
/// z^N coefficient identity (N <= 8 at qmax 60), the alternating
/// q-binomial sum lemma and the q-binomial-theorem step (N <= 12), plus
/// corrupted-coefficient self-tests of every comparator.
VerifyReport verify_identities();

/// The crank generating function against enumerated crank distributions for
/// 2 <= n <= nmax, the exact n=1 convention row, and row conservation.
VerifyReport verify_crank_gf(int nmax);

/// The obstruction checks: beta multisets at n=5, the n=26 witness with
/// even m_0(26), and g(n,k) = m_<=0(n,k) for k >= 2 with the exact
/// (n) <-> 1^n discrepancy pinned at k <= 1.
VerifyReport verify_section4(int nmax);

std::vector<VerifyReport> verify_all(const VerifyBudget& budget);

}  // namespace crankmex

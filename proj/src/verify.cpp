#include "crankmex/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "crankmex/bijections.hpp"
#include "crankmex/gf.hpp"
#include "crankmex/partition.hpp"
#include "crankmex/render.hpp"

namespace crankmex {

nlohmann::json to_json(const VerifyReport& report) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [name, value] : report.parameters) params[name] = value;
    return nlohmann::json{
        {"suite", report.suite},
        {"parameters", params},
        {"pass", report.pass},
        {"counterexamples", report.counterexamples},
        {"notes", report.notes},
        {"elapsed_ms", report.elapsed_ms},
    };
}

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void check(VerifyReport& report, bool ok, const std::string& counterexample) {
    if (ok) return;
    report.pass = false;
    if (report.counterexamples.size() < 50) report.counterexamples.push_back(counterexample);
}

std::string show(std::span<const int> parts) { return render_parts(parts); }

}  // namespace

VerifyReport verify_theorem1(int nmax) {
    Timer timer;
    VerifyReport report;
    report.suite = "theorem1";
    report.parameters = {{"nmax", nmax}};

    const PartitionClassId wanted[] = {
        {ClassTag::Xe, std::nullopt},  {ClassTag::Xo, std::nullopt},   {ClassTag::F, std::nullopt},
        {ClassTag::Fstar, std::nullopt}, {ClassTag::MNeg, std::nullopt}, {ClassTag::MPos, std::nullopt},
        {ClassTag::MNonneg, std::nullopt},
    };
    for (int n = 1; n <= nmax; ++n) {
        CountTable counts = count_classes(n, wanted);

        // crank-mex equality holds from n = 1
        check(report, counts.total(ClassTag::Xo) == counts.total(ClassTag::MNonneg),
              "x_o(" + std::to_string(n) + ") != m_>=0(" + std::to_string(n) + ")");

        if (n >= 2) {
            for (int k = 0; k <= n + 1; ++k) {
                long long xe = counts.count(ClassTag::Xe, k);
                long long fs = counts.count(ClassTag::Fstar, k + 1);
                long long mn = counts.count(ClassTag::MNeg, k);
                long long mp = counts.count(ClassTag::MPos, k + 1);
                check(report, xe == fs && fs == mn && mn == mp,
                      "refined counts differ at n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                          std::to_string(xe) + "," + std::to_string(fs) + "," + std::to_string(mn) + "," +
                          std::to_string(mp));
            }
            long long xe = counts.total(ClassTag::Xe);
            long long f = counts.total(ClassTag::F);
            long long mn = counts.total(ClassTag::MNeg);
            long long mp = counts.total(ClassTag::MPos);
            check(report, xe == f && f == mn && mn == mp,
                  "unrefined x_e=f=m_<0=m_>0 fails at n=" + std::to_string(n));
        }

        // statistic invariants over every partition of n
        for_each_partition(n, [&](std::span<const int> parts) {
            check(report, beta(parts) == static_cast<int>(parts.size()) - omega(parts),
                  "beta != length - omega for " + show(parts));
            int fixed_hits = 0;
            for (size_t i = 0; i < parts.size(); ++i)
                if (parts[i] == static_cast<int>(i) + 1) ++fixed_hits;
            check(report, fixed_hits <= 1, "more than one fixed point in " + show(parts));
            int d = durfee(parts);
            if (auto fp = fixed_point(parts)) {
                check(report, d == *fp, "fixed point without matching Durfee size in " + show(parts));
            } else if (d >= 1) {
                check(report, parts[static_cast<size_t>(d) - 1] > d,
                      "fixed-point-free partition with lambda_d = d: " + show(parts));
            }
        });
    }
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

namespace {

void check_trace(VerifyReport& report, const Partition& lambda, const BijectionTrace& trace) {
    int b = beta(lambda);
    const TraceState* prev = nullptr;
    for (const auto& step : trace.steps) {
        check(report, state_total(step.state) == lambda.n(),
              "trace state total drifts for " + render_parts(lambda));
        int expected_beta = (step.rule == Rule::Insert) ? (b == 0 ? 0 : b + 1) : b;
        check(report, state_beta(step.state) == expected_beta,
              "trace beta bookkeeping fails for " + render_parts(lambda) + " at " + rule_name(step.rule));
        if (step.rule == Rule::Insert && prev && lambda.n() >= 2) {
            // the pre-insert state must be (1) + mu with mu in G_1(n-1)
            check(report, prev->staircase_j && *prev->staircase_j == 0,
                  "reduction did not end at the unit staircase for " + render_parts(lambda));
            check(report, !has_j_fixed_point(std::span<const int>(prev->parts), 1),
                  "reduction output has a 1-fixed point for " + render_parts(lambda));
        }
        prev = &step.state;
    }
}

}  // namespace

VerifyReport verify_bijections(int nmax) {
    Timer timer;
    VerifyReport report;
    report.suite = "bijections";
    report.parameters = {{"nmax", nmax}};

    for (int n = 1; n <= nmax; ++n) {
        std::vector<Partition> all = enumerate_partitions(n);
        std::vector<std::vector<int>> fstar_members, even_mex_images;
        EvenMexInverse inverse(n);

        for (const Partition& lambda : all) {
            if (member(lambda, {ClassTag::Fstar, std::nullopt})) fstar_members.push_back(lambda.parts());

            if (member(lambda, {ClassTag::Xe, std::nullopt})) {
                auto [phi, trace] = even_mex_to_fixed_point(lambda);
                even_mex_images.push_back(phi.parts());
                auto param = class_param(std::span<const int>(phi.parts()), ClassTag::Fstar);
                check(report, param && *param == beta(lambda) + 1,
                      "even-mex image not in F*(n,k+1): " + render_parts(lambda) + " -> " + render_parts(phi));
                check_trace(report, lambda, trace);
                check(report, inverse(phi) == lambda,
                      "tabulated inverse disagrees at " + render_parts(phi));
            }

            if (member(lambda, {ClassTag::Fstar, std::nullopt})) {
                Partition kappa = fstar_to_negcrank(lambda);
                int param = *class_param(std::span<const int>(lambda.parts()), ClassTag::Fstar);
                check(report, crank(kappa) < 0 && beta(kappa) == param - 1,
                      "F* -> M_<0 image wrong: " + render_parts(lambda) + " -> " + render_parts(kappa));
                check(report, negcrank_to_fixed(kappa) == lambda,
                      "F* -> M_<0 round trip fails at " + render_parts(lambda));
            }
            if (crank(lambda) < 0) {
                Partition phi = negcrank_to_fixed(lambda);
                auto param = class_param(std::span<const int>(phi.parts()), ClassTag::Fstar);
                check(report, param && *param == beta(lambda) + 1,
                      "M_<0 -> F* image wrong: " + render_parts(lambda) + " -> " + render_parts(phi));
                check(report, fstar_to_negcrank(phi) == lambda,
                      "M_<0 -> F* round trip fails at " + render_parts(lambda));

                if (n >= 2) {
                    Partition rho = neg_to_pos_crank(lambda);
                    check(report, crank(rho) > 0 && beta(rho) == beta(lambda) + 1,
                          "M_<0 -> M_>0 image wrong: " + render_parts(lambda) + " -> " + render_parts(rho));
                    check(report, pos_to_neg_crank(rho) == lambda,
                          "M_<0 -> M_>0 round trip fails at " + render_parts(lambda));
                }
            }
            if (crank(lambda) > 0) {
                Partition neg = pos_to_neg_crank(lambda);
                check(report, crank(neg) < 0 && beta(neg) == beta(lambda) - 1,
                      "M_>0 -> M_<0 image wrong: " + render_parts(lambda) + " -> " + render_parts(neg));
                check(report, neg_to_pos_crank(neg) == lambda,
                      "M_>0 -> M_<0 round trip fails at " + render_parts(lambda));
            }

            // the two lemmas behind the reverse map
            if (crank(lambda) < 0) {
                if (auto fp = fixed_point(lambda)) {
                    check(report, omega(lambda) >= *fp,
                          "fixed-point lemma fails at " + render_parts(lambda));
                } else {
                    check(report, omega(lambda) >= durfee(lambda) + 1,
                          "Durfee lemma fails at " + render_parts(lambda));
                }
            }
        }

        std::sort(even_mex_images.begin(), even_mex_images.end());
        std::sort(fstar_members.begin(), fstar_members.end());
        check(report, std::adjacent_find(even_mex_images.begin(), even_mex_images.end()) == even_mex_images.end(),
              "even-mex map not injective at n=" + std::to_string(n));
        check(report, even_mex_images == fstar_members,
              "even-mex image is not exactly F* at n=" + std::to_string(n));
    }

    // the composed crank map need not negate the crank: the stated witness
    {
        Partition witness({5, 1, 1, 1});
        Partition image = neg_to_pos_crank(witness);
        check(report, crank(witness) == -2 && image == Partition({4, 3, 1}) && crank(image) == 1,
              "non-negation witness (5,1,1,1) -> (4,3,1) does not hold");
        report.notes.push_back("witness: crank(5 1^3) = -2 maps to 4 3 1 with crank 1 (crank not negated)");
    }
    // complete crank +-1 lists for n=7
    {
        std::vector<std::vector<int>> minus, plus;
        for_each_partition(7, [&](std::span<const int> parts) {
            if (crank(parts) == -1) minus.emplace_back(parts.begin(), parts.end());
            if (crank(parts) == 1) plus.emplace_back(parts.begin(), parts.end());
        });
        std::vector<std::vector<int>> expect_minus{{5, 1, 1}, {3, 2, 1, 1}};
        std::vector<std::vector<int>> expect_plus{{4, 2, 1}, {3, 3, 1}};
        check(report, minus == expect_minus && plus == expect_plus,
              "crank +-1 lists at n=7 are not the stated ones");
        check(report,
              beta(std::span<const int>(minus[0])) == 1 && beta(std::span<const int>(minus[1])) == 2 &&
                  beta(std::span<const int>(plus[0])) == 2 && beta(std::span<const int>(plus[1])) == 2,
              "beta values of the n=7 crank +-1 lists are wrong");
        report.notes.push_back(
            "n=7 fixture: cranks -1 at {5 1^2, 3 2 1^2} (beta 1,2), +1 at {4 2 1, 3^2 1} (beta 2,2); "
            "no map can both shift beta and negate the crank");
    }

    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

VerifyReport verify_gf(const VerifyBudget& budget) {
    Timer timer;
    VerifyReport report;
    report.suite = "gf";
    report.parameters = {{"qmax", budget.qmax}, {"zmax", budget.zmax}};

    BivariateSeries e = e_series(budget.qmax, budget.zmax);
    BivariateSeries ze = e.z_shift();
    check(report, gf_even_mex_direct(budget.qmax, budget.zmax) == e, "even-mex product series != E(z,q)");
    check(report, gf_neg_crank_direct(budget.qmax, budget.zmax) == e, "negative-crank series != E(z,q)");
    check(report, gf_fixed_point_direct(budget.qmax, budget.zmax) == ze, "fixed-point series != z E(z,q)");
    check(report, gf_pos_crank_direct(budget.qmax, budget.zmax) == ze, "positive-crank series != z E(z,q)");

    for (ClassTag tag : {ClassTag::Xe, ClassTag::Fstar, ClassTag::MNeg, ClassTag::MPos}) {
        GfReport r = gf_vs_enumeration({tag, std::nullopt}, budget.qmax, budget.zmax);
        check(report, r.ok, "coefficients disagree with enumeration for " + class_tag_name(tag));
        for (const auto& m : r.mismatches)
            check(report, false,
                  class_tag_name(tag) + " mismatch at n=" + std::to_string(m.n) + " k=" + std::to_string(m.k));
        for (const auto& note : r.notes) report.notes.push_back(class_tag_name(tag) + ": " + note);
    }
    // the anomaly itself is pinned: z^1 q^1 coefficient of z E is 1
    check(report, ze.coeff(1, 1) == 1, "expected n=1 anomaly coefficient missing");

    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

VerifyReport verify_identities() {
    Timer timer;
    VerifyReport report;
    report.suite = "identities";
    report.parameters = {{"qmax", 30}, {"zmax", 10}, {"coeff_qmax", 60}, {"Nmax", 12}};

    check(report, aux_zero_identity_check(30, 10), "auxiliary zero identity fails at (30,10)");
    check(report, aux_zero_identity_check(1, 1), "auxiliary zero identity fails at (1,1)");
    check(report, dgoal_rewritten_check(30, 10), "rewritten positive-crank goal fails at (30,10)");
    check(report, dgoal_rewritten_check(2, 1), "rewritten positive-crank goal fails at (2,1)");
    for (int N = 1; N <= 8; ++N)
        check(report, coeff_zN_identity_check(N, 60), "z^N coefficient identity fails at N=" + std::to_string(N));
    for (int N = 1; N <= 12; ++N)
        for (int M = 0; M <= N - 1; ++M)
            check(report, lemma3_check(N, M),
                  "alternating q-binomial sum fails at N=" + std::to_string(N) + " M=" + std::to_string(M));
    for (int N = 1; N <= 12; ++N)
        check(report, qbt_check(N), "q-binomial-theorem step fails at N=" + std::to_string(N));

    // corrupted-coefficient self-tests: every comparator must notice a
    // single flipped coefficient
    {
        BivariateSeries residual = aux_zero_residual(30, 10);
        residual.add_term(1, 3, 2);
        check(report, !residual.is_zero(), "aux-zero detector missed a corrupted coefficient");

        auto [lhs, rhs] = dgoal_sides(30, 10);
        lhs.add_term(1, 4, 2);
        check(report, !(lhs == rhs), "rewritten-goal detector missed a corrupted coefficient");

        auto [row, expect] = coeff_zN_sides(3, 30);
        row[7] += 1;
        check(report, row != expect, "z^N detector missed a corrupted coefficient");

        auto [l3, r3] = lemma3_sides(5, 3);
        l3.add_term(1, 2);
        check(report, !(l3 == r3), "lemma detector missed a corrupted coefficient");

        auto sides = qbt_sides(4);
        sides.sum_side.add_term(1, -3);
        check(report, !(sides.sum_side == sides.pochhammer_side),
              "q-binomial-theorem detector missed a corrupted coefficient");
    }

    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

VerifyReport verify_crank_gf(int nmax) {
    Timer timer;
    VerifyReport report;
    report.suite = "crank-gf";
    report.parameters = {{"nmax", nmax}};

    TrivariateCrankSeries series = gf_crank_trivariate(nmax);

    if (nmax >= 1) {
        bool row1 = series.coeff(1, -1) == 1 && series.coeff(1, 0) == -1 && series.coeff(1, 1) == 1;
        for (int c = -nmax; c <= nmax; ++c)
            if (c < -1 || c > 1) row1 = row1 && series.coeff(1, c) == 0;
        check(report, row1, "q^1 row is not the convention value y^-1 - 1 + y");
        report.notes.push_back("n=1 row asserted as the convention value y^-1 - 1 + y (true crank of (1) is -1)");
    }

    for (int n = 2; n <= nmax; ++n) {
        std::map<int, long long> counts;
        long long total = 0, negative = 0;
        for_each_partition(n, [&](std::span<const int> parts) {
            int c = crank(parts);
            ++counts[c];
            ++total;
            if (c < 0) ++negative;
        });
        for (int c = -n; c <= n; ++c) {
            long long expected = counts.count(c) ? counts[c] : 0;
            check(report, series.coeff(n, c) == expected,
                  "crank coefficient wrong at q^" + std::to_string(n) + " y^" + std::to_string(c));
        }
        for (int c = -nmax; c <= nmax; ++c)
            if (c < -n || c > n)
                check(report, series.coeff(n, c) == 0,
                      "crank coefficient outside |c| <= n at q^" + std::to_string(n));
        check(report, series.row_sum(n) == total, "crank row sum != p(n) at n=" + std::to_string(n));
        check(report, series.row_sum_negative(n) == negative,
              "negative-crank part mismatch at n=" + std::to_string(n));
    }

    if (nmax >= 7) {
        check(report, series.coeff(7, -1) == 2 && series.coeff(7, 1) == 2,
              "q^7 y^{+-1} coefficients are not both 2");
    }

    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

VerifyReport verify_section4(int nmax) {
    Timer timer;
    VerifyReport report;
    report.suite = "section4";
    report.parameters = {{"nmax", nmax}};

    auto class_list = [](int n, auto pred) {
        std::vector<std::vector<int>> out;
        for_each_partition(n, [&](std::span<const int> parts) {
            if (pred(parts)) out.emplace_back(parts.begin(), parts.end());
        });
        return out;
    };
    auto beta_multiset = [](const std::vector<std::vector<int>>& sets) {
        std::vector<int> b;
        for (const auto& parts : sets) b.push_back(beta(std::span<const int>(parts)));
        std::sort(b.begin(), b.end());
        return b;
    };

    // first obstruction: X_o(5) vs G(5)
    auto xo5 = class_list(5, [](std::span<const int> p) { return mex(p) % 2 == 1; });
    auto g5 = class_list(5, [](std::span<const int> p) { return !fixed_point(p).has_value(); });
    check(report, xo5 == std::vector<std::vector<int>>({{5}, {3, 2}, {2, 2, 1}, {2, 1, 1, 1}}),
          "X_o(5) differs from the stated list");
    check(report, g5 == std::vector<std::vector<int>>({{5}, {4, 1}, {3, 1, 1}, {2, 1, 1, 1}}),
          "G(5) differs from the stated list");
    check(report, beta_multiset(xo5) == std::vector<int>({1, 1, 2, 2}), "X_o(5) beta values are not 1,2,2,1");
    check(report, beta_multiset(g5) == std::vector<int>({1, 1, 1, 1}), "G(5) beta values are not all 1");
    check(report, beta_multiset(xo5) != beta_multiset(g5),
          "beta multisets unexpectedly agree: a beta-preserving bijection would be possible");

    // second obstruction: M_<=0(5) vs M_>=0(5)
    auto mle5 = class_list(5, [](std::span<const int> p) { return crank(p) <= 0; });
    auto mge5 = class_list(5, [](std::span<const int> p) { return crank(p) >= 0; });
    check(report, mle5 == std::vector<std::vector<int>>({{4, 1}, {3, 1, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}}),
          "M_<=0(5) differs from the stated list");
    check(report, mge5 == std::vector<std::vector<int>>({{5}, {4, 1}, {3, 2}, {2, 2, 1}}),
          "M_>=0(5) differs from the stated list");
    check(report, beta_multiset(mle5) == std::vector<int>({0, 1, 1, 1}), "M_<=0(5) beta values are not 1,1,1,0");
    check(report, beta_multiset(mge5) == std::vector<int>({1, 1, 2, 2}), "M_>=0(5) beta values are not 1,1,2,2");

    // n=26: shifted counts differ for some k even though m_0(26) is even
    {
        const int n = 26;
        std::map<int, long long> mle, mge;
        long long zero = 0;
        for_each_partition(n, [&](std::span<const int> parts) {
            int c = crank(parts);
            int b = beta(parts);
            if (c <= 0) ++mle[b];
            if (c >= 0) ++mge[b];
            if (c == 0) ++zero;
        });
        int witness = -1;
        for (int k = 0; k <= n && witness < 0; ++k)
            if (mle[k] != mge[k + 1]) witness = k;
        check(report, witness >= 0, "no witness k with m_<=0(26,k) != m_>=0(26,k+1)");
        check(report, zero % 2 == 0, "m_0(26) is odd");
        if (witness >= 0)
            report.notes.push_back("n=26 witness: k=" + std::to_string(witness) + " has m_<=0(26,k)=" +
                                   std::to_string(mle[witness]) + " != m_>=0(26,k+1)=" + std::to_string(mge[witness + 1]) +
                                   "; m_0(26)=" + std::to_string(zero) + " is even");
    }

    // g(n,k) = m_<=0(n,k) away from the (n) <-> 1^n pair: equality for every
    // k >= 2, and at k <= 1 exactly the one-element shift caused by (n)
    // (no fixed point, beta 1) pairing with 1^n (crank -n, beta 0)
    for (int n = 2; n <= nmax; ++n) {
        std::map<int, long long> g, mle;
        for_each_partition(n, [&](std::span<const int> parts) {
            int b = beta(parts);
            if (!fixed_point(parts)) ++g[b];
            if (crank(parts) <= 0) ++mle[b];
        });
        check(report, g[0] == 0 && mle[0] == 1 && g[1] == mle[1] + 1,
              "the k<=1 rows of g vs m_<=0 deviate from the special pair at n=" + std::to_string(n));
        for (int k = 2; k <= n + 1; ++k)
            check(report, g[k] == mle[k],
                  "g(n,k) != m_<=0(n,k) at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    report.notes.push_back(
        "g(n,k) = m_<=0(n,k) verified for all k >= 2; the k <= 1 rows differ by exactly the "
        "(n) <-> 1^n convention pair (g(n,0)=0 vs m_<=0(n,0)=1 and g(n,1) = m_<=0(n,1)+1), "
        "the same special row the F* convention absorbs in the refined equalities");

    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

std::vector<VerifyReport> verify_all(const VerifyBudget& budget) {
    std::vector<VerifyReport> reports;
    reports.push_back(verify_theorem1(budget.nmax));
    reports.push_back(verify_bijections(budget.nmax));
    reports.push_back(verify_gf(budget));
    reports.push_back(verify_identities());
    reports.push_back(verify_crank_gf(budget.nmax));
    reports.push_back(verify_section4(budget.nmax));
    return reports;
}

}  // namespace crankmex

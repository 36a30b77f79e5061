// acceptance.cpp -- end-to-end acceptance suite. Each criterion prints one
// PASS/FAIL line; the exit status is nonzero when anything failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "randfib/cli.hpp"
#include "randfib/entropy.hpp"
#include "randfib/verify.hpp"

using namespace randfib;

namespace {

struct Checker {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

// ---------------------------------------------------------------------------

void criterion_lengths(Checker& c) {
    const auto start = std::chrono::steady_clock::now();
    for (std::uint32_t m = 1; m <= 3; ++m) {
        CountingContext counting(m);
        for (std::uint32_t n = 1; n <= 90; ++n) {
            if (counting.length_l_binet_exact(n) != counting.length_l(n)) {
                c.expect(false, "exact Binet mismatch at m=" + std::to_string(m) +
                                    ", n=" + std::to_string(n));
                return;
            }
        }
        const std::uint32_t safe = counting.binet_float_exact_max();
        c.expect(safe >= 20, "float Binet range too small for m=" + std::to_string(m));
        for (std::uint32_t n = 1; n <= safe && n <= 90; ++n) {
            const auto rounded =
                BigCount(static_cast<std::uint64_t>(std::llround(counting.length_l_binet(n))));
            if (rounded != counting.length_l(n)) {
                c.expect(false, "float Binet round-trip failed at m=" +
                                    std::to_string(m) + ", n=" + std::to_string(n));
                break;
            }
        }
    }
    const double elapsed = seconds_since(start);
    c.expect(elapsed < 1.0, "length checks took " + std::to_string(elapsed) + "s");
}

void criterion_enumeration(Checker& c) {
    const struct {
        std::uint32_t m;
        std::uint32_t nmax;
        std::vector<std::uint64_t> counts;  // n = 3..nmax
    } cases[] = {
        {1, 9, {2, 3, 8, 30, 288, 10080, 3317760}},
        {2, 5, {3, 15, 945}},
        {3, 4, {4, 112}},
    };
    for (const auto& cs : cases) {
        GenerationTable table(cs.m);
        for (std::uint32_t n = 3; n <= cs.nmax; ++n) {
            const std::uint64_t enumerated = table.generation(n).size();
            const std::uint64_t frozen = cs.counts[n - 3];
            const BigCount closed = table.counting().count_A_closed(n);
            const BigCount rec = table.counting().count_A_rec(n);
            std::ostringstream at;
            at << " at m=" << cs.m << ", n=" << n;
            c.expect(enumerated == frozen,
                     "enumerated count " + std::to_string(enumerated) + " != frozen " +
                         std::to_string(frozen) + at.str());
            c.expect(closed == BigCount(enumerated), "closed form mismatch" + at.str());
            c.expect(rec == closed, "recursion/closed form mismatch" + at.str());
        }
    }
}

void run_points(Checker& c, CheckKind kind, GenerationTable& table,
                FactorTable& factors, const std::vector<GridPoint>& points,
                bool allow_skip = true) {
    for (const GridPoint& pt : points) {
        PointOutcome out;
        try {
            switch (kind) {
                case CheckKind::overlap: out = verify_overlap(table, pt.n, pt.k); break;
                case CheckKind::union_product:
                    out = verify_union_product(table, pt.n, pt.k);
                    break;
                case CheckKind::prefix_stability:
                    out = verify_prefix_stability(table, pt.n, pt.k);
                    break;
                case CheckKind::superset: out = verify_superset(table, pt.n); break;
                case CheckKind::split_bound: out = verify_split_bound(table, pt.n); break;
                case CheckKind::factor_bound:
                    out = verify_factor_bound(factors, pt.n);
                    break;
                case CheckKind::stabilization:
                    out = verify_stabilization(factors, pt.n, pt.k);
                    break;
                default: break;
            }
        } catch (const BudgetExceeded& e) {
            std::ostringstream msg;
            msg << to_string(kind) << " (m=" << pt.m << ", n=" << pt.n
                << ", k=" << pt.k << ") over budget: " << e.what();
            c.expect(allow_skip, msg.str());
            continue;
        }
        if (out.status != PointStatus::pass) {
            std::ostringstream msg;
            msg << to_string(kind) << " (m=" << pt.m << ", n=" << pt.n << ", k=" << pt.k
                << "): " << to_string(out.status) << " -- " << out.detail;
            c.expect(false, msg.str());
        }
    }
}

void criterion_union_product(Checker& c) {
    for (std::uint32_t m = 1; m <= 3; ++m) {
        GenerationTable table(m);
        FactorTable factors(table);
        const std::uint32_t nmax = m == 1 ? 9 : m == 2 ? 5 : 4;
        std::vector<GridPoint> points;
        for (std::uint32_t n = 2; n <= nmax; ++n)
            for (std::uint32_t k = 1; k <= 3; ++k) points.push_back({m, n, k});
        run_points(c, CheckKind::union_product, table, factors, points);
        if (m == 1) {
            const PointOutcome anchored = verify_union_product(table, 2, 1);
            c.expect(anchored.status == PointStatus::pass &&
                         anchored.detail.find("agree on 2") != std::string::npos,
                     "anchored point (m=1,n=2,k=1) must agree on 2");
        }
    }
}

void criterion_overlap(Checker& c) {
    for (std::uint32_t m = 1; m <= 3; ++m) {
        GenerationTable table(m);
        FactorTable factors(table);
        const std::uint32_t nmax = m == 1 ? 9 : m == 2 ? 5 : 4;
        std::vector<GridPoint> points;
        for (std::uint32_t n = 2; n <= nmax; ++n)
            for (std::uint32_t k = 1; k <= 3; ++k) points.push_back({m, n, k});
        run_points(c, CheckKind::overlap, table, factors, points);
    }
    GenerationTable t1(1);
    const WordSet u = enumerate_union_product(t1, 2, 1);
    const WordSet lhs = set_intersection(set_product(t1.generation(2), u),
                                         set_product(u, t1.generation(2)));
    c.expect(lhs == WordSet::from_strings({"101"}),
             "hand-checkable overlap (m=1,n=2,k=1) must equal {101}");
}

void criterion_prefix_stability(Checker& c) {
    GenerationTable t1(1);
    FactorTable f1(t1);
    std::vector<GridPoint> points;
    for (std::uint32_t n = 3; n <= 7; ++n)
        for (std::uint32_t k = 1; k <= 3; ++k) points.push_back({1, n, k});
    run_points(c, CheckKind::prefix_stability, t1, f1, points, /*allow_skip=*/false);

    GenerationTable t2(2);
    FactorTable f2(t2);
    points.clear();
    for (std::uint32_t n = 3; n <= 4; ++n)
        for (std::uint32_t k = 1; k <= 2; ++k) points.push_back({2, n, k});
    run_points(c, CheckKind::prefix_stability, t2, f2, points, /*allow_skip=*/false);
}

void criterion_superset(Checker& c) {
    for (std::uint32_t m = 1; m <= 2; ++m) {
        GenerationTable table(m);
        FactorTable factors(table);
        run_points(c, CheckKind::superset, table, factors, {{m, 4, 0}, {m, 5, 0}},
                   /*allow_skip=*/false);
    }
}

void criterion_stabilization(Checker& c) {
    GenerationTable t1(1);
    FactorTable f1(t1);
    std::vector<GridPoint> points;
    for (std::uint32_t n = 4; n <= 7; ++n)
        for (std::uint32_t k = 1; k <= 2; ++k) points.push_back({1, n, k});
    run_points(c, CheckKind::stabilization, t1, f1, points, /*allow_skip=*/false);

    GenerationTable t2(2);
    FactorTable f2(t2);
    run_points(c, CheckKind::stabilization, t2, f2, {{2, 3, 1}}, /*allow_skip=*/false);

    // the documented exception reproduces exactly
    const StabilizationResult exc = f1.stabilization_check(3, 1);
    c.expect(exc.relation == StabilizationResult::Relation::left_proper_subset,
             "(m=1,n=3,k=1) must be the documented proper subset");
    c.expect(!exc.witnesses.empty() && exc.witnesses.front().str() == "00",
             "(m=1,n=3,k=1) witness must be 00");

    c.expect(f1.factor_set_any(2) == WordSet::from_strings({"00", "01", "10", "11"}),
             "factor_set_any(m=1, t=2) must be all four length-2 words");
}

void criterion_bounds(Checker& c) {
    const std::size_t f_sizes_m1[] = {4, 7, 22, 108, 1356};  // n = 3..7
    for (std::uint32_t m = 1; m <= 3; ++m) {
        GenerationTable table(m);
        FactorTable factors(table);
        const std::uint32_t nmax = m == 1 ? 9 : m == 2 ? 5 : 4;
        std::vector<GridPoint> split_points, factor_points;
        for (std::uint32_t n = 3; n <= nmax; ++n) {
            split_points.push_back({m, n, 0});
            if (m != 1 || n <= 7) factor_points.push_back({m, n, 0});
        }
        run_points(c, CheckKind::split_bound, table, factors, split_points,
                   /*allow_skip=*/false);
        run_points(c, CheckKind::factor_bound, table, factors, factor_points);
        if (m == 1)
            for (std::uint32_t n = 3; n <= 7; ++n)
                c.expect(factors.count_F(n) == f_sizes_m1[n - 3],
                         "|F_" + std::to_string(n) + "| mismatch");
    }
    // the worked instances: 4 <= 4^3*2*2 and 7 <= 4^4*3*3
    c.expect(BigCount(4) <= BigCount::pow(4, 3) * BigCount(2) * BigCount(2),
             "explicit bound instance n=3");
    c.expect(BigCount(7) <= BigCount::pow(4, 4) * BigCount(3) * BigCount(3),
             "explicit bound instance n=4");
}

void criterion_entropy(Checker& c) {
    // sandwich wherever F_n is enumerable
    for (std::uint32_t m = 1; m <= 2; ++m) {
        GenerationTable table(m);
        FactorTable factors(table);
        CountingContext counting(m);
        for (std::uint32_t n = 3; n <= (m == 1 ? 7u : 4u); ++n) {
            const double diff = h_F(factors, n) - h_A(counting, n);
            c.expect(diff >= 0.0 && diff <= gap_bound(counting, n),
                     "sandwich violated at m=" + std::to_string(m) +
                         ", n=" + std::to_string(n));
        }
    }
    CountingContext c1(1);
    c.expect(std::fabs(h_A(c1, 9) - std::log(3317760.0) / 34.0) < 1e-12,
             "h_A(9) must equal ln(3317760)/34");
    c.expect(std::fabs(h_A(c1, 9) - 0.44162) < 1e-5, "h_A(9) anchor 0.44162");

    const EntropyReport report = entropy_estimate(1, 1e-9);
    c.expect(report.converged && report.n_reached <= 200,
             "estimate must converge by n = 200");
    if (report.rows.size() >= 2) {
        const double d = std::fabs(report.rows.back().h_A -
                                   report.rows[report.rows.size() - 2].h_A);
        c.expect(d < 1e-9, "final successive difference must be under tol");
    }

    // p-independence, end to end: byte-identical CLI reports across p
    auto run_entropy = [](const std::string& p) {
        std::ostringstream out, err;
        run_cli({"entropy", "--m", "1", "--tol", "1e-9", "--format", "json", "--p", p},
                out, err);
        return out.str();
    };
    const std::string a = run_entropy("1,0");
    const std::string b = run_entropy("0.5,0.5");
    const std::string d = run_entropy("0.25,0.75");
    c.expect(!a.empty() && a == b && b == d,
             "entropy reports must be byte-identical across p");
}

void criterion_sampler(Checker& c) {
    GenerationTable table(1);
    const PointOutcome uniform =
        verify_sampler(table, Params::uniform(1), 6, 10000, 20240807, 0.001);
    c.expect(uniform.status == PointStatus::pass,
             "10^4 uniform samples at (m=1, n=6): " + uniform.detail);
    c.expect(table.generation(6).size() == 30, "|A_6| must be 30");
    c.expect(uniform.detail.find("not rejected") != std::string::npos,
             "chi-square must run and not reject: " + uniform.detail);

    const PointOutcome det =
        verify_sampler(table, Params(1, {1.0, 0.0}), 5, 100, 1, 0.001);
    c.expect(det.status == PointStatus::pass, "deterministic sampler check");
    c.expect(sample_chain(Params(1, {1.0, 0.0}), 5, 77).word.str() == "01101",
             "r_5 must be 01101 for p_0 = 1");
    c.expect(sample_chain(Params(1, {0.0, 1.0}), 5, 77).word.str() == "10110",
             "r_5 must be 10110 for p_1 = 1");
}

void criterion_fekete(Checker& c) {
    GenerationTable table(1);
    FactorTable factors(table);
    const std::uint32_t lmax = table.counting().length_l_u32(7);  // 13
    std::vector<std::size_t> counts{1};  // |F(A,0)| = 1
    for (std::uint32_t t = 1; t <= lmax; ++t)
        counts.push_back(factors.factor_set_any(t).size());
    for (std::uint32_t a = 1; a + 1 <= lmax; ++a)
        for (std::uint32_t b = 1; a + b <= lmax; ++b)
            c.expect(counts[a + b] <= counts[a] * counts[b],
                     "sub-multiplicativity fails at a=" + std::to_string(a) +
                         ", b=" + std::to_string(b));
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Checker&)> fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "length sequences (recursion, exact and float Binet)", criterion_lengths},
        {2, "enumeration vs closed form vs recursion", criterion_enumeration},
        {3, "union-product formula on the default grid", criterion_union_product},
        {4, "overlap identity", criterion_overlap},
        {5, "prefix stability with suffix mirror", criterion_prefix_stability},
        {6, "superset construction", criterion_superset},
        {7, "factor stabilization incl. the documented exception", criterion_stabilization},
        {8, "split and factor bounds", criterion_bounds},
        {9, "entropy sandwich, anchor and estimate", criterion_entropy},
        {10, "sampler membership and distribution", criterion_sampler},
        {11, "Fekete sub-multiplicativity", criterion_fekete},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        Checker checker;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.fn(checker);
        } catch (const std::exception& e) {
            checker.expect(false, std::string("unhandled exception: ") + e.what());
        }
        std::printf("[%s] criterion %2d: %s (%.1fs)\n", checker.ok ? "PASS" : "FAIL",
                    criterion.id, criterion.name, seconds_since(start));
        for (const std::string& note : checker.notes)
            std::printf("         - %s\n", note.c_str());
        if (!checker.ok) ++failures;
        std::fflush(stdout);
    }
    if (failures != 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}

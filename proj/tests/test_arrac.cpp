#include "helpers.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("worked example: one incomplete run verifies arc-consistency")
{
    auto m = worked_example();
    auto d = m.domains();
    ArracOptions o;
    o.trace = true;
    auto r = arrac_run(m, first_array_eq(m), d, o);
    CHECK_FALSE(r.changed);
    CHECK_FALSE(r.failed);
    CHECK(d == m.domains());
    CHECK(r.trace.t_computations ==
          std::vector<IndexTuple>{tup(m, {"1", "1"}), tup(m, {"1", "2"}), tup(m, {"1", "3"}), tup(m, {"2", "1"})});
    CHECK(r.stats.t_computations == 4);
    CHECK(r.stats.cell_domain_reads == 4);
    CHECK(r.stats.skipped_indices == 2);
    CHECK(r.trace.second_loop_reads.empty());

    auto f = arrac_fixpoint(m);
    CHECK(f.stable);
    CHECK(f.stats.runs == 1);
    CHECK(f.log.empty());
}

TEST_CASE("amended first-loop exit keeps a supported result value")
{
    auto m = amendment_witness();
    auto c = first_array_eq(m);
    ArracOptions o;
    o.trace = true;
    o.order = std::vector<IndexTuple>{tup(m, {"1", "1"}), tup(m, {"2", "2"})};

    auto d = m.domains();
    auto r = arrac_run(m, c, d, o);
    CHECK(r.trace.t_computations == std::vector<IndexTuple>{tup(m, {"1", "1"}), tup(m, {"2", "2"})});
    CHECK(r.trace.transferred == std::vector<IndexTuple>{tup(m, {"1", "2"}), tup(m, {"2", "1"})});
    CHECK(r.trace.second_loop_reads == std::vector<IndexTuple>{tup(m, {"1", "2"})});
    CHECK(d[var(m, "x")] == dom(m, {"A", "B"}));
    CHECK_FALSE(r.changed);

    Reference ref{m};
    CHECK(ref.ac_closure()[var(m, "x")] == dom(m, {"A", "B"}));
    CHECK(ac_closure_oracle(m)[var(m, "x")] == dom(m, {"A", "B"}));
}

TEST_CASE("literal first-loop exit drops the pending tuples and over-prunes")
{
    auto m = amendment_witness();
    ArracOptions o;
    o.trace = true;
    o.transfer_unprocessed = false;
    o.order = std::vector<IndexTuple>{tup(m, {"1", "1"}), tup(m, {"2", "2"})};
    auto d = m.domains();
    auto r = arrac_run(m, first_array_eq(m), d, o);
    CHECK(r.trace.dropped == std::vector<IndexTuple>{tup(m, {"1", "2"}), tup(m, {"2", "1"})});
    CHECK(r.trace.second_loop_reads.empty());
    CHECK(d[var(m, "x")] == dom(m, {"A"}));
    CHECK(r.changed);
}

TEST_CASE("no support at all empties index and result")
{
    auto m = from_text("array a[1..2] = [A, B];\nvar x in {C, A};\nvar y in 1..2;\nconstraint x = a[y];\n");
    auto d = m.domains();
    d[var(m, "x")] = dom(m, {"C"});
    auto r = arrac_run(m, first_array_eq(m), d);
    CHECK(r.failed);
    CHECK(d[var(m, "x")].empty());
    CHECK(d[var(m, "y")].empty());
}

TEST_CASE("fixpoint on the listings")
{
    auto cp = load("cell_pruning.model");
    auto r = arrac_fixpoint(cp);
    CHECK(r.domains[var(cp, "a[j]")] == dom(cp, {"p", "r"}));
    CHECK(r.domains == rsarr_closure(cp).domains);
    CHECK(supporting_cells(cp, first_array_eq(cp), r.domains) == std::set<IndexTuple>{tup(cp, {"j"})});

    auto ip = load("index_pruning.model");
    auto r2 = arrac_fixpoint(ip);
    CHECK(r2.domains[var(ip, "x")] == dom(ip, {"p", "r"}));
    CHECK(r2.domains[var(ip, "y")] == dom(ip, {"l"}));
}

TEST_CASE("Rara prime inside the fixpoint")
{
    auto cp = load("cell_pruning.model");
    ArracFixpointOptions o;
    o.use_rara_prime = true;
    auto r = arrac_fixpoint(cp, o);
    CHECK(r.domains == rsarr_closure(cp).domains);
}

TEST_CASE("supporting cells")
{
    auto m = worked_example();
    CHECK(supporting_cells(m, first_array_eq(m), m.domains()) ==
          std::set<IndexTuple>{tup(m, {"1", "2"}), tup(m, {"1", "3"}), tup(m, {"2", "1"})});

    auto d = m.domains();
    d[var(m, "y1")] = dom(m, {"2"});
    d[var(m, "y2")] = dom(m, {"1"});
    d[var(m, "x")] = dom(m, {"D"});
    CHECK(supporting_cells(m, first_array_eq(m), d) == std::set<IndexTuple>{tup(m, {"2", "1"})});

    auto cp = load("cell_pruning.model");
    auto nd = cp.domains();
    nd[var(cp, "y")] = dom(cp, {"j"});
    nd[var(cp, "x")] = dom(cp, {"p", "r"});
    try {
        supporting_cells(cp, first_array_eq(cp), nd);
        FAIL("expected NotArcConsistent");
    } catch (const ModelError& e) {
        CHECK(e.kind() == ErrorKind::not_arc_consistent);
    }
}

TEST_CASE("reads and T-computations stay within the index product")
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 300; ++i) {
        auto m = random_array_model(rng);
        auto c = first_array_eq(m);
        std::size_t product = 1;
        for (auto y : c.index)
            product *= m.domain(y).size();
        auto d = m.domains();
        ArracOptions o;
        o.trace = true;
        auto r = arrac_run(m, c, d, o);
        CHECK(r.stats.t_computations <= product);
        CHECK(r.stats.cell_domain_reads <= product);
        std::vector<IndexTuple> reads = r.trace.t_computations;
        reads.insert(reads.end(), r.trace.second_loop_reads.begin(), r.trace.second_loop_reads.end());
        CHECK(reads.size() == r.stats.cell_domain_reads);
        std::sort(reads.begin(), reads.end());
        CHECK(std::adjacent_find(reads.begin(), reads.end()) == reads.end());
        for (VarId v = 0; v < d.size(); ++v)
            CHECK(d[v].is_subset_of(m.domain(v)));
    }
}

TEST_CASE("first-loop T-computations on the latin family grow as 2d - 1")
{
    for (std::size_t n : {2u, 4u, 8u, 16u}) {
        auto m = latin_square_model(n);
        auto d = m.domains();
        auto r = arrac_run(m, first_array_eq(m), d);
        CHECK_FALSE(r.changed);
        CHECK(r.stats.t_computations == 2 * n - 1);
    }
}

TEST_CASE("early restart reaches the same fixpoint")
{
    std::mt19937_64 rng(43);
    for (int i = 0; i < 300; ++i) {
        RandomModelOptions ro;
        ro.extra_constraints = i % 3 == 0;
        auto m = random_array_model(rng, ro);
        ArracFixpointOptions o;
        o.run.early_restart = true;
        auto a = arrac_fixpoint(m, o);
        auto b = arrac_fixpoint(m);
        CHECK(a.failed == b.failed);
        if (!a.failed)
            CHECK(a.domains == b.domains);
    }
}

TEST_CASE("arrac fixpoint equals the rule closure and the reference closure")
{
    std::mt19937_64 rng(47);
    for (int i = 0; i < 300; ++i) {
        RandomModelOptions ro;
        ro.extra_constraints = i % 2;
        auto m = random_array_model(rng, ro);
        auto a = arrac_fixpoint(m);
        auto b = rsarr_closure(m);
        auto ref = Reference{m}.ac_closure();
        bool ref_failed = Reference::has_empty(ref);
        CHECK(a.failed == ref_failed);
        CHECK(b.failed == ref_failed);
        if (!ref_failed) {
            CHECK(a.domains == ref);
            CHECK(b.domains == ref);
        }
    }
}

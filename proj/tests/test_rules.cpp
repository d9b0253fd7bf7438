#include "helpers.hpp"

#include <doctest.h>

using namespace testing;

namespace {

std::vector<ArrayEq> array_eqs(const Model& m)
{
    std::vector<ArrayEq> out;
    for (const auto& c : m.constraints())
        if (auto* a = std::get_if<ArrayEq>(&c))
            out.push_back(*a);
    return out;
}

Model one_dim(const char* x, const char* y, const char* cells, int n)
{
    return from_text(std::string("array a[1..") + std::to_string(n) + "] = [" + cells +
                     "];\nvar x in {" + x + "};\nvar y in {" + y + "};\nconstraint x = a[y];\n");
}

} // namespace

TEST_CASE("rule names")
{
    CHECK(std::string(to_string(RuleTag::rarx)) == "Rarx");
    CHECK(std::string(to_string(RuleTag::rara_prime)) == "RaraPrime");
}

TEST_CASE("Rarx keeps only values some addressable cell allows")
{
    auto m = load("index_pruning.model");
    auto d = m.domains();
    d[var(m, "v")] = dom(m, {"k", "m"});
    auto c = array_eqs(m)[0];
    CHECK(rule_rarx(m, c, d) == dom(m, {"p", "r"}));

    auto w = worked_example();
    CHECK(rule_rarx(w, first_array_eq(w), w.domains()) == dom(w, {"B", "C", "D"}));

    auto f = one_dim("A", "1", "B", 1);
    CHECK(rule_rarx(f, first_array_eq(f), f.domains()).empty());
}

TEST_CASE("Rary removes index values without a compatible cell")
{
    auto m = load("index_pruning.model");
    auto c = array_eqs(m)[1];
    CHECK(rule_rary(m, c, m.domains(), 1) == dom(m, {"l"}));
    CHECK(rule_rary(m, c, m.domains(), 0) == dom(m, {"i", "j"}));

    auto w = worked_example();
    auto all = rule_rary_all(w, first_array_eq(w), w.domains());
    CHECK(all[0] == dom(w, {"1", "2"}));
    CHECK(all[1] == dom(w, {"1", "2", "3"}));

    auto s = one_dim("A", "1, 2", "A, B", 2);
    CHECK(rule_rary(s, first_array_eq(s), s.domains(), 0) == dom(s, {"1"}));
}

TEST_CASE("Rara narrows the selected cell once the index is fixed")
{
    auto m = load("cell_pruning.model");
    auto d = m.domains();
    d[var(m, "y")] = dom(m, {"j"});
    d[var(m, "x")] = dom(m, {"p", "r"});
    auto c = first_array_eq(m);
    auto u = rule_rara(m, c, d);
    REQUIRE(u);
    CHECK(u->cell == var(m, "a[j]"));
    CHECK(u->domain == dom(m, {"p", "r"}));

    auto w = worked_example();
    CHECK_FALSE(rule_rara(w, first_array_eq(w), w.domains()));

    auto f = from_text("array a[1..2, 1..2] = [[A, B], [C, D]];\nvar x in {A};\nvar y1 in {1};\nvar y2 in {2};\n"
                       "constraint x = a[y1, y2];\n");
    auto e = rule_rara(f, first_array_eq(f), f.domains());
    REQUIRE(e);
    CHECK(e->domain.empty());
}

TEST_CASE("Rara prime rewrites to a plain equality")
{
    auto m = load("cell_pruning.model");
    auto d = m.domains();
    d[var(m, "y")] = dom(m, {"j"});
    auto eq = rule_rara_prime(m, first_array_eq(m), d);
    CHECK(eq.x == var(m, "x"));
    CHECK(eq.y == var(m, "a[j]"));

    auto w = worked_example();
    try {
        rule_rara_prime(w, first_array_eq(w), w.domains());
        FAIL("expected NotApplicable");
    } catch (const ModelError& e) {
        CHECK(e.kind() == ErrorKind::not_applicable);
    }

    ClosureOptions o;
    o.rules.rara_prime = true;
    auto r = rsarr_closure(m, o);
    CHECK(r.domains[var(m, "a[j]")] == dom(m, {"p", "r"}));
    CHECK(r.domains[var(m, "x")] == dom(m, {"p", "r"}));
    bool rewrote = false;
    for (const auto& a : r.log)
        rewrote |= a.rule == RuleTag::rara_prime && a.rewrite.has_value();
    CHECK(rewrote);
}

TEST_CASE("Eq and Neq")
{
    Model m;
    auto& vt = m.values();
    auto p = vt.intern("p"), q = vt.intern("q"), r = vt.intern("r");
    auto x = m.add_variable("x", Domain{p, r});
    auto y = m.add_variable("y", Domain{p, q, r});
    auto s = m.add_variable("s", Domain{q});
    auto t = m.add_variable("t", Domain{q});

    auto [dx, dy] = rule_eq(VarEq{x, y}, m.domains());
    CHECK(dx == Domain{p, r});
    CHECK(dy == Domain{p, r});
    auto [ds, dt] = rule_eq(VarEq{s, t}, m.domains());
    CHECK(ds == Domain{q});
    CHECK(dt == Domain{q});

    auto [ny, ns] = rule_neq(VarNeq{y, s}, m.domains());
    CHECK(ny == Domain{p, r});
    CHECK(ns == Domain{q});
    auto [nx, ny2] = rule_neq(VarNeq{x, y}, m.domains());
    CHECK(nx == Domain{p, r});
    CHECK(ny2 == Domain{p, q, r});
}

TEST_CASE("closure on the listings")
{
    auto m = load("index_pruning.model");
    auto r = rsarr_closure(m);
    CHECK(r.stable);
    CHECK_FALSE(r.failed);
    CHECK(r.domains[var(m, "x")] == dom(m, {"p", "r"}));
    CHECK(r.domains[var(m, "y")] == dom(m, {"l"}));

    auto f = load("cell_pruning.model");
    auto rf = rsarr_closure(f);
    CHECK(rf.domains[var(f, "a[j]")] == dom(f, {"p", "r"}));
}

TEST_CASE("xor with a repeated index is stable but unsatisfiable")
{
    auto m = load("xor.model", true);
    auto r = rsarr_closure(m);
    CHECK(r.stable);
    CHECK_FALSE(r.failed);
    CHECK(r.domains[var(m, "y")] == dom(m, {"0", "1"}));
    CHECK(enumerate_solutions(m).empty());
}

TEST_CASE("contradictory equality fails")
{
    auto m = load("contradiction.model");
    auto r = rsarr_closure(m);
    CHECK(r.failed);
    CHECK_FALSE(r.stable);
}

TEST_CASE("every logged application removed something")
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        RandomModelOptions ro;
        ro.extra_constraints = i % 2;
        auto m = random_array_model(rng, ro);
        auto r = rsarr_closure(m);
        for (const auto& a : r.log)
            if (!a.rewrite)
                CHECK_FALSE(a.removed.empty());
        CHECK(r.stats.rule_applications == r.log.size());
    }
}

TEST_CASE("closure does not depend on rule order")
{
    std::mt19937_64 rng(29);
    for (int i = 0; i < 200; ++i) {
        RandomModelOptions ro;
        ro.extra_constraints = i % 2;
        auto m = random_array_model(rng, ro);
        auto base = rsarr_closure(m);
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            ClosureOptions o;
            o.shuffle_seed = seed;
            auto r = rsarr_closure(m, o);
            CHECK(r.failed == base.failed);
            if (!base.failed)
                CHECK(r.domains == base.domains);
        }
    }
}

TEST_CASE("Rara prime with Eq matches Rara with Rarx on fixed indices")
{
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        auto m = random_array_model(rng);
        auto c = first_array_eq(m);
        for (auto y : c.index) {
            auto values = m.domain(y).values();
            m.set_domain(y, Domain{values[rng() % values.size()]});
        }
        ClosureOptions prime;
        prime.rules.rara_prime = true;
        auto a = rsarr_closure(m, prime);
        auto b = rsarr_closure(m);
        CHECK(a.failed == b.failed);
        if (!a.failed)
            CHECK(a.domains == b.domains);
    }
}

TEST_CASE("rules never remove a supported value")
{
    std::mt19937_64 rng(37);
    for (int i = 0; i < 200; ++i) {
        auto m = random_array_model(rng);
        Reference ref{m};
        auto c = m.constraints()[0];
        auto support = ref.supports(c, m.domains());
        auto ae = std::get<ArrayEq>(c);
        CHECK(support[ae.x].is_subset_of(rule_rarx(m, ae, m.domains())));
        auto ys = rule_rary_all(m, ae, m.domains());
        for (std::size_t k = 0; k < ae.index.size(); ++k)
            CHECK(support[ae.index[k]].is_subset_of(ys[k]));
        if (auto u = rule_rara(m, ae, m.domains()))
            CHECK(support[u->cell].is_subset_of(u->domain));
    }
}

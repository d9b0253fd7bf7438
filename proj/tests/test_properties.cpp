#include "helpers.hpp"

#include <doctest.h>

using namespace testing;

namespace {

Model random_instance(std::mt19937_64& rng, int i)
{
    RandomModelOptions ro;
    ro.extra_constraints = i % 3 == 2;
    return random_array_model(rng, ro);
}

// Replays a log from the start domains; every removed value must be
// unsupported by its constraint at the moment of removal.
void check_log_sound(const Model& m, const ClosureResult& r)
{
    Reference ref{m};
    auto d = m.domains();
    for (const auto& a : r.log) {
        if (a.rewrite || a.constraint >= m.constraints().size())
            continue;
        auto sup = ref.supports(m.constraints()[a.constraint], d);
        CHECK_FALSE(a.removed.intersects(sup[a.var]));
        CHECK(a.removed.is_subset_of(d[a.var]));
        d[a.var] -= a.removed;
    }
    if (!r.failed)
        CHECK(d == r.domains);
}

} // namespace

TEST_CASE("every removal in either engine is unsupported at that moment")
{
    std::mt19937_64 rng(101);
    for (int i = 0; i < 400; ++i) {
        auto m = random_instance(rng, i);
        check_log_sound(m, rsarr_closure(m));
        check_log_sound(m, arrac_fixpoint(m));
    }
}

TEST_CASE("closed implies every value supported")
{
    std::mt19937_64 rng(103);
    std::size_t checked = 0;
    for (int i = 0; i < 400; ++i) {
        auto m = random_instance(rng, i);
        for (const auto& r : {rsarr_closure(m), arrac_fixpoint(m)}) {
            if (r.failed)
                continue;
            ++checked;
            for (const auto& c : m.constraints())
                for (auto v : scope(m, c))
                    for (auto value : r.domains[v].values()) {
                        auto s = find_support(m, c, r.domains, v, value);
                        REQUIRE(s);
                        CHECK(satisfied(m, c, *s));
                    }
        }
    }
    CHECK(checked > 400);
}

TEST_CASE("every value supported implies nothing to apply")
{
    std::mt19937_64 rng(107);
    for (int i = 0; i < 400; ++i) {
        auto m = random_instance(rng, i);
        auto closed = Reference{m}.ac_closure();
        if (Reference::has_empty(closed))
            continue;
        ClosureOptions o;
        auto r = rsarr_closure(m, closed, o);
        CHECK(r.log.empty());
        CHECK(r.domains == closed);
        ArracFixpointOptions ao;
        auto a = arrac_fixpoint(m, closed, ao);
        CHECK(a.log.empty());
        CHECK(a.domains == closed);
    }
}

TEST_CASE("engines only shrink domains and reach a fixpoint of themselves")
{
    std::mt19937_64 rng(109);
    for (int i = 0; i < 300; ++i) {
        auto m = random_instance(rng, i);
        for (auto kind : {EngineKind::naive, EngineKind::arrac}) {
            EngineOptions o;
            o.kind = kind;
            auto r = propagate(m, o);
            for (VarId v = 0; v < m.num_variables(); ++v)
                CHECK(r.domains[v].is_subset_of(m.domain(v)));
            if (r.failed)
                continue;
            auto again = propagate(m, r.domains, o);
            CHECK(again.domains == r.domains);
            CHECK(again.stats.values_pruned == 0);
        }
    }
}

TEST_CASE("propagation from narrowed domains stays below the closure")
{
    std::mt19937_64 rng(113);
    for (int i = 0; i < 300; ++i) {
        auto m = random_instance(rng, i);
        auto full = propagate(m, {});
        auto start = m.domains();
        auto v = static_cast<VarId>(rng() % m.num_variables());
        auto values = start[v].values();
        start[v] = Domain{values[rng() % values.size()]};
        auto narrow = propagate(m, start, {});
        if (full.failed) {
            CHECK(narrow.failed);
            continue;
        }
        if (narrow.failed)
            continue;
        for (VarId w = 0; w < m.num_variables(); ++w)
            CHECK(narrow.domains[w].is_subset_of(full.domains[w]));
    }
}

TEST_CASE("lexicographic order alone does not expose the literal exit on the witness")
{
    auto m = amendment_witness();
    ArracOptions o;
    o.transfer_unprocessed = false;
    auto d = m.domains();
    arrac_run(m, first_array_eq(m), d, o);
    CHECK(d[var(m, "x")] == dom(m, {"A", "B"}));
}

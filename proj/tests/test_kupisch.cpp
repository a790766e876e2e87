#include "doctest.h"

#include "findom/kupisch.hpp"

#include <set>

using namespace findom;

namespace {

KupischSeries lin(std::vector<std::uint32_t> c) { return {SeriesKind::Linear, std::move(c)}; }
KupischSeries cyc(std::vector<std::uint32_t> c) { return {SeriesKind::Cyclic, std::move(c)}; }

std::vector<KupischSeries> small_corpus(std::size_t n_max, std::uint32_t e_max) {
    std::vector<KupischSeries> out;
    for (std::size_t n = 1; n <= n_max; ++n)
        for (SeriesKind k : {SeriesKind::Linear, SeriesKind::Cyclic})
            enumerate_series(n, e_max, k, [&](const KupischSeries& s) { out.push_back(s); });
    return out;
}

} // namespace

TEST_CASE("validate") {
    CHECK_NOTHROW(cyc({3, 2}));
    CHECK_NOTHROW(lin({2, 2, 1}));
    CHECK_NOTHROW(lin({1})); // the simple algebra K is admissible
    try {
        cyc({4, 2});
        FAIL("expected ViolatedKupischCondition");
    } catch (const ViolatedKupischCondition& e) {
        CHECK(e.index == 1); // entry 2 (1-based) fails 2 >= 4-1
    }
    CHECK_THROWS_AS(lin({2, 2}), ViolatedKupischCondition);   // must end with 1
    CHECK_THROWS_AS(lin({2, 1, 1}), ViolatedKupischCondition); // disconnected
    CHECK_THROWS_AS(cyc({2, 1}), ViolatedKupischCondition);
    CHECK_THROWS_AS(lin({4, 2, 1}), ViolatedKupischCondition);
}

TEST_CASE("syzygy of intervals") {
    // K[x]/(x^3): kernel of K[x]/x^3 ->> K[x]/x^2 is K[x]/x
    KupischSeries kx3 = cyc({3});
    CHECK(syzygy(kx3, {0, 2}) == Interval{0, 1});
    // kernel of P_1 ->> S_1 over linear [2,2,1]
    KupischSeries a = lin({2, 2, 1});
    CHECK(syzygy(a, {0, 1}) == Interval{1, 1});
    // projectives have no syzygy
    for (const Interval& p : projective_intervals(a))
        CHECK(!syzygy(a, p));
    CHECK(!syzygy(kx3, {0, 3}));
}

TEST_CASE("proj_dim") {
    KupischSeries a = lin({2, 2, 1});
    CHECK(proj_dim(a, {0, 1}) == ExtNat::finite(2)); // S_1: S_1 -> S_2 -> S_3 = P_3
    KupischSeries kx3 = cyc({3});
    CHECK(proj_dim(kx3, {0, 1}) == ExtNat::infinite());
    for (const Interval& p : projective_intervals(a))
        CHECK(proj_dim(a, p) == ExtNat::finite(0));
}

TEST_CASE("opposite") {
    CHECK(opposite(lin({2, 1})) == lin({2, 1}));
    CHECK(opposite(cyc({4})) == cyc({4}));
    CHECK(opposite(lin({2, 2, 1})) == lin({2, 2, 1}));
    CHECK(opposite(lin({3, 2, 1})) == lin({3, 2, 1}));
    CHECK(opposite(cyc({3, 2})) == cyc({2, 3})); // canonical rotation
}

TEST_CASE("opposite is involutive up to rotation and preserves invariants") {
    for (const KupischSeries& s : small_corpus(4, 5)) {
        KupischSeries op = opposite(s); // constructor re-validates
        CHECK(op.kind() == s.kind());
        CHECK(op.algebra_dim() == s.algebra_dim());
        KupischSeries opop = opposite(op);
        if (s.cyclic())
            CHECK(opop.entries() == minimal_rotation(s.entries()));
        else
            CHECK(opop == s);
    }
}

TEST_CASE("injective intervals") {
    KupischSeries a = lin({2, 2, 1});
    std::vector<Interval> inj = injective_intervals(a);
    REQUIRE(inj.size() == 3);
    CHECK(inj[0] == Interval{0, 1}); // I_1 = S_1
    CHECK(inj[1] == Interval{0, 2}); // I_2 = P_1
    CHECK(inj[2] == Interval{1, 2}); // I_3 = P_2
    KupischSeries b = lin({2, 1});
    std::vector<Interval> injb = injective_intervals(b);
    CHECK(injb[0] == Interval{0, 1});
    CHECK(injb[1] == Interval{0, 2});
    KupischSeries kx3 = cyc({3});
    CHECK(injective_intervals(kx3)[0] == Interval{0, 3}); // I_1 = P_1
    // each I_j has socle S_j
    for (const KupischSeries& s : small_corpus(4, 5)) {
        std::vector<Interval> is = injective_intervals(s);
        for (std::size_t j = 0; j < s.n(); ++j) {
            CHECK(socle_vertex(s, is[j]) == j);
            CHECK(is_injective(s, is[j]));
        }
    }
}

TEST_CASE("cosyzygy") {
    KupischSeries a = lin({2, 2, 1});
    CHECK(cosyzygy(a, {2, 1}) == Interval{1, 1}); // P_3 -> I_3 = P_2, cokernel S_2
    CHECK(cosyzygy(a, {1, 1}) == Interval{0, 1}); // S_2 -> I_2 = P_1, cokernel S_1
    for (const Interval& i : injective_intervals(a))
        CHECK(!cosyzygy(a, i));
}

TEST_CASE("cosyzygy agrees with duality-conjugated syzygy") {
    for (const KupischSeries& s : small_corpus(4, 5)) {
        KupischSeries op = opposite(s);
        for (const Interval& m : all_intervals(s)) {
            Interval dm = dual_interval(s, m);
            CHECK(dm.len == m.len);
            CHECK(is_injective(s, m) == is_projective(op, dm));
            std::optional<Interval> co = cosyzygy(s, m);
            std::optional<Interval> sy = syzygy(op, dm);
            CHECK(co.has_value() == sy.has_value());
            if (co)
                CHECK(dual_interval(s, *co) == *sy);
        }
    }
}

TEST_CASE("domdim_module") {
    KupischSeries a = lin({2, 2, 1});
    CHECK(domdim_module(a, {2, 1}) == ExtNat::finite(2));
    KupischSeries kx3 = cyc({3});
    for (const Interval& m : all_intervals(kx3))
        CHECK(domdim_module(kx3, m) == ExtNat::infinite());
    KupischSeries b = lin({2, 1});
    CHECK(domdim_module(b, {1, 1}) == ExtNat::finite(1));
}

TEST_CASE("algebra_invariants") {
    InvariantReport r = algebra_invariants(lin({2, 2, 1}));
    CHECK(r.domdim == ExtNat::finite(2));
    CHECK(r.findim == ExtNat::finite(2));
    CHECK(r.gldim == ExtNat::finite(2));
    CHECK(r.gdim == ExtNat::finite(2));
    CHECK(!r.selfinjective);
    CHECK(r.proj_noninjective_count == 1);

    for (std::uint32_t n0 : {2u, 3u, 5u}) {
        InvariantReport loc = algebra_invariants(cyc({n0}));
        CHECK(loc.selfinjective);
        CHECK(loc.findim == ExtNat::finite(0));
        CHECK(loc.domdim == ExtNat::infinite());
    }

    InvariantReport r32 = algebra_invariants(cyc({3, 2}));
    CHECK(r32.domdim == ExtNat::finite(2));
    CHECK(r32.gldim == ExtNat::finite(2));
    CHECK(r32.findim == ExtNat::finite(2));
}

TEST_CASE("is_ngas") {
    NgasResult a = is_ngas(lin({2, 2, 1}));
    CHECK(a.ngas);
    REQUIRE(a.proj_noninjective.size() == 1);
    CHECK(a.proj_noninjective[0] == Interval{2, 1});
    CHECK(is_ngas(cyc({2, 3})).ngas);
    CHECK(!is_ngas(cyc({2, 2})).ngas);
}

TEST_CASE("enumerate_series") {
    std::vector<std::vector<std::uint32_t>> got;
    enumerate_series(1, 3, SeriesKind::Cyclic,
                     [&](const KupischSeries& s) { got.push_back(s.entries()); });
    CHECK(got == std::vector<std::vector<std::uint32_t>>{{2}, {3}});

    got.clear();
    enumerate_series(2, 3, SeriesKind::Cyclic,
                     [&](const KupischSeries& s) { got.push_back(s.entries()); });
    CHECK(got == std::vector<std::vector<std::uint32_t>>{{2, 2}, {2, 3}, {3, 3}});

    got.clear();
    enumerate_series(2, 2, SeriesKind::Linear,
                     [&](const KupischSeries& s) { got.push_back(s.entries()); });
    CHECK(got == std::vector<std::vector<std::uint32_t>>{{2, 1}});

    got.clear();
    enumerate_series(1, 5, SeriesKind::Linear,
                     [&](const KupischSeries& s) { got.push_back(s.entries()); });
    CHECK(got.empty()); // [1] is semisimple, not enumerated
}

TEST_CASE("combinatorial ext") {
    KupischSeries a = lin({2, 2, 1});
    // Ext^1(S_i, S_{i+1}) = K along the arrow, other simple pairs vanish
    CHECK(ext_dim(a, {0, 1}, {1, 1}, 1) == 1);
    CHECK(ext_dim(a, {0, 1}, {0, 1}, 1) == 0);
    CHECK(ext_dim(a, {0, 1}, {2, 1}, 1) == 0);
    CHECK(ext_dim(a, {1, 1}, {2, 1}, 1) == 1);
    // Hom(A, M) = dim M and Hom(P_i, M) = dim M e_i
    for (const KupischSeries& s : small_corpus(3, 4)) {
        for (const Interval& m : all_intervals(s)) {
            std::uint32_t total = 0;
            for (const Interval& p : projective_intervals(s))
                total += hom_dim(s, p, m);
            CHECK(total == m.len);
            // Ext vanishes on projectives in positive degree
            for (const Interval& p : projective_intervals(s))
                for (std::uint32_t d = 1; d <= 3; ++d)
                    CHECK(ext_dim(s, p, m, d) == 0);
        }
    }
    // K[x]/(x^2): Ext^i(S,S) = K for all i
    KupischSeries kx2 = cyc({2});
    for (std::uint32_t d = 0; d <= 5; ++d)
        CHECK(ext_dim(kx2, {0, 1}, {0, 1}, d) == 1);
}

TEST_CASE("structural properties on the small corpus") {
    for (const KupischSeries& s : small_corpus(4, 5)) {
        InvariantReport r = algebra_invariants(s);

        // selfinjective <=> cyclic with constant series
        bool constant = s.cyclic() &&
                        std::set<std::uint32_t>(s.entries().begin(), s.entries().end()).size() == 1;
        CHECK(r.selfinjective == constant);

        // domdim(A) = domdim(A^op)
        CHECK(r.domdim == r.codomdim);

        if (r.selfinjective) {
            for (const Interval& m : all_intervals(s))
                CHECK(domdim_module(s, m) == ExtNat::infinite());
        } else {
            // findim >= domdim for non-selfinjective algebras
            REQUIRE(r.domdim.is_finite());
            REQUIRE(r.findim.is_finite());
            CHECK(r.findim.value() >= r.domdim.value());

            // findim = d + max{ pd(m) : domdim(m) >= d, pd finite }
            std::uint32_t d = r.domdim.value();
            std::uint32_t best = 0;
            for (const Interval& m : all_intervals(s)) {
                if (!domdim_module(s, m).known_at_least(d))
                    continue;
                ExtNat pd = proj_dim(s, m);
                if (pd.is_finite())
                    best = std::max(best, pd.value());
            }
            CHECK(r.findim.value() == d + best);
        }

        // Gorenstein: finite gdim forces findim = gdim
        if (r.gdim.is_finite())
            CHECK(r.findim == r.gdim);

        // inj_findim equals findim of the opposite algebra
        CHECK(r.inj_findim == algebra_invariants(opposite(s)).findim);
    }
}

TEST_CASE("syzygy-image description of Dom_i (Omega^i(mod A) = Dom_i)") {
    for (const KupischSeries& s : small_corpus(3, 4)) {
        InvariantReport r = algebra_invariants(s);
        if (!r.domdim.is_finite())
            continue;
        for (std::uint32_t i = 1; i <= r.domdim.value(); ++i) {
            std::set<Interval> dom_i;
            for (const Interval& m : all_intervals(s))
                if (domdim_module(s, m).known_at_least(i))
                    dom_i.insert(m);
            std::vector<Interval> projs = projective_intervals(s);
            std::set<Interval> omega_i(projs.begin(), projs.end());
            for (const Interval& m : all_intervals(s)) {
                Interval cur = m;
                bool alive = true;
                for (std::uint32_t t = 0; t < i && alive; ++t) {
                    std::optional<Interval> nx = syzygy(s, cur);
                    if (!nx)
                        alive = false;
                    else
                        cur = *nx;
                }
                if (alive)
                    omega_i.insert(cur);
            }
            CHECK(dom_i == omega_i);
        }
    }
}

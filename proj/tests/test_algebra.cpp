#include "doctest.h"

#include "findom/algebra.hpp"
#include "test_algebras.hpp"

using namespace findom;

TEST_CASE("monomial algebra: one loop with x^2 = 0") {
    MonomialPresentation p;
    p.vertices = 1;
    p.arrows = {{"x", 0, 0}};
    p.relations = {{0, 0}};
    AlgPtr a = from_monomial(p, PrimeField(2));
    CHECK(a->dim == 2);
    CHECK(a->simple_count() == 1);
    CHECK(a->radical.cols() == 1);
}

TEST_CASE("monomial algebra matching cyclic Kupisch [2,3]") {
    // a: 1 -> 2, b: 2 -> 1, relations ab and bab
    MonomialPresentation p;
    p.vertices = 2;
    p.arrows = {{"a", 0, 1}, {"b", 1, 0}};
    p.relations = {{0, 1}, {1, 0, 1}};
    AlgPtr a = from_monomial(p, PrimeField(2));
    CHECK(a->dim == 5);
    AlgPtr k = from_kupisch(KupischSeries(SeriesKind::Cyclic, {2, 3}), PrimeField(2));
    CHECK(k->dim == 5);
    CHECK(a->vertex_basis[0].cols() == k->vertex_basis[0].cols());
    CHECK(a->vertex_basis[1].cols() == k->vertex_basis[1].cols());
}

TEST_CASE("monomial algebra: loop without relations is not admissible") {
    MonomialPresentation p;
    p.vertices = 1;
    p.arrows = {{"x", 0, 0}};
    CHECK_THROWS_AS(from_monomial(p, PrimeField(2)), NonAdmissible);
}

TEST_CASE("group algebras of 2-groups over GF(2)") {
    // C2
    AlgPtr c2 = from_group_table({"1", "g"}, {{0, 1}, {1, 0}}, PrimeField(2));
    CHECK(c2->dim == 2);
    CHECK(c2->simple_count() == 1);
    CHECK(c2->radical.cols() == 1);

    AlgPtr d8 = testalg::d8_algebra();
    CHECK(d8->dim == 8);
    CHECK(d8->simple_count() == 1);

    AlgPtr q8 = testalg::q8_algebra();
    CHECK(q8->dim == 8);
    CHECK(q8->simple_count() == 1);

    // broken table: not associative
    CHECK_THROWS_AS(from_group_table({"1", "g", "h"},
                                     {{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}, PrimeField(3)),
                    NotAGroup);
    // C3 over GF(2) is not modular
    CHECK_THROWS_AS(from_group_table({"1", "g", "h"},
                                     {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, PrimeField(2)),
                    InputError);
}

TEST_CASE("table algebra: K<a,b>/(a^2, b^2-aba)") {
    AlgPtr a = testalg::hopf_algebra(); // full associativity scan runs on load
    CHECK(a->dim == 8);
    CHECK(a->simple_count() == 1);
    CHECK(a->radical.cols() == 7);
    // J^2 has dimension 5 (basis ab, ba, aba, bab, abab)
    Matrix j2(a->field, 8, 0);
    for (std::size_t c = 0; c < 7; ++c)
        for (std::size_t c2 = 0; c2 < 7; ++c2)
            j2 = Matrix::hstack(
                j2, as_column(a->field, a->mul(column_of(a->radical, c), column_of(a->radical, c2))));
    CHECK(column_space_basis(j2).cols() == 5);
}

TEST_CASE("table algebra: K[x]/(x^3) and error paths") {
    AlgPtr a = testalg::kx_algebra(3);
    CHECK(a->dim == 3);
    CHECK(a->radical.cols() == 2);

    // non-associative table: x*x = 1 on a "local" 2-dim algebra
    std::vector<std::vector<int>> bad = {{0, 1}, {1, 0}};
    // this would make x a unit, so the radical line is not nilpotent
    CHECK_THROWS(from_table(PrimeField(2), testalg::index_table_to_mult(bad), true, {}, {}));
}

TEST_CASE("kupisch path algebras") {
    for (auto kind : {SeriesKind::Linear, SeriesKind::Cyclic}) {
        std::vector<std::vector<std::uint32_t>> entries =
            kind == SeriesKind::Linear
                ? std::vector<std::vector<std::uint32_t>>{{2, 1}, {2, 2, 1}, {3, 2, 1}}
                : std::vector<std::vector<std::uint32_t>>{{2}, {4}, {2, 3}, {3, 3, 2}};
        for (const auto& c : entries) {
            KupischSeries s(kind, c);
            AlgPtr a = from_kupisch(s, PrimeField(2));
            CHECK(a->dim == s.algebra_dim());
            CHECK(a->simple_count() == s.n());
            for (std::size_t i = 0; i < s.n(); ++i)
                CHECK(a->vertex_basis[i].cols() == s.entry(i));
            CHECK(a->strategy == EnumStrategy::Kupisch);
        }
    }
}

TEST_CASE("internally built algebras pass the full associativity scan") {
    // re-run create() with Validation::Full on copies
    for (AlgPtr a : {from_kupisch(KupischSeries(SeriesKind::Cyclic, {3, 2}), PrimeField(2)),
                     testalg::d8_algebra(), testalg::q8_algebra(),
                     enveloping_algebra(testalg::kx_algebra(2)),
                     tensor_algebra(from_kupisch(KupischSeries(SeriesKind::Linear, {2, 1}),
                                                 PrimeField(2)),
                                    testalg::kx_algebra(2))}) {
        FiniteAlgebra copy = *a;
        copy.arrows.clear();
        copy.words.clear();
        CHECK_NOTHROW(FiniteAlgebra::create(std::move(copy), Validation::Full));
    }
}

TEST_CASE("opposite and tensor constructions") {
    AlgPtr kx2 = testalg::kx_algebra(2);
    // commutative algebra: opposite has identical structure constants
    AlgPtr op = opposite_algebra(kx2);
    for (std::size_t i = 0; i < kx2->dim; ++i)
        CHECK(op->rmul[i] == kx2->rmul[i]);

    // enveloping algebra of K[x]/(x^2) = K[a,b]/(a^2,b^2), dim 4 local
    AlgPtr env = enveloping_algebra(kx2);
    CHECK(env->dim == 4);
    CHECK(env->simple_count() == 1);
    CHECK(env->radical.cols() == 3);
    // commutative, generators square to zero, ab = ba != 0
    Vec a_gen(4, 0), b_gen(4, 0);
    a_gen[2] = 1; // x (x) 1
    b_gen[1] = 1; // 1 (x) x
    CHECK(env->mul(a_gen, a_gen) == Vec(4, 0));
    CHECK(env->mul(b_gen, b_gen) == Vec(4, 0));
    Vec ab = env->mul(a_gen, b_gen);
    CHECK(ab == env->mul(b_gen, a_gen));
    CHECK(ab != Vec(4, 0));

    // tensor with the base field leaves the algebra unchanged
    AlgPtr unit = testalg::kx_algebra(1);
    CHECK(unit->dim == 1);
    AlgPtr t = tensor_algebra(kx2, unit);
    CHECK(t->dim == kx2->dim);
    for (std::size_t i = 0; i < t->dim; ++i)
        CHECK(t->rmul[i] == kx2->rmul[i]);
}

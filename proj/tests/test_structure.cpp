#include <catch2/catch_amalgamated.hpp>

#include <map>

#include <leibniz/structure.hpp>
#include <leibniz/zoo.hpp>

using namespace leibniz;

namespace {

bool same_table(const LeibnizAlgebra& x, const LeibnizAlgebra& y) {
    if (x.dim() != y.dim()) return false;
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < x.dim(); ++j)
            for (std::size_t k = 0; k < x.dim(); ++k)
                if (x.c(i, j, k) != y.c(i, j, k)) return false;
    return true;
}

std::vector<std::size_t> dims(const Series& s) {
    std::vector<std::size_t> d;
    for (const Subspace& t : s.terms) d.push_back(t.dim());
    return d;
}

Subspace row_span(std::size_t ambient, const std::vector<Vec>& rows) {
    return Subspace::span(ambient, rows);
}

}  // namespace

TEST_CASE("derived series dimensions") {
    std::map<std::string, std::vector<std::size_t>> expect{
        {"a1", {0}},   {"a2", {0}},   {"r2", {1, 0}},  {"l2i", {1, 0}},
        {"l2ii", {1, 0}}, {"heis3", {1, 0}}, {"sl2", {3}}, {"rot2", {2, 0}},
        {"sl2_semidirect_k2", {5}}, {"sl2_oplus_l2ii", {4, 3}}, {"sl2_plus_center", {3}}};
    for (const auto& [name, a] : zoo::all_algebras()) {
        INFO(name);
        Series s = derived_series(a);
        CHECK(dims(s) == expect.at(name));
        CHECK(s.stabilized);
    }
}

TEST_CASE("lower central series dimensions") {
    std::map<std::string, std::vector<std::size_t>> expect{
        {"a1", {0}},   {"a2", {0}},   {"r2", {1}},     {"l2i", {1, 0}},
        {"l2ii", {1}},  {"heis3", {1, 0}}, {"sl2", {3}}, {"rot2", {2}},
        {"sl2_semidirect_k2", {5}}, {"sl2_oplus_l2ii", {4}}, {"sl2_plus_center", {3}}};
    for (const auto& [name, a] : zoo::all_algebras()) {
        INFO(name);
        CHECK(dims(lower_central_series(a)) == expect.at(name));
    }
}

TEST_CASE("solvability and nilpotency flags") {
    std::map<std::string, std::pair<bool, bool>> expect{  // {solvable, nilpotent}
        {"a1", {true, true}},   {"a2", {true, true}},   {"r2", {true, false}},
        {"l2i", {true, true}},  {"l2ii", {true, false}}, {"heis3", {true, true}},
        {"sl2", {false, false}}, {"rot2", {true, false}},
        {"sl2_semidirect_k2", {false, false}}, {"sl2_oplus_l2ii", {false, false}},
        {"sl2_plus_center", {false, false}}};
    for (const auto& [name, a] : zoo::all_algebras()) {
        INFO(name);
        CHECK(is_solvable(a) == expect.at(name).first);
        CHECK(is_nilpotent(a) == expect.at(name).second);
        if (expect.at(name).second) CHECK(is_solvable(a));
    }
    CHECK(is_abelian(zoo::a2()));
    CHECK_FALSE(is_abelian(zoo::l2i()));
}

TEST_CASE("nilpotency class") {
    CHECK(nilpotency_class(zoo::a1()) == 1);
    CHECK(nilpotency_class(zoo::a2()) == 1);
    CHECK(nilpotency_class(zoo::heis3()) == 2);
    CHECK(nilpotency_class(zoo::l2i()) == 2);
    CHECK_FALSE(nilpotency_class(zoo::sl2()).has_value());
    CHECK_FALSE(nilpotency_class(zoo::r2()).has_value());
    CHECK_FALSE(nilpotency_class(zoo::l2ii()).has_value());
}

TEST_CASE("series terms are nested ideals") {
    for (const auto& [name, a] : zoo::all_algebras()) {
        INFO(name);
        for (const Series& s : {derived_series(a), lower_central_series(a)}) {
            Subspace prev = Subspace::full(a.dim());
            for (const Subspace& t : s.terms) {
                CHECK(prev.contains(t));
                CHECK(is_ideal(a, t));
                prev = t;
            }
        }
    }
}

TEST_CASE("Leibniz kernel bases") {
    CHECK(ker_ideal(zoo::l2i()).basis() == Matrix{{1, 0}});
    CHECK(ker_ideal(zoo::l2ii()).basis() == Matrix{{1, 0}});
    CHECK(ker_ideal(zoo::sl2_oplus_l2ii()).basis() == Matrix{{0, 0, 0, 1, 0}});
    for (const char* lie : {"a1", "a2", "r2", "heis3", "sl2", "rot2", "sl2_semidirect_k2",
                            "sl2_plus_center"}) {
        for (const auto& [name, a] : zoo::all_algebras())
            if (name == lie) {
                INFO(name);
                CHECK(ker_ideal(a).dim() == 0);
            }
    }
}

TEST_CASE("kernel is left-central and spanned by squares") {
    for (const auto& [name, a] : zoo::all_algebras()) {
        INFO(name);
        Subspace ker = ker_ideal(a);
        CHECK(left_center(a).contains(ker));
        CHECK(product_subspace(a, ker, Subspace::full(a.dim())).dim() == 0);
        for (std::size_t i = 0; i < a.dim(); ++i)
            CHECK(ker.contains(a.bracket_basis(i, i)));
    }
}

TEST_CASE("center bases") {
    LeibnizAlgebra l2ii = zoo::l2ii();
    CHECK(left_center(l2ii).basis() == Matrix{{1, 0}});
    CHECK(right_center(l2ii).basis() == Matrix{{1, -1}});
    CHECK(center(l2ii).dim() == 0);

    LeibnizAlgebra l2i = zoo::l2i();
    CHECK(left_center(l2i).basis() == Matrix{{1, 0}});
    CHECK(right_center(l2i).basis() == Matrix{{1, 0}});
    CHECK(center(l2i).basis() == Matrix{{1, 0}});

    LeibnizAlgebra h = zoo::heis3();
    CHECK(left_center(h).basis() == Matrix{{0, 0, 1}});
    CHECK(right_center(h).basis() == Matrix{{0, 0, 1}});

    CHECK(left_center(zoo::rot2()).dim() == 0);
    CHECK(right_center(zoo::rot2()).dim() == 0);
    CHECK(left_center(zoo::sl2()).dim() == 0);
    CHECK(left_center(zoo::r2()).dim() == 0);
    CHECK(right_center(zoo::r2()).dim() == 0);

    CHECK(left_center(zoo::sl2_plus_center()).basis() == Matrix{{0, 0, 0, 1}});
    CHECK(right_center(zoo::sl2_plus_center()).basis() == Matrix{{0, 0, 0, 1}});
    CHECK(left_center(zoo::sl2_oplus_l2ii()).basis() == Matrix{{0, 0, 0, 1, 0}});
    CHECK(right_center(zoo::sl2_oplus_l2ii()).basis() == Matrix{{0, 0, 0, 1, -1}});
}

TEST_CASE("left center is an ideal, right center a subalgebra") {
    for (const auto& [name, a] : zoo::all_algebras()) {
        INFO(name);
        CHECK(is_ideal(a, left_center(a)));
        CHECK(is_subalgebra(a, right_center(a)));
        CHECK(left_center(a).contains(center(a)));
        CHECK(right_center(a).contains(center(a)));
    }
}

TEST_CASE("subalgebra and ideal predicates") {
    LeibnizAlgebra sl2 = zoo::sl2();
    Subspace e = row_span(3, {unit_vec(3, 0)});
    CHECK(is_subalgebra(sl2, e));
    CHECK_FALSE(is_ideal(sl2, e));

    LeibnizAlgebra r2 = zoo::r2();
    Subspace b = row_span(2, {unit_vec(2, 1)});
    CHECK(is_subalgebra(r2, b));
    CHECK(is_ideal(r2, b));
    Subspace a_line = row_span(2, {unit_vec(2, 0)});
    CHECK(is_subalgebra(r2, a_line));
    CHECK_FALSE(is_ideal(r2, a_line));

    CHECK(is_ideal(zoo::rot2(), row_span(3, {unit_vec(3, 1), unit_vec(3, 2)})));

    // the right center of the non-Lie table is stable under left but not
    // right multiplication
    LeibnizAlgebra l2ii = zoo::l2ii();
    Subspace zr = right_center(l2ii);
    CHECK(is_left_ideal(l2ii, zr));
    CHECK_FALSE(is_right_ideal(l2ii, zr));
    CHECK_FALSE(is_ideal(l2ii, zr));
}

TEST_CASE("normalizers") {
    LeibnizAlgebra r2 = zoo::r2();
    Subspace a_line = row_span(2, {unit_vec(2, 0)});
    CHECK(left_normalizer(r2, a_line).basis() == Matrix{{1, 0}});
    CHECK(right_normalizer(r2, a_line).basis() == Matrix{{1, 0}});

    LeibnizAlgebra h = zoo::heis3();
    Subspace x_line = row_span(3, {unit_vec(3, 0)});
    CHECK(left_normalizer(h, x_line).basis() == Matrix{{1, 0, 0}, {0, 0, 1}});
    CHECK(right_normalizer(h, x_line).basis() == Matrix{{1, 0, 0}, {0, 0, 1}});

    LeibnizAlgebra sl2 = zoo::sl2();
    Subspace h_line = row_span(3, {unit_vec(3, 2)});
    CHECK(left_normalizer(sl2, h_line).basis() == Matrix{{0, 0, 1}});
    CHECK(right_normalizer(sl2, h_line).basis() == Matrix{{0, 0, 1}});

    // the right normalizer of a subalgebra is again a subalgebra
    for (auto [alg, u] : {std::pair{r2, a_line}, {sl2, h_line}, {h, x_line},
                          {zoo::l2i(), row_span(2, {unit_vec(2, 0)})}}) {
        CHECK(is_subalgebra(alg, u));
        CHECK(is_subalgebra(alg, right_normalizer(alg, u)));
        CHECK(left_normalizer(alg, u).contains(u));
        CHECK(right_normalizer(alg, u).contains(u));
    }

    // an ideal is normalized by everything
    CHECK(left_normalizer(r2, row_span(2, {unit_vec(2, 1)})) == Subspace::full(2));
    CHECK(right_normalizer(r2, row_span(2, {unit_vec(2, 1)})) == Subspace::full(2));
}

TEST_CASE("closures") {
    LeibnizAlgebra r2 = zoo::r2();
    Subspace b = row_span(2, {unit_vec(2, 1)});
    CHECK(ideal_closure(r2, b) == b);  // already an ideal
    CHECK(ideal_closure(r2, row_span(2, {unit_vec(2, 0)})) == Subspace::full(2));
    CHECK(subalgebra_closure(r2, row_span(2, {unit_vec(2, 0)})).dim() == 1);
    CHECK(subalgebra_closure(r2, row_span(2, {{Rational(1), Rational(1)}})).dim() == 1);

    CHECK(subalgebra_closure(zoo::l2i(), row_span(2, {unit_vec(2, 1)})) == Subspace::full(2));
    CHECK(subalgebra_closure(zoo::heis3(), row_span(3, {unit_vec(3, 0), unit_vec(3, 1)})) ==
          Subspace::full(3));
}

TEST_CASE("generation") {
    LeibnizAlgebra r2 = zoo::r2();
    CHECK_FALSE(generates(r2, row_span(2, {unit_vec(2, 0)})));
    CHECK_FALSE(generates(r2, row_span(2, {unit_vec(2, 1)})));
    CHECK_FALSE(generates(r2, row_span(2, {{Rational(1), Rational(1)}})));
    CHECK(generates(r2, Subspace::full(2)));

    CHECK(generates(zoo::l2i(), row_span(2, {unit_vec(2, 1)})));  // one generator
    CHECK(generates(zoo::l2ii(), row_span(2, {unit_vec(2, 1)})));
    CHECK(generates(zoo::heis3(), row_span(3, {unit_vec(3, 0), unit_vec(3, 1)})));
    CHECK_FALSE(generates(zoo::heis3(), row_span(3, {unit_vec(3, 0), unit_vec(3, 2)})));
}

TEST_CASE("generator counts from the derived quotient") {
    CHECK(min_generators(zoo::a1()) == 1);
    CHECK(min_generators(zoo::a2()) == 2);
    CHECK(min_generators(zoo::r2()) == 1);
    CHECK(min_generators(zoo::l2i()) == 1);
    CHECK(min_generators(zoo::l2ii()) == 1);
    CHECK(min_generators(zoo::heis3()) == 2);

    // on a nilpotent algebra the count is witnessed by an actual generating set
    CHECK(generates(zoo::heis3(), row_span(3, {unit_vec(3, 0), unit_vec(3, 1)})));
    CHECK(generates(zoo::l2i(), row_span(2, {unit_vec(2, 1)})));
}

TEST_CASE("quotients") {
    LeibnizAlgebra r2 = zoo::r2();
    QuotientAlgebra q = quotient(r2, row_span(2, {unit_vec(2, 1)}));
    CHECK(q.algebra.dim() == 1);
    CHECK(is_abelian(q.algebra));
    CHECK(q.projection * q.section == Matrix::identity(1));

    CHECK_THROWS_AS(quotient(r2, row_span(2, {unit_vec(2, 0)})), NotAnIdeal);

    QuotientAlgebra hq = quotient(zoo::heis3(), center(zoo::heis3()));
    CHECK(hq.algebra.dim() == 2);
    CHECK(is_abelian(hq.algebra));
}

TEST_CASE("liezation") {
    QuotientAlgebra s1 = liezation(zoo::l2i());
    CHECK(s1.algebra.dim() == 1);
    CHECK(is_lie(s1.algebra));

    QuotientAlgebra s2 = liezation(zoo::l2ii());
    CHECK(s2.algebra.dim() == 1);
    CHECK(is_lie(s2.algebra));

    // a Lie algebra is its own liezation
    CHECK(same_table(liezation(zoo::sl2()).algebra, zoo::sl2()));
    CHECK(same_table(liezation(zoo::heis3()).algebra, zoo::heis3()));

    QuotientAlgebra s3 = liezation(zoo::sl2_oplus_l2ii());
    CHECK(s3.algebra.dim() == 4);
    CHECK(is_lie(s3.algebra));
}

TEST_CASE("restriction to a subalgebra") {
    Subspace first3 = row_span(4, {unit_vec(4, 0), unit_vec(4, 1), unit_vec(4, 2)});
    CHECK(same_table(restrict_to_subalgebra(zoo::sl2_plus_center(), first3), zoo::sl2()));

    LeibnizAlgebra plane = restrict_to_subalgebra(
        zoo::rot2(), row_span(3, {unit_vec(3, 1), unit_vec(3, 2)}));
    CHECK(plane.dim() == 2);
    CHECK(is_abelian(plane));

    CHECK_THROWS_AS(
        restrict_to_subalgebra(zoo::sl2(), row_span(3, {unit_vec(3, 0), unit_vec(3, 1)})),
        std::invalid_argument);
}

TEST_CASE("bracket of subspaces") {
    LeibnizAlgebra r2 = zoo::r2();
    Subspace full = Subspace::full(2);
    CHECK(product_subspace(r2, full, full).basis() == Matrix{{0, 1}});
    CHECK(product_subspace(r2, row_span(2, {unit_vec(2, 0)}), row_span(2, {unit_vec(2, 1)}))
              .basis() == Matrix{{0, 1}});
    for (const auto& [name, a] : zoo::all_algebras()) {
        INFO(name);
        CHECK(derived_subalgebra(a) ==
              product_subspace(a, Subspace::full(a.dim()), Subspace::full(a.dim())));
    }
}

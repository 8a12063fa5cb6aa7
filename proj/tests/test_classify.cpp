#include <catch2/catch_amalgamated.hpp>

#include <leibniz/classify.hpp>
#include <leibniz/random.hpp>
#include <leibniz/zoo.hpp>

using namespace leibniz;

TEST_CASE("canonical lists") {
    CHECK(canonical_algebras(1).size() == 1);
    CHECK(canonical_algebras(2).size() == 4);
    CHECK(canonical_names(1) == std::vector<std::string>{"a_1"});
    CHECK(canonical_names(2) == std::vector<std::string>{"a_2", "r_2", "(i)", "(ii)"});
    CHECK_THROWS_AS(canonical_algebras(0), std::invalid_argument);
    CHECK_THROWS_AS(canonical_algebras(3), std::invalid_argument);
    CHECK_THROWS_AS(canonical_names(3), std::invalid_argument);

    for (const LeibnizAlgebra& a : canonical_algebras(2)) CHECK(is_left_leibniz(a));
    auto canon = canonical_algebras(2);
    CHECK(is_lie(canon[0]));
    CHECK(is_lie(canon[1]));
    CHECK_FALSE(is_lie(canon[2]));
    CHECK(is_right_leibniz(canon[2]));
    CHECK_FALSE(is_lie(canon[3]));
    CHECK_FALSE(is_right_leibniz(canon[3]));
}

TEST_CASE("frozen fingerprint of the nilpotent non-Lie class") {
    Fingerprint f = fingerprint(zoo::l2i());
    CHECK(f.dim == 2);
    CHECK_FALSE(f.lie);
    CHECK(f.left_leibniz);
    CHECK(f.right_leibniz);
    CHECK(f.ker_dim == 1);
    CHECK(f.left_center_dim == 1);
    CHECK(f.right_center_dim == 1);
    CHECK(f.derived_dims == std::vector<std::size_t>{1, 0});
    CHECK(f.central_dims == std::vector<std::size_t>{1, 0});
    CHECK(f.solvable);
    CHECK(f.nilpotent);
    CHECK(f.radical_dim == 2);
    CHECK(f.nilradical_dim == 2);
    CHECK(f.min_gens == 1);
}

TEST_CASE("frozen fingerprint of the non-split non-Lie class") {
    Fingerprint f = fingerprint(zoo::l2ii());
    CHECK(f.dim == 2);
    CHECK_FALSE(f.lie);
    CHECK(f.left_leibniz);
    CHECK_FALSE(f.right_leibniz);
    CHECK(f.ker_dim == 1);
    CHECK(f.left_center_dim == 1);
    // the right center is the line through a - b; it has dimension 1 even
    // though it differs from the left center as a subspace
    CHECK(f.right_center_dim == 1);
    CHECK(f.derived_dims == std::vector<std::size_t>{1, 0});
    CHECK(f.central_dims == std::vector<std::size_t>{1});
    CHECK(f.solvable);
    CHECK_FALSE(f.nilpotent);
    CHECK(f.radical_dim == 2);
    CHECK(f.nilradical_dim == 1);
    CHECK(f.min_gens == 1);
}

TEST_CASE("dimension 2 fingerprints are pairwise distinct") {
    auto canon = canonical_algebras(2);
    std::vector<Fingerprint> fps;
    for (const auto& a : canon) fps.push_back(fingerprint(a));
    for (std::size_t i = 0; i < fps.size(); ++i)
        for (std::size_t j = i + 1; j < fps.size(); ++j) {
            INFO("classes " << i << " and " << j);
            CHECK_FALSE(fps[i] == fps[j]);
        }
    // the separating invariants, spelled out
    CHECK(fps[0].nilpotent != fps[1].nilpotent);   // a_2 vs r_2
    CHECK(fps[0].lie != fps[2].lie);               // a_2 vs (i)
    CHECK(fps[1].lie != fps[2].lie);               // r_2 vs (i)
    CHECK(fps[2].nilpotent != fps[3].nilpotent);   // (i) vs (ii)
    CHECK(fps[1].ker_dim != fps[3].ker_dim);       // r_2 vs (ii)
}

TEST_CASE("classification of the canonical tables is the identity") {
    Classification c1 = classify_dim_le2(zoo::a1());
    CHECK(c1.name == "a_1");
    CHECK(c1.index == 0);
    CHECK(c1.iso == Matrix::identity(1));

    auto canon = canonical_algebras(2);
    auto names = canonical_names(2);
    for (std::size_t i = 0; i < canon.size(); ++i) {
        INFO(names[i]);
        Classification c = classify_dim_le2(canon[i]);
        CHECK(c.name == names[i]);
        CHECK(c.index == i);
        CHECK(c.iso == Matrix::identity(2));
    }
}

TEST_CASE("classification is invariant under basis changes and certified") {
    auto canon = canonical_algebras(2);
    auto names = canonical_names(2);
    for (std::uint32_t seed = 1; seed <= 20; ++seed) {
        RandomSource rng(seed);
        for (std::size_t i = 0; i < canon.size(); ++i) {
            Matrix t = rng.invertible_matrix(2);
            LeibnizAlgebra moved = transform_basis(canon[i], t);
            INFO("seed " << seed << " class " << names[i]);
            Classification c = classify_dim_le2(moved);
            CHECK(c.name == names[i]);
            REQUIRE(c.iso.is_invertible());
            CHECK(is_algebra_map(canon[i], moved, c.iso));
            CHECK(fingerprint(moved) == fingerprint(canon[i]));
        }
        Matrix t1 = rng.invertible_matrix(1);
        LeibnizAlgebra moved1 = transform_basis(zoo::a1(), t1);
        CHECK(classify_dim_le2(moved1).name == "a_1");
    }
}

TEST_CASE("classification of handwritten tables") {
    // one generator with square in a new direction
    LeibnizAlgebra sq(2, {"a", "b"});
    sq.set_c(0, 0, 1, Rational(1));
    Classification c = classify_dim_le2(sq);
    CHECK(c.name == "(i)");
    CHECK(is_algebra_map(canonical_algebras(2)[2], sq, c.iso));

    // a scaled copy of the solvable Lie class
    LeibnizAlgebra scaled(2, {"a", "b"});
    scaled.set_c(0, 1, 1, Rational(2));
    scaled.set_c(1, 0, 1, Rational(-2));
    Classification d = classify_dim_le2(scaled);
    CHECK(d.name == "r_2");
    CHECK(is_algebra_map(canonical_algebras(2)[1], scaled, d.iso));
}

TEST_CASE("classification rejects out-of-scope inputs") {
    CHECK_THROWS_AS(classify_dim_le2(zoo::heis3()), std::invalid_argument);
    CHECK_THROWS_AS(classify_dim_le2(LeibnizAlgebra()), std::invalid_argument);

    LeibnizAlgebra bad(1, {"a"});
    bad.set_c(0, 0, 0, Rational(1));
    CHECK_THROWS_AS(classify_dim_le2(bad), std::invalid_argument);
}

TEST_CASE("classification certificates are deterministic") {
    RandomSource rng(9);
    Matrix t = rng.invertible_matrix(2);
    LeibnizAlgebra moved = transform_basis(zoo::l2ii(), t);
    Classification once = classify_dim_le2(moved);
    Classification twice = classify_dim_le2(moved);
    CHECK(once.name == twice.name);
    CHECK(once.iso == twice.iso);
}

#include "newstein/algebra_io.hpp"
#include "newstein/algebras.hpp"
#include "newstein/exact_linalg.hpp"
#include "newstein/lie_algebra.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

using namespace newstein;

namespace {

Scalar random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
    Scalar x(num(rng), den(rng));
    x.canonicalize();
    return x;
}

AlgebraElement random_element(const LieAlgebra& alg, std::mt19937& rng, int terms = 6) {
    std::uniform_int_distribution<int> idx(0, alg.dimension() - 1);
    SparseVector v;
    for (int t = 0; t < terms; ++t) v.emplace_back(idx(rng), random_rational(rng));
    return alg.element(v);
}

SparseExactMatrix commutator(const SparseExactMatrix& a, const SparseExactMatrix& b) {
    SparseExactMatrix ab = a * b, ba = b * a;
    SparseExactMatrix out(a.rows(), a.cols());
    for (int c = 0; c < a.cols(); ++c) {
        SparseVector v = ab.column(c);
        axpy(v, -1, ba.column(c));
        out.set_column(c, v);
    }
    return out;
}

}  // namespace

TEST(Scalar, ParsesCanonicalForm) {
    EXPECT_EQ(parse_scalar("-6/4"), Scalar(-3, 2));
    EXPECT_EQ(to_string(parse_scalar("4/2")), "2");
    EXPECT_EQ(to_string(parse_scalar("-1/2")), "-1/2");
    EXPECT_THROW(parse_scalar("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_scalar("x"), std::invalid_argument);
    EXPECT_THROW(parse_scalar("1/-2"), std::invalid_argument);
}

TEST(Labels, NamesRoundTrip) {
    for (const auto& l : newstein_labels(3)) EXPECT_EQ(BasisLabel::parse(l.name()), l);
    for (const auto& l : newstein_labels(2)) EXPECT_EQ(BasisLabel::parse(l.name()), l);
    EXPECT_EQ(BasisLabel::parse("K").kind, BasisLabel::Kind::K);
    EXPECT_EQ(BasisLabel::parse("zeta").kind, BasisLabel::Kind::Other);
}

TEST(Bracket, MismatchedAlgebraThrows) {
    LieAlgebra g = build_newstein();
    LieAlgebra h = build_heisenberg3();
    EXPECT_THROW(g.bracket(g.basis(0), h.basis(0)), MismatchedAlgebra);
    LieAlgebra g2 = build_newstein();
    EXPECT_THROW(g.bracket(g.basis(0), g2.basis(1)), MismatchedAlgebra);
}

TEST(Bracket, SelfBracketVanishes) {
    LieAlgebra g = build_newstein();
    std::mt19937 rng(1);
    for (int t = 0; t < 50; ++t) {
        auto x = random_element(g, rng);
        EXPECT_TRUE(g.bracket(x, x).is_zero());
    }
}

TEST(Bracket, Bilinear) {
    LieAlgebra g = build_newstein();
    std::mt19937 rng(2);
    for (int t = 0; t < 50; ++t) {
        auto x = random_element(g, rng), y = random_element(g, rng), z = random_element(g, rng);
        Scalar a = random_rational(rng);
        EXPECT_EQ(g.bracket(a * x + y, z), a * g.bracket(x, z) + g.bracket(y, z));
        EXPECT_EQ(g.bracket(z, a * x + y), a * g.bracket(z, x) + g.bracket(z, y));
    }
}

TEST(Jacobi, AbelianAndSmallAlgebras) {
    EXPECT_TRUE(jacobi_check(build_abelian(3)).empty());
    EXPECT_TRUE(jacobi_check(build_heisenberg3()).empty());
    EXPECT_TRUE(jacobi_check(build_sl2()).empty());
}

TEST(Jacobi, DetectsCorruption) {
    LieAlgebra g = build_newstein();
    NewsteinLayout lay;
    StructureConstants sc = g.constants();
    // Flip [L12, T2] = T1.
    auto& v = sc.at({lay.L(1, 2), lay.T(2)});
    for (auto& e : v) e.second = -e.second;
    LieAlgebra bad("corrupt", g.labels(), sc);
    auto violations = jacobi_check(bad);
    EXPECT_FALSE(violations.empty());
    auto again = jacobi_check(bad, 3);
    ASSERT_EQ(again.size(), violations.size());
    for (std::size_t k = 0; k < again.size(); ++k) {
        EXPECT_EQ(again[k].i, violations[k].i);
        EXPECT_EQ(again[k].j, violations[k].j);
        EXPECT_EQ(again[k].k, violations[k].k);
    }
}

TEST(Adjoint, ZeroAndCenter) {
    LieAlgebra g = build_newstein();
    NewsteinLayout lay;
    EXPECT_TRUE(adjoint(g, g.zero()).is_zero());
    SparseVector c;
    for (int mu = 1; mu <= 4; ++mu) c.emplace_back(lay.C(mu, mu), Scalar(metric(mu, mu)));
    EXPECT_TRUE(adjoint(g, g.element(c)).is_zero());
}

TEST(Adjoint, TraceOfRotationVanishes) {
    LieAlgebra g = build_newstein();
    NewsteinLayout lay;
    SparseExactMatrix m = adjoint(g, g.basis(lay.J(1, 2)));
    Scalar tr = 0;
    for (int i = 0; i < m.rows(); ++i) tr += m.entry(i, i);
    EXPECT_EQ(tr, 0);
}

TEST(Adjoint, IsHomomorphism) {
    LieAlgebra g = build_newstein();
    std::mt19937 rng(3);
    for (int t = 0; t < 10; ++t) {
        auto x = random_element(g, rng, 4), y = random_element(g, rng, 4);
        EXPECT_EQ(adjoint(g, g.bracket(x, y)), commutator(adjoint(g, x), adjoint(g, y)));
    }
}

TEST(Centralizer, EmptyGeneratorsGiveWholeAlgebra) {
    LieAlgebra h = build_heisenberg3();
    EXPECT_EQ(centralizer(h, {}).size(), 3u);
}

TEST(Centralizer, HeisenbergCenter) {
    LieAlgebra h = build_heisenberg3();
    std::vector<AlgebraElement> gens = {h.basis(0), h.basis(1), h.basis(2)};
    auto z = centralizer(h, gens);
    ASSERT_EQ(z.size(), 1u);
    EXPECT_EQ(z[0], h.basis(2));
}

TEST(Centralizer, OutputIsAnnihilated) {
    LieAlgebra g = build_newstein();
    std::vector<AlgebraElement> gens = {g.basis(0), g.basis(10), g.basis(30)};
    for (const auto& v : centralizer(g, gens))
        for (const auto& x : gens) EXPECT_TRUE(g.bracket(x, v).is_zero());
}

TEST(NullSpace, SmallSystem) {
    // x0 + x1 = 0, x2 = 2 x1
    std::vector<SparseVector> eq = {{{0, Scalar(1)}, {1, Scalar(1)}}, {{1, Scalar(2)}, {2, Scalar(-1)}}};
    auto ns = null_space(eq, 3);
    ASSERT_EQ(ns.size(), 1u);
    for (const auto& e : eq) {
        Scalar s = 0;
        for (const auto& [i, x] : e) s += x * coefficient(ns[0], i);
        EXPECT_EQ(s, 0);
    }
}

TEST(Rank, ExactAgreesWithModular) {
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> idx(0, 29);
    std::vector<SparseVector> vs;
    for (int t = 0; t < 25; ++t) {
        SparseVector v;
        for (int k = 0; k < 4; ++k) v.emplace_back(idx(rng), random_rational(rng));
        normalize(v);
        vs.push_back(v);
    }
    // Force dependencies.
    for (int t = 0; t < 5; ++t) {
        SparseVector v = vs[t];
        axpy(v, Scalar(3, 7), vs[t + 5]);
        vs.push_back(v);
    }
    const auto r = exact_rank(vs);
    EXPECT_LE(r, 25u);
    for (auto p : default_primes()) EXPECT_EQ(modular_rank(vs, p), r);
}

TEST(Rank, PrimeDividingDenominatorIsReported) {
    std::vector<SparseVector> vs = {{{0, Scalar(1, 2147483647)}}};
    EXPECT_THROW(modular_rank(vs, 2147483647ULL), PrimeDividesDenominator);
}

TEST(Rank, DefaultPrimesArePrimeAndLarge) {
    for (auto p : default_primes()) {
        mpz_class z(static_cast<unsigned long>(p));
        EXPECT_GT(mpz_probab_prime_p(z.get_mpz_t(), 30), 0);
        EXPECT_GT(p, 1ULL << 20);
    }
}

TEST(AlgebraFile, RoundTrip) {
    for (const LieAlgebra& alg : {build_newstein(), build_newstein2(), build_heisenberg3(),
                                  build_extended(ExtensionClass{7})}) {
        const std::string text = algebra_to_json(alg);
        LieAlgebra back = algebra_from_json(text);
        EXPECT_EQ(back.name(), alg.name());
        EXPECT_EQ(back.labels(), alg.labels());
        EXPECT_EQ(back.constants(), alg.constants());
        EXPECT_EQ(algebra_to_json(back), text);
    }
}

TEST(AlgebraFile, RejectsBadDocuments) {
    EXPECT_THROW(algebra_from_json("{"), std::invalid_argument);
    EXPECT_THROW(algebra_from_json(R"({"name":"x","dimension":2,"labels":["a","b"],
        "constants":[{"i":1,"j":0,"terms":[]}]})"),
                 std::invalid_argument);
    EXPECT_THROW(algebra_from_json(R"({"name":"x","dimension":3,"labels":["a","b"],"constants":[]})"),
                 std::invalid_argument);
}

TEST(AlgebraFile, GoldenFixturesMatchConstructors) {
    const std::filesystem::path dir = NEWSTEIN_FIXTURE_DIR;
    const std::pair<const char*, LieAlgebra> cases[] = {
        {"newstein.json", build_newstein()},
        {"newstein2.json", build_newstein2()},
        {"newstein_ext7.json", build_extended(ExtensionClass{7})},
    };
    for (const auto& [file, alg] : cases) {
        LieAlgebra read = read_algebra_file((dir / file).string());
        EXPECT_EQ(read.constants(), alg.constants()) << file;
        EXPECT_EQ(read.labels(), alg.labels()) << file;
    }
}

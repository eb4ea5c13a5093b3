#include "newstein/algebras.hpp"
#include "newstein/induced_rep.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace newstein;

namespace {

const Cplx I(0, 1);

RepParams params(int two_s = 1, int two_j = 1) { return {1.3, 0.7, 1.1, 0.5, two_s, two_j}; }

// i Op(X) applied to a state function, with the derivative part taken by fourth-order differences
// along the field in the ten coordinates.
StateFunction apply_field(GeneratorField (*gen)(const BasisLabel&, const SamplePoint&, const RepParams&),
                          const BasisLabel& x, const StateFunction& f, const RepParams& p) {
    return [=](const SamplePoint& at) -> Eigen::VectorXcd {
        const GeneratorField g = gen(x, at, p);
        const double h = 1e-3;
        Eigen::VectorXcd d = Eigen::VectorXcd::Zero(p.two_j + 1);
        for (int k = 0; k < 10; ++k) {
            if (g.field(k) == 0.0) continue;
            auto shifted = [&](double e) {
                SamplePoint y = at;
                if (k < 4) y.xi(k) += e;
                else if (k < 7) y.eta(k - 4) += e;
                else y.z(k - 7) += e;
                return f(y);
            };
            d += g.field(k) * (-shifted(2 * h) + 8.0 * shifted(h) - 8.0 * shifted(-h) + shifted(-2 * h)) / (12 * h);
        }
        Eigen::VectorXcd v = f(at);
        Eigen::VectorXcd out = g.multiplier * v + d;
        if (g.spin.size() > 0) out += g.spin * v;
        return I * out;
    };
}

}  // namespace

TEST(Orbit, FreeMassIsNull) {
    const RepParams p = params();
    const SamplePoint b = base_point(p);
    EXPECT_LT((orbit_momentum(b.xi, b.eta, p) - Vec4(0, 0, p.lambda, p.lambda)).norm(), 1e-14);
    std::mt19937 rng(41);
    for (int t = 0; t < 100; ++t) {
        const SamplePoint x = random_sample_point(rng, p);
        EXPECT_TRUE(on_orbit(x, p));
        EXPECT_LE(std::abs(free_mass_check(x.xi, x.eta, p)), 1e-10 * p.lambda * p.lambda);
        EXPECT_GT(orbit_momentum(x.xi, x.eta, p)(3), 0);
    }
}

TEST(Iur, IdentityAndTranslationPhase) {
    const RepParams p = params();
    std::mt19937 rng(42);
    const auto f = random_test_functions(rng, p, 1)[0].function();
    const SamplePoint x = random_sample_point(rng, p);
    EXPECT_LT((iur_apply(GroupElement{}, f, p)(x) - f(x)).norm(), 1e-14);
    GroupElement g;
    g.tp = Vec4(0.3, -0.2, 0.5, 0.7);
    const double phase = x.xi.dot(metric_matrix() * g.tp);
    EXPECT_LT((iur_apply(g, f, p)(x) - std::exp(I * phase) * f(x)).norm(), 1e-14);
}

TEST(Iur, HomomorphismMasterOracle) {
    for (auto [two_s, two_j] : {std::pair{0, 0}, {1, 1}, {-2, 2}}) {
        const RepParams p = params(two_s, two_j);
        std::mt19937 rng(43);
        std::vector<SamplePoint> pts;
        for (int t = 0; t < 20; ++t) pts.push_back(random_sample_point(rng, p));
        const auto f = random_test_functions(rng, p, 1)[0].function();
        double worst = 0;
        for (int t = 0; t < 10; ++t)
            worst = std::max(worst, homomorphism_deviation(random_group_element(rng, 0.5, 0.5), random_group_element(rng, 0.5, 0.5), f, pts, p));
        EXPECT_LE(worst, 1e-7) << two_s << " " << two_j;
    }
}

TEST(Iur, LiteralCoordinateBreaksHomomorphism) {
    // Feeding the unsplit c to the phase: U(a) U(q) differs from U(aq) by exp(i <D, beta(a, q)>).
    const RepParams p = params(0, 0);
    std::mt19937 rng(44);
    const auto f = random_test_functions(rng, p, 1)[0].function();
    const SamplePoint x = random_sample_point(rng, p);
    GroupElement a, q;
    a.a(0, 0) = 0.7;
    q.q(0, 1) = 0.9;
    const GroupElement aq = compose(a, q);
    const Eigen::VectorXcd lhs = iur_apply(a, iur_apply(q, f, p), p)(x);
    EXPECT_LT((lhs - iur_apply(aq, f, p)(x)).norm(), 1e-12);
    const Eigen::VectorXcd literal = iur_apply(from_split(aq), f, p)(x);
    EXPECT_GT((lhs - literal).norm(), 1e-3);
}

TEST(Generators, TangentToSphere) {
    const RepParams p = params();
    std::mt19937 rng(45);
    for (int t = 0; t < 100; ++t) {
        const SamplePoint x = random_sample_point(rng, p);
        for (const auto& l : group_generator_labels()) {
            if (l.kind != BasisLabel::Kind::L && l.kind != BasisLabel::Kind::J) continue;
            auto normal = [&](const GeneratorField& g) {
                return std::abs(Eigen::Vector3cd(g.field.segment<3>(4)).dot(x.eta.cast<Cplx>()));
            };
            EXPECT_LE(normal(corrected_generator(l, x, p)), 1e-9) << l.name();
            // The printed L24 coefficients leave the sphere.
            if (l.name() != "L24") EXPECT_LE(normal(printed_generator(l, x, p)), 1e-9) << l.name();
            else if (t == 0) EXPECT_GT(normal(printed_generator(l, x, p)), 1e-6);
        }
    }
}

TEST(Generators, SingularChartThrows) {
    const RepParams p = params();
    SamplePoint x = base_point(p);
    x.eta = Vec3(0, 0, -p.lambda);
    EXPECT_THROW(printed_generator(BasisLabel::parse("L23"), x, p), SectionSingular);
}

TEST(Generators, OracleAgreesWhereThePrintedListDoes) {
    const RepParams p = params();
    const GeneratorReport rep = generator_oracle(p, 7, 4, 2);
    ASSERT_EQ(rep.rows.size(), 51u);
    for (const auto& r : rep.rows) {
        const auto kind = BasisLabel::parse(r.label).kind;
        const bool orbital = kind == BasisLabel::Kind::L || kind == BasisLabel::Kind::J;
        EXPECT_TRUE(r.consistent) << r.label;
        EXPECT_LE(r.corrected_deviation, 1e-7) << r.label;
        if (orbital) {
            EXPECT_TRUE(r.flagged) << r.label;
            EXPECT_FALSE(r.correction.empty());
        } else {
            EXPECT_LE(r.printed_deviation, 1e-7) << r.label;
        }
    }
    EXPECT_TRUE(rep.all_consistent());
}

TEST(Generators, RederivedCoefficientsMatchCorrectedForm) {
    const RepParams p = params();
    std::mt19937 rng(46);
    const SamplePoint x = random_sample_point(rng, p);
    for (const char* name : {"L24", "L12", "L34", "J23", "Q2_3", "T4"}) {
        const BasisLabel l = BasisLabel::parse(name);
        const GeneratorField a = rederived_generator(l, x, p), b = corrected_generator(l, x, p);
        EXPECT_LT(std::abs(a.multiplier - b.multiplier), 1e-7) << name;
        EXPECT_LT((a.field - b.field).cwiseAbs().maxCoeff(), 1e-7) << name;
        if (b.spin.size() > 0) EXPECT_LT((a.spin - b.spin).cwiseAbs().maxCoeff(), 1e-7) << name;
    }
}

TEST(Generators, FieldCommutatorsFollowStructureConstants) {
    // [rho L23, rho L31] = rho(-L12), i.e. [rho L23, rho L13] = rho(L12); likewise [rho J12, rho A1_mu] = -rho A2_mu.
    const RepParams p = params();
    std::mt19937 rng(47);
    const auto tests = random_test_functions(rng, p, 5);
    std::vector<SamplePoint> pts;
    for (int t = 0; t < 20; ++t) pts.push_back(random_sample_point(rng, p));
    auto defect = [&](auto gen, const char* x, const char* y, const char* z, double c) {
        double worst = 0;
        const BasisLabel lx = BasisLabel::parse(x), ly = BasisLabel::parse(y), lz = BasisLabel::parse(z);
        for (const auto& t : tests) {
            const StateFunction f = t.function();
            const StateFunction xy = apply_field(gen, lx, apply_field(gen, ly, f, p), p);
            const StateFunction yx = apply_field(gen, ly, apply_field(gen, lx, f, p), p);
            const StateFunction zf = apply_field(gen, lz, f, p);
            for (const auto& at : pts) worst = std::max(worst, (xy(at) - yx(at) - c * zf(at)).cwiseAbs().maxCoeff());
        }
        return worst;
    };
    EXPECT_LE(defect(&corrected_generator, "L23", "L13", "L12", 1), 1e-6);
    EXPECT_LE(defect(&corrected_generator, "J12", "A1_2", "A2_2", -1), 1e-6);
    EXPECT_LE(defect(&corrected_generator, "L14", "L24", "L12", 1), 1e-6);
    // The printed orbital sign violates the same relations.
    EXPECT_GT(defect(&printed_generator, "J12", "A1_2", "A2_2", -1), 1e-2);
    EXPECT_GT(defect(&printed_generator, "L23", "L13", "L12", 1), 1e-2);
}

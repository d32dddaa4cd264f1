#include "anyon/protocols.h"

#include <gtest/gtest.h>

#include <cmath>

#include "anyon/error.h"
#include "oracle.h"

using namespace anyon;

namespace {

constexpr double kTol = 1e-10;

StateVector ground(const StabilizerCell &c) {
    return ground_state_from_stabilizers(c.stabilizers);
}

double wrapped(double a) {
    double r = std::remainder(a, 2 * M_PI);
    return r <= -M_PI + 1e-12 ? r + 2 * M_PI : r;
}

}  // namespace

TEST(protocols, phase_angle_branch) {
    EXPECT_DOUBLE_EQ(phase_angle(-1, 0), M_PI);
    EXPECT_DOUBLE_EQ(phase_angle(-1, -0.0), M_PI);
    EXPECT_DOUBLE_EQ(phase_angle(1, 0), 0);
    EXPECT_DOUBLE_EQ(phase_angle(0, 1), M_PI / 2);
}

TEST(protocols, half_braid_examples) {
    ExperimentRecord p1 = half_braid_experiment(cell3(), "Path1");
    EXPECT_NEAR(p1.fidelities.at("g-e"), 1.0, kTol);
    EXPECT_NEAR(p1.fidelities.at("g+e"), 0.0, kTol);
    EXPECT_NEAR(std::abs(p1.phase), M_PI, kTol);
    ExperimentRecord p2 = half_braid_experiment(cell3(), "Path2");
    EXPECT_NEAR(p2.fidelities.at("g+e"), 1.0, kTol);
    EXPECT_NEAR(p2.fidelities.at("g-e"), 0.0, kTol);
    ExperimentRecord c4 = half_braid_experiment(cell4(), "Path1");
    EXPECT_NEAR(c4.fidelities.at("g-e"), 1.0, kTol);
    EXPECT_EQ(c4.metadata.at("cell"), "cell4");
    EXPECT_THROW(half_braid_experiment(cell4(), "Path9"), AnyonError);
}

TEST(protocols, half_braid_fidelities_sum_to_one) {
    for (const auto &c : {cell3(), cell4()}) {
        for (const auto &[name, path] : c.paths) {
            ExperimentRecord r = half_braid_experiment(c, name);
            EXPECT_NEAR(r.fidelities.at("g+e") + r.fidelities.at("g-e"), 1.0, kTol);
            for (const auto &[target, f] : r.fidelities) {
                EXPECT_GE(f, -kTol);
                EXPECT_LE(f, 1 + kTol);
            }
        }
    }
}

TEST(protocols, r_phase_examples) {
    ExperimentRecord p1 = r_phase_scattering(cell3(), "Path1");
    EXPECT_NEAR(p1.phase, M_PI, kTol);
    EXPECT_NEAR(*p1.sz, -1.0, kTol);
    EXPECT_NEAR(*p1.sy, 0.0, kTol);
    ExperimentRecord p2 = r_phase_scattering(cell3(), "Path2");
    EXPECT_NEAR(p2.phase, 0.0, kTol);
    EXPECT_NEAR(*p2.sz, 1.0, kTol);
    EXPECT_NEAR(r_phase_scattering(cell4(), "Path1").phase, M_PI, kTol);
    EXPECT_NEAR(r_phase_scattering(cell4(), "Path2").phase, 0.0, kTol);
}

TEST(protocols, r_phase_matches_direct_overlap) {
    for (const auto &c : {cell3(), cell4()}) {
        StateVector g = ground(c);
        StateVector e = apply_pauli(g, c.excitation);
        for (const auto &[name, path] : c.paths) {
            ExperimentRecord r = r_phase_scattering(c, name);
            PauliOperator u = c.path_operator(name);
            Complex ratio = matrix_element(e, u) / matrix_element(g, u);
            EXPECT_NEAR(wrapped(r.phase - std::arg(ratio)), 0.0, kTol) << c.name << " " << name;
            EXPECT_LE((*r.sz) * (*r.sz) + (*r.sy) * (*r.sy), 1 + kTol);
            EXPECT_DOUBLE_EQ(r.phase, phase_angle(*r.sz, *r.sy));
        }
    }
}

TEST(protocols, scattering_readout_matches_overlap_oracle) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; trial++) {
        std::size_t n = 1 + trial % 5;
        StateVector phi = oracle::random_state(rng, n);
        std::vector<PauliOperator> ops = {oracle::random_pauli(rng, n), oracle::random_pauli(rng, n)};
        // U = ops[1] ops[0]; <phi|U|phi> via the dense oracle.
        Eigen::VectorXcd v = oracle::to_eigen(phi);
        Complex want = v.dot(oracle::dense_pauli(ops[1]) * (oracle::dense_pauli(ops[0]) * v));
        AncillaReadout r = scattering_readout(phi, ops);
        EXPECT_NEAR(r.sz, want.real(), 1e-12);
        EXPECT_NEAR(r.sy, want.imag(), 1e-12);
    }
}

TEST(protocols, injected_phase_is_recovered) {
    std::mt19937_64 rng(29);
    const double alphas[] = {0, M_PI / 2, -M_PI / 2, 2 * M_PI / 3, -2 * M_PI / 3, M_PI, -M_PI};
    for (int trial = 0; trial < 20; trial++) {
        std::size_t n = 1 + trial % 4;
        PauliOperator u = oracle::random_pauli(rng, n);
        // Eigenstate of the hermitian part of U, so <phi|U|phi> is a unit phase.
        PauliOperator h = u.is_hermitian() ? u : u.times_i(1);
        if (h == PauliOperator::identity(n) || h == -PauliOperator::identity(n)) {
            continue;
        }
        StateVector phi = ground_state_from_stabilizers(std::vector{h});
        Complex base = matrix_element(phi, u);
        ASSERT_NEAR(std::abs(base), 1.0, 1e-12);
        for (double alpha : alphas) {
            AncillaReadout r = scattering_readout(phi, {u}, alpha);
            EXPECT_NEAR(wrapped(r.phase - std::arg(base) - alpha), 0.0, kTol) << u.str() << " " << alpha;
            EXPECT_NEAR(r.sz * r.sz + r.sy * r.sy, 1.0, kTol);
        }
    }
    for (double alpha : alphas) {
        AncillaReadout r = scattering_readout(StateVector(1), {PauliOperator::identity(1)}, alpha);
        double want = alpha == -M_PI ? M_PI : alpha;
        EXPECT_NEAR(r.phase, want, kTol) << alpha;
    }
}

TEST(protocols, f_phase_examples) {
    ExperimentRecord f = f_phase_scattering(cell3());
    EXPECT_NEAR(f.phase, 0.0, kTol);
    EXPECT_NEAR(*f.sz, 1.0, kTol);

    StabilizerCell same = cell3();
    same.fusion_ops["A2"] = same.fusion_ops.at("A1");
    ExperimentRecord s = f_phase_scattering(same);
    EXPECT_NEAR(s.phase, 0.0, kTol);
    EXPECT_NEAR(*s.sz, 1.0, kTol);

    StabilizerCell flipped = cell3();
    flipped.fusion_ops["A2"] = -flipped.fusion_ops.at("A2");
    EXPECT_NEAR(f_phase_scattering(flipped).phase, M_PI, kTol);

    StabilizerCell quarter = cell3();
    quarter.fusion_ops["A2"] = quarter.fusion_ops.at("A2").times_i(1);
    EXPECT_NEAR(f_phase_scattering(quarter).phase, M_PI / 2, kTol);

    EXPECT_THROW(f_phase_scattering(cell4()), AnyonError);
}

TEST(protocols, measure_toric_table) {
    MeasuredRTable t = measure_r_table(toric_code_model(), {"1", "m"}, {"1", "e"}, toric_cellset());
    EXPECT_TRUE(t.pass);
    EXPECT_LT(t.max_deviation, kMeasuredRTolerance);
    EXPECT_LT(std::abs(t.measured.at({"m", "e"}) + 1.0), kTol);
    AnyonModel ref = toric_code_model();
    ASSERT_EQ(t.assembled.size(), 16u);
    for (const auto &[key, value] : t.assembled) {
        std::size_t a = ref.index_of(key.first);
        std::size_t b = ref.index_of(key.second);
        EXPECT_LT(std::abs(value - ref.R(a, b, ref.fuse(a, b))), kTol);
    }
    ComplexMatrix t_want(4, 4);
    t_want(0, 0) = t_want(1, 1) = t_want(2, 2) = 1;
    t_want(3, 3) = -1;
    EXPECT_LT(t.modular.t.max_abs_diff(t_want), kTol);
    EXPECT_LT(t.modular.s.max_abs_diff(s_matrix(ref)), kTol);
}

TEST(protocols, measured_model_satisfies_core_invariants) {
    MeasuredRTable t = measure_r_table(toric_code_model(), {"1", "m"}, {"1", "e"}, toric_cellset());
    EXPECT_TRUE(validate_model(t.model).accepted());
    EXPECT_TRUE(verlinde_check(t.model).matches_model);
    for (std::size_t a = 0; a < t.model.size(); a++) {
        for (std::size_t b = 0; b < t.model.size(); b++) {
            EXPECT_LT(std::abs(monodromy(t.model, a, b) - monodromy(t.model, b, a)), 1e-12);
        }
    }
}

TEST(protocols, measure_trivial_table) {
    MeasuredRTable t = measure_r_table(trivial_model(), {"1"}, {"1"}, {});
    EXPECT_TRUE(t.pass);
    ASSERT_EQ(t.assembled.size(), 1u);
    EXPECT_EQ(t.assembled.at({"1", "1"}), Complex(1, 0));
}

TEST(protocols, measure_requires_cells) {
    EXPECT_THROW(measure_r_table(toric_code_model(), {"1", "m"}, {"1", "e"}, {}), AnyonError);
}

TEST(protocols, corrupted_cell_fails_at_the_pair) {
    CellSet cells = toric_cellset();
    cells.at({"m", "e"}).path = "Path2";
    MeasuredRTable t = measure_r_table(toric_code_model(), {"1", "m"}, {"1", "e"}, cells);
    EXPECT_FALSE(t.pass);
    ASSERT_TRUE(t.worst.has_value());
    EXPECT_EQ(*t.worst, (std::pair<std::string, std::string>{"m", "e"}));
}

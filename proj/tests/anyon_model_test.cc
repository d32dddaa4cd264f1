#include "anyon/anyon_model.h"

#include <gtest/gtest.h>

#include <cmath>
#include <regex>

#include "anyon/error.h"
#include "anyon/modular_data.h"

using namespace anyon;

namespace {

const Complex kOmega = std::polar(1.0, 2 * M_PI / 3);

Complex omega_pow(int k) {
    return std::polar(1.0, 2 * M_PI * (((k % 3) + 3) % 3) / 3);
}

/// (flux, charge) parsed from a D(Z3) label such as "e2m1".
std::pair<int, int> flux_charge(const std::string &label) {
    std::smatch m;
    int flux = 0;
    int charge = 0;
    if (std::regex_search(label, m, std::regex("m(\\d)"))) {
        flux = std::stoi(m[1]);
    }
    if (std::regex_search(label, m, std::regex("e(\\d)"))) {
        charge = std::stoi(m[1]);
    }
    return {flux, charge};
}

AnyonModel fibonacci_ring() {
    AnyonModel m = AnyonModel::with_labels({"1", "tau"});
    m.set_N(0, 0, 0, 1);
    m.set_N(0, 1, 1, 1);
    m.set_N(1, 0, 1, 1);
    m.set_N(1, 1, 0, 1);
    m.set_N(1, 1, 1, 1);
    m.dual = {0, 1};
    return m;
}

double max_dev(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a.max_abs_diff(b);
}

}  // namespace

TEST(anyon_model, builtins_validate) {
    for (const auto &m : {toric_code_model(), dz3_model(), trivial_model()}) {
        ValidationReport r = validate_model(m);
        EXPECT_TRUE(r.accepted());
        EXPECT_EQ(r.checks.size(), 7u);
    }
}

TEST(anyon_model, missing_dual_channel_fails_dual_pairing) {
    AnyonModel m = toric_code_model();
    std::size_t e = m.index_of("e");
    m.set_N(e, e, 0, 0);
    ValidationReport r = validate_model(m);
    EXPECT_FALSE(r.accepted());
    ASSERT_NE(r.find("dual_pairing"), nullptr);
    EXPECT_FALSE(r.find("dual_pairing")->passed);
    EXPECT_FALSE(r.has_structural_failure());
    EXPECT_THROW(require_valid(m), AnyonError);
}

TEST(anyon_model, non_unit_r_fails_unit_modulus) {
    AnyonModel m = toric_code_model();
    m.r_data[RKey{m.index_of("m"), m.index_of("e"), m.index_of("eps")}] = 2.0;
    ValidationReport r = validate_model(m);
    EXPECT_FALSE(r.find("r_unit_modulus")->passed);
    EXPECT_TRUE(r.find("dual_pairing")->passed);
    EXPECT_FALSE(r.accepted());
}

TEST(anyon_model, malformed_tensor_is_structural) {
    AnyonModel m = toric_code_model();
    m.fusion.pop_back();
    ValidationReport r = validate_model(m);
    EXPECT_TRUE(r.has_structural_failure());
    EXPECT_FALSE(r.accepted());
}

TEST(anyon_model, missing_r_entry_fails_completeness) {
    AnyonModel m = toric_code_model();
    m.r_data.erase(RKey{m.index_of("e"), m.index_of("m"), m.index_of("eps")});
    EXPECT_FALSE(validate_model(m).find("r_complete")->passed);
    try {
        m.R(m.index_of("e"), m.index_of("m"), m.index_of("eps"));
        FAIL();
    } catch (const AnyonError &e) {
        EXPECT_EQ(e.kind(), ErrorKind::incomplete_model);
    }
}

TEST(anyon_model, toric_r_data) {
    AnyonModel m = toric_code_model();
    auto i = [&](const char *l) {
        return m.index_of(l);
    };
    EXPECT_EQ(m.R(i("m"), i("e"), i("eps")), Complex(-1, 0));
    EXPECT_EQ(m.R(i("e"), i("m"), i("eps")), Complex(1, 0));
    EXPECT_EQ(m.R(i("eps"), i("eps"), i("1")), Complex(-1, 0));
    for (std::size_t x = 0; x < m.size(); x++) {
        EXPECT_EQ(m.R(0, x, x), Complex(1, 0));
    }
}

TEST(anyon_model, dz3_r_data) {
    AnyonModel m = dz3_model();
    auto i = [&](const char *l) {
        return m.index_of(l);
    };
    EXPECT_LT(std::abs(m.R(i("m1"), i("e1"), i("e1m1")) - kOmega), 1e-15);
    EXPECT_LT(std::abs(m.R(i("e1"), i("m1"), i("e1m1")) - 1.0), 1e-15);
    EXPECT_LT(std::abs(m.R(i("e1"), i("e2"), i("1")) - 1.0), 1e-15);
    EXPECT_LT(std::abs(m.R(i("m2"), i("e2"), i("e2m2")) - kOmega), 1e-15);
    EXPECT_LT(std::abs(m.R(i("m1"), i("e2"), i("e2m1")) - std::conj(kOmega)), 1e-15);
}

TEST(anyon_model, quantum_dimensions) {
    auto t = quantum_dimensions(toric_code_model());
    EXPECT_EQ(t.dims, std::vector<double>(4, 1.0));
    EXPECT_DOUBLE_EQ(t.total, 2.0);
    EXPECT_DOUBLE_EQ(quantum_dimensions(trivial_model()).total, 1.0);
    EXPECT_DOUBLE_EQ(quantum_dimensions(dz3_model()).total, 3.0);
}

TEST(anyon_model, power_iteration_on_non_abelian_ring) {
    auto q = quantum_dimensions(fibonacci_ring());
    const double golden = (1 + std::sqrt(5.0)) / 2;
    EXPECT_NEAR(q.dims[1], golden, 1e-12);
    EXPECT_NEAR(q.total, std::sqrt(1 + golden * golden), 1e-12);
    EXPECT_FALSE(validate_model(fibonacci_ring()).find("abelian")->passed);
}

TEST(anyon_model, topological_spins) {
    AnyonModel t = toric_code_model();
    EXPECT_EQ(topological_spin(t, t.index_of("eps")), Complex(-1, 0));
    EXPECT_EQ(topological_spin(t, 0), Complex(1, 0));
    AnyonModel d = dz3_model();
    // theta = R_{a,a*}: flux 1 braided past charge 2.
    EXPECT_LT(std::abs(topological_spin(d, d.index_of("e1m1")) - std::conj(kOmega)), 1e-12);
}

TEST(anyon_model, toric_s_matrix) {
    ComplexMatrix want(4, 4);
    const int signs[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            want(r, c) = 0.5 * signs[r][c];
        }
    }
    EXPECT_LT(max_dev(s_matrix(toric_code_model()), want), 1e-15);
    EXPECT_EQ(max_dev(s_matrix_from_spins(toric_code_model()), s_matrix(toric_code_model())), 0.0);
}

TEST(anyon_model, trivial_modular_data) {
    EXPECT_EQ(s_matrix(trivial_model())(0, 0), Complex(1, 0));
    EXPECT_EQ(s_matrix_from_spins(trivial_model())(0, 0), Complex(1, 0));
    EXPECT_EQ(t_matrix(trivial_model())(0, 0), Complex(1, 0));
}

TEST(anyon_model, dz3_s_and_t_match_direct_summation) {
    AnyonModel m = dz3_model();
    ComplexMatrix s = s_matrix(m);
    ComplexMatrix t = t_matrix(m);
    for (std::size_t x = 0; x < m.size(); x++) {
        auto [a, b] = flux_charge(m.labels[x]);
        for (std::size_t y = 0; y < m.size(); y++) {
            auto [a2, b2] = flux_charge(m.labels[y]);
            EXPECT_LT(std::abs(s(x, y) - omega_pow(a * b2 + a2 * b) / 3.0), 1e-12) << m.labels[x] << m.labels[y];
            Complex want_t = x == y ? omega_pow(-a * b) : Complex(0, 0);
            EXPECT_LT(std::abs(t(x, y) - want_t), 1e-12);
        }
    }
    EXPECT_LT(max_dev(s_matrix_from_spins(m), s), 1e-12);
}

TEST(anyon_model, toric_t_matrix) {
    ComplexMatrix t = t_matrix(toric_code_model());
    const double diag[4] = {1, 1, 1, -1};
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            EXPECT_EQ(t(r, c), r == c ? Complex(diag[r], 0) : Complex(0, 0));
        }
    }
}

TEST(anyon_model, monodromy_examples) {
    AnyonModel t = toric_code_model();
    EXPECT_EQ(monodromy(t, t.index_of("m"), t.index_of("e")), Complex(-1, 0));
    AnyonModel d = dz3_model();
    EXPECT_LT(std::abs(monodromy(d, d.index_of("m1"), d.index_of("e1")) - kOmega), 1e-12);
    for (const auto &m : {t, d}) {
        for (std::size_t b = 0; b < m.size(); b++) {
            EXPECT_LT(std::abs(monodromy(m, 0, b) - 1.0), 1e-12);
            for (std::size_t a = 0; a < m.size(); a++) {
                EXPECT_LT(std::abs(monodromy(m, a, b) - monodromy(m, b, a)), 1e-12);
                Complex ribbon = topological_spin(m, a) * topological_spin(m, b) / topological_spin(m, m.fuse(a, b));
                EXPECT_LT(std::abs(monodromy(m, a, b) - ribbon), 1e-12);
            }
        }
    }
}

TEST(anyon_model, monodromy_rejects_inconsistent_ribbon) {
    AnyonModel t = toric_code_model();
    t.r_data[RKey{t.index_of("e"), t.index_of("m"), t.index_of("eps")}] = Complex(0, 1);
    try {
        monodromy(t, t.index_of("e"), t.index_of("m"));
        FAIL();
    } catch (const AnyonError &e) {
        EXPECT_EQ(e.kind(), ErrorKind::consistency_failure);
    }
}

TEST(anyon_model, verlinde_round_trips_fusion) {
    for (const auto &m : {toric_code_model(), dz3_model(), trivial_model()}) {
        VerlindeResult v = verlinde_check(m);
        EXPECT_TRUE(v.matches_model);
        EXPECT_EQ(v.fusion, m.fusion);
        EXPECT_LT(v.max_deviation, 1e-12);
    }
    AnyonModel t = toric_code_model();
    VerlindeResult v = verlinde_check(t);
    std::size_t n = t.size();
    std::size_t e = t.index_of("e");
    std::size_t m = t.index_of("m");
    EXPECT_EQ(v.fusion[(e * n + e) * n + 0], 1);
    EXPECT_EQ(v.fusion[(e * n + m) * n + 0], 0);
}

TEST(anyon_model, s_is_unitary_and_symmetric) {
    for (const auto &m : {toric_code_model(), dz3_model()}) {
        ComplexMatrix s = s_matrix(m);
        EXPECT_LT(max_dev(s * s.adjoint(), ComplexMatrix::identity(m.size())), 1e-12);
        for (std::size_t a = 0; a < m.size(); a++) {
            for (std::size_t b = 0; b < m.size(); b++) {
                EXPECT_LT(std::abs(s(a, b) - s(b, a)), 1e-12);
            }
        }
    }
}

TEST(anyon_model, fuse_and_dual) {
    AnyonModel t = toric_code_model();
    EXPECT_EQ(t.fuse(t.index_of("e"), t.index_of("m")), t.index_of("eps"));
    EXPECT_EQ(t.dual_of(t.index_of("eps")), t.index_of("eps"));
    AnyonModel d = dz3_model();
    EXPECT_EQ(d.dual_of(d.index_of("e1m2")), d.index_of("e2m1"));
    try {
        fibonacci_ring().fuse(1, 1);
        FAIL();
    } catch (const AnyonError &e) {
        EXPECT_EQ(e.kind(), ErrorKind::unsupported_model);
    }
}

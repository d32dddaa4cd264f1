#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "anyon/anyon_model.h"
#include "anyon/matrix.h"

namespace anyon {

struct QuantumDimensions {
    std::vector<double> dims;
    /// sqrt(sum_a d_a^2).
    double total = 0;
};

/// Perron-Frobenius dimensions of the fusion matrices (N_a)_{bc}. Abelian
/// models return all ones; otherwise a power iteration on N_a + I is run with
/// the caps below and numerical_failure is raised if it does not settle.
QuantumDimensions quantum_dimensions(const AnyonModel &model);

inline constexpr int kPowerIterationCap = 100000;
inline constexpr double kPowerIterationTolerance = 1e-13;

/// theta_a = R^1_{a a*} / (d_a F^a_{a a* a}).
Complex topological_spin(const AnyonModel &model, std::size_t a);

/// S_ab = (1/D) sum_c Tr(R^c_{ba} R^c_{ab}) d_c.
ComplexMatrix s_matrix(const AnyonModel &model);

/// S_ab = (1/D) sum_c N^c_{ab} (theta_a theta_b / theta_c) d_c.
ComplexMatrix s_matrix_from_spins(const AnyonModel &model);

/// diag(theta_a) in label order.
ComplexMatrix t_matrix(const AnyonModel &model);

/// Double braiding R_{ba} R_{ab} in the unique channel c = a x b. Raises
/// unsupported_model for non-Abelian pairs and consistency_failure when the
/// result disagrees with theta_a theta_b / theta_c.
Complex monodromy(const AnyonModel &model, std::size_t a, std::size_t b);

struct VerlindeResult {
    /// Rounded N[a][b][c], flattened like AnyonModel::fusion.
    std::vector<int> fusion;
    double max_deviation = 0;
    /// Channel with the largest pre-rounding deviation.
    std::array<std::size_t, 3> worst{0, 0, 0};
    bool matches_model = false;
};

inline constexpr double kVerlindeTolerance = 1e-6;

/// N_ab^c = sum_d S_ad S_bd conj(S_cd) / S_1d evaluated from s_matrix. Raises
/// consistency_failure naming the channel if any value is further than
/// kVerlindeTolerance from an integer.
VerlindeResult verlinde_check(const AnyonModel &model);

struct ModularData {
    QuantumDimensions dims;
    std::vector<Complex> spins;
    ComplexMatrix s;
    ComplexMatrix t;
};

ModularData modular_data(const AnyonModel &model);

}  // namespace anyon

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anyon/anyon_model.h"
#include "anyon/lattice.h"
#include "anyon/matrix.h"
#include "anyon/modular_data.h"
#include "anyon/state_vector.h"

namespace anyon {

/// Outcome of one simulated protocol run.
struct ExperimentRecord {
    std::string name;
    /// Ancilla <sigma_z>, <sigma_y>; absent for ancilla-free protocols.
    std::optional<double> sz;
    std::optional<double> sy;
    /// atan2(sy, sz) folded into (-pi, pi].
    double phase = 0;
    std::map<std::string, double> fidelities;
    std::map<std::string, std::string> metadata;
};

/// atan2 with the branch cut placed so that -1 reports as +pi.
double phase_angle(double sz, double sy);

/// Ancilla readout of a scattering circuit: the ancilla (appended as the
/// highest qubit) is put in |+>, `controlled` is applied under its control,
/// then H and Z rotate it so that <sigma_z> = Re<phi|U|phi> and
/// <sigma_y> = Im<phi|U|phi>, U = product of the operators in application
/// order.
struct AncillaReadout {
    double sz = 0;
    double sy = 0;
    double phase = 0;
};
AncillaReadout scattering_readout(const StateVector &initial, const std::vector<PauliOperator> &controlled,
                                  double injected_phase = 0);

/// Prepares (|g> + |e>)/sqrt2 with |e> = excitation |g>, drags m along the
/// path one sigma_x at a time and records the fidelity against
/// "g+e" = (|g> + |e>)/sqrt2 and "g-e" = (|g> - |e>)/sqrt2.
ExperimentRecord half_braid_experiment(const StabilizerCell &cell, const std::string &path);

/// Scattering measurement of the phase the path picks up on the excited
/// state |e>.
ExperimentRecord r_phase_scattering(const StabilizerCell &cell, const std::string &path);

/// Scattering measurement of the overlap between the two fusion orders,
/// controlled-A2 followed by controlled-A1^dagger on the ground state. The
/// F value is exp(i phase).
ExperimentRecord f_phase_scattering(const StabilizerCell &cell);

/// Which cell and path realise the half braiding of condensed anyon `first`
/// around boundary excitation `second`.
struct CellPath {
    StabilizerCell cell;
    std::string path;
};
using CellSet = std::map<std::pair<std::string, std::string>, CellPath>;

/// cell3 / Path1 for the single toric-code pair (m, e).
CellSet toric_cellset();

struct MeasuredRTable {
    std::vector<std::string> condensed;
    std::vector<std::string> boundary;
    /// Phases from the scattering runs, keyed (a_i, b_k).
    std::map<std::pair<std::string, std::string>, Complex> measured;
    std::vector<ExperimentRecord> records;
    /// Full R table rebuilt from `measured`.
    std::map<std::pair<std::string, std::string>, Complex> assembled;
    /// Reference model with its braiding replaced by `assembled`.
    AnyonModel model;
    ModularData modular;
    double max_deviation = 0;
    /// Pair with the largest deviation from the reference, if any deviates.
    std::optional<std::pair<std::string, std::string>> worst;
    bool pass = false;
};

inline constexpr double kMeasuredRTolerance = 1e-10;

/// Runs r_phase_scattering for every nontrivial (condensed, boundary) pair,
/// reassembles the full R table, derives S and T from it and compares with
/// the reference model. Throws invalid_argument if a required pair has no
/// cell.
MeasuredRTable measure_r_table(const AnyonModel &reference, const std::vector<std::string> &condensed,
                               const std::vector<std::string> &boundary, const CellSet &cells);

}  // namespace anyon

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "anyon/anyon_model.h"
#include "anyon/matrix.h"
#include "anyon/phase.h"

namespace anyon {

/// Ordered pair (moving anyon, fixed anyon) -> R_{ab}.
using BraidingTable = std::map<std::pair<std::string, std::string>, Phase>;

/// Name of the Z_N x Z_N anyon with the given flux and charge: "1", "e<k>",
/// "m<k>", "e<j>m<k>"; for N = 2 the toric names "e", "m", "eps".
std::string cyclic_label(int n, int flux, int charge);

/// Z(Rep(Z_n)): labels (flux, charge) in lexicographic order, componentwise
/// fusion mod n, R_{(a,b),(a',b')} = w^{a b'} with w = exp(2 pi i / n),
/// trivial F. Raises invalid_argument for n < 1.
AnyonModel center_of_cyclic(int n);

/// The same braiding as center_of_cyclic, kept as exact roots of unity.
BraidingTable center_braiding(int n);

/// Replaces every R entry of `base` by the table value for the labelled pair.
AnyonModel with_braiding(AnyonModel base, const BraidingTable &table);

enum class Boundary { smooth, rough };

std::string boundary_name(Boundary b);
/// Accepts "smooth"/"white" and "rough"/"blue".
Boundary parse_boundary(const std::string &text);

struct HalfBraiding {
    std::string around;
    Phase phase;
};

/// A bulk anyon seen from a gapped boundary: the boundary excitation it
/// becomes, plus the phase it picks up when dragged along a semicircle
/// around each boundary excitation.
struct BulkAnyonTriple {
    std::string bulk_label;
    Boundary boundary = Boundary::smooth;
    std::size_t boundary_index = 0;
    std::string boundary_label;
    /// One entry per boundary excitation, in boundary order (Z_n element k at
    /// position k).
    std::vector<HalfBraiding> half_braiding;

    /// Throws invalid_argument if `boundary_excitation` is not listed.
    Phase around(const std::string &boundary_excitation) const;
};

/// All n^2 bulk anyons of Z(Rep(Z_n)) as boundary excitations with half
/// braidings. On a smooth boundary fluxes condense and the boundary
/// excitations are the charges e_k; on a rough boundary charges condense
/// and the boundary excitations are the fluxes m_k. The rough semicircle
/// runs with the opposite orientation, so its phases are conjugated.
std::vector<BulkAnyonTriple> reconstruct_bulk(int n, Boundary boundary);

/// R_{ab} from half braidings: the left anyon moves around the boundary
/// excitation of the right one. Raises invalid_argument when the triples are
/// not closed under fusion or a half braiding is not a Z_n character.
BraidingTable braidings_from_half_braidings(const std::vector<BulkAnyonTriple> &triples);

struct CondensationMap {
    std::vector<std::string> condensed;
    std::map<std::string, std::string> bulk_to_boundary;
    /// Class representatives (first member in label order).
    std::vector<std::string> boundary_labels;
};

/// Quotient of the model by a condensable set. The set must contain the
/// vacuum, be closed under fusion and consist of mutually local bosons;
/// violations raise condensation_rejected naming the pair.
CondensationMap condense(const AnyonModel &model, const std::vector<std::string> &condensed);

struct PhaseTable {
    /// Condensed labels a_i and boundary labels b_k, vacuum excluded.
    std::vector<std::string> rows;
    std::vector<std::string> cols;
    /// values(i, k) = R_{a_i, b_k}.
    ComplexMatrix values;
    /// Full R table rebuilt from `values`.
    std::map<std::pair<std::string, std::string>, Complex> assembled;
    double max_deviation = 0;
    bool matches_model = false;
};

/// Rebuilds every R_{xy} from the nontrivial phases through
/// R_{(a_i b_k),(a_j b_l)} = R_{a_i, b_l}. `phases(i, k)` holds R_{a_i, b_k}
/// for the non-vacuum members; raises invalid_decomposition if a label is
/// not uniquely a_i x b_k.
std::map<std::pair<std::string, std::string>, Complex> assemble_r_table(const AnyonModel &model,
                                                                       const std::vector<std::string> &condensed,
                                                                       const std::vector<std::string> &boundary,
                                                                       const ComplexMatrix &phases);

/// The (|condensed|-1) x (|boundary|-1) table of phases that must be measured,
/// read from the model, with the reassembled R table checked against it.
PhaseTable qdm_phase_table(const AnyonModel &model, const std::vector<std::string> &condensed,
                           const std::vector<std::string> &boundary);

}  // namespace anyon

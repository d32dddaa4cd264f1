#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace anyon {

using Complex = std::complex<double>;

/// Key of an R entry R^c_{ab}. The vertex index is the fusion-space basis
/// label; it is always 1 for multiplicity-free models.
struct RKey {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t c = 0;
    unsigned vertex = 1;
    auto operator<=>(const RKey &) const = default;
};

/// Key of an F entry F^d_{abc} in number form.
struct FKey {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t c = 0;
    std::size_t d = 0;
    unsigned vertex = 1;
    auto operator<=>(const FKey &) const = default;
};

/// Fusion, braiding and associator data of an anyon model. Anyons are
/// addressed by their index in `labels`; index 0 is the vacuum "1".
///
/// The struct is plain data so malformed models can be represented and
/// reported by validate_model rather than rejected at construction.
struct AnyonModel {
    std::vector<std::string> labels;
    /// dual[a] = a*; nullopt marks a missing entry.
    std::vector<std::optional<std::size_t>> dual;
    /// N[a][b][c] flattened as (a * n + b) * n + c.
    std::vector<int> fusion;
    std::map<RKey, Complex> r_data;
    std::map<FKey, Complex> f_data;

    /// Empty model with n labels, zero fusion tensor and no dual entries.
    static AnyonModel with_labels(std::vector<std::string> labels);

    std::size_t size() const noexcept {
        return labels.size();
    }
    /// Throws invalid_argument for unknown labels.
    std::size_t index_of(const std::string &label) const;
    std::optional<std::size_t> find(const std::string &label) const;

    int N(std::size_t a, std::size_t b, std::size_t c) const;
    void set_N(std::size_t a, std::size_t b, std::size_t c, int value);

    /// The unique c with N[a][b][c] = 1. Throws unsupported_model if the
    /// pair has several (or no) fusion channels.
    std::size_t fuse(std::size_t a, std::size_t b) const;
    std::size_t dual_of(std::size_t a) const;

    bool is_abelian() const;

    /// Throws incomplete_model when the entry is absent.
    Complex R(std::size_t a, std::size_t b, std::size_t c) const;
    Complex F(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const;

    /// Sets F^d_{abc} = 1 for every admissible (a, b, c, d) that has no
    /// entry yet.
    void fill_trivial_f();
};

struct CheckResult {
    std::string name;
    bool passed = false;
    /// Shape-level failure (tensor sizes, out-of-range keys), as opposed to a
    /// violated physical axiom.
    bool structural = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool accepted() const;
    bool has_structural_failure() const;
    const CheckResult *find(const std::string &name) const;
};

/// Runs one named check per model invariant: structure, vacuum_unit,
/// dual_pairing, associativity, r_unit_modulus, r_complete, abelian.
/// Checks after a structural failure are reported as skipped (failed).
ValidationReport validate_model(const AnyonModel &model);

/// Throws consistency_failure with the first failing check unless accepted.
void require_valid(const AnyonModel &model);

/// Toric code {1, e, m, eps} with the braiding phases of the smooth-boundary
/// gauge: R_{m,e} = -1, R_{e,m} = +1, R_{eps,eps} = -1.
AnyonModel toric_code_model();

/// D(Z_3): {1, e1, e2, m1, m2, e1m1, e2m1, e1m2, e2m2}. Braiding phases are
/// generated from R_{m1,e1} = R_{m2,e2} = w, R_{m1,e2} = R_{m2,e1} = conj(w),
/// w = exp(2 pi i / 3), with trivial phases inside each class.
AnyonModel dz3_model();

/// Single vacuum anyon.
AnyonModel trivial_model();

}  // namespace anyon

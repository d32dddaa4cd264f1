#include "anyon/anyon_model.h"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "anyon/error.h"
#include "anyon/phase.h"

namespace anyon {

namespace {

constexpr double kUnitTolerance = 1e-10;

std::string triple_str(const AnyonModel &m, std::size_t a, std::size_t b, std::size_t c) {
    return "(" + m.labels[a] + "," + m.labels[b] + "," + m.labels[c] + ")";
}

}  // namespace

AnyonModel AnyonModel::with_labels(std::vector<std::string> labels) {
    AnyonModel m;
    std::size_t n = labels.size();
    m.labels = std::move(labels);
    m.dual.assign(n, std::nullopt);
    m.fusion.assign(n * n * n, 0);
    return m;
}

std::optional<std::size_t> AnyonModel::find(const std::string &label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - labels.begin());
}

std::size_t AnyonModel::index_of(const std::string &label) const {
    auto k = find(label);
    if (!k) {
        fail(ErrorKind::invalid_argument, "unknown anyon label '" + label + "'");
    }
    return *k;
}

int AnyonModel::N(std::size_t a, std::size_t b, std::size_t c) const {
    std::size_t n = size();
    return fusion.at((a * n + b) * n + c);
}

void AnyonModel::set_N(std::size_t a, std::size_t b, std::size_t c, int value) {
    std::size_t n = size();
    fusion.at((a * n + b) * n + c) = value;
}

std::size_t AnyonModel::fuse(std::size_t a, std::size_t b) const {
    std::optional<std::size_t> out;
    for (std::size_t c = 0; c < size(); c++) {
        int k = N(a, b, c);
        if (k == 0) {
            continue;
        }
        if (k != 1 || out) {
            fail(ErrorKind::unsupported_model,
                 labels[a] + " x " + labels[b] + " has more than one fusion channel");
        }
        out = c;
    }
    if (!out) {
        fail(ErrorKind::unsupported_model, labels[a] + " x " + labels[b] + " has no fusion channel");
    }
    return *out;
}

std::size_t AnyonModel::dual_of(std::size_t a) const {
    if (a >= dual.size() || !dual[a]) {
        fail(ErrorKind::incomplete_model, "no dual entry for '" + labels.at(a) + "'");
    }
    return *dual[a];
}

bool AnyonModel::is_abelian() const {
    for (std::size_t a = 0; a < size(); a++) {
        for (std::size_t b = 0; b < size(); b++) {
            int total = 0;
            for (std::size_t c = 0; c < size(); c++) {
                total += N(a, b, c);
            }
            if (total != 1) {
                return false;
            }
        }
    }
    return true;
}

Complex AnyonModel::R(std::size_t a, std::size_t b, std::size_t c) const {
    auto it = r_data.find(RKey{a, b, c});
    if (it == r_data.end()) {
        fail(ErrorKind::incomplete_model, "missing R entry " + triple_str(*this, a, b, c));
    }
    return it->second;
}

Complex AnyonModel::F(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    auto it = f_data.find(FKey{a, b, c, d});
    if (it == f_data.end()) {
        fail(ErrorKind::incomplete_model,
             "missing F entry (" + labels[a] + "," + labels[b] + "," + labels[c] + "," + labels[d] + ")");
    }
    return it->second;
}

void AnyonModel::fill_trivial_f() {
    std::size_t n = size();
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = 0; b < n; b++) {
            for (std::size_t c = 0; c < n; c++) {
                for (std::size_t d = 0; d < n; d++) {
                    int paths = 0;
                    for (std::size_t e = 0; e < n; e++) {
                        paths += N(a, b, e) * N(e, c, d);
                    }
                    if (paths > 0) {
                        f_data.try_emplace(FKey{a, b, c, d}, 1.0);
                    }
                }
            }
        }
    }
}

bool ValidationReport::accepted() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) {
        return c.passed;
    });
}

bool ValidationReport::has_structural_failure() const {
    return std::any_of(checks.begin(), checks.end(), [](const CheckResult &c) {
        return c.structural && !c.passed;
    });
}

const CheckResult *ValidationReport::find(const std::string &name) const {
    for (const auto &c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

namespace {

CheckResult check_structure(const AnyonModel &m) {
    CheckResult r{"structure", true, true, ""};
    std::size_t n = m.size();
    auto bad = [&](const std::string &why) {
        if (r.passed) {
            r.passed = false;
            r.detail = why;
        }
    };
    if (n == 0) {
        bad("no labels");
        return r;
    }
    if (m.labels[0] != "1") {
        bad("label 0 must be the vacuum \"1\", got '" + m.labels[0] + "'");
    }
    std::set<std::string> seen;
    for (const auto &l : m.labels) {
        if (!seen.insert(l).second) {
            bad("duplicate label '" + l + "'");
        }
    }
    if (m.fusion.size() != n * n * n) {
        bad("fusion tensor has " + std::to_string(m.fusion.size()) + " entries, expected " +
            std::to_string(n * n * n));
    }
    if (m.dual.size() != n) {
        bad("dual map has " + std::to_string(m.dual.size()) + " slots, expected " + std::to_string(n));
    }
    for (std::size_t a = 0; a < m.dual.size(); a++) {
        if (m.dual[a] && *m.dual[a] >= n) {
            bad("dual of '" + m.labels[a] + "' is out of range");
        }
    }
    for (int v : m.fusion) {
        if (v < 0) {
            bad("negative fusion multiplicity");
        }
    }
    for (const auto &[k, v] : m.r_data) {
        if (k.a >= n || k.b >= n || k.c >= n || k.vertex != 1) {
            bad("R entry key out of range");
        }
    }
    for (const auto &[k, v] : m.f_data) {
        if (k.a >= n || k.b >= n || k.c >= n || k.d >= n || k.vertex != 1) {
            bad("F entry key out of range");
        }
    }
    return r;
}

CheckResult check_vacuum(const AnyonModel &m) {
    CheckResult r{"vacuum_unit", true, false, ""};
    for (std::size_t a = 0; a < m.size() && r.passed; a++) {
        for (std::size_t c = 0; c < m.size(); c++) {
            int want = a == c ? 1 : 0;
            if (m.N(0, a, c) != want || m.N(a, 0, c) != want) {
                r.passed = false;
                r.detail = "1 x " + m.labels[a] + " does not fuse to exactly " + m.labels[a];
                break;
            }
        }
    }
    return r;
}

CheckResult check_dual(const AnyonModel &m) {
    CheckResult r{"dual_pairing", true, false, ""};
    for (std::size_t a = 0; a < m.size(); a++) {
        if (!m.dual[a]) {
            r.passed = false;
            r.detail = "missing dual entry for '" + m.labels[a] + "'";
            return r;
        }
        std::size_t ad = *m.dual[a];
        if (m.N(a, ad, 0) != 1) {
            r.passed = false;
            r.detail = "N[" + m.labels[a] + "][" + m.labels[ad] + "][1] = " + std::to_string(m.N(a, ad, 0)) +
                       ", expected 1";
            return r;
        }
    }
    return r;
}

CheckResult check_associativity(const AnyonModel &m) {
    CheckResult r{"associativity", true, false, ""};
    std::size_t n = m.size();
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = 0; b < n; b++) {
            for (std::size_t c = 0; c < n; c++) {
                for (std::size_t d = 0; d < n; d++) {
                    long left = 0;
                    long right = 0;
                    for (std::size_t e = 0; e < n; e++) {
                        left += static_cast<long>(m.N(a, b, e)) * m.N(e, c, d);
                        right += static_cast<long>(m.N(b, c, e)) * m.N(a, e, d);
                    }
                    if (left != right) {
                        r.passed = false;
                        r.detail = "(" + m.labels[a] + " x " + m.labels[b] + ") x " + m.labels[c] + " -> " +
                                   m.labels[d] + ": " + std::to_string(left) + " vs " + std::to_string(right);
                        return r;
                    }
                }
            }
        }
    }
    return r;
}

CheckResult check_r_modulus(const AnyonModel &m) {
    CheckResult r{"r_unit_modulus", true, false, ""};
    for (const auto &[k, v] : m.r_data) {
        if (std::abs(std::abs(v) - 1.0) > kUnitTolerance) {
            std::ostringstream ss;
            ss << "|R" << triple_str(m, k.a, k.b, k.c) << "| = " << std::abs(v);
            r.passed = false;
            r.detail = ss.str();
            return r;
        }
    }
    return r;
}

CheckResult check_r_complete(const AnyonModel &m) {
    CheckResult r{"r_complete", true, false, ""};
    for (std::size_t a = 0; a < m.size(); a++) {
        for (std::size_t b = 0; b < m.size(); b++) {
            for (std::size_t c = 0; c < m.size(); c++) {
                if (m.N(a, b, c) > 0 && !m.r_data.contains(RKey{a, b, c})) {
                    r.passed = false;
                    r.detail = "no R entry for channel " + triple_str(m, a, b, c);
                    return r;
                }
            }
        }
    }
    return r;
}

CheckResult check_abelian(const AnyonModel &m) {
    CheckResult r{"abelian", true, false, ""};
    for (std::size_t a = 0; a < m.size(); a++) {
        for (std::size_t b = 0; b < m.size(); b++) {
            int total = 0;
            for (std::size_t c = 0; c < m.size(); c++) {
                total += m.N(a, b, c);
            }
            if (total != 1) {
                r.passed = false;
                r.detail = m.labels[a] + " x " + m.labels[b] + " has " + std::to_string(total) + " outcomes";
                return r;
            }
        }
    }
    return r;
}

}  // namespace

ValidationReport validate_model(const AnyonModel &m) {
    ValidationReport report;
    report.checks.push_back(check_structure(m));
    const bool ok = report.checks.back().passed;
    using Check = CheckResult (*)(const AnyonModel &);
    const std::array<std::pair<const char *, Check>, 6> physics{{
        {"vacuum_unit", check_vacuum},
        {"dual_pairing", check_dual},
        {"associativity", check_associativity},
        {"r_unit_modulus", check_r_modulus},
        {"r_complete", check_r_complete},
        {"abelian", check_abelian},
    }};
    for (const auto &[name, fn] : physics) {
        if (ok) {
            report.checks.push_back(fn(m));
        } else {
            report.checks.push_back({name, false, false, "skipped: structural failure"});
        }
    }
    return report;
}

void require_valid(const AnyonModel &model) {
    auto report = validate_model(model);
    for (const auto &c : report.checks) {
        if (!c.passed) {
            fail(ErrorKind::consistency_failure, "model check '" + c.name + "' failed: " + c.detail);
        }
    }
}

namespace {

/// Z_n x Z_n group model with labels given per (flux, charge) pair and
/// braiding R_{(a,b),(a',b')} = phase(a, b').
template <typename PhaseFn>
AnyonModel abelian_pair_model(int n, const std::vector<std::string> &names, const std::vector<std::array<int, 2>> &fc,
                              PhaseFn phase) {
    AnyonModel m = AnyonModel::with_labels(names);
    std::size_t size = names.size();
    auto index_of_pair = [&](int flux, int charge) {
        for (std::size_t k = 0; k < size; k++) {
            if (fc[k][0] == flux && fc[k][1] == charge) {
                return k;
            }
        }
        fail(ErrorKind::invalid_argument, "incomplete label set");
    };
    for (std::size_t a = 0; a < size; a++) {
        m.dual[a] = index_of_pair((n - fc[a][0]) % n, (n - fc[a][1]) % n);
        for (std::size_t b = 0; b < size; b++) {
            std::size_t c = index_of_pair((fc[a][0] + fc[b][0]) % n, (fc[a][1] + fc[b][1]) % n);
            m.set_N(a, b, c, 1);
            m.r_data[RKey{a, b, c}] = phase(fc[a][0], fc[b][1]).to_complex();
        }
    }
    m.fill_trivial_f();
    return m;
}

}  // namespace

AnyonModel toric_code_model() {
    // m = (1,0) flux, e = (0,1) charge; R_{xy} = (-1)^{flux(x) charge(y)}.
    return abelian_pair_model(2, {"1", "e", "m", "eps"}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, [](int flux, int charge) {
        return Phase(flux * charge, 2);
    });
}

AnyonModel dz3_model() {
    // Measured-phase table theta[i][k] = R_{m_i, e_k}; rows/columns 0 are the
    // trivial class members. Every other R follows from
    // R_{(a_i b_k),(a_j b_l)} = theta[i][l].
    const Phase w = Phase::root_of_unity(1, 3);
    const Phase theta[3][3] = {
        {Phase::one(), Phase::one(), Phase::one()},
        {Phase::one(), w, w.conj()},
        {Phase::one(), w.conj(), w},
    };
    return abelian_pair_model(3, {"1", "e1", "e2", "m1", "m2", "e1m1", "e2m1", "e1m2", "e2m2"},
                              {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}},
                              [&](int flux, int charge) {
                                  return theta[flux][charge];
                              });
}

AnyonModel trivial_model() {
    AnyonModel m = AnyonModel::with_labels({"1"});
    m.dual[0] = 0;
    m.set_N(0, 0, 0, 1);
    m.r_data[RKey{0, 0, 0}] = 1.0;
    m.fill_trivial_f();
    return m;
}

}  // namespace anyon

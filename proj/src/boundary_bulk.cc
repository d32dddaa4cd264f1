#include "anyon/boundary_bulk.h"

#include <algorithm>
#include <set>

#include "anyon/error.h"
#include "anyon/modular_data.h"

namespace anyon {

namespace {

constexpr double kTrivialTolerance = 1e-10;

void require_order(int n) {
    if (n < 1) {
        fail(ErrorKind::invalid_argument, "cyclic order must be >= 1, got " + std::to_string(n));
    }
}

std::vector<std::size_t> indices_of(const AnyonModel &model, const std::vector<std::string> &names) {
    std::vector<std::size_t> out;
    for (const auto &name : names) {
        out.push_back(model.index_of(name));
    }
    return out;
}

/// Drops the vacuum; keeps the caller's order for the rest.
std::vector<std::size_t> without_vacuum(const std::vector<std::size_t> &xs) {
    std::vector<std::size_t> out;
    for (auto x : xs) {
        if (x != 0) {
            out.push_back(x);
        }
    }
    return out;
}

}  // namespace

std::string cyclic_label(int n, int flux, int charge) {
    if (flux == 0 && charge == 0) {
        return "1";
    }
    if (n == 2) {
        return flux == 0 ? "e" : charge == 0 ? "m" : "eps";
    }
    std::string out;
    if (charge != 0) {
        out += "e" + std::to_string(charge);
    }
    if (flux != 0) {
        out += "m" + std::to_string(flux);
    }
    return out;
}

BraidingTable center_braiding(int n) {
    require_order(n);
    BraidingTable table;
    for (int a = 0; a < n; a++) {
        for (int b = 0; b < n; b++) {
            for (int a2 = 0; a2 < n; a2++) {
                for (int b2 = 0; b2 < n; b2++) {
                    table[{cyclic_label(n, a, b), cyclic_label(n, a2, b2)}] = Phase(a * b2, n);
                }
            }
        }
    }
    return table;
}

AnyonModel center_of_cyclic(int n) {
    require_order(n);
    std::vector<std::string> names;
    for (int a = 0; a < n; a++) {
        for (int b = 0; b < n; b++) {
            names.push_back(cyclic_label(n, a, b));
        }
    }
    AnyonModel m = AnyonModel::with_labels(names);
    auto index = [n](int flux, int charge) {
        return static_cast<std::size_t>(((flux % n) + n) % n * n + ((charge % n) + n) % n);
    };
    for (int a = 0; a < n; a++) {
        for (int b = 0; b < n; b++) {
            std::size_t x = index(a, b);
            m.dual[x] = index(-a, -b);
            for (int a2 = 0; a2 < n; a2++) {
                for (int b2 = 0; b2 < n; b2++) {
                    std::size_t y = index(a2, b2);
                    std::size_t z = index(a + a2, b + b2);
                    m.set_N(x, y, z, 1);
                    m.r_data[RKey{x, y, z}] = Phase(a * b2, n).to_complex();
                }
            }
        }
    }
    m.fill_trivial_f();
    return m;
}

AnyonModel with_braiding(AnyonModel base, const BraidingTable &table) {
    for (auto &[key, value] : base.r_data) {
        auto it = table.find({base.labels[key.a], base.labels[key.b]});
        if (it == table.end()) {
            fail(ErrorKind::incomplete_model,
                 "braiding table has no entry for (" + base.labels[key.a] + "," + base.labels[key.b] + ")");
        }
        value = it->second.to_complex();
    }
    return base;
}

std::string boundary_name(Boundary b) {
    return b == Boundary::smooth ? "smooth" : "rough";
}

Boundary parse_boundary(const std::string &text) {
    if (text == "smooth" || text == "white") {
        return Boundary::smooth;
    }
    if (text == "rough" || text == "blue") {
        return Boundary::rough;
    }
    fail(ErrorKind::invalid_argument, "unknown boundary type '" + text + "' (expected smooth or rough)");
}

Phase BulkAnyonTriple::around(const std::string &boundary_excitation) const {
    for (const auto &h : half_braiding) {
        if (h.around == boundary_excitation) {
            return h.phase;
        }
    }
    fail(ErrorKind::invalid_argument, "'" + boundary_excitation + "' is not a boundary excitation of this triple");
}

std::vector<BulkAnyonTriple> reconstruct_bulk(int n, Boundary boundary) {
    require_order(n);
    const bool smooth = boundary == Boundary::smooth;
    std::vector<std::string> boundary_names;
    for (int k = 0; k < n; k++) {
        boundary_names.push_back(smooth ? cyclic_label(n, 0, k) : cyclic_label(n, k, 0));
    }
    std::vector<BulkAnyonTriple> out;
    for (int flux = 0; flux < n; flux++) {
        for (int charge = 0; charge < n; charge++) {
            BulkAnyonTriple t;
            t.bulk_label = cyclic_label(n, flux, charge);
            t.boundary = boundary;
            // The condensed component vanishes on the boundary; what remains
            // is the other component.
            t.boundary_index = static_cast<std::size_t>(smooth ? charge : flux);
            t.boundary_label = boundary_names[t.boundary_index];
            for (int k = 0; k < n; k++) {
                // Smooth: flux a winds around charge k, w^{a k}. Rough: charge b
                // winds around flux k with the reversed semicircle, w^{-b k}.
                Phase p = smooth ? Phase(flux * k, n) : Phase(-charge * k, n);
                t.half_braiding.push_back({boundary_names[k], p});
            }
            out.push_back(std::move(t));
        }
    }
    return out;
}

BraidingTable braidings_from_half_braidings(const std::vector<BulkAnyonTriple> &triples) {
    if (triples.empty()) {
        fail(ErrorKind::invalid_argument, "no triples");
    }
    const std::size_t n = triples.front().half_braiding.size();
    const Boundary boundary = triples.front().boundary;
    for (const auto &t : triples) {
        if (t.half_braiding.size() != n || t.boundary != boundary || t.boundary_index >= n) {
            fail(ErrorKind::invalid_argument, "triple '" + t.bulk_label + "' does not share the boundary theory");
        }
        if (!t.half_braiding[0].phase.is_one()) {
            fail(ErrorKind::invalid_argument, "triple '" + t.bulk_label + "' braids nontrivially around the vacuum");
        }
        for (std::size_t x = 0; x < n; x++) {
            for (std::size_t y = 0; y < n; y++) {
                if (t.half_braiding[(x + y) % n].phase != t.half_braiding[x].phase * t.half_braiding[y].phase) {
                    fail(ErrorKind::invalid_argument,
                         "half braiding of '" + t.bulk_label + "' is not a character of Z_" + std::to_string(n));
                }
            }
        }
    }
    auto same_data = [](const BulkAnyonTriple &u, std::size_t index, const std::vector<Phase> &phases) {
        if (u.boundary_index != index) {
            return false;
        }
        for (std::size_t k = 0; k < phases.size(); k++) {
            if (u.half_braiding[k].phase != phases[k]) {
                return false;
            }
        }
        return true;
    };
    for (const auto &x : triples) {
        for (const auto &y : triples) {
            std::size_t index = (x.boundary_index + y.boundary_index) % n;
            std::vector<Phase> phases;
            for (std::size_t k = 0; k < n; k++) {
                phases.push_back(x.half_braiding[k].phase * y.half_braiding[k].phase);
            }
            bool closed = std::any_of(triples.begin(), triples.end(), [&](const BulkAnyonTriple &u) {
                return same_data(u, index, phases);
            });
            if (!closed) {
                fail(ErrorKind::invalid_argument,
                     "fusion of '" + x.bulk_label + "' and '" + y.bulk_label + "' leaves the triple set");
            }
        }
    }

    BraidingTable table;
    for (const auto &x : triples) {
        for (const auto &y : triples) {
            // The fixed anyon only contributes its boundary excitation; any
            // condensed part of it is vacuum on the boundary.
            Phase p = x.half_braiding[y.boundary_index].phase;
            table[{x.bulk_label, y.bulk_label}] = boundary == Boundary::smooth ? p : p.conj();
        }
    }
    return table;
}

CondensationMap condense(const AnyonModel &model, const std::vector<std::string> &condensed) {
    std::vector<std::size_t> cond = indices_of(model, condensed);
    std::set<std::size_t> members(cond.begin(), cond.end());
    if (!members.contains(0)) {
        fail(ErrorKind::condensation_rejected, "condensed set must contain the vacuum");
    }
    auto reject = [&](std::size_t a, std::size_t b, const std::string &why) {
        fail(ErrorKind::condensation_rejected,
             "pair (" + model.labels[a] + "," + model.labels[b] + ") " + why);
    };
    for (auto a : cond) {
        if (std::abs(topological_spin(model, a) - 1.0) > kTrivialTolerance) {
            reject(a, a, "violates commutativity: theta_" + model.labels[a] + " != 1, so " + model.labels[a] +
                             " is not a boson");
        }
        for (auto b : cond) {
            if (!members.contains(model.fuse(a, b))) {
                reject(a, b, "fuses outside the condensed set");
            }
            if (std::abs(monodromy(model, a, b) - 1.0) > kTrivialTolerance) {
                reject(a, b, "has nontrivial mutual braiding");
            }
        }
    }

    CondensationMap out;
    out.condensed = condensed;
    std::vector<std::optional<std::size_t>> rep(model.size());
    for (std::size_t x = 0; x < model.size(); x++) {
        if (rep[x]) {
            continue;
        }
        out.boundary_labels.push_back(model.labels[x]);
        for (auto a : cond) {
            rep[model.fuse(x, a)] = x;
        }
    }
    for (std::size_t x = 0; x < model.size(); x++) {
        out.bulk_to_boundary[model.labels[x]] = model.labels[*rep[x]];
    }
    return out;
}

std::map<std::pair<std::string, std::string>, Complex> assemble_r_table(const AnyonModel &model,
                                                                       const std::vector<std::string> &condensed,
                                                                       const std::vector<std::string> &boundary,
                                                                       const ComplexMatrix &phases) {
    std::vector<std::size_t> cond = indices_of(model, condensed);
    std::vector<std::size_t> bnd = indices_of(model, boundary);
    std::vector<std::size_t> rows = without_vacuum(cond);
    std::vector<std::size_t> cols = without_vacuum(bnd);
    if (phases.rows() != rows.size() || phases.cols() != cols.size()) {
        fail(ErrorKind::dimension_mismatch, "phase table shape does not match the label sets");
    }
    if (std::find(cond.begin(), cond.end(), 0) == cond.end() || std::find(bnd.begin(), bnd.end(), 0) == bnd.end()) {
        fail(ErrorKind::invalid_decomposition, "condensed and boundary sets must both contain the vacuum");
    }
    // theta(i, l) with the vacuum row/column fixed to 1.
    auto theta = [&](std::size_t a, std::size_t b) -> Complex {
        if (a == 0 || b == 0) {
            return 1.0;
        }
        auto i = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), a) - rows.begin());
        auto k = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), b) - cols.begin());
        return phases(i, k);
    };

    std::vector<std::pair<std::size_t, std::size_t>> parts(model.size());
    for (std::size_t x = 0; x < model.size(); x++) {
        int found = 0;
        for (auto a : cond) {
            for (auto b : bnd) {
                if (model.N(a, b, x) == 1) {
                    parts[x] = {a, b};
                    found++;
                }
            }
        }
        if (found != 1) {
            fail(ErrorKind::invalid_decomposition,
                 "'" + model.labels[x] + "' has " + std::to_string(found) +
                     " decompositions as condensed x boundary (expected exactly 1)");
        }
    }
    std::map<std::pair<std::string, std::string>, Complex> out;
    for (std::size_t x = 0; x < model.size(); x++) {
        for (std::size_t y = 0; y < model.size(); y++) {
            out[{model.labels[x], model.labels[y]}] = theta(parts[x].first, parts[y].second);
        }
    }
    return out;
}

PhaseTable qdm_phase_table(const AnyonModel &model, const std::vector<std::string> &condensed,
                           const std::vector<std::string> &boundary) {
    if (!model.is_abelian()) {
        fail(ErrorKind::unsupported_model, "phase tables are defined for Abelian models only");
    }
    PhaseTable t;
    for (auto a : without_vacuum(indices_of(model, condensed))) {
        t.rows.push_back(model.labels[a]);
    }
    for (auto b : without_vacuum(indices_of(model, boundary))) {
        t.cols.push_back(model.labels[b]);
    }
    t.values = ComplexMatrix(t.rows.size(), t.cols.size());
    for (std::size_t i = 0; i < t.rows.size(); i++) {
        for (std::size_t k = 0; k < t.cols.size(); k++) {
            std::size_t a = model.index_of(t.rows[i]);
            std::size_t b = model.index_of(t.cols[k]);
            t.values(i, k) = model.R(a, b, model.fuse(a, b));
        }
    }
    t.assembled = assemble_r_table(model, condensed, boundary, t.values);
    for (const auto &[key, value] : t.assembled) {
        std::size_t x = model.index_of(key.first);
        std::size_t y = model.index_of(key.second);
        t.max_deviation = std::max(t.max_deviation, std::abs(value - model.R(x, y, model.fuse(x, y))));
    }
    t.matches_model = t.max_deviation <= kTrivialTolerance;
    return t;
}

}  // namespace anyon

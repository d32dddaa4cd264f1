#include "anyon/lattice.h"

#include <utility>

#include "anyon/error.h"

namespace anyon {

namespace {

std::vector<std::size_t> qubits(std::initializer_list<std::size_t> one_based) {
    std::vector<std::size_t> out;
    for (auto q : one_based) {
        out.push_back(q - 1);
    }
    return out;
}

PauliOperator xs(std::size_t n, std::initializer_list<std::size_t> one_based) {
    auto q = qubits(one_based);
    return PauliOperator::x_string(n, q);
}

PauliOperator zs(std::size_t n, std::initializer_list<std::size_t> one_based) {
    auto q = qubits(one_based);
    return PauliOperator::z_string(n, q);
}

}  // namespace

const std::vector<std::size_t> &StabilizerCell::path(const std::string &path_name) const {
    auto it = paths.find(path_name);
    if (it == paths.end()) {
        std::string known;
        for (const auto &[k, v] : paths) {
            known += (known.empty() ? "" : ", ") + k;
        }
        fail(ErrorKind::invalid_argument,
             "cell '" + name + "' has no path '" + path_name + "' (known: " + (known.empty() ? "none" : known) + ")");
    }
    return it->second;
}

PauliOperator StabilizerCell::path_operator(const std::string &path_name) const {
    return PauliOperator::x_string(n, path(path_name));
}

Circuit StabilizerCell::path_circuit(const std::string &path_name) const {
    Circuit c(n);
    for (auto q : path(path_name)) {
        c.append(PauliGate{PauliOperator::single(n, q, 'X')});
    }
    return c;
}

std::size_t symplectic_rank(std::span<const PauliOperator> ops) {
    // Rows as (x, z) mask pairs; eliminate on x bits, then z bits.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
    for (const auto &p : ops) {
        rows.emplace_back(p.x_mask(), p.z_mask());
    }
    std::size_t rank = 0;
    for (int half = 0; half < 2; half++) {
        for (int bit = 0; bit < 64; bit++) {
            std::uint64_t m = std::uint64_t{1} << bit;
            auto sel = [&](const std::pair<std::uint64_t, std::uint64_t> &r) {
                return half == 0 ? r.first : r.second;
            };
            std::size_t pivot = rank;
            while (pivot < rows.size() && !(sel(rows[pivot]) & m)) {
                pivot++;
            }
            if (pivot == rows.size()) {
                continue;
            }
            std::swap(rows[rank], rows[pivot]);
            for (std::size_t r = 0; r < rows.size(); r++) {
                if (r != rank && (sel(rows[r]) & m)) {
                    rows[r].first ^= rows[rank].first;
                    rows[r].second ^= rows[rank].second;
                }
            }
            rank++;
        }
    }
    return rank;
}

void validate_cell(const StabilizerCell &cell) {
    const auto &s = cell.stabilizers;
    for (std::size_t i = 0; i < s.size(); i++) {
        for (std::size_t j = 0; j < i; j++) {
            if (!s[i].commutes_with(s[j])) {
                fail(ErrorKind::invalid_stabilizer_set,
                     cell.name + ": " + s[j].str() + " and " + s[i].str() + " anticommute");
            }
        }
    }
    if (symplectic_rank(s) != s.size()) {
        fail(ErrorKind::invalid_stabilizer_set, cell.name + ": stabilizers are not independent");
    }
    bool excites = false;
    for (const auto &g : s) {
        excites = excites || !g.commutes_with(cell.excitation);
    }
    if (!excites) {
        fail(ErrorKind::invalid_stabilizer_set, cell.name + ": excitation commutes with every stabilizer");
    }
}

StabilizerCell cell3() {
    StabilizerCell c;
    c.name = "cell3";
    c.n = 3;
    // q1 is the edge shared by the two lower white half-plaquettes.
    c.stabilizers = {xs(3, {1, 2}), xs(3, {1, 3}), zs(3, {1, 2, 3})};
    c.excitation = zs(3, {1});
    c.paths["Path1"] = qubits({1, 2});
    c.paths["Path2"] = qubits({2, 3});
    c.fusion_ops["A1"] = PauliOperator::single(3, 2, 'X') * PauliOperator::single(3, 2, 'Z');
    c.fusion_ops["A2"] =
        PauliOperator::single(3, 1, 'Z') * PauliOperator::single(3, 2, 'X') * PauliOperator::single(3, 0, 'Z');
    return c;
}

StabilizerCell cell4() {
    StabilizerCell c;
    c.name = "cell4";
    c.n = 4;
    c.stabilizers = {xs(4, {1, 2}), xs(4, {2, 3}), xs(4, {3, 4}), zs(4, {1, 2, 3, 4})};
    c.excitation = zs(4, {2});
    c.paths["Path1"] = qubits({1, 2});
    c.paths["Path2"] = qubits({3, 4});
    return c;
}

StabilizerCell build_lattice(int rows, int cols, const LatticeBoundaries &boundaries) {
    if (rows < 2 || cols < 2) {
        fail(ErrorKind::invalid_argument, "lattice needs at least 2x2 qubits");
    }
    if (static_cast<long>(rows) * cols > static_cast<long>(kMaxStateQubits)) {
        fail(ErrorKind::resource_limit, std::to_string(rows) + "x" + std::to_string(cols) + " lattice exceeds " +
                                            std::to_string(kMaxStateQubits) + " qubits");
    }
    StabilizerCell c;
    c.name = "lattice" + std::to_string(rows) + "x" + std::to_string(cols);
    c.n = static_cast<std::size_t>(rows * cols);
    c.boundaries = boundaries;
    for (int r = 0; r < rows; r++) {
        for (int col = 0; col < cols; col++) {
            c.sites.push_back({r, col});
        }
    }
    auto qubit = [cols](int r, int col) {
        return static_cast<std::size_t>(r * cols + col);
    };
    auto kind_at = [](int r, int col) {
        return ((r + col) % 2 + 2) % 2 == 0 ? PlaquetteKind::white : PlaquetteKind::blue;
    };

    std::vector<Plaquette> faces;
    for (int r = 0; r + 1 < rows; r++) {
        for (int col = 0; col + 1 < cols; col++) {
            faces.push_back({kind_at(r, col), r, col, false,
                             {qubit(r, col), qubit(r, col + 1), qubit(r + 1, col), qubit(r + 1, col + 1)}});
        }
    }
    auto keep = [](Boundary b, PlaquetteKind k) {
        return (b == Boundary::smooth) == (k == PlaquetteKind::white);
    };
    for (int col = 0; col + 1 < cols; col++) {
        if (keep(boundaries[0], kind_at(-1, col))) {
            faces.push_back({kind_at(-1, col), -1, col, true, {qubit(0, col), qubit(0, col + 1)}});
        }
        if (keep(boundaries[1], kind_at(rows - 1, col))) {
            faces.push_back(
                {kind_at(rows - 1, col), rows - 1, col, true, {qubit(rows - 1, col), qubit(rows - 1, col + 1)}});
        }
    }
    for (int r = 0; r + 1 < rows; r++) {
        if (keep(boundaries[2], kind_at(r, -1))) {
            faces.push_back({kind_at(r, -1), r, -1, true, {qubit(r, 0), qubit(r + 1, 0)}});
        }
        if (keep(boundaries[3], kind_at(r, cols - 1))) {
            faces.push_back(
                {kind_at(r, cols - 1), r, cols - 1, true, {qubit(r, cols - 1), qubit(r + 1, cols - 1)}});
        }
    }

    for (auto &f : faces) {
        PauliOperator op = f.kind == PlaquetteKind::white ? PauliOperator::x_string(c.n, f.qubits)
                                                          : PauliOperator::z_string(c.n, f.qubits);
        c.stabilizers.push_back(op);
        if (symplectic_rank(c.stabilizers) != c.stabilizers.size()) {
            c.stabilizers.pop_back();
            continue;
        }
        c.plaquettes.push_back(std::move(f));
    }

    c.excitation = PauliOperator::identity(c.n);
    for (const auto &p : c.plaquettes) {
        if (p.kind == PlaquetteKind::white) {
            c.excitation = PauliOperator::single(c.n, p.qubits.front(), 'Z');
            break;
        }
    }
    return c;
}

PauliOperator string_operator(const StabilizerCell &cell, StringKind kind, std::span<const std::size_t> qubits) {
    for (auto q : qubits) {
        if (q >= cell.n) {
            fail(ErrorKind::invalid_argument,
                 "qubit " + std::to_string(q) + " is not in cell '" + cell.name + "'");
        }
    }
    return kind == StringKind::e ? PauliOperator::z_string(cell.n, qubits) : PauliOperator::x_string(cell.n, qubits);
}

}  // namespace anyon

#include "anyon/modular_data.h"

#include <cmath>
#include <sstream>

#include "anyon/error.h"

namespace anyon {

namespace {

constexpr double kSpinTolerance = 1e-10;

double perron_eigenvalue(const AnyonModel &m, std::size_t a) {
    // N_a has eigenvalue d_a with a positive eigenvector; shifting by the
    // identity breaks the periodicity of permutation-like blocks.
    std::size_t n = m.size();
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> w(n);
    double lambda = 0;
    for (int it = 0; it < kPowerIterationCap; it++) {
        for (std::size_t b = 0; b < n; b++) {
            double acc = v[b];
            for (std::size_t c = 0; c < n; c++) {
                acc += m.N(a, b, c) * v[c];
            }
            w[b] = acc;
        }
        double norm = 0;
        for (double x : w) {
            norm += x * x;
        }
        norm = std::sqrt(norm);
        double delta = 0;
        for (std::size_t b = 0; b < n; b++) {
            w[b] /= norm;
            delta = std::max(delta, std::abs(w[b] - v[b]));
        }
        v.swap(w);
        lambda = norm;
        if (delta < kPowerIterationTolerance) {
            return lambda - 1.0;
        }
    }
    fail(ErrorKind::numerical_failure,
         "power iteration for d_" + m.labels[a] + " did not converge in " + std::to_string(kPowerIterationCap) +
             " iterations");
}

}  // namespace

QuantumDimensions quantum_dimensions(const AnyonModel &model) {
    QuantumDimensions q;
    q.dims.assign(model.size(), 1.0);
    if (!model.is_abelian()) {
        for (std::size_t a = 1; a < model.size(); a++) {
            q.dims[a] = perron_eigenvalue(model, a);
        }
    }
    double sum = 0;
    for (double d : q.dims) {
        sum += d * d;
    }
    q.total = std::sqrt(sum);
    return q;
}

Complex topological_spin(const AnyonModel &model, std::size_t a) {
    std::size_t ad = model.dual_of(a);
    double d = quantum_dimensions(model).dims.at(a);
    return model.R(a, ad, 0) / (d * model.F(a, ad, a, a));
}

ComplexMatrix s_matrix(const AnyonModel &model) {
    auto q = quantum_dimensions(model);
    std::size_t n = model.size();
    ComplexMatrix s(n, n);
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = 0; b < n; b++) {
            Complex acc = 0;
            for (std::size_t c = 0; c < n; c++) {
                int mult = model.N(a, b, c);
                if (mult == 0) {
                    continue;
                }
                // Multiplicity-free: the trace of the 1x1 block times N.
                acc += static_cast<double>(mult) * model.R(b, a, c) * model.R(a, b, c) * q.dims[c];
            }
            s(a, b) = acc / q.total;
        }
    }
    return s;
}

ComplexMatrix s_matrix_from_spins(const AnyonModel &model) {
    auto q = quantum_dimensions(model);
    std::size_t n = model.size();
    std::vector<Complex> theta(n);
    for (std::size_t a = 0; a < n; a++) {
        theta[a] = topological_spin(model, a);
    }
    ComplexMatrix s(n, n);
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = 0; b < n; b++) {
            Complex acc = 0;
            for (std::size_t c = 0; c < n; c++) {
                if (model.N(a, b, c) != 0) {
                    acc += static_cast<double>(model.N(a, b, c)) * theta[a] * theta[b] / theta[c] * q.dims[c];
                }
            }
            s(a, b) = acc / q.total;
        }
    }
    return s;
}

ComplexMatrix t_matrix(const AnyonModel &model) {
    std::size_t n = model.size();
    ComplexMatrix t(n, n);
    for (std::size_t a = 0; a < n; a++) {
        t(a, a) = topological_spin(model, a);
    }
    return t;
}

Complex monodromy(const AnyonModel &model, std::size_t a, std::size_t b) {
    std::size_t c = model.fuse(a, b);
    Complex value = model.R(b, a, c) * model.R(a, b, c);
    Complex expected = topological_spin(model, a) * topological_spin(model, b) / topological_spin(model, c);
    if (std::abs(value - expected) > kSpinTolerance) {
        std::ostringstream ss;
        ss << "R_{" << model.labels[b] << model.labels[a] << "} R_{" << model.labels[a] << model.labels[b]
           << "} = " << value << " but theta ratio = " << expected;
        fail(ErrorKind::consistency_failure, ss.str());
    }
    return value;
}

VerlindeResult verlinde_check(const AnyonModel &model) {
    ComplexMatrix s = s_matrix(model);
    std::size_t n = model.size();
    VerlindeResult out;
    out.fusion.assign(n * n * n, 0);
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = 0; b < n; b++) {
            for (std::size_t c = 0; c < n; c++) {
                Complex acc = 0;
                for (std::size_t d = 0; d < n; d++) {
                    acc += s(a, d) * s(b, d) * std::conj(s(c, d)) / s(0, d);
                }
                double rounded = std::round(acc.real());
                double dev = std::abs(acc - Complex(rounded, 0));
                if (dev > out.max_deviation) {
                    out.max_deviation = dev;
                    out.worst = {a, b, c};
                }
                out.fusion[(a * n + b) * n + c] = static_cast<int>(rounded);
            }
        }
    }
    if (out.max_deviation > kVerlindeTolerance) {
        const auto &[a, b, c] = out.worst;
        std::ostringstream ss;
        ss << "Verlinde value for (" << model.labels[a] << "," << model.labels[b] << "," << model.labels[c]
           << ") is " << out.max_deviation << " away from an integer";
        fail(ErrorKind::consistency_failure, ss.str());
    }
    out.matches_model = out.fusion == model.fusion;
    return out;
}

ModularData modular_data(const AnyonModel &model) {
    ModularData md;
    md.dims = quantum_dimensions(model);
    for (std::size_t a = 0; a < model.size(); a++) {
        md.spins.push_back(topological_spin(model, a));
    }
    md.s = s_matrix(model);
    md.t = t_matrix(model);
    return md;
}

}  // namespace anyon
